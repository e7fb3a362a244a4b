#include "cycdec/textio.hpp"

#include <cctype>
#include <sstream>

namespace cycdec {

std::string serialize(const Decomposition& d) {
    Decomposition c = canonicalize(d);
    std::ostringstream os;
    os << "torus " << c.dims.m << " " << c.dims.n << "\n";
    os << "cycles " << c.classes.size() << "\n";
    for (size_t k = 0; k < c.classes.size(); ++k) {
        os << "cycle " << k << " " << c.classes[k].length();
        if (!c.label(k).empty()) os << " " << c.label(k);
        os << ":";
        for (const Vertex& v : c.classes[k].verts) os << " " << to_string(v);
        os << "\n";
    }
    return os.str();
}

namespace {

struct Cursor {
    std::istringstream in;
    int line_no = 0;

    explicit Cursor(const std::string& text) : in(text) {}

    // Next significant line (skips blanks and '#' comments); false at EOF.
    bool next(std::string& out) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            size_t p = line.find_first_not_of(" \t\r");
            if (p == std::string::npos) continue;
            if (line[p] == '#') continue;
            out = line;
            return true;
        }
        return false;
    }
};

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool parse_int(const std::string& tok, int& out) {
    if (tok.empty()) return false;
    size_t p = 0;
    if (tok[0] == '-' || tok[0] == '+') p = 1;
    if (p == tok.size()) return false;
    long long acc = 0;
    for (; p < tok.size(); ++p) {
        if (!std::isdigit(static_cast<unsigned char>(tok[p]))) return false;
        acc = acc * 10 + (tok[p] - '0');
        if (acc > 1000000000LL) return false;
    }
    out = static_cast<int>(tok[0] == '-' ? -acc : acc);
    return true;
}

// "(i,j)" with optional sign, no interior spaces.
bool parse_vertex(const std::string& tok, int& i, int& j) {
    if (tok.size() < 5 || tok.front() != '(' || tok.back() != ')') return false;
    size_t comma = tok.find(',');
    if (comma == std::string::npos) return false;
    return parse_int(tok.substr(1, comma - 1), i) &&
           parse_int(tok.substr(comma + 1, tok.size() - comma - 2), j);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

} // namespace

Decomposition parse(const std::string& text) {
    Cursor cur(text);
    std::string line;

    if (!cur.next(line))
        throw ParseError("empty input: expected 'torus <m> <n>'", cur.line_no);
    auto head = split_ws(line);
    int m = 0, n = 0;
    if (head.size() != 3 || head[0] != "torus" || !parse_int(head[1], m) ||
        !parse_int(head[2], n))
        throw ParseError("expected 'torus <m> <n>', got '" + trim(line) + "'",
                         cur.line_no);
    TorusDims dims{m, n};
    require_dims(dims);

    if (!cur.next(line))
        throw ParseError("expected 'cycles <count>'", cur.line_no);
    auto chead = split_ws(line);
    int declared = 0;
    if (chead.size() != 2 || chead[0] != "cycles" || !parse_int(chead[1], declared) ||
        declared < 0)
        throw ParseError("expected 'cycles <count>', got '" + trim(line) + "'",
                         cur.line_no);

    Decomposition d;
    d.dims = dims;
    bool any_label = false;
    std::vector<std::string> labels;

    for (int k = 0; k < declared; ++k) {
        if (!cur.next(line))
            throw ParseError("expected " + std::to_string(declared) +
                                 " cycle lines, found " + std::to_string(k),
                             cur.line_no);
        size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("cycle line missing ':'", cur.line_no);
        auto head_toks = split_ws(line.substr(0, colon));
        if (head_toks.size() < 3 || head_toks.size() > 4 || head_toks[0] != "cycle")
            throw ParseError("expected 'cycle <index> <length> [<label>]:'",
                             cur.line_no);
        int idx = 0, len = 0;
        if (!parse_int(head_toks[1], idx) || !parse_int(head_toks[2], len))
            throw ParseError("bad cycle index or length", cur.line_no);
        if (idx != k)
            throw ParseError("cycle index " + std::to_string(idx) +
                                 " out of order (expected " + std::to_string(k) + ")",
                             cur.line_no, k);
        std::string label = head_toks.size() == 4 ? head_toks[3] : "";
        any_label = any_label || !label.empty();

        CycleWalk w;
        w.dims = dims;
        for (const std::string& tok : split_ws(line.substr(colon + 1))) {
            int vi = 0, vj = 0;
            if (!parse_vertex(tok, vi, vj))
                throw ParseError("bad vertex token '" + tok + "'", cur.line_no);
            w.verts.push_back(reduce(vi, vj, dims));
        }
        if (w.length() != len)
            throw ParseError("cycle " + std::to_string(k) + " declares length " +
                                 std::to_string(len) + " but lists " +
                                 std::to_string(w.length()) + " vertices",
                             cur.line_no, k);
        for (size_t p = 0; p < w.verts.size(); ++p) {
            Vertex a = w.verts[p];
            Vertex b = w.verts[(p + 1) % w.verts.size()];
            try {
                canonical_edge(a, b, dims);
            } catch (const NotAnEdge&) {
                throw ParseError("walk " + std::to_string(k) +
                                     ": non-adjacent step " + std::to_string(p) +
                                     ": " + to_string(a) + " -> " + to_string(b),
                                 cur.line_no, k);
            }
        }
        d.classes.push_back(std::move(w));
        labels.push_back(label);
    }

    if (cur.next(line))
        throw ParseError("unexpected content after last cycle: '" + trim(line) + "'",
                         cur.line_no);
    if (any_label) d.labels = std::move(labels);
    return d;
}

} // namespace cycdec
