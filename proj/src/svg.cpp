#include "cycdec/svg.hpp"

#include <array>
#include <cstdio>

namespace cycdec {

namespace {

// Fixed-point decimal with trailing zeros trimmed: byte-stable across
// platforms and locale-independent.
std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    std::string s(buf);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

const std::array<StrokeStyle, 12>& default_styles() {
    static const std::array<StrokeStyle, 12> styles = {{
        {"red", "8,4"},
        {"yellow", ""},
        {"blue", "2,4"},
        {"green", "12,4"},
        {"orange", "8,4,2,4"},
        {"purple", "2,8"},
        {"brown", "14,6"},
        {"teal", "6,2"},
        {"magenta", "10,2,2,2"},
        {"olive", "4,4"},
        {"navy", "16,4,4,4"},
        {"gray", "1,3"},
    }};
    return styles;
}

// Signed unit step of the walk edge a -> b; second component tells whether
// the step crosses the torus border.
struct Step {
    int di = 0;
    int dj = 0;
    bool wraps = false;
};

Step step_of(Vertex a, Vertex b, TorusDims d) {
    Step s;
    if (a.j == b.j) {
        s.di = (b.i - a.i + d.m) % d.m == 1 ? 1 : -1;
        s.wraps = (s.di == 1) ? (a.i == d.m - 1) : (a.i == 0);
    } else {
        s.dj = (b.j - a.j + d.n) % d.n == 1 ? 1 : -1;
        s.wraps = (s.dj == 1) ? (a.j == d.n - 1) : (a.j == 0);
    }
    return s;
}

} // namespace

std::string render_svg(const Decomposition& d, const RenderStyle& style) {
    const auto report = validate(d);
    if (!report.pass)
        throw RenderError("refusing to render: decomposition does not validate",
                          report);

    const double cell = style.cell_size;
    const double stub = 0.4 * cell;
    const double x0 = style.margin + stub;
    const double y0 = style.margin + stub;
    const double width = 2 * style.margin + 2 * stub + (d.dims.n - 1) * cell;
    const double height = 2 * style.margin + 2 * stub + (d.dims.m - 1) * cell;

    const auto px = [&](int j) { return x0 + j * cell; };
    const auto py = [&](int i) { return y0 + i * cell; };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) +
           "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(width) +
           " " + fmt(height) + "\">\n";

    const auto line = [&](double x1, double y1, double x2, double y2) {
        svg += "  <line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" +
               fmt(x2) + "\" y2=\"" + fmt(y2) + "\"/>\n";
    };

    for (size_t c = 0; c < d.classes.size(); ++c) {
        const std::string label = d.label(c);
        StrokeStyle stroke = default_styles()[c % default_styles().size()];
        if (const auto hit = style.palette.find(label);
            hit != style.palette.end())
            stroke = hit->second;

        svg += "<g id=\"class-" + std::to_string(c) + "\"";
        if (!label.empty()) svg += " data-label=\"" + xml_escape(label) + "\"";
        svg += " fill=\"none\" stroke=\"" + xml_escape(stroke.color) +
               "\" stroke-width=\"3\" stroke-dasharray=\"" +
               (stroke.dasharray.empty() ? std::string("none")
                                         : xml_escape(stroke.dasharray)) +
               "\">\n";

        const auto& vs = d.classes[c].verts;
        for (size_t t = 0; t < vs.size(); ++t) {
            const Vertex a = vs[t];
            const Vertex b = vs[(t + 1) % vs.size()];
            const Step s = step_of(a, b, d.dims);
            if (!s.wraps) {
                line(px(a.j), py(a.i), px(b.j), py(b.i));
            } else {
                // Half-edge stubs: out of a across the border, into b from
                // the opposite border.
                line(px(a.j), py(a.i), px(a.j) + s.dj * stub,
                     py(a.i) + s.di * stub);
                line(px(b.j) - s.dj * stub, py(b.i) - s.di * stub, px(b.j),
                     py(b.i));
            }
        }
        svg += "</g>\n";
    }

    svg += "<g id=\"vertices\" fill=\"white\" stroke=\"black\" "
           "stroke-width=\"1\">\n";
    for (int i = 0; i < d.dims.m; ++i)
        for (int j = 0; j < d.dims.n; ++j)
            svg += "  <circle cx=\"" + fmt(px(j)) + "\" cy=\"" + fmt(py(i)) +
                   "\" r=\"" + fmt(style.vertex_radius) + "\"/>\n";
    svg += "</g>\n</svg>\n";
    return svg;
}

} // namespace cycdec
