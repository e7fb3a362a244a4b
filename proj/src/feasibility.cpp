#include "cycdec/feasibility.hpp"

#include <algorithm>

#include "cycdec/four_phase.hpp"
#include "cycdec/small_cases.hpp"
#include "cycdec/three_cycles.hpp"
#include "cycdec/wrapping.hpp"

namespace cycdec {

const char* method_name(Method m) {
    switch (m) {
    case Method::ThreeCycles: return "three-cycles";
    case Method::FourPhase: return "four-phase";
    case Method::Checkerboard: return "checkerboard";
    case Method::C6: return "c6";
    case Method::Odd: return "odd";
    }
    return "?";
}

const char* reason_name(Reason r) {
    switch (r) {
    case Reason::DivisibilityFail: return "divisibility";
    case Reason::WrappingFail: return "wrapping";
    case Reason::OddTooSmall: return "odd-too-small";
    case Reason::C6Characterization: return "c6-characterization";
    case Reason::CheckerboardParity: return "checkerboard-parity";
    }
    return "?";
}

std::string FeasibilityVerdict::to_string() const {
    std::string out;
    switch (kind) {
    case Kind::ConstructibleHere: out = "constructible"; break;
    case Kind::KnownImpossible: out = "impossible"; break;
    case Kind::NecessaryConditionsFail: out = "impossible"; break;
    case Kind::OpenUnknown: out = "unknown"; break;
    }
    if (method) out += std::string(" [") + method_name(*method) + "]";
    if (reason) out += std::string(" [") + reason_name(*reason) + "]";
    if (!detail.empty()) out += ": " + detail;
    return out;
}

namespace {

std::string dims_str(TorusDims d) {
    return std::to_string(d.m) + "x" + std::to_string(d.n);
}

bool c6_shape(TorusDims d) {
    if (d.m == 3 && d.n == 3) return true;
    if (d.m == 6 && d.n == 6) return true;
    if (d.m == 6 && d.n % 4 == 0) return true;
    if (d.n == 6 && d.m % 4 == 0) return true;
    return false;
}

FeasibilityVerdict constructible(Method method, std::string detail) {
    FeasibilityVerdict v;
    v.kind = FeasibilityVerdict::Kind::ConstructibleHere;
    v.method = method;
    v.detail = std::move(detail);
    return v;
}

FeasibilityVerdict negative(FeasibilityVerdict::Kind kind, Reason reason,
                            std::string detail) {
    FeasibilityVerdict v;
    v.kind = kind;
    v.reason = reason;
    v.detail = std::move(detail);
    return v;
}

} // namespace

FeasibilityVerdict feasibility(long long k, TorusDims dims) {
    require_dims(dims);
    const long long m = dims.m, n = dims.n;
    const long long edges = 2 * m * n;
    using Kind = FeasibilityVerdict::Kind;

    // Complete characterizations for k = 4 and k = 6 decide those lengths
    // outright, ahead of the generic counting tests.
    if (k == 4) {
        if (m % 2 == 0 && n % 2 == 0) {
            return constructible(Method::Checkerboard,
                                 "both sides even: checkerboard of unit squares");
        }
        return negative(Kind::KnownImpossible, Reason::CheckerboardParity,
                        "4-cycle decompositions need both sides even");
    }
    if (k == 6) {
        if (c6_shape(dims)) {
            return constructible(Method::C6, "6-cycle family shape " +
                                                 dims_str(dims));
        }
        return negative(Kind::KnownImpossible, Reason::C6Characterization,
                        "6-cycle decompositions exist only for 3x3, 6x6 "
                        "and {6,4N} shapes");
    }

    if (k < 3 || k > m * n || edges % k != 0) {
        return negative(Kind::NecessaryConditionsFail, Reason::DivisibilityFail,
                        "need 3 <= k <= mn and k | 2mn; k=" + std::to_string(k) +
                            ", mn=" + std::to_string(m * n) +
                            ", 2mn=" + std::to_string(edges));
    }
    if (k % 2 == 1 && m > k && n > k) {
        return negative(Kind::KnownImpossible, Reason::OddTooSmall,
                        "an odd cycle must wrap, impossible with both sides "
                        "longer than k");
    }
    if (!wrapping_feasible(k, dims.m, dims.n)) {
        return negative(Kind::NecessaryConditionsFail, Reason::WrappingFail,
                        "no nonnegative v,h,l solve k = nh + mv + 2l");
    }

    if ((m * n) % 3 == 0 && 3 * k == edges) {
        return constructible(Method::ThreeCycles,
                             "k = 2mn/3: three equal cycles");
    }
    if (m % 4 == 0 && n % 4 == 0 && k % 4 == 0 &&
        !factor_splits(static_cast<int>(k / 4), dims.m / 4, dims.n / 4)
             .empty()) {
        return constructible(Method::FourPhase,
                             "all of m, n, k divisible by 4 with (k/4) | "
                             "4(m/4)(n/4)");
    }
    if (m % 2 == 1 && n % 2 == 1 && k == std::max(m, n) &&
        std::max(m, n) < 2 * std::min(m, n)) {
        return constructible(Method::Odd,
                             "k = max(m,n) with both sides odd and max < 2*min");
    }

    FeasibilityVerdict v;
    v.kind = Kind::OpenUnknown;
    v.detail = "no implemented construction or impossibility result applies";
    return v;
}

Decomposition run_method(Method method, TorusDims dims, long long k) {
    require_dims(dims);
    switch (method) {
    case Method::ThreeCycles:
        if (3 * k != 2LL * dims.m * dims.n) {
            throw PreconditionError("three-cycles builds k = 2mn/3, not k=" +
                                    std::to_string(k));
        }
        return decompose_three_cycles(dims);
    case Method::FourPhase: {
        if (dims.m % 4 != 0 || dims.n % 4 != 0 || k % 4 != 0) {
            throw PreconditionError(
                "four-phase needs 4 | m, 4 | n and 4 | k, got " +
                dims_str(dims) + ", k=" + std::to_string(k));
        }
        return decompose_4k(dims.m / 4, dims.n / 4, static_cast<int>(k / 4));
    }
    case Method::Checkerboard:
        if (k != 4) {
            throw PreconditionError("checkerboard builds 4-cycles, not k=" +
                                    std::to_string(k));
        }
        return checkerboard(dims);
    case Method::C6:
        if (k != 6) {
            throw PreconditionError("c6 builds 6-cycles, not k=" +
                                    std::to_string(k));
        }
        return c6_decompose(dims);
    case Method::Odd: {
        if (k != std::max(dims.m, dims.n)) {
            throw PreconditionError("odd builds k = max(m,n), not k=" +
                                    std::to_string(k));
        }
        if (dims.m > dims.n) return transpose(odd_decompose(TorusDims{dims.n, dims.m}));
        return odd_decompose(dims);
    }
    }
    throw PreconditionError("unknown method");
}

} // namespace cycdec
