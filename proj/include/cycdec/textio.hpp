#pragma once

#include <string>

#include "cycdec/decomposition.hpp"

// Plain-text decomposition format (UTF-8, LF line endings):
//
//   torus <m> <n>
//   cycles <count>
//   cycle <index> <length> [<label>]: (i,j) (i,j) ... (i,j)
//
// One cycle line per class: <length> vertices of a closed walk, closure
// implicit (the first vertex is not repeated).  Lines starting with '#'
// and blank lines are accepted by parse and never emitted by serialize.
// serialize output is canonical and bit-exact: classes sorted by smallest
// canonical edge, each walk rotated/oriented canonically.

namespace cycdec {

struct ParseError : std::runtime_error {
    int line = 0;       // 1-based line number, 0 when not line-specific
    int walk_index = -1; // class index for semantic errors, -1 otherwise

    ParseError(std::string msg, int line_, int walk = -1)
        : std::runtime_error(std::move(msg)), line(line_), walk_index(walk) {}
};

std::string serialize(const Decomposition& d);

// Throws ParseError (syntax: bad header/token/count, with line number;
// semantic: non-adjacent consecutive vertices, with walk index) and
// InvalidDims for a header with a side below 3.
Decomposition parse(const std::string& text);

} // namespace cycdec
