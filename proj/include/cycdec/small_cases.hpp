#pragma once

#include "cycdec/decomposition.hpp"

namespace cycdec {

// C6 decompositions exist exactly for (3,3), (6,6) and {m,n} = {6,4N}.
//   (3,3): the three-cycle construction already yields three 6-cycles.
//   (6,6): the six horizontal and six vertical 6-cycles.
//   (6,4N): 2x3 bricks W(i,j) woven around the odd columns plus vertical
//           cycles V(2j) on the even columns (transposed for (4N,6)).
// Any other shape throws KnownImpossibleError citing the characterization.
Decomposition c6_decompose(TorusDims dims);

// For odd m <= n < 2m: n jogged vertical cycles C_n(j) (each drops 2(N-M)
// jogs through the top rows, then runs straight down column j) plus the
// 2m-n straight horizontal rows 2(N-M)..m-1, where m=2M+1, n=2N+1.
// Gives 2m classes of length n.  Throws PreconditionError naming the
// violated parity or inequality.
Decomposition odd_decompose(TorusDims dims);

} // namespace cycdec
