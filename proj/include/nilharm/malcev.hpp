#pragma once

#include <vector>

#include "nilharm/lie_algebra.hpp"
#include "nilharm/nilpotent.hpp"
#include "nilharm/poly.hpp"

namespace nilharm {

// Strong Malcev basis through [g,g] and m. Columns of c are the basis vectors
// in input coordinates; the first p span [g,g], the first n-1 span m, and
// every prefix is an ideal (checked on construction).
struct MalcevBasis {
    LieAlgebra input;
    RatMatrix c, c_inv;
    int p = 0;
    LieAlgebra adapted;  // structure constants in the Malcev basis
    RatMatrix nmat;      // N = ad X_n|_m, strictly upper triangular
    RatMatrix amat;      // e^N
};

// Orders a Jordan chain basis of ad X_n|_m so the prefixes run through [g,g]
// and m; throws NotAnIdealChainError when m is not an abelian ideal of
// codimension one containing [g,g].
MalcevBasis build_malcev_basis(const LieAlgebra& g, const Subspace& m);

// Rebuilds the structure for explicitly given basis columns (prefix ideals
// re-verified). Used by the rescaling path.
MalcevBasis malcev_from_columns(const LieAlgebra& g, const RatMatrix& c);

// ok iff e^{ad X_n}|_m and all structure constants are integral in this basis;
// then exp(Z X_1)...exp(Z X_n) is closed under the group law.
void validate_strongly_based(const MalcevBasis& mb);
bool is_strongly_based(const MalcevBasis& mb);

// Positive integer factors (d_1..d_{n-1}), minimal in the divisibility order
// among diagonal rescalings of the m-part, making validation pass.
std::vector<Int> rescale_factors(const MalcevBasis& mb);
MalcevBasis rescale_to_integral(const MalcevBasis& mb);

// Coordinate bundle for the group/spectrum/intertwiner layers: everything is
// expressed in the Malcev basis, so only n, p and N are needed.
struct NilSetting {
    int n = 0, p = 0;
    RatMatrix nmat;
    RatMatrix amat, amat_inv;        // e^{N}, e^{-N}
    PolyMatrix exp_sym_neg;          // e^{-sN}
    std::vector<RatMatrix> npow;     // N^0 .. N^{index}
    int nil_index = 0;
    bool integral = false;           // strongly based

    int mdim() const { return n - 1; }
    RatMatrix exp_tn(const Rational& t) const;  // e^{tN}
};

NilSetting make_setting(const MalcevBasis& mb);

}  // namespace nilharm
