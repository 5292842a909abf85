#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilharm/matrix.hpp"

namespace nilharm {

// Subspace of Q^n stored with an rref-canonical row basis, so equal subspaces
// compare equal componentwise.
class Subspace {
public:
    Subspace() : ambient_(0) {}
    static Subspace span(int ambient, const std::vector<RatVec>& vectors);
    static Subspace zero(int ambient) { return span(ambient, {}); }
    static Subspace full(int ambient);

    int ambient() const { return ambient_; }
    int dim() const { return rows_.rows(); }
    const RatMatrix& basis() const { return rows_; }
    RatVec basis_vector(int k) const;
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const RatVec& v) const;
    bool contains(const Subspace& s) const;
    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && rows_ == o.rows_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    RatMatrix rows_;
    std::vector<int> pivots_;
    int ambient_;
};

// Linear functional in the dual basis. When restricted_to_m is set the
// coordinate on the transverse direction X_n is absent and coords has
// length n-1.
struct DualFunctional {
    RatVec coords;
    bool restricted_to_m = false;

    bool is_integral() const { return vec_is_integral(coords); }
};

// Bracket data for one pair, 1-based indices with i > j as in the JSON schema.
struct BracketSpec {
    int i, j;
    std::vector<std::pair<int, Rational>> coeffs;  // (k, c): [X_i, X_j] += c X_k
};

// Rational nilpotent Lie algebra given by structure constants. Storage keeps
// only pairs i > j (0-based); antisymmetry is implicit.
class LieAlgebra {
public:
    int n = 0;
    std::vector<std::string> names;
    std::map<std::pair<int, int>, RatVec> table;

    RatVec bracket_basis(int i, int j) const;  // [e_i, e_j], any order
    RatVec bracket(const RatVec& a, const RatVec& b) const;
    RatMatrix ad(const RatVec& a) const;  // column j = [a, e_j]
    bool is_abelian() const { return table.empty(); }
};

// Validates Jacobi and nilpotency; throws JacobiViolationError / NotNilpotentError.
LieAlgebra build_algebra(int n, std::vector<std::string> names, const std::vector<BracketSpec>& brackets);

// Rebuilds the algebra in the basis given by the columns of c (new_k = sum_i c(i,k) e_i).
LieAlgebra change_basis(const LieAlgebra& g, const RatMatrix& c);

Subspace derived_subalgebra(const LieAlgebra& g);
Subspace center(const LieAlgebra& g);
Subspace centralizer(const LieAlgebra& g, const Subspace& s);

// B_l(X,Y) = <l,[X,Y]> as an exact antisymmetric Gram matrix.
RatMatrix bl_form(const LieAlgebra& g, const RatVec& l);
// Radical of B_l.
Subspace stabilizer(const LieAlgebra& g, const RatVec& l);

// One-parameter metabelian test: true iff l does not vanish on [g,g].
bool is_generic(const LieAlgebra& g, const RatVec& l);

// Deterministic search for an integer functional with l|[g,g] != 0, by
// increasing max-norm and lexicographic order within a shell.
RatVec first_functional_off_derived(const LieAlgebra& g);

// Proof-following construction: rational generic l, its stabilizer, then a
// centralizing completion. Returns the ideal or nullopt when none exists;
// throws AbelianInputError on abelian input.
std::optional<Subspace> find_codim1_abelian_ideal(const LieAlgebra& g);

bool is_one_parameter_metabelian(const LieAlgebra& g);

// Common polarization (the codimension-one abelian ideal) for generic l,
// with the dimension identity dim b(l) = (dim g + dim g(l))/2 verified.
Subspace polarization(const LieAlgebra& g, const RatVec& l);

struct CanonicalDecomposition {
    RatVec generator;                       // X
    std::vector<int> block_sizes;           // n_1 >= ... >= n_p, all >= 2
    std::vector<std::vector<RatVec>> blocks;  // block b: (e_1..e_{n_b}) with [X,e_i] = e_{i-1}
    std::vector<RatVec> central;            // basis of a, a subset of z(g)
};

// g = R X + sum of generic filiform blocks + central complement; throws
// NotMetabelianError when no codimension-one abelian ideal exists.
CanonicalDecomposition canonical_decomposition(const LieAlgebra& g);

// False exactly for the H3 x R^k family (single block of size 2).
bool unique_codim1_abelian_ideal(const LieAlgebra& g);

}  // namespace nilharm
