#pragma once

#include <vector>

#include "nilharm/matrix.hpp"
#include "nilharm/poly.hpp"

namespace nilharm {

// Smallest k with N^k = 0. Throws NotNilpotentError if no such k <= dim exists.
int nilpotency_index(const RatMatrix& n);

// Exact exp of a nilpotent matrix: sum_{k<index} N^k / k!.
RatMatrix nilpotent_exp(const RatMatrix& n);

// e^{sN} with s a formal parameter; entry degrees < nilpotency index.
PolyMatrix nilpotent_exp_sym(const RatMatrix& n);

struct JordanResult {
    std::vector<int> block_sizes;  // descending, sums to dim
    RatMatrix p;                   // change of basis: p^{-1} N p = j
    RatMatrix p_inv;
    RatMatrix j;                   // direct sum of elementary blocks J_{0,k} (superdiagonal 1s)
};

// Jordan form of a nilpotent matrix over Q via iterated kernels of powers.
// Chain tops are selected from the rref-canonical kernel bases in pivot order,
// so the output is deterministic.
JordanResult nilpotent_jordan(const RatMatrix& n);

}  // namespace nilharm
