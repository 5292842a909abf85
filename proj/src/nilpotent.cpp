#include "nilharm/nilpotent.hpp"

#include <algorithm>
#include <numeric>

#include "nilharm/errors.hpp"

namespace nilharm {

int nilpotency_index(const RatMatrix& n) {
    if (n.rows() != n.cols()) throw Error("nilpotency index of a non-square matrix");
    if (n.is_zero()) return n.rows() == 0 ? 0 : 1;
    RatMatrix power = n;
    for (int k = 1; k <= n.rows(); ++k) {
        if (power.is_zero()) return k;
        power = power * n;
    }
    throw NotNilpotentError();
}

RatMatrix nilpotent_exp(const RatMatrix& n) {
    int idx = nilpotency_index(n);
    RatMatrix result = RatMatrix::identity(n.rows());
    RatMatrix term = RatMatrix::identity(n.rows());
    Rational fact = 1;
    for (int k = 1; k < idx; ++k) {
        term = term * n;
        fact *= k;
        result = result + term * (Rational(1) / fact);
    }
    return result;
}

PolyMatrix nilpotent_exp_sym(const RatMatrix& n) {
    int idx = nilpotency_index(n);
    int dim = n.rows();
    PolyMatrix result(dim, dim);
    RatMatrix term = RatMatrix::identity(dim);
    Rational fact = 1;
    for (int k = 0; k < idx; ++k) {
        if (k > 0) {
            term = term * n;
            fact *= k;
        }
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                if (term.at(i, j) == 0) continue;
                RatVec c(size_t(k) + 1, Rational(0));
                c[k] = term.at(i, j) / fact;
                result.at(i, j) = result.at(i, j) + RatPoly(std::move(c));
            }
    }
    return result;
}

namespace {

// Row space tracked in echelon form for exact independence tests.
class IncrementalSpan {
public:
    explicit IncrementalSpan(int dim) : dim_(dim) {}

    // Returns true and absorbs v if v is independent of the current span.
    bool add(RatVec v) {
        for (const auto& row : rows_) {
            int p = pivot_of(row);
            if (v[p] != 0) {
                Rational f = v[p] / row[p];
                for (int j = 0; j < dim_; ++j) v[j] -= f * row[j];
            }
        }
        int p = -1;
        for (int j = 0; j < dim_; ++j)
            if (v[j] != 0) {
                p = j;
                break;
            }
        if (p < 0) return false;
        rows_.push_back(std::move(v));
        std::sort(rows_.begin(), rows_.end(),
                  [](const RatVec& a, const RatVec& b) { return pivot_of(a) < pivot_of(b); });
        return true;
    }

private:
    static int pivot_of(const RatVec& r) {
        for (size_t j = 0; j < r.size(); ++j)
            if (r[j] != 0) return int(j);
        return int(r.size());
    }
    int dim_;
    std::vector<RatVec> rows_;
};

}  // namespace

JordanResult nilpotent_jordan(const RatMatrix& n) {
    int dim = n.rows();
    int idx = nilpotency_index(n);  // throws if not nilpotent

    // Kernel bases of N^1..N^idx, rref-canonical.
    std::vector<std::vector<RatVec>> kernels(idx + 1);
    RatMatrix power = RatMatrix::identity(dim);
    for (int k = 1; k <= idx; ++k) {
        power = power * n;
        kernels[k] = kernel_basis(power);
    }

    struct Chain {
        int height;
        std::vector<RatVec> vectors;  // vectors[d] = N^d top, d = 0..height-1
    };
    std::vector<Chain> chains;

    IncrementalSpan span(dim);
    for (int h = idx; h >= 1; --h) {
        // Descendants of taller chains land at height h and are independent
        // of ker N^{h-1}; absorb them first, then ker N^{h-1}.
        IncrementalSpan level(dim);
        for (const auto& ch : chains) level.add(ch.vectors[ch.height - h]);
        for (const auto& v : kernels[h - 1]) level.add(v);
        for (const auto& cand : kernels[h]) {
            RatVec c = cand;
            if (!level.add(c)) continue;
            Chain ch{h, {c}};
            for (int d = 1; d < h; ++d) ch.vectors.push_back(n.apply(ch.vectors.back()));
            chains.push_back(std::move(ch));
        }
    }

    std::stable_sort(chains.begin(), chains.end(),
                     [](const Chain& a, const Chain& b) { return a.height > b.height; });

    JordanResult out;
    out.p = RatMatrix(dim, dim);
    int col = 0;
    for (const auto& ch : chains) {
        out.block_sizes.push_back(ch.height);
        // Column order N^{h-1}v, ..., Nv, v gives superdiagonal blocks.
        for (int d = ch.height - 1; d >= 0; --d, ++col)
            for (int i = 0; i < dim; ++i) out.p.at(i, col) = ch.vectors[d][i];
    }
    if (col != dim) throw Error("jordan chain construction did not fill the space");
    out.p_inv = inverse(out.p);
    out.j = out.p_inv * n * out.p;
    return out;
}

}  // namespace nilharm
