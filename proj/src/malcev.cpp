#include "nilharm/malcev.hpp"

#include "nilharm/errors.hpp"

namespace nilharm {

namespace {

void verify_prefix_ideals(const LieAlgebra& g, const RatMatrix& c) {
    int n = g.n;
    for (int k = 1; k <= n; ++k) {
        std::vector<RatVec> pref;
        for (int j = 0; j < k; ++j) {
            RatVec v(n);
            for (int t = 0; t < n; ++t) v[t] = c.at(t, j);
            pref.push_back(std::move(v));
        }
        Subspace s = Subspace::span(n, pref);
        if (s.dim() != k) throw NotAnIdealChainError("candidate basis is not linearly independent");
        for (int i = 0; i < n; ++i) {
            RatVec ei(n, Rational(0));
            ei[i] = 1;
            for (const auto& v : pref)
                if (!s.contains(g.bracket(ei, v)))
                    throw NotAnIdealChainError("prefix of length " + std::to_string(k) + " is not an ideal");
        }
    }
}

}  // namespace

MalcevBasis malcev_from_columns(const LieAlgebra& g, const RatMatrix& c) {
    verify_prefix_ideals(g, c);
    MalcevBasis mb;
    mb.input = g;
    mb.c = c;
    mb.c_inv = inverse(c);
    mb.adapted = change_basis(g, c);
    Subspace d_adapted = derived_subalgebra(mb.adapted);
    mb.p = d_adapted.dim();
    // [g,g] must be exactly the first p coordinates in the new basis.
    for (int k = 0; k < d_adapted.dim(); ++k)
        for (int t = mb.p; t < g.n; ++t)
            if (d_adapted.basis().at(k, t) != 0)
                throw NotAnIdealChainError("basis does not pass through [g,g]");
    int md = g.n - 1;
    mb.nmat = RatMatrix(md, md);
    for (int j = 0; j < md; ++j) {
        RatVec col = mb.adapted.bracket_basis(g.n - 1, j);
        if (col[g.n - 1] != 0) throw NotAnIdealChainError("m is not an ideal");
        for (int i = 0; i < md; ++i) mb.nmat.at(i, j) = col[i];
    }
    mb.amat = nilpotent_exp(mb.nmat);
    return mb;
}

MalcevBasis build_malcev_basis(const LieAlgebra& g, const Subspace& m) {
    int n = g.n;
    if (m.ambient() != n || m.dim() != n - 1)
        throw NotAnIdealChainError("m must have codimension one");
    Subspace d = derived_subalgebra(g);
    if (!m.contains(d)) throw NotAnIdealChainError("m does not contain [g,g]");
    for (int a = 0; a < m.dim(); ++a)
        for (int b = a + 1; b < m.dim(); ++b)
            if (!vec_is_zero(g.bracket(m.basis_vector(a), m.basis_vector(b))))
                throw NotAnIdealChainError("m is not abelian");

    std::vector<bool> used(n, false);
    for (int p : m.pivots()) used[p] = true;
    int xi = 0;
    while (xi < n && used[xi]) ++xi;
    RatVec x(n, Rational(0));
    x[xi] = 1;

    int md = n - 1;
    RatMatrix adx(md, md);
    for (int j = 0; j < md; ++j) {
        RatVec img = g.bracket(x, m.basis_vector(j));
        if (!m.contains(img)) throw NotAnIdealChainError("m is not an ideal");
        for (int i = 0; i < md; ++i) adx.at(i, j) = img[m.pivots()[i]];
    }
    JordanResult jr = nilpotent_jordan(adx);

    // Chain columns per block are (N^{h-1}v, ..., v); the non-top columns span
    // [g,g]. Order: all non-top columns block by block, then the tops and the
    // size-one blocks, then X.
    auto lift = [&](int col) {
        RatVec v(n, Rational(0));
        for (int i = 0; i < md; ++i)
            for (int t = 0; t < n; ++t) v[t] += jr.p.at(i, col) * m.basis().at(i, t);
        return v;
    };
    std::vector<RatVec> order;
    int col = 0;
    std::vector<int> tops;
    for (int bs : jr.block_sizes) {
        for (int dpos = 0; dpos < bs - 1; ++dpos) order.push_back(lift(col + dpos));
        tops.push_back(col + bs - 1);
        col += bs;
    }
    for (int t : tops) order.push_back(lift(t));
    order.push_back(x);

    RatMatrix c(n, n);
    for (int j = 0; j < n; ++j)
        for (int t = 0; t < n; ++t) c.at(t, j) = order[j][t];
    return malcev_from_columns(g, c);
}

void validate_strongly_based(const MalcevBasis& mb) {
    for (int i = 0; i < mb.amat.rows(); ++i)
        for (int j = 0; j < mb.amat.cols(); ++j)
            if (!is_integer(mb.amat.at(i, j)))
                throw IntegralityFailureError(i + 1, j + 1, rat_str(mb.amat.at(i, j)), "e^{ad X_n}|_m");
    for (const auto& [ij, v] : mb.adapted.table)
        for (int k = 0; k < mb.adapted.n; ++k)
            if (!is_integer(v[k]))
                throw IntegralityFailureError(ij.first + 1, ij.second + 1, rat_str(v[k]),
                                              "structure constants");
}

bool is_strongly_based(const MalcevBasis& mb) {
    try {
        validate_strongly_based(mb);
        return true;
    } catch (const IntegralityFailureError&) {
        return false;
    }
}

std::vector<Int> rescale_factors(const MalcevBasis& mb) {
    int md = mb.input.n - 1;
    std::vector<Int> d(md, 1);
    auto require = [&](int j, int i, const Rational& v) {
        // Need d_j * v * (1/d_i) integral: (d_i*den)/gcd(num, d_i*den) divides d_j.
        if (v == 0) return;
        Int dd = d[i] * v.get_den();
        Int gg;
        mpz_gcd(gg.get_mpz_t(), v.get_num_mpz_t(), dd.get_mpz_t());
        Int need = dd / gg;
        mpz_lcm(d[j].get_mpz_t(), d[j].get_mpz_t(), need.get_mpz_t());
    };
    for (int j = 0; j < md; ++j)
        for (int i = 0; i < j; ++i) {
            require(j, i, mb.nmat.at(i, j));
            require(j, i, mb.amat.at(i, j));
        }
    return d;
}

MalcevBasis rescale_to_integral(const MalcevBasis& mb) {
    std::vector<Int> d = rescale_factors(mb);
    int n = mb.input.n;
    RatMatrix c = mb.c;
    for (int j = 0; j + 1 < n; ++j)
        for (int t = 0; t < n; ++t) c.at(t, j) *= Rational(d[j]);
    return malcev_from_columns(mb.input, c);
}

RatMatrix NilSetting::exp_tn(const Rational& t) const {
    RatMatrix r(mdim(), mdim());
    Rational fact = 1, tp = 1;
    for (int k = 0; k < nil_index; ++k) {
        if (k > 0) {
            fact *= k;
            tp *= t;
        }
        r = r + npow[k] * (tp / fact);
    }
    return r;
}

NilSetting make_setting(const MalcevBasis& mb) {
    NilSetting s;
    s.n = mb.input.n;
    s.p = mb.p;
    s.nmat = mb.nmat;
    s.amat = mb.amat;
    s.amat_inv = inverse(mb.amat);
    s.nil_index = nilpotency_index(mb.nmat);
    RatMatrix neg = mb.nmat * Rational(-1);
    s.exp_sym_neg = nilpotent_exp_sym(neg);
    s.npow.push_back(RatMatrix::identity(s.mdim()));
    for (int k = 1; k <= s.nil_index; ++k) s.npow.push_back(s.npow.back() * mb.nmat);
    s.integral = is_strongly_based(mb);
    return s;
}

}  // namespace nilharm
