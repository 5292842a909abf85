#include "nilharm/lie_algebra.hpp"

#include <algorithm>

#include "nilharm/errors.hpp"
#include "nilharm/nilpotent.hpp"

namespace nilharm {

Subspace Subspace::span(int ambient, const std::vector<RatVec>& vectors) {
    Subspace s;
    s.ambient_ = ambient;
    if (vectors.empty()) {
        s.rows_ = RatMatrix(0, ambient);
        return s;
    }
    RrefResult rr = rref(from_rows(vectors, ambient));
    s.rows_ = RatMatrix(rr.rank, ambient);
    for (int i = 0; i < rr.rank; ++i)
        for (int j = 0; j < ambient; ++j) s.rows_.at(i, j) = rr.reduced.at(i, j);
    s.pivots_ = rr.pivot_cols;
    return s;
}

Subspace Subspace::full(int ambient) {
    std::vector<RatVec> rows;
    for (int i = 0; i < ambient; ++i) {
        RatVec v(ambient, Rational(0));
        v[i] = 1;
        rows.push_back(std::move(v));
    }
    return span(ambient, rows);
}

RatVec Subspace::basis_vector(int k) const {
    RatVec v(ambient_);
    for (int j = 0; j < ambient_; ++j) v[j] = rows_.at(k, j);
    return v;
}

bool Subspace::contains(const RatVec& v) const {
    RatVec r = v;
    for (int i = 0; i < dim(); ++i) {
        const Rational& c = r[pivots_[i]];
        if (c == 0) continue;
        Rational f = c;  // pivot entries are 1
        for (int j = 0; j < ambient_; ++j) r[j] -= f * rows_.at(i, j);
    }
    return vec_is_zero(r);
}

bool Subspace::contains(const Subspace& s) const {
    for (int k = 0; k < s.dim(); ++k)
        if (!contains(s.basis_vector(k))) return false;
    return true;
}

RatVec LieAlgebra::bracket_basis(int i, int j) const {
    if (i == j) return RatVec(n, Rational(0));
    bool flip = i < j;
    auto it = table.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == table.end()) return RatVec(n, Rational(0));
    RatVec v = it->second;
    if (flip)
        for (auto& c : v) c = -c;
    return v;
}

RatVec LieAlgebra::bracket(const RatVec& a, const RatVec& b) const {
    RatVec out(n, Rational(0));
    for (const auto& [ij, coeffs] : table) {
        Rational f = a[ij.first] * b[ij.second] - a[ij.second] * b[ij.first];
        if (f == 0) continue;
        for (int k = 0; k < n; ++k) out[k] += f * coeffs[k];
    }
    return out;
}

RatMatrix LieAlgebra::ad(const RatVec& a) const {
    RatMatrix m(n, n);
    for (int j = 0; j < n; ++j) {
        RatVec ej(n, Rational(0));
        ej[j] = 1;
        RatVec col = bracket(a, ej);
        for (int i = 0; i < n; ++i) m.at(i, j) = col[i];
    }
    return m;
}

namespace {

void check_nilpotent(const LieAlgebra& g) {
    // Lower central series must strictly descend to zero.
    Subspace layer = Subspace::full(g.n);
    while (layer.dim() > 0) {
        std::vector<RatVec> next;
        for (int i = 0; i < g.n; ++i) {
            RatVec ei(g.n, Rational(0));
            ei[i] = 1;
            for (int k = 0; k < layer.dim(); ++k) next.push_back(g.bracket(ei, layer.basis_vector(k)));
        }
        Subspace down = Subspace::span(g.n, next);
        if (down.dim() == layer.dim()) throw NotNilpotentError("lower central series does not terminate");
        layer = down;
    }
}

}  // namespace

LieAlgebra build_algebra(int n, std::vector<std::string> names, const std::vector<BracketSpec>& brackets) {
    if (n < 1) throw Error("algebra dimension must be >= 1");
    LieAlgebra g;
    g.n = n;
    if (names.empty())
        for (int i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
    if (int(names.size()) != n) throw Error("basis label count does not match dimension");
    g.names = std::move(names);
    for (const auto& b : brackets) {
        if (b.i < 1 || b.i > n || b.j < 1 || b.j > n || b.i <= b.j)
            throw ParseError("bracket indices must satisfy 1 <= j < i <= n");
        RatVec v(n, Rational(0));
        for (const auto& [k, c] : b.coeffs) {
            if (k < 1 || k > n) throw ParseError("bracket coefficient index out of range");
            v[k - 1] += c;
        }
        if (vec_is_zero(v)) continue;
        auto key = std::make_pair(b.i - 1, b.j - 1);
        if (g.table.count(key)) throw ParseError("duplicate bracket entry");
        g.table[key] = std::move(v);
    }

    // Jacobi over all basis triples, with the defect vector reported.
    for (int i = 2; i < n; ++i)
        for (int j = 1; j < i; ++j)
            for (int k = 0; k < j; ++k) {
                RatVec ei(n, Rational(0)), ej(n, Rational(0)), ek(n, Rational(0));
                ei[i] = 1;
                ej[j] = 1;
                ek[k] = 1;
                RatVec d1 = g.bracket(g.bracket_basis(i, j), ek);
                RatVec d2 = g.bracket(g.bracket_basis(j, k), ei);
                RatVec d3 = g.bracket(g.bracket_basis(k, i), ej);
                RatVec defect(n, Rational(0));
                for (int t = 0; t < n; ++t) defect[t] = d1[t] + d2[t] + d3[t];
                if (!vec_is_zero(defect)) throw JacobiViolationError(i, j, k, vec_str(defect));
            }

    check_nilpotent(g);
    return g;
}

LieAlgebra change_basis(const LieAlgebra& g, const RatMatrix& c) {
    RatMatrix cinv = inverse(c);
    LieAlgebra h;
    h.n = g.n;
    for (int i = 1; i <= g.n; ++i) h.names.push_back("Y" + std::to_string(i));
    for (int i = 1; i < g.n; ++i)
        for (int j = 0; j < i; ++j) {
            RatVec yi(g.n), yj(g.n);
            for (int t = 0; t < g.n; ++t) {
                yi[t] = c.at(t, i);
                yj[t] = c.at(t, j);
            }
            RatVec br = cinv.apply(g.bracket(yi, yj));
            if (!vec_is_zero(br)) h.table[{i, j}] = br;
        }
    return h;
}

Subspace derived_subalgebra(const LieAlgebra& g) {
    std::vector<RatVec> gens;
    for (const auto& [ij, v] : g.table) {
        (void)ij;
        gens.push_back(v);
    }
    return Subspace::span(g.n, gens);
}

namespace {

// Kernel of v -> ([v, w_1], ..., [v, w_k]) for the given test vectors.
Subspace joint_bracket_kernel(const LieAlgebra& g, const std::vector<RatVec>& tests) {
    RatMatrix stacked(int(tests.size()) * g.n, g.n);
    for (size_t t = 0; t < tests.size(); ++t)
        for (int i = 0; i < g.n; ++i) {
            RatVec ei(g.n, Rational(0));
            ei[i] = 1;
            RatVec col = g.bracket(ei, tests[t]);
            for (int r = 0; r < g.n; ++r) stacked.at(int(t) * g.n + r, i) = col[r];
        }
    return Subspace::span(g.n, kernel_basis(stacked));
}

}  // namespace

Subspace center(const LieAlgebra& g) {
    std::vector<RatVec> tests;
    for (int j = 0; j < g.n; ++j) {
        RatVec ej(g.n, Rational(0));
        ej[j] = 1;
        tests.push_back(std::move(ej));
    }
    return joint_bracket_kernel(g, tests);
}

Subspace centralizer(const LieAlgebra& g, const Subspace& s) {
    std::vector<RatVec> tests;
    for (int k = 0; k < s.dim(); ++k) tests.push_back(s.basis_vector(k));
    if (tests.empty()) return Subspace::full(g.n);
    return joint_bracket_kernel(g, tests);
}

RatMatrix bl_form(const LieAlgebra& g, const RatVec& l) {
    RatMatrix b(g.n, g.n);
    for (const auto& [ij, v] : g.table) {
        Rational val = dot(l, v);
        if (val == 0) continue;
        b.at(ij.first, ij.second) = val;
        b.at(ij.second, ij.first) = -val;
    }
    return b;
}

Subspace stabilizer(const LieAlgebra& g, const RatVec& l) {
    return Subspace::span(g.n, kernel_basis(bl_form(g, l)));
}

bool is_generic(const LieAlgebra& g, const RatVec& l) {
    Subspace d = derived_subalgebra(g);
    for (int k = 0; k < d.dim(); ++k)
        if (dot(l, d.basis_vector(k)) != 0) return true;
    return false;
}

RatVec first_functional_off_derived(const LieAlgebra& g) {
    Subspace d = derived_subalgebra(g);
    if (d.dim() == 0) throw AbelianInputError();
    for (long h = 1;; ++h) {
        RatVec l(g.n, Rational(-h));
        auto advance = [&]() -> bool {
            for (int i = g.n - 1; i >= 0; --i) {
                if (l[i] < h) {
                    l[i] += 1;
                    for (int j = i + 1; j < g.n; ++j) l[j] = Rational(-h);
                    return true;
                }
            }
            return false;
        };
        while (true) {
            bool on_shell = false;
            for (const auto& c : l)
                if (c == h || c == -h) {
                    on_shell = true;
                    break;
                }
            if (on_shell)
                for (int k = 0; k < d.dim(); ++k)
                    if (dot(l, d.basis_vector(k)) != 0) return l;
            if (!advance()) break;
        }
    }
}

std::optional<Subspace> find_codim1_abelian_ideal(const LieAlgebra& g) {
    Subspace d = derived_subalgebra(g);
    if (d.dim() == 0) throw AbelianInputError();

    RatVec l = first_functional_off_derived(g);
    RatMatrix b = bl_form(g, l);
    RrefResult rr = rref(b);
    // An abelian ideal of codimension one is isotropic for every B_l, which
    // caps the rank at 2; any higher-rank witness certifies absence.
    if (rr.rank > 2) return std::nullopt;

    Subspace stab = Subspace::span(g.n, kernel_basis(b));

    // Two lowest basis indices completing g(l).
    std::vector<bool> used(g.n, false);
    for (int p : stab.pivots()) used[p] = true;
    int i1 = -1, i2 = -1;
    for (int i = 0; i < g.n; ++i) {
        if (used[i]) continue;
        if (i1 < 0)
            i1 = i;
        else if (i2 < 0) {
            i2 = i;
            break;
        }
    }
    if (i1 < 0 || i2 < 0) return std::nullopt;

    RatVec e1(g.n, Rational(0)), e2(g.n, Rational(0));
    e1[i1] = 1;
    e2[i2] = 1;

    std::vector<RatVec> gens;
    for (int k = 0; k < stab.dim(); ++k) gens.push_back(stab.basis_vector(k));

    bool e1_centralizes = true;
    for (int k = 0; k < stab.dim() && e1_centralizes; ++k)
        if (!vec_is_zero(g.bracket(e1, stab.basis_vector(k)))) e1_centralizes = false;

    if (e1_centralizes) {
        gens.push_back(e1);
    } else {
        // a = {x in span{e_i1, e_i2}: [x, g(l)] = 0}, solved as a 2-column system.
        RatMatrix sys(stab.dim() * g.n, 2);
        for (int k = 0; k < stab.dim(); ++k) {
            RatVec c1 = g.bracket(e1, stab.basis_vector(k));
            RatVec c2 = g.bracket(e2, stab.basis_vector(k));
            for (int r = 0; r < g.n; ++r) {
                sys.at(k * g.n + r, 0) = c1[r];
                sys.at(k * g.n + r, 1) = c2[r];
            }
        }
        auto ker = kernel_basis(sys);
        if (ker.empty()) return std::nullopt;
        RatVec w(g.n, Rational(0));
        for (int t = 0; t < g.n; ++t) w[t] = ker[0][0] * e1[t] + ker[0][1] * e2[t];
        gens.push_back(w);
    }

    Subspace m = Subspace::span(g.n, gens);
    if (m.dim() != g.n - 1) return std::nullopt;
    for (int a = 0; a < m.dim(); ++a)
        for (int c = a + 1; c < m.dim(); ++c)
            if (!vec_is_zero(g.bracket(m.basis_vector(a), m.basis_vector(c)))) return std::nullopt;
    for (int i = 0; i < g.n; ++i) {
        RatVec ei(g.n, Rational(0));
        ei[i] = 1;
        for (int a = 0; a < m.dim(); ++a)
            if (!m.contains(g.bracket(ei, m.basis_vector(a)))) return std::nullopt;
    }
    return m;
}

bool is_one_parameter_metabelian(const LieAlgebra& g) {
    if (g.is_abelian()) return false;
    return find_codim1_abelian_ideal(g).has_value();
}

Subspace polarization(const LieAlgebra& g, const RatVec& l) {
    if (!is_generic(g, l)) throw NotGenericError();
    auto m = find_codim1_abelian_ideal(g);
    if (!m) throw NotMetabelianError();
    Subspace stab = stabilizer(g, l);
    if (2 * m->dim() != g.n + stab.dim())
        throw Error("polarization dimension identity failed");
    return *m;
}

CanonicalDecomposition canonical_decomposition(const LieAlgebra& g) {
    std::optional<Subspace> m;
    if (!g.is_abelian()) m = find_codim1_abelian_ideal(g);
    if (!m) throw NotMetabelianError();

    std::vector<bool> used(g.n, false);
    for (int p : m->pivots()) used[p] = true;
    int xi = 0;
    while (xi < g.n && used[xi]) ++xi;
    RatVec x(g.n, Rational(0));
    x[xi] = 1;

    // ad X restricted to m, in the rref basis of m; coordinates read off the pivots.
    int md = m->dim();
    RatMatrix adx(md, md);
    for (int j = 0; j < md; ++j) {
        RatVec img = g.bracket(x, m->basis_vector(j));
        for (int i = 0; i < md; ++i) adx.at(i, j) = img[m->pivots()[i]];
    }

    JordanResult jr = nilpotent_jordan(adx);

    CanonicalDecomposition out;
    out.generator = x;
    auto lift = [&](int col) {
        RatVec v(g.n, Rational(0));
        for (int i = 0; i < md; ++i)
            for (int t = 0; t < g.n; ++t) v[t] += jr.p.at(i, col) * m->basis().at(i, t);
        return v;
    };
    int col = 0;
    for (int bs : jr.block_sizes) {
        if (bs >= 2) {
            std::vector<RatVec> block;
            for (int d = 0; d < bs; ++d) block.push_back(lift(col + d));
            out.block_sizes.push_back(bs);
            out.blocks.push_back(std::move(block));
        } else {
            out.central.push_back(lift(col));
        }
        col += bs;
    }
    return out;
}

bool unique_codim1_abelian_ideal(const LieAlgebra& g) {
    CanonicalDecomposition cd = canonical_decomposition(g);
    return !(cd.block_sizes.size() == 1 && cd.block_sizes[0] == 2);
}

}  // namespace nilharm
