#include "nilharm/intertwiner.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace nilharm {

namespace {

Cplx unit_phase(const Rational& turns) {
    double a = 2.0 * M_PI * rat_frac(turns).get_d();
    return {std::cos(a), std::sin(a)};
}

Cplx unit_phase_f(double turns) {
    double a = 2.0 * M_PI * turns;
    return {std::cos(a), std::sin(a)};
}

// Integer s with t + s in [-radius, radius); always exactly 2*radius values.
std::vector<Int> coset_window(int radius, const Rational& t) {
    Rational lo = Rational(-radius) - t;
    Int smin;
    mpz_cdiv_q(smin.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    std::vector<Int> w;
    for (int k = 0; k < 2 * radius; ++k) w.push_back(smin + k);
    return w;
}

std::vector<long> coset_window_f(int radius, double t) {
    long smin = long(std::ceil(-double(radius) - t));
    while (smin + radius + t < 0) ++smin;           // guards against rounding on
    while (smin - 1 + radius + t >= 0) --smin;      // the closed boundary
    std::vector<long> w;
    for (int k = 0; k < 2 * radius; ++k) w.push_back(smin + k);
    return w;
}

std::vector<long> freq_of(const ZVec& v, int sign) {
    std::vector<long> f(v.size());
    for (size_t i = 0; i < v.size(); ++i) f[i] = sign * long(v[i].get_si());
    return f;
}

bool is_identity(const GroupElement& g) {
    if (g.t != 0) return false;
    return vec_is_zero(g.x);
}

GroupElementF to_float(const GroupElement& g) {
    GroupElementF f;
    f.t = g.t.get_d();
    f.x.resize(g.x.size());
    for (size_t i = 0; i < g.x.size(); ++i) f.x[i] = g.x[i].get_d();
    return f;
}

}  // namespace

Cplx ThetaBlock::fourier_at(const Rational& t) const {
    Cplx acc = 0;
    int deg = degree();
    for (int k = -deg; k <= deg; ++k) acc += coeffs[size_t(k + deg)] * unit_phase(Rational(k) * t);
    return acc;
}

Cplx ThetaBlock::fourier_at(double t) const {
    Cplx acc = 0;
    int deg = degree();
    for (int k = -deg; k <= deg; ++k) acc += coeffs[size_t(k + deg)] * unit_phase_f(k * t);
    return acc;
}

Cplx ThetaBlock::profile_at(const Rational& t) const {
    if (t < Rational(-radius) || t >= Rational(radius)) return 0;
    return fourier_at(t);
}

long TestFunction::height() const {
    Int h = 0;
    for (const auto& b : blocks)
        for (const auto& c : b.l) h = std::max(h, Int(abs(c)));
    for (const auto& c : chars)
        for (const auto& v : c.l) h = std::max(h, Int(abs(v)));
    return h.get_si();
}

TestFunction make_test_function(const NilSetting& s, std::vector<ThetaBlock> blocks,
                                std::vector<CharTerm> chars) {
    for (const auto& b : blocks) {
        if (b.radius < 1) throw Error("theta block radius must be >= 1");
        if (b.coeffs.empty() || b.coeffs.size() % 2 == 0)
            throw Error("fourier coefficients must be c_{-deg}..c_{deg}");
        if (!in_gen(s, b.l)) throw NotGenError();
        if (!is_canonical_rep(s, b.l))
            throw Error("theta block representative is not the canonical crosssection element");
    }
    for (const auto& c : chars) {
        DualFunctional l;
        for (const auto& v : c.l) l.coords.push_back(Rational(v));
        if (classify(s, l).tag != DualClassTag::NonGen)
            throw UnclassifiedFunctionalError();
    }
    return TestFunction{std::move(blocks), std::move(chars)};
}

SpectralVector spectral_from(const TestFunction& f) {
    SpectralVector k;
    for (const auto& b : f.blocks) {
        ThetaBlock copy = b;
        k.gen.push_back({b.l, [copy](const Rational& t) { return copy.profile_at(t); }, b.radius});
    }
    k.chars = f.chars;
    return k;
}

Cplx apply_v(const NilSetting& s, const SpectralVector& k, const GroupElement& g) {
    Cplx acc = 0;
    for (const auto& comp : k.gen) {
        for (const Int& shift : coset_window(comp.radius, g.t)) {
            GroupElement h = multiply(s, g, GroupElement{Rational(shift), RatVec(s.mdim(), Rational(0))});
            RatVec lrat(comp.l.size());
            for (size_t i = 0; i < comp.l.size(); ++i) lrat[i] = Rational(comp.l[i]);
            acc += comp.profile(h.t) * unit_phase(-dot(lrat, h.x));
        }
    }
    for (const auto& c : k.chars) {
        DualFunctional l;
        for (const auto& v : c.l) l.coords.push_back(Rational(v));
        acc += c.coeff * character(s, l, g);
    }
    return acc;
}

Cplx eval(const NilSetting& s, const TestFunction& f, const GroupElement& g) {
    return apply_v(s, spectral_from(f), g);
}

Cplx eval_f(const NilSetting& s, const TestFunction& f, double t, const std::vector<double>& x) {
    Cplx acc = 0;
    for (const auto& b : f.blocks) {
        for (long shift : coset_window_f(b.radius, t)) {
            ZVec nu = gamma_orbit_map(s, b.l, Int(shift));
            double ph = 0;
            for (size_t i = 0; i < nu.size(); ++i) ph += nu[i].get_d() * x[i];
            acc += b.fourier_at(t + double(shift)) * unit_phase_f(-ph);
        }
    }
    for (const auto& c : f.chars) {
        double ph = c.l[s.n - 1].get_d() * t;
        for (int i = 0; i < s.mdim(); ++i) ph += c.l[i].get_d() * x[i];
        acc += c.coeff * unit_phase_f(ph);
    }
    return acc;
}

namespace {

// Flat character expansion of u -> V(K)(w delta(0,u)) on the m-torus.
std::vector<GridTerm> x_terms(const NilSetting& s, const SpectralVector& k, const GroupElement& w) {
    std::vector<GridTerm> terms;
    for (const auto& comp : k.gen) {
        RatVec lrat(comp.l.size());
        for (size_t i = 0; i < comp.l.size(); ++i) lrat[i] = Rational(comp.l[i]);
        for (const Int& shift : coset_window(comp.radius, w.t)) {
            GroupElement h = multiply(s, w, GroupElement{Rational(shift), RatVec(s.mdim(), Rational(0))});
            Cplx coef = comp.profile(h.t) * unit_phase(-dot(lrat, h.x));
            ZVec nu = gamma_orbit_map(s, comp.l, shift);
            terms.push_back({coef, freq_of(nu, -1)});
        }
    }
    for (const auto& c : k.chars) {
        DualFunctional l;
        for (const auto& v : c.l) l.coords.push_back(Rational(v));
        ZVec lm(c.l.begin(), c.l.end() - 1);
        terms.push_back({c.coeff * character(s, l, w), freq_of(lm, +1)});
    }
    return terms;
}

// Flat expansion of tau -> xi(E_B(tau)) on T^n, dimension order (x, t).
std::vector<GridTerm> torus_terms(const NilSetting& s, const TestFunction& f) {
    std::vector<GridTerm> terms;
    for (const auto& b : f.blocks) {
        int deg = b.degree();
        for (const Int& shift : coset_window(b.radius, Rational(0))) {
            std::vector<long> base = freq_of(gamma_orbit_map(s, b.l, shift), -1);
            for (int kk = -deg; kk <= deg; ++kk) {
                std::vector<long> fr = base;
                fr.push_back(kk);
                terms.push_back({b.coeffs[size_t(kk + deg)], fr});
            }
        }
    }
    for (const auto& c : f.chars) {
        std::vector<long> fr = freq_of(ZVec(c.l.begin(), c.l.end() - 1), +1);
        fr.push_back(long(c.l[s.n - 1].get_si()));
        terms.push_back({c.coeff, fr});
    }
    return terms;
}

// grid == 0 asks for the exact-degree grid (2 max-degree + 1); an explicit
// grid below that requirement is an error.
int resolve_grid(const std::vector<GridTerm>& base_terms, long extra, int grid) {
    long f1 = max_abs_freq(base_terms);
    int need = int(std::max(2 * f1, f1 + extra) + 1);
    if (grid == 0) return need;
    if (grid < need) throw GridTooCoarseError(need, grid);
    return grid;
}

Cplx apply_u_gen(const NilSetting& s, const SpectralVector& k, const ZVec& sigma,
                 const GroupElement& g, int grid, bool parallel) {
    std::vector<GridTerm> terms = x_terms(s, k, g);
    long extra = 0;
    for (const auto& c : sigma) extra = std::max(extra, std::labs(c.get_si()));
    grid = resolve_grid(terms, extra, grid);
    for (auto& t : terms)
        for (int i = 0; i < s.mdim(); ++i) t.freq[i] += long(sigma[i].get_si());
    return grid_mean_terms({s.mdim(), grid}, terms, parallel);
}

Cplx apply_u_nongen_at_e(const NilSetting& s, const TestFunction& xi, const ZVec& lfull, int grid,
                         bool parallel) {
    std::vector<GridTerm> terms = torus_terms(s, xi);
    long extra = 0;
    for (const auto& c : lfull) extra = std::max(extra, std::labs(c.get_si()));
    grid = resolve_grid(terms, extra, grid);
    for (auto& t : terms) {
        for (int i = 0; i < s.mdim(); ++i) t.freq[i] -= long(lfull[i].get_si());
        t.freq[s.mdim()] -= long(lfull[s.n - 1].get_si());
    }
    return grid_mean_terms({s.n, grid}, terms, parallel);
}

ZVec rat_to_int(const RatVec& v) {
    ZVec z(v.size());
    for (size_t i = 0; i < v.size(); ++i) z[i] = v[i].get_num();
    return z;
}

}  // namespace

Cplx apply_u(const NilSetting& s, const TestFunction& xi, const DualFunctional& l,
             const GroupElement& g, int grid, bool parallel) {
    DualClass cls = classify(s, l);
    if (cls.tag == DualClassTag::Gen) {
        ZVec lm = rat_to_int(RatVec(cls.l.coords.begin(), cls.l.coords.end() - 1));
        return apply_u_gen(s, spectral_from(xi), lm, g, grid, parallel);
    }
    if (cls.tag == DualClassTag::NonGen) {
        ZVec lfull = rat_to_int(cls.l.coords);
        if (is_identity(g)) return apply_u_nongen_at_e(s, xi, lfull, grid, parallel);
        // Translated fundamental-domain integrand; double-precision nodes.
        GroupElementF gf = to_float(g);
        auto f = [&](const std::vector<double>& tau) {
            GroupElementF node{tau[size_t(s.n - 1)], std::vector<double>(tau.begin(), tau.end() - 1)};
            GroupElementF h = multiply(s, gf, node);
            double ph = lfull[s.n - 1].get_d() * tau[size_t(s.n - 1)];
            for (int i = 0; i < s.mdim(); ++i) ph += lfull[i].get_d() * tau[size_t(i)];
            return eval_f(s, xi, h.t, h.x) * unit_phase_f(-ph);
        };
        long extra = 0;
        for (const auto& c : lfull) extra = std::max(extra, std::labs(c.get_si()));
        grid = resolve_grid(torus_terms(s, xi), extra, grid);
        return grid_mean_nodes({s.n, grid}, f, parallel);
    }
    throw UnclassifiedFunctionalError();
}

SpectralVector apply_u_spectrum(const NilSetting& s, const TestFunction& xi, int grid) {
    SpectralVector out;
    std::set<ZVec> seen;
    int rmax = 1;
    for (const auto& b : xi.blocks) rmax = std::max(rmax, b.radius);
    SpectralVector kxi = spectral_from(xi);
    for (const auto& b : xi.blocks) {
        if (!seen.insert(b.l).second) continue;
        ZVec sigma = b.l;
        out.gen.push_back({sigma,
                           [&s, kxi, sigma, grid](const Rational& t) {
                               GroupElement pt{t, RatVec(s.mdim(), Rational(0))};
                               return apply_u_gen(s, kxi, sigma, pt, grid, true);
                           },
                           rmax});
    }
    std::set<ZVec> seen_chars;
    for (const auto& c : xi.chars) {
        if (!seen_chars.insert(c.l).second) continue;
        out.chars.push_back({c.l, apply_u_nongen_at_e(s, xi, c.l, grid, true)});
    }
    return out;
}

IsometryReport check_isometry(const NilSetting& s, const TestFunction& xi, int grid, long height,
                              bool parallel) {
    if (xi.height() > height)
        throw IncompleteSpectralSupportError("test function has spectral components beyond height " +
                                             std::to_string(height));
    std::vector<GridTerm> tt = torus_terms(s, xi);
    int tn_grid = resolve_grid(tt, 0, grid);
    double norm_tau = grid_mean_abs2({s.n, tn_grid}, tt, parallel);

    SpectralVector kxi = spectral_from(xi);
    int rmax = 0;
    for (const auto& b : xi.blocks) rmax = std::max(rmax, b.radius);

    double norm_rho = 0;
    // Induced components over the full crosssection within the height.
    if (rmax > 0) {
        long side = 2 * height + 1, total = 1;
        for (int i = 0; i < s.mdim(); ++i) total *= side;
        for (long flat = 0; flat < total; ++flat) {
            ZVec v(s.mdim());
            long fl = flat;
            for (int i = s.mdim() - 1; i >= 0; --i) {
                v[i] = fl % side - height;
                fl /= side;
            }
            if (!in_gen(s, v) || !is_canonical_rep(s, v)) continue;
            // ||U xi(sigma)||^2 on L^2(G/M) = integral over the transverse line,
            // cell by cell through the Z x [0,1) decomposition.
            for (int cell = -rmax; cell < rmax; ++cell) {
                std::vector<Cplx> buf(static_cast<size_t>(tn_grid));
                for (int j = 0; j < tn_grid; ++j) {
                    GroupElement pt{Rational(cell) + make_rat(j, tn_grid), RatVec(s.mdim(), Rational(0))};
                    Cplx u = apply_u_gen(s, kxi, v, pt, grid, parallel);
                    buf[size_t(j)] = {std::norm(u), 0.0};
                }
                norm_rho += pairwise_sum(buf).real() / tn_grid;
            }
        }
    }
    // Character components over the nongen lattice within the height.
    {
        int freedim = s.n - s.p;
        std::vector<long> c(freedim, -height);
        while (true) {
            ZVec lfull(s.n, Int(0));
            for (int i = 0; i < freedim; ++i) lfull[s.p + i] = c[i];
            Cplx u = apply_u_nongen_at_e(s, xi, lfull, grid, parallel);
            norm_rho += std::norm(u);
            int pos = freedim - 1;
            while (pos >= 0) {
                if (++c[pos] <= height) break;
                c[pos] = -height;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return {norm_tau, norm_rho, std::fabs(norm_rho - norm_tau)};
}

double check_intertwining(const NilSetting& s, const TestFunction& xi, const GroupElement& a,
                          const std::vector<GroupElement>& sample_points, int grid) {
    SpectralVector kxi = spectral_from(xi);
    GroupElement ainv = inverse(s, a);
    bool trivial = is_identity(a);
    GroupElementF ainv_f = to_float(ainv);

    std::set<ZVec> gens, nongens;
    for (const auto& b : xi.blocks) gens.insert(b.l);
    for (const auto& c : xi.chars) nongens.insert(c.l);

    double worst = 0;
    for (const auto& pt : sample_points) {
        GroupElement w = multiply(s, ainv, pt);
        GroupElementF pt_f = to_float(pt);
        for (const auto& lm : gens) {
            long extra = 0;
            for (const auto& c : lm) extra = std::max(extra, std::labs(c.get_si()));
            int call_grid = resolve_grid(x_terms(s, kxi, w), extra, grid);
            Cplx rhs = apply_u_gen(s, kxi, lm, w, call_grid, true);
            Cplx lhs;
            if (trivial) {
                lhs = apply_u_gen(s, kxi, lm, pt, call_grid, true);
            } else {
                // tau(a) xi integrated per node: x . delta(0,u) first, then a^{-1}
                // on the left, all through the double group law.
                auto f = [&](const std::vector<double>& u) {
                    GroupElementF m{0.0, u};
                    GroupElementF h = multiply(s, ainv_f, multiply(s, pt_f, m));
                    double ph = 0;
                    for (int i = 0; i < s.mdim(); ++i) ph += lm[i].get_d() * u[size_t(i)];
                    return eval_f(s, xi, h.t, h.x) * unit_phase_f(ph);
                };
                lhs = grid_mean_nodes({s.mdim(), call_grid}, f, true);
            }
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        GroupElementF w_f = to_float(w);
        for (const auto& lf : nongens) {
            long extra = 0;
            for (const auto& c : lf) extra = std::max(extra, std::labs(c.get_si()));
            // Both legs share the sampling grid; they differ in the order the
            // group products are taken, which is what the diagram exercises.
            int cmp_grid = grid > 0 ? grid : int(max_abs_freq(torus_terms(s, xi)) + extra + 1);
            auto quad = [&](auto&& point) {
                auto f = [&](const std::vector<double>& tau) {
                    GroupElementF node{tau[size_t(s.n - 1)], std::vector<double>(tau.begin(), tau.end() - 1)};
                    GroupElementF h = point(node);
                    double ph = lf[s.n - 1].get_d() * tau[size_t(s.n - 1)];
                    for (int i = 0; i < s.mdim(); ++i) ph += lf[i].get_d() * tau[size_t(i)];
                    return eval_f(s, xi, h.t, h.x) * unit_phase_f(-ph);
                };
                return grid_mean_nodes({s.n, cmp_grid}, f, true);
            };
            Cplx rhs = quad([&](const GroupElementF& node) { return multiply(s, w_f, node); });
            Cplx lhs = trivial ? rhs : quad([&](const GroupElementF& node) {
                return multiply(s, ainv_f, multiply(s, pt_f, node));
            });
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

InverseReport check_inverse(const NilSetting& s, const TestFunction& k, const TestFunction& xi,
                            int grid, const std::vector<GroupElement>& samples) {
    InverseReport rep{0, 0};
    // U(V(K)) against K on the component sample grids. K is a map over the
    // spectral support, so blocks and character terms sharing an l merge.
    SpectralVector kspec = spectral_from(k);
    std::map<ZVec, int> gen_radius;
    for (const auto& b : k.blocks) {
        int& r = gen_radius[b.l];
        r = std::max(r, b.radius);
    }
    for (const auto& [l, radius] : gen_radius) {
        auto component = [&](const Rational& t) {
            Cplx acc = 0;
            for (const auto& b : k.blocks)
                if (b.l == l) acc += b.profile_at(t);
            return acc;
        };
        int tsamples = grid > 0 ? grid : resolve_grid(torus_terms(s, k), 0, 0);
        for (int cell = -radius; cell < radius; ++cell)
            for (int j = 0; j < tsamples; ++j) {
                Rational t = Rational(cell) + make_rat(j, tsamples);
                GroupElement pt{t, RatVec(s.mdim(), Rational(0))};
                Cplx u = apply_u_gen(s, kspec, l, pt, grid, true);
                rep.uv_discrepancy = std::max(rep.uv_discrepancy, std::abs(u - component(t)));
            }
    }
    std::map<ZVec, Cplx> char_sum;
    for (const auto& c : k.chars) char_sum[c.l] += c.coeff;
    for (const auto& [l, coeff] : char_sum) {
        Cplx u = apply_u_nongen_at_e(s, k, l, grid, true);
        rep.uv_discrepancy = std::max(rep.uv_discrepancy, std::abs(u - coeff));
    }
    // V(U(xi)) against xi at the sampled elements.
    SpectralVector uxi = apply_u_spectrum(s, xi, grid);
    for (const auto& g : samples) {
        Cplx recon = apply_v(s, uxi, g);
        rep.vu_discrepancy = std::max(rep.vu_discrepancy, std::abs(recon - eval(s, xi, g)));
    }
    return rep;
}

int required_grid(const NilSetting& s, const TestFunction& xi, long extra_freq) {
    // Sample points range over the whole profile support [-R, R), where the
    // coset windows reach shifts up to 2R; size the grid for those orbits.
    long f1 = 0;
    for (const auto& b : xi.blocks) {
        f1 = std::max(f1, long(b.degree()));
        for (long sh = -2 * b.radius; sh <= 2 * b.radius; ++sh) {
            ZVec nu = gamma_orbit_map(s, b.l, Int(sh));
            for (const auto& c : nu) f1 = std::max(f1, std::labs(c.get_si()));
        }
    }
    for (const auto& c : xi.chars)
        for (const auto& v : c.l) f1 = std::max(f1, std::labs(v.get_si()));
    return int(std::max(2 * f1, f1 + extra_freq) + 1);
}

double periodicity_defect(const NilSetting& s, const TestFunction& xi, const GroupElement& g,
                          const GroupElement& gamma) {
    return std::abs(eval(s, xi, multiply(s, g, gamma)) - eval(s, xi, g));
}

}  // namespace nilharm
