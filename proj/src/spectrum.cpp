#include "nilharm/spectrum.hpp"

#include <algorithm>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nilharm {

namespace {

RatVec to_rat(const ZVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

ZVec to_int(const RatVec& v) {
    ZVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i].get_num();
    return r;
}

bool derived_part_nonzero(const NilSetting& s, const ZVec& v) {
    for (int i = 0; i < s.p; ++i)
        if (v[i] != 0) return true;
    return false;
}

}  // namespace

DualClass classify(const NilSetting& s, const DualFunctional& l) {
    DualFunctional full = l;
    if (l.restricted_to_m) {
        full.coords.push_back(Rational(0));
        full.restricted_to_m = false;
    }
    if (int(full.coords.size()) != s.n) throw BasisMismatchError();
    DualClass out{DualClassTag::Neither, full};
    if (!full.is_integral()) return out;
    bool derived_zero = true;
    for (int i = 0; i < s.p; ++i)
        if (full.coords[i] != 0) derived_zero = false;
    if (derived_zero) {
        out.tag = DualClassTag::NonGen;
    } else if (full.coords[s.n - 1] == 0) {
        out.tag = DualClassTag::Gen;
    }
    return out;
}

bool in_gen(const NilSetting& s, const ZVec& lm) {
    return int(lm.size()) == s.mdim() && derived_part_nonzero(s, lm);
}

ZVec gamma_orbit_map(const NilSetting& s, const ZVec& lm, const Int& shift) {
    if (!in_gen(s, lm)) throw NotGenError();
    RatMatrix e = s.exp_sym_neg.eval(Rational(shift));  // e^{-shift N}, integral
    return to_int(e.apply_transposed(to_rat(lm)));
}

OrbitCurve orbit_curve(const NilSetting& s, const ZVec& lm) {
    if (!in_gen(s, lm)) throw NotGenError();
    OrbitCurve c;
    c.coords = s.exp_sym_neg.apply_transposed(to_rat(lm));
    // dim Omega(pi_l) = 2: the curve direction must be nonzero for gen l.
    bool moving = false;
    for (const auto& p : c.coords)
        if (!p.is_constant()) moving = true;
    if (!moving) throw Error("orbit curve is constant for a gen functional");
    return c;
}

RatVec OrbitCurve::eval(const Rational& s) const {
    RatVec v(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) v[i] = coords[i].eval(s);
    return v;
}

namespace {

// Lowest coordinate moved by the action together with its (exactly linear)
// slope; every lower coordinate is constant along the curve.
struct MovedInfo {
    int index;
    Int slope;
};

MovedInfo lowest_moved(const NilSetting& s, const ZVec& lm) {
    for (int i = 0; i < s.mdim(); ++i) {
        Int slope = 0;
        bool moved = false;
        for (int k = 1; k < s.nil_index; ++k) {
            Rational w = 0;
            for (int r = 0; r < s.mdim(); ++r)
                if (s.npow[k].at(r, i) != 0) w += Rational(lm[r]) * s.npow[k].at(r, i);
            if (w != 0) {
                moved = true;
                if (k == 1) slope = -w.get_num();
                if (k > 1) throw Error("lowest moved coordinate is not linear");
            }
        }
        if (moved) return {i, slope};
    }
    throw NotGenError();
}

}  // namespace

ZVec canonical_rep(const NilSetting& s, const ZVec& lm) {
    if (!in_gen(s, lm)) throw NotGenError();
    MovedInfo mi = lowest_moved(s, lm);
    // Ad*(delta(k,0)) moves coordinate i0 by slope*k; reduce it into [0,|slope|).
    Int a = mi.slope;
    Int l0 = lm[mi.index];
    Int absa = abs(a);
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), l0.get_mpz_t(), absa.get_mpz_t());
    Int k = (r - l0) / a;
    return gamma_orbit_map(s, lm, k);
}

bool is_canonical_rep(const NilSetting& s, const ZVec& lm) {
    return canonical_rep(s, lm) == lm;
}

Int multiplicity_gen(const NilSetting& s, const ZVec& lm) {
    if (!in_gen(s, lm)) throw NotGenError();
    OrbitCurve curve = orbit_curve(s, lm);

    // Candidate denominators: if P(s0) is integral then so is every integer
    // translate, hence the (d-1)-st finite difference M*s0 + beta with
    // M = d! * lead(P_i) and beta integral; so s0 lies in (1/gcd M_i) Z.
    Int g = 0;
    for (const auto& p : curve.coords) {
        if (p.is_constant()) continue;
        Rational m = p.leading();
        for (int j = 2; j <= p.degree(); ++j) m *= j;
        if (!is_integer(m)) throw Error("difference slope is not integral; lattice not validated?");
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_num_mpz_t());
    }
    if (g == 0) throw Error("gen functional with constant curve");

    std::set<ZVec> points;
    Int count = 0;
    for (Int k = 0; k < g; ++k) {
        Rational sk(k, g);
        sk.canonicalize();
        RatVec pt = curve.eval(sk);
        if (!vec_is_integral(pt)) continue;
        ZVec z = to_int(pt);
        if (!points.insert(z).second)
            throw CurveInjectivityError("distinct s in [0,1) hit the same curve point");
        ++count;
    }
    return count;
}

Int multiplicity(const NilSetting& s, const DualFunctional& l) {
    DualClass c = classify(s, l);
    if (c.tag == DualClassTag::NonGen) return 1;
    if (c.tag == DualClassTag::Neither) throw NeitherClassError();
    ZVec lm(s.mdim());
    for (int i = 0; i < s.mdim(); ++i) lm[i] = c.l.coords[i].get_num();
    return multiplicity_gen(s, lm);
}

Int oracle_min_box(const NilSetting& s, const ZVec& lm) {
    OrbitCurve curve = orbit_curve(s, lm);
    Rational best = 0;
    for (const auto& p : curve.coords) {
        Rational sum = 0;
        for (int k = 0; k <= p.degree(); ++k) sum += abs(p.coeff(k));
        if (sum > best) best = sum;
    }
    Int b;
    mpz_cdiv_q(b.get_mpz_t(), best.get_num_mpz_t(), best.get_den_mpz_t());
    return b;
}

namespace {

// All rational roots of an integer-coefficient polynomial (rational root
// theorem; divisors by trial division, coefficients are desk-scale).
std::vector<Rational> rational_roots(std::vector<Int> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) throw Error("zero polynomial in root search");
    std::vector<Rational> roots;
    // Factor out s = 0 roots.
    size_t shift = 0;
    while (shift < c.size() && c[shift] == 0) ++shift;
    if (shift > 0) {
        roots.push_back(Rational(0));
        c.erase(c.begin(), c.begin() + shift);
    }
    if (c.size() <= 1) return roots;
    auto divisors = [](Int v) {
        std::vector<Int> ds;
        v = abs(v);
        for (Int d = 1; d * d <= v; ++d)
            if (v % d == 0) {
                ds.push_back(d);
                if (d * d != v) ds.push_back(v / d);
            }
        return ds;
    };
    RatPoly poly([&] {
        RatVec q(c.size());
        for (size_t i = 0; i < c.size(); ++i) q[i] = Rational(c[i]);
        return q;
    }());
    for (const Int& p : divisors(c.front()))
        for (const Int& q : divisors(c.back()))
            for (int sign : {1, -1}) {
                Rational cand(sign * p, q);
                cand.canonicalize();
                if (poly.eval(cand) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    return roots;
}

}  // namespace

Int multiplicity_oracle(const NilSetting& s, const ZVec& lm, const Int& box_bound) {
    if (!in_gen(s, lm)) throw NotGenError();
    Int bmin = oracle_min_box(s, lm);
    if (box_bound < bmin)
        throw BoxTooSmallError("box bound " + box_bound.get_str() + " below required " + bmin.get_str());
    OrbitCurve curve = orbit_curve(s, lm);

    // Reference coordinate for the root search: highest-index nonconstant.
    int jref = -1;
    for (int i = 0; i < s.mdim(); ++i)
        if (!curve.coords[i].is_constant()) jref = i;

    int md = s.mdim();
    std::set<Rational> fracs;
    ZVec y(md, Int(0));
    for (auto& c : y) c = -box_bound;
    while (true) {
        // Clear the s-candidates for this lattice point.
        const RatPoly& pj = curve.coords[jref];
        Rational den = 1;
        for (int k = 0; k <= pj.degree(); ++k) {
            Int dk = pj.coeff(k).get_den();
            mpz_lcm(den.get_num_mpz_t(), den.get_num_mpz_t(), dk.get_mpz_t());
        }
        std::vector<Int> ic(pj.degree() + 1);
        for (int k = 0; k <= pj.degree(); ++k) {
            Rational v = pj.coeff(k) * den;
            if (k == 0) v -= Rational(y[jref]) * den;
            ic[k] = v.get_num();
        }
        for (const Rational& root : rational_roots(ic)) {
            RatVec pt = curve.eval(root);
            bool match = true;
            for (int i = 0; i < md && match; ++i)
                if (pt[i] != Rational(y[i])) match = false;
            if (match) fracs.insert(rat_frac(root));
        }
        // Next point in the box.
        int pos = md - 1;
        while (pos >= 0) {
            y[pos] += 1;
            if (y[pos] <= box_bound) break;
            y[pos] = -box_bound;
            --pos;
        }
        if (pos < 0) break;
    }
    return Int(long(fracs.size()));
}

bool SpectrumEntry::operator<(const SpectrumEntry& o) const {
    if (induced != o.induced) return !induced;  // characters first
    return l < o.l;
}

namespace {

std::vector<SpectrumEntry> spectrum_characters(const NilSetting& s, long height) {
    // nongen = Z X_{p+1}* + ... + Z X_n*, enumerated over the free coordinates.
    std::vector<SpectrumEntry> out;
    int freedim = s.n - s.p;
    std::vector<long> c(freedim, -height);
    while (true) {
        SpectrumEntry e;
        e.l.assign(s.n, Int(0));
        for (int i = 0; i < freedim; ++i) e.l[s.p + i] = c[i];
        e.induced = false;
        e.mult = 1;
        e.orbit_constant.assign(s.p, Int(0));
        out.push_back(std::move(e));
        int pos = freedim - 1;
        while (pos >= 0) {
            if (++c[pos] <= height) break;
            c[pos] = -height;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

ZVec unflatten(const NilSetting& s, long flat, long height) {
    long side = 2 * height + 1;
    ZVec v(s.mdim());
    for (int i = s.mdim() - 1; i >= 0; --i) {
        v[i] = flat % side - height;
        flat /= side;
    }
    return v;
}

SpectrumEntry make_induced_entry(const NilSetting& s, const ZVec& v) {
    SpectrumEntry e;
    e.l = v;
    e.induced = true;
    e.mult = multiplicity_gen(s, v);
    e.orbit_constant.assign(v.begin(), v.begin() + s.p);
    return e;
}

}  // namespace

std::vector<SpectrumEntry> enumerate_spectrum_serial(const NilSetting& s, long height) {
    std::vector<SpectrumEntry> out = spectrum_characters(s, height);
    long side = 2 * height + 1, total = 1;
    for (int i = 0; i < s.mdim(); ++i) total *= side;
    for (long flat = 0; flat < total; ++flat) {
        ZVec v = unflatten(s, flat, height);
        if (!in_gen(s, v) || !is_canonical_rep(s, v)) continue;
        out.push_back(make_induced_entry(s, v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SpectrumEntry> enumerate_spectrum(const NilSetting& s, long height) {
    std::vector<SpectrumEntry> out = spectrum_characters(s, height);
    long side = 2 * height + 1, total = 1;
    for (int i = 0; i < s.mdim(); ++i) total *= side;

    std::vector<std::vector<SpectrumEntry>> partial;
#ifdef _OPENMP
    int threads = omp_get_max_threads();
#else
    int threads = 1;
#endif
    partial.resize(threads);
#pragma omp parallel for schedule(dynamic, 64)
    for (long flat = 0; flat < total; ++flat) {
#ifdef _OPENMP
        int tid = omp_get_thread_num();
#else
        int tid = 0;
#endif
        ZVec v = unflatten(s, flat, height);
        if (!in_gen(s, v) || !is_canonical_rep(s, v)) continue;
        partial[tid].push_back(make_induced_entry(s, v));
    }
    for (auto& chunk : partial)
        for (auto& e : chunk) out.push_back(std::move(e));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace nilharm
