#include "nilharm/group.hpp"

#include <cmath>

namespace nilharm {

GroupElement group_identity(const NilSetting& s) {
    return GroupElement{Rational(0), RatVec(s.mdim(), Rational(0))};
}

RatVec apply_exp_tn(const NilSetting& s, const Rational& t, const RatVec& v) {
    RatVec result = v;
    RatVec term = v;
    Rational factor = 1;  // t^k / k!
    for (int k = 1; k < s.nil_index; ++k) {
        term = s.nmat.apply(term);
        factor *= t;
        factor /= k;
        for (int i = 0; i < s.mdim(); ++i) result[i] += factor * term[i];
    }
    return result;
}

std::vector<double> apply_exp_tn(const NilSetting& s, double t, const std::vector<double>& v) {
    std::vector<double> result = v, term = v;
    for (int k = 1; k < s.nil_index; ++k) {
        std::vector<double> next(s.mdim(), 0.0);
        for (int i = 0; i < s.mdim(); ++i)
            for (int j = 0; j < s.mdim(); ++j)
                if (s.nmat.at(i, j) != 0) next[i] += s.nmat.at(i, j).get_d() * term[j];
        term = std::move(next);
        double f = t / k;
        for (int i = 0; i < s.mdim(); ++i) {
            term[i] *= f;
            result[i] += term[i];
        }
    }
    return result;
}

RatMatrix adjoint(const NilSetting& s, const GroupElement& g) {
    // Ad(delta(t,x)) = e^{t ad X_n} (I + ad(x.X)): block [[e^{tN}, -e^{tN} N x], [0, 1]].
    int n = s.n;
    RatMatrix m(n, n);
    RatMatrix etn = s.exp_tn(g.t);
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j) m.at(i, j) = etn.at(i, j);
    RatVec w = etn.apply(s.nmat.apply(g.x));
    for (int i = 0; i < n - 1; ++i) m.at(i, n - 1) = -w[i];
    m.at(n - 1, n - 1) = 1;
    return m;
}

RatMatrix coadjoint(const NilSetting& s, const GroupElement& g) {
    return adjoint(s, inverse(s, g)).transpose();
}

RatVec log_coords(const NilSetting& s, const GroupElement& g) {
    // psi(tN) = e^{tN} phi(tN)^{-1} with phi(z) = (e^z - 1)/z; phi(tN) is
    // unipotent, so the inverse is exact.
    int md = s.mdim();
    RatMatrix phi(md, md);
    Rational fact = 1, tp = 1;
    for (int k = 0; k < s.nil_index; ++k) {
        if (k > 0) tp *= g.t;
        fact = 1;
        for (int j = 2; j <= k + 1; ++j) fact *= j;
        phi = phi + s.npow[k] * (tp / fact);
    }
    RatVec v = s.exp_tn(g.t).apply(inverse(phi).apply(g.x));
    RatVec out(s.n);
    for (int i = 0; i < md; ++i) out[i] = v[i];
    out[s.n - 1] = g.t;
    return out;
}

namespace {

bool vanishes_on_derived(const NilSetting& s, const RatVec& coords) {
    for (int i = 0; i < s.p; ++i)
        if (coords[i] != 0) return false;
    return true;
}

}  // namespace

Rational character_phase(const NilSetting& s, const DualFunctional& l, const GroupElement& g) {
    if (l.restricted_to_m) {
        if (int(l.coords.size()) != s.mdim()) throw BasisMismatchError();
        if (g.t != 0)
            throw NotACharacterError("functional on m* evaluated outside M");
        return dot(l.coords, g.x);
    }
    if (int(l.coords.size()) != s.n) throw BasisMismatchError();
    if (g.t != 0 && !vanishes_on_derived(s, l.coords))
        throw NotACharacterError("chi_l is multiplicative on G only when l vanishes on [g,g]");
    RatVec lg = log_coords(s, g);
    return dot(l.coords, lg);
}

std::complex<double> character(const NilSetting& s, const DualFunctional& l, const GroupElement& g) {
    Rational phase = rat_frac(character_phase(s, l, g));
    double a = 2.0 * M_PI * phase.get_d();
    return {std::cos(a), std::sin(a)};
}

GroupElement make_eb(const NilSetting& s, const RatVec& tau) {
    if (int(tau.size()) != s.n) throw BasisMismatchError();
    GroupElement g;
    g.t = tau[s.n - 1];
    g.x.assign(tau.begin(), tau.end() - 1);
    return g;
}

LatticeElement::LatticeElement(GroupElement elt) : g(std::move(elt)) {
    if (!is_integer(g.t) || !vec_is_integral(g.x))
        throw Error("lattice element must have integer coordinates");
}

DomainDecomposition fundamental_domain_decompose(const NilSetting& s, const GroupElement& g) {
    Rational k(rat_floor(g.t));
    Rational tau_n = g.t - k;
    RatVec y = apply_exp_tn(s, k, g.x);
    RatVec tau_m(s.mdim()), eta(s.mdim());
    for (int i = 0; i < s.mdim(); ++i) {
        eta[i] = Rational(rat_floor(y[i]));
        tau_m[i] = y[i] - eta[i];
    }
    RatVec xi = apply_exp_tn(s, -k, eta);
    DomainDecomposition out;
    out.tau = tau_m;
    out.tau.push_back(tau_n);
    out.gamma = GroupElement{k, xi};
    return out;
}

}  // namespace nilharm
