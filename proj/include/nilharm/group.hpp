#pragma once

#include <complex>
#include <vector>

#include "nilharm/malcev.hpp"

namespace nilharm {

// delta(t, x) = exp(t X_n) exp(x_{n-1} X_{n-1}) ... exp(x_1 X_1) in a strong
// Malcev basis through m. The same coordinate formulas serve the exact
// (Rational) and the quadrature (double) layers.
template <class S>
struct GroupElt {
    S t{};
    std::vector<S> x;
};

using GroupElement = GroupElt<Rational>;
using GroupElementF = GroupElt<double>;

GroupElement group_identity(const NilSetting& s);

// e^{tN} v, exact.
RatVec apply_exp_tn(const NilSetting& s, const Rational& t, const RatVec& v);
std::vector<double> apply_exp_tn(const NilSetting& s, double t, const std::vector<double>& v);

// delta(t,x) delta(s,y) = delta(t+s, e^{-sN} x + y).
template <class S>
GroupElt<S> multiply(const NilSetting& set, const GroupElt<S>& a, const GroupElt<S>& b) {
    if (int(a.x.size()) != set.mdim() || int(b.x.size()) != set.mdim()) throw BasisMismatchError();
    GroupElt<S> r;
    r.t = a.t + b.t;
    r.x = apply_exp_tn(set, S(-b.t), a.x);
    for (size_t i = 0; i < r.x.size(); ++i) r.x[i] = r.x[i] + b.x[i];
    return r;
}

// delta(t,x)^{-1} = delta(-t, -e^{tN} x).
template <class S>
GroupElt<S> inverse(const NilSetting& set, const GroupElt<S>& a) {
    if (int(a.x.size()) != set.mdim()) throw BasisMismatchError();
    GroupElt<S> r;
    r.t = -a.t;
    r.x = apply_exp_tn(set, a.t, a.x);
    for (auto& c : r.x) c = -c;
    return r;
}

// Ad(delta(t,x)) as an n x n matrix on algebra coordinates.
RatMatrix adjoint(const NilSetting& s, const GroupElement& g);
// Ad*(g) = (Ad(g^{-1}))^T on dual coordinates.
RatMatrix coadjoint(const NilSetting& s, const GroupElement& g);

// log delta(t,x) = t X_n + (psi(tN) x) . X with psi(z) = z/(1 - e^{-z});
// returns coordinates (m-part, t).
RatVec log_coords(const NilSetting& s, const GroupElement& g);

// <l, log g>, exact. Throws NotACharacterError when chi_l is not
// multiplicative on the subgroup g belongs to.
Rational character_phase(const NilSetting& s, const DualFunctional& l, const GroupElement& g);

// chi_l(g) = e^{2 pi i <l, log g>}; the phase stays rational until the final
// complex exponential.
std::complex<double> character(const NilSetting& s, const DualFunctional& l, const GroupElement& g);

// E_B(t_1..t_n) = delta(t_n, (t_1..t_{n-1})).
GroupElement make_eb(const NilSetting& s, const RatVec& tau);

struct LatticeElement {
    GroupElement g;
    explicit LatticeElement(GroupElement elt);
};

struct DomainDecomposition {
    RatVec tau;        // in [0,1)^n, E_B-ordered (m-part first, t last)
    GroupElement gamma;  // integer coordinates
};

// Unique g = E_B(tau) gamma: peel the integer part of t, then fold the m-part
// through e^{kN} and reduce coordinatewise.
DomainDecomposition fundamental_domain_decompose(const NilSetting& s, const GroupElement& g);

}  // namespace nilharm
