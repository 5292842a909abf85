#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "nilharm/group.hpp"
#include "nilharm/quadrature.hpp"
#include "nilharm/spectrum.hpp"

namespace nilharm {

using Cplx = std::complex<double>;

// Spectral component over a crosssection representative l: a profile on the
// transverse line (period-1 Fourier polynomial cut to [-radius, radius)) times
// the covariance factor K(l)(g m) = chi_l(m)^{-1} K(l)(g).
struct ThetaBlock {
    ZVec l;                    // canonical gen representative, m*-coordinates
    std::vector<Cplx> coeffs;  // Fourier coefficients c_{-deg} .. c_{deg}
    int radius = 1;

    int degree() const { return (int(coeffs.size()) - 1) / 2; }
    Cplx fourier_at(const Rational& t) const;  // the period-1 polynomial P(t)
    Cplx fourier_at(double t) const;
    Cplx profile_at(const Rational& t) const;  // P(t) on [-radius, radius), else 0
};

// One-dimensional component: l in nongen, extended by K(l)(g) = coeff chi_l(g).
struct CharTerm {
    ZVec l;  // g*-coordinates
    Cplx coeff;
};

// Finitely supported element of the spectral side; simultaneously the V-image
// test function on G/Gamma (evaluation is the periodized coset sum).
struct TestFunction {
    std::vector<ThetaBlock> blocks;
    std::vector<CharTerm> chars;
    long height() const;  // max-norm of the spectral support
};

// Validates: block l's canonical gen representatives, char l's nongen.
TestFunction make_test_function(const NilSetting& s, std::vector<ThetaBlock> blocks,
                                std::vector<CharTerm> chars);

// Spectral vector with tabulation-free gen components: profile(t) is the value
// at delta(t, 0), extended by covariance.
struct SpectralVector {
    struct GenComponent {
        ZVec l;
        std::function<Cplx(const Rational&)> profile;
        int radius;
    };
    std::vector<GenComponent> gen;
    std::vector<CharTerm> chars;
};

SpectralVector spectral_from(const TestFunction& f);

// V(K)(g) = sum_{l in Sigma} sum_{gamma in Gamma/Gamma cap M} K(l)(g gamma)
//         + sum_{l in nongen} K(l)(g); the coset sum runs over delta(s,0) with
// t+s inside the declared support radius, so it is finite.
Cplx apply_v(const NilSetting& s, const SpectralVector& k, const GroupElement& g);

// Pointwise evaluation of the test function (exact rational phases).
Cplx eval(const NilSetting& s, const TestFunction& f, const GroupElement& g);
// Double-precision evaluation used by translated-integrand quadrature.
Cplx eval_f(const NilSetting& s, const TestFunction& f, double t, const std::vector<double>& x);

// U(xi)(l)(g): integral of xi(g m) chi_l(m) over M/(M cap Gamma) for l in the
// crosssection range, and of xi(g m) conj(chi_l(m)) over G/Gamma for l in
// nongen. Uniform-grid quadrature, exact for the trigonometric class in play.
Cplx apply_u(const NilSetting& s, const TestFunction& xi, const DualFunctional& l,
             const GroupElement& g, int grid, bool parallel = true);

// All spectral components of U(xi) on the support of xi.
SpectralVector apply_u_spectrum(const NilSetting& s, const TestFunction& xi, int grid);

struct IsometryReport {
    double norm_tau;   // ||xi||^2 on L^2(G/Gamma)
    double norm_rho;   // sum of component norms on the spectral side
    double discrepancy;
};

// Full spectral enumeration within the given height; throws
// IncompleteSpectralSupportError when xi has components beyond it.
IsometryReport check_isometry(const NilSetting& s, const TestFunction& xi, int grid, long height,
                              bool parallel = true);

// max over sampled (l, x) of |U(tau(a) xi)(l)(x) - (U xi)(l)(a^{-1} x)|. The
// left side goes through per-node group products in double precision, the
// right side through the exact flat-term path, so the two legs of the diagram
// take different computational routes.
double check_intertwining(const NilSetting& s, const TestFunction& xi, const GroupElement& a,
                          const std::vector<GroupElement>& sample_points, int grid);

struct InverseReport {
    double uv_discrepancy;  // sup |U(V(K)) - K| over the component sample grids
    double vu_discrepancy;  // sup |V(U(xi)) - xi| over the sampled elements
};

// K is given by theta-block data (its V-image is the block test function).
InverseReport check_inverse(const NilSetting& s, const TestFunction& k, const TestFunction& xi,
                            int grid, const std::vector<GroupElement>& samples);

// Required grid size: twice the maximal Fourier degree present, plus one.
int required_grid(const NilSetting& s, const TestFunction& xi, long extra_freq);

// Gamma-periodicity |xi(g gamma) - xi(g)|, for the property tests.
double periodicity_defect(const NilSetting& s, const TestFunction& xi, const GroupElement& g,
                          const GroupElement& gamma);

}  // namespace nilharm
