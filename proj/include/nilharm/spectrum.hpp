#pragma once

#include <vector>

#include "nilharm/group.hpp"
#include "nilharm/malcev.hpp"

namespace nilharm {

using ZVec = std::vector<Int>;

enum class DualClassTag { Gen, NonGen, Neither };

struct DualClass {
    DualClassTag tag;
    DualFunctional l;
};

// gen = integer functionals on m* not vanishing on [g,g]; nongen = integer
// functionals supported on X_{p+1}*..X_n*. Functionals on m are classified
// through their zero-extension to g*.
DualClass classify(const NilSetting& s, const DualFunctional& l);

bool in_gen(const NilSetting& s, const ZVec& lm);

// Ad*(delta(s,0)) l restricted to m*: the coadjoint action of the coset
// representatives of Gamma / Gamma cap M.
ZVec gamma_orbit_map(const NilSetting& s, const ZVec& lm, const Int& shift);

// Unique orbit element whose lowest action-moved coordinate lies in the
// fundamental residue range [0, |slope|).
ZVec canonical_rep(const NilSetting& s, const ZVec& lm);
bool is_canonical_rep(const NilSetting& s, const ZVec& lm);

// Polynomial curve s -> Ad*(delta(s,0)) l on m*-coordinates; the coadjoint
// orbit is this curve extended by the free X_n* direction.
struct OrbitCurve {
    std::vector<RatPoly> coords;
    RatVec eval(const Rational& s) const;
};
OrbitCurve orbit_curve(const NilSetting& s, const ZVec& lm);

// mult(pi_l) = #[Omega(pi_l) cap Sigma]: 1 for nongen, and for gen the number
// of rational s in [0,1) with integral curve point. Candidate denominators
// come from first finite differences of the nonconstant coordinates.
Int multiplicity(const NilSetting& s, const DualFunctional& l);
Int multiplicity_gen(const NilSetting& s, const ZVec& lm);

// Independent brute-force check: enumerates integer points of [-B,B]^{n-1} on
// the curve by rational root search and groups them by the Z-action.
Int multiplicity_oracle(const NilSetting& s, const ZVec& lm, const Int& box_bound);

// Smallest box bound that provably contains the s in [0,1) arc of the curve.
Int oracle_min_box(const NilSetting& s, const ZVec& lm);

struct SpectrumEntry {
    ZVec l;             // m*-coordinates for induced entries, g*-coordinates for characters
    bool induced;
    Int mult;
    ZVec orbit_constant;  // restriction to [g,g] (first p coordinates)

    bool operator<(const SpectrumEntry& o) const;
    bool operator==(const SpectrumEntry& o) const {
        return l == o.l && induced == o.induced && mult == o.mult && orbit_constant == o.orbit_constant;
    }
};

// All nongen characters and all canonical gen representatives of max-norm
// <= height, each with its multiplicity, in lexicographic order.
std::vector<SpectrumEntry> enumerate_spectrum(const NilSetting& s, long height);
// Serial reference implementation, kept for testing the parallel kernel.
std::vector<SpectrumEntry> enumerate_spectrum_serial(const NilSetting& s, long height);

}  // namespace nilharm
