#include <doctest.h>

#include <random>
#include <set>

#include "nilharm/analysis.hpp"
#include "nilharm/spectrum.hpp"

using namespace nilharm;

namespace {

NilSetting h3_setting() { return prepare(catalog_entry("h3").algebra).setting; }
NilSetting f4_setting() { return prepare(catalog_entry("filiform4").algebra).setting; }

DualFunctional full(std::vector<long> v) {
    DualFunctional l;
    for (long c : v) l.coords.push_back(Rational(c));
    return l;
}

ZVec zv(std::vector<long> v) {
    ZVec z;
    for (long c : v) z.push_back(Int(c));
    return z;
}

}  // namespace

TEST_CASE("classification of dual functionals") {
    NilSetting s = h3_setting();
    CHECK(classify(s, full({1, 0, 0})).tag == DualClassTag::Gen);
    CHECK(classify(s, full({0, 0, 5})).tag == DualClassTag::NonGen);
    CHECK(classify(s, full({1, 0, 1})).tag == DualClassTag::Neither);
    CHECK(classify(s, full({0, 0, 0})).tag == DualClassTag::NonGen);

    DualFunctional m_restricted;
    m_restricted.coords = {Rational(2), Rational(1)};
    m_restricted.restricted_to_m = true;
    CHECK(classify(s, m_restricted).tag == DualClassTag::Gen);

    DualFunctional frac;
    frac.coords = {Rational(1, 2), Rational(0), Rational(0)};
    CHECK(classify(s, frac).tag == DualClassTag::Neither);
}

TEST_CASE("gamma orbit map on H3 and the action law") {
    NilSetting s = h3_setting();
    // (n, b) -> (n, b - s n).
    CHECK(gamma_orbit_map(s, zv({2, 5}), 1) == zv({2, 3}));
    CHECK(gamma_orbit_map(s, zv({2, 5}), 0) == zv({2, 5}));
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> u(-6, 6);
    for (int rep = 0; rep < 40; ++rep) {
        ZVec l = random_gen_functional(s, 6, rng);
        Int a = u(rng), b = u(rng);
        CHECK(gamma_orbit_map(s, gamma_orbit_map(s, l, a), b) == gamma_orbit_map(s, l, a + b));
        CHECK(in_gen(s, gamma_orbit_map(s, l, a)));
    }
    CHECK_THROWS_AS(gamma_orbit_map(s, zv({0, 3}), 1), NotGenError);
}

TEST_CASE("gamma action matches the coadjoint matrix for full lattice elements") {
    for (const char* name : {"h3", "filiform4", "filiform5"}) {
        PreparedAlgebra prep = prepare(catalog_entry(name).algebra);
        const NilSetting& s = prep.setting;
        std::mt19937_64 rng(101);
        for (int rep = 0; rep < 25; ++rep) {
            ZVec l = random_gen_functional(s, 4, rng);
            GroupElement gamma = random_lattice_element(s, 4, rng);
            // Ad_0* gamma l depends only on the delta(k,0) part of gamma.
            RatVec lfull(s.n, Rational(0));
            for (int i = 0; i < s.mdim(); ++i) lfull[i] = Rational(l[i]);
            RatVec moved = coadjoint(s, gamma).apply(lfull);
            ZVec viamap = gamma_orbit_map(s, l, gamma.t.get_num());
            for (int i = 0; i < s.mdim(); ++i) CHECK(moved[i] == Rational(viamap[i]));
        }
    }
}

TEST_CASE("canonical representatives") {
    NilSetting s = h3_setting();
    CHECK(canonical_rep(s, zv({2, 5})) == zv({2, 1}));
    CHECK(canonical_rep(s, zv({3, 0})) == zv({3, 0}));
    CHECK(is_canonical_rep(s, zv({3, 0})));
    CHECK(!is_canonical_rep(s, zv({2, 5})));

    NilSetting f4 = f4_setting();
    CHECK(canonical_rep(f4, zv({1, 0, 0})) == zv({1, 0, 0}));

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> u(-5, 5);
    for (const NilSetting* set : {&s, &f4}) {
        for (int rep = 0; rep < 50; ++rep) {
            ZVec l = random_gen_functional(*set, 5, rng);
            ZVec c = canonical_rep(*set, l);
            CHECK(canonical_rep(*set, c) == c);  // idempotent
            CHECK(canonical_rep(*set, gamma_orbit_map(*set, l, u(rng))) == c);  // orbit constant
        }
    }
}

TEST_CASE("orbit curves") {
    NilSetting s = h3_setting();
    OrbitCurve c = orbit_curve(s, zv({4, 1}));
    CHECK(c.coords[0].degree() == 0);
    CHECK(c.coords[1].degree() == 1);
    RatVec at0 = c.eval(0);
    CHECK(at0[0] == 4);
    CHECK(at0[1] == 1);
    RatVec at1 = c.eval(1);
    CHECK(at1[1] == 1 - 4);
    // Integer parameters land in the lattice.
    for (int k = -4; k <= 4; ++k) CHECK(vec_is_integral(c.eval(k)));

    NilSetting f4 = f4_setting();
    OrbitCurve cf = orbit_curve(f4, zv({1, 0, 0}));
    for (int k = -3; k <= 3; ++k) CHECK(vec_is_integral(cf.eval(k)));
}

TEST_CASE("multiplicity on H3 follows the |n| law and matches the oracle") {
    NilSetting s = h3_setting();
    CHECK(multiplicity_gen(s, zv({1, 0})) == 1);
    CHECK(multiplicity_gen(s, zv({3, 1})) == 3);
    CHECK(multiplicity(s, full({0, 0, 5})) == 1);
    CHECK_THROWS_AS(multiplicity(s, full({1, 0, 1})), NeitherClassError);

    for (long n = -5; n <= 5; ++n)
        for (long b = -3; b <= 3; ++b) {
            if (n == 0) continue;
            CHECK(multiplicity_gen(s, zv({n, b})) == Int(std::abs(n)));
        }

    CHECK(multiplicity_oracle(s, zv({3, 1}), 10) == 3);
    CHECK(multiplicity_oracle(s, zv({1, 0}), 5) == 1);
    CHECK_THROWS_AS(multiplicity_oracle(s, zv({5, 4}), 2), BoxTooSmallError);
}

TEST_CASE("multiplicity is constant on orbits and agrees with the box oracle") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<long> shift(-3, 3);
    auto sweep = [&](const char* name, long height, int reps) {
        NilSetting s = prepare(catalog_entry(name).algebra).setting;
        for (int rep = 0; rep < reps; ++rep) {
            ZVec l = random_gen_functional(s, height, rng);
            Int m = multiplicity_gen(s, l);
            CHECK(m >= 1);
            CHECK(multiplicity_gen(s, gamma_orbit_map(s, l, shift(rng))) == m);
            Int box = oracle_min_box(s, l) + 2;
            CHECK(multiplicity_oracle(s, l, box) == m);
        }
    };
    sweep("h3", 4, 25);
    sweep("filiform4", 2, 8);
}

TEST_CASE("spectrum enumeration") {
    NilSetting s = h3_setting();

    auto trivial = enumerate_spectrum(s, 0);
    REQUIRE(trivial.size() == 1);
    CHECK(!trivial[0].induced);
    CHECK(trivial[0].mult == 1);
    CHECK(trivial[0].l == zv({0, 0, 0}));

    auto h1 = enumerate_spectrum(s, 1);
    int characters = 0, induced = 0;
    for (const auto& e : h1) {
        if (e.induced) {
            ++induced;
            CHECK(e.mult == 1);
            CHECK((e.l == zv({1, 0}) || e.l == zv({-1, 0})));
        } else {
            ++characters;
            CHECK(e.l[0] == 0);
            CHECK(e.mult == 1);
        }
    }
    CHECK(characters == 9);
    CHECK(induced == 2);

    auto h3spec = enumerate_spectrum(s, 3);
    bool found = false;
    for (const auto& e : h3spec)
        if (e.induced && e.l[0] == 3) {
            CHECK(e.mult == 3);
            found = true;
        }
    CHECK(found);

    // Deterministic order: sorted, characters first.
    for (size_t i = 1; i < h3spec.size(); ++i) CHECK(!(h3spec[i] < h3spec[i - 1]));
}

TEST_CASE("gen and nongen tile the m* lattice (disjoint union)") {
    for (const char* name : {"h3", "filiform4", "h3_r1"}) {
        NilSetting s = prepare(catalog_entry(name).algebra).setting;
        long side = 5;
        std::vector<long> c(size_t(s.mdim()), -side);
        while (true) {
            ZVec v(s.mdim());
            for (int i = 0; i < s.mdim(); ++i) v[i] = c[size_t(i)];
            bool gen = in_gen(s, v);
            // nongen_1: vanishing on the derived part, X_n* coordinate zero.
            bool nongen1 = true;
            for (int i = 0; i < s.p; ++i)
                if (v[i] != 0) nongen1 = false;
            CHECK(gen != nongen1);
            int pos = s.mdim() - 1;
            while (pos >= 0) {
                if (++c[size_t(pos)] <= side) break;
                c[size_t(pos)] = -side;
                --pos;
            }
            if (pos < 0) break;
        }
    }
}
