#include <doctest.h>

#include <random>

#include "nilharm/analysis.hpp"
#include "nilharm/catalog.hpp"
#include "nilharm/group.hpp"
#include "oracles.hpp"

using namespace nilharm;

namespace {

GroupElement elt(const NilSetting& s, const Rational& t, const RatVec& x) {
    GroupElement g;
    g.t = t;
    g.x = x;
    (void)s;
    return g;
}

NilSetting h3_setting() { return prepare(catalog_entry("h3").algebra).setting; }

}  // namespace

TEST_CASE("Malcev basis construction and the ideal-chain errors") {
    LieAlgebra h3 = heisenberg3();
    auto m = find_codim1_abelian_ideal(h3);
    MalcevBasis mb = build_malcev_basis(h3, *m);
    CHECK(mb.p == 1);
    CHECK(mb.c == RatMatrix::identity(3));  // (X1; X2 | X3) is already adapted

    MalcevBasis f4 = build_malcev_basis(filiform(4), *find_codim1_abelian_ideal(filiform(4)));
    CHECK(f4.p == 2);

    // m not containing [g,g]: span{X2, X3} in H3.
    RatVec e2(3, Rational(0)), e3(3, Rational(0));
    e2[1] = 1;
    e3[2] = 1;
    CHECK_THROWS_AS(build_malcev_basis(h3, Subspace::span(3, {e2, e3})), NotAnIdealChainError);
}

TEST_CASE("strongly based validation and rescaling") {
    LieAlgebra h3 = heisenberg3();
    MalcevBasis mb3 = build_malcev_basis(h3, *find_codim1_abelian_ideal(h3));
    CHECK_NOTHROW(validate_strongly_based(mb3));
    auto d3 = rescale_factors(mb3);
    CHECK(d3 == std::vector<Int>{1, 1});

    LieAlgebra f4 = filiform(4);
    MalcevBasis mb4 = build_malcev_basis(f4, *find_codim1_abelian_ideal(f4));
    try {
        validate_strongly_based(mb4);
        FAIL("expected IntegralityFailureError");
    } catch (const IntegralityFailureError& e) {
        CHECK(e.row == 1);
        CHECK(e.col == 3);
        CHECK(e.entry == "1/2");
    }
    CHECK(rescale_factors(mb4) == std::vector<Int>{1, 1, 2});
    MalcevBasis scaled = rescale_to_integral(mb4);
    CHECK_NOTHROW(validate_strongly_based(scaled));

    LieAlgebra f5 = filiform(5);
    MalcevBasis mb5 = build_malcev_basis(f5, *find_codim1_abelian_ideal(f5));
    CHECK(rescale_factors(mb5) == std::vector<Int>{1, 1, 2, 6});
}

TEST_CASE("group law on the stated examples") {
    NilSetting s = h3_setting();
    GroupElement id = group_identity(s);
    GroupElement g = elt(s, 1, {Rational(0), Rational(1)});

    CHECK(multiply(s, g, id).t == g.t);
    CHECK(multiply(s, g, id).x == g.x);

    GroupElement h = elt(s, 1, {Rational(0), Rational(0)});
    GroupElement prod = multiply(s, g, h);
    CHECK(prod.t == 2);
    CHECK(prod.x == RatVec{Rational(-1), Rational(1)});

    GroupElement ginv = inverse(s, g);
    CHECK(ginv.t == -1);
    // delta(t,x)^{-1} = delta(-t, -e^{tN} x); the product below certifies it.
    CHECK(ginv.x == RatVec{Rational(-1), Rational(-1)});
    GroupElement e = multiply(s, g, ginv);
    CHECK(e.t == 0);
    CHECK(vec_is_zero(e.x));

    GroupElement m = elt(s, 0, {Rational(2), Rational(-3)});
    GroupElement minv = inverse(s, m);
    CHECK(minv.t == 0);
    CHECK(minv.x == RatVec{Rational(-2), Rational(3)});
}

TEST_CASE("H3 products agree with the 3x3 unitriangular matrix model") {
    NilSetting s = h3_setting();
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    auto draw = [&] {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        return q;
    };
    for (int rep = 0; rep < 50; ++rep) {
        GroupElement a = elt(s, draw(), {draw(), draw()});
        GroupElement b = elt(s, draw(), {draw(), draw()});
        GroupElement ab = multiply(s, a, b);
        auto ma = oracle::h3_matrix(a.t, a.x[0], a.x[1]);
        auto mb = oracle::h3_matrix(b.t, b.x[0], b.x[1]);
        auto coords = oracle::h3_coords(oracle::mat3_mul(ma, mb));
        CHECK(coords[0] == ab.t);
        CHECK(coords[1] == ab.x[0]);
        CHECK(coords[2] == ab.x[1]);

        GroupElement ainv = inverse(s, a);
        auto minv = oracle::h3_matrix(ainv.t, ainv.x[0], ainv.x[1]);
        auto idc = oracle::h3_coords(oracle::mat3_mul(ma, minv));
        CHECK(idc[0] == 0);
        CHECK(idc[1] == 0);
        CHECK(idc[2] == 0);
    }
}

TEST_CASE("group law agrees with the Dynkin series and is associative") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    for (const char* name : {"h3", "filiform4", "h3_r1"}) {
        PreparedAlgebra prep = prepare(catalog_entry(name).algebra);
        const NilSetting& s = prep.setting;
        const LieAlgebra& adapted = prep.basis.adapted;
        auto draw = [&] {
            Rational q(num(rng), den(rng));
            q.canonicalize();
            return q;
        };
        auto rnd = [&] {
            GroupElement g;
            g.t = draw();
            for (int i = 0; i < s.mdim(); ++i) g.x.push_back(draw());
            return g;
        };
        auto log_direct = [&](const GroupElement& g) {
            // log via the series: bch(t X_n, x . X) in the adapted algebra.
            RatVec a(s.n, Rational(0)), b(s.n, Rational(0));
            a[s.n - 1] = g.t;
            for (int i = 0; i < s.mdim(); ++i) b[i] = g.x[i];
            return oracle::bch_log(adapted, a, b);
        };
        for (int rep = 0; rep < 25; ++rep) {
            GroupElement g1 = rnd(), g2 = rnd(), g3 = rnd();
            // multiply against the pure Dynkin route.
            RatVec w = oracle::bch_log(adapted, log_direct(g1), log_direct(g2));
            CHECK(log_direct(multiply(s, g1, g2)) == w);
            CHECK(log_coords(s, g1) == log_direct(g1));
            // associativity, exact.
            GroupElement lhs = multiply(s, multiply(s, g1, g2), g3);
            GroupElement rhs = multiply(s, g1, multiply(s, g2, g3));
            CHECK(lhs.t == rhs.t);
            CHECK(lhs.x == rhs.x);
        }
    }
}

TEST_CASE("adjoint and coadjoint actions") {
    NilSetting s = h3_setting();
    CHECK(adjoint(s, group_identity(s)) == RatMatrix::identity(3));
    CHECK(coadjoint(s, group_identity(s)) == RatMatrix::identity(3));

    // Ad*(delta(s,0)) on (a1, a2): (a1, a2 - s a1).
    GroupElement d2 = elt(s, 2, {Rational(0), Rational(0)});
    RatMatrix co = coadjoint(s, d2);
    RatVec l = {Rational(3), Rational(5), Rational(0)};
    RatVec moved = co.apply(l);
    CHECK(moved[0] == 3);
    CHECK(moved[1] == 5 - 2 * 3);

    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> num(-4, 4);
    for (int rep = 0; rep < 30; ++rep) {
        GroupElement a = elt(s, num(rng), {make_rat(num(rng), 2), Rational(num(rng))});
        GroupElement b = elt(s, make_rat(num(rng), 3), {Rational(num(rng)), make_rat(num(rng), 2)});
        CHECK(coadjoint(s, multiply(s, a, b)) == coadjoint(s, a) * coadjoint(s, b));
        CHECK(adjoint(s, multiply(s, a, b)) == adjoint(s, a) * adjoint(s, b));
    }
}

TEST_CASE("coadjoint action of the lattice is integral on m*") {
    for (const char* name : {"h3", "filiform4", "filiform5"}) {
        PreparedAlgebra prep = prepare(catalog_entry(name).algebra);
        const NilSetting& s = prep.setting;
        std::mt19937_64 rng(41);
        for (int rep = 0; rep < 30; ++rep) {
            GroupElement gamma = random_lattice_element(s, 4, rng);
            RatMatrix co = coadjoint(s, gamma);
            for (int i = 0; i < s.mdim(); ++i)
                for (int j = 0; j < s.mdim(); ++j) CHECK(is_integer(co.at(i, j)));
        }
    }
}

TEST_CASE("characters") {
    NilSetting s = h3_setting();
    // l in nongen is trivial on the lattice.
    DualFunctional l0;
    l0.coords = {Rational(0), Rational(2), Rational(-3)};
    std::mt19937_64 rng(59);
    for (int rep = 0; rep < 20; ++rep) {
        GroupElement gamma = random_lattice_element(s, 5, rng);
        CHECK(is_integer(character_phase(s, l0, gamma)));
    }
    DualFunctional zero;
    zero.coords = RatVec(3, Rational(0));
    GroupElement any = elt(s, Rational(1, 3), {Rational(2, 5), Rational(1)});
    CHECK(character(s, zero, any) == Cplx(1.0, 0.0));

    DualFunctional x2;
    x2.coords = {Rational(0), Rational(1), Rational(0)};
    GroupElement half = elt(s, 0, {Rational(0), Rational(1, 2)});
    CHECK(std::abs(character(s, x2, half) - Cplx(-1.0, 0.0)) < 1e-15);

    // Multiplicativity gate: X1* does not vanish on [g,g].
    DualFunctional x1;
    x1.coords = {Rational(1), Rational(0), Rational(0)};
    CHECK_THROWS_AS(character_phase(s, x1, elt(s, 1, {Rational(0), Rational(0)})), NotACharacterError);
    CHECK_NOTHROW(character_phase(s, x1, half));  // fine on M
}

TEST_CASE("fundamental domain decomposition") {
    NilSetting s = h3_setting();

    GroupElement inbox = elt(s, Rational(1, 3), {Rational(1, 2), Rational(2, 5)});
    DomainDecomposition d = fundamental_domain_decompose(s, inbox);
    CHECK(d.gamma.t == 0);
    CHECK(vec_is_zero(d.gamma.x));
    CHECK(d.tau == RatVec{Rational(1, 2), Rational(2, 5), Rational(1, 3)});

    GroupElement expx1 = elt(s, 0, {Rational(1), Rational(0)});
    d = fundamental_domain_decompose(s, expx1);
    CHECK(vec_is_zero(d.tau));
    CHECK(d.gamma.x == RatVec{Rational(1), Rational(0)});

    GroupElement neg = elt(s, 0, {Rational(-1, 2), Rational(0)});
    d = fundamental_domain_decompose(s, neg);
    CHECK(d.tau == RatVec{Rational(1, 2), Rational(0), Rational(0)});
    CHECK(d.gamma.t == 0);
    CHECK(d.gamma.x == RatVec{Rational(-1), Rational(0)});

    // decompose o E_B = identity on [0,1)^n, and E_B(tau) gamma reproduces g.
    std::mt19937_64 rng(67);
    std::uniform_int_distribution<int> num(0, 5);
    for (const char* name : {"h3", "filiform4"}) {
        NilSetting set = prepare(catalog_entry(name).algebra).setting;
        for (int rep = 0; rep < 25; ++rep) {
            RatVec tau(set.n);
            for (auto& c : tau) {
                c = Rational(num(rng), 6);
                c.canonicalize();
            }
            DomainDecomposition dd = fundamental_domain_decompose(set, make_eb(set, tau));
            CHECK(dd.tau == tau);
            CHECK(dd.gamma.t == 0);
            CHECK(vec_is_zero(dd.gamma.x));

            GroupElement g = random_rational_element(set, 7, 3, rng);
            DomainDecomposition dg = fundamental_domain_decompose(set, g);
            for (const auto& c : dg.tau) {
                CHECK(c >= 0);
                CHECK(c < 1);
            }
            CHECK_NOTHROW(LatticeElement{dg.gamma});
            GroupElement back = multiply(set, make_eb(set, dg.tau), dg.gamma);
            CHECK(back.t == g.t);
            CHECK(back.x == g.x);
        }
    }
}

TEST_CASE("lattice closure under product and inverse") {
    for (const char* name : {"h3", "filiform4", "filiform6"}) {
        NilSetting s = prepare(catalog_entry(name).algebra).setting;
        REQUIRE(s.integral);
        std::mt19937_64 rng(73);
        for (int rep = 0; rep < 30; ++rep) {
            GroupElement a = random_lattice_element(s, 5, rng);
            GroupElement b = random_lattice_element(s, 5, rng);
            CHECK_NOTHROW(LatticeElement{multiply(s, a, b)});
            CHECK_NOTHROW(LatticeElement{inverse(s, a)});
        }
    }
}
