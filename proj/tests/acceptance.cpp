// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>

#include "nilharm/analysis.hpp"
#include "oracles.hpp"

using namespace nilharm;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
Clock::time_point criterion_start = Clock::now();

void report(int criterion, bool pass, const std::string& detail) {
    double dt = std::chrono::duration<double>(Clock::now() - criterion_start).count();
    std::printf("[%s] criterion %2d (%6.2fs): %s\n", pass ? "PASS" : "FAIL", criterion, dt,
                detail.c_str());
    if (!pass) ++failures;
    criterion_start = Clock::now();
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------- criterion 1
void heisenberg_multiplicity_law() {
    auto t0 = Clock::now();
    NilSetting s = prepare(catalog_entry("h3").algebra).setting;
    auto entries = enumerate_spectrum(s, 6);
    bool ok = !entries.empty();
    int induced = 0;
    for (const auto& e : entries) {
        if (!e.induced) {
            ok = ok && e.mult == 1;
            continue;
        }
        ++induced;
        ok = ok && e.mult == abs(e.l[0]);
        Int box = oracle_min_box(s, e.l) + 2;
        ok = ok && multiplicity_oracle(s, e.l, box) == e.mult;
    }
    double dt = seconds_since(t0);
    ok = ok && induced > 0 && dt < 5.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "H3 spectrum height 6: mult = |l(X1)| on %d induced entries, oracle-exact, %.2fs",
                  induced, dt);
    report(1, ok, buf);
}

// ---------------------------------------------------------------- criterion 2
void stabilizer_dimension() {
    std::mt19937_64 rng(1002);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    bool ok = true;
    int tested = 0;
    for (const auto& entry : catalog()) {
        const LieAlgebra& g = entry.algebra;
        int found = 0;
        while (found < 100) {
            RatVec l(g.n);
            for (auto& c : l) {
                c = Rational(num(rng), den(rng));
                c.canonicalize();
            }
            if (!is_generic(g, l)) continue;
            ++found;
            ++tested;
            ok = ok && stabilizer(g, l).dim() == g.n - 2;
        }
    }
    report(2, ok, "dim g(l) = n-2 for " + std::to_string(tested) + " generic functionals over the catalog");
}

// ---------------------------------------------------------------- criterion 3
void decomposition_recovery() {
    std::mt19937_64 rng(1003);
    std::uniform_int_distribution<int> blocks_count(1, 3);
    std::uniform_int_distribution<int> block_size(2, 6);
    std::uniform_int_distribution<int> central_dim(0, 3);
    std::uniform_int_distribution<int> entry(-2, 2);
    bool ok = true;
    for (int rep = 0; rep < 50; ++rep) {
        // Random block spec with sum n_i + 1 + dim a <= 8.
        std::vector<int> sizes;
        int a_dim = 0;
        while (true) {
            sizes.clear();
            int k = blocks_count(rng);
            for (int i = 0; i < k; ++i) sizes.push_back(block_size(rng));
            a_dim = central_dim(rng);
            int total = 1 + a_dim;
            for (int b : sizes) total += b;
            if (total <= 8) break;
        }
        std::sort(sizes.rbegin(), sizes.rend());
        int n = 1 + a_dim;
        for (int b : sizes) n += b;

        // Basis (block chains..., central..., X); brackets [X, e_i] = e_{i-1}.
        std::vector<BracketSpec> rel;
        int offset = 0;
        for (int b : sizes) {
            for (int i = 2; i <= b; ++i) rel.push_back({n, offset + i, {{offset + i - 1, Rational(1)}}});
            offset += b;
        }
        LieAlgebra g = build_algebra(n, {}, rel);

        // Conjugate by a random unimodular integer matrix.
        RatMatrix t = RatMatrix::identity(n);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int k = 0; k < 3 * n; ++k) {
            int i = pick(rng), j = pick(rng);
            if (i == j) continue;
            RatMatrix e = RatMatrix::identity(n);
            e.at(i, j) = entry(rng);
            t = t * e;
        }
        LieAlgebra conj = change_basis(g, t);

        CanonicalDecomposition cd = canonical_decomposition(conj);
        ok = ok && cd.block_sizes == sizes;
        ok = ok && int(cd.central.size()) == a_dim;
        for (const auto& block : cd.blocks) {
            ok = ok && vec_is_zero(conj.bracket(cd.generator, block[0]));
            for (size_t i = 1; i < block.size(); ++i)
                ok = ok && conj.bracket(cd.generator, block[i]) == block[i - 1];
            for (const auto& other : cd.blocks)
                for (const auto& v : other)
                    for (const auto& w : block) ok = ok && vec_is_zero(conj.bracket(v, w));
        }
        for (const auto& z : cd.central) ok = ok && center(conj).contains(z);
        if (!ok) break;
    }
    report(3, ok, "50 random block specs recovered after unimodular conjugation, brackets exact");
}

// ---------------------------------------------------------------- criterion 4
void uniqueness_criterion() {
    bool ok = true;
    ok = ok && !unique_codim1_abelian_ideal(heisenberg3(0));
    for (int k = 1; k <= 3; ++k) ok = ok && !unique_codim1_abelian_ideal(heisenberg3(k));
    for (int n = 4; n <= 7; ++n) ok = ok && unique_codim1_abelian_ideal(filiform(n));
    // Exhaustive cross-check at dim <= 5.
    for (const char* name : {"h3", "h3_r1", "h3_r2", "filiform4", "filiform5"}) {
        const LieAlgebra& g = catalog_entry(name).algebra;
        bool unique = oracle::codim1_abelian_ideals(g, 2).size() == 1;
        ok = ok && unique == unique_codim1_abelian_ideal(g);
    }
    report(4, ok, "H3 x R^k non-unique (k = 0..3), filiform 4-7 unique, exhaustive scan agrees at dim <= 5");
}

// ------------------------------------------------------------ criteria 5-7
struct Lab {
    NilSetting setting;
    std::vector<TestFunction> family;
    int grid;
    long height;
};

Lab make_lab(const std::string& name, unsigned seed, int max_radius) {
    Lab lab{prepare(catalog_entry(name).algebra).setting, {}, 0, 0};
    std::mt19937_64 rng(seed);
    TestFamilyConfig cfg;
    cfg.count = 5;
    cfg.max_blocks = 5;
    cfg.max_chars = 4;
    cfg.max_degree = 4;
    cfg.max_radius = max_radius;
    cfg.sigma_height = 1;
    cfg.char_height = 1;
    lab.family = make_test_family(lab.setting, cfg, rng);
    for (const auto& f : lab.family) lab.height = std::max(lab.height, f.height());
    lab.grid = 0;  // exact-degree grid per quadrature
    return lab;
}

void isometry_criterion(const Lab& h3, const Lab& f4) {
    auto t0 = Clock::now();
    double worst = 0;
    for (const Lab* lab : {&h3, &f4})
        for (const auto& f : lab->family)
            worst = std::max(worst, check_isometry(lab->setting, f, lab->grid, lab->height).discrepancy);
    double dt = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "| ||U xi||^2 - ||xi||^2 | <= %.3g over 10 test functions (tol 1e-9), %.2fs", worst, dt);
    report(5, worst <= 1e-9 && dt < 30.0, buf);
}

void commutativity_criterion(const Lab& h3, const Lab& f4) {
    std::mt19937_64 rng(1006);
    double worst = 0;
    for (const Lab* lab : {&h3, &f4}) {
        std::vector<GroupElement> pts;
        for (int i = 0; i < 1; ++i) pts.push_back(random_rational_element(lab->setting, 1, 2, rng));
        for (int i = 0; i < 10; ++i) {
            GroupElement a = random_rational_element(lab->setting, 1, 2, rng);
            for (const auto& f : lab->family)
                worst = std::max(worst, check_intertwining(lab->setting, f, a, pts, lab->grid));
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "diagram discrepancy <= %.3g over 20 translations x family (tol 1e-9)",
                  worst);
    report(6, worst <= 1e-9, buf);
}

void inversion_criterion(const Lab& h3, const Lab& f4) {
    std::mt19937_64 rng(1007);
    double worst = 0;
    for (const Lab* lab : {&h3, &f4}) {
        std::vector<GroupElement> pts;
        for (int i = 0; i < 4; ++i) pts.push_back(random_rational_element(lab->setting, 2, 2, rng));
        for (const auto& f : lab->family) {
            InverseReport rep = check_inverse(lab->setting, f, f, lab->grid, pts);
            worst = std::max(worst, std::max(rep.uv_discrepancy, rep.vu_discrepancy));
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "||U(V(K)) - K|| and ||V(U(xi)) - xi|| <= %.3g over the family (tol 1e-9)", worst);
    report(7, worst <= 1e-9, buf);
}

// ---------------------------------------------------------------- criterion 8
void lattice_invariance() {
    std::mt19937_64 rng(1008);
    bool ok = true;
    int tested = 0;
    for (const auto& entry : catalog()) {
        NilSetting s = prepare(entry.algebra).setting;
        for (int rep = 0; rep < 25; ++rep) {
            ZVec l = random_gen_functional(s, 5, rng);
            GroupElement gamma = random_lattice_element(s, 5, rng);
            ZVec moved = gamma_orbit_map(s, l, gamma.t.get_num());
            ++tested;
            ok = ok && in_gen(s, moved);  // integral with nonzero [g,g] part
            // Cross-check through the coadjoint matrix of the full gamma.
            RatVec lfull(s.n, Rational(0));
            for (int i = 0; i < s.mdim(); ++i) lfull[i] = Rational(l[i]);
            RatVec via = coadjoint(s, gamma).apply(lfull);
            for (int i = 0; i < s.mdim(); ++i) ok = ok && via[i] == Rational(moved[i]);
        }
    }
    report(8, ok, "Ad_0* Gamma keeps gen integral with nonzero derived part (" + std::to_string(tested) +
                      " samples)");
}

// ---------------------------------------------------------------- criterion 9
void group_law_oracle() {
    std::mt19937_64 rng(1009);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    bool ok = true;
    int triples = 0;
    for (const auto& entry : catalog()) {
        PreparedAlgebra prep = prepare(entry.algebra);
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
        auto log_bch = [&](const GroupElement& g) {
            RatVec a(s.n, Rational(0)), b(s.n, Rational(0));
            a[s.n - 1] = g.t;
            for (int i = 0; i < s.mdim(); ++i) b[i] = g.x[i];
            return oracle::bch_log(adapted, a, b);
        };
        for (int rep = 0; rep < 100; ++rep) {
            GroupElement g1 = rnd(), g2 = rnd(), g3 = rnd();
            ++triples;
            RatVec w = oracle::bch_log(adapted, log_bch(g1), log_bch(g2));
            ok = ok && log_bch(multiply(s, g1, g2)) == w;
            RatVec winv = oracle::bch_log(adapted, log_bch(g1), log_bch(inverse(s, g1)));
            ok = ok && vec_is_zero(winv);
            GroupElement lhs = multiply(s, multiply(s, g1, g2), g3);
            GroupElement rhs = multiply(s, g1, multiply(s, g2, g3));
            ok = ok && lhs.t == rhs.t && lhs.x == rhs.x;
            if (!ok) break;
        }
        if (!ok) break;
    }
    report(9, ok, "group law = Dynkin series on " + std::to_string(triples) +
                      " triples; inverses and associativity exact");
}

// --------------------------------------------------------------- criterion 10
void integrality_gate() {
    bool ok = true;
    LieAlgebra f4 = filiform(4);
    MalcevBasis mb = build_malcev_basis(f4, *find_codim1_abelian_ideal(f4));
    try {
        validate_strongly_based(mb);
        ok = false;
    } catch (const IntegralityFailureError& e) {
        ok = ok && e.row == 1 && e.col == 3 && e.entry == "1/2";
    }
    ok = ok && rescale_factors(mb) == std::vector<Int>{1, 1, 2};
    MalcevBasis scaled = rescale_to_integral(mb);
    ok = ok && is_strongly_based(scaled);
    report(10, ok, "filiform-4 standard basis rejected with witness 1/2 at (1,3); rescale (1,1,2) accepted");
}

}  // namespace

int main() {
    heisenberg_multiplicity_law();
    stabilizer_dimension();
    decomposition_recovery();
    uniqueness_criterion();
    Lab h3 = make_lab("h3", 2005, 2);
    Lab f4 = make_lab("filiform4", 2006, 1);
    isometry_criterion(h3, f4);
    commutativity_criterion(h3, f4);
    inversion_criterion(h3, f4);
    lattice_invariance();
    group_law_oracle();
    integrality_gate();
    std::printf("%s: %d/10 criteria passed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                10 - failures);
    return failures == 0 ? 0 : 1;
}
