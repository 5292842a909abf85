#include "nilharm/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace nilharm {

Json run_analyze(const LieAlgebra& g) {
    Json j;
    j["dim"] = g.n;
    j["abelian"] = g.is_abelian();
    if (g.is_abelian()) {
        j["metabelian"] = false;
        j["note"] = "abelian input: the one-parameter metabelian definition requires a nonabelian algebra";
        return j;
    }
    auto m = find_codim1_abelian_ideal(g);
    j["metabelian"] = m.has_value();
    if (!m) {
        j["note"] = "no abelian ideal of codimension one";
        return j;
    }
    CanonicalDecomposition cd = canonical_decomposition(g);
    j["blocks"] = cd.block_sizes;
    j["central_complement_dim"] = int(cd.central.size());
    j["unique_codim1_abelian_ideal"] = unique_codim1_abelian_ideal(g);
    j["m_basis"] = matrix_to_json(m->basis());

    MalcevBasis mb = build_malcev_basis(g, *m);
    j["p"] = mb.p;
    j["malcev_basis_columns"] = matrix_to_json(mb.c);
    j["n_matrix"] = matrix_to_json(mb.nmat);
    j["a_matrix"] = matrix_to_json(mb.amat);
    try {
        validate_strongly_based(mb);
        j["strongly_based"] = true;
    } catch (const IntegralityFailureError& e) {
        j["strongly_based"] = false;
        j["integrality_witness"] = {{"row", e.row}, {"col", e.col}, {"entry", e.entry}};
        std::vector<Int> d = rescale_factors(mb);
        Json factors = Json::array();
        for (const auto& f : d) factors.push_back(f.get_si());
        j["rescale_factors"] = factors;
        MalcevBasis scaled = rescale_to_integral(mb);
        j["rescaled_strongly_based"] = is_strongly_based(scaled);
        j["rescaled_a_matrix"] = matrix_to_json(scaled.amat);
    }
    return j;
}

Json run_spectrum(const LieAlgebra& g, long height) {
    PreparedAlgebra prep = prepare(g);
    Json j;
    j["dim"] = g.n;
    j["height"] = height;
    j["rescaled"] = prep.rescaled;
    if (prep.rescaled) {
        Json factors = Json::array();
        for (const auto& f : prep.rescale) factors.push_back(f.get_si());
        j["rescale_factors"] = factors;
    }
    j["entries"] = spectrum_to_json(enumerate_spectrum(prep.setting, height));
    return j;
}

std::vector<ZVec> sigma_list(const NilSetting& s, long height) {
    std::vector<ZVec> out;
    long side = 2 * height + 1, total = 1;
    for (int i = 0; i < s.mdim(); ++i) total *= side;
    for (long flat = 0; flat < total; ++flat) {
        ZVec v(s.mdim());
        long fl = flat;
        for (int i = s.mdim() - 1; i >= 0; --i) {
            v[i] = fl % side - height;
            fl /= side;
        }
        if (in_gen(s, v) && is_canonical_rep(s, v)) out.push_back(std::move(v));
    }
    return out;
}

namespace {

Cplx random_coeff(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return {u(rng), u(rng)};
}

ZVec random_nongen(const NilSetting& s, long height, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> u(-height, height);
    ZVec l(s.n, Int(0));
    for (int i = s.p; i < s.n; ++i) l[i] = u(rng);
    return l;
}

}  // namespace

TestFunction random_test_function(const NilSetting& s, const TestFamilyConfig& cfg,
                                  std::mt19937_64& rng) {
    std::vector<ZVec> sigmas = sigma_list(s, cfg.sigma_height);
    std::uniform_int_distribution<int> nblocks(1, cfg.max_blocks);
    std::uniform_int_distribution<int> nchars(0, cfg.max_chars);
    std::uniform_int_distribution<int> degree(0, cfg.max_degree);
    std::uniform_int_distribution<int> radius(1, cfg.max_radius);
    std::uniform_int_distribution<size_t> pick(0, sigmas.size() - 1);

    std::vector<ThetaBlock> blocks;
    int nb = nblocks(rng);
    for (int b = 0; b < nb; ++b) {
        ThetaBlock tb;
        tb.l = sigmas[pick(rng)];
        tb.radius = radius(rng);
        int deg = degree(rng);
        for (int k = -deg; k <= deg; ++k)
            tb.coeffs.push_back(random_coeff(rng) * std::exp(-0.5 * k * k));
        blocks.push_back(std::move(tb));
    }
    std::vector<CharTerm> chars;
    int nc = nchars(rng);
    for (int c = 0; c < nc; ++c) chars.push_back({random_nongen(s, cfg.char_height, rng), random_coeff(rng)});
    return make_test_function(s, std::move(blocks), std::move(chars));
}

std::vector<TestFunction> make_test_family(const NilSetting& s, const TestFamilyConfig& cfg,
                                           std::mt19937_64& rng) {
    std::vector<TestFunction> fam;
    for (int i = 0; i < cfg.count; ++i) fam.push_back(random_test_function(s, cfg, rng));
    return fam;
}

GroupElement random_rational_element(const NilSetting& s, int max_num, int max_den,
                                     std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    auto draw = [&]() {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        return q;
    };
    GroupElement g;
    g.t = draw();
    for (int i = 0; i < s.mdim(); ++i) g.x.push_back(draw());
    return g;
}

GroupElement random_lattice_element(const NilSetting& s, int bound, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-bound, bound);
    GroupElement g;
    g.t = num(rng);
    for (int i = 0; i < s.mdim(); ++i) g.x.push_back(Rational(num(rng)));
    return g;
}

ZVec random_gen_functional(const NilSetting& s, long bound, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> u(-bound, bound);
    while (true) {
        ZVec l(s.mdim());
        for (int i = 0; i < s.mdim(); ++i) l[i] = u(rng);
        if (in_gen(s, l)) return l;
    }
}

namespace {

struct CheckRow {
    std::string name;
    std::string params;
    double discrepancy;
    double tol;
    bool pass;
    std::string error;
};

Json to_json(const std::vector<CheckRow>& rows, bool& all_pass) {
    Json checks = Json::array();
    all_pass = true;
    for (const auto& r : rows) {
        Json one;
        one["name"] = r.name;
        one["params"] = r.params;
        one["discrepancy"] = r.discrepancy;
        one["tolerance"] = r.tol;
        one["pass"] = r.pass;
        if (!r.error.empty()) one["error"] = r.error;
        checks.push_back(one);
        all_pass = all_pass && r.pass;
    }
    return checks;
}

}  // namespace

Json run_verify(const LieAlgebra& g, const RunConfig& cfg, bool& all_pass) {
    PreparedAlgebra prep = prepare(g);
    const NilSetting& set = prep.setting;
    std::mt19937_64 rng(cfg.seed);
    double tol = cfg.tol;

    std::vector<CheckRow> rows;
    auto guarded = [&](const std::string& name, const std::string& params, double tolerance,
                       auto&& body) {
        CheckRow row{name, params, 0.0, tolerance, false, ""};
        try {
            row.discrepancy = body();
            row.pass = row.discrepancy <= tolerance;
        } catch (const Error& e) {
            row.error = e.what();
            row.pass = false;
        }
        rows.push_back(row);
    };

    // 1. Exactness of the uniform grid on lattice characters.
    guarded("quadrature_exactness", "20 seeded characters, grid 7", 1e-12, [&] {
        std::uniform_int_distribution<long> u(-3, 3);
        double worst = 0;
        for (int i = 0; i < 20; ++i) {
            std::vector<long> freq(size_t(set.mdim()));
            bool zero = true;
            for (auto& f : freq) {
                f = u(rng);
                if (f != 0) zero = false;
            }
            Cplx v = grid_mean_terms({set.mdim(), 7}, {{1.0, freq}}, true);
            worst = std::max(worst, std::abs(v - (zero ? Cplx(1) : Cplx(0))));
        }
        return worst;
    });

    // 2. chi_l(gamma) = 1 for nongen l: exact rational phase membership in Z.
    guarded("character_lattice_triviality", "50 seeded (l, gamma)", 0.0, [&] {
        int bad = 0;
        for (int i = 0; i < 50; ++i) {
            ZVec l = random_nongen(set, 3, rng);
            GroupElement gamma = random_lattice_element(set, 5, rng);
            DualFunctional lf;
            for (const auto& v : l) lf.coords.push_back(Rational(v));
            if (!is_integer(character_phase(set, lf, gamma))) ++bad;
        }
        return double(bad);
    });

    TestFamilyConfig fam_cfg;
    std::vector<TestFunction> family = make_test_family(set, fam_cfg, rng);
    long hmax = 1;
    for (const auto& f : family) hmax = std::max(hmax, f.height());
    int grid = cfg.grid;  // 0: every quadrature uses its exact-degree grid

    // 3. Gamma-periodicity of the V-built test functions.
    guarded("gamma_periodicity", "family x 50 seeded (g, gamma)", 1e-12, [&] {
        double worst = 0;
        for (const auto& f : family)
            for (int i = 0; i < 50 / int(family.size()) + 1; ++i) {
                GroupElement g0 = random_rational_element(set, 3, 3, rng);
                GroupElement gamma = random_lattice_element(set, 3, rng);
                worst = std::max(worst, periodicity_defect(set, f, g0, gamma));
            }
        return worst;
    });

    // 4. Covariance of the U-outputs on the induced components.
    guarded("u_covariance", "family, 3 samples each", tol, [&] {
        double worst = 0;
        for (const auto& f : family) {
            if (f.blocks.empty()) continue;
            const ZVec& sig = f.blocks.front().l;
            DualFunctional lf;
            for (const auto& v : sig) lf.coords.push_back(Rational(v));
            lf.restricted_to_m = true;
            for (int i = 0; i < 3; ++i) {
                GroupElement g0 = random_rational_element(set, 2, 2, rng);
                GroupElement m0 = random_rational_element(set, 2, 2, rng);
                m0.t = 0;
                Cplx left = apply_u(set, f, lf, multiply(set, g0, m0), grid);
                Cplx right = std::conj(character(set, lf, m0)) * apply_u(set, f, lf, g0, grid);
                worst = std::max(worst, std::abs(left - right));
            }
        }
        return worst;
    });

    // 5-7. Operator-level checks: isometry, diagram, inversion.
    guarded("isometry", "family, height " + std::to_string(hmax), tol, [&] {
        double worst = 0;
        for (const auto& f : family)
            worst = std::max(worst, check_isometry(set, f, grid, hmax).discrepancy);
        return worst;
    });
    guarded("intertwining", "family x 3 translations x 3 samples", tol, [&] {
        double worst = 0;
        for (const auto& f : family) {
            std::vector<GroupElement> pts;
            for (int i = 0; i < 3; ++i) pts.push_back(random_rational_element(set, 2, 2, rng));
            for (int i = 0; i < 3; ++i) {
                GroupElement a = random_rational_element(set, 2, 2, rng);
                worst = std::max(worst, check_intertwining(set, f, a, pts, grid));
            }
        }
        return worst;
    });
    guarded("inversion", "family, 5 samples", tol, [&] {
        double worst = 0;
        for (const auto& f : family) {
            std::vector<GroupElement> pts;
            for (int i = 0; i < 5; ++i) pts.push_back(random_rational_element(set, 2, 2, rng));
            InverseReport rep = check_inverse(set, f, f, grid, pts);
            worst = std::max(worst, std::max(rep.uv_discrepancy, rep.vu_discrepancy));
        }
        return worst;
    });

    // 8. Lattice invariance of gen under the Gamma-action.
    guarded("lattice_invariance", "200 seeded (l, shift)", 0.0, [&] {
        std::uniform_int_distribution<long> shift(-5, 5);
        int bad = 0;
        for (int i = 0; i < 200; ++i) {
            ZVec l = random_gen_functional(set, 5, rng);
            ZVec moved = gamma_orbit_map(set, l, Int(shift(rng)));
            if (!in_gen(set, moved)) ++bad;
        }
        return double(bad);
    });

    Json j;
    j["seed"] = cfg.seed;
    j["grid"] = grid;
    j["tolerance"] = tol;
    j["rescaled"] = prep.rescaled;
    j["checks"] = to_json(rows, all_pass);
    j["all_pass"] = all_pass;
    return j;
}

}  // namespace nilharm
