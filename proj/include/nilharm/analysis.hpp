#pragma once

#include <random>
#include <string>

#include "nilharm/catalog.hpp"
#include "nilharm/intertwiner.hpp"
#include "nilharm/json_io.hpp"

namespace nilharm {

struct RunConfig {
    std::string command;
    std::string input_path;
    std::string example;
    long height = 3;
    int grid = 0;  // 0: sized from the degree bookkeeping
    double tol = 1e-9;
    unsigned long seed = 1;
    bool pretty = false;
    std::string out_path;
};

// Structure report: metabelian flag, canonical blocks, ideal uniqueness, the
// chosen m, the Malcev basis, and the strongly-based verdict with a rescale
// suggestion when the standard lattice fails.
Json run_analyze(const LieAlgebra& g);

Json run_spectrum(const LieAlgebra& g, long height);

// Verification suite; all_pass mirrors the per-check pass flags.
Json run_verify(const LieAlgebra& g, const RunConfig& cfg, bool& all_pass);

// Seeded generators shared by the verify command and the acceptance suite.
struct TestFamilyConfig {
    int count = 6;
    int max_blocks = 2;
    int max_chars = 2;
    int max_degree = 2;
    int max_radius = 1;
    long sigma_height = 1;
    long char_height = 1;
};

std::vector<ZVec> sigma_list(const NilSetting& s, long height);
TestFunction random_test_function(const NilSetting& s, const TestFamilyConfig& cfg, std::mt19937_64& rng);
std::vector<TestFunction> make_test_family(const NilSetting& s, const TestFamilyConfig& cfg,
                                           std::mt19937_64& rng);
GroupElement random_rational_element(const NilSetting& s, int max_num, int max_den, std::mt19937_64& rng);
GroupElement random_lattice_element(const NilSetting& s, int bound, std::mt19937_64& rng);
ZVec random_gen_functional(const NilSetting& s, long bound, std::mt19937_64& rng);

}  // namespace nilharm
