// Benchmark of the OpenMP kernels against their serial reference
// implementations, verifying that results agree bitwise.

#include <chrono>
#include <cstdio>
#include <random>

#include "nilharm/analysis.hpp"

using namespace nilharm;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n", name, serial_ms,
                parallel_ms, serial_ms / parallel_ms, equal ? "results equal" : "RESULTS DIFFER");
}

}  // namespace

int main() {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> freq(-40, 40);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);

    {
        GridSpec grid{3, 101};  // ~1.03M nodes
        std::vector<GridTerm> terms;
        for (int i = 0; i < 64; ++i)
            terms.push_back({{amp(rng), amp(rng)}, {freq(rng), freq(rng), freq(rng)}});
        auto t0 = Clock::now();
        Cplx serial = grid_mean_terms_serial(grid, terms);
        double s_ms = ms_since(t0);
        t0 = Clock::now();
        Cplx parallel = grid_mean_terms(grid, terms, true);
        double p_ms = ms_since(t0);
        report("grid_mean_terms 101^3x64", s_ms, p_ms, serial == parallel);
    }
    {
        GridSpec grid{4, 33};  // ~1.19M nodes
        std::vector<GridTerm> terms;
        for (int i = 0; i < 48; ++i)
            terms.push_back({{amp(rng), amp(rng)}, {freq(rng), freq(rng), freq(rng), freq(rng)}});
        auto t0 = Clock::now();
        double serial = grid_mean_abs2_serial(grid, terms);
        double s_ms = ms_since(t0);
        t0 = Clock::now();
        double parallel = grid_mean_abs2(grid, terms, true);
        double p_ms = ms_since(t0);
        report("grid_mean_abs2 33^4x48", s_ms, p_ms, serial == parallel);
    }
    {
        PreparedAlgebra h3 = prepare(catalog_entry("h3").algebra);
        auto t0 = Clock::now();
        auto serial = enumerate_spectrum_serial(h3.setting, 60);
        double s_ms = ms_since(t0);
        t0 = Clock::now();
        auto parallel = enumerate_spectrum(h3.setting, 60);
        double p_ms = ms_since(t0);
        report("enumerate_spectrum h3 H=60", s_ms, p_ms, serial == parallel);
    }
    {
        PreparedAlgebra fil = prepare(catalog_entry("filiform4").algebra);
        auto t0 = Clock::now();
        auto serial = enumerate_spectrum_serial(fil.setting, 8);
        double s_ms = ms_since(t0);
        t0 = Clock::now();
        auto parallel = enumerate_spectrum(fil.setting, 8);
        double p_ms = ms_since(t0);
        report("enumerate_spectrum fil4 H=8", s_ms, p_ms, serial == parallel);
    }
    return 0;
}
