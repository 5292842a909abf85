#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace nilharm {

// One lattice-character summand of a torus integrand:
// value at grid node j is coef * e^{2 pi i <freq, j> / size}.
struct GridTerm {
    std::complex<double> coef;
    std::vector<long> freq;
};

// Uniform product grid {0,...,size-1}^dims / size on the torus.
struct GridSpec {
    int dims;
    int size;
    long points() const {
        long t = 1;
        for (int i = 0; i < dims; ++i) t *= size;
        return t;
    }
};

long max_abs_freq(const std::vector<GridTerm>& terms);

// Mean over the grid of the term sum. Node values land in a buffer (parallel
// fill over OpenMP threads) and are reduced pairwise in a fixed order, so the
// result is bitwise independent of the thread count.
std::complex<double> grid_mean_terms(const GridSpec& grid, const std::vector<GridTerm>& terms,
                                     bool parallel = true);
std::complex<double> grid_mean_terms_serial(const GridSpec& grid, const std::vector<GridTerm>& terms);

// Mean of |term sum|^2 over the grid.
double grid_mean_abs2(const GridSpec& grid, const std::vector<GridTerm>& terms, bool parallel = true);
double grid_mean_abs2_serial(const GridSpec& grid, const std::vector<GridTerm>& terms);

// Mean of f over the grid for integrands without flat character structure
// (translated arguments); f receives the node coordinates in [0,1)^dims.
using NodeFunction = std::function<std::complex<double>(const std::vector<double>&)>;
std::complex<double> grid_mean_nodes(const GridSpec& grid, const NodeFunction& f, bool parallel = true);

// Pairwise reduction used by all kernels; exposed for the benchmark.
std::complex<double> pairwise_sum(std::vector<std::complex<double>>& buf);

}  // namespace nilharm
