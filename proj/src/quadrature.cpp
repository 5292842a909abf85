#include "nilharm/quadrature.hpp"

#include <cmath>
#include <cstdlib>

namespace nilharm {

namespace {

std::vector<std::complex<double>> unit_roots(int size) {
    std::vector<std::complex<double>> roots(size);
    for (int r = 0; r < size; ++r) {
        double a = 2.0 * M_PI * r / size;
        roots[r] = {std::cos(a), std::sin(a)};
    }
    return roots;
}

inline std::complex<double> node_value(const GridSpec& grid, const std::vector<GridTerm>& terms,
                                       const std::vector<std::complex<double>>& roots, long flat) {
    // Decode the node index once, then each term costs one integer dot product.
    int idx[16];
    long f = flat;
    for (int i = grid.dims - 1; i >= 0; --i) {
        idx[i] = int(f % grid.size);
        f /= grid.size;
    }
    std::complex<double> acc = 0;
    for (const auto& term : terms) {
        long d = 0;
        for (int i = 0; i < grid.dims; ++i) d += term.freq[i] * idx[i];
        long r = d % grid.size;
        if (r < 0) r += grid.size;
        acc += term.coef * roots[size_t(r)];
    }
    return acc;
}

}  // namespace

long max_abs_freq(const std::vector<GridTerm>& terms) {
    long m = 0;
    for (const auto& t : terms)
        for (long f : t.freq) m = std::max(m, std::labs(f));
    return m;
}

std::complex<double> pairwise_sum(std::vector<std::complex<double>>& buf) {
    if (buf.empty()) return 0;
    size_t len = buf.size();
    while (len > 1) {
        size_t half = len / 2;
        for (size_t i = 0; i < half; ++i) buf[i] = buf[2 * i] + buf[2 * i + 1];
        if (len % 2) {
            buf[half] = buf[len - 1];
            ++half;
        }
        len = half;
    }
    return buf[0];
}

namespace {

template <class Fill>
std::complex<double> mean_with_buffer(long total, bool parallel, Fill&& fill) {
    std::vector<std::complex<double>> buf(static_cast<size_t>(total));
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (long i = 0; i < total; ++i) buf[size_t(i)] = fill(i);
    } else {
        for (long i = 0; i < total; ++i) buf[size_t(i)] = fill(i);
    }
    return pairwise_sum(buf) / double(total);
}

}  // namespace

std::complex<double> grid_mean_terms(const GridSpec& grid, const std::vector<GridTerm>& terms,
                                     bool parallel) {
    auto roots = unit_roots(grid.size);
    return mean_with_buffer(grid.points(), parallel,
                            [&](long flat) { return node_value(grid, terms, roots, flat); });
}

std::complex<double> grid_mean_terms_serial(const GridSpec& grid, const std::vector<GridTerm>& terms) {
    return grid_mean_terms(grid, terms, false);
}

double grid_mean_abs2(const GridSpec& grid, const std::vector<GridTerm>& terms, bool parallel) {
    auto roots = unit_roots(grid.size);
    std::complex<double> m = mean_with_buffer(grid.points(), parallel, [&](long flat) {
        std::complex<double> v = node_value(grid, terms, roots, flat);
        return std::complex<double>(std::norm(v), 0.0);
    });
    return m.real();
}

double grid_mean_abs2_serial(const GridSpec& grid, const std::vector<GridTerm>& terms) {
    return grid_mean_abs2(grid, terms, false);
}

std::complex<double> grid_mean_nodes(const GridSpec& grid, const NodeFunction& f, bool parallel) {
    long total = grid.points();
    double h = 1.0 / grid.size;
    return mean_with_buffer(total, parallel, [&](long flat) {
        std::vector<double> x(grid.dims);
        long v = flat;
        for (int i = grid.dims - 1; i >= 0; --i) {
            x[i] = double(v % grid.size) * h;
            v /= grid.size;
        }
        return f(x);
    });
}

}  // namespace nilharm
