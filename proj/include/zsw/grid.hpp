#pragma once

// Periodic square grid on [-L/2, L/2)^2 with N samples per axis.
//
// Conventions used throughout:
//   * sample i corresponds to coordinate y_i = -L/2 + i*dx, so (0,0) is the
//     sample at index (N/2, N/2);
//   * the discrete frequency for FFT index k is xi_k = 2*pi*kk/L with
//     kk = k for k < N/2 and kk = k - N otherwise (centered lattice);
//   * reflection y -> -y is the exact index permutation i -> (N - i) mod N.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace zsw {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

struct Grid2D {
    int n = 0;         // samples per axis, even
    double box = 0.0;  // physical period L
    double dx = 0.0;   // L / N

    double coord(int i) const { return -0.5 * box + i * dx; }

    // centered integer index for FFT bin k
    int kindex(int k) const { return k < n / 2 ? k : k - n; }

    double freq(int k) const { return two_pi * kindex(k) / box; }

    // index of the reflected sample, exact on the periodic lattice
    int mirror(int i) const { return i == 0 ? 0 : n - i; }

    std::size_t size() const { return static_cast<std::size_t>(n) * n; }
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n + j; }

    double radius(int i, int j) const {
        const double a = coord(i), b = coord(j);
        return std::sqrt(a * a + b * b);
    }

    bool operator==(const Grid2D&) const = default;
};

inline Grid2D make_grid(int n_points, double box_length) {
    if (n_points < 16 || n_points % 2 != 0)
        throw std::invalid_argument("make_grid: n_points must be even and >= 16, got " +
                                    std::to_string(n_points));
    if (!(box_length > 0.0))
        throw std::invalid_argument("make_grid: box_length must be positive");
    Grid2D g;
    g.n = n_points;
    g.box = box_length;
    g.dx = box_length / n_points;
    return g;
}

}  // namespace zsw
