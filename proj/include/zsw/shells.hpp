#pragma once

// Radial shells of |field| maxima. The pointwise decay estimates are fitted
// against shell maxima, not means.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "zsw/field.hpp"

namespace zsw {

struct Shell {
    double r;
    double max_abs;
};

inline std::vector<Shell> shell_maxima(const RealField& f, double r_min, double r_max,
                                       int min_shells = 50) {
    const Grid2D& g = f.grid;
    if (!(r_max > r_min)) throw std::invalid_argument("shell_maxima: empty annulus");
    if (r_max > 0.5 * g.box - 2.0 + 1e-12)
        throw std::invalid_argument("shell_maxima: r_max exceeds the safe region L/2 - 2");
    const int n_shells = std::max(min_shells, static_cast<int>((r_max - r_min) / g.dx));
    const double w = (r_max - r_min) / n_shells;

    std::vector<Shell> shells(n_shells);
    for (int s = 0; s < n_shells; ++s) shells[s] = {r_min + (s + 0.5) * w, 0.0};
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            const double r = g.radius(i, j);
            if (r < r_min || r >= r_max) continue;
            const int s = static_cast<int>((r - r_min) / w);
            shells[s].max_abs = std::max(shells[s].max_abs, std::abs(f.at(i, j)));
        }

    std::vector<Shell> out;
    for (const Shell& s : shells)
        if (s.max_abs > 0.0) out.push_back(s);
    if (static_cast<int>(out.size()) < min_shells)
        throw std::runtime_error("shell_maxima: fewer than the required number of shells");
    return out;
}

struct LineFit {
    double slope;
    double intercept;
    double rms;
};

inline LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 2) throw std::invalid_argument("least_squares: need at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double det = n * sxx - sx * sx;
    LineFit fit;
    fit.slope = (n * sxy - sx * sy) / det;
    fit.intercept = (sy - fit.slope * sx) / n;
    double acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = y[i] - fit.slope * x[i] - fit.intercept;
        acc += e * e;
    }
    fit.rms = std::sqrt(acc / n);
    return fit;
}

}  // namespace zsw
