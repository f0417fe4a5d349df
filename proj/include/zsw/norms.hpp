#pragma once

// Discrete norms and inner products. The L2 norm is the rectangle rule on the
// torus, (sum |f|^2 dx^2)^{1/2}; Sobolev norms weight the spectrum by
// (1+|xi|^2)^{s/2} with Parseval-consistent normalization, so s = 0
// reproduces the discrete L2 norm exactly.

#include <cmath>

#include "zsw/fft.hpp"
#include "zsw/field.hpp"

namespace zsw {

inline double l2_norm(const RealField& f) {
    double s = 0.0;
    for (double x : f.v) s += x * x;
    return f.grid.dx * std::sqrt(s);
}

inline double l2_norm(const ComplexField& f) {
    double s = 0.0;
    for (const cplx& x : f.v) s += std::norm(x);
    return f.grid.dx * std::sqrt(s);
}

inline double inner(const RealField& a, const RealField& b) {
    check_same_grid(a.grid, b.grid, "inner");
    double s = 0.0;
    for (std::size_t k = 0; k < a.v.size(); ++k) s += a.v[k] * b.v[k];
    return a.grid.dx * a.grid.dx * s;
}

inline double sobolev_norm(const Spectrum& s, double sexp) {
    if (sexp < 0.0) throw std::invalid_argument("sobolev_norm: s must be >= 0");
    const Grid2D& g = s.grid;
    double acc = 0.0;
    for (int k1 = 0; k1 < g.n; ++k1) {
        const double xi1 = g.freq(k1);
        for (int k2 = 0; k2 < g.n; ++k2) {
            const double xi2 = g.freq(k2);
            const double w = std::pow(1.0 + xi1 * xi1 + xi2 * xi2, sexp);
            acc += w * std::norm(s.a[g.idx(k1, k2)]);
        }
    }
    // |continuum coefficient|^2 = dx^4 |a_k|^2; measure dxi^2/(2pi)^2 = 1/L^2
    return (g.dx / g.n) * std::sqrt(acc);
}

inline double sobolev_norm(const RealField& f, double sexp) {
    if (!all_finite(f)) throw std::invalid_argument("sobolev_norm: non-finite input");
    return sobolev_norm(analyze(f), sexp);
}

inline double sobolev_norm(const ComplexField& f, double sexp) {
    if (!all_finite(f)) throw std::invalid_argument("sobolev_norm: non-finite input");
    return sobolev_norm(analyze(f), sexp);
}

}  // namespace zsw
