#pragma once

// Grid-sampled scalar fields. values are row-major: v[i*N + j] samples the
// point (y1, y2) = (coord(i), coord(j)). Fields are plain value types; all
// operations elsewhere are pure functions of their inputs.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "zsw/grid.hpp"

namespace zsw {

using cplx = std::complex<double>;

struct RealField {
    Grid2D grid;
    std::vector<double> v;

    RealField() = default;
    explicit RealField(const Grid2D& g) : grid(g), v(g.size(), 0.0) {}

    double& at(int i, int j) { return v[grid.idx(i, j)]; }
    double at(int i, int j) const { return v[grid.idx(i, j)]; }
};

struct ComplexField {
    Grid2D grid;
    std::vector<cplx> v;

    ComplexField() = default;
    explicit ComplexField(const Grid2D& g) : grid(g), v(g.size(), cplx{0.0, 0.0}) {}

    cplx& at(int i, int j) { return v[grid.idx(i, j)]; }
    cplx at(int i, int j) const { return v[grid.idx(i, j)]; }
};

inline RealField make_field(const Grid2D& g, const std::function<double(double, double)>& f) {
    RealField out(g);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) out.at(i, j) = f(g.coord(i), g.coord(j));
    return out;
}

inline ComplexField make_complex_field(const Grid2D& g,
                                       const std::function<cplx(double, double)>& f) {
    ComplexField out(g);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) out.at(i, j) = f(g.coord(i), g.coord(j));
    return out;
}

inline void check_same_grid(const Grid2D& a, const Grid2D& b, const char* who) {
    if (!(a == b)) throw std::invalid_argument(std::string(who) + ": grid mismatch");
}

inline double max_abs(const RealField& f) {
    double m = 0.0;
    for (double x : f.v) m = std::max(m, std::abs(x));
    return m;
}

inline double max_abs(const ComplexField& f) {
    double m = 0.0;
    for (const cplx& x : f.v) m = std::max(m, std::abs(x));
    return m;
}

inline bool all_finite(const RealField& f) {
    return std::all_of(f.v.begin(), f.v.end(), [](double x) { return std::isfinite(x); });
}

inline bool all_finite(const ComplexField& f) {
    return std::all_of(f.v.begin(), f.v.end(),
                       [](const cplx& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); });
}

// a*x + y
inline RealField axpy(double a, const RealField& x, const RealField& y) {
    check_same_grid(x.grid, y.grid, "axpy");
    RealField out(x.grid);
    for (std::size_t k = 0; k < x.v.size(); ++k) out.v[k] = a * x.v[k] + y.v[k];
    return out;
}

inline RealField scaled(const RealField& x, double a) {
    RealField out(x.grid);
    for (std::size_t k = 0; k < x.v.size(); ++k) out.v[k] = a * x.v[k];
    return out;
}

inline RealField operator+(const RealField& a, const RealField& b) { return axpy(1.0, a, b); }

inline RealField operator-(const RealField& a, const RealField& b) {
    check_same_grid(a.grid, b.grid, "operator-");
    RealField out(a.grid);
    for (std::size_t k = 0; k < a.v.size(); ++k) out.v[k] = a.v[k] - b.v[k];
    return out;
}

inline RealField operator*(const RealField& a, const RealField& b) {
    check_same_grid(a.grid, b.grid, "operator*");
    RealField out(a.grid);
    for (std::size_t k = 0; k < a.v.size(); ++k) out.v[k] = a.v[k] * b.v[k];
    return out;
}

inline RealField abs_field(const ComplexField& f) {
    RealField out(f.grid);
    for (std::size_t k = 0; k < f.v.size(); ++k) out.v[k] = std::abs(f.v[k]);
    return out;
}

inline RealField real_part(const ComplexField& f) {
    RealField out(f.grid);
    for (std::size_t k = 0; k < f.v.size(); ++k) out.v[k] = f.v[k].real();
    return out;
}

inline RealField imag_part(const ComplexField& f) {
    RealField out(f.grid);
    for (std::size_t k = 0; k < f.v.size(); ++k) out.v[k] = f.v[k].imag();
    return out;
}

}  // namespace zsw
