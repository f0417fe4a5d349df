#pragma once

// Discrete Fourier transform contract.
//
// A Spectrum holds unnormalized forward FFT coefficients in FFTW index order.
// The continuum Fourier coefficient of mode xi_k is dx^2 * (-1)^(k1+k2) * a[k]
// (the sign accounts for the grid being centered at the origin); norms and
// pointwise symbol multiplication never need that phase, so it is not applied.
//
// inverse(forward(f)) == f up to rounding. Plans are cached per thread; FFTW
// plan creation is serialized behind a global mutex, so all entry points are
// safe to call concurrently on distinct inputs.

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

#include "zsw/field.hpp"
#include "zsw/grid.hpp"

namespace zsw {

struct Spectrum {
    Grid2D grid;
    std::vector<cplx> a;  // FFTW order, unnormalized forward coefficients

    Spectrum() = default;
    explicit Spectrum(const Grid2D& g) : grid(g), a(g.size(), cplx{0.0, 0.0}) {}

    cplx& at(int k1, int k2) { return a[grid.idx(k1, k2)]; }
    cplx at(int k1, int k2) const { return a[grid.idx(k1, k2)]; }
};

namespace detail {

inline std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

class PlanCache {
public:
    ~PlanCache() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        for (auto& [n, p] : fwd_) fftw_destroy_plan(p);
        for (auto& [n, p] : bwd_) fftw_destroy_plan(p);
        if (buf_) fftw_free(buf_);
    }

    void execute(int n, const cplx* in, cplx* out, bool forward) {
        ensure(n);
        fftw_complex* b = buf_;
        for (std::size_t k = 0; k < std::size_t(n) * n; ++k) {
            b[k][0] = in[k].real();
            b[k][1] = in[k].imag();
        }
        fftw_execute(forward ? fwd_[n] : bwd_[n]);
        for (std::size_t k = 0; k < std::size_t(n) * n; ++k) out[k] = cplx(b[k][0], b[k][1]);
    }

private:
    void ensure(int n) {
        if (fwd_.count(n)) return;
        std::lock_guard<std::mutex> lock(planner_mutex());
        const std::size_t need = std::size_t(n) * n;
        if (need > cap_) {
            if (buf_) fftw_free(buf_);
            buf_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * need));
            cap_ = need;
            // existing plans reference the old buffer; rebuild them
            for (auto& [m, p] : fwd_) fftw_destroy_plan(p);
            for (auto& [m, p] : bwd_) fftw_destroy_plan(p);
            std::vector<int> sizes;
            for (auto& [m, p] : fwd_) sizes.push_back(m);
            fwd_.clear();
            bwd_.clear();
            for (int m : sizes) plan(m);
        }
        plan(n);
    }

    void plan(int n) {
        if (fwd_.count(n)) return;
        fwd_[n] = fftw_plan_dft_2d(n, n, buf_, buf_, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd_[n] = fftw_plan_dft_2d(n, n, buf_, buf_, FFTW_BACKWARD, FFTW_ESTIMATE);
    }

    std::map<int, fftw_plan> fwd_, bwd_;
    fftw_complex* buf_ = nullptr;
    std::size_t cap_ = 0;
};

inline PlanCache& plan_cache() {
    thread_local PlanCache cache;
    return cache;
}

}  // namespace detail

inline Spectrum analyze(const ComplexField& f) {
    Spectrum s(f.grid);
    detail::plan_cache().execute(f.grid.n, f.v.data(), s.a.data(), true);
    return s;
}

inline Spectrum analyze(const RealField& f) {
    ComplexField c(f.grid);
    for (std::size_t k = 0; k < f.v.size(); ++k) c.v[k] = f.v[k];
    return analyze(c);
}

inline ComplexField synthesize_complex(const Spectrum& s) {
    ComplexField f(s.grid);
    detail::plan_cache().execute(s.grid.n, s.a.data(), f.v.data(), false);
    const double inv = 1.0 / double(s.grid.size());
    for (cplx& x : f.v) x *= inv;
    return f;
}

// Inverse transform of a spectrum that should represent a real field.
// If imag_residue is non-null it receives max |Im| of the synthesis, which for
// a real even symbol applied to a real field stays at rounding level.
inline RealField synthesize_real(const Spectrum& s, double* imag_residue = nullptr) {
    ComplexField f = synthesize_complex(s);
    RealField out(s.grid);
    double resid = 0.0;
    for (std::size_t k = 0; k < f.v.size(); ++k) {
        out.v[k] = f.v[k].real();
        resid = std::max(resid, std::abs(f.v[k].imag()));
    }
    if (imag_residue) *imag_residue = resid;
    return out;
}

// Pointwise multiplication by a symbol evaluated on the frequency lattice.
template <typename Symbol>
inline Spectrum apply_symbol(const Spectrum& s, Symbol&& sym) {
    Spectrum out(s.grid);
    const int n = s.grid.n;
    for (int k1 = 0; k1 < n; ++k1) {
        const double xi1 = s.grid.freq(k1);
        for (int k2 = 0; k2 < n; ++k2) {
            const double xi2 = s.grid.freq(k2);
            out.a[s.grid.idx(k1, k2)] = sym(xi1, xi2) * s.a[s.grid.idx(k1, k2)];
        }
    }
    return out;
}

// First derivative along axis (0 or 1); the Nyquist row of the differentiated
// axis is zeroed (an odd symbol has no consistent value there).
inline Spectrum derivative_spectrum(const Spectrum& s, int axis) {
    Spectrum out(s.grid);
    const int n = s.grid.n;
    for (int k1 = 0; k1 < n; ++k1) {
        const double xi1 = s.grid.freq(k1);
        for (int k2 = 0; k2 < n; ++k2) {
            const double xi2 = s.grid.freq(k2);
            const double xi = axis == 0 ? xi1 : xi2;
            const int k = axis == 0 ? k1 : k2;
            cplx w = (k == n / 2) ? cplx{0.0, 0.0} : cplx{0.0, xi};
            out.a[s.grid.idx(k1, k2)] = w * s.a[s.grid.idx(k1, k2)];
        }
    }
    return out;
}

inline RealField derivative(const RealField& f, int m1, int m2) {
    Spectrum s = analyze(f);
    for (int r = 0; r < m1; ++r) s = derivative_spectrum(s, 0);
    for (int r = 0; r < m2; ++r) s = derivative_spectrum(s, 1);
    return synthesize_real(s);
}

inline ComplexField derivative(const ComplexField& f, int m1, int m2) {
    Spectrum s = analyze(f);
    for (int r = 0; r < m1; ++r) s = derivative_spectrum(s, 0);
    for (int r = 0; r < m2; ++r) s = derivative_spectrum(s, 1);
    return synthesize_complex(s);
}

inline Spectrum laplacian_spectrum(const Spectrum& s) {
    return apply_symbol(s, [](double xi1, double xi2) { return -(xi1 * xi1 + xi2 * xi2); });
}

inline RealField laplacian(const RealField& f) { return synthesize_real(laplacian_spectrum(analyze(f))); }

inline ComplexField laplacian(const ComplexField& f) {
    return synthesize_complex(laplacian_spectrum(analyze(f)));
}

// (1 - Delta)^{-1}, used as smoother and preconditioner
inline RealField helmholtz_inverse(const RealField& f) {
    Spectrum s = analyze(f);
    s = apply_symbol(s, [](double xi1, double xi2) { return 1.0 / (1.0 + xi1 * xi1 + xi2 * xi2); });
    return synthesize_real(s);
}

// Translate a field by a real offset via the shift theorem (trigonometric
// interpolation off the lattice).
inline RealField shift_field(const RealField& f, double d1, double d2) {
    Spectrum s = analyze(f);
    const int n = f.grid.n;
    for (int k1 = 0; k1 < n; ++k1) {
        const double xi1 = f.grid.freq(k1);
        for (int k2 = 0; k2 < n; ++k2) {
            const double xi2 = f.grid.freq(k2);
            s.a[f.grid.idx(k1, k2)] *= std::exp(cplx(0.0, -(xi1 * d1 + xi2 * d2)));
        }
    }
    return synthesize_real(s);
}

// 2/3-rule spectral truncation.
inline RealField dealias_23(const RealField& f) {
    Spectrum s = analyze(f);
    const int n = f.grid.n;
    const int kc = n / 3;
    for (int k1 = 0; k1 < n; ++k1)
        for (int k2 = 0; k2 < n; ++k2)
            if (std::abs(f.grid.kindex(k1)) > kc || std::abs(f.grid.kindex(k2)) > kc)
                s.a[f.grid.idx(k1, k2)] = 0.0;
    return synthesize_real(s);
}

}  // namespace zsw
