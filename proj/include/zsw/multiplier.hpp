#pragma once

// Fourier multipliers attached to a speed c with |c| < 1. With
// D(xi) = |xi|^2 - (c.xi)^2 >= (1-|c|^2)|xi|^2, the symbols are
//
//   S       (c.xi)^2 / D              bound |c|^2/(1-|c|^2)
//   Tj      (c.xi) xi_j / D           bound |c|/(1-|c|^2)
//   dS/dcj  2|xi|^2 (c.xi) xi_j / D^2 bound 2|c|/(1-|c|^2)^2
//
// All five symbols are real and even, so real fields map to real fields.
// The xi = 0 value is 0/0 with direction-dependent limits; the zero mode is
// set to 0, which is validated against the free-space log-kernel oracle.

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "zsw/fft.hpp"
#include "zsw/field.hpp"
#include "zsw/norms.hpp"

namespace zsw {

using Vec2 = std::array<double, 2>;

inline double norm2(const Vec2& c) { return std::sqrt(c[0] * c[0] + c[1] * c[1]); }

enum class MultiplierKind { S, T1, T2, dS_dc1, dS_dc2 };

struct MultiplierSpec {
    MultiplierKind kind;
    Vec2 c;

    MultiplierSpec(MultiplierKind k, Vec2 speed) : kind(k), c(speed) {
        if (norm2(c) >= 1.0)
            throw std::invalid_argument("MultiplierSpec: requires |c| < 1");
    }
    MultiplierSpec(MultiplierKind k, double c1) : MultiplierSpec(k, Vec2{c1, 0.0}) {}
};

inline double multiplier_symbol(const MultiplierSpec& spec, double xi1, double xi2) {
    const double xi_sq = xi1 * xi1 + xi2 * xi2;
    if (xi_sq == 0.0) return 0.0;
    const double cdot = spec.c[0] * xi1 + spec.c[1] * xi2;
    const double den = xi_sq - cdot * cdot;
    switch (spec.kind) {
        case MultiplierKind::S: return cdot * cdot / den;
        case MultiplierKind::T1: return cdot * xi1 / den;
        case MultiplierKind::T2: return cdot * xi2 / den;
        case MultiplierKind::dS_dc1: return 2.0 * xi_sq * cdot * xi1 / (den * den);
        default: return 2.0 * xi_sq * cdot * xi2 / (den * den);
    }
}

// Supremum of |symbol| over all of R^2 \ {0}.
inline double multiplier_norm_bound(const MultiplierSpec& spec) {
    const double c = norm2(spec.c);
    const double om = 1.0 - c * c;
    switch (spec.kind) {
        case MultiplierKind::S: return c * c / om;
        case MultiplierKind::T1:
        case MultiplierKind::T2: return c / om;
        default: return 2.0 * c / (om * om);
    }
}

// The Nyquist rows are zeroed: the index -N/2 is its own mirror with a single
// signed frequency, so a symbol that is not separately even in each variable
// would break the Hermitian symmetry of real fields there. Smooth fields have
// rounding-level content in those rows.
inline Spectrum apply_multiplier(const Spectrum& s, const MultiplierSpec& spec) {
    Spectrum out(s.grid);
    const int n = s.grid.n;
    for (int k1 = 0; k1 < n; ++k1) {
        const double xi1 = s.grid.freq(k1);
        for (int k2 = 0; k2 < n; ++k2) {
            if (k1 == n / 2 || k2 == n / 2) continue;
            const double xi2 = s.grid.freq(k2);
            out.a[s.grid.idx(k1, k2)] =
                multiplier_symbol(spec, xi1, xi2) * s.a[s.grid.idx(k1, k2)];
        }
    }
    return out;
}

inline RealField apply_multiplier(const RealField& f, const MultiplierSpec& spec) {
    return synthesize_real(apply_multiplier(analyze(f), spec));
}

inline ComplexField apply_multiplier(const ComplexField& f, const MultiplierSpec& spec) {
    return synthesize_complex(apply_multiplier(analyze(f), spec));
}

// max |symbol| over the nonzero modes of the grid. For kind S a grid mode
// with xi2 = 0, xi1 != 0 attains |c|^2/(1-|c|^2) exactly.
inline double multiplier_norm_certificate(const MultiplierSpec& spec, const Grid2D& g) {
    double m = 0.0;
    for (int k1 = 0; k1 < g.n; ++k1)
        for (int k2 = 0; k2 < g.n; ++k2) {
            if (k1 == 0 && k2 == 0) continue;
            m = std::max(m, std::abs(multiplier_symbol(spec, g.freq(k1), g.freq(k2))));
        }
    return m;
}

// Lipschitz-in-speed diagnostics: for a test field f and speeds c, ct,
// compares the measured H^s differences against
//   ||S_c f - S_ct f||      <= 2|c-ct| / ((1-|c|^2)(1-|ct|^2)) ||f||
//   ||dS_c f - dS_ct f||    <= 6|c-ct| / ((1-|c|^2)^2 (1-|ct|^2)^2) ||f||
// and validates the dS/dcj symbol against a centered finite difference of the
// S symbol in c (step h, O(h^2) agreement).
struct LipschitzReport {
    struct Entry {
        double s;            // Sobolev exponent
        double measured_S;   // ||S_c f - S_ct f||_{H^s}
        double bound_S;
        double measured_dS;  // max over j of ||dS_dcj(c) f - dS_dcj(ct) f||_{H^s}
        double bound_dS;
    };
    std::vector<Entry> entries;
    double fd_rel_error;  // worst relative error, dS symbol vs centered difference
    bool ok;
};

inline LipschitzReport lipschitz_in_c_check(const RealField& f, Vec2 c, Vec2 ct,
                                            double fd_step = 1e-5) {
    const double nc = norm2(c), nct = norm2(ct);
    if (nc >= 1.0 || nct >= 1.0)
        throw std::invalid_argument("lipschitz_in_c_check: requires |c|, |ct| < 1");
    const double dcnorm = std::sqrt((c[0] - ct[0]) * (c[0] - ct[0]) + (c[1] - ct[1]) * (c[1] - ct[1]));

    Spectrum sf = analyze(f);
    LipschitzReport rep;
    rep.ok = true;

    for (double s : {0.0, 2.0}) {
        LipschitzReport::Entry e;
        e.s = s;
        const double nf = sobolev_norm(sf, s);

        Spectrum d = apply_symbol(sf, [&](double x1, double x2) {
            return multiplier_symbol({MultiplierKind::S, c}, x1, x2) -
                   multiplier_symbol({MultiplierKind::S, ct}, x1, x2);
        });
        e.measured_S = sobolev_norm(d, s);
        e.bound_S = 2.0 * dcnorm / ((1.0 - nc * nc) * (1.0 - nct * nct)) * nf;

        e.measured_dS = 0.0;
        for (MultiplierKind k : {MultiplierKind::dS_dc1, MultiplierKind::dS_dc2}) {
            Spectrum dd = apply_symbol(sf, [&](double x1, double x2) {
                return multiplier_symbol({k, c}, x1, x2) - multiplier_symbol({k, ct}, x1, x2);
            });
            e.measured_dS = std::max(e.measured_dS, sobolev_norm(dd, s));
        }
        const double om = (1.0 - nc * nc) * (1.0 - nct * nct);
        e.bound_dS = 6.0 * dcnorm / (om * om) * nf;

        // floating-point headroom on an exact modewise inequality
        rep.ok = rep.ok && e.measured_S <= e.bound_S * (1.0 + 1e-12) + 1e-300 &&
                 e.measured_dS <= e.bound_dS * (1.0 + 1e-12) + 1e-300;
        rep.entries.push_back(e);
    }

    // centered finite difference of the S symbol in c_j, on a fixed bundle of
    // off-axis frequencies
    double worst = 0.0;
    const double probes[][2] = {{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {2.0, -1.0}, {0.7, 2.3}};
    for (int j = 0; j < 2; ++j) {
        for (auto& p : probes) {
            Vec2 cp = c, cm = c;
            cp[j] += fd_step;
            cm[j] -= fd_step;
            if (norm2(cp) >= 1.0 || norm2(cm) >= 1.0) continue;
            const double fd = (multiplier_symbol({MultiplierKind::S, cp}, p[0], p[1]) -
                               multiplier_symbol({MultiplierKind::S, cm}, p[0], p[1])) /
                              (2.0 * fd_step);
            const double an = multiplier_symbol(
                {j == 0 ? MultiplierKind::dS_dc1 : MultiplierKind::dS_dc2, c}, p[0], p[1]);
            const double scale = std::max(std::abs(an), 1e-12);
            worst = std::max(worst, std::abs(fd - an) / scale);
        }
    }
    rep.fd_rel_error = worst;
    rep.ok = rep.ok && worst <= 1e-6;
    return rep;
}

}  // namespace zsw
