#pragma once

// Deterministic RNG and random smooth test fields. std:: distributions are
// implementation-defined, so reports that must be bit-identical across runs
// use this generator instead.

#include <cmath>
#include <cstdint>

#include "zsw/fft.hpp"
#include "zsw/field.hpp"
#include "zsw/symmetry.hpp"

namespace zsw {

struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : state(seed) {}

    std::uint64_t next_u64() {
        // splitmix64
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

    double gaussian() {
        // Box-Muller; deterministic across platforms
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }
};

// Smooth decaying random field: white noise low-passed with a Gaussian symbol
// of width kscale, windowed by exp(-|y|^2 / (2 w^2)) so the field decays well
// inside the box. Normalized to unit L2 norm.
inline RealField random_smooth_field(const Grid2D& g, Rng& rng, double kscale = 2.0,
                                     double window = 0.0) {
    RealField noise(g);
    for (double& x : noise.v) x = rng.gaussian();
    Spectrum s = analyze(noise);
    s = apply_symbol(s, [kscale](double xi1, double xi2) {
        return std::exp(-(xi1 * xi1 + xi2 * xi2) / (2.0 * kscale * kscale));
    });
    RealField f = synthesize_real(s);
    const double w = window > 0.0 ? window : g.box / 8.0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            const double r2 = g.coord(i) * g.coord(i) + g.coord(j) * g.coord(j);
            f.at(i, j) *= std::exp(-r2 / (2.0 * w * w));
        }
    const double nrm = l2_norm(f);
    if (nrm > 0.0)
        for (double& x : f.v) x /= nrm;
    return f;
}

inline RealField random_smooth_field(const Grid2D& g, Rng& rng, SymmetryClass cls,
                                     double kscale = 2.0) {
    RealField f = project(random_smooth_field(g, rng, kscale), cls);
    const double nrm = l2_norm(f);
    if (nrm > 0.0)
        for (double& x : f.v) x /= nrm;
    return f;
}

}  // namespace zsw
