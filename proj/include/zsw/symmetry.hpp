#pragma once

// Parity classes acting exactly on grid points. EE (even-even) is the
// discrete surrogate of the radial class, OE is y1-odd / y2-even, RADIAL is
// EE plus invariance under the diagonal swap (y1,y2) -> (y2,y1). Projections
// are group averages, hence idempotent and L2-orthogonal.

#include <cmath>

#include "zsw/field.hpp"
#include "zsw/norms.hpp"

namespace zsw {

enum class SymmetryClass { EE, OE, RADIAL };

inline const char* to_string(SymmetryClass c) {
    switch (c) {
        case SymmetryClass::EE: return "EE";
        case SymmetryClass::OE: return "OE";
        default: return "RADIAL";
    }
}

// Average over the reflection group with signs (s1, s2):
// f <- (f(y) + s1 f(-y1,y2) + s2 f(y1,-y2) + s1 s2 f(-y))/4.
inline RealField parity_project(const RealField& f, int s1, int s2) {
    const Grid2D& g = f.grid;
    RealField out(g);
    for (int i = 0; i < g.n; ++i) {
        const int mi = g.mirror(i);
        for (int j = 0; j < g.n; ++j) {
            const int mj = g.mirror(j);
            out.at(i, j) = 0.25 * (f.at(i, j) + s1 * f.at(mi, j) + s2 * f.at(i, mj) +
                                   s1 * s2 * f.at(mi, mj));
        }
    }
    return out;
}

inline RealField swap_project(const RealField& f) {
    const Grid2D& g = f.grid;
    RealField out(g);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) out.at(i, j) = 0.5 * (f.at(i, j) + f.at(j, i));
    return out;
}

inline RealField project(const RealField& f, SymmetryClass cls) {
    switch (cls) {
        case SymmetryClass::EE: return parity_project(f, +1, +1);
        case SymmetryClass::OE: return parity_project(f, -1, +1);
        default: return swap_project(parity_project(f, +1, +1));
    }
}

inline double symmetry_defect(const RealField& f, SymmetryClass cls) {
    return l2_norm(f - project(f, cls));
}

}  // namespace zsw
