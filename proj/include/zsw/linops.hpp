#pragma once

// Linearized operators around the ground state Q,
//   L+ = -Delta + 1 - 3Q^2   (kernel: span of the Q gradient, odd fields)
//   L- = -Delta + 1 - Q^2    (kernel: span of Q, even-even)
// and their inversion restricted to a parity class that excludes the kernel:
// (L+, EE) and (L-, OE) are the only allowed pairings. The solver is
// preconditioned MINRES (the operators are symmetric indefinite), with
// (1-Delta)^{-1} applied spectrally and the class projection applied to every
// operator and preconditioner output so rounding cannot reintroduce a kernel
// component.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "zsw/fft.hpp"
#include "zsw/field.hpp"
#include "zsw/norms.hpp"
#include "zsw/symmetry.hpp"

namespace zsw {

enum class LKind { plus, minus };

struct LinearizedOp {
    LKind kind;
    const RealField& Q;  // borrowed; caller keeps it alive
};

inline RealField apply_L(const LinearizedOp& op, const RealField& w) {
    check_same_grid(op.Q.grid, w.grid, "apply_L");
    const double coef = op.kind == LKind::plus ? 3.0 : 1.0;
    RealField out = synthesize_real(laplacian_spectrum(analyze(w)));
    for (std::size_t k = 0; k < w.v.size(); ++k)
        out.v[k] = -out.v[k] + w.v[k] - coef * op.Q.v[k] * op.Q.v[k] * w.v[k];
    return out;
}

struct InvertResult {
    RealField g;
    double rel_residual = 0.0;  // ||L g - f|| / ||f||
    int iterations = 0;
    double h2_over_l2 = 0.0;    // ||g||_{H^2} / ||f||_{L^2} bound certificate
    bool converged = false;
};

namespace detail {

// Preconditioned MINRES for symmetric (possibly indefinite) A with SPD
// preconditioner M. The true residual is checked every 25 iterations and at
// the estimator's convergence point.
inline InvertResult minres(const std::function<RealField(const RealField&)>& apply_A,
                           const std::function<RealField(const RealField&)>& apply_M,
                           const RealField& b, double tol, int max_iter) {
    InvertResult res;
    const double bnorm = l2_norm(b);
    res.g = RealField(b.grid);
    if (bnorm == 0.0) {
        res.converged = true;
        return res;
    }

    RealField x(b.grid);
    RealField v_old(b.grid), v = b;
    RealField z = apply_M(v);
    double gamma = std::sqrt(inner(z, v));
    double gamma_old = 1.0;
    if (!(gamma > 0.0)) throw std::runtime_error("minres: preconditioner not positive on rhs");

    double eta = gamma;
    double s_old = 0.0, s = 0.0, c_old = 1.0, c = 1.0;
    RealField w_old(b.grid), w(b.grid);

    int it = 0;
    auto true_resid = [&]() { return l2_norm(apply_A(x) - b) / bnorm; };

    while (it < max_iter) {
        ++it;
        for (double& t : z.v) t /= gamma;
        RealField Az = apply_A(z);
        const double delta = inner(Az, z);

        RealField v_new(b.grid);
        for (std::size_t k = 0; k < b.v.size(); ++k)
            v_new.v[k] = Az.v[k] - (delta / gamma) * v.v[k] - (gamma / gamma_old) * v_old.v[k];
        RealField z_new = apply_M(v_new);
        double gamma_new = std::sqrt(std::max(0.0, inner(z_new, v_new)));

        const double a0 = c * delta - c_old * s * gamma;
        const double a1 = std::sqrt(a0 * a0 + gamma_new * gamma_new);
        const double a2 = s * delta + c_old * c * gamma;
        const double a3 = s_old * gamma;
        if (a1 == 0.0) break;
        const double c_new = a0 / a1;
        const double s_new = gamma_new / a1;

        RealField w_new(b.grid);
        for (std::size_t k = 0; k < b.v.size(); ++k)
            w_new.v[k] = (z.v[k] - a3 * w_old.v[k] - a2 * w.v[k]) / a1;
        for (std::size_t k = 0; k < b.v.size(); ++k) x.v[k] += c_new * eta * w_new.v[k];
        eta = -s_new * eta;

        v_old = std::move(v);
        v = std::move(v_new);
        z = std::move(z_new);
        gamma_old = gamma;
        gamma = gamma_new;
        w_old = std::move(w);
        w = std::move(w_new);
        c_old = c;
        c = c_new;
        s_old = s;
        s = s_new;

        if (gamma == 0.0) break;  // invariant subspace reached
        if (std::abs(eta) <= 0.1 * tol * bnorm || it % 25 == 0) {
            if (true_resid() <= tol) break;
        }
    }

    res.g = std::move(x);
    res.iterations = it;
    res.rel_residual = true_resid();
    res.converged = res.rel_residual <= tol;
    return res;
}

}  // namespace detail

inline void check_invert_pairing(LKind kind, SymmetryClass cls) {
    const bool ok = (kind == LKind::plus && cls != SymmetryClass::OE) ||
                    (kind == LKind::minus && cls == SymmetryClass::OE);
    if (!ok)
        throw std::invalid_argument(
            "invert_L_on_subspace: allowed pairings are (L+, EE/RADIAL) and (L-, OE)");
}

inline InvertResult invert_L_on_subspace(const LinearizedOp& op, const RealField& f,
                                         SymmetryClass cls, double tol = 1e-10,
                                         int max_iter = 5000) {
    check_invert_pairing(op.kind, cls);
    const double fn = l2_norm(f);
    if (fn > 0.0 && symmetry_defect(f, cls) > 1e-8 * fn)
        throw std::invalid_argument(std::string("invert_L_on_subspace: rhs not in class ") +
                                    to_string(cls));
    RealField b = project(f, cls);

    auto apply_A = [&](const RealField& w) { return project(apply_L(op, w), cls); };
    auto apply_M = [&](const RealField& w) { return project(helmholtz_inverse(w), cls); };

    InvertResult res = detail::minres(apply_A, apply_M, b, tol, max_iter);
    if (!res.converged)
        throw std::runtime_error(
            "invert_L_on_subspace: MINRES did not reach tolerance (rel residual " +
            std::to_string(res.rel_residual) + " after " + std::to_string(res.iterations) +
            " iterations); grid too coarse or rhs outside the class");
    res.h2_over_l2 = fn > 0.0 ? sobolev_norm(res.g, 2.0) / fn : 0.0;
    return res;
}

// Radial profile rho with L+ rho = |y|^2 Q / 4, used by the coercivity check.
inline InvertResult solve_rho(const RealField& Q, double tol = 1e-10, int max_iter = 5000) {
    const Grid2D& g = Q.grid;
    RealField rhs(g);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            const double y1 = g.coord(i), y2 = g.coord(j);
            rhs.at(i, j) = 0.25 * (y1 * y1 + y2 * y2) * Q.at(i, j);
        }
    return invert_L_on_subspace({LKind::plus, Q}, rhs, SymmetryClass::EE, tol, max_iter);
}

}  // namespace zsw
