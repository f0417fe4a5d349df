#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "zsw/fft.hpp"
#include "zsw/field.hpp"
#include "zsw/grid.hpp"
#include "zsw/io.hpp"
#include "zsw/norms.hpp"
#include "zsw/rng.hpp"
#include "zsw/symmetry.hpp"

using namespace zsw;

TEST_CASE("make_grid basic contract") {
    Grid2D g = make_grid(256, 40.0);
    CHECK(g.dx == Catch::Approx(0.15625).epsilon(0));
    CHECK(g.coord(128) == Catch::Approx(0.0).margin(1e-15));

    Grid2D h = make_grid(16, two_pi);
    for (int k = 0; k < 16; ++k) {
        const int kk = k < 8 ? k : k - 16;
        CHECK(h.freq(k) == Catch::Approx(double(kk)).margin(1e-13));
    }
    CHECK(h.freq(0) == 0.0);

    CHECK_THROWS_AS(make_grid(255, 40.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(8, 40.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(256, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(256, 0.0), std::invalid_argument);
}

TEST_CASE("sobolev norm on single modes and zero field") {
    Grid2D g = make_grid(64, two_pi);
    RealField zero(g);
    CHECK(sobolev_norm(zero, 0.0) == 0.0);
    CHECK(sobolev_norm(zero, 3.0) == 0.0);

    RealField c1 = make_field(g, [](double y1, double) { return std::cos(y1); });
    const double n0 = sobolev_norm(c1, 0.0);
    const double n2 = sobolev_norm(c1, 2.0);
    CHECK(n0 == Catch::Approx(pi * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(n2 / n0 == Catch::Approx(2.0).epsilon(1e-12));
    CHECK(l2_norm(c1) == Catch::Approx(n0).epsilon(1e-12));
}

TEST_CASE("sobolev H1 norm of a Gaussian matches direct quadrature") {
    Grid2D g = make_grid(256, 40.0);
    RealField f = make_field(g, [](double y1, double y2) {
        return std::exp(-(y1 * y1 + y2 * y2));
    });
    // independent oracle: rectangle-rule quadrature of |f|^2 + |grad f|^2 with
    // the analytic gradient
    double acc = 0.0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            const double y1 = g.coord(i), y2 = g.coord(j);
            const double v = std::exp(-(y1 * y1 + y2 * y2));
            const double gx = -2.0 * y1 * v, gy = -2.0 * y2 * v;
            acc += v * v + gx * gx + gy * gy;
        }
    const double oracle = std::sqrt(acc) * g.dx;
    CHECK(sobolev_norm(f, 1.0) == Catch::Approx(oracle).epsilon(1e-8));
}

TEST_CASE("transform round trip and Parseval") {
    Grid2D g = make_grid(64, 17.0);
    Rng rng(11);
    for (int rep = 0; rep < 5; ++rep) {
        RealField f = random_smooth_field(g, rng);
        RealField back = synthesize_real(analyze(f));
        double diff = 0.0;
        for (std::size_t k = 0; k < f.v.size(); ++k)
            diff = std::max(diff, std::abs(f.v[k] - back.v[k]));
        CHECK(diff <= 1e-12 * std::max(1.0, max_abs(f)));

        double s = 0.0;
        for (double x : f.v) s += x * x;
        const double direct = g.dx * g.dx * s;
        const double viaspec = sobolev_norm(f, 0.0);
        CHECK(viaspec * viaspec == Catch::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("spectral derivative of a single mode") {
    Grid2D g = make_grid(64, two_pi);
    RealField f = make_field(g, [](double y1, double) { return std::cos(y1); });
    RealField d = derivative(f, 1, 0);
    RealField expect = make_field(g, [](double y1, double) { return -std::sin(y1); });
    CHECK(l2_norm(d - expect) <= 1e-12);
}

TEST_CASE("shift theorem moves samples exactly") {
    Grid2D g = make_grid(128, 20.0);
    RealField f = make_field(g, [](double y1, double y2) {
        return std::exp(-(y1 * y1 + 0.5 * y2 * y2));
    });
    RealField s = shift_field(f, 3.0 * g.dx, -g.dx);
    // shifted field samples f(y - d)
    double worst = 0.0;
    for (int i = 4; i < g.n - 4; ++i)
        for (int j = 4; j < g.n - 4; ++j) {
            const double want = std::exp(-(std::pow(g.coord(i) - 3.0 * g.dx, 2) +
                                           0.5 * std::pow(g.coord(j) + g.dx, 2)));
            worst = std::max(worst, std::abs(s.at(i, j) - want));
        }
    CHECK(worst <= 1e-10);
}

TEST_CASE("parity projections: fixed points, annihilation, idempotence") {
    Grid2D g = make_grid(64, 12.0);
    RealField ee = make_field(g, [](double y1, double y2) {
        return std::exp(-(y1 * y1 + y2 * y2));
    });
    CHECK(l2_norm(project(ee, SymmetryClass::EE) - ee) <= 1e-14);
    CHECK(symmetry_defect(ee, SymmetryClass::EE) <= 1e-14);

    RealField oe = make_field(g, [](double y1, double y2) {
        return y1 * std::exp(-(y1 * y1 + y2 * y2));
    });
    CHECK(l2_norm(project(oe, SymmetryClass::OE) - oe) <= 1e-14);
    CHECK(l2_norm(project(oe, SymmetryClass::EE)) <= 1e-14);

    Rng rng(3);
    for (int rep = 0; rep < 4; ++rep) {
        RealField f = random_smooth_field(g, rng);
        for (SymmetryClass cls : {SymmetryClass::EE, SymmetryClass::OE, SymmetryClass::RADIAL}) {
            RealField p = project(f, cls);
            CHECK(symmetry_defect(p, cls) <= 1e-12);
            // L2-orthogonal projection
            CHECK(std::abs(inner(p, f - p)) <= 1e-10 * std::pow(l2_norm(f), 2));
        }
        // the EE and OE classes are orthogonal
        CHECK(l2_norm(project(project(f, SymmetryClass::EE), SymmetryClass::OE)) <= 1e-13);
    }
}

TEST_CASE("radial projection averages the diagonal swap") {
    Grid2D g = make_grid(32, 8.0);
    RealField f = make_field(g, [](double y1, double y2) {
        return y1 * y1 * std::exp(-(y1 * y1 + y2 * y2));
    });
    RealField p = project(f, SymmetryClass::RADIAL);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            CHECK(p.at(i, j) == Catch::Approx(p.at(j, i)).margin(1e-14));
        }
}

TEST_CASE("ZKF1 round trip") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "zsw_io_test";
    fs::create_directories(dir);

    Grid2D g = make_grid(32, 9.5);
    Rng rng(7);
    RealField f = random_smooth_field(g, rng);
    const std::string rp = (dir / "f.zkf").string();
    save_field(rp, f);
    RealField f2 = load_real_field(rp);
    CHECK(f2.grid == f.grid);
    CHECK(f2.v == f.v);
    CHECK(content_hash(f) == content_hash(f2));

    ComplexField c(g);
    for (std::size_t k = 0; k < c.v.size(); ++k) c.v[k] = cplx(f.v[k], -2.0 * f.v[k]);
    const std::string cp = (dir / "c.zkf").string();
    save_field(cp, c);
    ComplexField c2 = load_complex_field(cp);
    CHECK(c2.v == c.v);
    CHECK(peek_kind(cp) == 1);
    CHECK(peek_kind(rp) == 0);

    CHECK_THROWS_AS(load_complex_field(rp), std::runtime_error);
    const std::string bad = (dir / "bad.zkf").string();
    {
        std::ofstream out(bad, std::ios::binary);
        out << "NOPE";
    }
    CHECK_THROWS_AS(load_real_field(bad), std::runtime_error);
}

TEST_CASE("deterministic rng") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    Grid2D g = make_grid(32, 8.0);
    Rng r1(5), r2(5);
    RealField f1 = random_smooth_field(g, r1);
    RealField f2 = random_smooth_field(g, r2);
    CHECK(f1.v == f2.v);
}
