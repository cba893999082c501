#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "nel/fields/operators.hpp"
#include "nel/fields/snapshot_io.hpp"

using namespace nel;
using namespace nel::fields;
using nel::test::max_diff;
using nel::test::random_trig_poly;

namespace {

SpectralField2D sample2(const TorusGrid2D& g, double (*fn)(double, double)) {
    return SpectralField2D::sample(g, [fn](std::array<double, 2> p) { return fn(p[0], p[1]); });
}

}  // namespace

TEST_CASE("grid rejects invalid shapes and aspect ratios") {
    CHECK_THROWS_AS(make_torus_grid_2d(0.0, 16, 16), DomainError);
    CHECK_THROWS_AS(make_torus_grid_2d(-1.0, 16, 16), DomainError);
    CHECK_THROWS_AS(make_torus_grid_2d(0.7, 15, 16), DomainError);
    CHECK_THROWS_AS(make_torus_grid_2d(0.7, 2, 16), DomainError);
    CHECK_THROWS_AS(make_torus_grid_2d(0.7, 16, 16, 0.0), DomainError);
    auto g = make_torus_grid_2d(0.7, 16, 8);
    CHECK(g.length(0) == doctest::Approx(2 * std::numbers::pi / 0.7));
    CHECK(g.wavenumber(0, 3) == doctest::Approx(2.1));
    CHECK(g.flat_of(g.modes(37)) == 37);
}

TEST_CASE("physical to spectral round trip") {
    auto g = make_torus_grid_2d(0.7, 64, 64);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> values(g.size());
    for (auto& v : values) v = u(rng);
    auto f = SpectralField2D::from_physical(g, std::span<const double>(values));
    CHECK(f.is_real());
    auto back = f.physical_real();
    double err = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) err = std::max(err, std::abs(back[i] - values[i]));
    CHECK(err < 1e-12);
}

TEST_CASE("bracket examples") {
    auto g = make_torus_grid_2d(1.0, 32, 32);
    std::mt19937_64 rng(3);
    auto f = random_trig_poly(g, 5, rng);

    SUBCASE("self bracket vanishes") { CHECK(bracket(f, f).sup_norm() < 1e-14); }

    SUBCASE("sin x with sin y") {
        auto b = bracket(sample2(g, [](double x, double) { return std::sin(x); }),
                         sample2(g, [](double, double y) { return std::sin(y); }));
        auto expected = sample2(g, [](double x, double y) { return std::cos(x) * std::cos(y); });
        CHECK(max_diff(b, expected) < 1e-13);
    }

    SUBCASE("y-only fields commute") {
        auto p = sample2(g, [](double, double y) { return std::sin(2 * y) + 0.3 * std::cos(3 * y); });
        auto b = bracket(sample2(g, [](double, double y) { return std::cos(y); }), p);
        CHECK(b.sup_norm() < 1e-14);
    }

    SUBCASE("errors") {
        auto other = make_torus_grid_2d(0.5, 32, 32);
        CHECK_THROWS_AS(bracket(f, SpectralField2D(other)), StructuralError);
        auto complex_field = SpectralField2D::sample(g, [](std::array<double, 2> p) {
            return std::exp(cplx(0.0, p[0]));
        });
        CHECK_THROWS_AS(bracket(f, complex_field), DomainError);
        CHECK_NOTHROW(bracket_complex(f, complex_field));
    }
}

TEST_CASE("invert_laplacian") {
    auto g = make_torus_grid_2d(0.7, 32, 32);
    auto cosy = sample2(g, [](double, double y) { return std::cos(y); });
    CHECK(max_diff(invert_laplacian(cosy), -cosy) < 1e-14);

    SpectralField2D mode(g);
    mode.set_coeff({1, 2}, 1.0);
    auto inv = invert_laplacian(mode);
    CHECK(std::abs(inv.coeff({1, 2}) - (-1.0 / (0.49 + 4.0))) < 1e-15);

    std::mt19937_64 rng(5);
    auto f = random_trig_poly(g, 8, rng);
    CHECK(max_diff(invert_laplacian(laplacian(f)), f) < 1e-12);
    CHECK(max_diff(laplacian(invert_laplacian(f)), f) < 1e-12);

    auto shifted = f;
    shifted.coeffs()[0] = 0.5;
    CHECK_THROWS_AS(invert_laplacian(shifted), DomainError);
}

TEST_CASE("velocity_from_stream") {
    const double alpha = 0.7;
    auto g = make_torus_grid_2d(alpha, 32, 32);
    auto vel = velocity_from_stream(sample2(g, [](double, double y) { return -std::cos(y); }));
    CHECK(max_diff(vel.u, sample2(g, [](double, double y) { return -std::sin(y); })) < 1e-14);
    CHECK(vel.v.sup_norm() < 1e-14);

    auto zero = velocity_from_stream(SpectralField2D(g));
    CHECK(zero.u.sup_norm() == 0.0);
    CHECK(zero.v.sup_norm() == 0.0);

    auto psi = SpectralField2D::sample(g, [alpha](std::array<double, 2> p) { return std::sin(alpha * p[0]); });
    auto v2 = velocity_from_stream(psi);
    auto expected = SpectralField2D::sample(g, [alpha](std::array<double, 2> p) { return alpha * std::cos(alpha * p[0]); });
    CHECK(v2.u.sup_norm() < 1e-14);
    CHECK(max_diff(v2.v, expected) < 1e-14);
}

TEST_CASE("ns_rhs_2d") {
    auto g = make_torus_grid_2d(0.7, 32, 32);
    const double gamma = 0.5;
    auto shear = gamma * sample2(g, [](double, double y) { return std::cos(y); });

    for (double nu : {0.0, 0.01, 0.3}) CHECK(ns_rhs_2d(shear, nu, shear).sup_norm() < 1e-14);
    CHECK(ns_rhs_2d(sample2(g, [](double, double y) { return std::cos(y); }), 0.0, SpectralField2D(g)).sup_norm() <
          1e-14);

    std::mt19937_64 rng(7);
    auto omega = random_trig_poly(g, 6, rng);
    CHECK(std::abs(ns_rhs_2d(omega, 0.0, SpectralField2D(g)).mean()) < 1e-15);
    CHECK_THROWS_AS(ns_rhs_2d(omega, -0.1, SpectralField2D(g)), DomainError);
}

TEST_CASE("bracket algebra on random trig polynomials") {
    std::mt19937_64 rng(2024);
    auto g = make_torus_grid_2d(0.7, 64, 64);
    auto g_half = make_torus_grid_2d(0.7, 128, 128, 0.5);
    double antisym = 0.0, jacobi = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        auto f = random_trig_poly(g, 8, rng);
        auto h = random_trig_poly(g, 8, rng);
        antisym = std::max(antisym, (bracket(f, h) + bracket(h, f)).sup_norm());

        auto a = random_trig_poly(g_half, 8, rng);
        auto b = random_trig_poly(g_half, 8, rng);
        auto c = random_trig_poly(g_half, 8, rng);
        auto j = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
        jacobi = std::max(jacobi, j.sup_norm());
    }
    CHECK(antisym < 1e-10);
    CHECK(jacobi < 1e-9);
}

TEST_CASE("3D curl, Biot-Savart and advection") {
    auto g = make_torus_grid_3d(16, 16, 16);
    auto s = [&](auto fn) { return ScalarField3D::sample(g, fn); };
    ScalarField3D zero(g);

    SUBCASE("curl of a shear") {
        VectorField3D u(s([](std::array<double, 3> p) { return std::sin(p[2]); }), zero, zero);
        auto w = curl_3d(u);
        CHECK(w[0].sup_norm() < 1e-14);
        CHECK(max_diff(w[1], s([](std::array<double, 3> p) { return std::cos(p[2]); })) < 1e-14);
        CHECK(w[2].sup_norm() < 1e-14);
    }

    SUBCASE("Biot-Savart inverts curl on divergence-free fields") {
        std::mt19937_64 rng(9);
        VectorField3D a(nel::test::random_trig_poly_3d(g, 3, rng), nel::test::random_trig_poly_3d(g, 3, rng),
                        nel::test::random_trig_poly_3d(g, 3, rng));
        auto u = curl_3d(a);  // divergence-free, mean-free
        auto back = biot_savart_3d(curl_3d(u));
        CHECK((back - u).sup_norm() < 1e-12);
        CHECK(max_divergence_symbol(biot_savart_3d(a)) < 1e-12);
    }

    SUBCASE("advecting a constant gives zero") {
        std::mt19937_64 rng(10);
        VectorField3D u(nel::test::random_trig_poly_3d(g, 3, rng), nel::test::random_trig_poly_3d(g, 3, rng),
                        nel::test::random_trig_poly_3d(g, 3, rng));
        ScalarField3D constant(g);
        constant.coeffs()[0] = 2.5;
        CHECK(advect_3d(u, constant).sup_norm() == 0.0);
    }

    SUBCASE("nonzero mean is rejected") {
        VectorField3D w(g);
        w[0].coeffs()[0] = 1.0;
        CHECK_THROWS_AS(biot_savart_3d(w), DomainError);
        CHECK_THROWS_AS(curl_3d(w), DomainError);
    }
}

TEST_CASE("ns_rhs_3d") {
    auto g = make_torus_grid_3d(16, 16, 16);
    ScalarField3D zero(g);
    VectorField3D shear(zero, ScalarField3D::sample(g, [](std::array<double, 3> p) { return std::cos(p[2]); }), zero);
    CHECK(ns_rhs_3d(shear, 0.0, VectorField3D(g)).sup_norm() < 1e-14);

    std::mt19937_64 rng(12);
    VectorField3D f(nel::test::random_trig_poly_3d(g, 2, rng), nel::test::random_trig_poly_3d(g, 2, rng),
                    nel::test::random_trig_poly_3d(g, 2, rng));
    auto r = ns_rhs_3d(VectorField3D(g), 0.2, f);
    CHECK((r - 0.2 * f).sup_norm() < 1e-15);

    VectorField3D a(nel::test::random_trig_poly_3d(g, 3, rng), nel::test::random_trig_poly_3d(g, 3, rng),
                    nel::test::random_trig_poly_3d(g, 3, rng));
    auto omega = curl_3d(a);
    auto rhs = ns_rhs_3d(omega, 0.0, VectorField3D(g));
    CHECK(rhs.is_mean_zero(1e-15));
    CHECK_THROWS_AS(ns_rhs_3d(omega, -1.0, VectorField3D(g)), DomainError);
}

TEST_CASE("field snapshot round trip") {
    std::mt19937_64 rng(13);
    auto g = make_torus_grid_2d(0.7, 16, 8);
    auto f = random_trig_poly(g, 3, rng);
    auto path = std::filesystem::temp_directory_path() / "nel_snapshot_test.json";
    write_snapshot(path, f);
    auto back = read_snapshot_2d(path);
    std::filesystem::remove(path);
    CHECK(back.grid() == g);
    for (std::size_t i = 0; i < g.size(); ++i)
        CHECK(std::abs(back.coeffs()[i] - f.coeffs()[i]) <= 1e-15 * std::abs(f.coeffs()[i]));

    auto j = to_json(f);
    j["kind"] = "field3d";
    CHECK_THROWS_AS(field2d_from_json(j), IoError);
}
