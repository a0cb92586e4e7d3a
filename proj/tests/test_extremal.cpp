#include <doctest.h>

#include <cmath>

#include "cylpack/extremal.hpp"
#include "cylpack/packing.hpp"

using namespace cylpack;

namespace {

// Independent oracle: area of the sector region closed by the parabola
// through both vertices with apex on S_x(1), by direct integration in the
// chord-aligned coordinates.
double piece_area_numeric(double beta) {
    const double r0 = 2.0 / std::sqrt(3.0);
    const double tri = 0.5 * r0 * r0 * std::sin(beta);
    if (beta <= M_PI / 3.0) return tri;
    const double m = r0 * std::cos(beta / 2.0);  // chord offset from x
    const double h = r0 * std::sin(beta / 2.0);  // half chord
    const double c = (m - 1.0) / (h * h);        // X(Y) = 1 + c Y², X(±h) = m
    const int n = 200000;
    double seg = 0.0;
    const double step = 2.0 * h / n;
    for (int k = 0; k < n; ++k) {
        const double y0 = -h + k * step, y1 = y0 + step, ym = 0.5 * (y0 + y1);
        auto f = [&](double y) { return (1.0 + c * y * y) - m; };
        seg += (step / 6.0) * (f(y0) + 4.0 * f(ym) + f(y1));
    }
    return tri + seg;
}

} // namespace

TEST_CASE("piece_area closed form") {
    const double a0 = BoundParams::get().alpha0;
    CHECK(piece_area(M_PI / 3.0) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(piece_area(M_PI / 6.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    // frozen from the numeric oracle (piece_area_numeric(a0) = 0.8272043)
    CHECK(piece_area(a0) == doctest::Approx(0.8272043).epsilon(1e-5));
    CHECK_THROWS_AS(piece_area(0.0), DomainError);
    CHECK_THROWS_AS(piece_area(a0 + 1e-3), DomainError);
}

TEST_CASE("piece_area matches numeric parabola integration") {
    const double a0 = BoundParams::get().alpha0;
    for (int k = 0; k <= 16; ++k) {
        const double beta = M_PI / 3.0 + (a0 - M_PI / 3.0) * k / 16.0;
        CHECK(piece_area(beta) == doctest::Approx(piece_area_numeric(beta)).epsilon(1e-9));
    }
}

TEST_CASE("piece_area is continuous across the 60-degree seam") {
    const double a0 = BoundParams::get().alpha0;
    double prev = piece_area(1e-4);
    double max_jump = 0.0;
    const int n = 10000;
    for (int k = 1; k <= n; ++k) {
        const double beta = 1e-4 + (a0 - 2e-4) * double(k) / n;
        const double v = piece_area(beta);
        max_jump = std::max(max_jump, std::fabs(v - prev) - 1.0 * (a0 / n));
        prev = v;
    }
    CHECK(max_jump < 1e-9);
    CHECK(piece_area(M_PI / 3.0 - 1e-13) ==
          doctest::Approx(piece_area(M_PI / 3.0 + 1e-13)).epsilon(1e-10));
}

TEST_CASE("per-radian optimality near 60 degrees") {
    const double a0 = BoundParams::get().alpha0;
    const double floor = (1.0 / std::sqrt(3.0)) / (M_PI / 3.0);
    for (int k = 0; k <= 2000; ++k) {
        const double beta = 55.0 * M_PI / 180.0 + (a0 - 55.0 * M_PI / 180.0) * k / 2000.0;
        CHECK(piece_area(beta) / beta >= floor - 1e-9);
    }
}

TEST_CASE("hand-picked compositions") {
    const double s12 = std::sqrt(12.0);
    CHECK(6.0 * piece_area(M_PI / 3.0) == doctest::Approx(s12).epsilon(1e-12));
    CHECK(5.0 * piece_area(2.0 * M_PI / 5.0) == doctest::Approx(3.4680435).epsilon(1e-6));
    CHECK(5.0 * piece_area(2.0 * M_PI / 5.0) > s12);
    CHECK(64.0 * piece_area(2.0 * M_PI / 64.0) == doctest::Approx(4.1820647).epsilon(1e-6));
    CHECK(64.0 * piece_area(2.0 * M_PI / 64.0) > s12);
}

TEST_CASE("min_total_area finds the hexagon" * doctest::timeout(120)) {
    const ExtremalResult res = min_total_area(5, 64, 32, 12345);
    CHECK(res.min_area == doctest::Approx(std::sqrt(12.0)).epsilon(1e-7));
    REQUIRE(res.n_pieces == 6);
    for (double b : res.argmin) CHECK(std::fabs(b - M_PI / 3.0) < 1e-4);
}

TEST_CASE("three_ball_min_radius") {
    const double expected = 2.0 / std::sqrt(3.0) - 1.0;
    const ThreeBallResult res = three_ball_min_radius(20, 7);
    CHECK(res.radius == doctest::Approx(expected).epsilon(1e-7));
    CHECK(res.min_pair_distance >= 2.0 - 1e-9);

    // perturbed seeds converge to at least the bound
    for (std::uint64_t s = 1; s <= 20; ++s) {
        const ThreeBallResult r = three_ball_min_radius(8, s);
        CHECK(r.radius >= expected - 1e-6);
        CHECK(r.radius <= expected + 1e-6);
    }
}

TEST_CASE("three-ball optimum pulls the inflated start back to the boundary") {
    // start index 1 is the pairwise-2.5 configuration; with only the first
    // two (deterministic) starts the optimizer must still find distance 2
    const ThreeBallResult res = three_ball_min_radius(2, 99);
    CHECK(res.min_pair_distance == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(res.radius == doctest::Approx(2.0 / std::sqrt(3.0) - 1.0).epsilon(1e-6));
}
