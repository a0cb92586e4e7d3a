#include <doctest.h>

#include <cmath>

#include "cylpack/geometry.hpp"
#include "cylpack/rng.hpp"

using namespace cylpack;

namespace {

Vec3 rand_vec(Rng& rng, double scale) {
    return {rng.uniform(-scale, scale), rng.uniform(-scale, scale), rng.uniform(-scale, scale)};
}

// brute-force distance oracle: min over densely sampled points of the segment
double brute_point_segment(const Vec3& p, const Segment& s, int n = 10000) {
    double best = 1e300;
    for (int k = 0; k <= n; ++k) best = std::min(best, norm(p - s.at(double(k) / n)));
    return best;
}

// radius function of a convex polygon (vertices CCW around the origin)
double polygon_radius(const std::vector<Vec3>& poly, double theta) {
    const Vec3 d{std::cos(theta), std::sin(theta), 0.0};
    double best = 1e300;
    const int n = int(poly.size());
    for (int k = 0; k < n; ++k) {
        const Vec3& a = poly[k];
        const Vec3& b = poly[(k + 1) % n];
        // intersect ray r*d with segment ab
        const double ex = b.x - a.x, ey = b.y - a.y;
        const double det = d.x * (-ey) - d.y * (-ex);
        if (std::fabs(det) < 1e-15) continue;
        const double r = (a.x * (-ey) + a.y * ex) / det;
        const double u = (d.x * a.y - d.y * a.x) / det;
        if (r > 0.0 && u >= -1e-12 && u <= 1.0 + 1e-12) best = std::min(best, r);
    }
    return best;
}

double shoelace(const std::vector<Vec3>& poly) {
    double s = 0.0;
    const int n = int(poly.size());
    for (int k = 0; k < n; ++k) {
        const Vec3& a = poly[k];
        const Vec3& b = poly[(k + 1) % n];
        s += a.x * b.y - b.x * a.y;
    }
    return 0.5 * std::fabs(s);
}

} // namespace

TEST_CASE("point_segment_distance basics") {
    CHECK(point_segment_distance({0, 0, 2}, {{0, 0, 0}, {0, 0, 1}}) == doctest::Approx(1.0));
    CHECK(point_segment_distance({1, 1, 0.5}, {{0, 0, 0}, {0, 0, 1}}) ==
          doctest::Approx(std::sqrt(2.0)));
    CHECK(point_segment_distance({3, 4, 0}, {{0, 0, 0}, {0, 0, 0}}) == doctest::Approx(5.0));
}

TEST_CASE("point_segment_distance matches dense sampling") {
    Rng rng(123);
    for (int it = 0; it < 50; ++it) {
        const Vec3 p = rand_vec(rng, 5.0);
        const Segment s{rand_vec(rng, 5.0), rand_vec(rng, 5.0)};
        CHECK(point_segment_distance(p, s) ==
              doctest::Approx(brute_point_segment(p, s)).epsilon(1e-6));
    }
}

TEST_CASE("segment_segment_distance basics") {
    const Segment z01{{0, 0, 0}, {0, 0, 1}};
    CHECK(segment_segment_distance(z01, {{2, 0, 0}, {2, 0, 1}}) == doctest::Approx(2.0));
    CHECK(segment_segment_distance({{-1, 0, 0}, {1, 0, 0}}, {{0, -1, 1}, {0, 1, 1}}) ==
          doctest::Approx(1.0));
    CHECK(segment_segment_distance({{0, 0, 0}, {0, 0, 1}}, {{0, 0, 3}, {0, 0, 4}}) ==
          doctest::Approx(2.0));
}

TEST_CASE("segment_segment_distance symmetry and midpoint lower bound") {
    Rng rng(77);
    for (int it = 0; it < 1000; ++it) {
        const Segment a{rand_vec(rng, 10.0), rand_vec(rng, 10.0)};
        const Segment b{rand_vec(rng, 10.0), rand_vec(rng, 10.0)};
        const double dab = segment_segment_distance(a, b);
        const double dba = segment_segment_distance(b, a);
        CHECK(dab == doctest::Approx(dba).epsilon(1e-12));
        const double mid = norm(a.midpoint() - b.midpoint());
        const double lower = mid - 0.5 * (a.length() + b.length());
        CHECK(dab >= lower - 1e-9);
        // sampled cross-check
        double sampled = 1e300;
        for (int i = 0; i <= 20; ++i)
            for (int j = 0; j <= 20; ++j)
                sampled = std::min(sampled, norm(a.at(i / 20.0) - b.at(j / 20.0)));
        CHECK(dab <= sampled + 1e-9);
    }
}

TEST_CASE("plane_frame construction") {
    const PlaneFrame f = plane_frame({{0, 0, 0}, {0, 0, 1}}, {0, 0, 0.5});
    CHECK(f.normal.z == doctest::Approx(1.0));
    CHECK(dot(f.u, f.v) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(dot(f.u, f.normal) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(norm(f.u) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(norm(cross(f.u, f.v) - f.normal) == doctest::Approx(0.0).epsilon(1e-12));

    const PlaneFrame fx = plane_frame({{0, 0, 0}, {1, 0, 0}}, {0.5, 0, 0});
    CHECK(fx.normal.x == doctest::Approx(1.0));

    CHECK_THROWS_AS(plane_frame({{0, 0, 0}, {0, 0, 1}}, {1e-3, 0, 0.5}), DegenerateAxis);
    CHECK_THROWS_AS(plane_frame({{0, 0, 0}, {0, 0, 1e-13}}, {0, 0, 0}), DegenerateAxis);
}

TEST_CASE("plane_frame is deterministic") {
    Rng rng(5);
    for (int it = 0; it < 20; ++it) {
        const Vec3 d = normalize(rand_vec(rng, 1.0) + Vec3{0, 0, 1.5});
        const Segment axis{{0, 0, 0}, d * 3.0};
        const PlaneFrame a = plane_frame(axis, d * 1.5);
        const PlaneFrame b = plane_frame(axis, d * 1.5);
        CHECK(norm(a.u - b.u) == 0.0);
        CHECK(norm(a.v - b.v) == 0.0);
    }
}

TEST_CASE("parabola_segment_area") {
    CHECK(parabola_segment_area(3.0, 1.0) == doctest::Approx(2.0));
    CHECK(parabola_segment_area(2.0, 0.0) == doctest::Approx(0.0));

    // apex-tangent parabola at beta = alpha0; frozen from the numeric
    // integration oracle below
    const double s3 = std::sqrt(3.0);
    const double a0 = 2.0 * std::acos(s3 - 1.0);
    const double chord = 2.0 * (2.0 / s3) * std::sin(a0 / 2.0);
    const double sag = 1.0 - (2.0 / s3) * std::cos(a0 / 2.0);
    CHECK(parabola_segment_area(chord, sag) == doctest::Approx(0.16225813).epsilon(1e-5));
}

TEST_CASE("parabola area matches numeric integration of the explicit parabola") {
    Rng rng(99);
    for (int it = 0; it < 100; ++it) {
        const double chord = rng.uniform(0.1, 4.0);
        const double sag = rng.uniform(0.0, 2.0);
        // parabola through (±chord/2, 0) with apex (0, sag): y = sag(1 - (2x/chord)²)
        const int n = 20000;
        double integral = 0.0;
        const double h = chord / n;
        for (int k = 0; k < n; ++k) {
            const double x0 = -chord / 2 + k * h, x1 = x0 + h, xm = 0.5 * (x0 + x1);
            auto f = [&](double x) { return sag * (1.0 - 4.0 * x * x / (chord * chord)); };
            integral += (h / 6.0) * (f(x0) + 4.0 * f(xm) + f(x1));
        }
        CHECK(parabola_segment_area(chord, sag) == doctest::Approx(integral).epsilon(1e-8));
    }
}

TEST_CASE("area_from_radius_fn on discs and hexagon") {
    const double tol = 1e-8;
    CHECK(area_from_radius_fn([](double) { return 1.0; }, tol) ==
          doctest::Approx(M_PI).epsilon(1e-7));
    const double rh = 2.0 / std::sqrt(3.0);
    CHECK(area_from_radius_fn([&](double) { return rh; }, tol) ==
          doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-7));

    // regular hexagon with circumradius 2/√3 has area √12
    auto hex_r = [&](double th) {
        const double a = std::fmod(th, M_PI / 3.0);
        return 1.0 / std::cos(a - M_PI / 6.0); // inradius 1
    };
    CHECK(area_from_radius_fn(hex_r, 1e-9) ==
          doctest::Approx(std::sqrt(12.0)).epsilon(1e-7));
}

TEST_CASE("area_from_radius_fn matches shoelace on random convex polygons") {
    Rng rng(2024);
    for (int it = 0; it < 20; ++it) {
        const int n = rng.uniform_int(3, 9);
        std::vector<double> angles;
        for (int k = 0; k < n; ++k) angles.push_back(rng.uniform(0.0, 2.0 * M_PI));
        std::sort(angles.begin(), angles.end());
        bool distinct = true;
        for (int k = 0; k + 1 < n; ++k)
            if (angles[k + 1] - angles[k] < 0.3) distinct = false;
        if (!distinct || 2.0 * M_PI - (angles.back() - angles.front()) < 0.3) continue;
        std::vector<Vec3> poly;
        for (double a : angles) {
            const double r = rng.uniform(1.0, 3.0);
            poly.push_back({r * std::cos(a), r * std::sin(a), 0.0});
        }
        // keep only convex instances containing the origin
        bool convex = true;
        for (int k = 0; k < n; ++k) {
            const Vec3 e1 = poly[(k + 1) % n] - poly[k];
            const Vec3 e2 = poly[(k + 2) % n] - poly[(k + 1) % n];
            if (cross(e1, e2).z <= 1e-9) convex = false;
        }
        if (!convex) continue;
        const double tol = 1e-7;
        const double area =
            area_from_radius_fn([&](double th) { return polygon_radius(poly, th); }, tol);
        CHECK(area == doctest::Approx(shoelace(poly)).epsilon(1e-5));
    }
}

TEST_CASE("area_from_radius_fn rejects non-finite radius functions") {
    CHECK_THROWS_AS(
        area_from_radius_fn([](double th) { return th > 3.0 ? 1.0 / 0.0 : 1.0; }, 1e-6),
        NonFiniteValue);
}
