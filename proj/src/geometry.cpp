#include "cylpack/geometry.hpp"

#include <algorithm>

namespace cylpack {

double point_segment_closest_param(const Vec3& p, const Segment& s) {
    const Vec3 d = s.p1 - s.p0;
    const double dd = norm2(d);
    if (dd < 1e-24) return 0.0;
    const double t = dot(p - s.p0, d) / dd;
    return std::clamp(t, 0.0, 1.0);
}

double point_segment_distance(const Vec3& p, const Segment& s) {
    const double t = point_segment_closest_param(p, s);
    return norm(p - s.at(t));
}

// Closest-point parameters between two segments, clamped to [0,1]^2.
// Standard quadratic minimization with boundary fallback (Ericson,
// Real-Time Collision Detection, 5.1.9).
static void closest_params(const Segment& s1, const Segment& s2, double& s, double& t) {
    const Vec3 d1 = s1.p1 - s1.p0;
    const Vec3 d2 = s2.p1 - s2.p0;
    const Vec3 r = s1.p0 - s2.p0;
    const double a = norm2(d1);
    const double e = norm2(d2);
    const double f = dot(d2, r);
    const double tiny = 1e-24;

    if (a < tiny && e < tiny) { s = t = 0.0; return; }
    if (a < tiny) {
        s = 0.0;
        t = std::clamp(f / e, 0.0, 1.0);
        return;
    }
    const double c = dot(d1, r);
    if (e < tiny) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
        return;
    }
    const double b = dot(d1, d2);
    const double denom = a * e - b * b;
    s = (denom > tiny * a * e) ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
    t = (b * s + f) / e;
    if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
    } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
    }
}

double segment_segment_distance(const Segment& s1, const Segment& s2) {
    double s, t;
    closest_params(s1, s2, s, t);
    return norm(s1.at(s) - s2.at(t));
}

PlaneFrame plane_frame(const Segment& axis, const Vec3& x) {
    const double len = axis.length();
    if (len < 1e-12) throw DegenerateAxis("plane_frame: axis length < 1e-12");
    if (point_segment_distance(x, axis) > 1e-9)
        throw DegenerateAxis("plane_frame: point not on axis (tolerance 1e-9)");

    PlaneFrame f;
    f.origin = x;
    f.normal = axis.direction() / len;

    // Seed u with the coordinate axis of smallest |normal| component.
    const double ax = std::fabs(f.normal.x), ay = std::fabs(f.normal.y), az = std::fabs(f.normal.z);
    Vec3 seed{1, 0, 0};
    if (ay < ax || az < ax) seed = (ay <= az) ? Vec3{0, 1, 0} : Vec3{0, 0, 1};
    f.u = normalize(seed - f.normal * dot(seed, f.normal));
    f.v = cross(f.normal, f.u);
    return f;
}

double parabola_segment_area(double chord, double sagitta) {
    return (2.0 / 3.0) * chord * sagitta;
}

namespace {

struct SimpsonCtx {
    const std::function<double(double)>& f;
    double abs_tol;

    double eval(double x) const {
        const double y = f(x);
        if (!std::isfinite(y)) throw NonFiniteValue("quadrature: non-finite integrand value");
        return y;
    }

    double recurse(double a, double m, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) const {
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = eval(lm);
        const double frm = eval(rm);
        const double h = b - a;
        const double left = (h / 12.0) * (fa + 4.0 * flm + fm);
        const double right = (h / 12.0) * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
            return left + right + delta / 15.0;
        return recurse(a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
               recurse(m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
    }

    double run(double a, double b, double tol) const {
        const double m = 0.5 * (a + b);
        const double fa = eval(a), fm = eval(m), fb = eval(b);
        const double whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
        return recurse(a, m, b, fa, fm, fb, whole, tol, 48);
    }
};

// Coarse composite Simpson, used to scale the relative tolerance.
double coarse_estimate(const SimpsonCtx& ctx, double a, double b, int n) {
    const double h = (b - a) / n;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x0 = a + i * h, x1 = x0 + h;
        sum += (h / 6.0) * (ctx.eval(x0) + 4.0 * ctx.eval(0.5 * (x0 + x1)) + ctx.eval(x1));
    }
    return sum;
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol, double abs_floor) {
    if (b <= a) return 0.0;
    SimpsonCtx ctx{f, abs_floor};
    const double rough = coarse_estimate(ctx, a, b, 16);
    const double abs_tol = std::max(tol * std::fabs(rough), abs_floor);
    return ctx.run(a, b, abs_tol);
}

double area_from_radius_fn(const std::function<double(double)>& r, double tol) {
    return area_from_radius_fn(r, tol, {});
}

double area_from_radius_fn(const std::function<double(double)>& r, double tol,
                           const std::vector<double>& breakpoints) {
    const double two_pi = 2.0 * M_PI;
    auto f = [&r](double th) {
        const double v = r(th);
        return 0.5 * v * v;
    };
    std::vector<double> cuts;
    cuts.push_back(0.0);
    for (double b : breakpoints) {
        const double w = std::fmod(std::fmod(b, two_pi) + two_pi, two_pi);
        if (w > 1e-12 && w < two_pi - 1e-12) cuts.push_back(w);
    }
    cuts.push_back(two_pi);
    std::sort(cuts.begin(), cuts.end());

    SimpsonCtx ctx{f, 1e-12};
    double rough = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        rough += coarse_estimate(ctx, cuts[i], cuts[i + 1],
                                 std::max(4, int(16 * (cuts[i + 1] - cuts[i]) / two_pi)));
    const double total_tol = std::max(tol * std::fabs(rough), 1e-12);

    double area = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double frac = (cuts[i + 1] - cuts[i]) / two_pi;
        area += ctx.run(cuts[i], cuts[i + 1], std::max(total_tol * frac, 1e-14));
    }
    return area;
}

} // namespace cylpack
