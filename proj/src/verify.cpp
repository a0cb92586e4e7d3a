#include "cylpack/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "cylpack/bounds.hpp"
#include "cylpack/extremal.hpp"
#include "cylpack/rng.hpp"
#include "cylpack/slice.hpp"

namespace cylpack {

namespace {

Vec3 random_unit(Rng& rng) {
    const double z = rng.uniform(-1.0, 1.0);
    const double phi = rng.uniform(0.0, 2.0 * M_PI);
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {s * std::cos(phi), s * std::sin(phi), z};
}

Vec3 random_in_ball(Rng& rng, double radius) {
    for (int k = 0; k < 256; ++k) {
        const Vec3 v{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        if (norm2(v) <= 1.0) return v * radius;
    }
    return {0.0, 0.0, 0.0};
}

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(10);
    out << v;
    return out.str();
}

template <class Fn>
void parallel_indexed(int n, int jobs, Fn&& fn) {
    const int nw = std::max(1, jobs);
    if (nw == 1 || n < 2) {
        for (int k = 0; k < n; ++k) fn(k);
        return;
    }
    std::vector<std::thread> threads;
    for (int w = 0; w < nw; ++w)
        threads.emplace_back([&, w] {
            for (int k = w; k < n; k += nw) fn(k);
        });
    for (auto& t : threads) t.join();
}

} // namespace

Packing random_valid_capped_packing(std::uint64_t seed) {
    Rng rng(seed);
    const int n = rng.uniform_int(5, 20);
    const double t = rng.uniform(10.0, 60.0);
    const double R = rng.uniform(t, 2.0 * t);

    Packing p;
    p.capped = true;
    p.t = t;
    p.R = R;
    const double mid_radius = R - 2.0 - t / 2.0;
    for (int c = 0; c < n; ++c) {
        for (int attempt = 0; attempt < 400; ++attempt) {
            const Vec3 dir = random_unit(rng);
            const Vec3 mid = random_in_ball(rng, mid_radius);
            const Segment axis{mid - dir * (t / 2.0), mid + dir * (t / 2.0)};
            bool ok = true;
            for (const auto& other : p.axes)
                if (segment_segment_distance(axis, other) < 2.0 + 1e-6) {
                    ok = false;
                    break;
                }
            if (ok) {
                p.axes.push_back(axis);
                break;
            }
        }
    }
    return p;
}

bool sample_protected_point(const Packing& p, std::uint64_t seed, int& axis, Vec3& x) {
    Rng rng(seed);
    const double r_end = BoundParams::get().r_end;
    const double inner = p.R - 2.0 / std::sqrt(3.0);
    for (int attempt = 0; attempt < 200; ++attempt) {
        const int i = rng.uniform_int(0, int(p.size()) - 1);
        const double len = p.axes[i].length();
        const double margin = r_end + 0.05;
        if (len < 2.0 * margin + 1e-9) continue;
        const double s = rng.uniform(margin, len - margin);
        const Vec3 pt = p.axes[i].at(s / len);
        if (norm(pt) > inner - 1e-9) continue;
        if (has_end_near(p, pt)) continue;
        axis = i;
        x = pt;
        return true;
    }
    return false;
}

SuiteResult verify_extremal(const VerifyOptions& opt) {
    SuiteResult suite{"extremal"};
    const ExtremalResult res = min_total_area(5, 64, opt.multistarts, opt.seed);
    const double s12 = std::sqrt(12.0);

    CheckResult min_check;
    min_check.name = "min_total_area = sqrt(12)";
    min_check.margin = 1e-6 - std::fabs(res.min_area - s12);
    min_check.pass = min_check.margin >= 0.0;
    min_check.detail = "min=" + fmt(res.min_area) + " pieces=" + std::to_string(res.n_pieces);
    suite.add(min_check);

    CheckResult arg_check;
    arg_check.name = "argmin is six 60-degree chords";
    double worst = 0.0;
    for (double b : res.argmin) worst = std::max(worst, std::fabs(b - M_PI / 3.0));
    arg_check.margin = 1e-4 - worst;
    arg_check.pass = res.n_pieces == 6 && arg_check.margin >= 0.0;
    arg_check.detail = "max |beta - 60deg| = " + fmt(worst);
    suite.add(arg_check);
    return suite;
}

SuiteResult verify_three_ball(const VerifyOptions& opt) {
    SuiteResult suite{"three-ball"};
    const double expected = 2.0 / std::sqrt(3.0) - 1.0;
    for (int s = 0; s < opt.seeds; ++s) {
        const ThreeBallResult res = three_ball_min_radius(8, opt.seed + s);
        CheckResult c;
        c.name = "three-ball seed " + std::to_string(s);
        c.margin = 1e-6 - std::fabs(res.radius - expected);
        c.pass = c.margin >= 0.0;
        c.detail = "radius=" + fmt(res.radius) + " dmin=" + fmt(res.min_pair_distance);
        suite.add(c);
    }
    return suite;
}

SuiteResult verify_qualified(const VerifyOptions& opt) {
    SuiteResult suite{"qualified"};
    const double s12 = std::sqrt(12.0);

    struct Worst {
        double area{1e300};
        int packing{-1};
    };
    std::vector<Worst> results(opt.packings);
    std::vector<int> sampled(opt.packings, 0);

    parallel_indexed(opt.packings, opt.jobs, [&](int k) {
        const Packing p = random_valid_capped_packing(splitmix64(opt.seed + 1000 + k));
        Worst w;
        w.packing = k;
        for (int q = 0; q < opt.points; ++q) {
            int axis = -1;
            Vec3 x;
            if (!sample_protected_point(p, splitmix64(opt.seed ^ (k * 131 + q)), axis, x))
                continue;
            ++sampled[k];
            w.area = std::min(w.area, slice_area(p, axis, x, 1e-6));
        }
        results[k] = w;
    });

    Worst global;
    long long total_points = 0;
    for (int k = 0; k < opt.packings; ++k) {
        total_points += sampled[k];
        if (results[k].area < global.area) global = results[k];
    }

    CheckResult c;
    c.name = "protected slice areas > sqrt(12) - 1e-6";
    c.margin = global.area - (s12 - 1e-6);
    c.pass = c.margin >= 0.0 && total_points > 0;
    c.detail = "min area=" + fmt(global.area) + " over " + std::to_string(total_points) +
               " points (worst packing seed index " + std::to_string(global.packing) + ")";
    suite.add(c);

    // hexagonal-lattice interior slice: the Voronoi hexagon of area √12
    {
        const Packing hex = gen_hexagonal_parallel(10.0, 30.0, true);
        const Packing inner = restrict_to(hex, hex.R - 2.0 / std::sqrt(3.0));
        int ci = -1;
        for (int i = 0; i < int(inner.size()); ++i) {
            const Vec3 m = inner.axes[i].midpoint();
            if (std::fabs(m.x) < 1e-9 && std::fabs(m.y) < 1e-9 && std::fabs(m.z) < 1e-9) ci = i;
        }
        CheckResult h;
        h.name = "hexagonal interior slice area = sqrt(12)";
        if (ci < 0) {
            h.pass = false;
            h.detail = "central cylinder not found";
        } else {
            const double area = slice_area(inner, ci, inner.axes[ci].midpoint(), 1e-7);
            h.margin = 1e-5 - std::fabs(area - s12);
            h.pass = h.margin >= 0.0;
            h.detail = "area=" + fmt(area);
        }
        suite.add(h);
    }
    return suite;
}

namespace {

struct AngleConfig {
    Packing p;
    Vec3 x;
};

// Two long capped cylinders; x mid-axis of the first, the second approaching
// within [2, 2.3] of x with no end inside B_x(4/√3).
AngleConfig random_angle_config(std::uint64_t seed) {
    Rng rng(seed);
    const double r_end = BoundParams::get().r_end;
    AngleConfig cfg;
    cfg.p.capped = true;
    cfg.p.mixed = true;
    cfg.p.t = 20.0;
    cfg.p.R = 60.0;
    cfg.x = {0, 0, 0};
    cfg.p.axes.emplace_back(Vec3{0, 0, -10}, Vec3{0, 0, 10});
    for (int attempt = 0; attempt < 500; ++attempt) {
        const Vec3 d = random_unit(rng);
        Vec3 w0 = random_unit(rng);
        const Vec3 wp = w0 - d * dot(w0, d);
        if (norm(wp) < 1e-6) continue;
        const Vec3 w = wp / norm(wp);
        const double rho = rng.uniform(2.0, 2.3);
        const Vec3 nearest = cfg.x + w * rho;
        const double s_lo = rng.uniform(r_end + 0.1, r_end + 8.0);
        const double s_hi = rng.uniform(r_end + 0.1, r_end + 8.0);
        const Segment axis{nearest - d * s_lo, nearest + d * s_hi};
        if (segment_segment_distance(axis, cfg.p.axes[0]) < 2.0) continue;
        cfg.p.axes.push_back(axis);
        break;
    }
    return cfg;
}

} // namespace

SuiteResult verify_angle(const VerifyOptions& opt) {
    SuiteResult suite{"angle"};
    const double a0 = BoundParams::get().alpha0;

    std::vector<double> angles(opt.configs, -1.0);
    parallel_indexed(opt.configs, opt.jobs, [&](int k) {
        const AngleConfig cfg = random_angle_config(splitmix64(opt.seed + 7000 + k));
        if (cfg.p.size() < 2) return;
        if (has_end_near(cfg.p, cfg.x)) return; // construction guarantees this
        const auto ang = equidistant_angle_max(cfg.p, 0, 1, cfg.x);
        if (ang) angles[k] = *ang;
    });

    double worst = -1.0;
    int hits = 0;
    for (double a : angles) {
        if (a < 0.0) continue;
        ++hits;
        worst = std::max(worst, a);
    }
    CheckResult c;
    c.name = "equidistant angles <= alpha0";
    c.margin = (a0 + 1e-6) - worst;
    c.pass = c.margin >= 0.0 && hits > 0;
    c.detail = "max angle=" + fmt(worst) + " rad over " + std::to_string(hits) + " configs";
    suite.add(c);

    {
        Packing pair;
        pair.capped = true;
        pair.t = 20.0;
        pair.R = 40.0;
        pair.axes.emplace_back(Vec3{0, 0, -10}, Vec3{0, 0, 10});
        pair.axes.emplace_back(Vec3{2, 0, -10}, Vec3{2, 0, 10});
        const auto ang = equidistant_angle_max(pair, 0, 1, {0, 0, 0});
        CheckResult t;
        t.name = "parallel tangent pair angle = 60 degrees";
        if (!ang) {
            t.pass = false;
            t.detail = "no equidistant points found";
        } else {
            t.margin = 1e-6 - std::fabs(*ang - M_PI / 3.0);
            t.pass = t.margin >= 0.0;
            t.detail = "angle=" + fmt(*ang);
        }
        suite.add(t);
    }
    return suite;
}

Packing identity_config_isolated() {
    Packing p;
    p.capped = true;
    p.t = 2.0;
    p.R = 5.0;
    p.axes.emplace_back(Vec3{0, 0, -1}, Vec3{0, 0, 1});
    return p;
}

Packing identity_config_tangent_pair() {
    Packing p;
    p.capped = true;
    p.t = 2.0;
    p.R = 6.0;
    p.axes.emplace_back(Vec3{0, 0, -1}, Vec3{0, 0, 1});
    p.axes.emplace_back(Vec3{2, 0, -1}, Vec3{2, 0, 1});
    return p;
}

Packing identity_config_hex_cluster() {
    Packing p;
    p.capped = true;
    p.t = 4.0;
    p.R = 8.0;
    p.axes.emplace_back(Vec3{0, 0, -2}, Vec3{0, 0, 2});
    for (int k = 0; k < 6; ++k) {
        const double a = k * M_PI / 3.0;
        p.axes.emplace_back(Vec3{2 * std::cos(a), 2 * std::sin(a), -2},
                            Vec3{2 * std::cos(a), 2 * std::sin(a), 2});
    }
    return p;
}

SuiteResult verify_identity(const VerifyOptions& opt) {
    SuiteResult suite{"identity"};
    struct Case {
        const char* name;
        Packing p;
    };
    const Case cases[] = {
        {"isolated cylinder", identity_config_isolated()},
        {"tangent pair", identity_config_tangent_pair()},
        {"hex cluster", identity_config_hex_cluster()},
    };
    int idx = 0;
    for (const Case& cs : cases) {
        const IdentityResult res =
            cell_volume_identity(cs.p, 0, opt.samples, opt.seed + 40 + idx, opt.jobs, 1e-4);
        const double budget = 4.0 * res.mc_std_error + 0.01 * std::fabs(res.integral_value);
        CheckResult c;
        c.name = std::string("identity: ") + cs.name;
        c.margin = budget - std::fabs(res.integral_value - res.mc_value);
        c.pass = c.margin >= 0.0;
        c.detail = "integral=" + fmt(res.integral_value) + " mc=" + fmt(res.mc_value) +
                   " se=" + fmt(res.mc_std_error);
        suite.add(c);
        ++idx;
    }
    return suite;
}

SuiteResult verify_dominance(const VerifyOptions& opt) {
    SuiteResult suite{"dominance"};
    const DominanceResult res = dominance_check(default_dominance_grid(opt.grid_points));
    CheckResult c;
    c.name = "rule of thumb dominates both bounds";
    c.margin = res.worst_margin;
    c.pass = res.pass;
    c.detail = "worst margin=" + fmt(res.worst_margin) + " at t=" + fmt(res.worst_t) + " over " +
               std::to_string(res.points) + " grid points";
    suite.add(c);
    return suite;
}

SuiteResult verify_all(const VerifyOptions& opt) {
    SuiteResult all{"all"};
    for (const SuiteResult& s :
         {verify_extremal(opt), verify_three_ball(opt), verify_qualified(opt), verify_angle(opt),
          verify_identity(opt), verify_dominance(opt)}) {
        for (const CheckResult& c : s.checks) {
            CheckResult named = c;
            named.name = s.suite + ": " + c.name;
            all.add(named);
        }
    }
    return all;
}

} // namespace cylpack
