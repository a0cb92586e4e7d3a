#include "cylpack/slice.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "cylpack/extremal.hpp"
#include "cylpack/rng.hpp"

namespace cylpack {

const char* event_kind_name(EventKind k) {
    switch (k) {
        case EventKind::parabolic_arc: return "parabolic-arc";
        case EventKind::line: return "line";
        case EventKind::container_circle: return "container-circle";
        case EventKind::type1: return "type1";
        case EventKind::type2: return "type2";
        case EventKind::type3: return "type3";
    }
    return "?";
}

namespace {

constexpr int kContainer = -1;

enum class Sub { none, interior, end0, end1 };

struct ActiveLabel {
    int axis{kContainer};
    Sub sub{Sub::none};
    bool operator==(const ActiveLabel&) const = default;
};

struct Constraint {
    int j;
    double dist_x;
};

/// Evaluation context for one slice plane; resolves r(θ) as the minimum of
/// the container exit radius and the per-axis equidistance radii.
struct SliceContext {
    const Packing& p;
    int i;
    Vec3 x;
    PlaneFrame frame;
    double R;
    std::vector<Constraint> others;
    SliceOptions opts;

    SliceContext(const Packing& pk, int idx, const Vec3& pt, const SliceOptions& o)
        : p(pk), i(idx), x(pt), frame(plane_frame(pk.axes[idx], pt)), R(pk.R), opts(o) {
        others.reserve(p.size());
        for (int j = 0; j < int(p.size()); ++j)
            if (j != i) others.push_back({j, point_segment_distance(x, p.axes[j])});
        std::sort(others.begin(), others.end(),
                  [](const Constraint& a, const Constraint& b) { return a.dist_x < b.dist_x; });
    }

    Vec3 dir(double theta) const {
        return frame.u * std::cos(theta) + frame.v * std::sin(theta);
    }

    double ball_exit(const Vec3& d) const {
        const double xd = dot(x, d);
        return -xd + std::sqrt(std::max(0.0, xd * xd + R * R - norm2(x)));
    }

    // Largest r in [lo, hi] with dist(x + r·d, seg) ≥ r. The slack
    // g(r) = dist − r is non-increasing along the ray, so bisection applies.
    double constraint_exit(const Vec3& d, const Segment& seg, double lo, double hi) const {
        while (hi - lo > opts.r_tol) {
            const double mid = 0.5 * (lo + hi);
            if (point_segment_distance(x + d * mid, seg) >= mid)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    }

    double radius(double theta) const {
        ActiveLabel lab;
        return radius_active(theta, lab);
    }

    double radius_active(double theta, ActiveLabel& label) const {
        const Vec3 d = dir(theta);
        double r = ball_exit(d);
        label = {kContainer, Sub::none};
        for (const Constraint& c : others) {
            if (0.5 * c.dist_x >= r) break; // sorted: nothing further can bind
            const Segment& seg = p.axes[c.j];
            if (point_segment_distance(x + d * r, seg) >= r) continue;
            r = constraint_exit(d, seg, 0.5 * c.dist_x, r);
            label.axis = c.j;
        }
        if (label.axis != kContainer) {
            const double u = point_segment_closest_param(x + d * r, p.axes[label.axis]);
            label.sub = (u <= 0.0) ? Sub::end0 : (u >= 1.0) ? Sub::end1 : Sub::interior;
        }
        return r;
    }

    EventKind piece_kind(const ActiveLabel& lab) const {
        if (lab.axis == kContainer) return EventKind::container_circle;
        if (lab.sub != Sub::interior) return EventKind::line;
        const Vec3 dj = p.axes[lab.axis].direction();
        const double lj = norm(dj);
        if (lj > 1e-15 && std::fabs(dot(dj, frame.normal)) / lj > 1.0 - 1e-9)
            return EventKind::line; // axis ⊥ slice plane: bisector is straight
        return EventKind::parabolic_arc;
    }
};

struct Junction {
    double theta;
    ActiveLabel left, right;
    double radius;
};

std::vector<Junction> find_junctions(const SliceContext& ctx,
                                     std::vector<std::pair<double, double>>* samples,
                                     std::vector<ActiveLabel>* labels_out = nullptr) {
    const int n = ctx.opts.scan_samples;
    const double two_pi = 2.0 * M_PI;
    std::vector<double> rs(n);
    std::vector<ActiveLabel> labels(n);
    for (int k = 0; k < n; ++k) {
        const double th = two_pi * k / n;
        rs[k] = ctx.radius_active(th, labels[k]);
        if (samples) samples->emplace_back(th, rs[k]);
    }
    std::vector<Junction> out;
    for (int k = 0; k < n; ++k) {
        const int k2 = (k + 1) % n;
        if (labels[k] == labels[k2]) continue;
        double lo = two_pi * k / n, hi = two_pi * (k + 1) / n;
        const ActiveLabel left = labels[k];
        while (hi - lo > ctx.opts.theta_tol) {
            const double mid = 0.5 * (lo + hi);
            ActiveLabel lm;
            ctx.radius_active(mid, lm);
            (lm == left ? lo : hi) = mid;
        }
        Junction j;
        j.theta = 0.5 * (lo + hi);
        j.left = labels[k];
        j.right = labels[k2];
        ActiveLabel tmp;
        j.radius = ctx.radius_active(j.theta, tmp);
        out.push_back(j);
    }
    if (labels_out) *labels_out = std::move(labels);
    return out;
}

EventKind junction_kind(const Junction& j) {
    const bool lc = j.left.axis == kContainer, rc = j.right.axis == kContainer;
    if (lc != rc) return EventKind::type2;
    if (!lc && j.left.axis != j.right.axis) return EventKind::type3;
    return EventKind::type1; // same axis, arc/ray switch (or grazing container)
}

double area_with_ctx(const SliceContext& ctx, double rel_tol,
                     const std::vector<double>& breakpoints) {
    auto r = [&ctx](double th) { return ctx.radius(th); };
    return area_from_radius_fn(r, rel_tol, breakpoints);
}

} // namespace

double DirichletSlice::radius_at(double theta) const {
    return slice_radius(*packing, owner, frame.origin, theta, opts);
}

double DirichletSlice::min_radius() const {
    double m = 1e300;
    for (const auto& s : radius_samples) m = std::min(m, s.second);
    return m;
}

double DirichletSlice::max_radius() const {
    double m = 0.0;
    for (const auto& s : radius_samples) m = std::max(m, s.second);
    return m;
}

double slice_radius(const Packing& p, int i, const Vec3& x, double theta,
                    const SliceOptions& opts) {
    SliceContext ctx(p, i, x, opts);
    return ctx.radius(theta);
}

bool slice_contains(const Packing& p, int i, const Vec3& x, const Vec3& q) {
    if (norm2(q) > p.R * p.R) return false;
    const double rq = norm(q - x);
    for (int j = 0; j < int(p.size()); ++j) {
        if (j == i) continue;
        if (point_segment_distance(q, p.axes[j]) < rq) return false;
    }
    return true;
}

DirichletSlice build_slice(const Packing& p, int i, const Vec3& x, const SliceOptions& opts) {
    SliceContext ctx(p, i, x, opts);
    DirichletSlice s;
    s.frame = ctx.frame;
    s.owner = i;
    s.packing = &p;
    s.opts = opts;

    std::vector<ActiveLabel> labels;
    const std::vector<Junction> js = find_junctions(ctx, &s.radius_samples, &labels);

    if (js.empty()) {
        BoundaryEvent piece;
        piece.theta = 0.0;
        piece.kind = ctx.piece_kind(labels.empty() ? ActiveLabel{} : labels[0]);
        piece.axis_a = labels.empty() ? kContainer : labels[0].axis;
        piece.radius = s.radius_samples.empty() ? 0.0 : s.radius_samples[0].second;
        s.boundary_events.push_back(piece);
        return s;
    }
    for (const Junction& j : js) {
        BoundaryEvent ev;
        ev.theta = j.theta;
        ev.kind = junction_kind(j);
        ev.axis_a = j.left.axis;
        ev.axis_b = j.right.axis;
        ev.radius = j.radius;
        s.boundary_events.push_back(ev);
        BoundaryEvent piece;
        piece.theta = j.theta;
        piece.kind = ctx.piece_kind(j.right);
        piece.axis_a = j.right.axis;
        piece.radius = j.radius;
        s.boundary_events.push_back(piece);
    }
    return s;
}

double slice_area(const Packing& p, int i, const Vec3& x, double rel_tol) {
    SliceOptions opts;
    opts.area_rel_tol = rel_tol;
    SliceContext ctx(p, i, x, opts);
    const std::vector<Junction> js = find_junctions(ctx, nullptr);
    std::vector<double> cuts;
    cuts.reserve(js.size());
    for (const Junction& j : js) cuts.push_back(j.theta);
    return area_with_ctx(ctx, rel_tol, cuts);
}

bool slice_samples_convex(const DirichletSlice& s, double rel_tol) {
    const int n = int(s.radius_samples.size());
    if (n < 4) return true;
    auto pt = [&](int k) {
        const auto& [th, r] = s.radius_samples[k % n];
        return std::pair<double, double>{r * std::cos(th), r * std::sin(th)};
    };
    for (int k = 0; k < n; ++k) {
        const auto [ax, ay] = pt(k);
        const auto [bx, by] = pt(k + 1);
        const auto [cx, cy] = pt(k + 2);
        const double e1x = bx - ax, e1y = by - ay;
        const double e2x = cx - bx, e2y = cy - by;
        const double cr = e1x * e2y - e1y * e2x;
        const double scale = std::sqrt((e1x * e1x + e1y * e1y) * (e2x * e2x + e2y * e2y));
        if (cr < -rel_tol * std::max(scale, 1e-30)) return false;
    }
    return true;
}

bool has_end_near(const Packing& p, const Vec3& x) {
    const double r = BoundParams::get().r_end;
    const double r2 = (r + 1e-12) * (r + 1e-12);
    for (const auto& a : p.axes)
        if (norm2(a.p0 - x) <= r2 || norm2(a.p1 - x) <= r2) return true;
    return false;
}

bool is_qualified(const Packing& p, int i, const Vec3& x, double tol) {
    return slice_area(p, i, x, tol) > BoundParams::get().hex_area + tol;
}

TruncateResult truncate_rearrange(const DirichletSlice& s) {
    if (!s.packing) throw DomainError("truncate_rearrange: slice has no packing");
    const BoundParams& bp = BoundParams::get();
    const double r_hex = bp.r_hex;
    const double two_pi = 2.0 * M_PI;
    SliceContext ctx(*s.packing, s.owner, s.frame.origin, s.opts);

    // Step 1 vertices: boundary ∩ S_x(2/√3). Transversal crossings come from
    // sign changes of r − 2/√3; junctions on the circle count as well
    // (the hexagonal slice touches the circle without crossing it).
    std::vector<double> verts;
    const auto& samples = s.radius_samples;
    const int n = int(samples.size());
    if (n < 8) throw DomainError("truncate_rearrange: slice has too few samples");
    for (int k = 0; k < n; ++k) {
        const int k2 = (k + 1) % n;
        const double f0 = samples[k].second - r_hex;
        const double f1 = samples[k2].second - r_hex;
        if ((f0 > 0.0) == (f1 > 0.0)) continue;
        double lo = samples[k].first, hi = lo + two_pi / n;
        const bool low_side = f0 > 0.0;
        while (hi - lo > s.opts.theta_tol) {
            const double mid = 0.5 * (lo + hi);
            ((ctx.radius(mid) - r_hex > 0.0) == low_side ? lo : hi) = mid;
        }
        verts.push_back(std::fmod(0.5 * (lo + hi), two_pi));
    }
    for (const BoundaryEvent& ev : s.boundary_events) {
        if (ev.kind == EventKind::parabolic_arc || ev.kind == EventKind::line ||
            ev.kind == EventKind::container_circle)
            continue;
        if (ev.radius <= r_hex + 1e-6) verts.push_back(ev.theta);
    }
    std::sort(verts.begin(), verts.end());
    // merge duplicates (a junction on the circle may also register as a crossing)
    std::vector<double> uniq;
    for (double v : verts) {
        if (!uniq.empty() && v - uniq.back() < 1e-7) continue;
        if (!uniq.empty() && v + 1e-7 > uniq.front() + two_pi) continue;
        uniq.push_back(v);
    }
    verts = std::move(uniq);

    // Step 1 area: d_x ∩ disc(2/√3)
    std::vector<double> cuts = verts;
    for (const BoundaryEvent& ev : s.boundary_events) cuts.push_back(ev.theta);
    auto r_clipped = [&](double th) { return std::min(ctx.radius(th), r_hex); };
    TruncateResult res;
    res.area_dstar = area_from_radius_fn(r_clipped, s.opts.area_rel_tol, cuts);

    // Steps 2-3: sector composition from the vertex angles.
    std::vector<double> betas;
    if (verts.empty()) {
        double rmin = 1e300;
        for (const auto& sm : samples) rmin = std::min(rmin, sm.second);
        if (rmin < r_hex - 1e-9)
            throw DomainError("truncate_rearrange: boundary never reaches S_x(2/sqrt3); "
                              "qualification hypotheses violated");
        betas.assign(6, two_pi / 6.0); // full container arc, equal subdivision
    } else {
        const int m = int(verts.size());
        for (int k = 0; k < m; ++k) {
            const double a = verts[k];
            const double b = (k + 1 < m) ? verts[k + 1] : verts[0] + two_pi;
            const double gap = b - a;
            if (gap < 1e-12) continue;
            const double r_mid = ctx.radius(0.5 * (a + b));
            if (r_mid >= r_hex) {
                // circular arc of S_x(2/√3): equal pieces of at most 60°
                const int q = std::max(1, int(std::ceil(gap / (M_PI / 3.0) - 1e-12)));
                for (int c = 0; c < q; ++c) betas.push_back(gap / q);
            } else {
                betas.push_back(gap);
            }
        }
    }

    double beta_sum = 0.0;
    for (double b : betas) beta_sum += b;
    if (std::fabs(beta_sum - two_pi) > 1e-9)
        throw DomainError("truncate_rearrange: sector angles do not close up");

    for (double b : betas) {
        if (b > bp.alpha0 + 1e-9)
            throw AngleExceedsAlpha0("truncate_rearrange: sector of " + std::to_string(b) +
                                     " rad exceeds alpha0");
        TruncatePiece piece;
        piece.beta = b;
        piece.parabola = piece_is_parabola(b);
        piece.area = piece_area(b);
        res.pieces.push_back(piece);
        res.area_dstarstar += piece.area;
    }
    return res;
}

std::optional<double> equidistant_angle_max(const Packing& p, int i, int j, const Vec3& x,
                                            const SliceOptions& opts) {
    if (i == j) throw DomainError("equidistant_angle_max: need i != j");
    const double r_hex = BoundParams::get().r_hex;
    SliceContext ctx(p, i, x, opts);
    const Segment& seg = p.axes[j];
    auto f = [&](double th) {
        return point_segment_distance(x + ctx.dir(th) * r_hex, seg) - r_hex;
    };
    const int n = 2048;
    const double two_pi = 2.0 * M_PI;
    std::vector<double> roots;
    double f_prev = f(0.0);
    for (int k = 1; k <= n; ++k) {
        const double th = two_pi * k / n;
        const double fk = f(th);
        if ((f_prev > 0.0) != (fk > 0.0)) {
            double lo = two_pi * (k - 1) / n, hi = th;
            const bool low_pos = f_prev > 0.0;
            while (hi - lo > opts.theta_tol) {
                const double mid = 0.5 * (lo + hi);
                ((f(mid) > 0.0) == low_pos ? lo : hi) = mid;
            }
            roots.push_back(0.5 * (lo + hi));
        }
        f_prev = fk;
    }
    if (roots.empty()) return std::nullopt;
    double best = 0.0;
    for (std::size_t a = 0; a < roots.size(); ++a)
        for (std::size_t b = a + 1; b < roots.size(); ++b) {
            double d = std::fabs(roots[a] - roots[b]);
            d = std::min(d, two_pi - d);
            best = std::max(best, d);
        }
    return best;
}

namespace {

void end_intervals_on_axis(const Segment& axis, const Vec3& e, double radius,
                           std::vector<std::pair<double, double>>& out) {
    const double len = axis.length();
    if (len < 1e-15) return;
    const Vec3 u = axis.direction() / len;
    const Vec3 w = e - axis.p0;
    const double c = dot(w, u);
    const double disc = radius * radius - (norm2(w) - c * c);
    if (disc < 0.0) return;
    const double half = std::sqrt(disc);
    const double lo = std::max(0.0, c - half);
    const double hi = std::min(len, c + half);
    if (hi > lo) out.emplace_back(lo, hi);
}

double merged_length(std::vector<std::pair<double, double>>& iv) {
    if (iv.empty()) return 0.0;
    std::sort(iv.begin(), iv.end());
    double total = 0.0;
    double lo = iv[0].first, hi = iv[0].second;
    for (std::size_t k = 1; k < iv.size(); ++k) {
        if (iv[k].first <= hi) {
            hi = std::max(hi, iv[k].second);
        } else {
            total += hi - lo;
            lo = iv[k].first;
            hi = iv[k].second;
        }
    }
    total += hi - lo;
    // normalize in place to the merged set
    std::vector<std::pair<double, double>> merged;
    lo = iv[0].first;
    hi = iv[0].second;
    for (std::size_t k = 1; k < iv.size(); ++k) {
        if (iv[k].first <= hi) {
            hi = std::max(hi, iv[k].second);
        } else {
            merged.emplace_back(lo, hi);
            lo = iv[k].first;
            hi = iv[k].second;
        }
    }
    merged.emplace_back(lo, hi);
    iv = std::move(merged);
    return total;
}

// Cell grid over end points; cell size 8, queried by inflated segment AABBs.
struct EndsGrid {
    double cell{8.0};
    std::vector<std::pair<std::int64_t, int>> entries;

    static std::int64_t key(int ix, int iy, int iz) {
        const std::int64_t b = 1 << 20;
        return (std::int64_t(ix) + b) + ((std::int64_t(iy) + b) << 21) +
               ((std::int64_t(iz) + b) << 42);
    }

    explicit EndsGrid(const std::vector<Vec3>& ends) {
        entries.reserve(ends.size());
        for (int k = 0; k < int(ends.size()); ++k) {
            const Vec3& e = ends[k];
            entries.emplace_back(key(int(std::floor(e.x / cell)), int(std::floor(e.y / cell)),
                                     int(std::floor(e.z / cell))),
                                 k);
        }
        std::sort(entries.begin(), entries.end());
    }

    template <class F>
    void visit(const Segment& s, double inflate, F&& f) const {
        const double lox = std::min(s.p0.x, s.p1.x) - inflate;
        const double hix = std::max(s.p0.x, s.p1.x) + inflate;
        const double loy = std::min(s.p0.y, s.p1.y) - inflate;
        const double hiy = std::max(s.p0.y, s.p1.y) + inflate;
        const double loz = std::min(s.p0.z, s.p1.z) - inflate;
        const double hiz = std::max(s.p0.z, s.p1.z) + inflate;
        for (int ix = int(std::floor(lox / cell)); ix <= int(std::floor(hix / cell)); ++ix)
            for (int iy = int(std::floor(loy / cell)); iy <= int(std::floor(hiy / cell)); ++iy)
                for (int iz = int(std::floor(loz / cell)); iz <= int(std::floor(hiz / cell));
                     ++iz) {
                    const std::int64_t k = key(ix, iy, iz);
                    auto it = std::lower_bound(entries.begin(), entries.end(),
                                               std::make_pair(k, -1));
                    for (; it != entries.end() && it->first == k; ++it) f(it->second);
                }
    }
};

template <class Fn>
void parallel_over(int n, Fn&& fn) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const int nw = int(std::min<unsigned>(hw, 8));
    if (nw <= 1 || n < 64) {
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

AxisMeasure axis_measures(const Packing& p, double R_inner) {
    const Packing q = (p.restricted_to && std::fabs(*p.restricted_to - R_inner) < 1e-12)
                          ? p
                          : restrict_to(p, R_inner);
    const double r_end = BoundParams::get().r_end;
    const std::vector<Vec3> ends = all_ends(q);
    const int n = int(q.size());

    AxisMeasure am;
    am.n = n;
    am.per_axis.resize(n);

    const bool use_grid = n > 2000;
    EndsGrid* grid = nullptr;
    EndsGrid grid_storage({});
    if (use_grid) {
        grid_storage = EndsGrid(ends);
        grid = &grid_storage;
    }

    parallel_over(n, [&](int i) {
        AxisZIntervals& zi = am.per_axis[i];
        zi.axis = i;
        const Segment& axis = q.axes[i];
        std::vector<std::pair<double, double>> iv;
        if (use_grid) {
            grid->visit(axis, r_end + 1e-9,
                        [&](int k) { end_intervals_on_axis(axis, ends[k], r_end, iv); });
        } else {
            for (const Vec3& e : ends) end_intervals_on_axis(axis, e, r_end, iv);
        }
        zi.mu_z = merged_length(iv);
        zi.intervals = std::move(iv);
        zi.mu_y = axis.length() - zi.mu_z;
    });

    for (const auto& zi : am.per_axis) {
        am.mu_z += zi.mu_z;
        am.mu_y += zi.mu_y;
        am.mu_a += zi.mu_z + zi.mu_y;
    }
    const double t0 = BoundParams::get().t0;
    if (am.mu_z > 2.0 * n * t0 + 1e-6)
        throw std::logic_error("axis_measures: mu(Z) exceeds 2*n*t0");
    return am;
}

double end_ball_axis_length(const Packing& p, const Vec3& end) {
    const double r_end = BoundParams::get().r_end;
    double total = 0.0;
    std::vector<std::pair<double, double>> iv;
    for (const auto& axis : p.axes) {
        iv.clear();
        end_intervals_on_axis(axis, end, r_end, iv);
        for (const auto& [lo, hi] : iv) total += hi - lo;
    }
    return total;
}

IdentityResult cell_volume_identity(const Packing& p, int i, long long n_mc,
                                    std::uint64_t seed, int jobs, double quad_rel_tol) {
    const Segment& axis = p.axes[i];
    const double len = axis.length();
    const Vec3 u = axis.direction() / len;

    // Panel boundaries at the Z-interval endpoints: Area(d_x) is only
    // piecewise continuous across them.
    const double r_end = BoundParams::get().r_end;
    std::vector<double> cuts{0.0, len};
    {
        std::vector<std::pair<double, double>> iv;
        for (const Vec3& e : all_ends(p)) end_intervals_on_axis(axis, e, r_end, iv);
        for (const auto& [lo, hi] : iv) {
            if (lo > 1e-12 && lo < len - 1e-12) cuts.push_back(lo);
            if (hi > 1e-12 && hi < len - 1e-12) cuts.push_back(hi);
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end(),
                               [](double a, double b) { return std::fabs(a - b) < 1e-10; }),
                   cuts.end());
    }

    const double area_tol = std::max(1e-6, quad_rel_tol / 10.0);
    auto area_at = [&](double s) {
        return slice_area(p, i, axis.p0 + u * s, area_tol);
    };

    IdentityResult res;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
        res.integral_value += integrate_adaptive(area_at, cuts[k], cuts[k + 1], quad_rel_tol);

    // Monte Carlo volume of D_i⁰ = D_i ∩ L_i inside B(R).
    const double a_off = dot(axis.p0, u);
    Aabb box;
    auto support = [&](const Vec3& e) {
        const double eu = dot(e, u);
        const double proj = p.R * eu;
        if (proj >= a_off && proj <= a_off + len) return p.R;
        const double c = (proj < a_off) ? a_off : a_off + len;
        const Vec3 perp = e - u * eu;
        return c * eu + std::sqrt(std::max(0.0, p.R * p.R - c * c)) * norm(perp);
    };
    box.lo = {-support({-1, 0, 0}), -support({0, -1, 0}), -support({0, 0, -1})};
    box.hi = {support({1, 0, 0}), support({0, 1, 0}), support({0, 0, 1})};

    auto member = [&](const Vec3& qpt) {
        if (norm2(qpt) > p.R * p.R) return false;
        const double s = dot(qpt - axis.p0, u);
        if (s < 0.0 || s > len) return false;
        const double di = point_segment_distance(qpt, axis);
        for (int j = 0; j < int(p.size()); ++j) {
            if (j == i) continue;
            if (point_segment_distance(qpt, p.axes[j]) < di) return false;
        }
        return true;
    };
    const McResult mc = mc_volume(member, box, n_mc, seed, false, jobs);
    res.mc_value = mc.estimate;
    res.mc_std_error = mc.std_error;
    return res;
}

double certified_bound_for_packing(const Packing& p, double R_inner, double z_pad) {
    if (!p.capped) throw DomainError("certified_bound_for_packing: capped packings only");
    const AxisMeasure am = axis_measures(p, R_inner);
    if (am.n == 0) return 0.0;

    double mu_z = 0.0;
    if (z_pad > 0.0) {
        for (const auto& zi : am.per_axis) {
            double padded = 0.0;
            for (const auto& [lo, hi] : zi.intervals) padded += (hi - lo) + 2.0 * z_pad;
            mu_z += std::min(padded, zi.mu_z + zi.mu_y);
        }
    } else {
        mu_z = am.mu_z;
    }
    const double mu_y = am.mu_a - mu_z;

    const double s12 = BoundParams::get().hex_area;
    const double caps = am.n * (4.0 / 3.0) * M_PI;
    const double num = M_PI * am.mu_a + caps;
    const double den = s12 * mu_y + M_PI * mu_z + caps;
    return num / den;
}

} // namespace cylpack
