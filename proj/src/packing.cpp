#include "cylpack/packing.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <unordered_map>

#include "cylpack/rng.hpp"

namespace cylpack {

const BoundParams& BoundParams::get() {
    static const BoundParams p = [] {
        BoundParams b;
        const double s3 = std::sqrt(3.0);
        b.t0 = (4.0 / 3.0) * std::pow(4.0 / s3 + 1.0, 3);
        b.alpha0 = 2.0 * std::acos(s3 - 1.0);
        b.r_hex = 2.0 / s3;
        b.r_end = 4.0 / s3;
        b.hex_area = std::sqrt(12.0);
        return b;
    }();
    return p;
}

double Packing::total_axis_length() const {
    double sum = 0.0;
    for (const auto& a : axes) sum += a.length();
    return sum;
}

double cylinder_volume(double t, bool capped) {
    return M_PI * t + (capped ? 4.0 * M_PI / 3.0 : 0.0);
}

bool contains_in_ball(const CylinderSpec& c, double R) {
    const double tol = 1e-9;
    if (c.capped) {
        const double r = R - 1.0;
        if (r < 0.0) return false;
        return norm(c.axis.p0) <= r + tol && norm(c.axis.p1) <= r + tol;
    }
    // Farthest points of an uncapped cylinder are on the end rims:
    // max |e + w| over unit w ⊥ axis is sqrt(|e|² + 1 + 2|e_perp|).
    const Vec3 d = normalize(c.axis.direction(), 1e-15);
    for (const Vec3& e : {c.axis.p0, c.axis.p1}) {
        const Vec3 perp = e - d * dot(e, d);
        const double rim2 = norm2(e) + 1.0 + 2.0 * norm(perp);
        if (rim2 > (R + tol) * (R + tol)) return false;
    }
    return true;
}

namespace {

// Uniform grid over inflated segment AABBs; cell size 2 + t/4.
struct SegmentGrid {
    double cell;
    Vec3 lo;
    std::unordered_map<std::int64_t, std::vector<int>> cells;

    static std::int64_t key(int ix, int iy, int iz) {
        const std::int64_t b = 1 << 20;
        return (std::int64_t(ix) + b) + ((std::int64_t(iy) + b) << 21) +
               ((std::int64_t(iz) + b) << 42);
    }

    explicit SegmentGrid(const Packing& p, double inflate) {
        cell = 2.0 + p.t / 4.0;
        lo = {-p.R - 2.0, -p.R - 2.0, -p.R - 2.0};
        for (int i = 0; i < int(p.size()); ++i) insert(i, p.axes[i], inflate);
    }

    void cell_range(const Vec3& a, const Vec3& b, double inflate, int out[6]) const {
        out[0] = int(std::floor((std::min(a.x, b.x) - inflate - lo.x) / cell));
        out[1] = int(std::floor((std::max(a.x, b.x) + inflate - lo.x) / cell));
        out[2] = int(std::floor((std::min(a.y, b.y) - inflate - lo.y) / cell));
        out[3] = int(std::floor((std::max(a.y, b.y) + inflate - lo.y) / cell));
        out[4] = int(std::floor((std::min(a.z, b.z) - inflate - lo.z) / cell));
        out[5] = int(std::floor((std::max(a.z, b.z) + inflate - lo.z) / cell));
    }

    void insert(int idx, const Segment& s, double inflate) {
        int r[6];
        cell_range(s.p0, s.p1, inflate, r);
        for (int ix = r[0]; ix <= r[1]; ++ix)
            for (int iy = r[2]; iy <= r[3]; ++iy)
                for (int iz = r[4]; iz <= r[5]; ++iz) cells[key(ix, iy, iz)].push_back(idx);
    }

    template <class F>
    void visit_candidates(const Segment& s, double inflate, F&& f) const {
        int r[6];
        cell_range(s.p0, s.p1, inflate, r);
        for (int ix = r[0]; ix <= r[1]; ++ix)
            for (int iy = r[2]; iy <= r[3]; ++iy)
                for (int iz = r[4]; iz <= r[5]; ++iz) {
                    auto it = cells.find(key(ix, iy, iz));
                    if (it == cells.end()) continue;
                    for (int j : it->second) f(j);
                }
    }
};

// Sampled interior-overlap test for two uncapped cylinders. Returns true if a
// sampled interior point of `a` lies strictly inside `b`.
bool sampled_uncapped_overlap(const CylinderSpec& a, const CylinderSpec& b, int n_samples,
                              std::uint64_t seed) {
    const Vec3 da = normalize(a.axis.direction(), 1e-15);
    // frame perpendicular to da
    Vec3 seedv = std::fabs(da.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    const Vec3 u = normalize(seedv - da * dot(seedv, da));
    const Vec3 v = cross(da, u);
    Rng rng(seed);
    for (int k = 0; k < n_samples; ++k) {
        const double s = rng.next_double();
        const double r = std::sqrt(rng.next_double());
        const double th = 2.0 * M_PI * rng.next_double();
        const Vec3 q = a.axis.at(s) + (u * std::cos(th) + v * std::sin(th)) * r;
        // strict interior of b
        const double pb = point_segment_closest_param(q, b.axis);
        if (pb <= 0.0 || pb >= 1.0) continue;
        const Vec3 dbv = b.axis.direction();
        const double lb = norm(dbv);
        const double axial = dot(q - b.axis.p0, dbv) / lb;
        if (axial <= 1e-12 || axial >= lb - 1e-12) continue;
        if (point_segment_distance(q, b.axis) < 1.0 - 1e-12) return true;
    }
    return false;
}

} // namespace

ValidityReport is_valid_packing(const Packing& p, bool surface_check) {
    ValidityReport rep;
    const double min_dist = 2.0 - 1e-9;
    const int n = int(p.size());

    for (int i = 0; i < n; ++i)
        if (!contains_in_ball(p.cylinder(i), p.R)) rep.not_contained.push_back(i);

    auto check_pair = [&](int i, int j) {
        if (segment_segment_distance(p.axes[i], p.axes[j]) >= min_dist) return;
        if (!p.capped && surface_check) {
            const std::uint64_t s = splitmix64(std::uint64_t(i) * 0x100000001ull + j);
            if (!sampled_uncapped_overlap(p.cylinder(i), p.cylinder(j), 4096, s) &&
                !sampled_uncapped_overlap(p.cylinder(j), p.cylinder(i), 4096, s + 1))
                return;
        }
        rep.violating_pairs.emplace_back(i, j);
    };

    if (n <= 256) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) check_pair(i, j);
    } else {
        SegmentGrid grid(p, 1.0);
        std::vector<int> cand;
        for (int i = 0; i < n; ++i) {
            cand.clear();
            grid.visit_candidates(p.axes[i], 1.0, [&](int j) {
                if (j > i) cand.push_back(j);
            });
            std::sort(cand.begin(), cand.end());
            cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
            for (int j : cand) check_pair(i, j);
        }
    }

    rep.valid = rep.violating_pairs.empty() && rep.not_contained.empty();
    return rep;
}

Packing restrict_to(const Packing& p, double R_inner) {
    if (!(R_inner > 0.0) || R_inner > p.R + 1e-9)
        throw DomainError("restrict_to: need 0 < R_inner <= R");
    Packing q;
    q.capped = p.capped;
    q.t = p.t;
    q.R = p.R;
    q.mixed = p.mixed;
    q.restricted_to = R_inner;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (contains_in_ball(p.cylinder(i), R_inner)) q.axes.push_back(p.axes[i]);
    return q;
}

double density(const Packing& p, double R, double Rp) {
    if (!(R > 0.0) || R > Rp) throw DomainError("density: need 0 < R <= R'");
    double vol = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const CylinderSpec c = p.cylinder(i);
        if (contains_in_ball(c, R)) vol += cylinder_volume(c.t, c.capped);
    }
    return vol / ((4.0 / 3.0) * M_PI * Rp * Rp * Rp);
}

Packing gen_hexagonal_parallel(double t, double R, bool capped) {
    if (!(R > t / 2.0 + 1.0)) throw ContainerTooSmall("gen_hexagonal_parallel: R <= t/2 + 1");
    const double gap = capped ? 2.0 : 1e-9;
    const double period = t + gap;
    const double s3 = std::sqrt(3.0);

    Packing p;
    p.capped = capped;
    p.t = t;
    p.R = R;

    // Column at lateral radius rho holds cylinders with |z_c| + t/2 <= H(rho).
    auto half_height = [&](double rho2) {
        const double h2 = capped ? (R - 1.0) * (R - 1.0) - rho2
                                 : R * R - (std::sqrt(rho2) + 1.0) * (std::sqrt(rho2) + 1.0);
        return h2 >= 0.0 ? std::sqrt(h2) : -1.0;
    };

    const double rho_lim = capped ? (R - 1.0) : (R - 1.0);
    const int bmax = int(rho_lim / s3) + 1;
    for (int b = -bmax; b <= bmax; ++b) {
        const double cy = s3 * b;
        const double w2 = rho_lim * rho_lim - cy * cy;
        if (w2 < 0.0) continue;
        const double w = std::sqrt(w2);
        const int alo = int(std::ceil((-w - b) / 2.0)) - 1;
        const int ahi = int(std::floor((w - b) / 2.0)) + 1;
        for (int a = alo; a <= ahi; ++a) {
            const double cx = 2.0 * a + b;
            const double rho2 = cx * cx + cy * cy;
            const double H = half_height(rho2);
            if (H < t / 2.0) continue;
            const int count = int((2.0 * (H - t / 2.0)) / period) + 1;
            const double z0 = -(H - t / 2.0);
            for (int m = 0; m < count; ++m) {
                const double zc = z0 + m * period;
                p.axes.emplace_back(Vec3{cx, cy, zc - t / 2.0}, Vec3{cx, cy, zc + t / 2.0});
            }
        }
    }
    if (p.axes.empty()) throw ContainerTooSmall("gen_hexagonal_parallel: no cylinder fits");
    return p;
}

Packing gen_laminated_perturbed(double t, double R, double eps, std::uint64_t seed,
                                bool capped) {
    if (eps < 0.0) throw DomainError("gen_laminated_perturbed: eps < 0");
    if (!(R > t / 2.0 + 1.0)) throw ContainerTooSmall("gen_laminated_perturbed: R <= t/2 + 1");
    const double gap = capped ? 2.0 : 1e-9;
    const double period = t + gap;
    const double row_spacing = 2.0 + 2.0 * eps;
    constexpr int layers_per_block = 4;

    Packing p;
    p.capped = capped;
    p.t = t;
    p.R = R;

    const int kmax = int(R / 2.0) + 1;
    for (int k = -kmax; k <= kmax; ++k) {
        const double z = 2.0 * k;
        if (std::fabs(z) > R - 1.0) continue;
        const int block = (k >= 0 ? k : k - (layers_per_block - 1)) / layers_per_block;
        const double base = (((block % 2) + 2) % 2 == 0) ? 0.0 : M_PI / 2.0;
        Rng layer_rng(splitmix64(seed) ^ std::uint64_t(k + (1 << 20)));
        const double phi = base + eps * (2.0 * layer_rng.next_double() - 1.0);
        const Vec3 d{std::cos(phi), std::sin(phi), 0.0};
        const Vec3 dp{-std::sin(phi), std::cos(phi), 0.0};

        const double reach = std::sqrt(std::max(0.0, R * R - z * z)) + t;
        const int jmax = int(reach / row_spacing) + 1;
        const int mmax = int(reach / period) + 1;
        for (int j = -jmax; j <= jmax; ++j)
            for (int m = -mmax; m <= mmax; ++m) {
                const Vec3 c = d * (m * period) + dp * (j * row_spacing) + Vec3{0, 0, z};
                const Segment axis{c - d * (t / 2.0), c + d * (t / 2.0)};
                if (contains_in_ball(CylinderSpec{axis, capped, t}, R)) p.axes.push_back(axis);
            }
    }
    if (p.axes.empty()) throw ContainerTooSmall("gen_laminated_perturbed: no cylinder fits");
    return p;
}

Packing nest_capped(const Packing& p) {
    if (p.capped) throw DomainError("nest_capped: input must be uncapped");
    Packing q;
    q.capped = true;
    q.t = p.t - 2.0;
    q.R = p.R;
    q.mixed = p.mixed;
    q.restricted_to = p.restricted_to;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Segment& a = p.axes[i];
        const double len = a.length();
        if (len < 2.0 - 1e-12) throw DomainError("nest_capped: axis length < 2");
        const Vec3 d = a.direction() / len;
        q.axes.emplace_back(a.p0 + d, a.p1 - d);
    }
    return q;
}

std::vector<Vec3> all_ends(const Packing& p) {
    std::vector<Vec3> ends;
    ends.reserve(2 * p.size());
    for (const auto& a : p.axes) {
        ends.push_back(a.p0);
        ends.push_back(a.p1);
    }
    return ends;
}

McResult mc_volume(const std::function<bool(const Vec3&)>& member, const Aabb& box,
                   long long n, std::uint64_t seed, bool stratified, int jobs) {
    if (n < 1) throw DomainError("mc_volume: n < 1");
    const Vec3 ext = box.hi - box.lo;

    int m = 1;
    if (stratified) m = std::max(1, int(std::cbrt(double(n) / 8.0)));
    const long long m3 = (long long)m * m * m;

    // Sample k lands in stratum k % m3; its coordinates depend only on
    // (seed, k), so any partition of [0,n) yields identical results.
    auto sample = [&](long long k) {
        const long long c = k % m3;
        const int cz = int(c / (m * (long long)m));
        const int cy = int((c / m) % m);
        const int cx = int(c % m);
        const double fx = (cx + stream_double(seed, k, 0)) / m;
        const double fy = (cy + stream_double(seed, k, 1)) / m;
        const double fz = (cz + stream_double(seed, k, 2)) / m;
        return Vec3{box.lo.x + ext.x * fx, box.lo.y + ext.y * fy, box.lo.z + ext.z * fz};
    };

    std::vector<long long> hits_per_stratum(m3, 0);
    std::vector<long long> n_per_stratum(m3, 0);

    const int nw = std::max(1, jobs);
    std::vector<std::vector<long long>> whits(nw, std::vector<long long>(m3, 0));
    std::vector<std::thread> threads;
    for (int w = 0; w < nw; ++w) {
        threads.emplace_back([&, w] {
            const long long lo = n * w / nw, hi = n * (w + 1) / nw;
            auto& h = whits[w];
            for (long long k = lo; k < hi; ++k)
                if (member(sample(k))) ++h[k % m3];
        });
    }
    for (auto& th : threads) th.join();
    for (long long k = 0; k < n; ++k) ++n_per_stratum[k % m3];
    for (int w = 0; w < nw; ++w)
        for (long long c = 0; c < m3; ++c) hits_per_stratum[c] += whits[w][c];

    const double vol_cell = box.volume() / double(m3);
    double est = 0.0, var = 0.0;
    long long hits = 0;
    for (long long c = 0; c < m3; ++c) {
        if (n_per_stratum[c] == 0) continue;
        const double ph = double(hits_per_stratum[c]) / double(n_per_stratum[c]);
        est += vol_cell * ph;
        var += vol_cell * vol_cell * ph * (1.0 - ph) / double(n_per_stratum[c]);
        hits += hits_per_stratum[c];
    }
    return McResult{est, std::sqrt(var), hits, n};
}

} // namespace cylpack
