#pragma once
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cylpack/geometry.hpp"

namespace cylpack {

/// Fixed constants of the density machinery, computed from their definitions.
struct BoundParams {
    double t0;       // (4/3)(4/√3 + 1)³ ≈ 48.3266786
    double alpha0;   // 2·arccos(√3 − 1) ≈ 85.88°
    double r_hex;    // 2/√3, circumradius of the hexagon about the unit circle
    double r_end;    // 4/√3, end-exclusion ball radius
    double hex_area; // √12

    static const BoundParams& get();
};

/// Unit-radius cylinder of axis length t, optionally with hemispherical caps.
/// A capped cylinder is exactly the set of points within 1 of its axis.
struct CylinderSpec {
    Segment axis;
    bool capped{true};
    double t{0.0};
};

/// Finite family of congruent cylinders inside the ball B(R) about the origin.
/// `mixed` relaxes the congruence requirement (mixed-length workflows).
struct Packing {
    bool capped{true};
    double t{0.0};
    double R{0.0};
    bool mixed{false};
    std::vector<Segment> axes;
    std::optional<double> restricted_to; // inner radius after restrict_to()

    std::size_t size() const { return axes.size(); }
    double axis_length(std::size_t i) const { return axes[i].length(); }
    CylinderSpec cylinder(std::size_t i) const {
        return CylinderSpec{axes[i], capped, mixed ? axes[i].length() : t};
    }
    /// Total axis length (n·t for congruent packings).
    double total_axis_length() const;
};

double cylinder_volume(double t, bool capped);

struct ValidityReport {
    bool valid{true};
    std::vector<std::pair<int, int>> violating_pairs;
    std::vector<int> not_contained;
};

/// Pairwise axis distance ≥ 2 − 1e−9 plus containment in B(R). Exact for
/// capped cylinders; conservative for uncapped ones. With `surface_check`
/// set, uncapped pairs that fail the axis test are re-examined with a
/// sampled overlap test before being reported.
ValidityReport is_valid_packing(const Packing& p, bool surface_check = false);

bool contains_in_ball(const CylinderSpec& c, double R);

/// Keep exactly the cylinders contained in B(R_inner).
Packing restrict_to(const Packing& p, double R_inner);

/// ρ(𝒞, R, R′): volume of cylinders contained in B(R) over Vol(B(R′)).
double density(const Packing& p, double R, double Rp);

/// Parallel-axis packing on a triangular lattice of spacing 2, columns
/// stacked with axial period t+2 (capped) or t+ε (uncapped).
Packing gen_hexagonal_parallel(double t, double R, bool capped);

/// Laminated blocks of parallel cylinders with alternating base direction,
/// per-layer direction perturbed by at most eps and in-layer spacing 2+2·eps.
Packing gen_laminated_perturbed(double t, double R, double eps, std::uint64_t seed,
                                bool capped = true);

/// Nest capped (t−2)-cylinders in a packing of uncapped t-cylinders.
Packing nest_capped(const Packing& p);

struct Aabb {
    Vec3 lo, hi;
    double volume() const { return (hi.x - lo.x) * (hi.y - lo.y) * (hi.z - lo.z); }
};

struct McResult {
    double estimate{0.0};
    double std_error{0.0};
    long long hits{0};
    long long n{0};
};

/// Hit-or-miss Monte Carlo volume of {q ∈ box : member(q)}. Sample k is a
/// pure function of (seed, k), so the result is independent of how the index
/// range is partitioned across workers.
McResult mc_volume(const std::function<bool(const Vec3&)>& member, const Aabb& box,
                   long long n, std::uint64_t seed, bool stratified = false,
                   int jobs = 1);

/// All axis endpoints of the packing.
std::vector<Vec3> all_ends(const Packing& p);

} // namespace cylpack
