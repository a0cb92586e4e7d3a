#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cylpack/packing.hpp"

namespace cylpack {

struct SliceOptions {
    double r_tol{1e-10};       // bisection tolerance for boundary radii
    double theta_tol{1e-9};    // bisection tolerance for event angles
    double area_rel_tol{1e-6}; // default relative tolerance for areas
    int scan_samples{512};     // boundary scan resolution
};

enum class EventKind {
    parabolic_arc,    // boundary piece equidistant from x and an axis interior
    line,             // straight piece (end bisector or perpendicular axis)
    container_circle, // piece on the boundary of B(R)
    type1,            // junction: spline switches between arc and ray
    type2,            // junction with the container circle
    type3             // junction: equidistant from three or more axes
};

const char* event_kind_name(EventKind k);

struct BoundaryEvent {
    double theta{0.0};
    EventKind kind{EventKind::line};
    int axis_a{-1}; // owning constraint (piece) or left constraint (junction)
    int axis_b{-1}; // right constraint for junctions
    double radius{0.0};
};

/// Sampled Dirichlet slice d_x for a point x on axis `owner`.
/// Piece entries mark the analytic arcs; type1/2/3 entries mark the
/// non-analytic junction points between them.
struct DirichletSlice {
    PlaneFrame frame;
    int owner{-1};
    std::vector<std::pair<double, double>> radius_samples; // (θ, r)
    std::vector<BoundaryEvent> boundary_events;
    const Packing* packing{nullptr}; // non-owning; must outlive the slice
    SliceOptions opts;

    double radius_at(double theta) const;
    double min_radius() const;
    double max_radius() const;
};

/// Largest r with x + r·(cosθ·u + sinθ·v) no farther from a_i than from any
/// other axis and inside B(R).
double slice_radius(const Packing& p, int i, const Vec3& x, double theta,
                    const SliceOptions& opts = {});

/// Membership predicate of d_x for points q in the slice plane.
bool slice_contains(const Packing& p, int i, const Vec3& x, const Vec3& q);

DirichletSlice build_slice(const Packing& p, int i, const Vec3& x,
                           const SliceOptions& opts = {});

/// Area of d_x with adaptive refinement split at the boundary events.
double slice_area(const Packing& p, int i, const Vec3& x, double rel_tol = 1e-6);

/// Discrete convexity of the sampled boundary polygon (Lemma 2 check).
bool slice_samples_convex(const DirichletSlice& s, double rel_tol = 1e-6);

/// True iff some axis endpoint lies within 4/√3 of x (closed ball).
bool has_end_near(const Packing& p, const Vec3& x);

/// Area strictly greater than √12, with slack `tol` absorbing quadrature noise.
bool is_qualified(const Packing& p, int i, const Vec3& x, double tol = 1e-6);

struct TruncatePiece {
    double beta{0.0};
    bool parabola{false};
    double area{0.0};
};

struct TruncateResult {
    double area_dstar{0.0};     // area of d_x ∩ disc(2/√3)
    double area_dstarstar{0.0}; // after chord/parabola rearrangement
    std::vector<TruncatePiece> pieces;
};

/// Steps 1-3: intersect with S_x(2/√3), subdivide container arcs into ≤60°
/// sectors, then replace each sector by its chord triangle (β ≤ 60°) or
/// apex-tangent parabola region (60° < β ≤ α₀).
/// Throws AngleExceedsAlpha0 if a sector exceeds α₀ + 1e−9.
TruncateResult truncate_rearrange(const DirichletSlice& s);

/// Maximum angle at x subtended by points of S_x(2/√3) equidistant from a_i
/// and a_j, or nullopt if no such points exist.
std::optional<double> equidistant_angle_max(const Packing& p, int i, int j, const Vec3& x,
                                            const SliceOptions& opts = {});

struct AxisZIntervals {
    int axis{-1};
    std::vector<std::pair<double, double>> intervals; // arclength parameters
    double mu_z{0.0};
    double mu_y{0.0};
};

/// Per-axis decomposition A = Y ∪ Z, where Z = {x : B_x(4/√3) contains an end}.
struct AxisMeasure {
    std::vector<AxisZIntervals> per_axis;
    double mu_y{0.0};
    double mu_z{0.0};
    double mu_a{0.0};
    int n{0};
};

/// Exact interval computation on the restriction of p to B(R_inner).
AxisMeasure axis_measures(const Packing& p, double R_inner);

/// Total axis length of p inside the closed ball of radius 4/√3 about `end`.
double end_ball_axis_length(const Packing& p, const Vec3& end);

struct IdentityResult {
    double integral_value{0.0};
    double mc_value{0.0};
    double mc_std_error{0.0};
};

/// ∫ Area(d_x) dμ over axis i versus a Monte Carlo estimate of Vol(D_i⁰).
IdentityResult cell_volume_identity(const Packing& p, int i, long long n_mc,
                                    std::uint64_t seed, int jobs = 1,
                                    double quad_rel_tol = 1e-4);

/// Upper bound on ρ(𝒞, R_inner, R) from the exact axis measures and the
/// per-point floors √12 (protected points) and π (end-near points).
/// `z_pad` conservatively widens each Z interval.
double certified_bound_for_packing(const Packing& p, double R_inner, double z_pad = 0.0);

} // namespace cylpack
