#pragma once
#include <array>
#include <cstdint>
#include <vector>

#include "cylpack/geometry.hpp"

namespace cylpack {

/// Area of one rearranged sector of angle β about x, with both vertices on
/// S_x(2/√3): the chord triangle for β ≤ 60°, or the region closed by the
/// parabola through the vertices with apex tangent to S_x(1) for
/// 60° < β ≤ α₀. Throws DomainError outside (0, α₀ + 1e−9].
double piece_area(double beta);

/// Chord/parabola piece kind for a sector of angle β.
bool piece_is_parabola(double beta);

struct ExtremalResult {
    double min_area{0.0};
    std::vector<double> argmin; // piece angles, descending
    int n_pieces{0};
    long long evaluations{0};
};

/// Minimize Σ piece_area(β_k) over compositions Σβ_k = 2π, 0 < β_k ≤ α₀,
/// with piece count in [n_min, n_max]. Combines per-count projected-gradient
/// descent from `multistarts` starting points with a two-value sweep over the
/// symmetric compositions.
ExtremalResult min_total_area(int n_min = 5, int n_max = 64, int multistarts = 32,
                              std::uint64_t seed = 12345);

struct ThreeBallResult {
    double radius{0.0};
    std::array<Vec3, 3> centers{};
    double min_pair_distance{0.0};
};

/// Minimal ℓ such that some ball of radius ℓ touches three non-overlapping
/// unit balls: multi-start local optimization over the three centers
/// (pairwise distance ≥ 2) with the enclosing-ball point chosen optimally.
ThreeBallResult three_ball_min_radius(int starts = 20, std::uint64_t seed = 7);

} // namespace cylpack
