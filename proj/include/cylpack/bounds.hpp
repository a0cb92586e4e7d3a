#pragma once
#include <string>
#include <vector>

namespace cylpack {

enum class Shape { capped, uncapped, mixed_average };

const char* shape_name(Shape s);

struct BoundResult {
    double t{0.0};
    Shape shape{Shape::capped};
    double bound{1.0};   // clamped to (0, 1]
    double raw{1.0};     // unclamped formula value (may exceed 1)
    std::string formula_id;
    bool trivial{false}; // true when the raw formula exceeds 1
};

/// (t + 4/3) / ((√12/π)(t − 2t₀) + 2t₀ + 4/3), clamped to 1 below 2t₀.
BoundResult capped_bound(double t);

/// t / ((√12/π)(t − 2 − 2t₀) + 2t₀ + 4/3), clamped to 1 below its
/// nontrivial threshold.
BoundResult uncapped_bound(double t);

/// π/√12 + 10/t (unclamped).
double rule_of_thumb(double t);

struct DominanceResult {
    bool pass{false};
    double worst_margin{0.0};
    double worst_t{0.0};
    int points{0};
};

/// Checks min(1, bound(t)) ≤ rule_of_thumb(t) over the grid for both shapes.
DominanceResult dominance_check(const std::vector<double>& t_grid);

/// Logarithmic default grid on [2t₀, 10⁶].
std::vector<double> default_dominance_grid(int points = 10000);

struct HalfInfiniteResult {
    double value{0.0};     // π/√12
    bool monotone{false};  // uncapped_bound decreasing on a geometric grid
    double inf_gap{0.0};   // uncapped_bound(10¹²) − π/√12
};

HalfInfiniteResult half_infinite_bound();

/// Capped bound at the average cylinder length (lengths ≥ 2t₀ required).
BoundResult mixed_length_bound(double t_avg);

/// Infimum-length variant of the mixed bound.
BoundResult mixed_length_bound_infimum(double t_min);

/// (π/√12)·(t + 4/3)/(t + 2√6/3); comparison curve, not an upper bound.
double conjectured_density(double t);

struct TableRow {
    std::string label;
    double t{0.0};
    Shape shape{Shape::uncapped};
    double bound{0.0};
    bool trivial{false};
    bool flagged{false};     // evaluation differs from the printed digits
    double printed{0.0};     // value printed in the source table
    double rule{0.0};
    double conjectured{0.0};
};

/// The four-row examples table (broomstick, PVC pipe, capellini, nanotube).
std::vector<TableRow> make_table();

double pi_over_sqrt12();

} // namespace cylpack
