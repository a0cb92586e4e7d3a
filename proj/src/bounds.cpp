#include "cylpack/bounds.hpp"

#include <cmath>

#include "cylpack/errors.hpp"
#include "cylpack/packing.hpp"

namespace cylpack {

const char* shape_name(Shape s) {
    switch (s) {
        case Shape::capped: return "capped";
        case Shape::uncapped: return "uncapped";
        case Shape::mixed_average: return "mixed-average";
    }
    return "?";
}

double pi_over_sqrt12() { return M_PI / std::sqrt(12.0); }

namespace {

BoundResult clamp_result(double t, Shape shape, double raw, const char* id) {
    BoundResult r;
    r.t = t;
    r.shape = shape;
    r.raw = raw;
    r.formula_id = id;
    r.trivial = !(raw <= 1.0);
    r.bound = r.trivial ? 1.0 : raw;
    return r;
}

} // namespace

BoundResult capped_bound(double t) {
    if (!(t > 0.0)) throw DomainError("capped_bound: t must be positive");
    const double t0 = BoundParams::get().t0;
    const double k = std::sqrt(12.0) / M_PI;
    const double raw = (t + 4.0 / 3.0) / (k * (t - 2.0 * t0) + 2.0 * t0 + 4.0 / 3.0);
    if (t < 2.0 * t0) {
        BoundResult r = clamp_result(t, Shape::capped, raw, "thm1-capped");
        r.trivial = true;
        r.bound = 1.0;
        return r;
    }
    return clamp_result(t, Shape::capped, raw, "thm1-capped");
}

BoundResult uncapped_bound(double t) {
    if (!(t > 0.0)) throw DomainError("uncapped_bound: t must be positive");
    const double t0 = BoundParams::get().t0;
    const double k = std::sqrt(12.0) / M_PI;
    const double raw = t / (k * (t - 2.0 - 2.0 * t0) + 2.0 * t0 + 4.0 / 3.0);
    if (t < 2.0 * t0 + 2.0) {
        BoundResult r = clamp_result(t, Shape::uncapped, raw, "cor2-uncapped");
        r.trivial = true;
        r.bound = 1.0;
        return r;
    }
    return clamp_result(t, Shape::uncapped, raw, "cor2-uncapped");
}

double rule_of_thumb(double t) {
    if (!(t > 0.0)) throw DomainError("rule_of_thumb: t must be positive");
    return pi_over_sqrt12() + 10.0 / t;
}

std::vector<double> default_dominance_grid(int points) {
    const double t0 = BoundParams::get().t0;
    const double lo = 2.0 * t0, hi = 1e6;
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i)
        grid[i] = lo * std::pow(hi / lo, double(i) / (points - 1));
    return grid;
}

DominanceResult dominance_check(const std::vector<double>& t_grid) {
    DominanceResult res;
    res.pass = true;
    res.worst_margin = 1e300;
    for (double t : t_grid) {
        const double rot = rule_of_thumb(t);
        for (double b : {capped_bound(t).bound, uncapped_bound(t).bound}) {
            const double margin = rot - std::min(1.0, b);
            if (margin < res.worst_margin) {
                res.worst_margin = margin;
                res.worst_t = t;
            }
            if (margin < 0.0) res.pass = false;
        }
        ++res.points;
    }
    return res;
}

HalfInfiniteResult half_infinite_bound() {
    HalfInfiniteResult r;
    r.value = pi_over_sqrt12();
    const double t0 = BoundParams::get().t0;
    r.monotone = true;
    double prev = 2.0;
    for (double t = 2.0 * t0 + 2.0; t <= 1e12; t *= 2.0) {
        const double b = uncapped_bound(t).raw;
        if (b >= prev) r.monotone = false;
        prev = b;
    }
    r.inf_gap = uncapped_bound(1e12).raw - r.value;
    return r;
}

BoundResult mixed_length_bound(double t_avg) {
    const double t0 = BoundParams::get().t0;
    if (t_avg < 2.0 * t0 - 1e-12)
        throw DomainError("mixed_length_bound: average length below 2*t0");
    BoundResult r = capped_bound(t_avg);
    r.shape = Shape::mixed_average;
    r.formula_id = "thm5-mixed-average";
    return r;
}

BoundResult mixed_length_bound_infimum(double t_min) {
    const double t0 = BoundParams::get().t0;
    if (t_min < 2.0 * t0 - 1e-12)
        throw DomainError("mixed_length_bound_infimum: infimum length below 2*t0");
    BoundResult r = capped_bound(t_min);
    r.shape = Shape::mixed_average;
    r.formula_id = "cor3-mixed-infimum";
    return r;
}

double conjectured_density(double t) {
    if (t < 0.0) throw DomainError("conjectured_density: t must be nonnegative");
    return pi_over_sqrt12() * (t + 4.0 / 3.0) / (t + 2.0 * std::sqrt(6.0) / 3.0);
}

std::vector<TableRow> make_table() {
    struct Item {
        const char* label;
        double t;
        double printed;
    };
    // t column and printed densities as published; the first two rows do not
    // match a direct evaluation of the uncapped formula (see README).
    const Item items[] = {
        {"Broomstick", 108.0, 0.9956},
        {"20' PVC Pipe", 320.0, 0.9353},
        {"Capellini", 600.0, 0.9219},
        {"Carbon Nanotube", 2.64e8, 0.9069},
    };
    std::vector<TableRow> rows;
    for (const Item& it : items) {
        const BoundResult b = uncapped_bound(it.t);
        TableRow row;
        row.label = it.label;
        row.t = it.t;
        row.shape = Shape::uncapped;
        row.bound = b.bound;
        row.trivial = b.trivial;
        row.printed = it.printed;
        row.flagged = std::fabs(b.bound - it.printed) > 5e-4;
        row.rule = rule_of_thumb(it.t);
        row.conjectured = conjectured_density(it.t);
        rows.push_back(row);
    }
    return rows;
}

} // namespace cylpack
