#include "cylpack/extremal.hpp"

#include <algorithm>
#include <cmath>

#include "cylpack/packing.hpp"
#include "cylpack/rng.hpp"

namespace cylpack {

bool piece_is_parabola(double beta) { return beta > M_PI / 3.0 + 1e-12; }

double piece_area(double beta) {
    const double a0 = BoundParams::get().alpha0;
    if (!(beta > 0.0) || beta > a0 + 1e-9)
        throw DomainError("piece_area: beta outside (0, alpha0]");
    const double tri = (2.0 / 3.0) * std::sin(beta);
    if (!piece_is_parabola(beta)) return tri;
    const double s3 = std::sqrt(3.0);
    const double chord = 2.0 * (2.0 / s3) * std::sin(beta / 2.0);
    const double sagitta = 1.0 - (2.0 / s3) * std::cos(beta / 2.0);
    return tri + parabola_segment_area(chord, sagitta);
}

namespace {

double piece_area_deriv(double beta) {
    const double c = (2.0 / 3.0) * std::cos(beta);
    if (!piece_is_parabola(beta)) return c;
    // d/dβ of −(2/9)sinβ + (8/(3√3))sin(β/2)
    const double s3 = std::sqrt(3.0);
    return -(2.0 / 9.0) * std::cos(beta) + (4.0 / (3.0 * s3)) * std::cos(beta / 2.0);
}

double total_area(const std::vector<double>& beta) {
    double s = 0.0;
    for (double b : beta) s += piece_area(b);
    return s;
}

// Projection onto {Σβ = 2π, lo ≤ β ≤ hi} by bisection on the shift λ.
void project_composition(std::vector<double>& beta, double lo, double hi) {
    const double target = 2.0 * M_PI;
    const auto [mn, mx] = std::minmax_element(beta.begin(), beta.end());
    double lam_lo = *mn - hi - 1.0, lam_hi = *mx - lo + 1.0;
    auto sum_at = [&](double lam) {
        double s = 0.0;
        for (double b : beta) s += std::clamp(b - lam, lo, hi);
        return s;
    };
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lam_lo + lam_hi);
        (sum_at(mid) > target ? lam_lo : lam_hi) = mid;
    }
    const double lam = 0.5 * (lam_lo + lam_hi);
    for (double& b : beta) b = std::clamp(b - lam, lo, hi);
    // absorb the residual into an interior coordinate
    double resid = target;
    for (double b : beta) resid -= b;
    for (double& b : beta) {
        const double nb = std::clamp(b + resid, lo, hi);
        resid -= nb - b;
        b = nb;
        if (std::fabs(resid) < 1e-15) break;
    }
}

// Projected gradient descent with backtracking; objective is piecewise C¹.
double descend(std::vector<double>& beta, double lo, double hi, long long& evals) {
    project_composition(beta, lo, hi);
    double f = total_area(beta);
    ++evals;
    double step = 0.25;
    std::vector<double> grad(beta.size()), trial(beta.size());
    for (int it = 0; it < 400; ++it) {
        for (std::size_t k = 0; k < beta.size(); ++k) grad[k] = piece_area_deriv(beta[k]);
        bool improved = false;
        while (step > 1e-14) {
            for (std::size_t k = 0; k < beta.size(); ++k) trial[k] = beta[k] - step * grad[k];
            project_composition(trial, lo, hi);
            const double ft = total_area(trial);
            ++evals;
            if (ft < f - 1e-15) {
                beta = trial;
                f = ft;
                improved = true;
                step *= 1.6;
                break;
            }
            step *= 0.5;
        }
        if (!improved || step <= 1e-14) break;
    }
    return f;
}

void consider(double f, const std::vector<double>& beta, double& best,
              std::vector<double>& best_beta) {
    std::vector<double> sorted = beta;
    std::sort(sorted.rbegin(), sorted.rend());
    const bool tie = std::fabs(f - best) <= 1e-15;
    const bool tie_preferred =
        tie && (best_beta.empty() ||
                std::lexicographical_compare(sorted.begin(), sorted.end(), best_beta.begin(),
                                             best_beta.end()));
    if (f < best - 1e-15 || tie_preferred) {
        best = f;
        best_beta = sorted;
    }
}

} // namespace

ExtremalResult min_total_area(int n_min, int n_max, int multistarts, std::uint64_t seed) {
    const double a0 = BoundParams::get().alpha0;
    const double lo = 1e-7;
    double best = 1e100;
    std::vector<double> best_beta;
    long long evals = 0;

    for (int n = n_min; n <= n_max; ++n) {
        if (n * a0 < 2.0 * M_PI - 1e-12) continue; // infeasible count

        // two-value sweep: k pieces at a, n-k pieces at (2π − k·a)/(n−k)
        for (int k = 0; k <= n; ++k) {
            const int grid = 2000;
            for (int g = 0; g <= grid; ++g) {
                const double a = lo + (a0 - lo) * double(g) / grid;
                std::vector<double> beta;
                if (k == 0 || k == n) {
                    if (g > 0) continue;
                    const double eq = 2.0 * M_PI / n;
                    if (eq > a0 + 1e-12) continue;
                    beta.assign(n, eq);
                } else {
                    const double b = (2.0 * M_PI - k * a) / (n - k);
                    if (b < lo || b > a0 + 1e-12) continue;
                    beta.assign(k, a);
                    beta.resize(n, b);
                }
                const double f = total_area(beta);
                ++evals;
                consider(f, beta, best, best_beta);
            }
        }

        // multi-start projected gradient
        Rng rng(seed + std::uint64_t(n) * 977);
        for (int s = 0; s < multistarts; ++s) {
            std::vector<double> beta(n);
            if (s == 0) {
                std::fill(beta.begin(), beta.end(), 2.0 * M_PI / n);
            } else if (s == 1) {
                std::fill(beta.begin(), beta.end(), a0);
            } else {
                for (double& b : beta) b = rng.uniform(lo, a0);
            }
            const double f = descend(beta, lo, a0, evals);
            consider(f, beta, best, best_beta);
        }
    }

    ExtremalResult res;
    res.min_area = best;
    res.argmin = best_beta;
    res.n_pieces = int(best_beta.size());
    res.evaluations = evals;
    return res;
}

namespace {

// Minimum enclosing ball of three points: circumcircle if the triangle is
// acute, otherwise half the longest side.
double min_enclosing_radius(const Vec3& a, const Vec3& b, const Vec3& c) {
    const double ab = norm(b - a), bc = norm(c - b), ca = norm(a - c);
    double lmax = std::max({ab, bc, ca});
    const double l2 = lmax * lmax;
    const double o2 = ab * ab + bc * bc + ca * ca - l2;
    if (o2 <= l2) return 0.5 * lmax; // right or obtuse
    const double area2 = norm(cross(b - a, c - a)); // 2·triangle area
    if (area2 < 1e-300) return 0.5 * lmax;
    return ab * bc * ca / (2.0 * area2);
}

struct ThreeBallObjective {
    double mu; // constraint penalty weight

    double operator()(const std::vector<double>& v) const {
        const Vec3 a{v[0], v[1], v[2]}, b{v[3], v[4], v[5]}, c{v[6], v[7], v[8]};
        double pen = 0.0;
        for (double d : {norm(b - a), norm(c - b), norm(a - c)}) {
            const double viol = std::max(0.0, 2.0 - d);
            pen += viol * viol;
        }
        return min_enclosing_radius(a, b, c) - 1.0 + mu * pen;
    }
};

// Nelder–Mead with deterministic initial simplex.
template <class F>
double nelder_mead(F&& f, std::vector<double>& x, double scale, int max_iter) {
    const int n = int(x.size());
    std::vector<std::vector<double>> simplex(n + 1, x);
    std::vector<double> val(n + 1);
    for (int i = 0; i < n; ++i) simplex[i + 1][i] += scale;
    for (int i = 0; i <= n; ++i) val[i] = f(simplex[i]);

    std::vector<int> order(n + 1);
    std::vector<double> centroid(n), xr(n), xe(n), xc(n);
    for (int it = 0; it < max_iter; ++it) {
        for (int i = 0; i <= n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int i, int j) { return val[i] < val[j]; });
        const int bi = order[0], wi = order[n], si = order[n - 1];
        if (val[wi] - val[bi] < 1e-14) break;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (int i = 0; i <= n; ++i)
            if (i != wi)
                for (int k = 0; k < n; ++k) centroid[k] += simplex[i][k] / n;

        for (int k = 0; k < n; ++k) xr[k] = centroid[k] + (centroid[k] - simplex[wi][k]);
        const double fr = f(xr);
        if (fr < val[bi]) {
            for (int k = 0; k < n; ++k) xe[k] = centroid[k] + 2.0 * (centroid[k] - simplex[wi][k]);
            const double fe = f(xe);
            if (fe < fr) { simplex[wi] = xe; val[wi] = fe; }
            else { simplex[wi] = xr; val[wi] = fr; }
        } else if (fr < val[si]) {
            simplex[wi] = xr;
            val[wi] = fr;
        } else {
            for (int k = 0; k < n; ++k) xc[k] = centroid[k] + 0.5 * (simplex[wi][k] - centroid[k]);
            const double fc = f(xc);
            if (fc < val[wi]) { simplex[wi] = xc; val[wi] = fc; }
            else {
                for (int i = 0; i <= n; ++i) {
                    if (i == bi) continue;
                    for (int k = 0; k < n; ++k)
                        simplex[i][k] = simplex[bi][k] + 0.5 * (simplex[i][k] - simplex[bi][k]);
                    val[i] = f(simplex[i]);
                }
            }
        }
    }
    int best = 0;
    for (int i = 1; i <= n; ++i)
        if (val[i] < val[best]) best = i;
    x = simplex[best];
    return val[best];
}

} // namespace

ThreeBallResult three_ball_min_radius(int starts, std::uint64_t seed) {
    const double s3 = std::sqrt(3.0);
    ThreeBallResult best;
    best.radius = 1e100;
    Rng rng(seed);

    for (int s = 0; s < starts; ++s) {
        std::vector<double> v(9);
        if (s == 0) {
            // symmetric coplanar configuration, pairwise distance 2
            v = {2.0 / s3, 0, 0, -1.0 / s3, 1.0, 0, -1.0 / s3, -1.0, 0};
        } else if (s == 1) {
            const double d = 2.5 / s3; // inflated triangle, interior start
            v = {2 * d / 2, 0, 0, -d / 2, 1.25, 0, -d / 2, -1.25, 0};
        } else {
            for (double& c : v) c = rng.uniform(-2.5, 2.5);
        }

        for (double mu : {1e2, 1e4, 1e6, 1e8}) {
            ThreeBallObjective obj{mu};
            nelder_mead(obj, v, mu <= 1e2 ? 0.5 : 0.02, 4000);
        }

        // repair: scale about the centroid until every pair is ≥ 2 apart
        Vec3 a{v[0], v[1], v[2]}, b{v[3], v[4], v[5]}, c{v[6], v[7], v[8]};
        const Vec3 g = (a + b + c) / 3.0;
        const double dmin = std::min({norm(b - a), norm(c - b), norm(a - c)});
        if (dmin < 1e-12) continue;
        const double scale = std::max(1.0, 2.0 / dmin);
        a = g + (a - g) * scale;
        b = g + (b - g) * scale;
        c = g + (c - g) * scale;
        const double ell = min_enclosing_radius(a, b, c) - 1.0;
        if (ell < best.radius) {
            best.radius = ell;
            best.centers = {a, b, c};
            best.min_pair_distance = std::min({norm(b - a), norm(c - b), norm(a - c)});
        }
    }
    return best;
}

} // namespace cylpack
