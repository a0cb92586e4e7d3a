// Acceptance suite: one line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "cylpack/bounds.hpp"
#include "cylpack/extremal.hpp"
#include "cylpack/packing.hpp"
#include "cylpack/rng.hpp"
#include "cylpack/slice.hpp"
#include "cylpack/verify.hpp"

using namespace cylpack;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int idx, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
    std::printf("[%s] criterion %d: %s  (%.1fs)  %s\n", pass ? "PASS" : "FAIL", idx, name.c_str(),
                seconds, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(double v, int prec = 8) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    return buf;
}

void criterion_1_table() {
    Timer timer;
    const auto rows = make_table();
    bool pass = rows.size() == 4;
    std::string detail;
    char buf[32];

    std::snprintf(buf, sizeof buf, "%.4f", rows[2].bound); // capellini
    pass = pass && std::string(buf) == "0.9219";
    detail += "t=600 prints " + std::string(buf);

    std::snprintf(buf, sizeof buf, "%.4f", rows[3].bound); // nanotube
    pass = pass && std::string(buf) == "0.9069";
    detail += ", t=2.64e8 prints " + std::string(buf);

    pass = pass && std::fabs(rows[1].bound - 0.9353) <= 3e-4;
    detail += ", |t=320 - 0.9353| = " + fmt(std::fabs(rows[1].bound - 0.9353), 3);

    std::snprintf(buf, sizeof buf, "%.5f", rows[0].bound); // broomstick
    pass = pass && rows[0].flagged && std::string(buf) == "0.99730";
    detail += ", t=108 flagged with " + std::string(buf) + " vs printed 0.9956";

    pass = pass && timer.seconds() < 1.0;
    report(1, "table reproduction", pass, detail, timer.seconds());
}

void criterion_2_extremal() {
    Timer timer;
    const ExtremalResult res = min_total_area(5, 64, 32, 12345);
    const double s12 = std::sqrt(12.0);
    bool pass = std::fabs(res.min_area - s12) <= 1e-6 && res.n_pieces == 6;
    double worst = 0.0;
    for (double b : res.argmin) worst = std::max(worst, std::fabs(b - M_PI / 3.0));
    pass = pass && worst <= 1e-4 && timer.seconds() < 60.0;
    report(2, "extremal minimum sqrt(12)", pass,
           "min=" + fmt(res.min_area, 10) + " pieces=" + std::to_string(res.n_pieces) +
               " max|beta-60deg|=" + fmt(worst, 3),
           timer.seconds());
}

void criterion_3_three_ball() {
    Timer timer;
    const double expected = 2.0 / std::sqrt(3.0) - 1.0;
    double worst = 0.0;
    for (std::uint64_t s = 1; s <= 20; ++s) {
        const ThreeBallResult r = three_ball_min_radius(8, s);
        worst = std::max(worst, std::fabs(r.radius - expected));
    }
    const bool pass = worst <= 1e-6 && timer.seconds() < 30.0;
    report(3, "three-ball bound 2/sqrt(3)-1", pass,
           "worst |radius - " + fmt(expected, 10) + "| = " + fmt(worst, 3), timer.seconds());
}

void criterion_4_qualified() {
    Timer timer;
    VerifyOptions opt;
    opt.packings = 200;
    opt.points = 10;
    opt.jobs = 2;
    const SuiteResult res = verify_qualified(opt);
    std::string detail;
    for (const auto& c : res.checks) detail += c.detail + "; ";
    const bool pass = res.pass && timer.seconds() < 600.0;
    report(4, "proposition-1 property suite", pass, detail, timer.seconds());
}

void criterion_5_angle() {
    Timer timer;
    VerifyOptions opt;
    opt.configs = 500;
    opt.jobs = 2;
    const SuiteResult res = verify_angle(opt);
    std::string detail;
    for (const auto& c : res.checks) detail += c.detail + "; ";
    const bool pass = res.pass && timer.seconds() < 300.0;
    report(5, "lemma-5 angle suite", pass, detail, timer.seconds());
}

void criterion_6_identity() {
    Timer timer;
    VerifyOptions opt;
    opt.samples = 10000000;
    opt.jobs = 2;
    const SuiteResult res = verify_identity(opt);
    std::string detail;
    for (const auto& c : res.checks) detail += c.detail + "; ";
    const bool pass = res.pass && timer.seconds() < 600.0;
    report(6, "integral identity", pass, detail, timer.seconds());
}

std::vector<Packing> criterion_roster() {
    std::vector<Packing> roster;
    roster.push_back(gen_hexagonal_parallel(10.0, 30.0, true));
    roster.push_back(gen_hexagonal_parallel(6.0, 16.0, true));
    roster.push_back(gen_laminated_perturbed(6.0, 25.0, 0.0, 1, true));
    roster.push_back(gen_laminated_perturbed(6.0, 25.0, 0.01, 7, true));
    roster.push_back(nest_capped(gen_hexagonal_parallel(10.0, 30.0, false)));
    for (std::uint64_t s = 0; s < 20; ++s)
        roster.push_back(random_valid_capped_packing(splitmix64(0xACCE97 + s)));
    return roster;
}

void criterion_7_end_ball() {
    Timer timer;
    const double t0 = BoundParams::get().t0;
    bool pass = true;
    double worst_len = 0.0, worst_partition = 0.0;
    int packings = 0, ends_checked = 0;
    for (const Packing& p : criterion_roster()) {
        ++packings;
        for (const Vec3& e : all_ends(p)) {
            const double len = end_ball_axis_length(p, e);
            worst_len = std::max(worst_len, len);
            if (len > t0 + 1e-6) pass = false;
            ++ends_checked;
        }
        const AxisMeasure am = axis_measures(p, p.R);
        const double gap = std::fabs(am.mu_y + am.mu_z - p.total_axis_length());
        worst_partition = std::max(worst_partition, gap);
        if (gap > 1e-9) pass = false;
    }
    report(7, "end-ball bound and measure partition", pass,
           "max end-ball length " + fmt(worst_len, 8) + " <= t0 = " + fmt(t0, 9) + " over " +
               std::to_string(ends_checked) + " ends in " + std::to_string(packings) +
               " packings; worst |muY+muZ-sum t| = " + fmt(worst_partition, 3),
           timer.seconds());
}

void criterion_8_certified() {
    Timer timer;
    const double off = 2.0 / std::sqrt(3.0);
    bool pass = true;
    double worst_margin = 1e300;
    for (const Packing& p : criterion_roster()) {
        const double r_in = p.R - off;
        const double bound = certified_bound_for_packing(p, r_in);
        const double measured = density(restrict_to(p, r_in), r_in, p.R);
        worst_margin = std::min(worst_margin, bound - measured);
        if (measured > bound + 1e-12) pass = false;
    }

    // desk-scale stand-in for the pi/sqrt(12) trend: t=200 at large R
    const Packing big = gen_hexagonal_parallel(200.0, 750.0, true);
    const double rho_big = density(big, big.R, big.R);
    const double r_in = big.R - off;
    const double bound_big = certified_bound_for_packing(big, r_in);
    const double measured_big = density(restrict_to(big, r_in), r_in, big.R);
    if (measured_big > bound_big + 1e-12) pass = false;
    if (!(rho_big >= 0.80)) pass = false;

    report(8, "certified-bound consistency and density trend", pass,
           "worst (bound - measured) margin " + fmt(worst_margin, 4) + "; hex t=200 R=750: n=" +
               std::to_string(big.size()) + " rho(R,R)=" + fmt(rho_big, 6) + " >= 0.80, bound=" +
               fmt(bound_big, 6) + " >= measured=" + fmt(measured_big, 6),
           timer.seconds());
}

void criterion_9_analytics() {
    Timer timer;
    bool pass = true;
    std::string detail;

    const double t0 = BoundParams::get().t0;
    const double c2t0 = capped_bound(2.0 * t0).bound;
    if (c2t0 != 1.0) pass = false;
    detail += "capped(2t0)=" + fmt(c2t0, 17);

    double prev_c = 2.0, prev_u = 2.0;
    bool monotone = true;
    for (int k = 0; k <= 400; ++k) {
        const double t = (2.0 * t0 + 2.0) * std::pow(1e6 / (2.0 * t0 + 2.0), k / 400.0);
        const double c = capped_bound(t).raw, u = uncapped_bound(t).raw;
        monotone = monotone && c < prev_c && u < prev_u;
        prev_c = c;
        prev_u = u;
    }
    if (!monotone) pass = false;
    detail += ", strictly decreasing=" + std::string(monotone ? "yes" : "no");

    const DominanceResult dom = dominance_check(default_dominance_grid(10000));
    if (!dom.pass) pass = false;
    detail += ", dominance margin=" + fmt(dom.worst_margin, 4);

    const double k12 = std::sqrt(12.0) / M_PI;
    double worst_identity = 0.0;
    for (int i = 0; i <= 400; ++i) {
        const double t = (2.0 * t0 + 2.0) * std::pow(1e5, i / 400.0);
        const double lhs = (t - 2.0 / 3.0) / t * uncapped_bound(t).raw;
        const double rhs =
            (t - 2.0 + 4.0 / 3.0) / (k12 * ((t - 2.0) - 2.0 * t0) + 2.0 * t0 + 4.0 / 3.0);
        worst_identity = std::max(worst_identity, std::fabs(lhs - rhs) / rhs);
    }
    if (worst_identity > 1e-12) pass = false;
    detail += ", corollary-2 identity gap=" + fmt(worst_identity, 3);

    const double conj0 = conjectured_density(0.0);
    const double gap = std::fabs(conj0 - M_PI / std::sqrt(18.0));
    if (gap > 1e-12) pass = false;
    detail += ", |conjectured(0)-pi/sqrt(18)|=" + fmt(gap, 3);

    report(9, "bound analytics", pass, detail, timer.seconds());
}

} // namespace

int main() {
    std::printf("cylinder-packing acceptance suite\n");
    criterion_1_table();
    criterion_2_extremal();
    criterion_3_three_ball();
    criterion_4_qualified();
    criterion_5_angle();
    criterion_6_identity();
    criterion_7_end_ball();
    criterion_8_certified();
    criterion_9_analytics();
    std::printf("%d of 9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
