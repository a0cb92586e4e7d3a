#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "cylpack/packing.hpp"

namespace cylpack {

struct CheckResult {
    std::string name;
    bool pass{false};
    double margin{0.0}; // distance to the failure threshold (negative = fail)
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    bool pass{true};
    std::vector<CheckResult> checks;

    void add(CheckResult c) {
        pass = pass && c.pass;
        checks.push_back(std::move(c));
    }
};

struct VerifyOptions {
    std::uint64_t seed{42};
    int jobs{2};
    int packings{200};     // qualified suite
    int points{10};        // protected points per packing
    int configs{500};      // angle suite
    long long samples{10000000}; // Monte Carlo samples for the identity suite
    int multistarts{32};
    int seeds{20};         // three-ball restarts
    int grid_points{10000};
};

/// Lemma 7: global minimum of the rearranged-region area is √12 at six 60°
/// chord pieces.
SuiteResult verify_extremal(const VerifyOptions& opt = {});

/// Cited three-ball bound: minimal touching radius is 2/√3 − 1.
SuiteResult verify_three_ball(const VerifyOptions& opt = {});

/// Proposition 1: protected points of random valid capped packings have
/// slice area > √12 − 1e−6; hexagonal-lattice interior slices equal √12.
SuiteResult verify_qualified(const VerifyOptions& opt = {});

/// Lemma 5: the equidistant angle never exceeds α₀; the parallel tangent
/// pair gives exactly 60°.
SuiteResult verify_angle(const VerifyOptions& opt = {});

/// ∫ Area(d_x) dμ = Vol(D_i⁰) on the three reference configurations.
SuiteResult verify_identity(const VerifyOptions& opt = {});

/// Rule-of-thumb dominance over both bound curves on the default grid.
SuiteResult verify_dominance(const VerifyOptions& opt = {});

SuiteResult verify_all(const VerifyOptions& opt = {});

/// Random valid capped packing: n ∈ [5,20] cylinders, t ∈ [10,60],
/// R ∈ [t,2t], all cylinders inside B(R−2).
Packing random_valid_capped_packing(std::uint64_t seed);

/// Pick a protected point (no end within 4/√3, inside B(R−2/√3)) on a random
/// axis; returns false if none found.
bool sample_protected_point(const Packing& p, std::uint64_t seed, int& axis, Vec3& x);

/// The three identity reference configurations.
Packing identity_config_isolated();
Packing identity_config_tangent_pair();
Packing identity_config_hex_cluster();

} // namespace cylpack
