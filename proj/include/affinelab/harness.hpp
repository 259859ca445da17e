#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "affinelab/polygon.hpp"
#include "affinelab/primitives.hpp"

namespace affinelab {

// Deterministic splitmix64 stream with hand-rolled uniform helpers, so the
// same seed produces the same instances on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    double uniform01();  // [0, 1), 53 bits
    double uniform(double lo, double hi);

private:
    std::uint64_t state_;
};

struct TrialConfig {
    std::uint64_t seed = 1;
    int trials = 100;
    int n = 20;
    double det_floor = 0.1;
    double reflect_prob = 0.5;
    int degeneracy_retries = 100;
};

// Uniform [0,1]^2 points, jittered and resampled until the general-position
// check passes. Throws Error when the retry cap is exhausted.
PointSet random_point_set(Rng& rng, int n, const TrialConfig& cfg);

// Linear entries and translation uniform in [-2, 2], resampled until
// |det| >= det_floor; a row swap injects a reflection with reflect_prob.
AffineMap random_affine(Rng& rng, const TrialConfig& cfg);

// Random simple polygon: general-position points connected in angular order
// around their mean, resampled until simple.
Polygon random_simple_polygon(Rng& rng, int n, const TrialConfig& cfg);

struct FailureRecord {
    int trial = 0;
    std::uint64_t trial_seed = 0;
    AffineMap alpha;
    std::string diff;
};

struct InvarianceReport {
    std::string algorithm;
    int trials_run = 0;
    int degenerate_resamples = 0;
    int aborted_trials = 0;  // retry cap exceeded
    std::vector<FailureRecord> failures;

    bool pass() const { return failures.empty(); }
};

// Registered algorithm identifiers, in a stable order.
std::vector<std::string> algorithm_ids();
bool algorithm_exists(const std::string& id);
// True for algorithms whose instances are polygons (smaller default n).
bool algorithm_uses_polygons(const std::string& id);

// Runs cfg.trials seeded trials: generate an instance and a random affine
// map, run the algorithm on both sides, compare canonical index output
// (alpha-mapped points for the primitive schemes).
InvarianceReport check_invariance(const std::string& algorithm, const TrialConfig& cfg);

void emit_report_json(const InvarianceReport& report, const std::string& path);

}  // namespace affinelab
