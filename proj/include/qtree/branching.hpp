#ifndef QTREE_BRANCHING_HPP
#define QTREE_BRANCHING_HPP

#include <cstdint>
#include <vector>

namespace qtree {

// Search regime under analysis: alphabet-wide maximum branching factor,
// realized average, and search depth.
struct BranchingScenario {
    std::uint64_t b_max = 2;
    double b_avg = 1.0;
    int depth = 1;
};

// Bits needed per action for a b_max-wide alphabet.
int bits_per_action(std::uint64_t b_max);

// Grover iterations |G| = sqrt(2^(n*d)) = 2^(n*d/2) as a real value.
double grover_iterations_real(const BranchingScenario& scenario);

// floor(|G|) as an integer count. Throws std::overflow_error past 2^63.
std::uint64_t grover_iterations(const BranchingScenario& scenario);

// b^d as a real (exact when b is integral and the power fits a double).
double classical_node_count(double b, int depth);

// Average-branching threshold 2^(ceil(log2 b_max)/2): the hybrid search
// wins exactly when b_avg exceeds it, independent of depth.
double crossover_b_avg(std::uint64_t b_max);

// One row of the crossover ladder plus the ceiling-free smooth variants
// sqrt(b_max) and sqrt(2 b_max).
struct LadderRow {
    std::uint64_t b_max;
    double threshold;
    double smooth;
    double smooth_upper;
};

std::vector<LadderRow> ladder_table(std::uint64_t b_max_lo, std::uint64_t b_max_hi);

struct SpeedupReport {
    double classical_max = 0.0;  // b_max^d
    double classical_avg = 0.0;  // b_avg^d
    double grover = 0.0;         // |G|
    double ratio_max_avg = 0.0;  // classical_max / classical_avg
    double ratio_avg_grover = 0.0;
    double crossover = 0.0;
    bool hybrid_wins = false; // b_avg > crossover
    // log2 forms, usable when the plain powers overflow a double
    double classical_max_log2 = 0.0;
    double classical_avg_log2 = 0.0;
    double grover_log2 = 0.0;
};

SpeedupReport speedup_report(const BranchingScenario& scenario);

// Angle of the good/bad split for k_d marked states out of 2^n:
// tan(theta) = sqrt(k_d / (2^n - k_d)); pi/2 at k_d = 2^n.
double theta_of_depth(int n_bits, std::uint64_t k_d);

// theta(k_d2) - theta(k_d1): the angular progress from adding depth.
double delta_theta(int n_bits, std::uint64_t k_d1, std::uint64_t k_d2);

// Per-depth marked-state counts k_1, ..., k_d for an n-bit code space.
struct DepthSolutionProfile {
    int n_bits = 1;
    std::vector<std::uint64_t> k_by_depth;
};

struct ProfileCheck {
    bool nondecreasing = true;
    bool strictly_increasing = true;
    bool bounded_by_k = true; // every k_d <= k
};

// Flags (rather than rejects) sequences that break the k_1 < ... <= k shape.
ProfileCheck validate_profile(const DepthSolutionProfile& profile, std::uint64_t k);

// Distances from each (sqrt(k_d/2^n), sqrt((2^n-k_d)/2^n)) pair to the
// k-solution state vector, checking convergence as k_d grows toward k.
struct ConvergenceRecord {
    std::vector<double> distances;
    bool monotone_nonincreasing = true;
    double final_distance = 0.0;
};

ConvergenceRecord psi_kd_limit_check(const DepthSolutionProfile& profile, std::uint64_t k);

} // namespace qtree

#endif
