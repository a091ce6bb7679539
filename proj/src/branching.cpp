#include "qtree/branching.hpp"

#include "qtree/errors.hpp"
#include "qtree/numeric.hpp"
#include "qtree/statevector.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qtree {

namespace {

void check_scenario(const BranchingScenario& s) {
    if (s.b_max < 2) throw ConfigError("b_max must be at least 2");
    if (s.b_avg < 1.0) throw ConfigError("b_avg must be at least 1");
    if (static_cast<double>(s.b_max) < s.b_avg) {
        throw ConfigError("b_avg cannot exceed b_max");
    }
    if (s.depth < 1) throw ConfigError("depth must be at least 1");
}

} // namespace

int bits_per_action(std::uint64_t b_max) {
    return ceil_log2(b_max);
}

double grover_iterations_real(const BranchingScenario& scenario) {
    check_scenario(scenario);
    const double half_exponent =
        static_cast<double>(bits_per_action(scenario.b_max)) * scenario.depth / 2.0;
    return std::exp2(half_exponent);
}

std::uint64_t grover_iterations(const BranchingScenario& scenario) {
    check_scenario(scenario);
    const int exponent = bits_per_action(scenario.b_max) * scenario.depth;
    if (exponent > 126) {
        throw std::overflow_error("Grover iteration count exceeds 2^63 at " +
                                  std::to_string(exponent) + " total bits");
    }
    if (exponent % 2 == 0) return std::uint64_t{1} << (exponent / 2);
    const double value = std::exp2(static_cast<double>(exponent) / 2.0);
    if (value >= 0x1p63) {
        throw std::overflow_error("Grover iteration count exceeds 2^63");
    }
    return static_cast<std::uint64_t>(std::floor(value));
}

double classical_node_count(double b, int depth) {
    if (depth < 0) throw ConfigError("depth must be nonnegative");
    return std::pow(b, depth);
}

double crossover_b_avg(std::uint64_t b_max) {
    if (b_max < 2) throw ConfigError("b_max must be at least 2");
    return std::exp2(static_cast<double>(bits_per_action(b_max)) / 2.0);
}

std::vector<LadderRow> ladder_table(std::uint64_t b_max_lo, std::uint64_t b_max_hi) {
    if (b_max_lo < 2 || b_max_hi < b_max_lo) {
        throw ConfigError("ladder range must satisfy 2 <= lo <= hi");
    }
    std::vector<LadderRow> rows;
    rows.reserve(b_max_hi - b_max_lo + 1);
    for (std::uint64_t b = b_max_lo; b <= b_max_hi; ++b) {
        rows.push_back({b, crossover_b_avg(b), std::sqrt(static_cast<double>(b)),
                        std::sqrt(2.0 * static_cast<double>(b))});
    }
    return rows;
}

SpeedupReport speedup_report(const BranchingScenario& scenario) {
    check_scenario(scenario);
    SpeedupReport report;
    report.classical_max = classical_node_count(static_cast<double>(scenario.b_max), scenario.depth);
    report.classical_avg = classical_node_count(scenario.b_avg, scenario.depth);
    report.grover = grover_iterations_real(scenario);
    report.ratio_max_avg = report.classical_max / report.classical_avg;
    report.ratio_avg_grover = report.classical_avg / report.grover;
    report.crossover = crossover_b_avg(scenario.b_max);
    report.hybrid_wins = scenario.b_avg > report.crossover;
    report.classical_max_log2 =
        scenario.depth * std::log2(static_cast<double>(scenario.b_max));
    report.classical_avg_log2 = scenario.depth * std::log2(scenario.b_avg);
    report.grover_log2 =
        static_cast<double>(bits_per_action(scenario.b_max)) * scenario.depth / 2.0;
    return report;
}

double theta_of_depth(int n_bits, std::uint64_t k_d) {
    const std::uint64_t n_total = std::uint64_t{1} << n_bits;
    if (k_d > n_total) throw ConfigError("k_d exceeds the state count");
    if (k_d == n_total) return std::numbers::pi / 2.0;
    return std::atan(std::sqrt(static_cast<double>(k_d) / static_cast<double>(n_total - k_d)));
}

double delta_theta(int n_bits, std::uint64_t k_d1, std::uint64_t k_d2) {
    return theta_of_depth(n_bits, k_d2) - theta_of_depth(n_bits, k_d1);
}

ProfileCheck validate_profile(const DepthSolutionProfile& profile, std::uint64_t k) {
    ProfileCheck check;
    const auto& ks = profile.k_by_depth;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (i > 0) {
            if (ks[i] < ks[i - 1]) check.nondecreasing = false;
            if (ks[i] <= ks[i - 1]) check.strictly_increasing = false;
        }
        if (ks[i] > k) check.bounded_by_k = false;
    }
    return check;
}

ConvergenceRecord psi_kd_limit_check(const DepthSolutionProfile& profile, std::uint64_t k) {
    ConvergenceRecord record;
    const auto target = decompose(profile.n_bits, k).as_vector();
    double previous = std::numeric_limits<double>::infinity();
    for (std::uint64_t k_d : profile.k_by_depth) {
        const double distance = (decompose(profile.n_bits, k_d).as_vector() - target).norm();
        if (distance > previous + 1e-12) record.monotone_nonincreasing = false;
        record.distances.push_back(distance);
        previous = distance;
    }
    record.final_distance = record.distances.empty() ? 0.0 : record.distances.back();
    return record;
}

} // namespace qtree
