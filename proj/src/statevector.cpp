#include "qtree/statevector.hpp"

#include "qtree/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace qtree {

namespace {

// 53-bit uniform double in [0, 1).
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

StateVector uniform_superposition(int num_qubits, int max_qubits) {
    if (num_qubits < 1 || num_qubits > max_qubits) {
        throw CapacityError("register of " + std::to_string(num_qubits) +
                            " qubits outside supported range [1, " +
                            std::to_string(max_qubits) + "]");
    }
    const Eigen::Index n = Eigen::Index{1} << num_qubits;
    const double amp = 1.0 / std::sqrt(static_cast<double>(n));
    StateVector state;
    state.num_qubits = num_qubits;
    state.amplitudes = Eigen::VectorXcd::Constant(n, Complex{amp, 0.0});
    return state;
}

StateVector apply_phase_oracle(StateVector state, const BasisPredicate& marked) {
    const Eigen::Index n = state.amplitudes.size();
    for (Eigen::Index i = 0; i < n; ++i) {
        if (marked(static_cast<BasisIndex>(i))) {
            state.amplitudes[i] = -state.amplitudes[i];
        }
    }
    return state;
}

StateVector invert_about_mean(StateVector state) {
    const Complex mean = state.amplitudes.mean();
    state.amplitudes = Eigen::VectorXcd::Constant(state.amplitudes.size(), 2.0 * mean) -
                       state.amplitudes;
    return state;
}

StateVector grover_iterate(StateVector state, const BasisPredicate& marked) {
    return invert_about_mean(apply_phase_oracle(std::move(state), marked));
}

double marked_probability(const StateVector& state, const BasisPredicate& marked) {
    const Eigen::Index n = state.amplitudes.size();
    double total = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (marked(static_cast<BasisIndex>(i))) {
            total += std::norm(state.amplitudes[i]);
        }
    }
    return total;
}

std::uint64_t optimal_iteration_count(std::uint64_t n_total, std::uint64_t k) {
    if (k == 0) {
        throw NoSolutionError("no marked states: Grover iteration count undefined");
    }
    if (k >= n_total) return 0;
    const double ratio = static_cast<double>(n_total) / static_cast<double>(k);
    const double count = std::floor(std::numbers::pi / 4.0 * std::sqrt(ratio));
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(count));
}

BasisIndex measure(const StateVector& state, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const double u = uniform01(rng);
    const Eigen::Index n = state.amplitudes.size();
    double cumulative = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        cumulative += std::norm(state.amplitudes[i]);
        if (u < cumulative) return static_cast<BasisIndex>(i);
    }
    return static_cast<BasisIndex>(n - 1); // round-off: u landed past the total
}

std::vector<std::uint64_t> sample_counts(const StateVector& state,
                                         std::uint64_t num_samples,
                                         std::uint64_t seed) {
    const Eigen::Index n = state.amplitudes.size();
    std::vector<double> cumulative(static_cast<std::size_t>(n));
    double running = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        running += std::norm(state.amplitudes[i]);
        cumulative[static_cast<std::size_t>(i)] = running;
    }
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < num_samples; ++s) {
        const double u = uniform01(rng) * running;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        if (it == cumulative.end()) --it;
        ++counts[static_cast<std::size_t>(it - cumulative.begin())];
    }
    return counts;
}

GoodBadDecomposition decompose(int num_qubits, std::uint64_t k) {
    const std::uint64_t n_total = std::uint64_t{1} << num_qubits;
    if (k > n_total) {
        throw ConfigError("marked count " + std::to_string(k) + " exceeds state count " +
                          std::to_string(n_total));
    }
    GoodBadDecomposition d;
    d.k = k;
    d.n_total = n_total;
    const double nt = static_cast<double>(n_total);
    d.amp_good = std::sqrt(static_cast<double>(k) / nt);
    d.amp_bad = std::sqrt(static_cast<double>(n_total - k) / nt);
    d.theta = (k == n_total) ? std::numbers::pi / 2.0 : std::atan(d.amp_good / d.amp_bad);
    return d;
}

} // namespace qtree
