#ifndef QTREE_STATEVECTOR_HPP
#define QTREE_STATEVECTOR_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace qtree {

using Complex = std::complex<double>;
using BasisIndex = std::uint64_t;

// Total predicate over basis indices; marked states get their amplitude
// phase-flipped by the oracle.
using BasisPredicate = std::function<bool(BasisIndex)>;

// Default register cap: 2^26 amplitudes is 1 GiB. Raise explicitly if you
// have the memory for it.
inline constexpr int default_max_qubits = 26;

// Dense amplitude register over 2^num_qubits basis states.
struct StateVector {
    int num_qubits = 0;
    Eigen::VectorXcd amplitudes;

    std::uint64_t size() const { return static_cast<std::uint64_t>(amplitudes.size()); }
    double norm_squared() const { return amplitudes.squaredNorm(); }
    double probability(BasisIndex x) const {
        return std::norm(amplitudes[static_cast<Eigen::Index>(x)]);
    }
};

// |psi> = 2^{-m/2} sum_x |x>. Throws CapacityError unless 1 <= m <= max_qubits.
StateVector uniform_superposition(int num_qubits, int max_qubits = default_max_qubits);

// Flips the sign of every marked amplitude.
StateVector apply_phase_oracle(StateVector state, const BasisPredicate& marked);

// alpha_x -> 2A - alpha_x with A the mean amplitude (diffusion step).
StateVector invert_about_mean(StateVector state);

// One Grover round: oracle phase flip, then inversion about the mean.
StateVector grover_iterate(StateVector state, const BasisPredicate& marked);

// Sum of |alpha_x|^2 over marked x.
double marked_probability(const StateVector& state, const BasisPredicate& marked);

// floor((pi/4) sqrt(N/k)), at least 1 for k < N, 0 for k = N.
// Throws NoSolutionError for k = 0.
std::uint64_t optimal_iteration_count(std::uint64_t n_total, std::uint64_t k);

// Born-rule sample; deterministic for a fixed (state, seed) pair.
BasisIndex measure(const StateVector& state, std::uint64_t seed);

// num_samples Born-rule draws, returned as per-index counts. Equivalent to
// repeated measure() but builds the cumulative table once.
std::vector<std::uint64_t> sample_counts(const StateVector& state,
                                         std::uint64_t num_samples,
                                         std::uint64_t seed);

// Split of the uniform superposition into solution / non-solution components:
// |psi> = sqrt(k/N)|psi_good> + sqrt((N-k)/N)|psi_bad>.
struct GoodBadDecomposition {
    std::uint64_t k = 0;
    std::uint64_t n_total = 0;
    double amp_good = 0.0;
    double amp_bad = 0.0;
    double theta = 0.0; // radians, tan(theta) = amp_good / amp_bad

    Eigen::Vector2d as_vector() const { return {amp_good, amp_bad}; }
};

GoodBadDecomposition decompose(int num_qubits, std::uint64_t k);

} // namespace qtree

#endif
