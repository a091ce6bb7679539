#ifndef QTREE_RUN_HPP
#define QTREE_RUN_HPP

#include "qtree/oracles.hpp"
#include "qtree/search_tree.hpp"
#include "qtree/statevector.hpp"

#include <cstdint>
#include <optional>

namespace qtree {

// One end-to-end amplification run: encode the path space, amplify against
// the oracle, measure, decode.
struct RunReport {
    std::uint64_t n_states = 0; // N = 2^(n*d)
    std::uint64_t marked = 0;   // k
    std::uint64_t iterations = 0;
    double success_probability = 0.0; // marked mass before measurement
    BasisIndex measured = 0;
    ActionPath decoded;
    bool admissible = false;
    NodeId terminal = -1; // -1 when the measured string is inadmissible
    bool measured_marked = false;
    double wall_time_ms = 0.0;
};

// Runs uniform-superposition -> iterate^j -> measure -> decode. The
// iteration count defaults to optimal_iteration_count(N, k); an override
// reproduces deliberately non-optimal runs. k = 0 performs no iterations
// and measures the uniform state.
RunReport run_grover(const SearchTree& tree, const PathCodec& codec,
                     const BasisPredicate& oracle, std::uint64_t seed,
                     std::optional<std::uint64_t> iteration_override = std::nullopt,
                     int max_qubits = default_max_qubits);

} // namespace qtree

#endif
