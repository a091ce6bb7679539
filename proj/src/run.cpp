#include "qtree/run.hpp"

#include <chrono>
#include <utility>

namespace qtree {

RunReport run_grover(const SearchTree& tree, const PathCodec& codec,
                     const BasisPredicate& oracle, std::uint64_t seed,
                     std::optional<std::uint64_t> iteration_override, int max_qubits) {
    const auto start = std::chrono::steady_clock::now();

    RunReport report;
    report.n_states = codec.code_space();
    report.marked = marked_count(oracle, report.n_states);
    if (report.marked == 0) {
        report.iterations = 0;
    } else {
        report.iterations =
            iteration_override.value_or(optimal_iteration_count(report.n_states, report.marked));
    }

    StateVector state = uniform_superposition(codec.total_bits(), max_qubits);
    for (std::uint64_t i = 0; i < report.iterations; ++i) {
        state = grover_iterate(std::move(state), oracle);
    }
    report.success_probability = marked_probability(state, oracle);
    report.measured = measure(state, seed);
    report.decoded = decode(report.measured, codec);
    const auto terminal = is_admissible(report.measured, tree, codec);
    report.admissible = terminal.has_value();
    report.terminal = terminal.value_or(-1);
    report.measured_marked = oracle(report.measured);

    const auto end = std::chrono::steady_clock::now();
    report.wall_time_ms = std::chrono::duration<double, std::milli>(end - start).count();
    return report;
}

} // namespace qtree
