#ifndef QTREE_ORACLES_HPP
#define QTREE_ORACLES_HPP

#include "qtree/distribution.hpp"
#include "qtree/search_tree.hpp"
#include "qtree/statevector.hpp"

#include <cstdint>
#include <functional>

namespace qtree {

// Evaluation f over a depth-d path: terminal node plus the action sequence
// that reached it. Only ever called on admissible paths.
using PathEvaluator = std::function<double(NodeId terminal, const ActionPath& actions)>;

// f = g + h with g a uniform per-action cost and h the tree's per-node
// values at the terminal.
PathEvaluator cost_plus_heuristic(const SearchTree& tree, double action_cost = 1.0);

// Marks exactly the admissible indices whose walk ends in a goal node.
BasisPredicate goal_oracle(const SearchTree& tree, const PathCodec& codec);

// Marks admissible indices with f(path) <= threshold. Inadmissible strings
// are never marked.
BasisPredicate threshold_oracle(const SearchTree& tree, const PathCodec& codec,
                                const PathEvaluator& f, double threshold);

// Quantile band over f's distribution; width is pinned to one quartile.
struct QuantileBand {
    double lo = 0.0;
    double hi = 0.25;
};
inline constexpr double quantile_band_width = 0.25;

// Oracle plus the realized value bounds, so callers can report the actual
// marked fraction (discrete mass granularity makes it differ from 25%).
struct BandOracle {
    BasisPredicate predicate;
    double lower_value; // -inf for lo = 0 (one-sided form)
    double upper_value;
};

// Marks admissible indices with f(path) in (F^{-1}(lo), F^{-1}(hi)] under
// dist's quantile function; lo = 0 degenerates to f <= F^{-1}(hi), and the
// four quartile bands partition the admissible paths.
// Throws ConfigError unless 0 <= lo < hi <= 1 and hi - lo = 0.25.
BandOracle quantile_band_oracle(const SearchTree& tree, const PathCodec& codec,
                                const PathEvaluator& f, QuantileBand band,
                                const EmpiricalDistribution& dist);

// Exhaustive count of marked indices in [0, code_space).
std::uint64_t marked_count(const BasisPredicate& predicate, std::uint64_t code_space);

// Distribution of f over the tree's admissible depth-d paths.
EmpiricalDistribution admissible_f_distribution(const SearchTree& tree, const PathCodec& codec,
                                                const PathEvaluator& f);

} // namespace qtree

#endif
