#include "qtree/oracles.hpp"

#include "qtree/errors.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace qtree {

PathEvaluator cost_plus_heuristic(const SearchTree& tree, double action_cost) {
    return [h = tree.node_h, action_cost](NodeId terminal, const ActionPath& actions) {
        const double g = action_cost * static_cast<double>(actions.size());
        return g + h[static_cast<std::size_t>(terminal)];
    };
}

BasisPredicate goal_oracle(const SearchTree& tree, const PathCodec& codec) {
    return [tree, codec](BasisIndex x) {
        const auto terminal = is_admissible(x, tree, codec);
        return terminal && tree.is_goal(*terminal);
    };
}

BasisPredicate threshold_oracle(const SearchTree& tree, const PathCodec& codec,
                                const PathEvaluator& f, double threshold) {
    return [tree, codec, f, threshold](BasisIndex x) {
        const auto terminal = is_admissible(x, tree, codec);
        if (!terminal) return false;
        return f(*terminal, decode(x, codec)) <= threshold;
    };
}

BandOracle quantile_band_oracle(const SearchTree& tree, const PathCodec& codec,
                                const PathEvaluator& f, QuantileBand band,
                                const EmpiricalDistribution& dist) {
    if (!(band.lo >= 0.0 && band.lo < band.hi && band.hi <= 1.0)) {
        throw ConfigError("quantile band (" + std::to_string(band.lo) + ", " +
                          std::to_string(band.hi) + ") is not inside [0, 1]");
    }
    if (std::fabs((band.hi - band.lo) - quantile_band_width) > 1e-12) {
        throw ConfigError("quantile band must select one quartile (width 0.25)");
    }
    BandOracle oracle;
    oracle.lower_value = band.lo == 0.0 ? -std::numeric_limits<double>::infinity()
                                        : dist.quantile(band.lo);
    oracle.upper_value = dist.quantile(band.hi);
    // Exclusive below, inclusive above: the F^{-1}(lo) atom already closed
    // the previous quartile, so consecutive bands partition the paths.
    oracle.predicate = [tree, codec, f, lo = oracle.lower_value,
                        hi = oracle.upper_value](BasisIndex x) {
        const auto terminal = is_admissible(x, tree, codec);
        if (!terminal) return false;
        const double value = f(*terminal, decode(x, codec));
        return value > lo && value <= hi;
    };
    return oracle;
}

std::uint64_t marked_count(const BasisPredicate& predicate, std::uint64_t code_space) {
    std::uint64_t k = 0;
    for (BasisIndex x = 0; x < code_space; ++x) {
        if (predicate(x)) ++k;
    }
    return k;
}

EmpiricalDistribution admissible_f_distribution(const SearchTree& tree, const PathCodec& codec,
                                                const PathEvaluator& f) {
    std::vector<double> values;
    for (const AdmissiblePath& path : admissible_paths(tree, codec)) {
        values.push_back(f(path.terminal, path.actions));
    }
    if (values.empty()) throw ConfigError("tree has no admissible depth-" +
                                          std::to_string(codec.depth) + " paths");
    return EmpiricalDistribution::from_samples_discrete(values);
}

} // namespace qtree
