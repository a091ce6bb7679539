#ifndef QTREE_TESTS_HELPERS_HPP
#define QTREE_TESTS_HELPERS_HPP

#include "qtree/classical_search.hpp"
#include "qtree/search_tree.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace qtree_tests {

inline std::string data_path(const std::string& name) {
    return std::string(QTREE_DATA_DIR) + "/trees/" + name;
}

// Independent route to the admissible-path count: recursive walk over the
// tree itself, never touching the codec.
inline std::uint64_t walk_count(const qtree::SearchTree& tree, qtree::NodeId at, int remaining) {
    if (remaining == 0) return 1;
    std::uint64_t total = 0;
    for (const auto& [action, child] : tree.nodes[static_cast<std::size_t>(at)].children) {
        (void)action;
        total += walk_count(tree, child, remaining - 1);
    }
    return total;
}

// Random rooted tree over a 2..5 symbol alphabet with every root-to-leaf
// branch at least `depth` deep; node h values are random nonnegative ints.
inline qtree::SearchTree random_tree(std::mt19937_64& rng, int depth) {
    qtree::SearchTree tree;
    const int alphabet = 2 + static_cast<int>(rng() % 4);
    for (int a = 0; a < alphabet; ++a) tree.action_names.push_back("a" + std::to_string(a));

    std::function<qtree::NodeId(int)> grow = [&](int level) {
        const auto id = static_cast<qtree::NodeId>(tree.nodes.size());
        tree.nodes.emplace_back();
        tree.node_names.push_back("n" + std::to_string(id));
        tree.node_h.push_back(static_cast<double>(rng() % 10));
        if (level == depth) return id;
        const int child_count = 1 + static_cast<int>(rng() % std::min(alphabet, 3));
        std::vector<qtree::ActionId> actions(static_cast<std::size_t>(alphabet));
        for (int a = 0; a < alphabet; ++a) actions[static_cast<std::size_t>(a)] = a;
        std::shuffle(actions.begin(), actions.end(), rng);
        for (int c = 0; c < child_count; ++c) {
            const qtree::NodeId child = grow(level + 1);
            tree.nodes[static_cast<std::size_t>(id)].children[actions[static_cast<std::size_t>(c)]] =
                child;
        }
        return id;
    };
    tree.root = grow(0);
    for (std::size_t id = 0; id < tree.nodes.size(); ++id) {
        if (tree.nodes[id].children.empty() && rng() % 4 == 0) {
            tree.goals.insert(static_cast<qtree::NodeId>(id));
        }
    }
    return tree;
}

// Implicit uniform (b, d) tree for the classical search algorithms. States
// are (depth, index within level); action i moves to child index*b + i.
struct LevelState {
    int depth = 0;
    std::uint64_t index = 0;
    bool operator==(const LevelState&) const = default;
};

} // namespace qtree_tests

template <>
struct std::hash<qtree_tests::LevelState> {
    std::size_t operator()(const qtree_tests::LevelState& s) const noexcept {
        return std::hash<std::uint64_t>{}(s.index * 64 + static_cast<std::uint64_t>(s.depth));
    }
};

namespace qtree_tests {

inline qtree::SearchProblem<LevelState, int> uniform_tree_problem(
    int b, int d, std::optional<std::uint64_t> goal_leaf) {
    qtree::SearchProblem<LevelState, int> problem;
    problem.initial = LevelState{0, 0};
    problem.successors = [b, d](const LevelState& s) {
        std::vector<qtree::Successor<LevelState, int>> out;
        if (s.depth >= d) return out;
        for (int i = 0; i < b; ++i) {
            out.push_back({i, LevelState{s.depth + 1, s.index * static_cast<std::uint64_t>(b) +
                                                          static_cast<std::uint64_t>(i)},
                           1.0});
        }
        return out;
    };
    problem.is_goal = [d, goal_leaf](const LevelState& s) {
        return goal_leaf && s.depth == d && s.index == *goal_leaf;
    };
    return problem;
}

// Forward error function by Taylor series, kept independent of the library
// implementation path; converges fast for |z| <= 3.
inline double erf_series(double z) {
    const double z2 = z * z;
    double term = z;
    double sum = z;
    for (int n = 1; n < 300; ++n) {
        term *= -z2 / static_cast<double>(n);
        const double contribution = term / static_cast<double>(2 * n + 1);
        sum += contribution;
        if (std::fabs(contribution) < 1e-18 * std::fabs(sum)) break;
    }
    return 2.0 / std::sqrt(3.14159265358979323846) * sum;
}

inline double normal_cdf_series(double x) {
    return 0.5 * (1.0 + erf_series(x / std::sqrt(2.0)));
}

} // namespace qtree_tests

#endif
