#ifndef QTREE_CLASSICAL_SEARCH_HPP
#define QTREE_CLASSICAL_SEARCH_HPP

#include "qtree/puzzle.hpp"
#include "qtree/search_tree.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <tuple>
#include <unordered_set>
#include <vector>

namespace qtree {

template <class State, class Action>
struct Successor {
    Action action;
    State state;
    double cost = 1.0;
};

// Implicit search space: start state, successor generator, goal test and an
// optional heuristic estimate (absent means h = 0).
template <class State, class Action>
struct SearchProblem {
    State initial;
    std::function<std::vector<Successor<State, Action>>(const State&)> successors;
    std::function<bool(const State&)> is_goal;
    std::function<double(const State&)> heuristic;
};

template <class Action>
struct SearchResult {
    std::optional<std::vector<Action>> path;
    double path_cost = 0.0;
    std::uint64_t nodes_expanded = 0; // successor-function invocations
    std::uint64_t max_frontier = 0;
    bool depth_cutoff = false; // depth-limited run hit its limit somewhere

    bool found() const { return path.has_value(); }
};

struct SearchOptions {
    bool closed_set = false; // tree semantics by default
};

namespace detail {

template <class State, class Action>
struct NodeRecord {
    State state;
    int parent = -1;
    Action action{};
    double g = 0.0;
    int depth = 0;
};

template <class State, class Action>
std::vector<Action> reconstruct(const std::vector<NodeRecord<State, Action>>& arena, int index) {
    std::vector<Action> path;
    while (arena[static_cast<std::size_t>(index)].parent >= 0) {
        path.push_back(arena[static_cast<std::size_t>(index)].action);
        index = arena[static_cast<std::size_t>(index)].parent;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

template <class State>
std::function<double(const State&)> heuristic_or_zero(const std::function<double(const State&)>& h) {
    if (h) return h;
    return [](const State&) { return 0.0; };
}

} // namespace detail

// Breadth-first with goal test at generation time. Expanding a leaf still
// invokes (and counts) the successor function.
template <class State, class Action>
SearchResult<Action> bfs(const SearchProblem<State, Action>& problem) {
    SearchResult<Action> result;
    std::vector<detail::NodeRecord<State, Action>> arena;
    arena.push_back({problem.initial, -1, {}, 0.0, 0});
    result.max_frontier = 1;
    if (problem.is_goal(problem.initial)) {
        result.path = std::vector<Action>{};
        return result;
    }
    std::deque<int> frontier{0};
    while (!frontier.empty()) {
        const int index = frontier.front();
        frontier.pop_front();
        const double g = arena[static_cast<std::size_t>(index)].g;
        const int depth = arena[static_cast<std::size_t>(index)].depth;
        const auto successors = problem.successors(arena[static_cast<std::size_t>(index)].state);
        ++result.nodes_expanded;
        for (const auto& succ : successors) {
            arena.push_back({succ.state, index, succ.action, g + succ.cost, depth + 1});
            const int child = static_cast<int>(arena.size()) - 1;
            if (problem.is_goal(succ.state)) {
                result.path = detail::reconstruct(arena, child);
                result.path_cost = arena[static_cast<std::size_t>(child)].g;
                return result;
            }
            frontier.push_back(child);
        }
        result.max_frontier = std::max(result.max_frontier, static_cast<std::uint64_t>(frontier.size()));
    }
    return result;
}

// Depth-first to a fixed depth limit; children are explored in successor
// order. Goal test at generation time.
template <class State, class Action>
SearchResult<Action> dfs_depth_limited(const SearchProblem<State, Action>& problem, int limit) {
    SearchResult<Action> result;
    std::vector<detail::NodeRecord<State, Action>> arena;
    arena.push_back({problem.initial, -1, {}, 0.0, 0});
    result.max_frontier = 1;
    if (problem.is_goal(problem.initial)) {
        result.path = std::vector<Action>{};
        return result;
    }
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        const int index = frontier.back();
        frontier.pop_back();
        if (arena[static_cast<std::size_t>(index)].depth >= limit) {
            result.depth_cutoff = true;
            continue;
        }
        const double g = arena[static_cast<std::size_t>(index)].g;
        const int depth = arena[static_cast<std::size_t>(index)].depth;
        const auto successors = problem.successors(arena[static_cast<std::size_t>(index)].state);
        ++result.nodes_expanded;
        const auto first_child = static_cast<int>(arena.size());
        for (const auto& succ : successors) {
            arena.push_back({succ.state, index, succ.action, g + succ.cost, depth + 1});
            const int child = static_cast<int>(arena.size()) - 1;
            if (problem.is_goal(succ.state)) {
                result.path = detail::reconstruct(arena, child);
                result.path_cost = arena[static_cast<std::size_t>(child)].g;
                return result;
            }
        }
        for (int child = static_cast<int>(arena.size()) - 1; child >= first_child; --child) {
            frontier.push_back(child);
        }
        result.max_frontier = std::max(result.max_frontier, static_cast<std::uint64_t>(frontier.size()));
    }
    return result;
}

// Repeated depth-limited search with growing limit. Stops when a round
// finishes without hitting its limit (space exhausted) or at max_depth.
template <class State, class Action>
SearchResult<Action> iterative_deepening(const SearchProblem<State, Action>& problem,
                                         int max_depth = std::numeric_limits<int>::max()) {
    SearchResult<Action> total;
    for (int limit = 0; limit <= max_depth; ++limit) {
        SearchResult<Action> round = dfs_depth_limited(problem, limit);
        total.nodes_expanded += round.nodes_expanded;
        total.max_frontier = std::max(total.max_frontier, round.max_frontier);
        if (round.found()) {
            total.path = std::move(round.path);
            total.path_cost = round.path_cost;
            return total;
        }
        if (!round.depth_cutoff) return total;
        if (limit == std::numeric_limits<int>::max()) break;
    }
    total.depth_cutoff = true;
    return total;
}

namespace detail {

// Best-first core shared by greedy and A*: min-heap on the supplied key,
// FIFO tie-breaking via insertion sequence, goal test at expansion time.
template <class State, class Action, class Key>
SearchResult<Action> best_first(const SearchProblem<State, Action>& problem, Key&& key,
                                const SearchOptions& options) {
    SearchResult<Action> result;
    const auto h = heuristic_or_zero<State>(problem.heuristic);
    std::vector<NodeRecord<State, Action>> arena;
    arena.push_back({problem.initial, -1, {}, 0.0, 0});

    using Entry = std::tuple<double, std::uint64_t, int>; // key, seq, arena index
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
    std::uint64_t seq = 0;
    frontier.emplace(key(0.0, h(problem.initial)), seq++, 0);
    std::unordered_set<State> closed;

    while (!frontier.empty()) {
        result.max_frontier = std::max(result.max_frontier, static_cast<std::uint64_t>(frontier.size()));
        const auto [ignored, order, index] = frontier.top();
        frontier.pop();
        const State& state = arena[static_cast<std::size_t>(index)].state;
        if (problem.is_goal(state)) {
            result.path = reconstruct(arena, index);
            result.path_cost = arena[static_cast<std::size_t>(index)].g;
            return result;
        }
        if (options.closed_set && !closed.insert(state).second) continue;
        const double g = arena[static_cast<std::size_t>(index)].g;
        const int depth = arena[static_cast<std::size_t>(index)].depth;
        const auto successors = problem.successors(state);
        ++result.nodes_expanded;
        for (const auto& succ : successors) {
            const double child_g = g + succ.cost;
            arena.push_back({succ.state, index, succ.action, child_g, depth + 1});
            frontier.emplace(key(child_g, h(succ.state)), seq++,
                             static_cast<int>(arena.size()) - 1);
        }
    }
    return result;
}

} // namespace detail

// Expands the lowest heuristic estimate first. May return suboptimal paths.
template <class State, class Action>
SearchResult<Action> greedy(const SearchProblem<State, Action>& problem,
                            const SearchOptions& options = {}) {
    return detail::best_first(problem, [](double, double h) { return h; }, options);
}

// Expands the lowest g + h first; optimal for admissible h.
template <class State, class Action>
SearchResult<Action> a_star(const SearchProblem<State, Action>& problem,
                            const SearchOptions& options = {}) {
    return detail::best_first(problem, [](double g, double h) { return g + h; }, options);
}

// Explicit tree as a search problem: unit action costs, goal set from the
// tree, heuristic from the per-node values.
inline SearchProblem<NodeId, ActionId> tree_search_problem(const SearchTree& tree) {
    SearchProblem<NodeId, ActionId> problem;
    problem.initial = tree.root;
    problem.successors = [tree](const NodeId& node) {
        std::vector<Successor<NodeId, ActionId>> out;
        for (const auto& [action, child] : tree.nodes[static_cast<std::size_t>(node)].children) {
            out.push_back({action, child, 1.0});
        }
        return out;
    };
    problem.is_goal = [tree](const NodeId& node) { return tree.is_goal(node); };
    problem.heuristic = [h = tree.node_h](const NodeId& node) {
        return h[static_cast<std::size_t>(node)];
    };
    return problem;
}

// 8-puzzle as a search problem with a pluggable board heuristic.
inline SearchProblem<PuzzleBoard, PuzzleMove> puzzle_search_problem(
    const PuzzleBoard& initial, const PuzzleBoard& goal,
    std::function<double(const PuzzleBoard&)> heuristic = {}) {
    SearchProblem<PuzzleBoard, PuzzleMove> problem;
    problem.initial = initial;
    problem.successors = [](const PuzzleBoard& board) {
        std::vector<Successor<PuzzleBoard, PuzzleMove>> out;
        for (const auto& [move, next] : puzzle_neighbors(board)) {
            out.push_back({move, next, 1.0});
        }
        return out;
    };
    problem.is_goal = [goal](const PuzzleBoard& board) { return board == goal; };
    problem.heuristic = std::move(heuristic);
    return problem;
}

} // namespace qtree

#endif
