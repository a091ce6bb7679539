#include "qtree/puzzle.hpp"

#include "qtree/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_set>

namespace qtree {

std::uint64_t PuzzleBoard::pack() const {
    std::uint64_t code = 0;
    for (int i = 8; i >= 0; --i) {
        code = (code << 4) | tiles[static_cast<std::size_t>(i)];
    }
    return code;
}

PuzzleBoard PuzzleBoard::unpack(std::uint64_t code) {
    PuzzleBoard board;
    for (int i = 0; i < 9; ++i) {
        board.tiles[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(code & 0xF);
        code >>= 4;
    }
    return board;
}

PuzzleBoard PuzzleBoard::canonical_goal() {
    PuzzleBoard board;
    for (int i = 0; i < 8; ++i) board.tiles[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i + 1);
    board.tiles[8] = 0;
    return board;
}

int PuzzleBoard::blank_position() const {
    for (int i = 0; i < 9; ++i) {
        if (tiles[static_cast<std::size_t>(i)] == 0) return i;
    }
    return -1;
}

bool PuzzleBoard::is_permutation() const {
    std::array<bool, 9> seen{};
    for (std::uint8_t t : tiles) {
        if (t > 8 || seen[t]) return false;
        seen[t] = true;
    }
    return true;
}

std::vector<std::pair<PuzzleMove, PuzzleBoard>> puzzle_neighbors(const PuzzleBoard& board) {
    const int blank = board.blank_position();
    const int row = blank / 3;
    const int col = blank % 3;
    std::vector<std::pair<PuzzleMove, PuzzleBoard>> out;
    out.reserve(4);
    const auto try_move = [&](PuzzleMove move, int dr, int dc) {
        const int r = row + dr;
        const int c = col + dc;
        if (r < 0 || r > 2 || c < 0 || c > 2) return;
        PuzzleBoard next = board;
        std::swap(next.tiles[static_cast<std::size_t>(blank)],
                  next.tiles[static_cast<std::size_t>(r * 3 + c)]);
        out.emplace_back(move, next);
    };
    try_move(PuzzleMove::up, -1, 0);
    try_move(PuzzleMove::down, 1, 0);
    try_move(PuzzleMove::left, 0, -1);
    try_move(PuzzleMove::right, 0, 1);
    return out;
}

int h1_misplaced(const PuzzleBoard& board, const PuzzleBoard& goal, bool count_blank) {
    int misplaced = 0;
    for (int i = 0; i < 9; ++i) {
        const std::uint8_t t = board.tiles[static_cast<std::size_t>(i)];
        if (!count_blank && t == 0) continue;
        if (t != goal.tiles[static_cast<std::size_t>(i)]) ++misplaced;
    }
    return misplaced;
}

double h2_euclidean(const PuzzleBoard& board, const PuzzleBoard& goal) {
    std::array<int, 9> goal_position{};
    for (int i = 0; i < 9; ++i) {
        goal_position[goal.tiles[static_cast<std::size_t>(i)]] = i;
    }
    double total = 0.0;
    for (int i = 0; i < 9; ++i) {
        const int j = goal_position[board.tiles[static_cast<std::size_t>(i)]];
        const double dr = static_cast<double>(i / 3 - j / 3);
        const double dc = static_cast<double>(i % 3 - j % 3);
        total += std::sqrt(dr * dr + dc * dc);
    }
    return total;
}

namespace {

// Parity of the permutation mapping goal tile order to board tile order,
// blank excluded. Invariant under blank moves on a 3x3 board.
bool even_tile_permutation(const PuzzleBoard& board, const PuzzleBoard& goal) {
    std::array<int, 9> rank_in_goal{};
    int rank = 0;
    for (std::uint8_t t : goal.tiles) {
        if (t != 0) rank_in_goal[t] = rank++;
    }
    std::array<int, 8> sequence{};
    int len = 0;
    for (std::uint8_t t : board.tiles) {
        if (t != 0) sequence[static_cast<std::size_t>(len++)] = rank_in_goal[t];
    }
    int inversions = 0;
    for (int i = 0; i < 8; ++i) {
        for (int j = i + 1; j < 8; ++j) {
            if (sequence[static_cast<std::size_t>(i)] > sequence[static_cast<std::size_t>(j)]) {
                ++inversions;
            }
        }
    }
    return inversions % 2 == 0;
}

} // namespace

bool is_solvable(const PuzzleBoard& board, const PuzzleBoard& goal) {
    if (!board.is_permutation() || !goal.is_permutation()) {
        throw ConfigError("puzzle boards must contain each tile 0..8 exactly once");
    }
    return even_tile_permutation(board, goal);
}

std::vector<PuzzleBoard> enumerate_reachable(const PuzzleBoard& goal) {
    if (!goal.is_permutation()) {
        throw ConfigError("puzzle boards must contain each tile 0..8 exactly once");
    }
    std::vector<PuzzleBoard> order;
    order.reserve(181440);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(262144);
    order.push_back(goal);
    seen.insert(goal.pack());
    for (std::size_t head = 0; head < order.size(); ++head) {
        const PuzzleBoard current = order[head];
        for (const auto& [move, next] : puzzle_neighbors(current)) {
            if (seen.insert(next.pack()).second) order.push_back(next);
        }
    }
    return order;
}

EmpiricalDistribution heuristic_distribution(
    const std::function<double(const PuzzleBoard&)>& heuristic, const PuzzleBoard& goal,
    DistributionKind kind, double bin_width) {
    std::vector<double> values;
    values.reserve(181440);
    for (const PuzzleBoard& board : enumerate_reachable(goal)) {
        values.push_back(heuristic(board));
    }
    if (kind == DistributionKind::discrete) {
        return EmpiricalDistribution::from_samples_discrete(values);
    }
    return EmpiricalDistribution::from_samples_bin_width(values, bin_width);
}

EmpiricalDistribution heuristic_distribution_binned(
    const std::function<double(const PuzzleBoard&)>& heuristic, const PuzzleBoard& goal,
    int num_bins) {
    std::vector<double> values;
    values.reserve(181440);
    for (const PuzzleBoard& board : enumerate_reachable(goal)) {
        values.push_back(heuristic(board));
    }
    return EmpiricalDistribution::from_samples_binned(values, num_bins);
}

PuzzleBoard scramble(const PuzzleBoard& goal, int moves, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    PuzzleBoard board = goal;
    int previous_blank = -1;
    for (int step = 0; step < moves; ++step) {
        auto neighbors = puzzle_neighbors(board);
        // Never step straight back; short scrambles stay close to `moves` deep.
        std::erase_if(neighbors, [&](const auto& entry) {
            return entry.second.blank_position() == previous_blank;
        });
        previous_blank = board.blank_position();
        const auto pick = static_cast<std::size_t>(rng() % neighbors.size());
        board = neighbors[pick].second;
    }
    return board;
}

} // namespace qtree
