#ifndef QTREE_PUZZLE_HPP
#define QTREE_PUZZLE_HPP

#include "qtree/distribution.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

namespace qtree {

// 3x3 sliding-tile board, row-major, 0 is the blank.
struct PuzzleBoard {
    std::array<std::uint8_t, 9> tiles{};

    bool operator==(const PuzzleBoard&) const = default;

    // 4 bits per cell, 36 bits total.
    std::uint64_t pack() const;
    static PuzzleBoard unpack(std::uint64_t code);

    // 1..8 with the blank in the last cell.
    static PuzzleBoard canonical_goal();

    int blank_position() const;
    bool is_permutation() const;
};

enum class PuzzleMove : std::uint8_t { up, down, left, right };

// Boards one blank move away, in up/down/left/right order.
std::vector<std::pair<PuzzleMove, PuzzleBoard>> puzzle_neighbors(const PuzzleBoard& board);

// Number of cells whose content differs from the goal. The blank cell is
// counted by default, which stretches the range to [0, 9]; pass false for
// the tiles-only [0, 8] convention (the admissible one).
int h1_misplaced(const PuzzleBoard& board, const PuzzleBoard& goal, bool count_blank = true);

// Sum over all nine cell contents of the straight-line grid distance
// between current and goal positions.
double h2_euclidean(const PuzzleBoard& board, const PuzzleBoard& goal);

// Tile-inversion parity test: true iff board lies in goal's orbit.
bool is_solvable(const PuzzleBoard& board, const PuzzleBoard& goal);

// Breadth-first enumeration of the goal's solvability class: all
// 9!/2 = 181440 boards, each exactly once, goal first.
std::vector<PuzzleBoard> enumerate_reachable(const PuzzleBoard& goal);

// Distribution of a board heuristic over the reachable class. h1-style
// integer heuristics fit the discrete kind; h2 gets a histogram.
EmpiricalDistribution heuristic_distribution(
    const std::function<double(const PuzzleBoard&)>& heuristic, const PuzzleBoard& goal,
    DistributionKind kind, double bin_width = 0.25);

// As above with an explicit bin count instead of a width.
EmpiricalDistribution heuristic_distribution_binned(
    const std::function<double(const PuzzleBoard&)>& heuristic, const PuzzleBoard& goal,
    int num_bins);

// Board reached from the goal by `moves` random blank moves (no immediate
// backtracking), so its solution distance is at most `moves`.
PuzzleBoard scramble(const PuzzleBoard& goal, int moves, std::uint64_t seed);

} // namespace qtree

template <>
struct std::hash<qtree::PuzzleBoard> {
    std::size_t operator()(const qtree::PuzzleBoard& board) const noexcept {
        return std::hash<std::uint64_t>{}(board.pack());
    }
};

#endif
