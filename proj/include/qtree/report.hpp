#ifndef QTREE_REPORT_HPP
#define QTREE_REPORT_HPP

#include "qtree/branching.hpp"
#include "qtree/distribution.hpp"
#include "qtree/run.hpp"
#include "qtree/search_tree.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qtree {

// Integer-valued doubles print without a fractional part; everything else
// gets 12 significant digits.
std::string format_number(double value);

// Zero-padded binary expansion of a path code.
std::string format_bits(BasisIndex index, int width);

// One CSV row per admissible depth-d path: node name, then the d per-level
// action codes. Rows sort by node name.
void write_encode_csv(std::ostream& out, const SearchTree& tree, const PathCodec& codec);

// Crossover ladder rows: b_max, threshold, smooth, smooth_upper.
void write_ladder_csv(std::ostream& out, const std::vector<LadderRow>& rows);

// Discrete: value,mass rows. Binned: bin_lo,bin_hi,mass,density rows.
void write_distribution_csv(std::ostream& out, const EmpiricalDistribution& dist);

// Line-oriented key: value report of an amplification run.
void write_run_report(std::ostream& out, const RunReport& report, const SearchTree& tree,
                      const PathCodec& codec);

// Line-oriented key: value report of a branching scenario.
void write_speedup_report(std::ostream& out, const BranchingScenario& scenario,
                          const SpeedupReport& report);

} // namespace qtree

#endif
