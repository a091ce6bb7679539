#include "qtree/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace qtree {

std::string format_number(double value) {
    if (std::isfinite(value) && value == std::floor(value) && std::fabs(value) < 9.0e15) {
        char buffer[32];
        std::snprintf(buffer, sizeof(buffer), "%lld", static_cast<long long>(value));
        return buffer;
    }
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

std::string format_bits(BasisIndex index, int width) {
    std::string bits(static_cast<std::size_t>(width), '0');
    for (int b = 0; b < width; ++b) {
        if (index & (BasisIndex{1} << b)) {
            bits[static_cast<std::size_t>(width - 1 - b)] = '1';
        }
    }
    return bits;
}

void write_encode_csv(std::ostream& out, const SearchTree& tree, const PathCodec& codec) {
    out << "node";
    for (int level = 1; level <= codec.depth; ++level) out << ",level_" << level;
    out << "\n";

    auto paths = admissible_paths(tree, codec);
    std::sort(paths.begin(), paths.end(), [&](const AdmissiblePath& a, const AdmissiblePath& b) {
        return tree.name(a.terminal) < tree.name(b.terminal);
    });
    for (const AdmissiblePath& path : paths) {
        out << tree.name(path.terminal);
        for (ActionId action : path.actions) {
            out << ',' << format_bits(static_cast<BasisIndex>(action), codec.bits_per_action);
        }
        out << "\n";
    }
}

void write_ladder_csv(std::ostream& out, const std::vector<LadderRow>& rows) {
    out << "b_max,threshold,smooth,smooth_upper\n";
    for (const LadderRow& row : rows) {
        out << row.b_max << ',' << format_number(row.threshold) << ','
            << format_number(row.smooth) << ',' << format_number(row.smooth_upper) << "\n";
    }
}

void write_distribution_csv(std::ostream& out, const EmpiricalDistribution& dist) {
    if (dist.kind() == DistributionKind::discrete) {
        out << "value,mass\n";
        for (std::size_t i = 0; i < dist.mass().size(); ++i) {
            out << format_number(dist.support()[i]) << ',' << format_number(dist.mass()[i])
                << "\n";
        }
        return;
    }
    out << "bin_lo,bin_hi,mass,density\n";
    for (std::size_t i = 0; i < dist.mass().size(); ++i) {
        const double lo = dist.support()[i];
        const double hi = dist.support()[i + 1];
        const double density = dist.mass()[i] / (hi - lo);
        out << format_number(lo) << ',' << format_number(hi) << ','
            << format_number(dist.mass()[i]) << ',' << format_number(density) << "\n";
    }
}

void write_run_report(std::ostream& out, const RunReport& report, const SearchTree& tree,
                      const PathCodec& codec) {
    out << "N: " << report.n_states << "\n";
    out << "k: " << report.marked << "\n";
    out << "iterations: " << report.iterations << "\n";
    out << "success_probability: " << format_number(report.success_probability) << "\n";
    out << "measured_index: " << report.measured << "\n";
    out << "measured_bits: " << format_bits(report.measured, codec.total_bits()) << "\n";
    out << "decoded_path: ";
    for (std::size_t i = 0; i < report.decoded.size(); ++i) {
        const ActionId action = report.decoded[i];
        if (i > 0) out << ',';
        if (action < tree.alphabet_size()) {
            out << tree.action_names[static_cast<std::size_t>(action)];
        } else {
            out << "undefined(" << action << ')';
        }
    }
    out << "\n";
    out << "admissible: " << (report.admissible ? "true" : "false") << "\n";
    out << "terminal: " << (report.admissible ? tree.name(report.terminal) : "-") << "\n";
    out << "measured_marked: " << (report.measured_marked ? "true" : "false") << "\n";
    out << "wall_time_ms: " << format_number(report.wall_time_ms) << "\n";
}

void write_speedup_report(std::ostream& out, const BranchingScenario& scenario,
                          const SpeedupReport& report) {
    out << "b_max: " << scenario.b_max << "\n";
    out << "b_avg: " << format_number(scenario.b_avg) << "\n";
    out << "depth: " << scenario.depth << "\n";
    out << "bits_per_action: " << bits_per_action(scenario.b_max) << "\n";
    out << "total_bits: " << bits_per_action(scenario.b_max) * scenario.depth << "\n";
    out << "classical_max: " << format_number(report.classical_max) << "\n";
    out << "classical_avg: " << format_number(report.classical_avg) << "\n";
    out << "grover: " << format_number(report.grover) << "\n";
    out << "ratio_max_avg: " << format_number(report.ratio_max_avg) << "\n";
    out << "ratio_avg_grover: " << format_number(report.ratio_avg_grover) << "\n";
    out << "crossover_b_avg: " << format_number(report.crossover) << "\n";
    out << "hybrid_wins: " << (report.hybrid_wins ? "true" : "false") << "\n";
}

} // namespace qtree
