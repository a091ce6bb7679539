#ifndef QTREE_SEARCH_TREE_HPP
#define QTREE_SEARCH_TREE_HPP

#include "qtree/statevector.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qtree {

using NodeId = int;
using ActionId = int;

// Fixed-length sequence of action ids, root-to-depth order.
using ActionPath = std::vector<ActionId>;

struct TreeNode {
    std::map<ActionId, NodeId> children;
};

// Explicit rooted tree over a global action alphabet. Action ids index
// action_names, and that order fixes the binary codes.
struct SearchTree {
    std::vector<TreeNode> nodes;
    std::vector<std::string> node_names;
    std::vector<double> node_h; // optional per-node heuristic values, 0 when absent
    NodeId root = 0;
    std::set<NodeId> goals;
    std::vector<std::string> action_names;

    int alphabet_size() const { return static_cast<int>(action_names.size()); }
    bool is_goal(NodeId node) const { return goals.count(node) > 0; }
    const std::string& name(NodeId node) const { return node_names[static_cast<std::size_t>(node)]; }
    std::optional<NodeId> find_node(const std::string& name) const;
};

// Checks child resolution, action-id bounds, acyclicity from the root and
// single-parent structure. Throws ConfigError on violation.
void validate_tree(const SearchTree& tree);

// Parses the JSON tree document: {"actions": [...], "root": "...",
// "goals": [...], "nodes": {name: {action: child, ...}, ...}, "h": {...}}.
// Nodes that appear only as children are leaves.
SearchTree parse_tree_json(const std::string& text);
SearchTree load_tree_file(const std::string& path);

// Fixed-width binary path code: d actions, each in ceil(log2 |a|) bits.
struct PathCodec {
    int bits_per_action = 1; // n
    int depth = 1;           // d
    int alphabet_size = 2;

    int total_bits() const { return bits_per_action * depth; }
    std::uint64_t code_space() const { return std::uint64_t{1} << total_bits(); }
};

// Derives the codec for a depth-d search over the tree's alphabet.
// Throws CapacityError when n*d exceeds max_qubits.
PathCodec make_codec(const SearchTree& tree, int depth, int max_qubits = default_max_qubits);

// Concatenates d fixed-width action codes, first action in the most
// significant bits. Throws CodecError on wrong length or an action id
// outside [0, 2^n).
BasisIndex encode(const ActionPath& path, const PathCodec& codec);

// Inverse of encode; total over [0, 2^(n*d)).
ActionPath decode(BasisIndex index, const PathCodec& codec);

// Walks the decoded actions from the root. Returns the terminal node when
// every action is defined along the way, nullopt otherwise.
std::optional<NodeId> is_admissible(BasisIndex index, const SearchTree& tree,
                                    const PathCodec& codec);

// Number of admissible indices in [0, 2^(n*d)), by exhaustive decode.
std::uint64_t admissible_count(const SearchTree& tree, const PathCodec& codec);

// All depth-d paths defined by the tree, found by walking the tree itself
// (no codec round trip); sorted by encoded index.
struct AdmissiblePath {
    ActionPath actions;
    NodeId terminal;
    BasisIndex index;
};
std::vector<AdmissiblePath> admissible_paths(const SearchTree& tree, const PathCodec& codec);

struct BranchingStats {
    int b_max = 0;            // action-alphabet size |a|
    int b_max_structural = 0; // largest child count over internal nodes
    double b_avg = 0.0;       // mean child count over internal nodes
};

BranchingStats branching_stats(const SearchTree& tree);

} // namespace qtree

#endif
