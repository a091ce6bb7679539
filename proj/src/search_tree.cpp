#include "qtree/search_tree.hpp"

#include "qtree/errors.hpp"
#include "qtree/numeric.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace qtree {

std::optional<NodeId> SearchTree::find_node(const std::string& name) const {
    auto it = std::find(node_names.begin(), node_names.end(), name);
    if (it == node_names.end()) return std::nullopt;
    return static_cast<NodeId>(it - node_names.begin());
}

void validate_tree(const SearchTree& tree) {
    const auto node_count = static_cast<NodeId>(tree.nodes.size());
    if (node_count == 0) throw ConfigError("tree has no nodes");
    if (tree.root < 0 || tree.root >= node_count) throw ConfigError("root id out of range");
    if (tree.action_names.empty()) throw ConfigError("tree declares no actions");

    std::vector<int> parent_count(tree.nodes.size(), 0);
    for (const TreeNode& node : tree.nodes) {
        for (const auto& [action, child] : node.children) {
            if (action < 0 || action >= tree.alphabet_size()) {
                throw ConfigError("child uses action id " + std::to_string(action) +
                                  " outside the declared alphabet");
            }
            if (child < 0 || child >= node_count) {
                throw ConfigError("child reference does not resolve to a node");
            }
            ++parent_count[static_cast<std::size_t>(child)];
        }
    }
    for (NodeId id = 0; id < node_count; ++id) {
        if (parent_count[static_cast<std::size_t>(id)] > 1) {
            throw ConfigError("node '" + tree.name(id) + "' has more than one parent");
        }
    }
    if (parent_count[static_cast<std::size_t>(tree.root)] != 0) {
        throw ConfigError("root node has a parent (cycle through the root)");
    }

    // Iterative DFS from the root; a repeat visit means a cycle or a stray
    // cross edge, both already excluded above, so this only collects
    // reachability.
    std::vector<bool> reached(tree.nodes.size(), false);
    std::vector<NodeId> stack{tree.root};
    reached[static_cast<std::size_t>(tree.root)] = true;
    while (!stack.empty()) {
        const NodeId at = stack.back();
        stack.pop_back();
        for (const auto& [action, child] : tree.nodes[static_cast<std::size_t>(at)].children) {
            if (reached[static_cast<std::size_t>(child)]) {
                throw ConfigError("node '" + tree.name(child) + "' reached twice; not a tree");
            }
            reached[static_cast<std::size_t>(child)] = true;
            stack.push_back(child);
        }
    }
    for (NodeId id = 0; id < node_count; ++id) {
        if (!reached[static_cast<std::size_t>(id)]) {
            throw ConfigError("node '" + tree.name(id) + "' is unreachable from the root");
        }
    }
    for (NodeId goal : tree.goals) {
        if (goal < 0 || goal >= node_count) throw ConfigError("goal id out of range");
    }
}

SearchTree parse_tree_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("tree spec is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("tree spec must be a JSON object");
    for (const char* field : {"actions", "root", "nodes"}) {
        if (!doc.contains(field)) {
            throw ConfigError(std::string("tree spec missing required field '") + field + "'");
        }
    }

    SearchTree tree;
    for (const auto& a : doc.at("actions")) {
        tree.action_names.push_back(a.get<std::string>());
    }
    if (tree.action_names.empty()) throw ConfigError("tree spec declares an empty action list");

    const auto& nodes_obj = doc.at("nodes");
    if (!nodes_obj.is_object()) throw ConfigError("'nodes' must map node names to child maps");

    // Collect every mentioned name; ids are assigned in sorted-name order so
    // they do not depend on JSON key ordering.
    std::set<std::string> names;
    names.insert(doc.at("root").get<std::string>());
    for (const auto& [name, children] : nodes_obj.items()) {
        names.insert(name);
        for (const auto& [action, child] : children.items()) {
            (void)action;
            names.insert(child.get<std::string>());
        }
    }
    std::map<std::string, NodeId> id_of;
    for (const std::string& name : names) {
        id_of[name] = static_cast<NodeId>(tree.node_names.size());
        tree.node_names.push_back(name);
    }
    tree.nodes.resize(tree.node_names.size());
    tree.node_h.assign(tree.node_names.size(), 0.0);
    tree.root = id_of.at(doc.at("root").get<std::string>());

    for (const auto& [name, children] : nodes_obj.items()) {
        TreeNode& node = tree.nodes[static_cast<std::size_t>(id_of.at(name))];
        for (const auto& [action_name, child] : children.items()) {
            auto it = std::find(tree.action_names.begin(), tree.action_names.end(), action_name);
            if (it == tree.action_names.end()) {
                throw ConfigError("node '" + name + "' uses undeclared action '" + action_name + "'");
            }
            const auto action = static_cast<ActionId>(it - tree.action_names.begin());
            if (node.children.count(action)) {
                throw ConfigError("node '" + name + "' repeats action '" + action_name + "'");
            }
            node.children[action] = id_of.at(child.get<std::string>());
        }
    }

    if (doc.contains("goals")) {
        for (const auto& g : doc.at("goals")) {
            const std::string goal_name = g.get<std::string>();
            auto it = id_of.find(goal_name);
            if (it == id_of.end()) {
                throw ConfigError("goal '" + goal_name + "' names an unknown node");
            }
            tree.goals.insert(it->second);
        }
    }
    if (doc.contains("h")) {
        for (const auto& [name, value] : doc.at("h").items()) {
            auto it = id_of.find(name);
            if (it == id_of.end()) {
                throw ConfigError("heuristic entry '" + name + "' names an unknown node");
            }
            tree.node_h[static_cast<std::size_t>(it->second)] = value.get<double>();
        }
    }

    validate_tree(tree);
    return tree;
}

SearchTree load_tree_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open tree spec '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_tree_json(buffer.str());
}

PathCodec make_codec(const SearchTree& tree, int depth, int max_qubits) {
    if (depth < 1) throw ConfigError("search depth must be at least 1");
    PathCodec codec;
    codec.alphabet_size = tree.alphabet_size();
    codec.bits_per_action = ceil_log2(static_cast<std::uint64_t>(codec.alphabet_size));
    codec.depth = depth;
    if (codec.total_bits() > max_qubits) {
        throw CapacityError("path code needs " + std::to_string(codec.total_bits()) +
                            " qubits, above the cap of " + std::to_string(max_qubits));
    }
    return codec;
}

BasisIndex encode(const ActionPath& path, const PathCodec& codec) {
    if (static_cast<int>(path.size()) != codec.depth) {
        throw CodecError("path has " + std::to_string(path.size()) + " actions, codec expects " +
                         std::to_string(codec.depth));
    }
    const std::uint64_t limit = std::uint64_t{1} << codec.bits_per_action;
    BasisIndex index = 0;
    for (ActionId action : path) {
        if (action < 0 || static_cast<std::uint64_t>(action) >= limit) {
            throw CodecError("action id " + std::to_string(action) + " does not fit in " +
                             std::to_string(codec.bits_per_action) + " bits");
        }
        index = (index << codec.bits_per_action) | static_cast<BasisIndex>(action);
    }
    return index;
}

ActionPath decode(BasisIndex index, const PathCodec& codec) {
    const std::uint64_t mask = (std::uint64_t{1} << codec.bits_per_action) - 1;
    ActionPath path(static_cast<std::size_t>(codec.depth));
    for (int level = codec.depth - 1; level >= 0; --level) {
        path[static_cast<std::size_t>(level)] = static_cast<ActionId>(index & mask);
        index >>= codec.bits_per_action;
    }
    return path;
}

std::optional<NodeId> is_admissible(BasisIndex index, const SearchTree& tree,
                                    const PathCodec& codec) {
    NodeId at = tree.root;
    const std::uint64_t mask = (std::uint64_t{1} << codec.bits_per_action) - 1;
    for (int level = codec.depth - 1; level >= 0; --level) {
        const auto action =
            static_cast<ActionId>((index >> (level * codec.bits_per_action)) & mask);
        const auto& children = tree.nodes[static_cast<std::size_t>(at)].children;
        auto it = children.find(action);
        if (it == children.end()) return std::nullopt;
        at = it->second;
    }
    return at;
}

std::uint64_t admissible_count(const SearchTree& tree, const PathCodec& codec) {
    std::uint64_t count = 0;
    for (BasisIndex x = 0; x < codec.code_space(); ++x) {
        if (is_admissible(x, tree, codec)) ++count;
    }
    return count;
}

namespace {

void walk_paths(const SearchTree& tree, const PathCodec& codec, NodeId at, ActionPath& prefix,
                std::vector<AdmissiblePath>& out) {
    if (static_cast<int>(prefix.size()) == codec.depth) {
        out.push_back({prefix, at, encode(prefix, codec)});
        return;
    }
    for (const auto& [action, child] : tree.nodes[static_cast<std::size_t>(at)].children) {
        prefix.push_back(action);
        walk_paths(tree, codec, child, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<AdmissiblePath> admissible_paths(const SearchTree& tree, const PathCodec& codec) {
    std::vector<AdmissiblePath> out;
    ActionPath prefix;
    walk_paths(tree, codec, tree.root, prefix, out);
    std::sort(out.begin(), out.end(),
              [](const AdmissiblePath& a, const AdmissiblePath& b) { return a.index < b.index; });
    return out;
}

BranchingStats branching_stats(const SearchTree& tree) {
    if (tree.nodes.empty()) throw ConfigError("branching stats of an empty tree");
    BranchingStats stats;
    stats.b_max = tree.alphabet_size();
    std::uint64_t internal = 0;
    std::uint64_t child_total = 0;
    for (const TreeNode& node : tree.nodes) {
        const auto degree = static_cast<int>(node.children.size());
        if (degree == 0) continue;
        ++internal;
        child_total += static_cast<std::uint64_t>(degree);
        stats.b_max_structural = std::max(stats.b_max_structural, degree);
    }
    stats.b_avg = internal == 0 ? 0.0
                                : static_cast<double>(child_total) / static_cast<double>(internal);
    return stats;
}

} // namespace qtree
