#include "qtree/search_tree.hpp"

#include "qtree/errors.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace qtree;
using qtree_tests::data_path;

TEST_CASE("codec width follows the ceiling of log2 of the alphabet") {
    const SearchTree two = load_tree_file(data_path("complete_b2_d3.json"));
    CHECK(make_codec(two, 3).bits_per_action == 1);
    CHECK(make_codec(two, 3).code_space() == 8);

    const SearchTree five = load_tree_file(data_path("irregular_b5_d3.json"));
    const PathCodec codec = make_codec(five, 3);
    CHECK(codec.bits_per_action == 3);
    CHECK(codec.total_bits() == 9);
    CHECK(codec.code_space() == 512);

    CHECK_THROWS_AS(make_codec(two, 30), CapacityError); // 30 bits > default cap
    CHECK(make_codec(two, 30, 32).total_bits() == 30);   // raised cap
    CHECK_THROWS_AS(make_codec(two, 0), ConfigError);
}

TEST_CASE("encoding matches the published path tables") {
    const SearchTree binary = load_tree_file(data_path("complete_b2_d3.json"));
    const PathCodec codec2 = make_codec(binary, 3);
    CHECK(encode({0, 1, 1}, codec2) == 3); // path to K
    CHECK(encode({0, 0, 0}, codec2) == 0);
    CHECK(encode({1, 1, 1}, codec2) == 7);

    const SearchTree mixed = load_tree_file(data_path("irregular_b5_d3.json"));
    const PathCodec codec5 = make_codec(mixed, 3);
    CHECK(encode({1, 4, 0}, codec5) == 96); // 001 100 000, path to J
    CHECK(encode({1, 2, 3}, codec5) == 0b001'010'011);
    CHECK(encode({0, 0, 0}, codec5) == 0);
}

TEST_CASE("decode inverts encode") {
    const SearchTree mixed = load_tree_file(data_path("irregular_b5_d3.json"));
    const PathCodec codec = make_codec(mixed, 3);
    CHECK(decode(3, PathCodec{1, 3, 2}) == ActionPath{0, 1, 1});
    CHECK(decode(96, codec) == ActionPath{1, 4, 0});
    CHECK(decode(0, codec) == ActionPath{0, 0, 0});

    SUBCASE("round trip over the whole code space") {
        for (BasisIndex x = 0; x < codec.code_space(); ++x) {
            CHECK(encode(decode(x, codec), codec) == x);
        }
    }
}

TEST_CASE("encode rejects malformed paths") {
    const PathCodec codec{3, 3, 5};
    CHECK_THROWS_AS(encode({1, 4}, codec), CodecError);          // too short
    CHECK_THROWS_AS(encode({1, 4, 0, 0}, codec), CodecError);    // too long
    CHECK_THROWS_AS(encode({1, 8, 0}, codec), CodecError);       // 8 needs 4 bits
    CHECK_THROWS_AS(encode({-1, 0, 0}, codec), CodecError);
    CHECK_NOTHROW(encode({1, 7, 0}, codec)); // undefined action, but codable
}

TEST_CASE("admissibility walks the tree") {
    const SearchTree mixed = load_tree_file(data_path("irregular_b5_d3.json"));
    const PathCodec codec = make_codec(mixed, 3);

    const auto to_l = is_admissible(encode({1, 4, 2}, codec), mixed, codec);
    REQUIRE(to_l.has_value());
    CHECK(mixed.name(*to_l) == "L");

    // first code 101 is undefined in the alphabet table
    CHECK_FALSE(is_admissible(0b101'000'000, mixed, codec).has_value());
    // a1 at the root exists, but a0 afterwards does not
    CHECK_FALSE(is_admissible(encode({1, 0, 0}, codec), mixed, codec).has_value());

    const SearchTree binary = load_tree_file(data_path("complete_b2_d3.json"));
    const PathCodec codec2 = make_codec(binary, 3);
    for (BasisIndex x = 0; x < 8; ++x) {
        CHECK(is_admissible(x, binary, codec2).has_value());
    }
}

TEST_CASE("admissible count: table sizes and code space") {
    const SearchTree mixed = load_tree_file(data_path("irregular_b5_d3.json"));
    const PathCodec codec = make_codec(mixed, 3);
    CHECK(codec.code_space() == 512);
    CHECK(admissible_count(mixed, codec) == 7);

    const auto paths = admissible_paths(mixed, codec);
    REQUIRE(paths.size() == 7);
    CHECK(paths.front().index == 0);  // G via 000 000 000
    CHECK(paths[3].index == 96);      // J via 001 100 000
    CHECK(mixed.name(paths[3].terminal) == "J");

    const SearchTree binary = load_tree_file(data_path("complete_b2_d3.json"));
    CHECK(admissible_count(binary, make_codec(binary, 3)) == 8);
}

TEST_CASE("admissible count agrees with an independent tree walk") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        const int depth = 1 + static_cast<int>(rng() % 4);
        const SearchTree tree = qtree_tests::random_tree(rng, depth);
        const PathCodec codec = make_codec(tree, depth);
        CHECK(admissible_count(tree, codec) == qtree_tests::walk_count(tree, tree.root, depth));
        CHECK(admissible_paths(tree, codec).size() ==
              qtree_tests::walk_count(tree, tree.root, depth));
    }
}

TEST_CASE("round trip and injectivity on random trees") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const int depth = 1 + static_cast<int>(rng() % 4);
        const SearchTree tree = qtree_tests::random_tree(rng, depth);
        const PathCodec codec = make_codec(tree, depth);
        std::set<BasisIndex> seen;
        for (const AdmissiblePath& path : admissible_paths(tree, codec)) {
            CHECK(decode(path.index, codec) == path.actions);
            CHECK(seen.insert(path.index).second); // distinct paths, distinct indices
        }
    }
}

TEST_CASE("constant branching factor b = 2^n fills the whole code space") {
    const SearchTree binary = load_tree_file(data_path("complete_b2_d3.json"));
    const PathCodec codec = make_codec(binary, 3);
    CHECK(admissible_count(binary, codec) == codec.code_space());
}

TEST_CASE("branching stats") {
    const SearchTree mixed = load_tree_file(data_path("irregular_b5_d3.json"));
    const BranchingStats stats = branching_stats(mixed);
    CHECK(stats.b_max == 5);            // alphabet size
    CHECK(stats.b_max_structural == 4); // node F
    CHECK(stats.b_avg == doctest::Approx(2.0)); // (2+1+2+2+1+4)/6

    const SearchTree binary = load_tree_file(data_path("complete_b2_d3.json"));
    const BranchingStats bstats = branching_stats(binary);
    CHECK(bstats.b_max == 2);
    CHECK(bstats.b_max_structural == 2);
    CHECK(bstats.b_avg == doctest::Approx(2.0));

    const SearchTree flat = parse_tree_json(R"({
        "actions": ["x", "y", "z"],
        "root": "r",
        "nodes": {"r": {"x": "u", "y": "v", "z": "w"}}
    })");
    const BranchingStats fstats = branching_stats(flat);
    CHECK(fstats.b_max == 3);
    CHECK(fstats.b_max_structural == 3);
    CHECK(fstats.b_avg == doctest::Approx(3.0));
}

TEST_CASE("tree spec validation") {
    CHECK_THROWS_AS(parse_tree_json("not json"), ConfigError);
    CHECK_THROWS_AS(parse_tree_json(R"({"actions": ["a"], "root": "r"})"), ConfigError);

    SUBCASE("unknown goal") {
        CHECK_THROWS_AS(parse_tree_json(R"({
            "actions": ["a"], "root": "r", "goals": ["missing"],
            "nodes": {"r": {"a": "s"}}
        })"),
                        ConfigError);
    }
    SUBCASE("undeclared action") {
        CHECK_THROWS_AS(parse_tree_json(R"({
            "actions": ["a"], "root": "r", "nodes": {"r": {"b": "s"}}
        })"),
                        ConfigError);
    }
    SUBCASE("cycle back to the root") {
        CHECK_THROWS_AS(parse_tree_json(R"({
            "actions": ["a", "b"], "root": "r",
            "nodes": {"r": {"a": "s"}, "s": {"a": "r"}}
        })"),
                        ConfigError);
    }
    SUBCASE("two parents") {
        CHECK_THROWS_AS(parse_tree_json(R"({
            "actions": ["a", "b"], "root": "r",
            "nodes": {"r": {"a": "s", "b": "t"}, "s": {"a": "u"}, "t": {"a": "u"}}
        })"),
                        ConfigError);
    }
    SUBCASE("unreachable node") {
        CHECK_THROWS_AS(parse_tree_json(R"({
            "actions": ["a"], "root": "r",
            "nodes": {"r": {"a": "s"}, "t": {"a": "u"}}
        })"),
                        ConfigError);
    }
    SUBCASE("heuristic for an unknown node") {
        CHECK_THROWS_AS(parse_tree_json(R"({
            "actions": ["a"], "root": "r", "nodes": {"r": {"a": "s"}},
            "h": {"zzz": 1}
        })"),
                        ConfigError);
    }
    SUBCASE("goals may sit on leaves that only appear as children") {
        const SearchTree tree = parse_tree_json(R"({
            "actions": ["a"], "root": "r", "goals": ["s"],
            "nodes": {"r": {"a": "s"}}
        })");
        CHECK(tree.goals.size() == 1);
        CHECK(tree.is_goal(*tree.find_node("s")));
    }
}
