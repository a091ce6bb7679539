#include "qtree/branching.hpp"

#include "qtree/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace qtree;

TEST_CASE("grover iteration counts") {
    CHECK(grover_iterations({5, 3.0, 10}) == 32768); // n=3, d=10 -> 2^15
    CHECK(grover_iterations({2, 2.0, 2}) == 2);      // n=1, d=2 -> 2^1
    CHECK(grover_iterations({3, 2.0, 3}) == 8);      // n=2, d=3 -> 2^3
    CHECK(grover_iterations({2, 1.5, 3}) == 2);      // odd exponent: floor(2^1.5)
    CHECK(grover_iterations_real({5, 3.0, 10}) == doctest::Approx(32768.0));
    CHECK_THROWS_AS(grover_iterations({2, 1.0, 130}), std::overflow_error);

    SUBCASE("squared count recovers the code space for even exponents") {
        for (std::uint64_t b_max : {2ull, 3ull, 5ull, 9ull, 17ull}) {
            const int n = bits_per_action(b_max);
            for (int d = 2; d <= 8; d += 2) {
                if (n * d > 62) continue;
                const std::uint64_t g = grover_iterations({b_max, 1.0, d});
                CHECK(g * g == std::uint64_t{1} << (n * d));
            }
        }
    }
}

TEST_CASE("classical node counts") {
    CHECK(classical_node_count(5, 10) == doctest::Approx(9765625.0));
    CHECK(classical_node_count(3, 10) == doctest::Approx(59049.0));
    CHECK(classical_node_count(7.5, 0) == doctest::Approx(1.0));
}

TEST_CASE("crossover threshold") {
    CHECK(crossover_b_avg(5) == doctest::Approx(std::exp2(1.5)).epsilon(1e-14));
    CHECK(crossover_b_avg(5) == doctest::Approx(2.8284271247461903).epsilon(1e-12));
    CHECK(crossover_b_avg(4) == doctest::Approx(2.0).epsilon(1e-14));

    SUBCASE("constant across each power-of-two plateau") {
        const double plateau = crossover_b_avg(5);
        for (std::uint64_t b : {6ull, 7ull, 8ull}) {
            CHECK(crossover_b_avg(b) == plateau);
        }
        CHECK(crossover_b_avg(9) != plateau);
    }
}

TEST_CASE("crossover ladder") {
    const auto rows = ladder_table(2, 128);
    REQUIRE(rows.size() == 127);

    SUBCASE("plateaus sit on (2^(j-1), 2^j] and jump by sqrt(2)") {
        double previous_plateau = 0.0;
        for (int j = 1; j <= 7; ++j) {
            const std::uint64_t lo = (std::uint64_t{1} << (j - 1)) + 1;
            const std::uint64_t hi = std::uint64_t{1} << j;
            const double plateau = crossover_b_avg(std::max<std::uint64_t>(2, lo));
            for (std::uint64_t b = std::max<std::uint64_t>(2, lo); b <= hi; ++b) {
                CHECK(rows[b - 2].threshold == plateau);
            }
            if (previous_plateau != 0.0) {
                CHECK(plateau / previous_plateau ==
                      doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));
            }
            previous_plateau = plateau;
        }
    }

    SUBCASE("smooth variants bracket the ladder") {
        for (const LadderRow& row : rows) {
            CHECK(row.smooth == doctest::Approx(std::sqrt(static_cast<double>(row.b_max))));
            CHECK(row.smooth_upper ==
                  doctest::Approx(std::sqrt(2.0 * static_cast<double>(row.b_max))));
            CHECK(row.smooth_upper == doctest::Approx(std::numbers::sqrt2 * row.smooth));
            CHECK(row.threshold >= row.smooth - 1e-12);
            CHECK(row.threshold <= row.smooth_upper + 1e-12);
        }
    }
}

TEST_CASE("speedup report reproduces the depth-10 worked scenario") {
    const SpeedupReport report = speedup_report({5, 3.0, 10});
    CHECK(report.classical_max == doctest::Approx(9765625.0));
    CHECK(report.classical_avg == doctest::Approx(59049.0));
    CHECK(report.grover == doctest::Approx(32768.0));
    CHECK(report.ratio_max_avg == doctest::Approx(165.38171687920866).epsilon(1e-12));
    CHECK(report.ratio_avg_grover == doctest::Approx(1.802032470703125).epsilon(1e-12));
    CHECK(report.hybrid_wins);
}

TEST_CASE("crossover boundary and losing side") {
    SUBCASE("b_avg equal to the threshold gives ratio exactly 1") {
        for (int d : {1, 3, 10, 17}) {
            const SpeedupReport report = speedup_report({4, 2.0, d});
            CHECK(report.ratio_avg_grover == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
    SUBCASE("below the threshold the classical walk wins") {
        const SpeedupReport report = speedup_report({5, 2.0, 7});
        CHECK(report.ratio_avg_grover < 1.0);
        CHECK_FALSE(report.hybrid_wins);
    }
}

TEST_CASE("the crossover is depth independent") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t b_max = 2 + rng() % 60;
        const double b_avg =
            1.0 + (static_cast<double>(rng() % 1000) / 1000.0) * (static_cast<double>(b_max) - 1.0);
        const int depth = 1 + static_cast<int>(rng() % 25);
        const SpeedupReport report = speedup_report({b_max, b_avg, depth});
        if (std::fabs(b_avg - report.crossover) < 1e-9) continue; // boundary, either side
        CHECK((b_avg > report.crossover) == (report.classical_avg_log2 > report.grover_log2));
        CHECK((b_avg > report.crossover) == (report.classical_avg > report.grover));
    }
}

TEST_CASE("good/bad angle per depth") {
    CHECK(theta_of_depth(4, 8) == doctest::Approx(std::numbers::pi / 4.0)); // k = N/2
    CHECK(theta_of_depth(4, 0) == 0.0);
    CHECK(theta_of_depth(4, 1) == doctest::Approx(0.25268025514207865).epsilon(1e-12));
    CHECK(theta_of_depth(4, 16) == doctest::Approx(std::numbers::pi / 2.0));
    CHECK_THROWS_AS(theta_of_depth(4, 17), ConfigError);

    SUBCASE("strictly increasing in k_d") {
        double previous = -1.0;
        for (std::uint64_t k = 0; k <= 64; ++k) {
            const double theta = theta_of_depth(6, k);
            CHECK(theta > previous);
            previous = theta;
        }
    }
}

TEST_CASE("delta theta") {
    CHECK(delta_theta(5, 7, 7) == 0.0);
    CHECK(delta_theta(4, 0, 16) == doctest::Approx(std::numbers::pi / 2.0));
    CHECK(delta_theta(4, 1, 4) == doctest::Approx(0.2709185458008354).epsilon(1e-12));
    CHECK(delta_theta(4, 4, 1) == doctest::Approx(-0.2709185458008354).epsilon(1e-12));

    SUBCASE("antisymmetry and telescoping") {
        std::mt19937_64 rng(77);
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 10);
            const std::uint64_t total = std::uint64_t{1} << n;
            const std::uint64_t k1 = rng() % (total + 1);
            const std::uint64_t k2 = rng() % (total + 1);
            const std::uint64_t k3 = rng() % (total + 1);
            CHECK(delta_theta(n, k1, k2) == doctest::Approx(-delta_theta(n, k2, k1)).epsilon(1e-12));
            CHECK(delta_theta(n, k1, k2) + delta_theta(n, k2, k3) ==
                  doctest::Approx(delta_theta(n, k1, k3)).epsilon(1e-12));
            if (k2 >= k1) CHECK(delta_theta(n, k1, k2) >= 0.0);
        }
    }
}

TEST_CASE("depth profile validation flags, never rejects") {
    const DepthSolutionProfile rising{10, {1, 3, 9, 20}};
    const ProfileCheck ok = validate_profile(rising, 20);
    CHECK(ok.nondecreasing);
    CHECK(ok.strictly_increasing);
    CHECK(ok.bounded_by_k);

    const ProfileCheck flat = validate_profile({10, {1, 3, 3, 20}}, 20);
    CHECK(flat.nondecreasing);
    CHECK_FALSE(flat.strictly_increasing);

    const ProfileCheck falling = validate_profile({10, {9, 3}}, 20);
    CHECK_FALSE(falling.nondecreasing);

    const ProfileCheck overflowing = validate_profile({10, {1, 30}}, 20);
    CHECK_FALSE(overflowing.bounded_by_k);
}

TEST_CASE("psi_kd converges to the k-solution state") {
    const DepthSolutionProfile profile{8, {1, 2, 5, 11, 20, 32}};
    const ConvergenceRecord record = psi_kd_limit_check(profile, 32);
    REQUIRE(record.distances.size() == 6);
    CHECK(record.monotone_nonincreasing);
    CHECK(record.final_distance == doctest::Approx(0.0).epsilon(1e-12));
    for (std::size_t i = 1; i < record.distances.size(); ++i) {
        CHECK(record.distances[i] <= record.distances[i - 1] + 1e-12);
    }

    SUBCASE("a non-monotone profile is reported, not rejected") {
        const ConvergenceRecord bad = psi_kd_limit_check({8, {1, 30, 5}}, 32);
        CHECK_FALSE(bad.monotone_nonincreasing);
    }
}
