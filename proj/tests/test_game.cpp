#include "doctest.h"

#include <set>

#include "dilemma/fixtures.hpp"
#include "dilemma/game.hpp"
#include "dilemma/game_io.hpp"

using namespace dilemma;

namespace {

// 3x3x3 game with distinct payoffs, used for enumeration shape checks.
Game cube_game() {
    std::vector<Rational> payoffs;
    for (int i = 0; i < 3; ++i)
        for (int flat = 0; flat < 27; ++flat)
            payoffs.emplace_back(100 * i + flat);
    return Game({3, 3, 3}, std::move(payoffs));
}

}  // namespace

TEST_CASE("payoff lookup returns the stored value") {
    const Game g = fixtures::table1();
    CHECK(g.payoff(1, {1, 1}) == Rational(10));
    CHECK(g.payoff(2, {2, 1}) == Rational(1));
    CHECK(g.payoff(1, {2, 1}) == Rational(11));
    // pure lookup: same arguments, same value
    CHECK(g.payoff(2, {2, 1}) == g.payoff(2, {2, 1}));
}

TEST_CASE("out-of-range lookups throw range errors") {
    const Game g = fixtures::table1();
    CHECK_THROWS_AS(g.payoff(3, {1, 1}), std::out_of_range);
    CHECK_THROWS_AS(g.payoff(1, {0, 1}), std::out_of_range);
    CHECK_THROWS_AS(g.payoff(1, {1, 3}), std::out_of_range);
    CHECK_THROWS_AS(g.payoff(1, {1}), std::out_of_range);
}

TEST_CASE("profile enumeration is mixed-radix, cooperative first") {
    const Game g = fixtures::table1();
    const auto profiles = iterate_profiles(g);
    REQUIRE(profiles.size() == 4);
    CHECK(profiles[0] == Profile{1, 1});
    CHECK(profiles[1] == Profile{1, 2});
    CHECK(profiles[2] == Profile{2, 1});
    CHECK(profiles[3] == Profile{2, 2});

    CHECK(iterate_profiles(fixtures::tables_12_13()).size() == 8);
}

TEST_CASE("restricted enumeration count matches the range product") {
    const Game g = cube_game();
    const RestrictedGame r(g, {0, 0, 0}, {2, 1, 1});
    const auto profiles = iterate_profiles(r);
    CHECK(profiles.size() == 2 * 3 * 3);  // (3-2+1)*(3-1+1)*(3-1+1)
    // every profile unique and inside the suffix
    std::set<Profile> seen(profiles.begin(), profiles.end());
    CHECK(seen.size() == profiles.size());
    for (const auto& s : profiles) CHECK(s[0] >= 2);

    // independent counting oracle over a batch of suffix choices
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            const RestrictedGame rr(g, {0, 0, 0}, {a, b, 1});
            std::size_t expect = static_cast<std::size_t>(3 - a + 1) * (3 - b + 1) * 3;
            CHECK(iterate_profiles(rr).size() == expect);
        }
}

TEST_CASE("fixing one player slices the tensor") {
    const Game g = fixtures::tables_12_13();
    const RestrictedGame r = restrict_game(g, {{3, 1}}, {1, 1, 1});
    // the slice at the third player's cooperative strategy
    CHECK(r.payoff(1, {1, 1, 1}) == Rational(7));
    CHECK(r.payoff(2, {1, 2, 1}) == Rational(8));
    CHECK(r.payoff(1, {2, 1, 1}) == Rational(8));
    // fixed strategy is substituted even if the caller passes something else
    CHECK(r.payoff(1, {2, 1, 2}) == Rational(8));
    CHECK(iterate_profiles(r).size() == 4);
}

TEST_CASE("identity restriction behaves like the game") {
    const Game g = fixtures::table1();
    const RestrictedGame r = RestrictedGame::whole(g);
    for (const auto& s : iterate_profiles(g))
        for (int i = 1; i <= 2; ++i) CHECK(r.payoff(i, s) == g.payoff(i, s));
}

TEST_CASE("restriction composes by pointwise max of suffix starts") {
    const Game g = cube_game();
    const std::vector<int> a{2, 1, 3}, b{1, 2, 2};
    std::vector<int> combined(3);
    for (int i = 0; i < 3; ++i) combined[i] = std::max(a[i], b[i]);
    const RestrictedGame one_shot(g, {0, 0, 0}, combined);

    // applying b on top of a = keeping profiles allowed by both
    const RestrictedGame first(g, {0, 0, 0}, a);
    std::vector<Profile> stacked;
    for (const auto& s : iterate_profiles(first)) {
        bool ok = true;
        for (int i = 0; i < 3; ++i)
            if (s[i] < b[i]) ok = false;
        if (ok) stacked.push_back(s);
    }
    CHECK(stacked == iterate_profiles(one_shot));
    for (const auto& s : stacked)
        for (int i = 1; i <= 3; ++i) CHECK(one_shot.payoff(i, s) == g.payoff(i, s));
}

TEST_CASE("induced games need two free players") {
    const Game g = fixtures::table1();
    CHECK_THROWS_AS(restrict_game(g, {{1, 1}}, {1, 1}), std::invalid_argument);
    const Game h = fixtures::tables_12_13();
    CHECK_NOTHROW(restrict_game(h, {{3, 2}}, {1, 1, 1}));
    CHECK_THROWS_AS(restrict_game(h, {{2, 1}, {3, 2}}, {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("restricted game enumeration is exhaustive and duplicate-free") {
    const Game g = fixtures::table1();
    const auto games = enumerate_restricted_games(g, 0);
    CHECK(games.size() == 4);  // no fixable player; 2x2 suffix choices
    CHECK(games.front() == RestrictedGame::whole(g));

    const Game h = fixtures::tables_12_13();
    const auto hs = enumerate_restricted_games(h, 1);
    // one free suffix assignment per (A, s_A); counting oracle:
    // #masks * prod k_i = (1 + 3) * 8
    CHECK(hs.size() == 4 * 8);
    std::set<std::pair<std::vector<int>, std::vector<int>>> keys;
    bool found_fix3_coop = false, found_fix3_defect = false;
    for (const auto& r : hs) {
        keys.insert({r.fixed(), r.suffix_start()});
        if (r.fixed() == std::vector<int>{0, 0, 1} &&
            r.suffix_start() == std::vector<int>{1, 1, 1})
            found_fix3_coop = true;
        if (r.fixed() == std::vector<int>{0, 0, 2} &&
            r.suffix_start() == std::vector<int>{1, 1, 2})
            found_fix3_defect = true;
    }
    CHECK(keys.size() == hs.size());
    CHECK(found_fix3_coop);
    CHECK(found_fix3_defect);
}

TEST_CASE("sum-optimality agrees with a direct scan") {
    const Game g = fixtures::table1();
    // independent re-computation of the best total
    Rational best(-1000000);
    for (const auto& s : iterate_profiles(g)) {
        const Rational total = g.payoff(1, s) + g.payoff(2, s);
        if (total > best) best = total;
    }
    CHECK(best == Rational(20));
    CHECK(pareto_optimal_transferable(g, {1, 1}));
    CHECK_FALSE(pareto_optimal_transferable(g, {2, 2}));

    const Game h = fixtures::tables_18_19();
    CHECK(profile_sum(h, {2, 1, 1}) == Rational(24));
    CHECK(profile_sum(h, {1, 1, 1}) == Rational(25));
    CHECK(pareto_optimal_transferable(h, {1, 1, 1}));
}

TEST_CASE("dominance scans all opponent assignments") {
    const Game g = fixtures::table1();
    CHECK(dominates(g, 1, 2, 1, true));       // 11>10, 6>1
    CHECK_FALSE(dominates(g, 1, 1, 2, false));
    const Game h = fixtures::table2();
    CHECK(dominates(h, 1, 1, 2, true));       // 10>5, 1>0
    CHECK(dominates(g, 1, 2, 2, false));      // reflexive, non-strict
    CHECK_FALSE(dominates(g, 1, 2, 2, true));
}

TEST_CASE("game files round-trip and reject malformed payloads") {
    const Game g = fixtures::tables_12_13();
    const auto j = game_to_json(g);
    CHECK(game_from_json(j) == g);

    auto bad = j;
    bad["payoffs"][0].erase(7);
    CHECK_THROWS_AS(game_from_json(bad), input_error);

    bad = j;
    bad["payoffs"][1][3] = "6/4";
    CHECK_THROWS_AS(game_from_json(bad), input_error);

    bad = j;
    bad["payoffs"][1][3] = 1.25;
    CHECK_THROWS_AS(game_from_json(bad), input_error);

    bad = j;
    bad["strategies"] = {2, 2};
    CHECK_THROWS_AS(game_from_json(bad), input_error);

    // exact rationals survive the trip
    auto with_fraction = j;
    with_fraction["payoffs"][0][0] = "22/7";
    const Game f = game_from_json(with_fraction);
    CHECK(f.payoff(1, {1, 1, 1}) == Rational(22, 7));
    CHECK(game_from_json(game_to_json(f)) == f);
}
