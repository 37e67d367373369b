#include "doctest.h"

#include "dilemma/fixtures.hpp"
#include "dilemma/generator.hpp"
#include "dilemma/pd.hpp"

using namespace dilemma;

TEST_CASE("classical chains on 2x2 blocks") {
    const Game g = fixtures::table1();
    Block u1, u2;
    int cell = 0;
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b, ++cell) {
            u1[cell] = g.payoff(1, {a, b});
            u2[cell] = g.payoff(2, {a, b});
        }
    CHECK(classical_pd_2x2(u1, u2));

    // three-player example sliced at the third player's cooperative strategy
    const Game h = fixtures::tables_5_6();
    Block v1, v2;
    cell = 0;
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b, ++cell) {
            v1[cell] = h.payoff(1, {a, b, 1});
            v2[cell] = h.payoff(2, {a, b, 1});
        }
    CHECK_FALSE(classical_pd_2x2(v1, v2));

    Block flat;
    flat.fill(Rational(3));
    CHECK_FALSE(classical_pd_2x2(flat, flat));  // all chains are strict
}

TEST_CASE("pairwise dilemma check on the fixture corpus") {
    CHECK(is_pd_flat(fixtures::table1()).is_pd);
    CHECK(is_pd_flat(fixtures::table9()).is_pd);
    CHECK(is_pd_flat(fixtures::tables_12_13()).is_pd);
    CHECK(is_pd_flat(fixtures::tables_18_19()).is_pd);
    CHECK_FALSE(is_pd_flat(fixtures::tables_5_6()).is_pd);
    CHECK_FALSE(is_pd_flat(fixtures::table2()).is_pd);  // cooperation dominates after the contract
}

TEST_CASE("violation witnesses replay") {
    const auto verdict = is_pd_flat(fixtures::tables_5_6());
    REQUIRE_FALSE(verdict.is_pd);
    REQUIRE(verdict.first_violation.has_value());
    const auto& w = *verdict.first_violation;
    const Game g = fixtures::tables_5_6();
    Block u1, u2;
    int cell = 0;
    Profile s = w.context;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b, ++cell) {
            s[w.player_i - 1] = w.block_i + a;
            s[w.player_j - 1] = w.block_j + b;
            u1[cell] = g.payoff(w.player_i, s);
            u2[cell] = g.payoff(w.player_j, s);
        }
    const auto label = classical_pd_2x2_violation(u1, u2);
    REQUIRE(label.has_value());
    CHECK(*label == w.inequality);
}

TEST_CASE("recursive definition agrees with the pairwise scan") {
    for (const auto& entry : fixtures::corpus())
        CHECK(is_pd_recursive(entry.game).is_pd == is_pd_flat(entry.game).is_pd);

    // sampled random games, valid and broken
    for (int t = 0; t < 12; ++t) {
        GeneratorConfig cfg;
        cfg.players = 2 + t % 3;
        cfg.max_strategies = 3;
        cfg.seed = 1000 + t;
        const Game g = gen_random_pd(cfg);
        CHECK(is_pd_flat(g).is_pd);
        CHECK(is_pd_recursive(g).is_pd);
    }
}

TEST_CASE("payoff-sum side conditions for the 2x2 case") {
    CHECK(check_remark2(fixtures::table1()));  // 12, 12, 12 vs 20
    CHECK(check_remark2(fixtures::table9()));  // 11, 10, 5 vs 12
    // inflate one betrayal payoff far enough and the bound snaps
    Game spiky = fixtures::make_game({2, 2}, {{10, 1, 100, 6}, {10, 11, 1, 6}});
    CHECK_FALSE(check_remark2(spiky));
    CHECK_THROWS_AS(check_remark2(fixtures::tables_12_13()), std::invalid_argument);
}

TEST_CASE("outsiders gain from others' cooperation") {
    CHECK(check_lemma3(fixtures::tables_12_13()) == LemmaStatus::holds);
    CHECK(check_lemma3(fixtures::table1()) == LemmaStatus::holds);
    CHECK(check_lemma3(fixtures::tables_5_6()) == LemmaStatus::inapplicable);
}

TEST_CASE("full defection pays less than joint cooperation") {
    CHECK(check_lemma4(fixtures::tables_12_13()) == LemmaStatus::holds);  // (3,4,2) vs (7,7,7)
    CHECK(check_lemma4(fixtures::table1()) == LemmaStatus::holds);        // (6,6) vs (10,10)
    CHECK(check_lemma4(fixtures::tables_5_6()) == LemmaStatus::inapplicable);
}

TEST_CASE("no coalition out-earns cooperation before signing") {
    CHECK(check_lemma5(fixtures::tables_12_13()) == LemmaStatus::holds);
    CHECK(check_lemma5(fixtures::tables_18_19()) == LemmaStatus::holds);
    CHECK(check_lemma5(fixtures::tables_5_6()) == LemmaStatus::inapplicable);
}

TEST_CASE("matched-depth cooperation beats the all-defect floor") {
    CHECK(check_lemma7(fixtures::table1()) == LemmaStatus::holds);  // 6 < 10 at depth 1
    CHECK(check_lemma7(fixtures::tables_12_13()) == LemmaStatus::holds);
    CHECK(check_lemma7(fixtures::tables_18_19()) == LemmaStatus::holds);
}

TEST_CASE("restrictions of a dilemma stay dilemmas") {
    const Game g = fixtures::tables_12_13();
    for (const auto& r : enumerate_restricted_games(g, g.players() - 2))
        CHECK(is_pd_flat(r).is_pd);
}

TEST_CASE("single-deviation sum test tracks the full scan in both directions") {
    const Game g = fixtures::tables_12_13();
    CHECK(pareto_optimal_transferable(g, g.cooperative()));
    CHECK(pareto_optimal_single_deviation(g, g.cooperative()));

    // inflating one defection payoff flips both tests together
    auto rows = std::vector<std::vector<long long>>{{7, 5, 4, 2, 80, 6, 5, 3},
                                                    {7, 5, 8, 6, 5, 3, 6, 4},
                                                    {7, 8, 4, 5, 3, 4, 1, 2}};
    const Game spiked = fixtures::make_game({2, 2, 2}, rows);
    CHECK_FALSE(pareto_optimal_transferable(spiked, spiked.cooperative()));
    CHECK_FALSE(pareto_optimal_single_deviation(spiked, spiked.cooperative()));
}

TEST_CASE("draining the cooperative payoff defeats the floor comparison") {
    // u_1 at joint cooperation pushed below u_1 at full defection: the game
    // stops validating, and the floor inequality indeed no longer holds
    auto rows = std::vector<std::vector<long long>>{{1, 5, 4, 2, 8, 6, 5, 3},
                                                    {7, 5, 8, 6, 5, 3, 6, 4},
                                                    {7, 8, 4, 5, 3, 4, 1, 2}};
    const Game drained = fixtures::make_game({2, 2, 2}, rows);
    CHECK_FALSE(is_pd_flat(drained).is_pd);
    CHECK(check_lemma4(drained) == LemmaStatus::inapplicable);
    CHECK_FALSE(drained.payoff(1, drained.all_defect()) <
                drained.payoff(1, drained.cooperative()));
}
