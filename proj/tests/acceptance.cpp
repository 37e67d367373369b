// Acceptance gate: every quantitative claim the library certifies, run end to
// end with exact arithmetic.  One pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <string>

#include "strong_nash_oracle.hpp"

#include "dilemma/contracts.hpp"
#include "dilemma/equilibrium.hpp"
#include "dilemma/exchange.hpp"
#include "dilemma/fixtures.hpp"
#include "dilemma/game_io.hpp"
#include "dilemma/generator.hpp"
#include "dilemma/pd.hpp"
#include "dilemma/public_goods.hpp"
#include "dilemma/suites.hpp"

using namespace dilemma;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& note = "") {
    std::printf("%-4s criterion-%d %s%s%s\n", pass ? "PASS" : "FAIL", idx, name.c_str(),
                note.empty() ? "" : "  -- ", note.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// criterion 1: derived matrices regenerate exactly from their bases
void criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::string note;

    const Game t1 = fixtures::table1();
    const LosingContract six = lemma1_amounts(t1, unit_epsilons(t1));
    pass = pass && six.amount(1, 2) == Rational(6) && six.amount(2, 2) == Rational(6);
    pass = pass && apply_losing(t1, six) == fixtures::table2();

    const Game t56 = fixtures::tables_5_6();
    const LosingContract two = lemma1_amounts(t56, unit_epsilons(t56));
    for (int i = 1; i <= 3; ++i) pass = pass && two.amount(i, 2) == Rational(2);
    pass = pass && apply_losing(t56, two) == fixtures::tables_7_8();

    const Game t1213 = fixtures::tables_12_13();
    PunishContract cond;
    cond.plan = PunishContract::Plan::conditional;
    cond.amounts = {Rational(2), Rational(2), Rational(2)};
    pass = pass && apply_punish(t1213, cond) == fixtures::tables_16_17();

    const double dt = seconds_since(t0);
    if (dt >= 1.0) {
        pass = false;
        note = "took " + std::to_string(dt) + "s";
    }
    report(1, "table-reproduction", pass, note);
}

// criterion 2: unique equilibrium that every pair can break
void criterion2() {
    const Game g = fixtures::tables_7_8();
    const auto eqs = all_nash(g);
    const auto strong = is_strong_nash(g, Profile{1, 1, 1}, true);
    bool pass = eqs.size() == 1 && eqs.front() == Profile{1, 1, 1};
    pass = pass && strong.is_nash && strong.is_unique_nash && !strong.is_strong;
    pass = pass && strong.counterexample.has_value() &&
           strong.counterexample->coalition.size() == 2 &&
           strong.counterexample->sum_before == Rational(16) &&
           strong.counterexample->sum_after > Rational(16);
    report(2, "pair-deviation-counterexample", pass);
}

// criterion 3: the three exchange-contract failure modes
void criterion3() {
    const auto r = reproduce_failures();
    bool pass = r.all_reproduced() && r.reward_coop_payoff < Rational(7);
    report(3, "exchange-failure-modes", pass);
}

void run_suite_criterion(int idx, const std::string& name, const std::string& suite,
                         int trials, std::uint64_t seed, double budget_s) {
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteReport r = run_suite(suite, trials, seed);
    const double dt = seconds_since(t0);
    int passed = 0;
    std::string note;
    for (const auto& t : r.results)
        if (t.pass) ++passed;
    bool pass = r.pass && passed == static_cast<int>(r.results.size());
    note = std::to_string(passed) + "/" + std::to_string(r.results.size()) + " in " +
           std::to_string(dt) + "s";
    if (!r.pass)
        for (const auto& t : r.results)
            if (!t.pass) {
                note += "; first failure: trial " + std::to_string(t.trial) + " " + t.detail;
                break;
            }
    if (dt > budget_s) {
        pass = false;
        note += " (over budget)";
    }
    report(idx, name, pass, note);
}

// criterion 8: validator equivalence on valid and broken games, plus the
// strong-equilibrium scan against its exhaustive oracle
void criterion8() {
    bool pass = true;
    std::string note;
    int checked_valid = 0, checked_broken = 0;
    for (int t = 0; t < 100 && pass; ++t) {
        GeneratorConfig cfg;
        Rng pick(9000 + t);
        cfg.players = pick.uniform(2, 3);
        cfg.max_strategies = 3;
        cfg.seed = pick.next();
        const Game g = gen_random_pd(cfg);
        if (is_pd_flat(g).is_pd != is_pd_recursive(g).is_pd) {
            pass = false;
            note = "validators disagree on a valid instance, seed " + std::to_string(t);
            break;
        }
        ++checked_valid;

        // break one strict dominance link by duplicating a neighbour's value
        Rng where(5000 + t);
        const int player = where.uniform(1, g.players());
        Profile s;
        for (int i = 1; i <= g.players(); ++i) s.push_back(where.uniform(1, g.strategy_count(i)));
        if (s[player - 1] == g.strategy_count(player)) s[player - 1] -= 1;
        Profile neighbour = s;
        neighbour[player - 1] += 1;

        auto j = game_to_json(g);
        const std::size_t flat = g.flatten(s);
        j["payoffs"][player - 1][flat] = rational_to_json(g.payoff(player, neighbour));
        const Game broken = game_from_json(j);
        const PdVerdict flat_v = is_pd_flat(broken);
        const PdVerdict rec_v = is_pd_recursive(broken);
        if (flat_v.is_pd || rec_v.is_pd) {
            pass = false;
            note = "perturbation went undetected, seed " + std::to_string(t);
            break;
        }
        ++checked_broken;
    }
    if (pass) note = std::to_string(checked_valid) + " valid + " +
                     std::to_string(checked_broken) + " perturbed";

    // every fixture, both the base matrix and its contracted counterpart:
    // the early-exit scan must agree with the exhaustive no-pruning oracle,
    // including the identity of the first counterexample
    std::vector<Game> sweep;
    for (const auto& entry : fixtures::corpus()) sweep.push_back(entry.game);
    sweep.push_back(fixtures::table2());
    sweep.push_back(fixtures::tables_7_8());
    sweep.push_back(fixtures::table11());
    sweep.push_back(fixtures::tables_16_17());
    for (const Game& g : sweep) {
        for (const Profile& s : iterate_profiles(g)) {
            for (const bool strict : {false, true}) {
                const auto fast = is_strong_nash(g, s, strict);
                const auto slow = dilemma::testing::strong_nash_full_scan(g, s, strict);
                bool same = fast.is_strong == slow.strong;
                if (same && !slow.strong)
                    same = fast.counterexample &&
                           fast.counterexample->coalition == slow.violations.front().coalition &&
                           fast.counterexample->deviation == slow.violations.front().deviation &&
                           fast.counterexample->sum_after == slow.violations.front().sum_after;
                if (!same) {
                    pass = false;
                    note = "pruned scan disagrees with the exhaustive oracle";
                }
            }
        }
    }
    report(8, "oracle-equivalence", pass, note);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    run_suite_criterion(4, "theorem1-suite", "theorem1", 50, 7, 300.0);
    run_suite_criterion(5, "theorem2-suite", "theorem2", 50, 7, 300.0);
    run_suite_criterion(6, "theorem3-suite", "theorem3", 20, 11, 300.0);
    run_suite_criterion(7, "lemma-suite", "lemmas", 100, 7, 300.0);
    criterion8();
    if (failures == 0) {
        std::printf("all acceptance criteria satisfied\n");
        return 0;
    }
    std::printf("%d criteria failed\n", failures);
    return 1;
}
