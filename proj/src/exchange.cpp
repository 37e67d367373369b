#include "dilemma/exchange.hpp"

#include <stdexcept>

#include "dilemma/contracts.hpp"
#include "dilemma/equilibrium.hpp"
#include "dilemma/fixtures.hpp"

namespace dilemma {

Game apply_reward(const Game& g, const RewardContract& c) {
    if (g.players() != 2 || g.strategy_count(1) != 2 || g.strategy_count(2) != 2)
        throw std::invalid_argument("reward contract needs a 2x2 game");
    if (c.p1 < Rational(0) || c.p2 < Rational(0))
        throw std::invalid_argument("reward amounts must be nonnegative");
    std::vector<Rational> payoffs;
    for (int i = 1; i <= 2; ++i) {
        for (const Profile& s : iterate_profiles(g)) {
            Rational u = g.payoff(i, s);
            const int other = 3 - i;
            if (s[other - 1] == 1) u -= (i == 1 ? c.p1 : c.p2);  // pay for their cooperation
            if (s[i - 1] == 1) u += (other == 1 ? c.p1 : c.p2);  // collect for ours
            payoffs.push_back(u);
        }
    }
    return Game(g.strategy_counts(), std::move(payoffs));
}

Game apply_punish(const Game& g, const PunishContract& c) {
    if (g.players() != 3 ||
        g.strategy_count(1) != 2 || g.strategy_count(2) != 2 || g.strategy_count(3) != 2)
        throw std::invalid_argument("punish contract needs a 2x2x2 game");
    for (const Rational& r : c.amounts)
        if (r < Rational(0)) throw std::invalid_argument("punish amounts must be nonnegative");

    std::vector<std::vector<Rational>> rows(3);
    for (const Profile& s : iterate_profiles(g)) {
        std::array<Rational, 3> delta{};
        std::vector<int> betrayers;
        for (int i = 1; i <= 3; ++i)
            if (s[i - 1] == 2) betrayers.push_back(i);

        const auto pay = [&](int from, int to, const Rational& v) {
            delta[from - 1] -= v;
            delta[to - 1] += v;
        };
        switch (c.plan) {
            case PunishContract::Plan::conditional:
                if (betrayers.size() == 2) {
                    pay(betrayers[0], betrayers[1], c.amounts[betrayers[0] - 1]);
                    pay(betrayers[1], betrayers[0], c.amounts[betrayers[1] - 1]);
                } else {
                    for (int i : betrayers) pay(i, c.recipient[i - 1], c.amounts[i - 1]);
                }
                break;
            case PunishContract::Plan::directed:
                for (int i : betrayers) pay(i, c.recipient[i - 1], c.amounts[i - 1]);
                break;
            case PunishContract::Plan::equal_split:
                for (int i : betrayers) {
                    const Rational half = c.amounts[i - 1] / Rational(2);
                    for (int j = 1; j <= 3; ++j)
                        if (j != i) pay(i, j, half);
                }
                break;
        }
        for (int i = 1; i <= 3; ++i) rows[i - 1].push_back(g.payoff(i, s) + delta[i - 1]);
    }

    std::vector<Rational> payoffs;
    for (auto& row : rows)
        for (auto& v : row) payoffs.push_back(v);
    return Game(g.strategy_counts(), std::move(payoffs));
}

SectionFourReport reproduce_failures() {
    SectionFourReport report;

    // Rewarding cooperation can tax the cooperative profile itself.
    {
        const Game base = fixtures::table9();
        const Game modified = apply_reward(base, RewardContract{Rational(5), Rational(3)});
        const Profile coop{1, 1};
        report.reward_coop_payoff = modified.payoff(1, coop);
        report.reward_not_optimizing = !optimizes_pair(base, modified, coop) &&
                                       report.reward_coop_payoff < Rational(7);
    }

    // Conditional punish amounts leave full defection as a second equilibrium.
    {
        const Game base = fixtures::tables_12_13();
        PunishContract c;
        c.plan = PunishContract::Plan::conditional;
        c.amounts = {Rational(2), Rational(2), Rational(2)};
        const Game modified = apply_punish(base, c);
        const auto equilibria = all_nash(modified);
        for (const Profile& s : equilibria)
            if (s == Profile{2, 2, 2}) report.conditional_defect_still_nash = true;
    }

    // Directed and equal-split payouts hand a pair more than cooperation pays.
    // Only the first amount matters for the pair deviation; the companions
    // stay just large enough that no single player wants to betray alone.
    {
        const Game base = fixtures::tables_18_19();
        const Profile coop{1, 1, 1};
        const Profile lone_betrayal{2, 1, 1};
        const Coalition pair{0b011};

        PunishContract directed;
        directed.plan = PunishContract::Plan::directed;
        directed.amounts = {Rational(10), Rational(2), Rational(2)};
        const Game dir = apply_punish(base, directed);
        report.directed_profile_matches = dir.payoff(1, lone_betrayal) == Rational(6) &&
                                          dir.payoff(2, lone_betrayal) == Rational(15) &&
                                          dir.payoff(3, lone_betrayal) == Rational(3);
        const auto dir_eq = is_strong_nash(dir, coop, true);
        report.directed_strong_fails =
            dir_eq.is_nash && !dir_eq.is_strong && dir_eq.counterexample &&
            dir_eq.counterexample->coalition == pair &&
            dir_eq.counterexample->sum_before == Rational(14) &&
            dir_eq.counterexample->sum_after == Rational(21);

        PunishContract split;
        split.plan = PunishContract::Plan::equal_split;
        split.amounts = {Rational(10), Rational(2), Rational(2)};
        const Game eq = apply_punish(base, split);
        report.equal_split_profile_matches = eq.payoff(1, lone_betrayal) == Rational(6) &&
                                             eq.payoff(2, lone_betrayal) == Rational(10) &&
                                             eq.payoff(3, lone_betrayal) == Rational(8);
        const auto eq_rep = is_strong_nash(eq, coop, true);
        report.equal_split_strong_fails =
            eq_rep.is_nash && !eq_rep.is_strong && eq_rep.counterexample &&
            eq_rep.counterexample->coalition == pair &&
            eq_rep.counterexample->sum_before == Rational(14) &&
            eq_rep.counterexample->sum_after == Rational(16);
    }

    return report;
}

}  // namespace dilemma
