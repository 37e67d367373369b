#pragma once

#include <array>

#include "dilemma/game.hpp"

namespace dilemma {

// Two-player reward exchange: p_i is paid by player i to the opponent
// whenever the opponent plays their cooperative strategy.
struct RewardContract {
    Rational p1;
    Rational p2;
};

// Three-player punish exchange: r_i is paid out in full each time player i
// betrays.  The conditional plan routes the money by circumstance (two
// betrayers pay each other, otherwise along the fixed cycle); the directed
// plan always pays the cycle recipient; equal-split halves the amount
// between the other two.
struct PunishContract {
    enum class Plan { conditional, directed, equal_split };
    Plan plan = Plan::conditional;
    std::array<Rational, 3> amounts{};
    std::array<int, 3> recipient{{2, 3, 1}};
};

Game apply_reward(const Game& g, const RewardContract& c);
Game apply_punish(const Game& g, const PunishContract& c);

struct SectionFourReport {
    bool reward_not_optimizing = false;
    Rational reward_coop_payoff;            // player 1 at joint cooperation, post-reward
    bool conditional_defect_still_nash = false;
    bool directed_profile_matches = false;  // (6,15,3) at (2,1,1)
    bool directed_strong_fails = false;     // pair sum 21 beats 14
    bool equal_split_profile_matches = false;  // (6,10,8) at (2,1,1)
    bool equal_split_strong_fails = false;     // pair sum 16 beats 14

    bool all_reproduced() const {
        return reward_not_optimizing && conditional_defect_still_nash &&
               directed_profile_matches && directed_strong_fails &&
               equal_split_profile_matches && equal_split_strong_fails;
    }
};

// Reruns the three exchange failure modes on the embedded fixtures.
SectionFourReport reproduce_failures();

}  // namespace dilemma
