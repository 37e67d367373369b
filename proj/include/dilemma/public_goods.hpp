#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dilemma/contracts.hpp"
#include "dilemma/game.hpp"

namespace dilemma {

// Contribution ladder per player: strictly decreasing in the strategy index,
// zero at the least cooperative strategy.  `threshold` is the provision
// point, `multiplier` the common-fund return factor.
struct ContributionSchedule {
    std::vector<std::vector<Rational>> contributions;  // [i-1][k-1] = c_{i,k}
    Rational threshold;
    Rational multiplier;

    int players() const { return static_cast<int>(contributions.size()); }
    int strategy_count(int player) const {
        return static_cast<int>(contributions[player - 1].size());
    }
    void validate() const;  // throws std::invalid_argument on a bad ladder
};

struct PublicGoodsGame {
    ContributionSchedule schedule;
    Game game;
};

// u_i(s) = c_{i,1} - c_{i,s_i} + (a/n) * sum_j c_{j,s_j} when the pot meets
// the threshold, full refund (payoff c_{i,1}) otherwise.
PublicGoodsGame build_pgg(const ContributionSchedule& sched);

// Same tensor without the refund branch: the good is always produced.  This
// is the constant-variation form under which the context-dependent amounts
// collapse onto the telescoped ones.
Game build_pgg_funded(const ContributionSchedule& sched);

struct OrderCFailure {
    std::size_t restriction_index = 0;
    std::vector<int> fixed;
    std::vector<int> suffix_start;
    int player_i = 0, player_j = 0;
    Profile context;
    std::string inequality;
};

struct OrderCReport {
    bool pass = true;
    bool meaningless = false;  // threshold above the maximal pot
    std::size_t blocks_checked = 0;
    std::optional<OrderCFailure> first_failure;
};

// Order-c validation: inside every enumerated restriction, every contiguous
// 2x2 block whose worst-case pot still meets the threshold must satisfy the
// classical dilemma chains.
OrderCReport validate_order_c(const PublicGoodsGame& p, int max_fixed);

struct Theorem3Report {
    Theorem2Report core;
    SigningReport signing;
    bool pass = false;
};

// Reduced-amount verification plus the all-or-void signing stage, with full
// defection as the disagreement outcome.
Theorem3Report verify_theorem3(const PublicGoodsGame& p, const LosingContract& c,
                               int max_fixed);

// Schedule file parsing: {"contributions": [[..]..], "threshold": r,
// "multiplier": r}.
ContributionSchedule schedule_from_json(const std::string& path);

}  // namespace dilemma
