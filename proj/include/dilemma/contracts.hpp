#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dilemma/equilibrium.hpp"
#include "dilemma/game.hpp"

namespace dilemma {

// Per player, per non-cooperative strategy, the utility irrevocably given up
// when playing it.  amounts[i-1][k-2] holds r_{i,k} for k in [2, k_i];
// nothing is ever forfeited at the cooperative strategy.
struct LosingContract {
    std::vector<std::vector<Rational>> amounts;
    std::vector<std::vector<Rational>> epsilons;

    Rational amount(int player, int k) const;
    Rational epsilon(int player, int k) const;
    bool shape_matches(const Game& g) const;
};

// Margin schedules: flat units for the single-step construction, strictly
// increasing k-1 ladder for the telescoped one.
std::vector<std::vector<Rational>> unit_epsilons(const Game& g);
std::vector<std::vector<Rational>> ladder_epsilons(const Game& g);

// r_{i,k} = max over opponent profiles of the gain of k over full cooperation,
// plus the margin.  Works for any game with a designated cooperative profile.
LosingContract lemma1_amounts(const Game& g, const std::vector<std::vector<Rational>>& eps);

// Telescoped adjacent-gain sums with a strictly increasing margin ladder.
// telescoped_amounts applies the formula to any game (the provision-point
// extension needs it on tensors with refund plateaus); theorem1_amounts
// additionally insists the input validates as a dilemma.
LosingContract telescoped_amounts(const Game& g, const std::vector<std::vector<Rational>>& eps);
LosingContract theorem1_amounts(const Game& g, const std::vector<std::vector<Rational>>& eps);

// Materializes the modified tensor: u~_i(k, s_{-i}) = u_i(k, s_{-i}) - r_{i,k}.
Game apply_losing(const Game& g, const LosingContract& c);

// Every forfeited payoff falls strictly below the same-context cooperative
// payoff in the modified game.
bool in_feasible_region(const Game& g, const LosingContract& c);

// The designated profile stays a Nash equilibrium of the modified game and
// nobody's payoff there dropped.
bool optimizes(const Game& g, const LosingContract& c, const Profile& coop);
bool optimizes_pair(const Game& original, const Game& modified, const Profile& coop);

// When exactly one player cooperates strictly deeper than everyone else,
// reassign them so their depth matches the runner-up; ties leave the profile
// unchanged.
Profile compensate(const Game& g, const Profile& s);

// Reduced-amount evaluation: forfeits are clipped so no payoff falls below
// the all-defect baseline unless it already was.
class ReducedEvaluator {
public:
    ReducedEvaluator(const Game& g, const LosingContract& c);

    const Game& base() const { return *g_; }
    const Rational& baseline(int player) const { return baseline_[player - 1]; }

    // max{u - r, min{baseline, u}} at the profile as given.
    Rational closed_form(int player, const Profile& s) const;
    // Equivalent three-case definition of the reduced amount; kept separate
    // as a cross-check implementation.
    Rational case_split(int player, const Profile& s) const;
    // Deepest-cooperator reassignment applied before evaluation.
    Rational utility(int player, const Profile& s) const;

private:
    const Game* g_;
    const LosingContract* c_;
    std::vector<Rational> baseline_;
};

Rational reduced_payoff(const ReducedEvaluator& ev, int player, const Profile& compensated);

// Materialized reduced game (compensation included in the tensor).
Game apply_reduced(const Game& g, const LosingContract& c);

// Context-dependent amounts r~_{i,k}(s_{-i}) = u_i(k,s_{-i}) - u_i(1,s_{-i})
// + eps_{i,k}; they collapse to an ordinary contract when constant per (i,k).
struct TildeContract {
    // amounts[i-1][k-2][ctx]: ctx enumerates opponent assignments in
    // mixed-radix order (profiles with player i pinned at 1).
    std::vector<std::vector<std::vector<Rational>>> amounts;
    std::vector<std::vector<Rational>> epsilons;

    bool uniform() const;
    LosingContract collapse() const;  // throws unless uniform()
};

TildeContract tilde_amounts(const Game& g, const std::vector<std::vector<Rational>>& eps);

// --- theorem verification ------------------------------------------------

struct RestrictionFailure {
    std::size_t index = 0;            // position in enumeration order
    std::vector<int> fixed;           // 0 = free
    std::vector<int> suffix_start;
    std::string what;                 // failed assertion
    std::optional<DeviationWitness> witness;
};

struct TheoremReport {
    bool pass = true;
    std::size_t restrictions_checked = 0;
    std::optional<RestrictionFailure> first_failure;
};

// Joint cooperation must be the unique Nash equilibrium and a strict strong
// one in the modified game and in every enumerated restriction of it.
TheoremReport verify_theorem1(const Game& g, const LosingContract& c, int max_fixed);

// Restriction classes under reduced amounts, decided at the restriction's
// joint-cooperation profile.  A player is unclipped there when the contract
// executes their full forfeit: no reassignment fires and no reduction binds,
// so the payoff equals u - r and sits strictly above the all-defect baseline.
// covered: every player who can still move is unclipped (strict conclusions
// apply); degenerate: everyone is clipped exactly to the baseline (non-strict
// conclusions, baseline payoffs); mixed: anything else, where only the
// non-strict conclusion survives (a clipped player with room to move can
// always deviate to an exact tie).
enum class RestrictionClass { covered, degenerate, mixed };

struct Theorem2Report {
    bool pass = true;
    std::size_t restrictions_checked = 0;
    std::size_t covered = 0;
    std::size_t degenerate = 0;
    std::size_t mixed = 0;
    std::optional<RestrictionFailure> first_failure;
};

RestrictionClass classify_restriction(const Game& base, const LosingContract& c,
                                      const RestrictedGame& r);

Theorem2Report verify_theorem2(const Game& g, const LosingContract& c, int max_fixed);

// --- preplay decision ------------------------------------------------------

enum class Verdict { yes, no, indeterminate };

// A derived game resolves the original when signing is dominant for everyone:
// no coalition in the original can beat the worst strong equilibrium of the
// derived game, and derived (strong) equilibria weakly improve on original
// equilibria with at least one strict gain per player.
Verdict is_resolution(const Game& g, const LosingContract& c);

struct SigningReport {
    bool determinate = false;
    std::string reason;
    std::vector<Rational> original_payoffs;  // outcome if any player refuses
    std::vector<Rational> modified_payoffs;  // outcome when everyone signs
    std::vector<bool> sign_dominant;
    bool all_dominant = false;
};

// All-or-void preplay stage: the contract executes only if every player
// signs; any refusal leaves the original game's equilibrium outcome.  When
// the original game has several equilibrium payoff vectors the report is
// indeterminate unless an explicit disagreement equilibrium is supplied.
SigningReport signing_game(const Game& g, const LosingContract& c, bool reduced,
                           const std::optional<Profile>& disagreement = std::nullopt);

}  // namespace dilemma
