#pragma once

#include <array>
#include <optional>
#include <string>

#include "dilemma/game.hpp"

namespace dilemma {

// Local 2x2 block in cell order (1,1), (1,2), (2,1), (2,2) with index 1 the
// more cooperative strategy.
using Block = std::array<Rational, 4>;

// The two strict four-term chains of the classical dilemma.
bool classical_pd_2x2(const Block& u1, const Block& u2);

// First violated chain link, as a replayable label; empty when both hold.
std::optional<std::string> classical_pd_2x2_violation(const Block& u1, const Block& u2);

struct PdWitness {
    int player_i = 0;
    int player_j = 0;
    Profile context;          // full profile; entries at i, j give the block corner
    int block_i = 0;          // contiguous pair {block_i, block_i + 1} for i
    int block_j = 0;
    std::string inequality;   // violated link in local block coordinates
};

struct PdVerdict {
    bool is_pd = false;
    std::optional<PdWitness> first_violation;
};

// Pairwise production check: every contiguous 2x2 block of every player pair,
// under every assignment of the remaining players, satisfies the classical
// chains.  Scan order is players ascending, contexts mixed-radix, blocks
// ascending, so the witness is reproducible.
PdVerdict is_pd_flat(const Game& g);
PdVerdict is_pd_flat(const RestrictedGame& r);

// Literal recursion over induced games, memoized; oracle for is_pd_flat.
PdVerdict is_pd_recursive(const Game& g);

// The three payoff-sum bounds of the 2x2 transferable-utility discussion.
bool check_remark2(const Game& g);

enum class LemmaStatus { holds, fails, inapplicable };

// Outsiders strictly gain when any group moves to more cooperative strategies.
LemmaStatus check_lemma3(const Game& g);

// Full defection pays every player less than joint cooperation, provided the
// largest strategy count is shared.
LemmaStatus check_lemma4(const Game& g);

// No coalition can out-earn joint cooperation against worst-case defection of
// the rest; requires the cooperative profile to be sum-optimal.
LemmaStatus check_lemma5(const Game& g);

// Cooperating at depth d beats full defection whenever someone else matches
// at least depth d.
LemmaStatus check_lemma7(const Game& g);

}  // namespace dilemma
