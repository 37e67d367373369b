#pragma once

#include <optional>
#include <vector>

#include "dilemma/game.hpp"

namespace dilemma {

struct DeviationWitness {
    Coalition coalition;
    Profile deviation;     // full profile after the coalition moved
    Rational sum_before;   // coalition payoff total at the queried profile
    Rational sum_after;
};

struct EquilibriumReport {
    Profile profile;
    bool is_nash = false;
    bool is_unique_nash = false;
    bool is_strong = false;
    bool strict = false;
    std::optional<DeviationWitness> counterexample;
};

// No single player can strictly improve by an available unilateral move.
bool is_nash(const RestrictedGame& r, const Profile& s);
bool is_nash(const Game& g, const Profile& s);

// All pure equilibria in canonical profile order.
std::vector<Profile> all_nash(const RestrictedGame& r);
std::vector<Profile> all_nash(const Game& g);

// Exhaustive coalition check under transferable utility: every nonempty
// coalition, every available joint deviation.  Coalitions scan size
// ascending then lexicographic, deviations mixed-radix, so the first
// counterexample is canonical.
EquilibriumReport is_strong_nash(const RestrictedGame& r, const Profile& s, bool strict);
EquilibriumReport is_strong_nash(const Game& g, const Profile& s, bool strict);

// Profile of strictly dominant strategies when every player has one.
std::optional<Profile> dominant_solve(const RestrictedGame& r);
std::optional<Profile> dominant_solve(const Game& g);

// Coalition masks for n players, size ascending then lexicographic on the
// member lists.
std::vector<Coalition> coalitions_in_order(int n);

}  // namespace dilemma
