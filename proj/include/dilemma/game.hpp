#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dilemma/rational.hpp"

namespace dilemma {

// Strategy profile, 1-based per player; index 1 is the most cooperative
// strategy, index k_i the least.
using Profile = std::vector<int>;

// Nonempty player subset as a bitmask: bit (i-1) set means player i belongs.
struct Coalition {
    std::uint32_t mask = 0;

    bool contains(int player) const { return mask >> (player - 1) & 1u; }
    int size() const { return __builtin_popcount(mask); }
    std::vector<int> members() const {
        std::vector<int> out;
        for (int i = 1; i <= 32; ++i)
            if (mask >> (i - 1) & 1u) out.push_back(i);
        return out;
    }
    friend bool operator==(const Coalition&, const Coalition&) = default;
};

// Finite normal-form game with an exact dense payoff tensor.  Profiles
// flatten in mixed-radix order with player 1 most significant and the
// cooperative index first.  Immutable after construction.
class Game {
public:
    Game(std::vector<int> strategy_counts, std::vector<Rational> payoffs);

    int players() const { return static_cast<int>(counts_.size()); }
    int strategy_count(int player) const;
    const std::vector<int>& strategy_counts() const { return counts_; }
    std::size_t profile_count() const { return total_; }

    const Rational& payoff(int player, const Profile& s) const;
    const Rational& payoff_flat(int player, std::size_t flat) const;

    std::size_t flatten(const Profile& s) const;
    Profile unflatten(std::size_t flat) const;
    bool valid_profile(const Profile& s) const;

    Profile cooperative() const { return Profile(players(), 1); }
    Profile all_defect() const { return counts_; }

    friend bool operator==(const Game&, const Game&) = default;

private:
    std::vector<int> counts_;
    std::vector<std::size_t> strides_;
    std::size_t total_;
    std::vector<Rational> payoffs_;  // player-major: payoffs_[p * total_ + flat]
};

// Availability view over a base game: an optional fixed fragment (players in
// `fixed` play a pinned strategy and are no longer players of the game) plus
// a per-player contiguous suffix of surviving strategies.  The least
// cooperative strategy is always available to a free player.
class RestrictedGame {
public:
    static RestrictedGame whole(const Game& g);

    // fixed[i-1] == 0 marks player i free; suffix_start entries for fixed
    // players are ignored.  Throws std::invalid_argument when fewer than two
    // players stay free or an index is out of range.
    RestrictedGame(const Game& g, std::vector<int> fixed, std::vector<int> suffix_start);

    const Game& base() const { return *base_; }
    int players() const { return base_->players(); }

    bool is_fixed(int player) const { return fixed_[player - 1] != 0; }
    int fixed_count() const { return fixed_count_; }
    Coalition fixed_coalition() const;

    // Lowest / highest available index; for fixed players both equal the pin.
    int lo(int player) const;
    int hi(int player) const;
    int available(int player) const { return hi(player) - lo(player) + 1; }

    const std::vector<int>& fixed() const { return fixed_; }
    const std::vector<int>& suffix_start() const { return suffix_; }

    // Payoff lookup with fixed strategies substituted into the profile.
    const Rational& payoff(int player, const Profile& s) const;

    Profile most_cooperative() const;
    std::size_t profile_count() const;

    bool available_profile(const Profile& s) const;

    friend bool operator==(const RestrictedGame&, const RestrictedGame&) = default;

private:
    const Game* base_;
    std::vector<int> fixed_;
    std::vector<int> suffix_;
    int fixed_count_;
};

// Yields every available profile exactly once in mixed-radix order (player 1
// most significant, cooperative index first); fixed players stay pinned.
std::vector<Profile> iterate_profiles(const Game& g);
std::vector<Profile> iterate_profiles(const RestrictedGame& r);

// Definition of a restricted game from explicit parameters; `fixed` may be
// empty (no pinned players).  suffix_start values must lie in [1, k_i].
RestrictedGame restrict_game(const Game& g,
                             const std::vector<std::pair<int, int>>& fixed,
                             const std::vector<int>& suffix_start);

// Every (A, s_A, suffix_start) restriction with |A| <= min(max_fixed, n-2),
// including the identity.  Deterministic order: |A| ascending, members
// lexicographic, s_A mixed-radix, suffix_start mixed-radix.
std::vector<RestrictedGame> enumerate_restricted_games(const Game& g, int max_fixed);

// True iff no profile has a strictly larger payoff total (transferable
// utility reading of Pareto optimality).
bool pareto_optimal_transferable(const Game& g, const Profile& s);

// Weaker scan used by the single-deviation characterization: only profiles
// differing from `s` in one coordinate are compared.
bool pareto_optimal_single_deviation(const Game& g, const Profile& s);

// u_i(k, s_{-i}) >= u_i(k', s_{-i}) over all available opponent profiles
// (strict: >).
bool dominates(const RestrictedGame& r, int player, int k, int k_prime, bool strict);
bool dominates(const Game& g, int player, int k, int k_prime, bool strict);

Rational profile_sum(const Game& g, const Profile& s);

}  // namespace dilemma
