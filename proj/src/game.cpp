#include "dilemma/game.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dilemma {

Game::Game(std::vector<int> strategy_counts, std::vector<Rational> payoffs)
    : counts_(std::move(strategy_counts)) {
    if (counts_.size() < 2)
        throw std::invalid_argument("game: need at least two players");
    if (counts_.size() > 16)
        throw std::invalid_argument("game: coalition masks support at most 16 players");
    total_ = 1;
    for (int k : counts_) {
        if (k < 2) throw std::invalid_argument("game: every player needs at least two strategies");
        total_ *= static_cast<std::size_t>(k);
    }
    strides_.assign(counts_.size(), 1);
    for (int i = static_cast<int>(counts_.size()) - 2; i >= 0; --i)
        strides_[i] = strides_[i + 1] * static_cast<std::size_t>(counts_[i + 1]);
    if (payoffs.size() != total_ * counts_.size())
        throw std::invalid_argument("game: payoff tensor has wrong size");
    payoffs_ = std::move(payoffs);
}

int Game::strategy_count(int player) const {
    if (player < 1 || player > players())
        throw std::out_of_range("game: player " + std::to_string(player) + " out of range");
    return counts_[player - 1];
}

std::size_t Game::flatten(const Profile& s) const {
    if (!valid_profile(s))
        throw std::out_of_range("game: profile out of range");
    std::size_t flat = 0;
    for (std::size_t i = 0; i < counts_.size(); ++i)
        flat += static_cast<std::size_t>(s[i] - 1) * strides_[i];
    return flat;
}

Profile Game::unflatten(std::size_t flat) const {
    Profile s(counts_.size());
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        s[i] = static_cast<int>(flat / strides_[i]) + 1;
        flat %= strides_[i];
    }
    return s;
}

bool Game::valid_profile(const Profile& s) const {
    if (s.size() != counts_.size()) return false;
    for (std::size_t i = 0; i < counts_.size(); ++i)
        if (s[i] < 1 || s[i] > counts_[i]) return false;
    return true;
}

const Rational& Game::payoff(int player, const Profile& s) const {
    if (player < 1 || player > players())
        throw std::out_of_range("game: player " + std::to_string(player) + " out of range");
    return payoffs_[static_cast<std::size_t>(player - 1) * total_ + flatten(s)];
}

const Rational& Game::payoff_flat(int player, std::size_t flat) const {
    if (player < 1 || player > players() || flat >= total_)
        throw std::out_of_range("game: flat payoff lookup out of range");
    return payoffs_[static_cast<std::size_t>(player - 1) * total_ + flat];
}

RestrictedGame RestrictedGame::whole(const Game& g) {
    return RestrictedGame(g, std::vector<int>(g.players(), 0),
                          std::vector<int>(g.players(), 1));
}

RestrictedGame::RestrictedGame(const Game& g, std::vector<int> fixed,
                               std::vector<int> suffix_start)
    : base_(&g), fixed_(std::move(fixed)), suffix_(std::move(suffix_start)) {
    const int n = g.players();
    if (static_cast<int>(fixed_.size()) != n || static_cast<int>(suffix_.size()) != n)
        throw std::invalid_argument("restriction: parameter length mismatch");
    fixed_count_ = 0;
    for (int i = 1; i <= n; ++i) {
        const int k = g.strategy_count(i);
        const int f = fixed_[i - 1];
        if (f != 0) {
            if (f < 1 || f > k)
                throw std::invalid_argument("restriction: fixed strategy out of range");
            ++fixed_count_;
            suffix_[i - 1] = f;  // normalized so equality compares cleanly
        } else if (suffix_[i - 1] < 1 || suffix_[i - 1] > k) {
            throw std::invalid_argument("restriction: suffix start out of range");
        }
    }
    if (fixed_count_ > n - 2)
        throw std::invalid_argument("restriction: induced game needs at least two free players");
}

Coalition RestrictedGame::fixed_coalition() const {
    Coalition a;
    for (int i = 1; i <= players(); ++i)
        if (fixed_[i - 1] != 0) a.mask |= 1u << (i - 1);
    return a;
}

int RestrictedGame::lo(int player) const {
    const int f = fixed_[player - 1];
    return f != 0 ? f : suffix_[player - 1];
}

int RestrictedGame::hi(int player) const {
    const int f = fixed_[player - 1];
    return f != 0 ? f : base_->strategy_count(player);
}

const Rational& RestrictedGame::payoff(int player, const Profile& s) const {
    Profile t = s;
    for (int i = 1; i <= players(); ++i)
        if (fixed_[i - 1] != 0) t[i - 1] = fixed_[i - 1];
    return base_->payoff(player, t);
}

Profile RestrictedGame::most_cooperative() const {
    Profile s(players());
    for (int i = 1; i <= players(); ++i) s[i - 1] = lo(i);
    return s;
}

std::size_t RestrictedGame::profile_count() const {
    std::size_t total = 1;
    for (int i = 1; i <= players(); ++i)
        total *= static_cast<std::size_t>(available(i));
    return total;
}

bool RestrictedGame::available_profile(const Profile& s) const {
    if (static_cast<int>(s.size()) != players()) return false;
    for (int i = 1; i <= players(); ++i)
        if (s[i - 1] < lo(i) || s[i - 1] > hi(i)) return false;
    return true;
}

namespace {

// Mixed-radix advance over per-player [lo, hi] ranges, last player fastest.
bool advance(Profile& s, const std::vector<int>& lo, const std::vector<int>& hi) {
    for (int i = static_cast<int>(s.size()) - 1; i >= 0; --i) {
        if (s[i] < hi[i]) {
            ++s[i];
            std::size_t j = static_cast<std::size_t>(i) + 1;
            for (; j < s.size(); ++j) s[j] = lo[j];
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<Profile> iterate_profiles(const Game& g) {
    return iterate_profiles(RestrictedGame::whole(g));
}

std::vector<Profile> iterate_profiles(const RestrictedGame& r) {
    const int n = r.players();
    std::vector<int> lo(n), hi(n);
    for (int i = 1; i <= n; ++i) { lo[i - 1] = r.lo(i); hi[i - 1] = r.hi(i); }
    std::vector<Profile> out;
    out.reserve(r.profile_count());
    Profile s(lo.begin(), lo.end());
    do {
        out.push_back(s);
    } while (advance(s, lo, hi));
    return out;
}

RestrictedGame restrict_game(const Game& g,
                             const std::vector<std::pair<int, int>>& fixed,
                             const std::vector<int>& suffix_start) {
    std::vector<int> f(g.players(), 0);
    for (const auto& [player, strategy] : fixed) {
        if (player < 1 || player > g.players())
            throw std::invalid_argument("restriction: fixed player out of range");
        f[player - 1] = strategy;
    }
    return RestrictedGame(g, std::move(f), suffix_start);
}

std::vector<RestrictedGame> enumerate_restricted_games(const Game& g, int max_fixed) {
    const int n = g.players();
    const int limit = std::min(max_fixed, n - 2);
    std::vector<RestrictedGame> out;

    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < (1u << n); ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        if (pa != pb) return pa < pb;
        // Lexicographic on sorted member lists: lowest set bit decides first.
        std::uint32_t x = a, y = b;
        while (x && y) {
            const int ba = __builtin_ctz(x), bb = __builtin_ctz(y);
            if (ba != bb) return ba < bb;
            x &= x - 1;
            y &= y - 1;
        }
        return false;
    });

    for (const std::uint32_t mask : masks) {
        if (__builtin_popcount(mask) > (limit < 0 ? 0 : limit)) continue;
        std::vector<int> members;
        for (int i = 1; i <= n; ++i)
            if (mask >> (i - 1) & 1u) members.push_back(i);

        std::vector<int> lo_f, hi_f;
        for (int i : members) { lo_f.push_back(1); hi_f.push_back(g.strategy_count(i)); }
        Profile s_a(lo_f.begin(), lo_f.end());
        bool more_fixed = true;
        while (more_fixed) {
            std::vector<int> fixed(n, 0);
            for (std::size_t j = 0; j < members.size(); ++j)
                fixed[members[j] - 1] = s_a[j];

            std::vector<int> lo_s, hi_s;
            std::vector<int> free_players;
            for (int i = 1; i <= n; ++i) {
                if (mask >> (i - 1) & 1u) continue;
                free_players.push_back(i);
                lo_s.push_back(1);
                hi_s.push_back(g.strategy_count(i));
            }
            Profile suffix(lo_s.begin(), lo_s.end());
            bool more_suffix = true;
            while (more_suffix) {
                std::vector<int> start(n, 1);
                for (std::size_t j = 0; j < free_players.size(); ++j)
                    start[free_players[j] - 1] = suffix[j];
                out.emplace_back(g, fixed, start);
                more_suffix = !suffix.empty() && advance(suffix, lo_s, hi_s);
            }
            more_fixed = !s_a.empty() && advance(s_a, lo_f, hi_f);
        }
    }
    return out;
}

Rational profile_sum(const Game& g, const Profile& s) {
    Rational total;
    const std::size_t flat = g.flatten(s);
    for (int i = 1; i <= g.players(); ++i) total += g.payoff_flat(i, flat);
    return total;
}

bool pareto_optimal_transferable(const Game& g, const Profile& s) {
    const Rational target = profile_sum(g, s);
    for (std::size_t flat = 0; flat < g.profile_count(); ++flat) {
        Rational total;
        for (int i = 1; i <= g.players(); ++i) total += g.payoff_flat(i, flat);
        if (total > target) return false;
    }
    return true;
}

bool pareto_optimal_single_deviation(const Game& g, const Profile& s) {
    const Rational target = profile_sum(g, s);
    for (int i = 1; i <= g.players(); ++i) {
        Profile t = s;
        for (int k = 1; k <= g.strategy_count(i); ++k) {
            if (k == s[i - 1]) continue;
            t[i - 1] = k;
            if (profile_sum(g, t) > target) return false;
        }
    }
    return true;
}

bool dominates(const RestrictedGame& r, int player, int k, int k_prime, bool strict) {
    if (k < r.lo(player) || k > r.hi(player) || k_prime < r.lo(player) || k_prime > r.hi(player))
        throw std::out_of_range("dominates: strategy not available");
    for (const Profile& s : iterate_profiles(r)) {
        if (s[player - 1] != r.lo(player)) continue;  // one pass over opponents
        Profile a = s, b = s;
        a[player - 1] = k;
        b[player - 1] = k_prime;
        const Rational& ua = r.payoff(player, a);
        const Rational& ub = r.payoff(player, b);
        if (strict ? !(ua > ub) : !(ua >= ub)) return false;
    }
    return true;
}

bool dominates(const Game& g, int player, int k, int k_prime, bool strict) {
    return dominates(RestrictedGame::whole(g), player, k, k_prime, strict);
}

}  // namespace dilemma
