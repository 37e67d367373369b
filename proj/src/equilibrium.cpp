#include "dilemma/equilibrium.hpp"

#include <algorithm>
#include <stdexcept>

namespace dilemma {

bool is_nash(const RestrictedGame& r, const Profile& s) {
    if (!r.available_profile(s))
        throw std::invalid_argument("is_nash: profile not available");
    for (int i = 1; i <= r.players(); ++i) {
        const Rational& here = r.payoff(i, s);
        Profile t = s;
        for (int k = r.lo(i); k <= r.hi(i); ++k) {
            if (k == s[i - 1]) continue;
            t[i - 1] = k;
            if (r.payoff(i, t) > here) return false;
        }
    }
    return true;
}

bool is_nash(const Game& g, const Profile& s) {
    return is_nash(RestrictedGame::whole(g), s);
}

std::vector<Profile> all_nash(const RestrictedGame& r) {
    std::vector<Profile> out;
    for (const Profile& s : iterate_profiles(r))
        if (is_nash(r, s)) out.push_back(s);
    return out;
}

std::vector<Profile> all_nash(const Game& g) {
    return all_nash(RestrictedGame::whole(g));
}

std::vector<Coalition> coalitions_in_order(int n) {
    std::vector<Coalition> out;
    for (std::uint32_t m = 1; m < (1u << n); ++m) out.push_back({m});
    std::sort(out.begin(), out.end(), [](const Coalition& a, const Coalition& b) {
        const int pa = a.size(), pb = b.size();
        if (pa != pb) return pa < pb;
        std::uint32_t x = a.mask, y = b.mask;
        while (x && y) {
            const int bx = __builtin_ctz(x), by = __builtin_ctz(y);
            if (bx != by) return bx < by;
            x &= x - 1;
            y &= y - 1;
        }
        return false;
    });
    return out;
}

EquilibriumReport is_strong_nash(const RestrictedGame& r, const Profile& s, bool strict) {
    if (!r.available_profile(s))
        throw std::invalid_argument("is_strong_nash: profile not available");
    EquilibriumReport report;
    report.profile = s;
    report.strict = strict;
    report.is_nash = is_nash(r, s);
    const auto equilibria = all_nash(r);
    report.is_unique_nash =
        report.is_nash && equilibria.size() == 1 && equilibria.front() == s;

    report.is_strong = true;
    for (const Coalition& a : coalitions_in_order(r.players())) {
        const std::vector<int> members = a.members();
        Rational before;
        for (int i : members) before += r.payoff(i, s);

        std::vector<int> assign;
        for (int i : members) assign.push_back(r.lo(i));
        while (true) {
            bool same = true;
            for (std::size_t c = 0; c < members.size(); ++c)
                if (assign[c] != s[members[c] - 1]) { same = false; break; }
            if (!same) {
                Profile t = s;
                for (std::size_t c = 0; c < members.size(); ++c)
                    t[members[c] - 1] = assign[c];
                Rational after;
                for (int i : members) after += r.payoff(i, t);
                const bool violated = strict ? !(after < before) : after > before;
                if (violated) {
                    report.is_strong = false;
                    report.counterexample = DeviationWitness{a, t, before, after};
                    return report;
                }
            }
            int pos = static_cast<int>(members.size()) - 1;
            for (; pos >= 0; --pos) {
                if (assign[pos] < r.hi(members[pos])) {
                    ++assign[pos];
                    for (std::size_t q = pos + 1; q < assign.size(); ++q)
                        assign[q] = r.lo(members[q]);
                    break;
                }
            }
            if (pos < 0) break;
        }
    }
    return report;
}

EquilibriumReport is_strong_nash(const Game& g, const Profile& s, bool strict) {
    return is_strong_nash(RestrictedGame::whole(g), s, strict);
}

std::optional<Profile> dominant_solve(const RestrictedGame& r) {
    Profile out(r.players());
    for (int i = 1; i <= r.players(); ++i) {
        std::optional<int> winner;
        for (int k = r.lo(i); k <= r.hi(i); ++k) {
            bool beats_all = true;
            for (int k2 = r.lo(i); k2 <= r.hi(i) && beats_all; ++k2)
                if (k2 != k && !dominates(r, i, k, k2, true)) beats_all = false;
            if (beats_all) { winner = k; break; }
        }
        if (!winner && r.available(i) == 1) winner = r.lo(i);
        if (!winner) return std::nullopt;
        out[i - 1] = *winner;
    }
    return out;
}

std::optional<Profile> dominant_solve(const Game& g) {
    return dominant_solve(RestrictedGame::whole(g));
}

}  // namespace dilemma
