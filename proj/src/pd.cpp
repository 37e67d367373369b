#include "dilemma/pd.hpp"

#include <map>

namespace dilemma {

namespace {

struct ChainLink {
    int lhs, rhs;  // indices into the block, lhs < rhs required
    const char* label;
};

constexpr ChainLink kChain1[] = {
    {1, 3, "u1(1,2)<u1(2,2)"},
    {3, 0, "u1(2,2)<u1(1,1)"},
    {0, 2, "u1(1,1)<u1(2,1)"},
};
constexpr ChainLink kChain2[] = {
    {2, 3, "u2(2,1)<u2(2,2)"},
    {3, 0, "u2(2,2)<u2(1,1)"},
    {0, 1, "u2(1,1)<u2(1,2)"},
};

}  // namespace

std::optional<std::string> classical_pd_2x2_violation(const Block& u1, const Block& u2) {
    for (const auto& link : kChain1)
        if (!(u1[link.lhs] < u1[link.rhs])) return std::string(link.label);
    for (const auto& link : kChain2)
        if (!(u2[link.lhs] < u2[link.rhs])) return std::string(link.label);
    return std::nullopt;
}

bool classical_pd_2x2(const Block& u1, const Block& u2) {
    return !classical_pd_2x2_violation(u1, u2).has_value();
}

namespace {

// Enumerates assignments for all players except i and j over their available
// ranges, calling fn(profile) with placeholders 0 at i and j.
template <typename Fn>
bool for_each_context(const RestrictedGame& r, int i, int j, Fn&& fn) {
    const int n = r.players();
    Profile ctx(n, 0);
    std::vector<int> others;
    for (int p = 1; p <= n; ++p)
        if (p != i && p != j) others.push_back(p);
    for (int p : others) ctx[p - 1] = r.lo(p);
    while (true) {
        if (!fn(ctx)) return false;
        int pos = static_cast<int>(others.size()) - 1;
        for (; pos >= 0; --pos) {
            const int p = others[pos];
            if (ctx[p - 1] < r.hi(p)) {
                ++ctx[p - 1];
                for (std::size_t q = pos + 1; q < others.size(); ++q)
                    ctx[others[q] - 1] = r.lo(others[q]);
                break;
            }
            ctx[p - 1] = r.lo(p);
        }
        if (pos < 0) return true;
    }
}

PdVerdict pd_flat_impl(const RestrictedGame& r) {
    const int n = r.players();
    PdVerdict verdict{true, std::nullopt};
    for (int i = 1; i <= n && verdict.is_pd; ++i) {
        if (r.available(i) < 2) continue;
        for (int j = i + 1; j <= n && verdict.is_pd; ++j) {
            if (r.available(j) < 2) continue;
            for_each_context(r, i, j, [&](const Profile& ctx) {
                for (int bi = r.lo(i); bi + 1 <= r.hi(i); ++bi) {
                    for (int bj = r.lo(j); bj + 1 <= r.hi(j); ++bj) {
                        Block u1, u2;
                        Profile s = ctx;
                        int cell = 0;
                        for (int a = 0; a < 2; ++a) {
                            for (int b = 0; b < 2; ++b, ++cell) {
                                s[i - 1] = bi + a;
                                s[j - 1] = bj + b;
                                u1[cell] = r.payoff(i, s);
                                u2[cell] = r.payoff(j, s);
                            }
                        }
                        if (auto label = classical_pd_2x2_violation(u1, u2)) {
                            Profile corner = ctx;
                            corner[i - 1] = bi;
                            corner[j - 1] = bj;
                            verdict.is_pd = false;
                            verdict.first_violation =
                                PdWitness{i, j, corner, bi, bj, *label};
                            return false;
                        }
                    }
                }
                return true;
            });
        }
    }
    return verdict;
}

}  // namespace

PdVerdict is_pd_flat(const RestrictedGame& r) { return pd_flat_impl(r); }

PdVerdict is_pd_flat(const Game& g) { return pd_flat_impl(RestrictedGame::whole(g)); }

namespace {

// key: per player the pinned strategy, 0 when free
bool pd_recursive_impl(const Game& g, std::vector<int> pinned,
                       std::map<std::vector<int>, bool>& memo) {
    const auto it = memo.find(pinned);
    if (it != memo.end()) return it->second;

    const int n = g.players();
    std::vector<int> free_players;
    for (int i = 1; i <= n; ++i)
        if (pinned[i - 1] == 0) free_players.push_back(i);
    const int m = static_cast<int>(free_players.size());

    bool ok = true;
    if (m == 2) {
        std::vector<std::pair<int, int>> fixed;
        for (int i = 1; i <= n; ++i)
            if (pinned[i - 1] != 0) fixed.emplace_back(i, pinned[i - 1]);
        ok = is_pd_flat(restrict_game(g, fixed, std::vector<int>(n, 1))).is_pd;
    } else {
        // every nonempty subset of free players that leaves at least two
        for (std::uint32_t sub = 1; sub < (1u << m) && ok; ++sub) {
            const int size = __builtin_popcount(sub);
            if (size > m - 2) continue;
            std::vector<int> chosen;
            for (int b = 0; b < m; ++b)
                if (sub >> b & 1u) chosen.push_back(free_players[b]);
            std::vector<int> assign(chosen.size(), 1);
            while (ok) {
                std::vector<int> next = pinned;
                for (std::size_t c = 0; c < chosen.size(); ++c)
                    next[chosen[c] - 1] = assign[c];
                ok = pd_recursive_impl(g, next, memo);
                int pos = static_cast<int>(chosen.size()) - 1;
                for (; pos >= 0; --pos) {
                    if (assign[pos] < g.strategy_count(chosen[pos])) {
                        ++assign[pos];
                        for (std::size_t q = pos + 1; q < assign.size(); ++q) assign[q] = 1;
                        break;
                    }
                }
                if (pos < 0) break;
            }
        }
    }
    memo[pinned] = ok;
    return ok;
}

}  // namespace

PdVerdict is_pd_recursive(const Game& g) {
    std::map<std::vector<int>, bool> memo;
    const bool ok = pd_recursive_impl(g, std::vector<int>(g.players(), 0), memo);
    if (ok) return {true, std::nullopt};
    // The flat scan supplies the canonical witness for the same answer.
    PdVerdict v = is_pd_flat(g);
    v.is_pd = false;
    return v;
}

bool check_remark2(const Game& g) {
    if (g.players() != 2 || g.strategy_count(1) != 2 || g.strategy_count(2) != 2)
        throw std::invalid_argument("remark2 check needs a 2x2 game");
    const auto cell = [&](int a, int b) {
        const Profile s{a, b};
        return g.payoff(1, s) + g.payoff(2, s);
    };
    const Rational coop = cell(1, 1);
    return cell(2, 2) <= coop && cell(1, 2) <= coop && cell(2, 1) <= coop;
}

LemmaStatus check_lemma3(const Game& g) {
    if (!is_pd_flat(g).is_pd) return LemmaStatus::inapplicable;
    for (const Profile& s : iterate_profiles(g)) {
        // every componentwise weakly-more-cooperative variant
        Profile t(g.players(), 1);
        while (true) {
            bool differs = false;
            for (int i = 0; i < g.players(); ++i)
                if (t[i] != s[i]) { differs = true; break; }
            if (differs) {
                bool outsider_fails = false;
                for (int j = 1; j <= g.players() && !outsider_fails; ++j)
                    if (t[j - 1] == s[j - 1] && !(g.payoff(j, t) > g.payoff(j, s)))
                        outsider_fails = true;
                if (outsider_fails) return LemmaStatus::fails;
            }
            int pos = g.players() - 1;
            for (; pos >= 0; --pos) {
                if (t[pos] < s[pos]) {
                    ++t[pos];
                    for (int q = pos + 1; q < g.players(); ++q) t[q] = 1;
                    break;
                }
                t[pos] = 1;
            }
            if (pos < 0) break;
        }
    }
    return LemmaStatus::holds;
}

LemmaStatus check_lemma4(const Game& g) {
    if (!is_pd_flat(g).is_pd) return LemmaStatus::inapplicable;
    int max_count = 0, holders = 0;
    for (int i = 1; i <= g.players(); ++i) {
        const int k = g.strategy_count(i);
        if (k > max_count) { max_count = k; holders = 1; }
        else if (k == max_count) ++holders;
    }
    if (holders < 2) return LemmaStatus::inapplicable;
    const Profile star = g.all_defect();
    const Profile coop = g.cooperative();
    for (int i = 1; i <= g.players(); ++i)
        if (!(g.payoff(i, star) < g.payoff(i, coop))) return LemmaStatus::fails;
    return LemmaStatus::holds;
}

LemmaStatus check_lemma5(const Game& g) {
    if (!is_pd_flat(g).is_pd) return LemmaStatus::inapplicable;
    if (!pareto_optimal_transferable(g, g.cooperative())) return LemmaStatus::inapplicable;
    const int n = g.players();
    const Profile coop = g.cooperative();
    for (std::uint32_t mask = 1; mask < (1u << n) - 1; ++mask) {
        // players in `mask` sit at their least cooperative strategy; the rest
        // roam and their payoff total must not beat joint cooperation
        Rational coop_sum;
        std::vector<int> rest;
        for (int i = 1; i <= n; ++i) {
            if (mask >> (i - 1) & 1u) continue;
            rest.push_back(i);
            coop_sum += g.payoff(i, coop);
        }
        std::vector<int> assign(rest.size(), 1);
        while (true) {
            Profile s = g.all_defect();
            for (std::size_t c = 0; c < rest.size(); ++c) s[rest[c] - 1] = assign[c];
            Rational total;
            for (int i : rest) total += g.payoff(i, s);
            if (total > coop_sum) return LemmaStatus::fails;
            int pos = static_cast<int>(rest.size()) - 1;
            for (; pos >= 0; --pos) {
                if (assign[pos] < g.strategy_count(rest[pos])) {
                    ++assign[pos];
                    for (std::size_t q = pos + 1; q < assign.size(); ++q) assign[q] = 1;
                    break;
                }
            }
            if (pos < 0) break;
        }
    }
    return LemmaStatus::holds;
}

LemmaStatus check_lemma7(const Game& g) {
    if (!is_pd_flat(g).is_pd) return LemmaStatus::inapplicable;
    const Profile star = g.all_defect();
    for (int i = 1; i <= g.players(); ++i) {
        const Rational& floor = g.payoff(i, star);
        for (int k = 1; k < g.strategy_count(i); ++k) {
            const int depth = g.strategy_count(i) - k;
            for (const Profile& s : iterate_profiles(g)) {
                if (s[i - 1] != k) continue;
                bool matched = false;
                for (int j = 1; j <= g.players() && !matched; ++j)
                    if (j != i && g.strategy_count(j) - s[j - 1] >= depth) matched = true;
                if (matched && !(floor < g.payoff(i, s))) return LemmaStatus::fails;
            }
        }
    }
    return LemmaStatus::holds;
}

}  // namespace dilemma
