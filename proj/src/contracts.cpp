#include "dilemma/contracts.hpp"

#include <algorithm>
#include <stdexcept>

#include "dilemma/pd.hpp"

namespace dilemma {

Rational LosingContract::amount(int player, int k) const {
    if (k == 1) return Rational(0);
    return amounts.at(player - 1).at(k - 2);
}

Rational LosingContract::epsilon(int player, int k) const {
    if (k == 1) return Rational(0);
    return epsilons.at(player - 1).at(k - 2);
}

bool LosingContract::shape_matches(const Game& g) const {
    if (static_cast<int>(amounts.size()) != g.players() ||
        static_cast<int>(epsilons.size()) != g.players())
        return false;
    for (int i = 1; i <= g.players(); ++i) {
        const std::size_t want = static_cast<std::size_t>(g.strategy_count(i)) - 1;
        if (amounts[i - 1].size() != want || epsilons[i - 1].size() != want) return false;
    }
    return true;
}

std::vector<std::vector<Rational>> unit_epsilons(const Game& g) {
    std::vector<std::vector<Rational>> eps(g.players());
    for (int i = 1; i <= g.players(); ++i)
        eps[i - 1].assign(g.strategy_count(i) - 1, Rational(1));
    return eps;
}

std::vector<std::vector<Rational>> ladder_epsilons(const Game& g) {
    std::vector<std::vector<Rational>> eps(g.players());
    for (int i = 1; i <= g.players(); ++i)
        for (int k = 2; k <= g.strategy_count(i); ++k)
            eps[i - 1].emplace_back(k - 1);
    return eps;
}

namespace {

void check_eps_shape(const Game& g, const std::vector<std::vector<Rational>>& eps) {
    if (static_cast<int>(eps.size()) != g.players())
        throw std::invalid_argument("epsilons: one row per player required");
    for (int i = 1; i <= g.players(); ++i)
        if (eps[i - 1].size() != static_cast<std::size_t>(g.strategy_count(i)) - 1)
            throw std::invalid_argument("epsilons: row length must be k_i - 1");
}

// Largest gain of strategy k over strategy m for player i across all
// opponent assignments.
Rational max_gain(const Game& g, int player, int k, int m) {
    std::optional<Rational> best;
    for (const Profile& s : iterate_profiles(g)) {
        if (s[player - 1] != 1) continue;
        Profile a = s, b = s;
        a[player - 1] = k;
        b[player - 1] = m;
        const Rational gain = g.payoff(player, a) - g.payoff(player, b);
        if (!best || gain > *best) best = gain;
    }
    return *best;
}

}  // namespace

LosingContract lemma1_amounts(const Game& g, const std::vector<std::vector<Rational>>& eps) {
    check_eps_shape(g, eps);
    LosingContract c;
    c.epsilons = eps;
    c.amounts.resize(g.players());
    for (int i = 1; i <= g.players(); ++i) {
        for (int k = 2; k <= g.strategy_count(i); ++k) {
            const Rational e = eps[i - 1][k - 2];
            if (!(e > Rational(0)))
                throw std::invalid_argument("epsilons must be positive");
            c.amounts[i - 1].push_back(max_gain(g, i, k, 1) + e);
        }
    }
    return c;
}

LosingContract telescoped_amounts(const Game& g, const std::vector<std::vector<Rational>>& eps) {
    check_eps_shape(g, eps);
    for (int i = 1; i <= g.players(); ++i) {
        Rational prev(0);
        for (const Rational& e : eps[i - 1]) {
            if (!(e > prev))
                throw std::invalid_argument("epsilon ladder must be strictly increasing");
            prev = e;
        }
    }
    LosingContract c;
    c.epsilons = eps;
    c.amounts.resize(g.players());
    for (int i = 1; i <= g.players(); ++i) {
        Rational telescoped(0);
        for (int k = 2; k <= g.strategy_count(i); ++k) {
            telescoped += max_gain(g, i, k, k - 1);
            c.amounts[i - 1].push_back(telescoped + eps[i - 1][k - 2]);
        }
    }
    return c;
}

LosingContract theorem1_amounts(const Game& g, const std::vector<std::vector<Rational>>& eps) {
    if (!is_pd_flat(g).is_pd)
        throw std::invalid_argument("telescoped amounts need a validated dilemma");
    return telescoped_amounts(g, eps);
}

Game apply_losing(const Game& g, const LosingContract& c) {
    if (!c.shape_matches(g))
        throw std::invalid_argument("contract shape does not match game");
    std::vector<Rational> payoffs;
    payoffs.reserve(g.profile_count() * g.players());
    for (int i = 1; i <= g.players(); ++i) {
        for (std::size_t flat = 0; flat < g.profile_count(); ++flat) {
            const Profile s = g.unflatten(flat);
            payoffs.push_back(g.payoff_flat(i, flat) - c.amount(i, s[i - 1]));
        }
    }
    return Game(g.strategy_counts(), std::move(payoffs));
}

bool in_feasible_region(const Game& g, const LosingContract& c) {
    if (!c.shape_matches(g))
        throw std::invalid_argument("contract shape does not match game");
    const Game modified = apply_losing(g, c);
    for (int i = 1; i <= g.players(); ++i) {
        for (int k = 2; k <= g.strategy_count(i); ++k) {
            if (c.amount(i, k).is_zero()) continue;  // untouched payoffs carry no condition
            for (const Profile& s : iterate_profiles(g)) {
                if (s[i - 1] != 1) continue;
                Profile t = s;
                t[i - 1] = k;
                if (!(modified.payoff(i, t) < modified.payoff(i, s))) return false;
            }
        }
    }
    return true;
}

bool optimizes_pair(const Game& original, const Game& modified, const Profile& coop) {
    if (!is_nash(modified, coop)) return false;
    for (int i = 1; i <= original.players(); ++i)
        if (modified.payoff(i, coop) < original.payoff(i, coop)) return false;
    return true;
}

bool optimizes(const Game& g, const LosingContract& c, const Profile& coop) {
    return optimizes_pair(g, apply_losing(g, c), coop);
}

Profile compensate(const Game& g, const Profile& s) {
    if (!g.valid_profile(s))
        throw std::out_of_range("compensate: profile out of range");
    const int n = g.players();
    int deepest = 0, best_depth = -1, second_depth = -1;
    for (int i = 1; i <= n; ++i) {
        const int d = g.strategy_count(i) - s[i - 1];
        if (d > best_depth) {
            second_depth = best_depth;
            best_depth = d;
            deepest = i;
        } else if (d > second_depth) {
            second_depth = d;
        }
    }
    if (best_depth == second_depth) return s;  // tie: rule does not apply
    Profile t = s;
    t[deepest - 1] = g.strategy_count(deepest) - second_depth;
    return t;
}

ReducedEvaluator::ReducedEvaluator(const Game& g, const LosingContract& c)
    : g_(&g), c_(&c) {
    if (!c.shape_matches(g))
        throw std::invalid_argument("contract shape does not match game");
    const Profile star = g.all_defect();
    for (int i = 1; i <= g.players(); ++i) baseline_.push_back(g.payoff(i, star));
}

Rational ReducedEvaluator::closed_form(int player, const Profile& s) const {
    const Rational& u = g_->payoff(player, s);
    const Rational cut = u - c_->amount(player, s[player - 1]);
    const Rational floor = std::min(baseline_[player - 1], u);
    return std::max(cut, floor);
}

Rational ReducedEvaluator::case_split(int player, const Profile& s) const {
    const Rational& u = g_->payoff(player, s);
    const Rational& star = baseline_[player - 1];
    const Rational r = c_->amount(player, s[player - 1]);
    Rational reduced;
    if (star < u - r) reduced = r;                 // full amount fits
    else if (star < u) reduced = u - star;         // clipped to the baseline
    else reduced = Rational(0);                    // already at or below it
    return u - reduced;
}

Rational ReducedEvaluator::utility(int player, const Profile& s) const {
    return closed_form(player, compensate(*g_, s));
}

Rational reduced_payoff(const ReducedEvaluator& ev, int player, const Profile& compensated) {
    return ev.closed_form(player, compensated);
}

Game apply_reduced(const Game& g, const LosingContract& c) {
    const ReducedEvaluator ev(g, c);
    std::vector<Rational> payoffs;
    payoffs.reserve(g.profile_count() * g.players());
    for (int i = 1; i <= g.players(); ++i)
        for (std::size_t flat = 0; flat < g.profile_count(); ++flat)
            payoffs.push_back(ev.utility(i, g.unflatten(flat)));
    return Game(g.strategy_counts(), std::move(payoffs));
}

bool TildeContract::uniform() const {
    for (const auto& row : amounts)
        for (const auto& ctxs : row)
            for (const auto& v : ctxs)
                if (v != ctxs.front()) return false;
    return true;
}

LosingContract TildeContract::collapse() const {
    if (!uniform())
        throw std::invalid_argument("context-dependent amounts do not collapse");
    LosingContract c;
    c.epsilons = epsilons;
    c.amounts.resize(amounts.size());
    for (std::size_t i = 0; i < amounts.size(); ++i)
        for (const auto& ctxs : amounts[i]) c.amounts[i].push_back(ctxs.front());
    return c;
}

TildeContract tilde_amounts(const Game& g, const std::vector<std::vector<Rational>>& eps) {
    check_eps_shape(g, eps);
    if (!is_pd_flat(g).is_pd)
        throw std::invalid_argument("context amounts need a validated dilemma");
    for (int i = 1; i <= g.players(); ++i) {
        Rational prev(0);
        for (const Rational& e : eps[i - 1]) {
            if (!(e > prev))
                throw std::invalid_argument("epsilon ladder must be strictly increasing");
            prev = e;
        }
    }
    TildeContract t;
    t.epsilons = eps;
    t.amounts.resize(g.players());
    for (int i = 1; i <= g.players(); ++i) {
        for (int k = 2; k <= g.strategy_count(i); ++k) {
            std::vector<Rational> ctxs;
            for (const Profile& s : iterate_profiles(g)) {
                if (s[i - 1] != 1) continue;
                Profile a = s;
                a[i - 1] = k;
                ctxs.push_back(g.payoff(i, a) - g.payoff(i, s) + eps[i - 1][k - 2]);
            }
            t.amounts[i - 1].push_back(std::move(ctxs));
        }
    }
    return t;
}

namespace {

RestrictionFailure make_failure(std::size_t index, const RestrictedGame& r,
                                std::string what,
                                std::optional<DeviationWitness> witness) {
    return RestrictionFailure{index, r.fixed(), r.suffix_start(), std::move(what),
                              std::move(witness)};
}

}  // namespace

TheoremReport verify_theorem1(const Game& g, const LosingContract& c, int max_fixed) {
    const Game modified = apply_losing(g, c);
    TheoremReport report;
    const auto restrictions = enumerate_restricted_games(g, max_fixed);
    for (std::size_t idx = 0; idx < restrictions.size(); ++idx) {
        const RestrictedGame& shape = restrictions[idx];
        const RestrictedGame view(modified, shape.fixed(), shape.suffix_start());
        const Profile coop = view.most_cooperative();
        const EquilibriumReport eq = is_strong_nash(view, coop, true);
        ++report.restrictions_checked;
        if (!eq.is_unique_nash) {
            report.pass = false;
            report.first_failure = make_failure(idx, shape,
                                                "joint cooperation is not the unique equilibrium",
                                                std::nullopt);
            return report;
        }
        if (!eq.is_strong) {
            report.pass = false;
            report.first_failure = make_failure(idx, shape,
                                                "joint cooperation is not a strict strong equilibrium",
                                                eq.counterexample);
            return report;
        }
    }
    return report;
}

RestrictionClass classify_restriction(const Game& base, const LosingContract& c,
                                      const RestrictedGame& r) {
    const ReducedEvaluator ev(base, c);
    const Profile coop = r.most_cooperative();
    bool any_unclipped = false;
    bool every_mobile_unclipped = true;
    bool all_baseline = true;
    for (int i = 1; i <= base.players(); ++i) {
        if (r.is_fixed(i)) continue;
        const Rational got = ev.utility(i, coop);
        const Rational full_forfeit = base.payoff(i, coop) - c.amount(i, coop[i - 1]);
        const Rational& floor = ev.baseline(i);
        const bool unclipped = got == full_forfeit && got > floor;
        if (unclipped) any_unclipped = true;
        if (got != floor) all_baseline = false;
        if (!unclipped && r.available(i) >= 2) every_mobile_unclipped = false;
    }
    if (all_baseline) return RestrictionClass::degenerate;
    if (any_unclipped && every_mobile_unclipped) return RestrictionClass::covered;
    return RestrictionClass::mixed;
}

Theorem2Report verify_theorem2(const Game& g, const LosingContract& c, int max_fixed) {
    const Game reduced = apply_reduced(g, c);
    const Profile star = g.all_defect();
    Theorem2Report report;
    const auto restrictions = enumerate_restricted_games(g, max_fixed);
    for (std::size_t idx = 0; idx < restrictions.size(); ++idx) {
        const RestrictedGame& shape = restrictions[idx];
        const RestrictedGame view(reduced, shape.fixed(), shape.suffix_start());
        const Profile coop = view.most_cooperative();
        const RestrictionClass cls = classify_restriction(g, c, shape);
        ++report.restrictions_checked;
        switch (cls) {
            case RestrictionClass::covered: {
                ++report.covered;
                const EquilibriumReport eq = is_strong_nash(view, coop, true);
                if (!eq.is_strong) {
                    report.pass = false;
                    report.first_failure = make_failure(
                        idx, shape, "covered restriction: cooperation not strict strong",
                        eq.counterexample);
                    return report;
                }
                break;
            }
            case RestrictionClass::degenerate: {
                ++report.degenerate;
                for (int i = 1; i <= g.players(); ++i) {
                    if (shape.is_fixed(i)) continue;
                    if (view.payoff(i, coop) != g.payoff(i, star)) {
                        report.pass = false;
                        report.first_failure = make_failure(
                            idx, shape, "degenerate restriction: payoff differs from baseline",
                            std::nullopt);
                        return report;
                    }
                }
                const EquilibriumReport eq = is_strong_nash(view, coop, false);
                if (!eq.is_strong) {
                    report.pass = false;
                    report.first_failure = make_failure(
                        idx, shape, "degenerate restriction: cooperation not strong",
                        eq.counterexample);
                    return report;
                }
                break;
            }
            case RestrictionClass::mixed: {
                ++report.mixed;
                const EquilibriumReport eq = is_strong_nash(view, coop, false);
                if (!eq.is_strong) {
                    report.pass = false;
                    report.first_failure = make_failure(
                        idx, shape, "mixed restriction: cooperation not strong",
                        eq.counterexample);
                    return report;
                }
                break;
            }
        }
    }
    return report;
}

namespace {

// Payoff vectors of all pure equilibria; nullopt when they disagree or none
// exist.
std::optional<std::vector<Rational>> unique_equilibrium_payoffs(const Game& g) {
    const auto equilibria = all_nash(g);
    if (equilibria.empty()) return std::nullopt;
    std::vector<Rational> out;
    for (int i = 1; i <= g.players(); ++i) out.push_back(g.payoff(i, equilibria.front()));
    for (std::size_t e = 1; e < equilibria.size(); ++e)
        for (int i = 1; i <= g.players(); ++i)
            if (g.payoff(i, equilibria[e]) != out[i - 1]) return std::nullopt;
    return out;
}

}  // namespace

Verdict is_resolution(const Game& g, const LosingContract& c) {
    const Game modified = apply_losing(g, c);
    const int n = g.players();
    const auto original_nash = all_nash(g);
    if (original_nash.empty()) return Verdict::indeterminate;

    std::vector<Profile> target_eqs;
    if (n == 2) {
        target_eqs = all_nash(modified);
    } else {
        for (const Profile& s : iterate_profiles(modified))
            if (is_strong_nash(modified, s, true).is_strong) target_eqs.push_back(s);
    }
    if (target_eqs.empty()) return Verdict::indeterminate;

    // Every derived equilibrium must weakly beat every original one for every
    // player, with at least one strict gain per player.
    for (int i = 1; i <= n; ++i) {
        bool strict_seen = false;
        for (const Profile& s : original_nash) {
            for (const Profile& t : target_eqs) {
                const Rational& before = g.payoff(i, s);
                const Rational& after = modified.payoff(i, t);
                if (before > after) return Verdict::no;
                if (before < after) strict_seen = true;
            }
        }
        if (!strict_seen) return Verdict::no;
    }

    if (n >= 3) {
        // Worst-case coalition earnings in the original game, with everyone
        // else fully defecting, must not beat the worst derived equilibrium.
        std::vector<Rational> worst(n);
        for (int i = 1; i <= n; ++i) {
            std::optional<Rational> w;
            for (const Profile& t : target_eqs) {
                const Rational& v = modified.payoff(i, t);
                if (!w || v < *w) w = v;
            }
            worst[i - 1] = *w;
        }
        for (const Coalition& a : coalitions_in_order(n)) {
            const auto members = a.members();
            Rational bound;
            for (int i : members) bound += worst[i - 1];
            std::vector<int> assign(members.size(), 1);
            while (true) {
                Profile s = g.all_defect();
                for (std::size_t m = 0; m < members.size(); ++m)
                    s[members[m] - 1] = assign[m];
                Rational total;
                for (int i : members) total += g.payoff(i, s);
                if (total > bound) return Verdict::no;
                int pos = static_cast<int>(members.size()) - 1;
                for (; pos >= 0; --pos) {
                    if (assign[pos] < g.strategy_count(members[pos])) {
                        ++assign[pos];
                        for (std::size_t q = pos + 1; q < assign.size(); ++q) assign[q] = 1;
                        break;
                    }
                }
                if (pos < 0) break;
            }
        }
    }
    return Verdict::yes;
}

SigningReport signing_game(const Game& g, const LosingContract& c, bool reduced,
                           const std::optional<Profile>& disagreement) {
    SigningReport report;
    std::optional<std::vector<Rational>> original;
    if (disagreement) {
        if (!is_nash(g, *disagreement)) {
            report.reason = "disagreement profile is not an equilibrium of the original game";
            return report;
        }
        std::vector<Rational> v;
        for (int i = 1; i <= g.players(); ++i) v.push_back(g.payoff(i, *disagreement));
        original = std::move(v);
    } else {
        original = unique_equilibrium_payoffs(g);
    }
    if (!original) {
        report.reason = "original game has no single equilibrium outcome";
        return report;
    }
    std::vector<Rational> modified_payoffs;
    if (reduced) {
        const Game mod = apply_reduced(g, c);
        const Profile coop = g.cooperative();
        if (!is_strong_nash(mod, coop, false).is_strong) {
            report.reason = "cooperation is not strong in the reduced game";
            return report;
        }
        for (int i = 1; i <= g.players(); ++i) modified_payoffs.push_back(mod.payoff(i, coop));
    } else {
        const Game mod = apply_losing(g, c);
        const auto outcome = unique_equilibrium_payoffs(mod);
        if (!outcome) {
            report.reason = "modified game has no single equilibrium outcome";
            return report;
        }
        modified_payoffs = *outcome;
    }

    const int n = g.players();
    // Meta-game over sign (1) / refuse (2): only unanimous signing (the
    // all-ones profile, flat index 0) executes the contract.
    const Game meta = [&] {
        std::vector<Rational> cells;
        const std::size_t total = 1u << n;
        for (int i = 1; i <= n; ++i)
            for (std::size_t flat = 0; flat < total; ++flat)
                cells.push_back(flat == 0 ? modified_payoffs[i - 1] : (*original)[i - 1]);
        return Game(std::vector<int>(n, 2), std::move(cells));
    }();

    report.determinate = true;
    report.original_payoffs = *original;
    report.modified_payoffs = modified_payoffs;
    report.sign_dominant.resize(n);
    report.all_dominant = true;
    const Profile all_sign(n, 1);
    for (int i = 1; i <= n; ++i) {
        Profile refuse = all_sign;
        refuse[i - 1] = 2;
        const bool weak = dominates(meta, i, 1, 2, false);
        const bool strict_gain = meta.payoff(i, all_sign) > meta.payoff(i, refuse);
        report.sign_dominant[i - 1] = weak && strict_gain;
        if (!report.sign_dominant[i - 1]) report.all_dominant = false;
    }
    return report;
}

}  // namespace dilemma
