#include "dilemma/generator.hpp"

#include <algorithm>

#include "dilemma/pd.hpp"

namespace dilemma {

namespace {

Game draw_candidate(const GeneratorConfig& cfg, Rng& rng) {
    const int n = cfg.players;
    std::vector<int> counts = cfg.strategy_counts;
    if (counts.empty()) {
        for (int i = 0; i < n; ++i)
            counts.push_back(rng.uniform(cfg.min_strategies, cfg.max_strategies));
    }
    if (static_cast<int>(counts.size()) != n)
        throw std::invalid_argument("generator: strategy_counts length mismatch");
    if (cfg.tie_max_counts) {
        const int kmax = *std::max_element(counts.begin(), counts.end());
        if (std::count(counts.begin(), counts.end(), kmax) < 2) {
            int other = rng.uniform(0, n - 1);
            while (counts[other] == kmax) other = rng.uniform(0, n - 1);
            counts[other] = kmax;
        }
    }

    std::vector<Rational> alpha(n), beta(n), offset(n);
    for (int i = 0; i < n; ++i) alpha[i] = Rational(rng.uniform(1, 4));
    const Rational max_alpha = *std::max_element(alpha.begin(), alpha.end());
    for (int i = 0; i < n; ++i)
        beta[i] = max_alpha + Rational(rng.uniform(1, 4));
    for (int i = 0; i < n; ++i) offset[i] = Rational(rng.uniform(0, 6));

    Rational noise_bound;
    if (cfg.form == GeneratorConfig::Form::linear_plus_noise) {
        if (cfg.noise_scale > Rational(0)) {
            noise_bound = cfg.noise_scale;
        } else {
            // smallest structural gap, shrunk so even payoff-sum comparisons
            // keep their strict margins
            Rational gap = alpha[0];
            for (int i = 0; i < n; ++i) {
                gap = std::min(gap, alpha[i]);
                gap = std::min(gap, beta[i] - alpha[i]);
                Rational cross;
                for (int j = 0; j < n; ++j)
                    if (j != i) cross += beta[j];
                gap = std::min(gap, cross - alpha[i]);
            }
            noise_bound = gap / Rational(2 * (n + 1));
        }
    }

    std::size_t total = 1;
    for (int k : counts) total *= static_cast<std::size_t>(k);
    std::vector<Rational> payoffs;
    payoffs.reserve(total * n);

    std::vector<std::size_t> strides(n, 1);
    for (int i = n - 2; i >= 0; --i)
        strides[i] = strides[i + 1] * static_cast<std::size_t>(counts[i + 1]);

    for (int i = 0; i < n; ++i) {
        for (std::size_t flat = 0; flat < total; ++flat) {
            Rational u = offset[i];
            std::size_t rem = flat;
            for (int j = 0; j < n; ++j) {
                const int idx = static_cast<int>(rem / strides[j]) + 1;
                rem %= strides[j];
                if (j == i)
                    u += alpha[i] * Rational(idx - 1);
                else
                    u += beta[i] * Rational(counts[j] - idx);
            }
            if (cfg.form == GeneratorConfig::Form::linear_plus_noise)
                u += noise_bound * Rational(rng.uniform(-8, 8), 8);
            payoffs.push_back(u);
        }
    }
    return Game(counts, std::move(payoffs));
}

}  // namespace

Game gen_random_pd(const GeneratorConfig& cfg) {
    Rng rng(cfg.seed);
    for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
        Game g = draw_candidate(cfg, rng);
        if (!is_pd_flat(g).is_pd) continue;
        if (cfg.require_pareto_cooperative &&
            !pareto_optimal_transferable(g, g.cooperative()))
            continue;
        return g;
    }
    throw generation_error("generator: retry budget exhausted (noise scale too large?)");
}

ContributionSchedule gen_symmetric_schedule(std::uint64_t seed, int players,
                                            int min_strategies, int max_strategies) {
    Rng rng(seed);
    const int n = players;
    ContributionSchedule sched;
    std::vector<int> counts;
    for (int i = 0; i < n; ++i) counts.push_back(rng.uniform(min_strategies, max_strategies));
    // share the deepest ladder so nobody out-cooperates everyone at once and
    // triggers the reassignment rule at joint cooperation
    const int kmax = *std::max_element(counts.begin(), counts.end());
    if (std::count(counts.begin(), counts.end(), kmax) < 2) {
        int other = rng.uniform(0, n - 1);
        while (counts[other] == kmax) other = rng.uniform(0, n - 1);
        counts[other] = kmax;
    }
    int depth_total = 0;
    for (int i = 0; i < n; ++i) {
        const int k = counts[i];
        depth_total += k - 1;
        std::vector<Rational> row;
        for (int level = 1; level <= k; ++level) row.emplace_back(k - level);
        sched.contributions.push_back(std::move(row));
    }
    // multiplier strictly inside (n/2, n)
    const int t = rng.uniform(1, 7);
    sched.multiplier = Rational(n, 2) + Rational(n, 2) * Rational(t, 8);
    // threshold high enough that producing the good never pays less than the
    // refund, low enough that joint cooperation funds it
    const int lo = 2 * (kmax - 1);
    const int hi = depth_total;
    sched.threshold = Rational(lo >= 1 ? rng.uniform(std::min(lo, hi), hi) : 1);
    if (!(sched.threshold > Rational(0))) sched.threshold = Rational(1);
    return sched;
}

}  // namespace dilemma
