#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "dilemma/game.hpp"
#include "dilemma/public_goods.hpp"

namespace dilemma {

struct generation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Deterministic bounded draws on top of the (standardized) mt19937_64 engine;
// std::uniform_int_distribution is avoided because its mapping is
// implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    int uniform(int lo, int hi) {  // inclusive bounds
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next() % span);
    }

private:
    std::mt19937_64 eng_;
};

struct GeneratorConfig {
    int players = 3;
    std::vector<int> strategy_counts;  // explicit; empty = draw from the range below
    int min_strategies = 2;
    int max_strategies = 4;
    // Ensures the largest count is shared by two players, which keeps full
    // defection strictly worse than joint cooperation for everyone.
    bool tie_max_counts = true;
    std::uint64_t seed = 0;
    enum class Form { linear_separable, linear_plus_noise } form = Form::linear_separable;
    // Zero picks a scale that provably preserves every strict chain.
    Rational noise_scale{0};
    bool require_pareto_cooperative = true;
    int max_retries = 64;
};

// Draws u_i(s) = offset_i + alpha_i * (own defection steps)
//              + beta_i * (sum of others' cooperation depths) (+ noise),
// with 0 < alpha_i < min_j beta_j, then validates the dilemma conditions and
// retries until they hold.
Game gen_random_pd(const GeneratorConfig& cfg);

// Symmetric provision-point instance: unit contribution steps, multiplier
// drawn in (n/2, n), threshold placed so funded payoffs never fall below the
// refund.
ContributionSchedule gen_symmetric_schedule(std::uint64_t seed, int players,
                                            int min_strategies, int max_strategies);

}  // namespace dilemma
