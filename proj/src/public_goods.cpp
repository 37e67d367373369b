#include "dilemma/public_goods.hpp"

#include <fstream>
#include <stdexcept>

#include "dilemma/game_io.hpp"
#include "dilemma/pd.hpp"

namespace dilemma {

void ContributionSchedule::validate() const {
    if (players() < 2)
        throw std::invalid_argument("schedule: need at least two players");
    if (!(threshold > Rational(0)))
        throw std::invalid_argument("schedule: threshold must be positive");
    for (int i = 1; i <= players(); ++i) {
        const auto& row = contributions[i - 1];
        if (row.size() < 2)
            throw std::invalid_argument("schedule: every player needs at least two levels");
        if (!row.back().is_zero())
            throw std::invalid_argument("schedule: least cooperative level must contribute 0");
        for (std::size_t k = 1; k < row.size(); ++k)
            if (!(row[k] < row[k - 1]))
                throw std::invalid_argument("schedule: contributions must strictly decrease");
    }
}

namespace {

Game materialize(const ContributionSchedule& sched, bool thresholded) {
    const int n = sched.players();
    std::vector<int> counts;
    for (int i = 1; i <= n; ++i) counts.push_back(sched.strategy_count(i));

    const Rational share = sched.multiplier / Rational(n);
    std::vector<std::vector<Rational>> rows(n);
    Profile s(n, 1);
    while (true) {
        Rational pot;
        for (int j = 1; j <= n; ++j) pot += sched.contributions[j - 1][s[j - 1] - 1];
        const bool produced = !thresholded || pot >= sched.threshold;
        for (int i = 1; i <= n; ++i) {
            const Rational& own = sched.contributions[i - 1][s[i - 1] - 1];
            const Rational& full = sched.contributions[i - 1].front();
            rows[i - 1].push_back(produced ? full - own + share * pot : full);
        }
        int pos = n - 1;
        for (; pos >= 0; --pos) {
            if (s[pos] < counts[pos]) {
                ++s[pos];
                for (int q = pos + 1; q < n; ++q) s[q] = 1;
                break;
            }
        }
        if (pos < 0) break;
    }
    std::vector<Rational> payoffs;
    for (auto& row : rows)
        for (auto& v : row) payoffs.push_back(v);
    return Game(counts, std::move(payoffs));
}

}  // namespace

PublicGoodsGame build_pgg(const ContributionSchedule& sched) {
    sched.validate();
    return PublicGoodsGame{sched, materialize(sched, true)};
}

Game build_pgg_funded(const ContributionSchedule& sched) {
    sched.validate();
    return materialize(sched, false);
}

OrderCReport validate_order_c(const PublicGoodsGame& p, int max_fixed) {
    const Game& g = p.game;
    const ContributionSchedule& sched = p.schedule;
    OrderCReport report;

    Rational max_pot;
    for (int i = 1; i <= g.players(); ++i) max_pot += sched.contributions[i - 1].front();
    if (max_pot < sched.threshold) report.meaningless = true;

    const auto contribution = [&](int player, int k) -> const Rational& {
        return sched.contributions[player - 1][k - 1];
    };

    const auto restrictions = enumerate_restricted_games(g, max_fixed);
    for (std::size_t idx = 0; idx < restrictions.size(); ++idx) {
        const RestrictedGame& r = restrictions[idx];
        const int n = r.players();
        for (int i = 1; i <= n && report.pass; ++i) {
            if (r.available(i) < 2) continue;
            for (int j = i + 1; j <= n && report.pass; ++j) {
                if (r.available(j) < 2) continue;
                // context players run over their available sets
                std::vector<int> others;
                for (int q = 1; q <= n; ++q)
                    if (q != i && q != j) others.push_back(q);
                Profile ctx(n, 0);
                for (int q : others) ctx[q - 1] = r.lo(q);
                bool more = true;
                while (more && report.pass) {
                    Rational ctx_pot;
                    for (int q : others) ctx_pot += contribution(q, ctx[q - 1]);
                    for (int bi = r.lo(i); bi + 1 <= r.hi(i) && report.pass; ++bi) {
                        for (int bj = r.lo(j); bj + 1 <= r.hi(j) && report.pass; ++bj) {
                            const Rational floor_pot =
                                ctx_pot + contribution(i, bi + 1) + contribution(j, bj + 1);
                            if (floor_pot < sched.threshold) continue;
                            ++report.blocks_checked;
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
                                report.pass = false;
                                report.first_failure =
                                    OrderCFailure{idx,    r.fixed(), r.suffix_start(),
                                                  i,      j,         corner,
                                                  *label};
                            }
                        }
                    }
                    // advance context
                    int pos = static_cast<int>(others.size()) - 1;
                    for (; pos >= 0; --pos) {
                        const int q = others[pos];
                        if (ctx[q - 1] < r.hi(q)) {
                            ++ctx[q - 1];
                            for (std::size_t w = pos + 1; w < others.size(); ++w)
                                ctx[others[w] - 1] = r.lo(others[w]);
                            break;
                        }
                        ctx[q - 1] = r.lo(q);
                    }
                    more = pos >= 0;
                }
            }
        }
        if (!report.pass) break;
    }
    return report;
}

Theorem3Report verify_theorem3(const PublicGoodsGame& p, const LosingContract& c,
                               int max_fixed) {
    Theorem3Report report;
    report.core = verify_theorem2(p.game, c, max_fixed);
    report.signing = signing_game(p.game, c, /*reduced=*/true, p.game.all_defect());
    report.pass = report.core.pass && report.signing.determinate && report.signing.all_dominant;
    return report;
}

ContributionSchedule schedule_from_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("contributions") || !j.contains("threshold") ||
        !j.contains("multiplier"))
        throw input_error("schedule file must contain contributions, threshold and multiplier");
    ContributionSchedule sched;
    if (!j["contributions"].is_array())
        throw input_error("contributions must be an array of arrays");
    for (const auto& row : j["contributions"]) {
        if (!row.is_array()) throw input_error("contributions must be an array of arrays");
        std::vector<Rational> r;
        for (const auto& e : row) r.push_back(rational_from_json(e));
        sched.contributions.push_back(std::move(r));
    }
    sched.threshold = rational_from_json(j["threshold"]);
    sched.multiplier = rational_from_json(j["multiplier"]);
    try {
        sched.validate();
    } catch (const std::invalid_argument& e) {
        throw input_error(e.what());
    }
    return sched;
}

}  // namespace dilemma
