#include "dilemma/game_io.hpp"

#include <fstream>

namespace dilemma {

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_unsigned() &&
        j.get<unsigned long long>() > static_cast<unsigned long long>(INT64_MAX))
        throw input_error("integer payoff exceeds the supported range: " + j.dump());
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw input_error(e.what());
        }
    }
    throw input_error("payoff entries must be integers or \"p/q\" strings, got " + j.dump());
}

nlohmann::json rational_to_json(const Rational& r) {
    constexpr long long safe = 1ll << 53;
    if (r.is_integer() && r.num() > -safe && r.num() < safe)
        return r.num();
    return r.str();
}

Game game_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("players") || !j.contains("strategies") ||
        !j.contains("payoffs"))
        throw input_error("game file must contain players, strategies and payoffs");
    if (!j["players"].is_number_integer())
        throw input_error("players must be an integer");
    const int n = j["players"].get<int>();
    if (n < 2) throw input_error("players must be at least 2");
    if (n > 16) throw input_error("at most 16 players are supported");

    if (!j["strategies"].is_array() || static_cast<int>(j["strategies"].size()) != n)
        throw input_error("strategies must list one count per player");
    std::vector<int> counts;
    std::size_t total = 1;
    for (const auto& e : j["strategies"]) {
        if (!e.is_number_integer() || e.get<int>() < 2)
            throw input_error("strategy counts must be integers >= 2");
        counts.push_back(e.get<int>());
        total *= static_cast<std::size_t>(counts.back());
    }

    if (!j["payoffs"].is_array() || static_cast<int>(j["payoffs"].size()) != n)
        throw input_error("payoffs must hold one array per player");
    std::vector<Rational> payoffs;
    payoffs.reserve(total * n);
    for (const auto& row : j["payoffs"]) {
        if (!row.is_array() || row.size() != total)
            throw input_error("each payoff array must have " + std::to_string(total) +
                              " entries");
        for (const auto& e : row) payoffs.push_back(rational_from_json(e));
    }
    return Game(std::move(counts), std::move(payoffs));
}

nlohmann::json game_to_json(const Game& g) {
    nlohmann::json j;
    j["players"] = g.players();
    j["strategies"] = g.strategy_counts();
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 1; i <= g.players(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t flat = 0; flat < g.profile_count(); ++flat)
            row.push_back(rational_to_json(g.payoff_flat(i, flat)));
        rows.push_back(std::move(row));
    }
    j["payoffs"] = std::move(rows);
    return j;
}

Game load_game(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return game_from_json(j);
}

std::uint64_t game_digest(const Game& g) {
    const std::string s = game_to_json(g).dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace dilemma
