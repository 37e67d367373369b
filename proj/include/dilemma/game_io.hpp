#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "dilemma/game.hpp"

namespace dilemma {

// Malformed input files map to this (CLI exit code 4).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Game files: {"players": n, "strategies": [k_1..k_n],
//              "payoffs": [n arrays of prod(k_i) entries]},
// each payoff an integer or a canonical "p/q" string.
Game game_from_json(const nlohmann::json& j);
nlohmann::json game_to_json(const Game& g);

Game load_game(const std::string& path);

Rational rational_from_json(const nlohmann::json& j);
nlohmann::json rational_to_json(const Rational& r);

// Stable digest of the canonical serialization (FNV-1a 64).
std::uint64_t game_digest(const Game& g);

}  // namespace dilemma
