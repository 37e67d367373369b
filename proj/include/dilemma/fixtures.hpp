#pragma once

#include <string>
#include <vector>

#include "dilemma/game.hpp"

namespace dilemma::fixtures {

// Reference games from the worked examples, keyed by their table ids for the
// reproduction CLI.  Payoff rows are in flat profile order (player 1 most
// significant, cooperative index first).
Game make_game(std::vector<int> counts, std::vector<std::vector<long long>> rows);

// Two-player dilemma with the six-unit contract counterpart.
Game table1();
Game table2();

// Three-player game without dominant strategies; its modified counterpart
// keeps a unique equilibrium that coalitions can still break.
Game tables_5_6();
Game tables_7_8();

// Two-player game used against reward contracts, plus its p2=3, p1=5 result.
Game table9();
Game table11();

// Three-player dilemma vulnerable to conditional punish contracts, plus its
// r=(2,2,2) result.
Game tables_12_13();
Game tables_16_17();

// Variant with an oversized betrayal payoff for the directed / equal-split
// punish counterexamples.
Game tables_18_19();

struct Entry {
    std::string key;
    const Game& game;
};

// Base fixtures in table order.
std::vector<Entry> corpus();

}  // namespace dilemma::fixtures
