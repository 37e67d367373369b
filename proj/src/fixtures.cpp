#include "dilemma/fixtures.hpp"

namespace dilemma::fixtures {

Game make_game(std::vector<int> counts, std::vector<std::vector<long long>> rows) {
    std::vector<Rational> payoffs;
    for (const auto& row : rows)
        for (long long v : row) payoffs.emplace_back(v);
    return Game(std::move(counts), std::move(payoffs));
}

Game table1() {
    return make_game({2, 2}, {{10, 1, 11, 6},
                              {10, 11, 1, 6}});
}

Game table2() {
    return make_game({2, 2}, {{10, 1, 5, 0},
                              {10, 5, 1, 0}});
}

Game tables_5_6() {
    return make_game({2, 2, 2}, {{8, 10, 10, 1, 3, 11, 11, 2},
                                 {8, 10, 3, 11, 10, 1, 11, 2},
                                 {8, 3, 10, 11, 10, 11, 1, 2}});
}

Game tables_7_8() {
    return make_game({2, 2, 2}, {{8, 10, 10, 1, 1, 9, 9, 0},
                                 {8, 10, 1, 9, 10, 1, 9, 0},
                                 {8, 1, 10, 9, 10, 9, 1, 0}});
}

Game table9() {
    return make_game({2, 2}, {{7, 2, 9, 3},
                              {5, 9, 1, 2}});
}

Game table11() {
    return make_game({2, 2}, {{5, 5, 4, 3},
                              {7, 6, 6, 2}});
}

Game tables_12_13() {
    return make_game({2, 2, 2}, {{7, 5, 4, 2, 8, 6, 5, 3},
                                 {7, 5, 8, 6, 5, 3, 6, 4},
                                 {7, 8, 4, 5, 3, 4, 1, 2}});
}

Game tables_16_17() {
    return make_game({2, 2, 2}, {{7, 7, 4, 2, 6, 6, 5, 3},
                                 {7, 5, 6, 6, 7, 3, 6, 4},
                                 {7, 6, 6, 5, 3, 4, 1, 2}});
}

Game tables_18_19() {
    return make_game({2, 2, 2}, {{7, 5, 4, 2, 16, 6, 5, 3},
                                 {7, 5, 8, 6, 5, 3, 6, 4},
                                 {11, 12, 4, 5, 3, 4, 1, 2}});
}

std::vector<Entry> corpus() {
    static const Game g1 = table1();
    static const Game g56 = tables_5_6();
    static const Game g9 = table9();
    static const Game g1213 = tables_12_13();
    static const Game g1819 = tables_18_19();
    return {{"table-1", g1},
            {"tables-5-6", g56},
            {"table-9", g9},
            {"tables-12-13", g1213},
            {"tables-18-19", g1819}};
}

}  // namespace dilemma::fixtures
