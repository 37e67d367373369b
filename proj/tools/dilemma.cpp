// Command-line front end: validation, equilibrium checks, contract
// construction and application, theorem verification, instance generation,
// property suites and fixture reproduction.
//
// Exit codes: 0 success, 2 usage error, 3 property/verification failure,
// 4 input format error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dilemma/contracts.hpp"
#include "dilemma/equilibrium.hpp"
#include "dilemma/game_io.hpp"
#include "dilemma/generator.hpp"
#include "dilemma/pd.hpp"
#include "dilemma/public_goods.hpp"
#include "dilemma/suites.hpp"

namespace {

using nlohmann::json;
using namespace dilemma;

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kFailed = 3;
constexpr int kBadInput = 4;

json profile_to_json(const Profile& s) { return json(s); }

json witness_to_json(const DeviationWitness& w) {
    json j;
    j["coalition"] = w.coalition.members();
    j["deviation"] = profile_to_json(w.deviation);
    j["sum-before"] = rational_to_json(w.sum_before);
    j["sum-after"] = rational_to_json(w.sum_after);
    return j;
}

json equilibrium_report_to_json(const EquilibriumReport& r) {
    json j;
    j["profile"] = profile_to_json(r.profile);
    j["is-nash"] = r.is_nash;
    j["is-unique-nash"] = r.is_unique_nash;
    j["is-strong"] = r.is_strong;
    j["strict"] = r.strict;
    j["counterexample"] = r.counterexample ? witness_to_json(*r.counterexample) : json();
    return j;
}

json pd_witness_to_json(const PdWitness& w) {
    json j;
    j["players"] = {w.player_i, w.player_j};
    j["context"] = profile_to_json(w.context);
    j["block"] = {w.block_i, w.block_j};
    j["inequality"] = w.inequality;
    return j;
}

json restriction_failure_to_json(const RestrictionFailure& f) {
    json j;
    j["restriction"] = f.index;
    j["fixed"] = f.fixed;
    j["suffix-start"] = f.suffix_start;
    j["what"] = f.what;
    if (f.witness) j["witness"] = witness_to_json(*f.witness);
    return j;
}

const char* lemma_status_name(LemmaStatus s) {
    switch (s) {
        case LemmaStatus::holds: return "holds";
        case LemmaStatus::fails: return "fails";
        case LemmaStatus::inapplicable: return "inapplicable";
    }
    return "?";
}

std::vector<std::vector<Rational>> eps_from_json(const json& j) {
    std::vector<std::vector<Rational>> eps;
    if (!j.is_array()) throw input_error("epsilons must be an array of arrays");
    for (const auto& row : j) {
        if (!row.is_array()) throw input_error("epsilons must be an array of arrays");
        std::vector<Rational> r;
        for (const auto& e : row) r.push_back(rational_from_json(e));
        eps.push_back(std::move(r));
    }
    return eps;
}

json eps_to_json(const std::vector<std::vector<Rational>>& eps) {
    json out = json::array();
    for (const auto& row : eps) {
        json r = json::array();
        for (const auto& e : row) r.push_back(rational_to_json(e));
        out.push_back(std::move(r));
    }
    return out;
}

struct ContractFile {
    std::string scheme;
    LosingContract contract;
};

ContractFile contract_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw input_error(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("scheme") || !j.contains("amounts") ||
        !j.contains("epsilons"))
        throw input_error("contract file must contain scheme, epsilons and amounts");
    ContractFile f;
    f.scheme = j["scheme"].get<std::string>();
    if (f.scheme != "lemma1" && f.scheme != "theorem1" && f.scheme != "theorem2-reduced" &&
        f.scheme != "tilde")
        throw input_error("unknown contract scheme '" + f.scheme + "'");
    f.contract.amounts = eps_from_json(j["amounts"]);
    f.contract.epsilons = eps_from_json(j["epsilons"]);
    if (f.contract.amounts.size() != f.contract.epsilons.size())
        throw input_error("amounts and epsilons must cover the same players");
    return f;
}

json contract_to_json(const LosingContract& c, const std::string& scheme) {
    json j;
    j["scheme"] = scheme;
    j["epsilons"] = eps_to_json(c.epsilons);
    j["amounts"] = eps_to_json(c.amounts);
    return j;
}

Profile parse_profile(const std::string& text) {
    Profile out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            out.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--profile", "expected comma-separated indices");
        }
    }
    if (out.empty()) throw CLI::ValidationError("--profile", "expected comma-separated indices");
    return out;
}

std::vector<std::vector<Rational>> resolve_eps(const Game& g, const std::string& spec,
                                               const std::string& scheme) {
    if (spec == "default")
        return scheme == "lemma1" ? unit_epsilons(g) : ladder_epsilons(g);
    std::ifstream in(spec);
    if (!in) throw input_error("cannot open " + spec);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw input_error(std::string("invalid JSON in ") + spec + ": " + e.what());
    }
    return eps_from_json(j);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- subcommands ----------------------------------------------------------

int cmd_validate_pd(const std::string& path, bool recursive_oracle, bool lemmas,
                    const std::string& output) {
    const Game g = load_game(path);
    const PdVerdict v = is_pd_flat(g);
    json j;
    j["is-pd"] = v.is_pd;
    if (v.first_violation) j["witness"] = pd_witness_to_json(*v.first_violation);
    if (recursive_oracle) {
        const PdVerdict r = is_pd_recursive(g);
        j["recursive-agrees"] = r.is_pd == v.is_pd;
        if (r.is_pd != v.is_pd) {
            emit(j);
            std::cerr << "internal disagreement between the two validators\n";
            return kFailed;
        }
    }
    if (lemmas && v.is_pd) {
        j["lemma3"] = lemma_status_name(check_lemma3(g));
        j["lemma4"] = lemma_status_name(check_lemma4(g));
        j["lemma5"] = lemma_status_name(check_lemma5(g));
        j["lemma7"] = lemma_status_name(check_lemma7(g));
    }
    if (output == "json" || !v.is_pd || lemmas || recursive_oracle)
        emit(j);
    else
        std::cout << "prisoner's dilemma\n";
    return v.is_pd ? kOk : kFailed;
}

int cmd_check_eq(const std::string& path, const std::string& profile_text, bool strong,
                 bool non_strict, bool list_all) {
    const Game g = load_game(path);
    if (list_all) {
        json j = json::array();
        for (const auto& s : all_nash(g)) j.push_back(profile_to_json(s));
        emit(j);
        return kOk;
    }
    const Profile s = parse_profile(profile_text);
    if (!g.valid_profile(s)) throw input_error("profile out of range for this game");
    const EquilibriumReport r = is_strong_nash(g, s, !non_strict);
    emit(equilibrium_report_to_json(r));
    const bool verdict = strong ? r.is_strong : r.is_nash;
    return verdict ? kOk : kFailed;
}

int cmd_make_contract(const std::string& path, const std::string& scheme,
                      const std::string& eps_spec) {
    const Game g = load_game(path);
    const auto eps = resolve_eps(g, eps_spec, scheme);
    LosingContract c;
    if (scheme == "lemma1") {
        c = lemma1_amounts(g, eps);
    } else if (scheme == "theorem1" || scheme == "theorem2-reduced") {
        c = theorem1_amounts(g, eps);
    } else if (scheme == "tilde") {
        const TildeContract t = tilde_amounts(g, eps);
        if (!t.uniform()) {
            std::cerr << "context-dependent amounts vary with opponents' play; "
                         "no flat contract exists for this game\n";
            return kFailed;
        }
        c = t.collapse();
    } else {
        throw CLI::ValidationError("--scheme", "unknown scheme " + scheme);
    }
    emit(contract_to_json(c, scheme));
    return kOk;
}

int cmd_apply(const std::string& game_path, const std::string& contract_path, bool reduced) {
    const Game g = load_game(game_path);
    const ContractFile f = contract_from_file(contract_path);
    if (!f.contract.shape_matches(g))
        throw input_error("contract shape does not match the game");
    const bool use_reduced = reduced || f.scheme == "theorem2-reduced";
    emit(game_to_json(use_reduced ? apply_reduced(g, f.contract)
                                  : apply_losing(g, f.contract)));
    return kOk;
}

int cmd_verify_theorems(const std::string& path, int max_fixed, int which) {
    const Game g = load_game(path);
    const PdVerdict v = is_pd_flat(g);
    if (!v.is_pd) {
        json j;
        j["is-pd"] = false;
        if (v.first_violation) j["witness"] = pd_witness_to_json(*v.first_violation);
        emit(j);
        return kFailed;
    }
    const int mf = max_fixed >= 0 ? max_fixed : g.players() - 2;
    const LosingContract c = theorem1_amounts(g, ladder_epsilons(g));
    json j;
    bool pass = true;
    if (which == 0 || which == 1) {
        const TheoremReport r = verify_theorem1(g, c, mf);
        json t;
        t["pass"] = r.pass;
        t["restrictions"] = r.restrictions_checked;
        if (r.first_failure) t["failure"] = restriction_failure_to_json(*r.first_failure);
        j["theorem1"] = std::move(t);
        pass = pass && r.pass;
    }
    if (which == 0 || which == 2) {
        const Theorem2Report r = verify_theorem2(g, c, mf);
        json t;
        t["pass"] = r.pass;
        t["restrictions"] = r.restrictions_checked;
        t["covered"] = r.covered;
        t["degenerate"] = r.degenerate;
        t["mixed"] = r.mixed;
        if (r.first_failure) t["failure"] = restriction_failure_to_json(*r.first_failure);
        j["theorem2"] = std::move(t);
        pass = pass && r.pass;
    }
    j["pass"] = pass;
    emit(j);
    return pass ? kOk : kFailed;
}

int cmd_gen_pd(std::uint64_t seed, int players, const std::string& counts_text,
               int min_k, int max_k, bool noise) {
    GeneratorConfig cfg;
    cfg.players = players;
    cfg.seed = seed;
    cfg.min_strategies = min_k;
    cfg.max_strategies = max_k;
    if (!counts_text.empty()) {
        cfg.strategy_counts = parse_profile(counts_text);
        cfg.players = static_cast<int>(cfg.strategy_counts.size());
    }
    if (noise) cfg.form = GeneratorConfig::Form::linear_plus_noise;
    emit(game_to_json(gen_random_pd(cfg)));
    return kOk;
}

int cmd_gen_pgg(const std::string& schedule_path, bool funded) {
    const ContributionSchedule sched = schedule_from_json(schedule_path);
    emit(game_to_json(funded ? build_pgg_funded(sched) : build_pgg(sched).game));
    return kOk;
}

int cmd_run_suite(const std::string& name, int trials, std::uint64_t seed, int max_fixed,
                  const std::string& output) {
    const SuiteReport r = run_suite(name, trials, seed, max_fixed);
    if (output == "json") {
        emit(suite_report_to_json(r));
    } else {
        for (const auto& t : r.results)
            std::cout << (t.pass ? "pass" : "FAIL") << " trial " << t.trial << " instance "
                      << std::hex << t.instance_digest << std::dec
                      << (t.detail.empty() ? "" : "  " + t.detail) << "\n";
        std::cout << r.suite << ": " << (r.pass ? "all passed" : "FAILED") << "\n";
    }
    return r.pass ? kOk : kFailed;
}

int cmd_reproduce(bool section4_only, const std::string& output) {
    const PaperReport r = reproduce_paper(section4_only);
    if (output == "json") {
        emit(paper_report_to_json(r));
    } else {
        for (const auto& d : r.tables)
            std::cout << d.key << ": " << (d.match ? "match" : "MISMATCH " + d.detail) << "\n";
        if (!section4_only)
            std::cout << "unique-but-not-strong: "
                      << (r.unique_but_not_strong ? "reproduced" : "MISSING") << "\n";
        const auto& s4 = r.section4;
        std::cout << "reward-not-optimizing: " << (s4.reward_not_optimizing ? "ok" : "FAIL")
                  << "\nconditional-defect-still-nash: "
                  << (s4.conditional_defect_still_nash ? "ok" : "FAIL")
                  << "\ndirected: "
                  << ((s4.directed_profile_matches && s4.directed_strong_fails) ? "ok" : "FAIL")
                  << "\nequal-split: "
                  << ((s4.equal_split_profile_matches && s4.equal_split_strong_fails) ? "ok"
                                                                                      : "FAIL")
                  << "\n";
    }
    return r.pass ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification for n-player dilemmas and losing contracts"};
    app.require_subcommand(1);

    std::string game_path, contract_path, profile_text, output = "text";
    std::string scheme = "theorem1", eps_spec = "default", suite = "all", counts_text;
    std::string schedule_path;
    bool recursive_oracle = false, lemmas = false, strong = false, non_strict = false;
    bool list_all = false, reduced = false, noise = false, funded = false;
    bool section4 = false;
    int max_fixed = -1, theorem = 0, players = 3, min_k = 2, max_k = 4, trials = 50;
    std::uint64_t seed = 0;
    int section = 0;

    auto* validate = app.add_subcommand("validate-pd", "check the dilemma conditions");
    validate->add_option("game", game_path)->required();
    validate->add_flag("--recursive-oracle", recursive_oracle);
    validate->add_flag("--lemmas", lemmas);
    validate->add_option("--output", output)->check(CLI::IsMember({"text", "json"}));

    auto* check = app.add_subcommand("check-eq", "equilibrium checks for a profile");
    check->add_option("game", game_path)->required();
    check->add_option("--profile", profile_text);
    check->add_flag("--strong", strong);
    check->add_flag("--non-strict", non_strict);
    check->add_flag("--all-nash", list_all);

    auto* make = app.add_subcommand("make-contract", "construct forfeit amounts");
    make->add_option("game", game_path)->required();
    make->add_option("--scheme", scheme)
        ->check(CLI::IsMember({"lemma1", "theorem1", "theorem2-reduced", "tilde"}));
    make->add_option("--eps-ladder", eps_spec);

    auto* apply_cmd = app.add_subcommand("apply", "apply a contract to a game");
    apply_cmd->add_option("game", game_path)->required();
    apply_cmd->add_option("contract", contract_path)->required();
    apply_cmd->add_flag("--reduced", reduced);

    auto* verify = app.add_subcommand("verify-theorems", "exhaustive certification");
    verify->add_option("game", game_path)->required();
    verify->add_option("--max-fixed", max_fixed);
    verify->add_option("--theorem", theorem)->check(CLI::IsMember({1, 2}));

    auto* gen = app.add_subcommand("gen", "generate instances");
    auto* gen_pd = gen->add_subcommand("pd", "random validated dilemma");
    gen_pd->add_option("--seed", seed);
    gen_pd->add_option("--players", players);
    gen_pd->add_option("--strategies", counts_text, "comma-separated counts");
    gen_pd->add_option("--min-k", min_k);
    gen_pd->add_option("--max-k", max_k);
    gen_pd->add_flag("--noise", noise);
    auto* gen_pgg = gen->add_subcommand("pgg", "provision-point game from a schedule");
    gen_pgg->add_option("--schedule", schedule_path)->required();
    gen_pgg->add_flag("--funded", funded, "omit the refund branch");
    gen->require_subcommand(1);

    auto* suite_cmd = app.add_subcommand("run-suite", "seeded property suites");
    suite_cmd->add_option("--name", suite)->check(CLI::IsMember(suite_names()));
    suite_cmd->add_option("--trials", trials);
    suite_cmd->add_option("--seed", seed);
    suite_cmd->add_option("--max-fixed", max_fixed);
    suite_cmd->add_option("--output", output)->check(CLI::IsMember({"text", "json"}));

    auto* repro = app.add_subcommand("reproduce-paper", "regenerate the fixture tables");
    repro->add_option("--section", section)->check(CLI::IsMember({4}));
    repro->add_flag("--section4-only", section4);
    repro->add_option("--output", output)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kUsage;
    }

    try {
        if (validate->parsed())
            return cmd_validate_pd(game_path, recursive_oracle, lemmas, output);
        if (check->parsed()) {
            if (!list_all && profile_text.empty()) {
                std::cerr << "check-eq needs --profile or --all-nash\n";
                return kUsage;
            }
            return cmd_check_eq(game_path, profile_text, strong, non_strict, list_all);
        }
        if (make->parsed()) return cmd_make_contract(game_path, scheme, eps_spec);
        if (apply_cmd->parsed()) return cmd_apply(game_path, contract_path, reduced);
        if (verify->parsed()) return cmd_verify_theorems(game_path, max_fixed, theorem);
        if (gen->parsed()) {
            if (gen_pd->parsed())
                return cmd_gen_pd(seed, players, counts_text, min_k, max_k, noise);
            return cmd_gen_pgg(schedule_path, funded);
        }
        if (suite_cmd->parsed()) return cmd_run_suite(suite, trials, seed, max_fixed, output);
        if (repro->parsed())
            return cmd_reproduce(section4 || section == 4, output);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const generation_error& e) {
        std::cerr << e.what() << "\n";
        return kFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
