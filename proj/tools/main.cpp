// Command-line frontend: every library operation behind one binary with
// scriptable exit codes (0 ok/true, 1 definite negative, 2 usage error,
// 3 budget-inconclusive).

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "simplexfree/family.hpp"
#include "simplexfree/formulas.hpp"
#include "simplexfree/search.hpp"
#include "simplexfree/simplex.hpp"

namespace sf = simplexfree;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct GlobalOpts {
    std::string format = "table";
    int threads = 0;  // 0 = machine parallelism
    std::uint64_t node_budget = 100'000'000;
    bool no_stats = false;
    bool long_running = false;

    bool json() const { return format == "json"; }
    sf::SearchConfig config() const {
        sf::SearchConfig cfg;
        cfg.threads = threads > 0 ? threads
                                  : std::max(1u, std::thread::hardware_concurrency());
        cfg.node_budget = node_budget;
        cfg.long_running = long_running;
        return cfg;
    }
};

std::string chomp(std::string s) {
    while (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

nlohmann::ordered_json family_json(const sf::SetFamily& fam) {
    nlohmann::ordered_json w;
    w["n"] = fam.n;
    auto sets = nlohmann::ordered_json::array();
    for (sf::Mask m : fam.members) sets.push_back(sf::elements_of(m));
    w["sets"] = sets;
    return w;
}

nlohmann::ordered_json bound_json(const sf::BoundValue& b) {
    return {{"value", sf::to_u64(b.value)},
            {"status", sf::status_name(b.status)},
            {"provenance", b.provenance}};
}

std::string bound_text(const sf::BoundValue& b) {
    return sf::to_decimal(b.value) + " (" + sf::status_name(b.status) + ", " + b.provenance + ")";
}

sf::ParsedFamily load_family(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw sf::FamilyParseError(sf::ParseErrorKind::malformed_syntax,
                                   "cannot open family file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    sf::ParsedFamily parsed = sf::parse_family(buf.str());
    if (parsed.duplicates_dropped > 0)
        std::cerr << "warning: dropped " << parsed.duplicates_dropped << " duplicate set(s)\n";
    return parsed;
}

void print_stats(const GlobalOpts& g, const sf::SearchStats& st) {
    if (g.no_stats) return;
    std::cout << "stats universe=" << st.universe << " simplices=" << st.simplices
              << " levels=" << st.levels << " nodes=" << st.nodes << " prunes=" << st.prunes
              << " wall_ms=" << st.wall_ms << "\n";
}

int cmd_check(const GlobalOpts& g, const std::string& family_path, int d) {
    sf::SetFamily fam = load_family(family_path).family;
    auto witness = sf::find_simplex(fam, d);
    if (g.json()) {
        nlohmann::ordered_json j;
        j["schema"] = "simplexfree.check/1";
        j["d"] = d;
        j["simplex_free"] = !witness.has_value();
        if (witness) {
            nlohmann::ordered_json w;
            w["d"] = witness->d;
            auto sets = nlohmann::ordered_json::array();
            for (sf::Mask m : witness->sets) sets.push_back(sf::elements_of(m));
            w["sets"] = sets;
            j["witness"] = w;
        }
        std::cout << j.dump() << "\n";
    } else if (witness) {
        std::cout << sf::serialize_witness(*witness);
    } else {
        std::cout << "simplex-free\n";
    }
    return witness ? kExitNegative : kExitOk;
}

int cmd_value(const GlobalOpts& g, int n, int d, int k) {
    sf::BoundValue v = sf::star_value(n, d, k);
    if (g.json()) {
        nlohmann::ordered_json j;
        j["schema"] = "simplexfree.value/1";
        j["n"] = n;
        j["d"] = d;
        j["k"] = k;
        j.update(bound_json(v));
        std::cout << j.dump() << "\n";
    } else {
        std::cout << bound_text(v) << "\n";
    }
    return kExitOk;
}

int cmd_bound(const GlobalOpts& g, int n, int d, int k) {
    sf::FOracle oracle = sf::star_oracle();
    sf::BoundValue link = sf::lemma_bound(n, d, k, oracle);

    struct Term {
        int n, d, k;
        sf::BoundValue v;
    };
    std::vector<Term> terms;
    terms.push_back({n - k, d, 0, oracle(n - k, d, 0)});
    for (int i = 1; i <= k; ++i) terms.push_back({n - k, d - 1, i, oracle(n - k, d - 1, i)});

    std::optional<sf::BoundValue> chain;
    std::optional<sf::BoundValue> size_cap;
    if (d == 2) {
        chain = sf::lemma_bound_d2(n, k);
        if (k == 2) size_cap = sf::milner_bounds(n).cap_k2;
        if (k == 3) size_cap = sf::milner_bounds(n).cap_k3;
    }

    if (g.json()) {
        nlohmann::ordered_json j;
        j["schema"] = "simplexfree.bound/1";
        j["n"] = n;
        j["d"] = d;
        j["k"] = k;
        j["link_bound"] = bound_json(link);
        auto arr = nlohmann::ordered_json::array();
        for (const auto& t : terms) {
            nlohmann::ordered_json tj;
            tj["n"] = t.n;
            tj["d"] = t.d;
            tj["k"] = t.k;
            tj.update(bound_json(t.v));
            arr.push_back(tj);
        }
        j["oracle_terms"] = arr;
        if (chain) j["chain_bound"] = bound_json(*chain);
        if (size_cap) j["size_cap_bound"] = bound_json(*size_cap);
        std::cout << j.dump() << "\n";
        return kExitOk;
    }

    auto fname = [](const Term& t) {
        std::string s = "f(" + std::to_string(t.n) + "," + std::to_string(t.d);
        if (t.k > 0) s += "," + std::to_string(t.k);
        return s + ")";
    };
    std::string head = "g(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(k) + ")";
    std::cout << head << " <= " << bound_text(link) << "\n";
    std::cout << "  via";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        std::cout << (i == 0 ? " " : ", ") << fname(terms[i]) << " = "
                  << sf::to_decimal(terms[i].v.value) << " (" << sf::status_name(terms[i].v.status)
                  << ")";
    }
    std::cout << "\n";
    if (chain) std::cout << head << " <= " << bound_text(*chain) << "\n";
    if (size_cap)
        std::cout << "f(" << n << ",2," << k << ") <= " << bound_text(*size_cap) << "\n";
    return kExitOk;
}

int cmd_construct(const GlobalOpts&, int n, int x, int d, int k, const std::string& out_path) {
    sf::SetFamily fam = sf::build_star_family(n, x, d, k);
    std::string text = sf::serialize_family(fam);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
        out << text;
    }
    return kExitOk;
}

int cmd_search(const GlobalOpts& g, const sf::SearchProblem& prob) {
    sf::SearchOutcome out = sf::max_simplex_free(prob, g.config());
    if (g.json()) {
        std::cout << sf::serialize_outcome(out, !g.no_stats);
    } else {
        if (out.decision.has_value())
            std::cout << "decision " << (*out.decision ? "feasible" : "infeasible") << "\n";
        if (!out.decision.has_value() || *out.decision) {
            std::cout << "optimum " << out.optimum << "\n";
            std::cout << "witness " << chomp(sf::serialize_family(out.witness)) << "\n";
        }
        print_stats(g, out.stats);
    }
    return out.decision.has_value() && !*out.decision ? kExitNegative : kExitOk;
}

int cmd_enumerate(const GlobalOpts& g, const sf::SearchProblem& prob) {
    sf::EnumerateResult res = sf::enumerate_optimal(prob, g.config());
    if (g.json()) {
        nlohmann::ordered_json j = nlohmann::ordered_json::parse(
            sf::serialize_outcome(res.outcome, !g.no_stats));
        auto fams = nlohmann::ordered_json::array();
        for (const auto& fam : res.families) fams.push_back(family_json(fam));
        j["families"] = fams;
        auto reps = nlohmann::ordered_json::array();
        for (const auto& fam : res.orbit_reps) reps.push_back(family_json(fam));
        j["orbit_reps"] = reps;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "optimum " << res.outcome.optimum << "\n";
        std::cout << "optimal_count " << *res.outcome.optimal_count << "\n";
        if (res.outcome.orbit_count)
            std::cout << "orbit_count " << *res.outcome.orbit_count << "\n";
        for (const auto& fam : res.families)
            std::cout << "family " << chomp(sf::serialize_family(fam)) << "\n";
        print_stats(g, res.outcome.stats);
    }
    return kExitOk;
}

int cmd_conjecture(const GlobalOpts& g, int d, int n_max) {
    sf::ConjectureReport rep = sf::verify_conjecture(n_max, d, g.config());
    bool all_match = rep.complete;
    for (const auto& c : rep.cells) all_match = all_match && c.match;

    if (g.json()) {
        nlohmann::ordered_json j;
        j["schema"] = "simplexfree.conjecture/1";
        j["d"] = rep.d;
        j["n_max"] = rep.n_max;
        j["complete"] = rep.complete;
        auto cells = nlohmann::ordered_json::array();
        for (const auto& c : rep.cells) {
            cells.push_back({{"n", c.n},
                             {"k", c.k},
                             {"exact", c.exact},
                             {"conjectured", sf::to_u64(c.conjectured)},
                             {"match", c.match},
                             {"unique_star", c.unique_star},
                             {"optimal_count", c.optimal_count}});
        }
        j["cells"] = cells;
        j["all_match"] = all_match;
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& c : rep.cells) {
            std::cout << "d=" << rep.d << " n=" << c.n << " k=" << c.k << " exact=" << c.exact
                      << " conjectured=" << sf::to_decimal(c.conjectured)
                      << " match=" << (c.match ? "yes" : "no")
                      << " unique=" << (c.unique_star ? "yes" : "no") << " optima="
                      << c.optimal_count << "\n";
        }
        if (!rep.complete) {
            std::cout << "sweep incomplete (budget exceeded)\n";
        } else if (rep.cells.empty()) {
            std::cout << "no cells in range; trivially complete\n";
        } else {
            std::cout << (all_match ? "all " : "MISMATCH in ") << rep.cells.size()
                      << " cells" << (all_match ? " match" : "") << "\n";
        }
    }
    if (!rep.complete) return kExitInconclusive;
    return all_match ? kExitOk : kExitNegative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for d-simplex-free set families"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "output mode")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    app.add_option("--threads", g.threads, "worker threads (0 = machine parallelism)");
    app.add_option("--node-budget", g.node_budget, "search node budget")->capture_default_str();
    app.add_flag("--no-stats", g.no_stats, "suppress the run statistics block");
    app.add_flag("--long-running", g.long_running, "allow deep complement searches");

    // check
    auto* check = app.add_subcommand("check", "test a family file for d-simplex-freeness");
    std::string family_path;
    int check_d = 1;
    check->add_option("--family", family_path, "family file (JSON)")->required();
    check->add_option("--d", check_d, "simplex dimension")->required()->check(CLI::PositiveNumber);

    // value
    auto* value = app.add_subcommand("value", "extremal value from the closed formulas");
    int v_n = 0, v_d = 0, v_k = 0;
    value->add_option("--n", v_n)->required();
    value->add_option("--d", v_d)->required();
    value->add_option("--k", v_k)->capture_default_str();

    // bound
    auto* bound = app.add_subcommand("bound", "link-decomposition upper bound on g(n,d,k)");
    int b_n = 0, b_d = 0, b_k = 0;
    bound->add_option("--n", b_n)->required();
    bound->add_option("--d", b_d)->required();
    bound->add_option("--k", b_k)->required();

    // construct
    auto* construct = app.add_subcommand("construct", "emit the star family for (n,x,d,k)");
    int c_n = 0, c_x = 0, c_d = 0, c_k = 0;
    std::string c_out;
    construct->add_option("--n", c_n)->required();
    construct->add_option("--x", c_x)->capture_default_str();
    construct->add_option("--d", c_d)->required();
    construct->add_option("--k", c_k)->capture_default_str();
    construct->add_option("--out", c_out, "write to file instead of stdout");

    // search / enumerate share problem flags
    sf::SearchProblem prob;
    int s_cap = -1;
    std::int64_t s_target = -1;
    auto add_problem_flags = [&](CLI::App* cmd, bool with_target) {
        cmd->add_option("--n", prob.n)->required();
        cmd->add_option("--d", prob.d)->required();
        cmd->add_option("--size-cap", s_cap, "max member size (n-k)");
        cmd->add_flag("--require-max", prob.require_max,
                      "require a member of size exactly size-cap");
        if (with_target) cmd->add_option("--target", s_target, "decision mode: family size to hit");
    };
    auto* search = app.add_subcommand("search", "exact optimum by complement search");
    add_problem_flags(search, true);
    auto* enumerate = app.add_subcommand("enumerate", "all optimal families and their orbits");
    add_problem_flags(enumerate, false);

    // conjecture
    auto* conjecture = app.add_subcommand("conjecture", "sweep exact values against the star formula");
    int j_d = 0, j_nmax = 0;
    conjecture->add_option("--d", j_d)->required();
    conjecture->add_option("--n-max", j_nmax)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(g, family_path, check_d);
        if (value->parsed()) return cmd_value(g, v_n, v_d, v_k);
        if (bound->parsed()) return cmd_bound(g, b_n, b_d, b_k);
        if (construct->parsed()) return cmd_construct(g, c_n, c_x, c_d, c_k, c_out);
        if (search->parsed() || enumerate->parsed()) {
            if (s_cap >= 0) prob.size_cap = s_cap;
            if (search->parsed() && s_target >= 0)
                prob.target = static_cast<std::uint64_t>(s_target);
            return search->parsed() ? cmd_search(g, prob) : cmd_enumerate(g, prob);
        }
        if (conjecture->parsed()) return cmd_conjecture(g, j_d, j_nmax);
    } catch (const sf::BudgetExceededError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
