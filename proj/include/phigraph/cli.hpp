#pragma once

// Command-line front end. Exit codes: 0 success or true verdict,
// 1 computed-false (refuted, no known seed, failed verification),
// 2 usage error, 3 runtime error (overflow, budget, degenerate input).

#include <fstream>
#include <iostream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "phigraph/export.hpp"
#include "phigraph/families.hpp"
#include "phigraph/inverse_totient.hpp"
#include "phigraph/phi_graph.hpp"
#include "phigraph/recognizer.hpp"
#include "phigraph/totient.hpp"
#include "phigraph/tree.hpp"
#include "phigraph/verify.hpp"

namespace phigraph::cli {

struct CommandResult {
    int exit_code = 0;
    std::string output;       // stdout payload
    std::string diagnostics;  // stderr payload
};

namespace detail {

using phigraph::detail::parse_nat;

inline SeedSet parse_seed_list(const std::vector<std::string>& parts) {
    std::vector<u64> xs;
    for (const std::string& part : parts) {
        std::size_t pos = 0;
        while (pos <= part.size()) {
            std::size_t comma = part.find(',', pos);
            if (comma == std::string::npos) comma = part.size();
            xs.push_back(parse_nat(std::string_view(part).substr(pos, comma - pos), "seed"));
            pos = comma + 1;
        }
    }
    return SeedSet::from(std::move(xs));
}

inline std::string join(const std::vector<u64>& xs, char sep = ' ') {
    std::string out;
    for (u64 x : xs) {
        if (!out.empty()) out += sep;
        out += std::to_string(x);
    }
    return out;
}

inline std::string json_line(const nlohmann::ordered_json& j) { return j.dump() + "\n"; }

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::realized: return "realized";
        case Verdict::refuted: return "refuted";
        case Verdict::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

} // namespace detail

// Parses and executes one invocation. `input` backs `--tree -`.
inline CommandResult run(const std::vector<std::string>& args, std::istream* input = nullptr) {
    CommandResult result;
    CLI::App app{"Totient iteration graphs: builder, solver, recognizer"};
    app.name("phigraph");
    app.require_subcommand(1);

    u64 number = 0;
    bool as_json = false, as_dot = false;
    std::vector<std::string> seed_parts;
    std::string family_str, tree_file, generate_str, known_str;
    u64 budget = kDefaultBudget;
    u64 brute_bound = 0;
    bool has_brute = false;
    u64 ptn_upto = 10'000;

    auto* phi_cmd = app.add_subcommand("phi", "Euler totient of N");
    phi_cmd->add_option("N", number)->required()->check(CLI::PositiveNumber);
    phi_cmd->add_flag("--json", as_json);

    auto* chain_cmd = app.add_subcommand("chain", "Totient iterates of N down to 1, with R and Phi");
    chain_cmd->add_option("N", number)->required()->check(CLI::PositiveNumber);
    chain_cmd->add_flag("--json", as_json);

    auto* invphi_cmd = app.add_subcommand("invphi", "All n with phi(n) = M");
    invphi_cmd->add_option("M", number)->required()->check(CLI::PositiveNumber);
    invphi_cmd->add_option("--brute", brute_bound, "Scan 1..BOUND instead of solving")
        ->check(CLI::PositiveNumber);
    invphi_cmd->add_flag("--json", as_json);

    auto* build_cmd = app.add_subcommand("build", "Build the graph of a seed set (JSON, or DOT with --dot)");
    build_cmd->add_option("seeds", seed_parts, "Comma-separated naturals")->required();
    build_cmd->add_flag("--dot", as_dot);

    auto* leaves_cmd = app.add_subcommand("leaves", "Degree-1 vertices of the graph of a seed set");
    leaves_cmd->add_option("seeds", seed_parts, "Comma-separated naturals")->required();
    leaves_cmd->add_flag("--json", as_json);

    auto* seedmin_cmd = app.add_subcommand("seed-min", "Minimal seed generating the same graph");
    seedmin_cmd->add_option("seeds", seed_parts, "Comma-separated naturals")->required();
    seedmin_cmd->add_flag("--json", as_json);

    auto* rec_cmd = app.add_subcommand("recognize", "Decide whether a tree is realizable");
    auto* fam_opt = rec_cmd->add_option("--family", family_str, "Family spec, e.g. star:4");
    auto* tree_opt = rec_cmd->add_option("--tree", tree_file, "Tree file ('-' for stdin)");
    fam_opt->excludes(tree_opt);
    rec_cmd->add_option("--budget", budget, "Node-expansion cap");

    auto* gen_cmd = app.add_subcommand("generate", "Emit a family tree as an edge list (or DOT)");
    gen_cmd->add_option("SPEC", generate_str)->required();
    gen_cmd->add_flag("--dot", as_dot);

    auto* known_cmd = app.add_subcommand("known-seed", "Known constructive seed of a family");
    known_cmd->add_option("SPEC", known_str)->required();
    known_cmd->add_flag("--json", as_json);

    auto* ptn_cmd = app.add_subcommand("ptn", "Perfect totient numbers");
    ptn_cmd->add_option("--upto", ptn_upto)->check(CLI::PositiveNumber);
    ptn_cmd->add_flag("--json", as_json);

    auto* verify_cmd = app.add_subcommand("verify-paper", "Run the full verification suite");

    std::vector<std::string> argv_strings;
    argv_strings.push_back("phigraph");
    argv_strings.insert(argv_strings.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_strings) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (phi_cmd->parsed()) {
            u64 value = totient(number);
            result.output = as_json ? detail::json_line({{"n", number}, {"phi", value}})
                                    : std::to_string(value) + "\n";
        } else if (chain_cmd->parsed()) {
            TotientChain c = chain(number);
            if (as_json) {
                result.output = detail::json_line({{"origin", c.origin},
                                                   {"values", c.values},
                                                   {"steps", c.steps},
                                                   {"phi_sum", c.phi_sum}});
            } else {
                result.output = detail::join(c.values) + "\nR " + std::to_string(c.steps) +
                                "\nPhi " + std::to_string(c.phi_sum) + "\n";
            }
        } else if (invphi_cmd->parsed()) {
            has_brute = invphi_cmd->count("--brute") > 0;
            PreimageSet s =
                has_brute ? inverse_totient_brute(number, brute_bound) : inverse_totient(number);
            result.output = as_json
                                ? detail::json_line({{"target", s.target}, {"solutions", s.solutions}})
                                : detail::join(s.solutions) + "\n";
        } else if (build_cmd->parsed()) {
            PhiGraph g = PhiGraph::build(detail::parse_seed_list(seed_parts));
            result.output = export_graph(g, as_dot ? ExportFormat::dot : ExportFormat::json);
        } else if (leaves_cmd->parsed()) {
            auto ls = leaves(PhiGraph::build(detail::parse_seed_list(seed_parts)));
            result.output = as_json ? detail::json_line({{"leaves", ls}}) : detail::join(ls) + "\n";
        } else if (seedmin_cmd->parsed()) {
            auto ms = minimal_seed(PhiGraph::build(detail::parse_seed_list(seed_parts)));
            result.output =
                as_json ? detail::json_line({{"seed", ms.elements}}) : detail::join(ms.elements) + "\n";
        } else if (rec_cmd->parsed()) {
            if (family_str.empty() == tree_file.empty())
                throw std::invalid_argument("recognize: give exactly one of --family or --tree");
            UnlabeledTree tree = [&] {
                if (!family_str.empty()) return generate(parse_family_spec(family_str));
                if (tree_file == "-") {
                    if (!input) throw std::invalid_argument("recognize: no input stream for '-'");
                    return parse_tree(*input);
                }
                std::ifstream f(tree_file);
                if (!f) throw std::invalid_argument("recognize: cannot open '" + tree_file + "'");
                return parse_tree(f);
            }();
            RecognitionResult r = recognize(tree, budget);
            nlohmann::ordered_json j;
            j["verdict"] = detail::verdict_name(r.verdict);
            if (r.labeling) j["labeling"] = *r.labeling;
            if (r.minimal_seed) j["minimal_seed"] = r.minimal_seed->elements;
            j["nodes_explored"] = r.nodes_explored;
            result.output = detail::json_line(j);
            result.exit_code = r.verdict == Verdict::realized  ? 0
                               : r.verdict == Verdict::refuted ? 1
                                                               : 3;
            if (r.verdict == Verdict::budget_exceeded)
                result.diagnostics = "search stopped: node-expansion budget exhausted\n";
        } else if (gen_cmd->parsed()) {
            UnlabeledTree t = generate(parse_family_spec(generate_str));
            result.output = as_dot ? tree_to_dot(t) : format_tree(t);
        } else if (known_cmd->parsed()) {
            auto seed = known_seed(parse_family_spec(known_str));
            if (seed) {
                result.output = as_json ? detail::json_line({{"seed", seed->elements}})
                                        : detail::join(seed->elements) + "\n";
            } else {
                result.diagnostics = "no known seed for '" + known_str + "'\n";
                result.exit_code = 1;
            }
        } else if (ptn_cmd->parsed()) {
            auto ns = perfect_totient_numbers_upto(ptn_upto);
            result.output = as_json ? detail::json_line({{"upto", ptn_upto}, {"values", ns}})
                                    : detail::join(ns, '\n') + (ns.empty() ? "" : "\n");
        } else if (verify_cmd->parsed()) {
            auto results = run_acceptance_suite();
            result.output = format_acceptance_report(results);
            result.exit_code = acceptance_passed(results) ? 0 : 1;
        }
    } catch (const CLI::CallForHelp&) {
        result.output = app.help();
    } catch (const CLI::CallForAllHelp&) {
        result.output = app.help("", CLI::AppFormatMode::All);
    } catch (const CLI::ParseError& e) {
        result.diagnostics = std::string(e.what()) + "\n";
        result.exit_code = 2;
    } catch (const std::invalid_argument& e) {
        result.diagnostics = std::string(e.what()) + "\n";
        result.exit_code = 2;
    } catch (const std::exception& e) {
        result.diagnostics = std::string(e.what()) + "\n";
        result.exit_code = 3;
    }
    return result;
}

} // namespace phigraph::cli
