// Command-line front end: generators, the Berge containment checker, shadow
// copy counting, threshold bound reports, Ramsey numbers, and the exact
// extremal searches. JSON goes to stdout, human-readable tables to stderr.
//
// Exit codes: 0 computed, 1 property violated, 2 input error, 3 resource cap.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "berge/bounds.hpp"
#include "berge/construct.hpp"
#include "berge/detect.hpp"
#include "berge/invariants.hpp"
#include "berge/json_io.hpp"
#include "berge/oracle.hpp"
#include "berge/patterns.hpp"
#include "berge/transform.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

json read_json_source(const std::string& path) {
    json j;
    if (path.empty() || path == "-") {
        std::cin >> j;
    } else {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open " + path);
        in >> j;
    }
    return j;
}

berge::Hypergraph load_host(const std::string& path) {
    json j = read_json_source(path);
    if (j.is_object() && j.contains("hypergraph")) j = j.at("hypergraph");
    return berge::hypergraph_from_json(j);
}

berge::Graph load_graph(const std::string& path) {
    json j = read_json_source(path);
    if (j.is_object() && j.contains("graph")) j = j.at("graph");
    return berge::graph_from_json(j);
}

berge::Graph load_pattern(const std::string& spec) {
    if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") return load_graph(spec);
    return berge::pattern_by_name(spec);
}

json claims_to_json(const berge::ConstructionClaims& claims) {
    json j;
    j["linear"] = claims.linear;
    j["uniform"] = claims.uniform ? json(*claims.uniform) : json();
    j["count_formula"] = claims.count_formula ? json(*claims.count_formula) : json();
    j["free_of"] = claims.free_of;
    return j;
}

std::vector<int> parse_factors(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

json bound_to_json(const berge::BoundValue& b) {
    return json{{"value", b.value}, {"source", b.source}};
}

json report_to_json(const berge::ThresholdReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows) {
        rows.push_back({{"t", row.t},
                        {"admissible_partitions", row.admissible_partitions},
                        {"c", row.min_contracted_chi},
                        {"bound", row.bound ? json(*row.bound) : json()}});
    }
    json ramsey = json::array();
    for (const auto& entry : report.ramsey_entries) {
        json e{{"edge", {entry.edge.first, entry.edge.second}}};
        switch (entry.result.status) {
            case berge::RamseyResult::Status::found:
                e["status"] = "found";
                e["value"] = entry.result.value;
                break;
            case berge::RamseyResult::Status::greater_than_n_max:
                e["status"] = "greater_than_n_max";
                break;
            case berge::RamseyResult::Status::node_limit:
                e["status"] = "node_limit";
                break;
        }
        ramsey.push_back(std::move(e));
    }
    return json{{"pattern", berge::graph_to_json(report.pattern)},
                {"chi", report.chi},
                {"omega", report.omega},
                {"rows", rows},
                {"chi_bound", bound_to_json(report.chi_bound)},
                {"omega_bound", bound_to_json(report.omega_bound)},
                {"ramsey_upper", report.ramsey_upper ? bound_to_json(*report.ramsey_upper) : json()},
                {"bipartite_upper",
                 report.bipartite_upper ? bound_to_json(*report.bipartite_upper) : json()},
                {"final_lower", bound_to_json(report.final_lower)},
                {"final_upper", report.final_upper ? bound_to_json(*report.final_upper) : json()},
                {"ramsey_entries", ramsey}};
}

void print_report_table(const berge::ThresholdReport& report) {
    std::ostringstream out;
    out << "threshold bounds (chi=" << report.chi << ", omega=" << report.omega << ")\n";
    out << "  t  partitions      c  bound\n";
    for (const auto& row : report.rows) {
        out << "  " << row.t << "  " << row.admissible_partitions << "  "
            << row.min_contracted_chi << "  ";
        if (row.bound)
            out << *row.bound;
        else
            out << "-";
        out << "\n";
    }
    out << "lower " << report.final_lower.value << "  [" << report.final_lower.source << "]\n";
    if (report.final_upper)
        out << "upper " << report.final_upper->value << "  [" << report.final_upper->source
            << "]\n";
    else
        out << "upper unknown\n";
    std::cerr << out.str();
}

json search_to_json(const berge::SearchResult& result) {
    // Values come from this binary's exhaustive search, not from tables.
    json j{{"mode", berge::to_string(result.mode)},
           {"n", result.n},
           {"r", result.r},
           {"pattern", berge::graph_to_json(result.pattern)},
           {"value", result.value},
           {"nodes", result.nodes},
           {"provenance", "exhaustive-search"}};
    if (result.witness_hypergraph)
        j["witness"] = berge::hypergraph_to_json(*result.witness_hypergraph);
    if (result.witness_graph) j["witness"] = berge::graph_to_json(*result.witness_graph);
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Berge extremal hypergraph toolkit"};
    app.require_subcommand(1);
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    app.add_option("--threads", threads, "worker threads for the containment search");

    // construct
    auto* construct = app.add_subcommand("construct", "emit a generated hypergraph with claims");
    std::string construct_name;
    construct->add_option("name", construct_name,
                          "linear | clique-blowup | admissible-blowup | rpartite | c4 | projective")
        ->required();
    int opt_n = 0, opt_r = 0, opt_s = 3, opt_c = 3, opt_t = 1, opt_q = 2, opt_i = 1, opt_j = 1;
    std::string opt_factors, opt_base;
    construct->add_option("--n", opt_n, "vertex count");
    construct->add_option("--r", opt_r, "uniformity");
    construct->add_option("--s", opt_s, "forbidden clique order");
    construct->add_option("--c", opt_c, "contracted chromatic floor");
    construct->add_option("--t", opt_t, "block-size cap");
    construct->add_option("--q", opt_q, "projective plane order");
    construct->add_option("--i", opt_i, "copies per left base vertex");
    construct->add_option("--j", opt_j, "copies per right base vertex");
    construct->add_option("--factors", opt_factors, "comma-separated blowup factors");
    construct->add_option("--base", opt_base, "base graph JSON file (c4)");

    // check / count
    auto* check = app.add_subcommand("check", "decide Berge containment; certificate or FREE");
    auto* count = app.add_subcommand("count", "count pattern copies in the 2-shadow");
    std::string host_path, pattern_spec;
    for (auto* cmd : {check, count}) {
        cmd->add_option("--host", host_path, "hypergraph JSON file (default stdin)");
        cmd->add_option("--pattern", pattern_spec, "pattern name or JSON file")->required();
    }

    // bounds
    auto* bounds = app.add_subcommand("bounds", "threshold bound report for a pattern");
    std::string bounds_pattern;
    int ramsey_nmax = 8;
    std::uint64_t ramsey_budget = 20'000'000;
    bounds->add_option("--pattern", bounds_pattern, "pattern name or JSON file")->required();
    bounds->add_option("--ramsey-nmax", ramsey_nmax, "largest board for the Ramsey search");
    bounds->add_option("--ramsey-budget", ramsey_budget, "Ramsey assignment budget");

    // ramsey
    auto* ramsey = app.add_subcommand("ramsey", "exact small Ramsey number");
    std::string ramsey_g1, ramsey_g2;
    int ramsey_cmd_nmax = 8;
    std::uint64_t ramsey_cmd_budget = 20'000'000;
    ramsey->add_option("--g1", ramsey_g1, "first pattern")->required();
    ramsey->add_option("--g2", ramsey_g2, "second pattern")->required();
    ramsey->add_option("--nmax", ramsey_cmd_nmax, "largest board size");
    ramsey->add_option("--budget", ramsey_cmd_budget, "assignment budget");

    // search
    auto* search = app.add_subcommand("search", "exact extremal value at desk scale");
    std::string search_mode = "hypergraph";
    int search_n = 0, search_r = 3;
    std::string search_pattern;
    bool no_cache = false;
    std::uint64_t search_budget = 200'000'000;
    int grid_to = 0;
    search->add_option("--mode", search_mode, "hypergraph | linear-hypergraph | graph | generalized");
    search->add_option("--n", search_n, "vertex count")->required();
    search->add_option("--r", search_r, "uniformity / clique order");
    search->add_option("--pattern", search_pattern, "pattern name or JSON file")->required();
    search->add_flag("--no-cache", no_cache, "skip the on-disk result cache");
    search->add_option("--budget", search_budget, "search node budget");
    search->add_option("--grid-to", grid_to,
                       "sweep n up to this value; JSON grid on stdout, CSV on stderr");

    // verify
    auto* verify = app.add_subcommand("verify", "re-check a certificate against its host");
    std::string verify_host, verify_pattern, verify_cert;
    verify->add_option("--host", verify_host, "hypergraph JSON file")->required();
    verify->add_option("--pattern", verify_pattern, "pattern name or JSON file")->required();
    verify->add_option("--cert", verify_cert, "certificate JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*construct) {
            json out;
            if (construct_name == "projective") {
                const berge::Graph g = berge::projective_incidence_graph(opt_q);
                out["graph"] = berge::graph_to_json(g);
                out["claims"] = json{{"bipartite", true},
                                     {"c4_free", true},
                                     {"count_formula", g.edge_count()}};
            } else {
                berge::Construction result;
                std::optional<std::vector<int>> factors;
                if (!opt_factors.empty()) factors = parse_factors(opt_factors);
                if (construct_name == "linear") {
                    result = berge::linear_construction(opt_n, opt_r);
                } else if (construct_name == "clique-blowup") {
                    result = berge::clique_blowup_construction(opt_n, opt_s, opt_r, factors);
                } else if (construct_name == "admissible-blowup") {
                    result = berge::admissible_blowup_construction(opt_n, opt_c, opt_t, opt_r,
                                                                   factors);
                } else if (construct_name == "rpartite") {
                    result = berge::rpartite_construction(opt_n, opt_r);
                } else if (construct_name == "c4") {
                    const berge::Graph base = opt_base.empty()
                                                  ? berge::projective_incidence_graph(opt_q)
                                                  : load_graph(opt_base);
                    result = berge::c4_free_construction(base, opt_i, opt_j);
                } else {
                    throw std::invalid_argument("unknown construction: " + construct_name);
                }
                out["hypergraph"] = berge::hypergraph_to_json(result.hypergraph);
                out["claims"] = claims_to_json(result.claims);
            }
            std::cout << out.dump() << "\n";
            return kExitOk;
        }

        if (*check) {
            const berge::Hypergraph host = load_host(host_path);
            const berge::Graph pattern = load_pattern(pattern_spec);
            berge::DetectOptions options;
            options.threads = std::max(1, threads);
            const berge::DetectResult result = berge::contains_berge(host, pattern, options);
            if (result.status == berge::DetectResult::Status::node_limit) {
                std::cerr << "node limit reached\n";
                return kExitResource;
            }
            if (result.status == berge::DetectResult::Status::found) {
                std::cout << berge::certificate_to_json(*result.certificate, pattern).dump()
                          << "\n";
            } else {
                std::cout << "FREE\n";
            }
            return kExitOk;
        }

        if (*count) {
            const berge::Hypergraph host = load_host(host_path);
            const berge::Graph pattern = load_pattern(pattern_spec);
            const berge::CountResult result = berge::count_shadow_copies(host, pattern);
            if (result.status == berge::CountResult::Status::node_limit) {
                std::cerr << "node limit reached\n";
                return kExitResource;
            }
            std::cout << json{{"count", result.value}}.dump() << "\n";
            return kExitOk;
        }

        if (*bounds) {
            const berge::Graph pattern = load_pattern(bounds_pattern);
            berge::ReportOptions options;
            options.ramsey.n_max = ramsey_nmax;
            options.ramsey.node_budget = ramsey_budget;
            const berge::ThresholdReport report = berge::threshold_report(pattern, options);
            std::cout << report_to_json(report).dump() << "\n";
            print_report_table(report);
            return kExitOk;
        }

        if (*ramsey) {
            berge::RamseyOptions options;
            options.n_max = ramsey_cmd_nmax;
            options.node_budget = ramsey_cmd_budget;
            const berge::RamseyResult result = berge::ramsey_number(
                load_pattern(ramsey_g1), load_pattern(ramsey_g2), options);
            switch (result.status) {
                case berge::RamseyResult::Status::found:
                    std::cout << json{{"status", "found"}, {"value", result.value}}.dump() << "\n";
                    return kExitOk;
                case berge::RamseyResult::Status::greater_than_n_max:
                    std::cout << json{{"status", "greater_than_n_max"},
                                      {"n_max", ramsey_cmd_nmax}}
                                     .dump()
                              << "\n";
                    return kExitOk;
                case berge::RamseyResult::Status::node_limit:
                    std::cerr << "node budget exhausted\n";
                    return kExitResource;
            }
        }

        if (*search) {
            const berge::Graph pattern = load_pattern(search_pattern);
            berge::SearchOptions options;
            options.node_budget = search_budget;
            std::optional<berge::OracleCache> cache;
            if (!no_cache) {
                cache.emplace(berge::OracleCache::default_directory());
                options.cache = &*cache;
            }
            auto run_one = [&](int n) {
                if (search_mode == "hypergraph")
                    return berge::exact_berge_turan(n, search_r, pattern, false, options);
                if (search_mode == "linear-hypergraph")
                    return berge::exact_berge_turan(n, search_r, pattern, true, options);
                if (search_mode == "graph") return berge::exact_turan(n, pattern, options);
                if (search_mode == "generalized")
                    return berge::exact_generalized_turan(n, search_r, pattern, options);
                throw std::invalid_argument("unknown search mode: " + search_mode);
            };
            if (grid_to > 0) {
                if (grid_to < search_n)
                    throw std::invalid_argument("--grid-to must be at least --n");
                json grid = json::array();
                std::cerr << "n,value\n";
                for (int n = search_n; n <= grid_to; ++n) {
                    const berge::SearchResult result = run_one(n);
                    grid.push_back({{"n", n}, {"value", result.value}});
                    std::cerr << n << "," << result.value << "\n";
                }
                std::cout << json{{"mode", search_mode},
                                  {"r", search_r},
                                  {"pattern", berge::graph_to_json(pattern)},
                                  {"grid", grid}}
                                 .dump()
                          << "\n";
                return kExitOk;
            }
            const berge::SearchResult result = run_one(search_n);
            std::cout << search_to_json(result).dump() << "\n";
            std::cerr << "value " << result.value << " after " << result.nodes << " nodes ("
                      << result.elapsed_seconds << " s" << (result.from_cache ? ", cached" : "")
                      << ")\n";
            return kExitOk;
        }

        if (*verify) {
            const berge::Hypergraph host = load_host(verify_host);
            const berge::Graph pattern = load_pattern(verify_pattern);
            const berge::BergeCertificate cert =
                berge::certificate_from_json(read_json_source(verify_cert), pattern);
            const bool valid = berge::verify_certificate(host, pattern, cert);
            std::cout << json{{"valid", valid}}.dump() << "\n";
            return valid ? kExitOk : kExitViolation;
        }
    } catch (const berge::resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
