#pragma once

// Command-line front end. JSON reports go to standard output, diagnostics to
// the error stream. Exit codes: 0 success, 1 domain/precondition failure,
// 2 I/O or format failure. Fixtures are addressable as fixture:<name>.

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tspan/bipartite.hpp"
#include "tspan/dismount.hpp"
#include "tspan/fixtures.hpp"
#include "tspan/generate.hpp"
#include "tspan/graph.hpp"
#include "tspan/oracle.hpp"
#include "tspan/pivot.hpp"
#include "tspan/reach.hpp"
#include "tspan/report_json.hpp"
#include "tspan/spanner.hpp"
#include "tspan/structure.hpp"

namespace tspan::cli {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline TemporalGraph load_graph(const std::string& path) {
    if (path.rfind("fixture:", 0) == 0) {
        try {
            return fixture(path.substr(8));
        } catch (const std::invalid_argument& e) {
            throw IoError(e.what());
        }
    }
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return parse_graph(in);
}

inline void write_text(const std::string& text, const std::string& out_path,
                       std::ostream& fallback) {
    if (out_path.empty()) {
        fallback << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw IoError("cannot write " + out_path);
    f << text;
}

inline std::string subset_edge_list(const TemporalGraph& g, const EdgeSubset& s) {
    std::ostringstream out;
    for (EdgeId e : s.ids) {
        const Contact& c = g.contact(e);
        out << g.node_name(c.u) << ' ' << g.node_name(c.v) << ' ' << c.t << '\n';
    }
    return out.str();
}

inline ojson analyze_report(const TemporalGraph& g, std::optional<int> kmax_flag) {
    ojson rep;
    rep["nodes"] = g.node_count();
    rep["contacts"] = g.contact_count();
    if (g.contact_count() > 0)
        rep["labels"] = ojson{{"min", g.min_label()}, {"max", g.max_label()}};
    else
        rep["labels"] = nullptr;
    const bool tc = is_temporally_connected(g);
    const bool clique = is_clique(g);
    rep["tc"] = tc;
    rep["clique"] = clique;

    if (clique && g.node_count() >= 2) {
        rep["partition"] = partition_json(g, partition(g));
        StructureReport s = check_non_123(g);
        if (s.partition_ok == true) {
            StructureReport rec = check_reciprocity(g);
            s.reciprocity_ok = rec.reciprocity_ok;
            for (const auto& [k, v] : rec.witnesses) s.witnesses[k] = v;
        }
        rep["structure"] = structure_json(s);
    } else {
        rep["partition"] = nullptr;
        rep["structure"] = nullptr;
    }

    if (clique && g.node_count() >= 3) {
        ojson dis;
        auto probe = [&](const std::string& key, int k) {
            auto step = find_k_hop(g, std::nullopt, k);
            dis[key] = step ? step_json(g, *step) : ojson(nullptr);
        };
        probe("k1", 1);
        probe("k2", 2);
        probe("k3", 3);
        probe("k_n_minus_2", std::max(1, g.node_count() - 2));
        if (kmax_flag) probe("k" + std::to_string(*kmax_flag), *kmax_flag);
        rep["dismountable"] = std::move(dis);
    } else {
        rep["dismountable"] = nullptr;
    }

    if (tc) {
        auto piv = find_pivot(g);
        rep["pivot"] = piv ? contact_json(g, piv->pivot) : ojson(nullptr);
    } else {
        rep["pivot"] = nullptr;
    }
    rep["compressed_lifetime"] =
        g.contact_count() ? compress(g).graph.max_label() : 0;
    rep["full_range"] = is_full_range(g);
    return rep;
}

namespace detail_cli {

struct SpannerOutcome {
    std::optional<SpannerResult> result;
    bool budget_exhausted = false;
};

inline SpannerOutcome run_method(const TemporalGraph& g, const std::string& method, int kmax,
                                 uint64_t seed, const SearchBudget& budget) {
    SpannerOutcome out;
    if (method == "auto") {
        if (!is_clique(g)) throw std::invalid_argument("method auto needs a temporal clique");
        out.result = clique_spanner(g, kmax);
    } else if (method == "dismount") {
        if (!is_clique(g))
            throw std::invalid_argument("method dismount needs a temporal clique");
        auto r = recursively_dismount(g, kmax);
        if (!r) throw std::invalid_argument("recursive dismount is stuck");
        out.result = std::move(r);
    } else if (method == "bipartite") {
        if (!is_clique(g))
            throw std::invalid_argument("method bipartite needs a temporal clique");
        out.result = full_biclique_spanner(g, reduce_to_biclique(g));
    } else if (method == "pivot") {
        if (!is_temporally_connected(g))
            throw std::invalid_argument("method pivot needs a temporally connected graph");
        auto cert = find_pivot(g);
        if (!cert) throw std::invalid_argument("no pivot edge");
        out.result = pivot_spanner(g, *cert);
    } else if (method == "oracle-min") {
        auto r = min_spanner_bruteforce(g, budget);
        if (r.budget_exhausted) {
            out.budget_exhausted = true;
        } else {
            SpannerResult sr;
            sr.edges = *r.edges;
            out.result = std::move(sr);
        }
    } else if (method == "greedy") {
        SpannerResult sr;
        sr.edges = minimal_spanner_greedy(g, seed);
        out.result = std::move(sr);
    } else {
        throw std::invalid_argument("unknown method " + method);
    }
    return out;
}

}  // namespace detail_cli

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"temporal spanner toolkit"};
    app.require_subcommand(1);

    std::string path, out_path, method = "auto", nrange = "4..9", methods_flag = "auto";
    int kmax = 2;
    std::optional<int> analyze_kmax;
    uint64_t seed = 0;
    int gen_n = 0;
    int max_size = std::numeric_limits<int>::max();
    long long time_limit_ms = -1;
    int trials = 10;
    bool with_certificate = false;

    auto* validate = app.add_subcommand("validate", "parse and validate an edge list");
    validate->add_option("path", path)->required();

    auto* analyze = app.add_subcommand("analyze", "full structural report as JSON");
    analyze->add_option("path", path)->required();
    analyze->add_option("--kmax", analyze_kmax, "probe one extra dismount hop bound");

    auto* spanner = app.add_subcommand("spanner", "compute a temporal spanner");
    spanner->add_option("path", path)->required();
    spanner->add_option("--method", method)
        ->check(CLI::IsMember({"auto", "dismount", "bipartite", "pivot", "oracle-min", "greedy"}));
    spanner->add_option("--kmax", kmax, "dismount hop bound (auto/dismount)");
    spanner->add_option("--seed", seed, "seed for greedy");
    spanner->add_option("-o,--output", out_path, "write the spanner edge list here");
    spanner->add_option("--max-size", max_size, "size cap for oracle-min");
    spanner->add_option("--time-limit-ms", time_limit_ms, "time budget for oracle-min");
    spanner->add_flag("--certificate", with_certificate, "also print the certificate JSON");

    auto* compress_cmd = app.add_subcommand("compress", "write the time-compressed labeling");
    compress_cmd->add_option("path", path)->required();
    compress_cmd->add_option("-o,--output", out_path);

    auto* gen = app.add_subcommand("gen", "generate a seeded instance");
    auto* gen_clique = gen->add_subcommand("clique", "random temporal clique");
    gen_clique->add_option("--n", gen_n)->required();
    gen_clique->add_option("--seed", seed);
    gen_clique->add_option("-o,--output", out_path);
    auto* gen_fr = gen->add_subcommand("fullrange", "full-range temporal clique");
    gen_fr->add_option("--n", gen_n)->required();
    gen_fr->add_option("--seed", seed);
    gen_fr->add_option("-o,--output", out_path);
    gen->require_subcommand(1);

    auto* oracle = app.add_subcommand("oracle", "brute-force cross-checks");
    auto* o_dis = oracle->add_subcommand("dismount", "exhaustively certified dismountable nodes");
    o_dis->add_option("path", path)->required();
    o_dis->add_option("--kmax", kmax)->required();
    auto* o_piv = oracle->add_subcommand("pivot", "exhaustively certified pivot edges");
    o_piv->add_option("path", path)->required();
    auto* o_min = oracle->add_subcommand("min", "minimum spanner by subset enumeration");
    o_min->add_option("path", path)->required();
    o_min->add_option("--max-size", max_size);
    o_min->add_option("--time-limit-ms", time_limit_ms);
    auto* o_deg = oracle->add_subcommand("degenerate", "2-degenerate footprint check");
    o_deg->add_option("path", path)->required();
    oracle->require_subcommand(1);

    auto* bench = app.add_subcommand("bench", "CSV rows over random cliques");
    bench->add_option("--n-range", nrange, "inclusive range, e.g. 4..9");
    bench->add_option("--trials", trials);
    bench->add_option("--seed", seed, "base seed");
    bench->add_option("--methods", methods_flag, "comma list of auto,greedy");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (*validate) {
            load_graph(path);
            return 0;
        }
        if (*analyze) {
            TemporalGraph g = load_graph(path);
            out << analyze_report(g, analyze_kmax).dump(2) << '\n';
            return 0;
        }
        if (*spanner) {
            TemporalGraph g = load_graph(path);
            auto outcome = detail_cli::run_method(g, method, kmax, seed,
                                                  SearchBudget{max_size, time_limit_ms});
            ojson stats;
            stats["method"] = method;
            stats["n"] = g.node_count();
            if (outcome.budget_exhausted) {
                stats["size"] = nullptr;
                stats["valid"] = nullptr;
                stats["budget_exhausted"] = true;
                out << stats.dump() << '\n';
                return 0;
            }
            const SpannerResult& r = *outcome.result;
            std::string edge_list = subset_edge_list(g, r.edges);
            // round-trip self-check: re-parse what is written and verify it
            bool valid = false;
            try {
                TemporalGraph back = parse_graph(edge_list);
                valid = verify_spanner(g, match_contacts(g, back));
            } catch (const std::exception&) {
                valid = false;
            }
            write_text(edge_list, out_path, out);
            stats["size"] = r.size();
            stats["valid"] = valid;
            out << stats.dump() << '\n';
            if (with_certificate) out << certificate_json(g, r).dump(2) << '\n';
            return valid ? 0 : 1;
        }
        if (*compress_cmd) {
            TemporalGraph g = load_graph(path);
            write_text(compress(g).graph.edge_list_string(), out_path, out);
            return 0;
        }
        if (*gen) {
            TemporalGraph g = *gen_clique ? gen_random_clique(gen_n, seed)
                                          : gen_full_range_clique(gen_n, seed);
            write_text(g.edge_list_string(), out_path, out);
            return 0;
        }
        if (*oracle) {
            TemporalGraph g = load_graph(path);
            if (*o_dis) {
                ojson rep;
                rep["kmax"] = kmax;
                ojson nodes = ojson::array();
                for (auto [v, cost] : oracle_dismountable_nodes(g, kmax))
                    nodes.push_back(ojson{{"node", g.node_name(v)}, {"cost", cost}});
                rep["nodes"] = std::move(nodes);
                out << rep.dump(2) << '\n';
            } else if (*o_piv) {
                ojson rep;
                ojson edges = ojson::array();
                for (EdgeId e : oracle_pivot_edges(g)) edges.push_back(contact_json(g, e));
                rep["edges"] = std::move(edges);
                out << rep.dump(2) << '\n';
            } else if (*o_min) {
                auto r = min_spanner_bruteforce(g, SearchBudget{max_size, time_limit_ms});
                ojson rep;
                rep["size"] = r.edges ? ojson(r.size()) : ojson(nullptr);
                rep["edges"] = r.edges ? subset_json(g, *r.edges) : ojson(nullptr);
                rep["budget_exhausted"] = r.budget_exhausted;
                out << rep.dump(2) << '\n';
            } else if (*o_deg) {
                ojson rep;
                rep["two_degenerate"] = footprint_2_degenerate(g, EdgeSubset::all(g));
                out << rep.dump(2) << '\n';
            }
            return 0;
        }
        if (*bench) {
            auto dots = nrange.find("..");
            if (dots == std::string::npos)
                throw std::invalid_argument("bad --n-range, expected A..B");
            int n_lo = std::stoi(nrange.substr(0, dots));
            int n_hi = std::stoi(nrange.substr(dots + 2));
            if (n_lo < 2 || n_hi < n_lo) throw std::invalid_argument("bad --n-range");
            std::vector<std::string> methods;
            {
                std::istringstream ms(methods_flag);
                std::string tok;
                while (std::getline(ms, tok, ',')) {
                    if (tok != "auto" && tok != "greedy")
                        throw std::invalid_argument("bench supports methods auto,greedy");
                    methods.push_back(tok);
                }
                std::sort(methods.begin(), methods.end());
                methods.erase(std::unique(methods.begin(), methods.end()), methods.end());
            }
            out << "n,seed,method,size,valid,millis\n";
            for (int n = n_lo; n <= n_hi; ++n) {
                for (int t = 0; t < trials; ++t) {
                    uint64_t s = seed + static_cast<uint64_t>(t);
                    TemporalGraph g = gen_random_clique(n, s);
                    for (const std::string& mth : methods) {
                        auto t0 = std::chrono::steady_clock::now();
                        EdgeSubset picked = mth == "auto"
                                                ? clique_spanner(g).edges
                                                : minimal_spanner_greedy(g, s);
                        auto t1 = std::chrono::steady_clock::now();
                        bool valid = verify_spanner(g, picked);
                        long long ms =
                            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                                .count();
                        out << n << ',' << s << ',' << mth << ',' << picked.size() << ','
                            << (valid ? "true" : "false") << ',' << ms << '\n';
                    }
                }
            }
            return 0;
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace tspan::cli
