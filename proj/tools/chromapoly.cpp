#include <bit>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chromapoly/chromatic.hpp"
#include "chromapoly/enumerate.hpp"
#include "chromapoly/io.hpp"
#include "chromapoly/polymer.hpp"
#include "chromapoly/potts.hpp"
#include "chromapoly/schemes.hpp"

namespace {

using namespace chromapoly;

struct RunConfig {
    std::string input;
    std::string format = "edgelist";
    std::string demo;
    std::string edge_order;
    std::string out = "text";
    int max_vertices = 0;  // 0 keeps the environment/default value
    int max_edges = 0;
    double coloring_budget = 0;
};

void add_graph_flags(CLI::App* cmd, RunConfig& cfg) {
    auto* input = cmd->add_option("--input", cfg.input, "graph file");
    auto* demo = cmd->add_option("--demo", cfg.demo, "built-in graph: K5, C4, P3, ...");
    input->excludes(demo);
    demo->excludes(input);
    cmd->add_option("--format", cfg.format, "input format")
        ->check(CLI::IsMember({"edgelist", "dimacs"}));
    cmd->add_option("--edge-order", cfg.edge_order, "file re-ranking the edges, lowest first");
    cmd->add_option("--max-vertices", cfg.max_vertices, "enumeration limit override");
    cmd->add_option("--max-edges", cfg.max_edges, "enumeration limit override");
    cmd->add_option("--coloring-budget", cfg.coloring_budget, "configuration sweep budget override");
}

LoadedGraph load(const RunConfig& cfg) {
    if (cfg.input.empty() == cfg.demo.empty())
        throw std::invalid_argument("provide exactly one of --input and --demo");
    LoadedGraph lg = cfg.input.empty() ? demo_graph(cfg.demo)
                                       : load_graph(cfg.input, graph_format_from_name(cfg.format));
    if (!cfg.edge_order.empty()) {
        std::ifstream in(cfg.edge_order);
        if (!in) throw ParseError("cannot open \"" + cfg.edge_order + "\"");
        lg = reorder_edges(lg, in);
    }
    return lg;
}

EnumLimits limits_of(const RunConfig& cfg) {
    EnumLimits lim = EnumLimits::defaults();
    if (cfg.max_vertices > 0) lim.max_vertices = cfg.max_vertices;
    if (cfg.max_edges > 0) lim.max_edges = cfg.max_edges;
    if (cfg.coloring_budget > 0) lim.coloring_budget = cfg.coloring_budget;
    return lim;
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    if (out.empty()) throw std::invalid_argument("empty list \"" + csv + "\"");
    return out;
}

IntPolynomial run_method(const Graph& g, const std::string& method, const std::string& scheme,
                         const EnumLimits& limits) {
    if (method == "classical") return chromatic_classical(g, limits);
    if (method == "whitney") return chromatic_whitney(g, limits);
    if (method == "scheme") return chromatic_scheme(g, Scheme::by_name(scheme), limits);
    if (method == "polymer") return chromatic_via_polymer(g, limits);
    if (method == "deletion-contraction") return deletion_contraction(g);
    return chromatic_brute(g, limits);
}

int cmd_compute(const RunConfig& cfg, const std::string& method, const std::string& scheme) {
    IntPolynomial p = run_method(load(cfg).graph, method, scheme, limits_of(cfg));
    if (cfg.out == "json") {
        std::cout << polynomial_to_json(p) << '\n';
    } else {
        std::cout << "P(q) = " << p.to_text() << '\n'
                  << "coefficients (ascending): " << coefficient_list_text(p) << '\n';
    }
    return 0;
}

void report(const std::string& name, const std::string& status) {
    std::cout << "  " << std::left << std::setw(22) << name << status << '\n';
}

int cmd_verify(const RunConfig& cfg) {
    const LoadedGraph lg = load(cfg);
    const Graph& g = lg.graph;
    const EnumLimits limits = limits_of(cfg);
    const int n = g.vertex_count();
    bool ok = true;

    std::vector<std::pair<std::string, IntPolynomial>> results;
    results.emplace_back("classical", chromatic_classical(g, limits));
    results.emplace_back("whitney", chromatic_whitney(g, limits));
    results.emplace_back("scheme:minimal-tree", chromatic_scheme(g, Scheme::minimal_tree(), limits));
    results.emplace_back("scheme:penrose", chromatic_scheme(g, Scheme::penrose(), limits));
    results.emplace_back("polymer", chromatic_via_polymer(g, limits));
    results.emplace_back("deletion-contraction", deletion_contraction(g));
    results.emplace_back("brute", chromatic_brute(g, limits));
    const IntPolynomial& reference = results.front().second;
    std::cout << "methods:\n";
    report(results.front().first, coefficient_list_text(reference));
    for (std::size_t i = 1; i < results.size(); ++i) {
        const auto& [name, p] = results[i];
        if (p == reference) {
            report(name, "agrees");
        } else {
            report(name, "DISAGREES " + coefficient_list_text(p));
            std::cerr << "witness: " << name << " produced " << coefficient_list_text(p)
                      << " but classical produced " << coefficient_list_text(reference) << '\n';
            ok = false;
        }
    }

    std::cout << "scheme validation:\n";
    if (g.is_connected()) {
        for (const char* name : {"minimal-tree", "penrose"}) {
            SchemeValidation v = validate_scheme(g, Scheme::by_name(name), limits);
            if (v.valid) {
                report(name, "valid (" + std::to_string(v.tree_count) + " trees, " +
                                 std::to_string(v.subgraph_count) + " subgraphs)");
            } else {
                report(name, "INVALID: " + v.reason);
                std::cerr << "witness: scheme " << name << " fails on subgraph mask " << v.witness
                          << " (covered " << v.witness_cover << " times)\n";
                ok = false;
            }
        }
    } else {
        report("skipped", "graph is disconnected");
    }

    std::cout << "tree-sum identity:\n";
    if (g.is_connected() && n >= 2) {
        std::mt19937 rng(20240815);
        std::uniform_int_distribution<int> num(-8, 8);
        std::uniform_int_distribution<int> den(1, 4);
        for (const char* name : {"minimal-tree", "penrose"}) {
            int passed = 0;
            const int draws = 5;
            for (int d = 0; d < draws; ++d) {
                WeightAssignment w;
                for (int e = 0; e < g.edge_count(); ++e) w.emplace_back(num(rng), den(rng));
                PenroseIdentityResult r = check_penrose_identity(g, w, Scheme::by_name(name), limits);
                if (r.equal) {
                    ++passed;
                } else {
                    std::cerr << "witness: tree-sum identity broke for " << name << " on draw " << d
                              << " (lhs = " << r.lhs << ", rhs = " << r.rhs << ")\n";
                    ok = false;
                }
            }
            report(name, passed == draws ? "pass (" + std::to_string(draws) + " weight draws)"
                                         : "FAIL");
        }
    } else {
        report("skipped", n < 2 ? "graph has fewer than two vertices" : "graph is disconnected");
    }

    std::cout << "color-sum identity:\n";
    {
        int checked = 0;
        bool section = true;
        const int max_size = std::min(5, n);
        for (VertexMask r = 0; r < (VertexMask{1} << n); ++r) {
            const int size = std::popcount(r);
            if (size < 2 || size > max_size) continue;
            for (int q : {2, 3}) {
                MayerIdentityResult m = check_mayer_identity(g, r, q, limits);
                ++checked;
                if (!m.equal) {
                    std::cerr << "witness: color-sum identity broke on subset mask " << r
                              << " at q = " << q << " (lhs = " << m.lhs << ", rhs = " << m.rhs
                              << ")\n";
                    section = false;
                    ok = false;
                }
            }
        }
        report(section ? "pass" : "FAIL", "(" + std::to_string(checked) + " subset/q pairs)");
    }

    std::cout << "zero-temperature agreement:\n";
    {
        int q_top = -1;
        for (int q = 0; q <= n + 1; ++q) {
            if (std::pow(static_cast<double>(q), n) > limits.coloring_budget) break;
            q_top = q;
        }
        bool section = true;
        for (int q = 0; q <= q_top; ++q) {
            if (zero_temperature_antiferromagnetic(g, q, limits) != reference(BigInt(q))) {
                std::cerr << "witness: configuration sweep at q = " << q
                          << " disagrees with the polynomial\n";
                section = false;
                ok = false;
            }
        }
        report(section ? "pass" : "FAIL", "(q = 0.." + std::to_string(q_top) + ")");
    }

    std::cout << (ok ? "all checks passed" : "VERIFICATION FAILED") << '\n';
    return ok ? 0 : 1;
}

int cmd_forests(const RunConfig& cfg, const std::string& schemes_csv) {
    const LoadedGraph lg = load(cfg);
    const EnumLimits limits = limits_of(cfg);
    std::vector<std::string> names = split_list(schemes_csv);
    std::vector<ForestLevelCounts> counts;
    for (const std::string& name : names) {
        ForestLevelCounts c = forest_level_counts(lg.graph, Scheme::by_name(name), limits);
        std::ostringstream line;
        line << "N = (";
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k > 0) line << ", ";
            line << c[k];
        }
        line << ")";
        report(name, line.str());
        counts.push_back(std::move(c));
    }
    if (names.size() < 2) return 0;
    bool counts_agree = true;
    for (const auto& c : counts) counts_agree = counts_agree && c == counts.front();
    if (!counts_agree) {
        std::cout << "level counts: DISAGREE\n";
        std::cerr << "witness: schemes produced different level counts\n";
        return 1;
    }
    std::cout << "level counts: agree\n";
    std::vector<std::set<EdgeMask>> sets;
    for (const std::string& name : names) {
        std::set<EdgeMask> masks;
        for (const Forest& f : enumerate_scheme_forests(lg.graph, Scheme::by_name(name), limits))
            masks.insert(f.edges);
        sets.push_back(std::move(masks));
    }
    bool sets_equal = true;
    for (const auto& s : sets) sets_equal = sets_equal && s == sets.front();
    std::cout << (sets_equal ? "forest sets: identical across schemes"
                             : "forest sets: differ while the counts agree")
              << '\n';
    return 0;
}

int cmd_potts(const RunConfig& cfg, int q, double coupling, const std::string& betas_csv) {
    const LoadedGraph lg = load(cfg);
    const EnumLimits limits = limits_of(cfg);
    std::vector<double> betas;
    for (const std::string& item : split_list(betas_csv)) {
        std::size_t used = 0;
        double b = std::stod(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad beta value \"" + item + "\"");
        betas.push_back(b);
    }
    if (cfg.out == "json") {
        for (double beta : betas) {
            PottsParameters p{q, beta, coupling};
            std::cout << potts_to_json(p, partition_function(lg.graph, p, limits)) << '\n';
        }
        return 0;
    }
    std::cout << "q = " << q << "  J = " << coupling << '\n';
    std::cout << std::left << std::setw(12) << "beta" << "Z\n";
    for (double beta : betas) {
        PottsParameters p{q, beta, coupling};
        double z = partition_function(lg.graph, p, limits);
        std::ostringstream zs;
        zs << std::setprecision(15) << z;
        std::ostringstream bs;
        bs << beta;
        std::cout << std::left << std::setw(12) << bs.str() << zs.str() << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chromatic polynomial engine: several independent routes plus their identities"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string method = "classical";
    std::string scheme;
    std::string schemes = "minimal-tree,penrose";
    std::string betas = "0,0.5,1,2";
    int q = 2;
    double coupling = 1;

    CLI::App* compute = app.add_subcommand("compute", "chromatic polynomial by one method");
    add_graph_flags(compute, cfg);
    compute->add_option("--method", method, "computation route")
        ->check(CLI::IsMember(
            {"classical", "whitney", "scheme", "polymer", "deletion-contraction", "brute"}));
    compute->add_option("--scheme", scheme, "partition scheme (with --method scheme)");
    compute->add_option("--out", cfg.out, "output format")->check(CLI::IsMember({"text", "json"}));

    CLI::App* verify = app.add_subcommand("verify", "run every method and identity check");
    add_graph_flags(verify, cfg);

    CLI::App* forests = app.add_subcommand("forests", "scheme-closed forest counts per level");
    add_graph_flags(forests, cfg);
    forests->add_option("--schemes", schemes, "comma-separated scheme names");

    CLI::App* potts = app.add_subcommand("potts", "partition function over a beta grid");
    add_graph_flags(potts, cfg);
    potts->add_option("--q", q, "number of states")->required();
    potts->add_option("--coupling", coupling, "J, positive ferromagnetic");
    potts->add_option("--beta", betas, "comma-separated beta grid");
    potts->add_option("--out", cfg.out, "output format")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad usage reports like a parse failure
    }

    try {
        if (compute->parsed()) {
            if ((method == "scheme") == scheme.empty())
                throw std::invalid_argument("--scheme goes with --method scheme (and only then)");
            return cmd_compute(cfg, method, scheme);
        }
        if (verify->parsed()) return cmd_verify(cfg);
        if (forests->parsed()) return cmd_forests(cfg, schemes);
        return cmd_potts(cfg, q, coupling, betas);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const LimitError& e) {
        std::cerr << "limit exceeded: " << e.what() << '\n';
        return 3;
    } catch (const SchemeInvalidError& e) {
        std::cerr << "scheme invalid: " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
