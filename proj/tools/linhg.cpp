#include <omp.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "linhg/construct.hpp"
#include "linhg/cycles.hpp"
#include "linhg/diagnostics.hpp"
#include "linhg/search.hpp"

using nlohmann::json;

namespace {

constexpr int EXIT_OK = 0;
constexpr int EXIT_USAGE = 1;
constexpr int EXIT_WITNESS = 2;
constexpr int EXIT_BUDGET = 3;

struct Common {
    std::string format = "text";
    int threads = 0;
    std::uint64_t budget = 100'000'000;
    std::string output;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--threads", c.threads, "Worker threads (default: machine parallelism)");
    cmd->add_option("--budget", c.budget, "Node-expansion budget for cycle detection");
}

void apply_threads(const Common& c) {
    if (c.threads > 0) omp_set_num_threads(c.threads);
}

std::ostream& open_output(const Common& c, std::ofstream& file) {
    if (c.output.empty()) return std::cout;
    file.open(c.output);
    if (!file) throw std::runtime_error("cannot open output file '" + c.output + "'");
    return file;
}

linhg::TripleSystem load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    return linhg::load_triple_system(in);
}

linhg::BipartiteGraph load_host(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    return linhg::load_bipartite_graph(in);
}

std::string rational_str(const linhg::Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

json witness_json(const linhg::CycleWitness& w) {
    json out;
    std::visit(
        [&out](const auto& ww) {
            out["k"] = ww.k;
            out["v"] = ww.vertices;
            out["h"] = ww.edge_indices;
        },
        w);
    out["kind"] = std::holds_alternative<linhg::BergeCycleWitness>(w) ? "berge" : "linear";
    return out;
}

int cmd_construct_c5free(const Common& c, int s) {
    auto h = linhg::construct_c5free(s);
    std::ofstream file;
    std::ostream& out = open_output(c, file);
    if (c.format == "json") {
        json j{{"command", "construct"}, {"variant", "c5free"}, {"s", s}, {"n", h.n},
               {"m", h.m()}, {"system", linhg::save_triple_system(h)}};
        out << j.dump() << "\n";
    } else {
        linhg::save_triple_system(h, out);
    }
    return EXIT_OK;
}

int cmd_construct_lift(const Common& c, const std::string& host_path, int q) {
    auto g = load_host(host_path);
    auto girth = linhg::girth(g);
    auto h = linhg::construct_from_bipartite(g, q);
    std::ofstream file;
    std::ostream& out = open_output(c, file);
    if (c.format == "json") {
        json j{{"command", "construct"}, {"variant", "lift"}, {"q", q}, {"n", h.n},
               {"m", h.m()}, {"system", linhg::save_triple_system(h)}};
        if (girth) j["host_girth"] = *girth;
        out << j.dump() << "\n";
    } else {
        if (girth)
            out << "# host girth " << *girth << "\n";
        else
            out << "# host is acyclic\n";
        linhg::save_triple_system(h, out);
    }
    return EXIT_OK;
}

int cmd_gen(const Common& c, const linhg::BipartiteGraph& g) {
    std::ofstream file;
    std::ostream& out = open_output(c, file);
    if (c.format == "json") {
        json j{{"command", "gen"}, {"n_left", g.n_left}, {"n_right", g.n_right},
               {"m", g.m()}, {"graph", linhg::save_bipartite_graph(g)}};
        out << j.dump() << "\n";
    } else {
        linhg::save_bipartite_graph(g, out);
    }
    return EXIT_OK;
}

int cmd_check(const Common& c, const std::string& path, const std::string& family) {
    auto h = load_system(path);
    auto fam = linhg::FamilySpec::parse(family);
    linhg::SearchOptions opts;
    opts.budget = c.budget;
    auto report = linhg::is_family_free(h, fam, opts);
    if (report.budget_exceeded && !report.witness) {
        std::cerr << "check: detection budget exceeded\n";
        return EXIT_BUDGET;
    }
    if (c.format == "json") {
        json j{{"command", "check"}, {"family", fam.to_string()}, {"free", report.free}};
        if (report.witness) {
            j["entry"] = report.entry;
            j["witness"] = witness_json(*report.witness);
        }
        std::cout << j.dump() << "\n";
    } else if (report.free) {
        std::cout << "free\n";
    } else {
        const auto& entry = fam.entries[report.entry];
        std::cout << "witness " << linhg::to_string(entry.kind) << " " << entry.length << "\n";
        std::cout << linhg::serialize_witness(*report.witness);
    }
    return report.free ? EXIT_OK : EXIT_WITNESS;
}

int cmd_stats(const Common& c, const std::string& path) {
    auto h = load_system(path);
    auto prof = linhg::degrees(h);
    auto sh = linhg::shadow(h);
    bool linear = linhg::is_linear(h);
    long long p = linhg::count_3links(h);
    if (c.format == "json") {
        json j{{"command", "stats"}, {"n", h.n}, {"m", h.m()}, {"linear", linear},
               {"d_max", prof.d_max}, {"degrees", prof.degree},
               {"p", p}, {"shadow_edges", sh.edges.size()}};
        if (prof.d_avg) j["d_avg"] = rational_str(*prof.d_avg);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "n=" << h.n << "\n";
        std::cout << "m=" << h.m() << "\n";
        std::cout << "linear=" << (linear ? "true" : "false") << "\n";
        std::cout << "d_max=" << prof.d_max << "\n";
        std::cout << "d_avg=" << (prof.d_avg ? rational_str(*prof.d_avg) : "undefined") << "\n";
        std::cout << "p=" << p << "\n";
        std::cout << "shadow_edges=" << sh.edges.size() << "\n";
    }
    return EXIT_OK;
}

int cmd_verify_claims(const Common& c, const std::string& path, const std::string& context) {
    auto h = load_system(path);
    linhg::ClaimOptions opts;
    opts.detect.budget = c.budget;
    auto ids = linhg::claims_for_context(context == "c4" ? linhg::ClaimContext::c4
                                                         : linhg::ClaimContext::c5);
    bool any_fail = false;
    json lines = json::array();
    for (auto id : ids) {
        auto rep = linhg::check_claim(h, id, opts);
        any_fail = any_fail || rep.status == linhg::ClaimStatus::fail;
        if (c.format == "json") {
            json j{{"claim", linhg::to_string(id)},
                   {"status", rep.status == linhg::ClaimStatus::pass ? "PASS"
                              : rep.status == linhg::ClaimStatus::fail ? "FAIL" : "N/A"},
                   {"slack", rep.slack}, {"witness", rep.witness}};
            if (!rep.reason.empty()) j["reason"] = rep.reason;
            lines.push_back(j);
        } else {
            std::cout << rep.to_line() << "\n";
        }
    }
    if (c.format == "json")
        std::cout << json{{"command", "verify-claims"}, {"context", context},
                          {"claims", lines}}.dump() << "\n";
    return any_fail ? EXIT_WITNESS : EXIT_OK;
}

// independent maximum computation for --oracle: plain subset recursion with
// a full family re-check at every node, no ordering tricks, no pruning
int oracle_max(int n, const linhg::FamilySpec& fam) {
    std::vector<linhg::Triple> cand;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int d = b + 1; d < n; ++d) cand.push_back({a, b, d});
    int best = 0;
    std::vector<linhg::Triple> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        best = std::max(best, static_cast<int>(cur.size()));
        for (std::size_t i = from; i < cand.size(); ++i) {
            cur.push_back(cand[i]);
            linhg::TripleSystem sys{n, cur};
            if (linhg::is_linear(sys) && linhg::is_family_free(sys, fam).free)
                self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return best;
}

int cmd_search(const Common& c, int n, const std::string& family, bool oracle) {
    auto fam = linhg::FamilySpec::parse(family);
    linhg::ExtremalOptions opts;
    opts.detect.budget = c.budget;
    auto result = linhg::exact_extremal(n, fam, opts);
    if (c.format == "json") {
        json j{{"command", "search"}, {"n", n}, {"family", fam.to_string()},
               {"max", result.max_edges}, {"nodes", result.nodes_explored},
               {"witness", linhg::save_triple_system(result.witness)}};
        if (oracle) {
            if (n > 6) throw std::runtime_error("--oracle supports n <= 6 only");
            j["oracle_max"] = oracle_max(n, fam);
        }
        std::cout << j.dump() << "\n";
        if (oracle && j["oracle_max"] != result.max_edges) {
            std::cerr << "search: oracle disagrees with search result\n";
            return EXIT_USAGE;
        }
    } else {
        std::cout << "n=" << n << " family=" << fam.to_string() << " max=" << result.max_edges
                  << "\n";
        linhg::save_triple_system(result.witness, std::cout);
        if (oracle) {
            if (n > 6) throw std::runtime_error("--oracle supports n <= 6 only");
            int om = oracle_max(n, fam);
            std::cout << "oracle_max=" << om << "\n";
            if (om != result.max_edges) {
                std::cerr << "search: oracle disagrees with search result\n";
                return EXIT_USAGE;
            }
        }
    }
    return EXIT_OK;
}

int cmd_bounds(const Common& c, long long n, int k, double cc, double alpha, bool has_k) {
    double value = has_k ? linhg::corollary_bound(static_cast<double>(n), k)
                         : linhg::lower_bound_value(static_cast<double>(n), cc, alpha);
    if (c.format == "json") {
        json j{{"command", "bounds"}, {"n", n}, {"value", value}};
        if (has_k) j["k"] = k;
        else { j["c"] = cc; j["alpha"] = alpha; }
        std::cout << j.dump() << "\n";
    } else {
        std::printf("%.6f\n", value);
    }
    return EXIT_OK;
}

int cmd_plan(const Common& c, long long n, double cc, double alpha) {
    auto plan = linhg::plan_parameters(n, cc, alpha);
    if (c.format == "json") {
        json j{{"command", "plan"}, {"n", plan.n}, {"c", plan.c}, {"alpha", plan.alpha},
               {"z", plan.z}, {"q", plan.q}, {"predicted_bound", plan.predicted_bound}};
        if (plan.k) j["k"] = *plan.k;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "n=" << plan.n << "\n";
        if (plan.k) std::cout << "k=" << *plan.k << "\n";
        std::cout << "c=" << plan.c << "\n";
        std::cout << "alpha=" << plan.alpha << "\n";
        std::cout << "z=" << plan.z << "\n";
        std::cout << "q=" << plan.q << "\n";
        std::printf("predicted_bound=%.6f\n", plan.predicted_bound);
    }
    return EXIT_OK;
}

int cmd_verify(const Common& c, const std::string& path, const std::string& witness_path) {
    auto h = load_system(path);
    std::ifstream win(witness_path);
    if (!win) throw std::runtime_error("cannot open witness file '" + witness_path + "'");
    auto w = linhg::parse_witness(win);
    bool ok = std::visit([&h](const auto& ww) { return linhg::verify_witness(h, ww); }, w);
    if (c.format == "json")
        std::cout << json{{"command", "verify"}, {"valid", ok}}.dump() << "\n";
    else
        std::cout << (ok ? "valid" : "invalid") << "\n";
    return ok ? EXIT_OK : EXIT_WITNESS;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toolkit for 3-uniform linear hypergraphs avoiding Berge and linear cycles"};
    app.require_subcommand(1);

    Common common;

    // construct
    auto* construct = app.add_subcommand("construct", "Build extremal hypergraphs");
    construct->require_subcommand(1);
    int s = 1;
    auto* c5 = construct->add_subcommand("c5free", "C5-free linear system on 3s^2 vertices");
    c5->add_option("--s", s, "Block parameter")->required();
    c5->add_option("-o,--output", common.output, "Output file");
    add_common(c5, common);
    std::string host_path;
    int q = 1;
    auto* lift = construct->add_subcommand("lift", "Lift a bipartite host graph");
    lift->add_option("--host", host_path, "Host graph file")->required();
    lift->add_option("--q", q, "Number of layers")->required();
    lift->add_option("-o,--output", common.output, "Output file");
    add_common(lift, common);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate host graphs");
    gen->require_subcommand(1);
    int ka = 1, kb = 1;
    auto* kbip = gen->add_subcommand("kbipartite", "Complete bipartite K_{a,b}");
    kbip->add_option("--a", ka, "Left class size")->required();
    kbip->add_option("--b", kb, "Right class size")->required();
    kbip->add_option("-o,--output", common.output, "Output file");
    add_common(kbip, common);
    int p = 2;
    auto* pg = gen->add_subcommand("pg", "Projective plane incidence graph PG(2,p)");
    pg->add_option("--p", p, "Prime order")->required();
    pg->add_option("-o,--output", common.output, "Output file");
    add_common(pg, common);

    // check
    std::string check_file, check_family;
    auto* check = app.add_subcommand("check", "Test a system for forbidden cycles");
    check->add_option("--family", check_family, "Forbidden family spec")->required();
    check->add_option("file", check_file, "Triple-system file")->required();
    add_common(check, common);

    // stats
    std::string stats_file;
    auto* stats = app.add_subcommand("stats", "Summarize a triple system");
    stats->add_option("file", stats_file, "Triple-system file")->required();
    add_common(stats, common);

    // verify-claims
    std::string claims_file, context = "c5";
    auto* claims = app.add_subcommand("verify-claims", "Audit the proof-step inequalities");
    claims->add_option("--context", context, "Claim set")->check(CLI::IsMember({"c5", "c4"}));
    claims->add_option("file", claims_file, "Triple-system file")->required();
    add_common(claims, common);

    // search
    int search_n = 0;
    std::string search_family = "none";
    bool oracle = false;
    auto* search = app.add_subcommand("search", "Exact extremal numbers at small n");
    search->add_option("--n", search_n, "Vertex count")->required();
    search->add_option("--family", search_family, "Forbidden family spec");
    search->add_flag("--oracle", oracle, "Cross-validate with a naive enumerator (n <= 6)");
    add_common(search, common);

    // bounds
    long long bound_n = 0;
    int bound_k = 0;
    double bound_c = 1.0, bound_alpha = 2.0;
    auto* bounds = app.add_subcommand("bounds", "Evaluate the lower-bound formulas");
    bounds->add_option("--n", bound_n, "Vertex count")->required();
    auto* opt_k = bounds->add_option("--k", bound_k, "Odd-cycle family parameter");
    auto* opt_c = bounds->add_option("--c", bound_c, "Host density constant");
    auto* opt_alpha = bounds->add_option("--alpha", bound_alpha, "Host density exponent");
    opt_k->excludes(opt_c)->excludes(opt_alpha);
    add_common(bounds, common);

    // plan
    long long plan_n = 0;
    double plan_c = 1.0, plan_alpha = 2.0;
    auto* plan = app.add_subcommand("plan", "Pick lift parameters for a vertex budget");
    plan->add_option("--n", plan_n, "Vertex budget")->required();
    plan->add_option("--c", plan_c, "Host density constant")->required();
    plan->add_option("--alpha", plan_alpha, "Host density exponent")->required();
    add_common(plan, common);

    // verify
    std::string verify_file, verify_witness;
    auto* verify = app.add_subcommand("verify", "Re-check a serialized cycle witness");
    verify->add_option("--witness", verify_witness, "Witness file")->required();
    verify->add_option("file", verify_file, "Triple-system file")->required();
    add_common(verify, common);

    CLI11_PARSE(app, argc, argv);

    try {
        apply_threads(common);
        if (c5->parsed()) return cmd_construct_c5free(common, s);
        if (lift->parsed()) return cmd_construct_lift(common, host_path, q);
        if (kbip->parsed()) return cmd_gen(common, linhg::gen_complete_bipartite(ka, kb));
        if (pg->parsed()) return cmd_gen(common, linhg::gen_projective_incidence(p));
        if (check->parsed()) return cmd_check(common, check_file, check_family);
        if (stats->parsed()) return cmd_stats(common, stats_file);
        if (claims->parsed()) return cmd_verify_claims(common, claims_file, context);
        if (search->parsed()) return cmd_search(common, search_n, search_family, oracle);
        if (bounds->parsed())
            return cmd_bounds(common, bound_n, bound_k, bound_c, bound_alpha, opt_k->count() > 0);
        if (plan->parsed()) return cmd_plan(common, plan_n, plan_c, plan_alpha);
        if (verify->parsed()) return cmd_verify(common, verify_file, verify_witness);
    } catch (const std::exception& e) {
        std::string what = e.what();
        std::cerr << "error: " << what << "\n";
        if (what.find("budget") != std::string::npos) return EXIT_BUDGET;
        return EXIT_USAGE;
    }
    return EXIT_USAGE;
}
