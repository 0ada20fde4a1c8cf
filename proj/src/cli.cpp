#include "evec/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "evec/bounds.hpp"
#include "evec/dim2.hpp"
#include "evec/errors.hpp"
#include "evec/instance.hpp"

namespace evec {

namespace {

using nlohmann::json;

std::string vec_str(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

json arcs_json(const Digraph& d) {
    json a = json::array();
    for (const auto& [u, v] : d.arcs()) a.push_back({u, v});
    return a;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

InstanceFile load_instance(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw parse_error("cannot open '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return parse_instance(text);
}

Ranking parse_rank_list(const std::string& text) {
    Ranking g;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string token = text.substr(
            pos, comma == std::string::npos ? text.size() - pos : comma - pos);
        while (!token.empty() && token.front() == ' ') token.erase(token.begin());
        while (!token.empty() && token.back() == ' ') token.pop_back();
        if (token.empty())
            throw parse_error("empty entry in rank list '" + text + "'");
        try {
            g.ranks.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw parse_error("expected an integer in rank list, got '" + token + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return g;
}

struct ReportBuilder {
    json m;
    std::string h;

    void line(const std::string& s) { h += s + "\n"; }
};

void describe_instance(ReportBuilder& r, const InstanceFile& inst) {
    if (inst.name) {
        r.m["name"] = *inst.name;
        r.line("instance: " + *inst.name);
    }
    r.m["n"] = inst.graph.vertex_count();
    r.m["arc_count"] = inst.graph.arc_count();
    r.line("n: " + std::to_string(inst.graph.vertex_count()) +
           "   arcs: " + std::to_string(inst.graph.arc_count()));
}

int cmd_analyze(const InstanceFile& inst, ReportBuilder& r) {
    const Digraph& d = inst.graph;
    r.m["command"] = "analyze";
    describe_instance(r, inst);
    r.m["arcs"] = arcs_json(d);

    const auto e = e_vector(d);
    const long long ee = inner_product(e, e);
    r.m["acyclic"] = d.is_acyclic();
    r.m["transitive"] = is_transitive(d);
    r.m["e_vector"] = e;
    r.m["ee"] = ee;
    r.m["floor"] = ee / 2;
    r.line("acyclic: " + yesno(d.is_acyclic()));
    r.line("transitive: " + yesno(is_transitive(d)));
    r.line("e-vector: " + vec_str(e));
    r.line("<e,e>: " + std::to_string(ee) + "   floor: " + std::to_string(ee / 2));

    if (d.is_acyclic()) {
        const Ranking g = some_topological_ordering(d);
        const auto rep = bound_report(d, g);
        r.m["ordering"] = g.ranks;
        r.m["eg"] = rep.eg;
        r.m["gap2"] = rep.gap2;
        r.m["floor_attained"] = rep.attains_floor();
        r.line("ordering (lex-first): " + vec_str(g.ranks));
        r.line("<e,g>: " + std::to_string(rep.eg) + "   gap2: " +
               std::to_string(rep.gap2) + "   floor attained: " +
               yesno(rep.attains_floor()));
    }
    return 0;
}

int cmd_check(const InstanceFile& inst, const std::string& ordering, ReportBuilder& r) {
    const Digraph& d = inst.graph;
    r.m["command"] = "check";
    describe_instance(r, inst);
    const Ranking g = parse_rank_list(ordering);
    r.m["ordering"] = g.ranks;
    r.line("ordering: " + vec_str(g.ranks));

    const bool valid = validate_ordering(d, g);
    r.m["valid"] = valid;
    if (!valid) {
        std::string reason = "not a bijection onto [1..n]";
        if (g.is_permutation()) {
            for (const auto& [u, v] : d.arcs()) {
                if (g.ranks[u] >= g.ranks[v]) {
                    reason = "arc (" + std::to_string(u) + "," + std::to_string(v) +
                             "): rank " + std::to_string(g.ranks[u]) + " >= rank " +
                             std::to_string(g.ranks[v]);
                    break;
                }
            }
        }
        r.m["reason"] = reason;
        r.line("valid: no   (" + reason + ")");
        return 2;
    }
    r.line("valid: yes");

    const auto rep = bound_report(d, g);
    r.m["eg"] = rep.eg;
    r.m["ee"] = rep.ee;
    r.m["gap2"] = rep.gap2;
    r.m["floor_attained"] = rep.attains_floor();
    r.line("<e,g>: " + std::to_string(rep.eg) + "   <e,e>: " + std::to_string(rep.ee) +
           "   gap2: " + std::to_string(rep.gap2) + "   floor attained: " +
           yesno(rep.attains_floor()));
    if (d.arc_count() > 0) {
        const Rational avg = average_relational_distance(d, g);
        r.m["average_relational_distance"] = {
            {"num", avg.num}, {"den", avg.den}, {"text", avg.str()}};
        r.line("average relational distance: " + avg.str());
    }
    return 0;
}

int cmd_minimize(const InstanceFile& inst, bool exhaustive, const SearchOptions& opts,
                 ReportBuilder& r) {
    const Digraph& d = inst.graph;
    r.m["command"] = "minimize";
    describe_instance(r, inst);
    const SearchResult sr =
        exhaustive ? minimize_eg_exhaustive(d, opts) : minimize_eg_bnb(d, opts);
    const auto e = e_vector(d);
    const long long ee = inner_product(e, e);

    r.m["method"] = exhaustive ? "exhaustive" : "bnb";
    r.m["min_eg"] = sr.min_eg;
    r.m["argmin"] = sr.argmin.ranks;
    r.m["explored"] = sr.explored;
    r.m["proven_optimal"] = sr.proven_optimal;
    r.m["ee"] = ee;
    r.m["floor"] = ee / 2;
    r.m["floor_attained"] = 2 * sr.min_eg == ee;
    r.line(std::string("method: ") + (exhaustive ? "exhaustive" : "bnb"));
    r.line("min <e,g>: " + std::to_string(sr.min_eg) + "   floor: " +
           std::to_string(ee / 2) + "   floor attained: " +
           yesno(2 * sr.min_eg == ee));
    r.line("argmin: " + vec_str(sr.argmin.ranks));
    r.line("explored nodes: " + std::to_string(sr.explored));
    r.line("proven optimal: " + yesno(sr.proven_optimal));
    return 0;
}

int cmd_certify(const InstanceFile& inst, const CertifyOptions& opts, bool verbose,
                ReportBuilder& r) {
    const Digraph& d = inst.graph;
    r.m["command"] = "certify";
    describe_instance(r, inst);
    const CertificationOutcome outcome = certify_dimension_two(d, opts);
    r.m["as_is"] = opts.as_is;
    r.m["floor"] = outcome.floor;
    r.m["explored"] = outcome.explored;
    if (outcome.min_eg) r.m["min_eg"] = *outcome.min_eg;

    switch (outcome.verdict) {
        case Dim2Verdict::certified_dim2: {
            const Dim2Certificate& cert = *outcome.certificate;
            r.m["verdict"] = "certified_dim2";
            r.m["g"] = cert.g.ranks;
            r.m["f"] = cert.f.ranks;
            r.m["reconstructed_arcs"] = arcs_json(cert.reconstructed);
            r.m["checks"] = {{"f_is_bijection", cert.f_is_bijection},
                             {"f_is_acyclic_ordering", cert.f_is_acyclic_ordering},
                             {"intersection_matches", cert.intersection_matches},
                             {"realizer_identity_holds", cert.realizer_identity_holds}};
            r.line("verdict: dimension at most 2 (certified)");
            r.line("g: " + vec_str(cert.g.ranks));
            r.line("f: " + vec_str(cert.f.ranks));
            r.line("checks: bijection " + yesno(cert.f_is_bijection) +
                   ", acyclic ordering " + yesno(cert.f_is_acyclic_ordering) +
                   ", intersection matches " + yesno(cert.intersection_matches) +
                   ", realizer identity " + yesno(cert.realizer_identity_holds));
            r.line("min <e,g>: " + std::to_string(*outcome.min_eg) + "   floor: " +
                   std::to_string(outcome.floor));
            if (verbose) {
                // Every equality ordering, not just the emitted one.
                const Digraph closed = opts.as_is ? d : transitive_closure(d);
                json all = json::array();
                r.line("equality orderings:");
                for_each_acyclic_ordering(closed, [&](const Ranking& g) {
                    if (bound_report(closed, g).gap2 == 0) {
                        all.push_back(g.ranks);
                        r.line("  " + vec_str(g.ranks));
                    }
                    return true;
                });
                r.m["equality_orderings"] = all;
            }
            break;
        }
        case Dim2Verdict::not_dim2:
            r.m["verdict"] = "not_dim2";
            r.line("verdict: not dimension at most 2");
            r.line("min <e,g>: " + std::to_string(*outcome.min_eg) + "   floor: " +
                   std::to_string(outcome.floor));
            break;
        case Dim2Verdict::not_a_poset:
            r.m["verdict"] = "not_a_poset";
            r.line("verdict: not a poset (input is not transitively closed)");
            break;
        case Dim2Verdict::undecided:
            r.m["verdict"] = "undecided";
            r.line("verdict: undecided (node budget exhausted)");
            break;
    }
    return 0;
}

int cmd_oracle(const InstanceFile& inst, int cap, ReportBuilder& r) {
    r.m["command"] = "oracle";
    describe_instance(r, inst);
    const OracleResult res = brute_force_dim2_oracle(inst.graph, cap);
    r.m["realizable"] = res.realizable;
    r.m["pairs_checked"] = res.pairs_checked;
    r.line("realizable by two orderings: " + yesno(res.realizable));
    if (res.witness) {
        r.m["witness_f"] = res.witness->first.ranks;
        r.m["witness_g"] = res.witness->second.ranks;
        r.line("witness f: " + vec_str(res.witness->first.ranks));
        r.line("witness g: " + vec_str(res.witness->second.ranks));
    }
    r.line("pairs checked: " + std::to_string(res.pairs_checked));
    return 0;
}

int cmd_enumerate(const InstanceFile& inst, std::optional<long long> max_count,
                  ReportBuilder& r) {
    r.m["command"] = "enumerate";
    describe_instance(r, inst);
    const EnumerationResult res = enumerate_orderings(inst.graph, max_count);
    json all = json::array();
    for (const Ranking& g : res.orderings) {
        all.push_back(g.ranks);
        r.line(vec_str(g.ranks));
    }
    r.m["orderings"] = all;
    r.m["count"] = res.orderings.size();
    r.m["truncated"] = res.truncated;
    r.line("count: " + std::to_string(res.orderings.size()) +
           (res.truncated ? " (truncated)" : ""));
    return 0;
}

int cmd_gen(const std::string& family, const GenParams& params,
            const std::string& output, ReportBuilder& r) {
    const InstanceFile inst = generate(family, params);
    const std::string text = serialize_instance(inst);
    r.m["command"] = "gen";
    r.m["family"] = family;
    r.m["name"] = *inst.name;
    r.m["n"] = inst.graph.vertex_count();
    r.m["arc_count"] = inst.graph.arc_count();
    r.m["text"] = text;
    if (output.empty()) {
        r.h = text;  // plain instance text, pipeable into the other commands
    } else {
        std::ofstream out(output);
        if (!out) throw input_error("cannot write '" + output + "'");
        out << text;
        r.m["output"] = output;
        r.line("wrote " + output + " (" + *inst.name + ")");
    }
    return 0;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args, std::ostream& out,
                          std::ostream& err) {
    CLI::App app{"acyclic digraph orderings: e-vector bounds and dimension-two certificates"};
    app.name("evec");
    app.require_subcommand(1);
    bool json_mode = false, quiet = false, verbose = false;
    app.add_flag("--json", json_mode, "print the machine-readable report");
    app.add_flag("--quiet", quiet, "suppress the report");
    app.add_flag("--verbose", verbose, "extra detail (certify lists every equality ordering)");

    std::string file;
    std::string ordering;
    bool exhaustive = false, bnb = false, as_is = false;
    long long budget = -1;
    int exhaustive_cap = 12;
    int oracle_cap = 7;
    long long max_count = -1;
    std::string family, output;
    GenParams params;

    auto* analyze = app.add_subcommand("analyze", "e-vector, inner products and structure flags");
    analyze->add_option("file", file, "instance file ('-' for stdin)")->required();

    auto* check = app.add_subcommand("check", "validate an ordering and report its bound");
    check->add_option("file", file, "instance file ('-' for stdin)")->required();
    check->add_option("--ordering", ordering, "comma-separated ranks, vertex 0 first")
        ->required();

    auto* minimize = app.add_subcommand("minimize", "minimize <e,g> over all acyclic orderings");
    minimize->add_option("file", file, "instance file ('-' for stdin)")->required();
    minimize->add_flag("--exhaustive", exhaustive, "full enumeration (capped)");
    minimize->add_flag("--bnb", bnb, "branch and bound (default)");
    minimize->add_option("--budget", budget, "node budget for --bnb");
    minimize->add_option("--cap", exhaustive_cap, "size cap for --exhaustive")
        ->capture_default_str();

    auto* certify = app.add_subcommand("certify", "certify order dimension at most two");
    certify->add_option("file", file, "instance file ('-' for stdin)")->required();
    certify->add_flag("--as-is", as_is, "certify the literal digraph without closing it");

    auto* oracle = app.add_subcommand("oracle", "exhaustive realizer search (small n)");
    oracle->add_option("file", file, "instance file ('-' for stdin)")->required();
    oracle->add_option("--cap", oracle_cap, "size cap")->capture_default_str();

    auto* enumerate = app.add_subcommand("enumerate", "list every acyclic ordering");
    enumerate->add_option("file", file, "instance file ('-' for stdin)")->required();
    enumerate->add_option("--max", max_count, "stop after this many orderings");

    auto* gen = app.add_subcommand("gen", "write an instance from a named family");
    gen->add_option("family", family,
                    "path | total_order | antichain | standard_example | random_dag | figure1")
        ->required();
    gen->add_option("--n", params.n, "vertex count (k for standard_example)");
    gen->add_option("--p", params.p, "arc probability for random_dag")
        ->capture_default_str();
    gen->add_option("--seed", params.seed, "seed for random_dag")->capture_default_str();
    gen->add_option("-o,--output", output, "write to a file instead of stdout");

    for (auto* sub : {analyze, check, minimize, certify, oracle, enumerate, gen})
        sub->fallthrough();

    CommandResult result;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        result.exit_code = 0;
        return result;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        result.exit_code = 1;
        return result;
    }

    ReportBuilder r;
    try {
        if (exhaustive && bnb)
            throw input_error("--exhaustive and --bnb are mutually exclusive");
        SearchOptions sopts;
        sopts.exhaustive_cap = exhaustive_cap;
        if (budget >= 0) sopts.node_budget = budget;

        if (app.got_subcommand(analyze)) {
            result.exit_code = cmd_analyze(load_instance(file), r);
        } else if (app.got_subcommand(check)) {
            result.exit_code = cmd_check(load_instance(file), ordering, r);
        } else if (app.got_subcommand(minimize)) {
            result.exit_code = cmd_minimize(load_instance(file), exhaustive, sopts, r);
        } else if (app.got_subcommand(certify)) {
            CertifyOptions copts;
            copts.as_is = as_is;
            result.exit_code = cmd_certify(load_instance(file), copts, verbose, r);
        } else if (app.got_subcommand(oracle)) {
            result.exit_code = cmd_oracle(load_instance(file), oracle_cap, r);
        } else if (app.got_subcommand(enumerate)) {
            std::optional<long long> max;
            if (max_count >= 0) max = max_count;
            result.exit_code = cmd_enumerate(load_instance(file), max, r);
        } else if (app.got_subcommand(gen)) {
            result.exit_code = cmd_gen(family, params, output, r);
        }
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        r.m = {{"error", e.what()}};
        r.h.clear();
        result.exit_code = 1;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        r.m = {{"error", e.what()}};
        r.h.clear();
        result.exit_code = 2;
    } catch (const property_violation& e) {
        err << "internal invariant violated: " << e.what() << "\n";
        r.m = {{"error", e.what()}};
        r.h.clear();
        result.exit_code = 3;
    }

    result.machine = std::move(r.m);
    result.human = std::move(r.h);
    if (!quiet) {
        if (json_mode)
            out << result.machine.dump(2) << "\n";
        else
            out << result.human;
    }
    return result;
}

}  // namespace evec
