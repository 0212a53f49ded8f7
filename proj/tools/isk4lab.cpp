// isk4lab: structure laboratory for triangle-free graphs without induced
// K4 subdivisions.  Subcommands: analyze, decompose, color, verify, hunt, gen.
// Exit codes: 0 clean, 1 violations / counterexamples / out-of-class inputs,
// 2 usage or I/O errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "isk4/degree2.hpp"
#include "isk4/enumerate.hpp"
#include "isk4/graph6.hpp"
#include "isk4/recognition.hpp"
#include "isk4/suites.hpp"
#include "isk4/wheels.hpp"

using json = nlohmann::ordered_json;
using namespace isk4;

namespace {

struct GraphRecord {
    std::string id;
    Graph graph;
    std::string source;  // file:line
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string basename_of(const std::string& path) {
    auto slash = path.find_last_of('/');
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

// .g6 files hold one graph6 line per graph; anything else is an edge list.
std::vector<GraphRecord> load_graphs(const std::string& path) {
    std::string text = read_file(path);
    std::vector<GraphRecord> out;
    std::string base = basename_of(path);
    if (path.size() >= 3 && path.substr(path.size() - 3) == ".g6") {
        std::istringstream in(text);
        std::string line;
        int lineno = 0, k = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line == ">>graph6<<") continue;
            ++k;
            out.push_back({base + "#" + std::to_string(k), parse_graph6(line),
                           path + ":" + std::to_string(lineno)});
        }
    } else {
        out.push_back({base + "#1", parse_edgelist(text), path + ":1"});
    }
    if (out.empty()) throw Error("no graphs in " + path);
    return out;
}

json vertices_json(const std::vector<int>& vs) { return json(vs); }

json profile_json(const Graph& g, long long budget) {
    json w = json::object();
    auto tri = triangle_witness(g);
    w["triangle"] = tri ? vertices_json({(*tri)[0], (*tri)[1], (*tri)[2]}) : json(nullptr);
    auto isk = contains_isk4(g, budget);
    if (isk) {
        json paths = json::array();
        for (auto& p : isk->paths) paths.push_back(vertices_json(p));
        w["isk4"] = {{"branch_vertices", std::vector<int>(isk->branch_vertices.begin(),
                                                          isk->branch_vertices.end())},
                     {"paths", paths},
                     {"vertices", vertices_json(to_vertices(isk->vertex_set))}};
    } else {
        w["isk4"] = nullptr;
    }
    auto k33 = contains_k33(g);
    w["k33"] = k33 ? vertices_json(*k33) : json(nullptr);
    auto prism = contains_prism(g);
    w["prism"] = prism ? vertices_json(*prism) : json(nullptr);

    auto mp = multipartite_class(g);
    auto cs = chordless_status(g);
    auto gi = girth(g);
    json p = json::object();
    p["n"] = g.vertex_count();
    p["m"] = g.edge_count();
    p["triangle_free"] = !tri.has_value();
    p["isk4_free"] = !isk.has_value();
    p["k33_free"] = !k33.has_value();
    p["girth"] = gi ? json(*gi) : json(nullptr);
    p["series_parallel"] = is_series_parallel(g);
    p["complete_bipartite"] = mp.kind == MultipartiteResult::Kind::complete_bipartite;
    p["complete_tripartite"] = mp.kind == MultipartiteResult::Kind::complete_tripartite;
    if (mp.kind != MultipartiteResult::Kind::neither) {
        json parts = json::array();
        for (auto& part : mp.parts) parts.push_back(vertices_json(part));
        p["parts"] = parts;
    }
    p["chordless"] = cs.chordless;
    p["sparse"] = cs.sparse;
    p["witnesses"] = w;
    return p;
}

json cutset_json(const CutsetWitness& w) {
    json j = json::object();
    switch (w.kind) {
        case CutsetWitness::Kind::clique: j["kind"] = "clique"; break;
        case CutsetWitness::Kind::star: j["kind"] = "star"; break;
        case CutsetWitness::Kind::double_star: j["kind"] = "double_star"; break;
        case CutsetWitness::Kind::proper_two: j["kind"] = "proper_two"; break;
    }
    j["cutset"] = vertices_json(w.cutset);
    if (w.center >= 0) j["center"] = w.center;
    if (w.anchor[0] >= 0) j["anchor"] = std::vector<int>{w.anchor[0], w.anchor[1]};
    if (!w.side_x.empty()) {
        j["side_x"] = vertices_json(w.side_x);
        j["side_y"] = vertices_json(w.side_y);
    }
    json parts = json::array();
    for (auto& c : w.side_partition) parts.push_back(vertices_json(c));
    j["components"] = parts;
    return j;
}

json outcome_json(const Graph& g, const DecompositionOutcome& out) {
    json j = json::object();
    switch (out.tag) {
        case DecompositionOutcome::Tag::series_parallel:
            j["outcome"] = "series_parallel";
            break;
        case DecompositionOutcome::Tag::complete_bipartite: {
            j["outcome"] = "complete_bipartite";
            json parts = json::array();
            for (auto& p : out.bipartition) parts.push_back(vertices_json(p));
            j["parts"] = parts;
            break;
        }
        case DecompositionOutcome::Tag::clique_cutset:
            j["outcome"] = "clique_cutset";
            j["cutset"] = cutset_json(*out.cutset);
            break;
        case DecompositionOutcome::Tag::wheel_decomposition: {
            j["outcome"] = "wheel_decomposition";
            const auto& wd = *out.wheel;
            json sc = json::array();
            for (auto& s : wd.sector_cutsets) {
                json comps = json::array();
                for (auto& c : s.side_partition) comps.push_back(vertices_json(c));
                sc.push_back({{"cutset", vertices_json(s.cutset)}, {"components", comps}});
            }
            j["wheel"] = {{"hole", vertices_json(wd.wheel.hole.cycle)},
                          {"center", wd.wheel.center},
                          {"spokes", vertices_json(wd.wheel.spokes)},
                          {"sector_cutsets", sc}};
            break;
        }
    }
    j["verified"] = verify_decomposition(g, out);
    return j;
}

json violation_json(const Violation& v) {
    return {{"graph6", v.graph6}, {"predicate", v.predicate}, {"details", v.details}};
}

json report_json(const SuiteReport& rep) {
    json vs = json::array();
    for (auto& v : rep.violations) vs.push_back(violation_json(v));
    return {{"suite", rep.suite_id},
            {"graphs_scanned", rep.graphs_scanned},
            {"violations", vs},
            {"wall_seconds", rep.wall_seconds}};
}

void print_payload(const json& payload, const std::string& format) {
    if (format == "json") {
        std::cout << payload.dump(2) << "\n";
        return;
    }
    // text mode: same facts, flat rendering
    std::function<void(const json&, std::string)> walk = [&](const json& v, std::string prefix) {
        if (v.is_object()) {
            for (auto& [k, val] : v.items()) walk(val, prefix.empty() ? k : prefix + "." + k);
        } else if (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array())) {
            int i = 0;
            for (auto& val : v) walk(val, prefix + "[" + std::to_string(i++) + "]");
        } else {
            std::cout << prefix << " = " << v.dump() << "\n";
        }
    };
    walk(payload, "");
}

json record_header(const GraphRecord& r) {
    return {{"id", r.id}, {"source", r.source}, {"graph6", write_graph6(r.graph)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structure laboratory for triangle-free graphs with no induced K4 subdivision"};
    app.require_subcommand(1);

    std::string format = "text";
    long long budget = kDefaultIskBudget;
    int jobs = 1;
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--budget", budget, "node budget for exact ISK4 search");
    app.add_option("--jobs", jobs, "worker threads for verify/hunt")->check(CLI::PositiveNumber);

    std::string in_file, corpus_file, suite_id, conj;
    int n = -1;
    std::vector<std::string> filter_names;

    auto* analyze = app.add_subcommand("analyze", "class profile and witnesses per graph");
    analyze->add_option("file", in_file)->required();

    auto* decomp = app.add_subcommand("decompose", "decomposition outcome per graph");
    decomp->add_option("file", in_file)->required();

    auto* color = app.add_subcommand("color", "3-coloring or the out-of-class witness");
    color->add_option("file", in_file)->required();

    auto* verify = app.add_subcommand("verify", "run a falsification suite");
    verify->add_option("suite", suite_id)->required();
    verify->add_option("--n", n, "scan graphs up to this order");
    verify->add_option("--corpus", corpus_file, "graph6 corpus instead of enumeration");

    auto* hunt_cmd = app.add_subcommand("hunt", "hunt for conjecture counterexamples");
    hunt_cmd->add_option("conjecture", conj, "conj1 or conj2")->required();
    hunt_cmd->add_option("--n", n, "scan graphs up to this order")->required();

    auto* gen = app.add_subcommand("gen", "emit one graph6 line per class representative");
    gen->add_option("--n", n)->required();
    gen->add_option("--filter", filter_names, "comma-separated class filters")->delimiter(',');

    // global flags may trail the subcommand, e.g. `decompose k.g6 --format json`
    for (auto* sub : {analyze, decomp, color, verify, hunt_cmd, gen}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze || *decomp || *color) {
            auto records = load_graphs(in_file);
            json results = json::array();
            int exit_code = 0;
            for (const auto& r : records) {
                json item = record_header(r);
                if (*analyze) {
                    item["profile"] = profile_json(r.graph, budget);
                } else if (*decomp) {
                    try {
                        item["decomposition"] = outcome_json(r.graph, decompose(r.graph, budget));
                    } catch (const OutOfClassError& e) {
                        item["error"] = {{"type", "out_of_class"},
                                         {"predicate", e.predicate},
                                         {"witness", vertices_json(e.witness)}};
                        exit_code = 1;
                    }
                } else {
                    try {
                        Coloring c = three_color(r.graph, budget);
                        item["coloring"] = json(c.color);
                        item["proper"] = verify_coloring(r.graph, c);
                    } catch (const OutOfClassError& e) {
                        item["error"] = {{"type", "out_of_class"},
                                         {"predicate", e.predicate},
                                         {"witness", vertices_json(e.witness)}};
                        exit_code = 1;
                    } catch (const MissingLowDegreeVertexError& e) {
                        item["error"] = {{"type", "missing_low_degree_vertex"},
                                         {"graph6", e.graph6}};
                        exit_code = 1;
                    }
                }
                results.push_back(item);
            }
            json payload = {{"tool", "isk4lab"},
                            {"command", (*analyze) ? "analyze" : (*decomp) ? "decompose" : "color"},
                            {"results", results}};
            print_payload(payload, format);
            return exit_code;
        }

        if (*verify) {
            SuiteReport rep;
            if (!corpus_file.empty()) {
                auto corpus = parse_graph6_file(read_file(corpus_file));
                rep = run_suite_corpus(suite_id, corpus, jobs);
            } else {
                rep = run_suite(suite_id, n, jobs);
            }
            json payload = {{"tool", "isk4lab"}, {"command", "verify"}, {"report", report_json(rep)}};
            print_payload(payload, format);
            return rep.violations.empty() ? 0 : 1;
        }

        if (*hunt_cmd) {
            auto rep = hunt(conj, n, jobs);
            json payload = {{"tool", "isk4lab"}, {"command", "hunt"}, {"report", report_json(rep)}};
            print_payload(payload, format);
            return rep.violations.empty() ? 0 : 1;
        }

        if (*gen) {
            std::vector<Filter> filters;
            for (const auto& name : filter_names) filters.push_back(standard_filter(name));
            for (const Graph& g : enumerate_graphs(n, filters)) std::cout << write_graph6(g) << "\n";
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
