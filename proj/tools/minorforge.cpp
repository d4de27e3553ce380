#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "minorforge/acceptance.hpp"
#include "minorforge/assembly.hpp"
#include "minorforge/config.hpp"
#include "minorforge/constructions.hpp"
#include "minorforge/decomposition.hpp"
#include "minorforge/density.hpp"
#include "minorforge/embedding.hpp"
#include "minorforge/enumeration.hpp"
#include "minorforge/errors.hpp"
#include "minorforge/graph6.hpp"
#include "minorforge/json_io.hpp"
#include "minorforge/separation.hpp"

using namespace minorforge;
using nlohmann::json;

namespace {

// Exit codes: 0 ok, 1 negative verdict under --strict, 2 input error,
// 3 budget exceeded.
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

Graph load_graph(const std::string& arg) {
    std::string text;
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(arg);
        if (!in) throw std::runtime_error("cannot open " + arg);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    // JSON documents may span lines; graph6 records are one per line.
    auto first_printable = text.find_first_not_of(" \t\r\n");
    if (first_printable == std::string::npos) throw std::runtime_error("no graph found in " + arg);
    if (text[first_printable] == '{') return graph_from_json(json::parse(text));
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) return from_graph6(line);
    }
    throw std::runtime_error("no graph found in " + arg);
}

std::vector<int> parse_vertex_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// Certifies a no-minor (or minor) claim with both oracles when the host is
// within the exact-search cap.
json minor_check(const std::string& name, const Graph& pattern, const Graph& host) {
    json j;
    j["pattern"] = name;
    if (host.n > Config::global().minor_cap) {
        j["verdict"] = "skipped (host above cap)";
        return j;
    }
    bool bb = test_minor(pattern, host).has_value();
    bool rec = test_minor_oracle2(pattern, host);
    j["verdict"] = bb ? "found" : "absent";
    j["oracle_agreement"] = (bb == rec);
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minorforge: exact desk-scale toolkit for graph minors, separations and "
                 "extremal constructions"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string config_path;
    uint64_t seed = 0;
    int cap = 0, jobs = 0;
    app.add_option("--config", config_path, "key=value config file");
    app.add_option("--seed", seed, "global random seed");
    app.add_option("--cap", cap, "minor search cap (overrides config and MINORFORGE_CAP)");
    app.add_option("--jobs", jobs, "worker thread cap (search kernels run deterministically)");
    bool strict = false;
    app.add_flag("--strict", strict, "exit 1 on negative verdicts");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph family member");
    std::string family;
    gen->add_option("family", family,
                    "complete|complete-bipartite|complete-multipartite|path|cycle|petersen|"
                    "disjoint-union|complement|gnp|regular-high-girth|kst-blocker|sk7-blocker|"
                    "sktt-blocker|bipartite-expand")
        ->required();
    int p_s = 1, p_t = 1, p_k = 1, p_n = 0, p_d = 3, p_girth = 4, p_delta = 3;
    double p_p = 0.5;
    std::string parts_str, input_arg;
    std::vector<std::string> input_list;
    bool as_json = false;
    gen->add_option("--s", p_s);
    gen->add_option("--t", p_t);
    gen->add_option("--k", p_k);
    gen->add_option("--n", p_n);
    gen->add_option("--d", p_d);
    gen->add_option("--girth", p_girth);
    gen->add_option("--delta", p_delta);
    gen->add_option("--p", p_p);
    gen->add_option("--parts", parts_str, "comma-separated part sizes");
    gen->add_option("--input", input_arg, "input graph (file or '-') for complement/expand");
    gen->add_option("--inputs", input_list, "input graphs for disjoint-union");
    gen->add_flag("--json", as_json, "emit the construction certificate as JSON");

    // minor
    auto* minor = app.add_subcommand("minor", "exact minor test with oracle cross-check");
    std::string minor_h, minor_g, oracle = "both";
    minor->add_option("H", minor_h)->required();
    minor->add_option("G", minor_g)->required();
    minor->add_option("--oracle", oracle, "both|bb|recursive");

    // densepair
    auto* densepair = app.add_subcommand("densepair", "constructive dense pair extraction");
    std::string dp_g;
    int dp_k = 1;
    densepair->add_option("G", dp_g)->required();
    densepair->add_option("--k", dp_k)->required();

    // menger
    auto* menger = app.add_subcommand("menger", "disjoint paths or a small separation");
    std::string mg_g, mg_u, mg_w;
    int mg_l = 1;
    menger->add_option("G", mg_g)->required();
    menger->add_option("--U", mg_u)->required();
    menger->add_option("--W", mg_w)->required();
    menger->add_option("--l", mg_l)->required();

    // embed
    auto* embed = app.add_subcommand("embed", "Hall-based bipartite subgraph embedding");
    std::string em_h, em_g, em_x;
    int em_delta = 0;
    embed->add_option("H", em_h)->required();
    embed->add_option("G", em_g)->required();
    embed->add_option("--X", em_x, "comma-separated exceptional vertices");
    embed->add_option("--delta", em_delta, "degree bound (defaults to max degree of H)");

    // decompose / expand
    auto* decompose = app.add_subcommand("decompose", "C-bounded decomposition");
    std::string dc_h;
    int dc_c = 3;
    decompose->add_option("H", dc_h)->required();
    decompose->add_option("--C", dc_c)->required();
    auto* expand = app.add_subcommand("expand", "decompose, then expand to bounded components");
    std::string ex_h;
    int ex_c = 3;
    expand->add_option("H", ex_h)->required();
    expand->add_option("--C", ex_c)->required();

    // density-run
    auto* density = app.add_subcommand("density-run", "pruning plus the K-piece iteration");
    std::string dr_g;
    int dr_d = 1, dr_k = 1;
    std::string dr_eps = "0.05", dr_gamma = "0.2";
    density->add_option("G", dr_g)->required();
    density->add_option("--D", dr_d)->required();
    density->add_option("--K", dr_k)->required();
    density->add_option("--eps", dr_eps);
    density->add_option("--gamma", dr_gamma);

    // assemble
    auto* assemble = app.add_subcommand("assemble", "minor-from-pieces assembly from a JSON spec");
    std::string as_spec;
    bool as_pipeline = false;
    assemble->add_option("spec", as_spec, "JSON file: {h, F, pieces, G, hosts, best_effort}")
        ->required();
    assemble->add_flag("--pipeline", as_pipeline, "shrink hosts to dense cores first");

    // ha-falsify
    auto* haf = app.add_subcommand("ha-falsify", "search for a degeneracy counterexample");
    std::string hf_h, hf_source = "all", hf_corpus;
    int hf_max = 8;
    haf->add_option("H", hf_h)->required();
    haf->add_option("--max-n", hf_max);
    haf->add_option("--source", hf_source, "all|constructions");
    haf->add_option("--corpus", hf_corpus, "graph6 file of candidate hosts");

    // accept
    auto* accept = app.add_subcommand("accept", "run the certification battery");
    bool quick = false;
    accept->add_flag("--quick", quick, "reduced battery");

    CLI11_PARSE(app, argc, argv);

    try {
        Config& cfg = Config::global();
        if (!config_path.empty()) cfg.load_file(config_path);
        cfg.apply_env();
        if (seed != 0) cfg.seed = seed;
        if (cap != 0) cfg.minor_cap = cap;
        if (jobs != 0) cfg.jobs = jobs;

        if (gen->parsed()) {
            json cert;
            Graph out;
            if (family == "complete") out = complete(p_t);
            else if (family == "complete-bipartite") out = complete_bipartite(p_s, p_t);
            else if (family == "complete-multipartite")
                out = complete_multipartite(parse_vertex_list(parts_str));
            else if (family == "path") out = path_graph(p_n);
            else if (family == "cycle") out = cycle_graph(p_n);
            else if (family == "petersen") out = petersen();
            else if (family == "disjoint-union") {
                std::vector<Graph> parts;
                for (const auto& path : input_list) parts.push_back(load_graph(path));
                out = disjoint_union(parts);
            } else if (family == "complement") out = complement(load_graph(input_arg));
            else if (family == "gnp") {
                std::mt19937_64 rng(cfg.seed);
                out = random_gnp(p_n, p_p, rng);
            } else if (family == "regular-high-girth")
                out = regular_high_girth(p_d, p_girth, p_n, cfg.seed);
            else if (family == "kst-blocker") {
                KstBlocker b = construct_kst_blocker(p_s, p_t, cfg.seed);
                out = b.graph;
                cert["claimed_bounds"] = {{"delta_at_least", b.delta_target}};
                cert["recomputed_bounds"] = {{"delta", b.delta_recomputed},
                                             {"girth_core_exceeds", b.girth_required}};
                cert["regime_ok"] = b.regime_ok;
                if (as_json)
                    cert["minor_checks"] = {minor_check(
                        "K_{" + std::to_string(p_s) + "," + std::to_string(p_t) + "}",
                        complete_bipartite(p_s, p_t), out)};
            } else if (family == "sk7-blocker") {
                Sk7Blocker b = construct_sk7_blocker(p_s);
                out = b.graph;
                cert["claimed_bounds"] = {{"delta_at_least", b.delta_target.to_double()}};
                cert["recomputed_bounds"] = {{"delta", b.delta_recomputed}};
                if (as_json)
                    cert["minor_checks"] = {minor_check("K_7", complete(7), out),
                                            minor_check("K_6", complete(6), out)};
            } else if (family == "sktt-blocker") {
                SkttBlocker b = construct_sktt_blocker(p_s, p_t, p_k);
                out = b.graph;
                cert["recomputed_bounds"] = {{"e", b.graph.m}, {"e_closed_form", b.e_closed_form},
                                             {"v", b.graph.n}, {"v_closed_form", b.v_closed_form}};
                if (as_json) {
                    std::vector<Graph> copies(p_s, complete_bipartite(p_t, p_t));
                    cert["minor_checks"] = {minor_check(std::to_string(p_s) + "K_{" +
                                                            std::to_string(p_t) + "," +
                                                            std::to_string(p_t) + "}",
                                                        disjoint_union(copies), out)};
                }
            } else if (family == "bipartite-expand") {
                BipartiteExpansion b = bipartite_expand(load_graph(input_arg), p_delta);
                out = b.graph;
                cert["recomputed_bounds"] = {{"v", b.graph.n},
                                             {"size_bound", b.size_bound},
                                             {"equality", b.bound_is_equality}};
                cert["witness_verified"] = bool(verify_model(b.witness));
            } else {
                std::cerr << "unknown family: " << family << "\n";
                return kExitInput;
            }
            if (as_json) {
                cert["graph"] = graph_to_json(out);
                emit(cert);
            } else {
                std::cout << to_graph6(out) << "\n";
            }
            return kExitOk;
        }

        if (minor->parsed()) {
            Graph h = load_graph(minor_h);
            Graph g = load_graph(minor_g);
            json j;
            std::optional<MinorModel> model;
            bool bb_run = (oracle == "both" || oracle == "bb");
            bool rec_run = (oracle == "both" || oracle == "recursive");
            bool bb = false, rec = false;
            if (bb_run && rec_run && cfg.jobs > 1) {
                std::thread worker([&] { rec = test_minor_oracle2(h, g); });
                model = test_minor(h, g);
                bb = model.has_value();
                worker.join();
            } else {
                if (bb_run) {
                    model = test_minor(h, g);
                    bb = model.has_value();
                }
                if (rec_run) rec = test_minor_oracle2(h, g);
            }
            bool verdict = bb_run ? bb : rec;
            j["verdict"] = verdict ? "found" : "absent";
            if (bb_run && rec_run) j["oracle_agreement"] = (bb == rec);
            if (model) {
                j["model"] = model_to_json(*model);
                j["model_verified"] = bool(verify_model(*model));
            }
            emit(j);
            if (bb_run && rec_run && bb != rec) return kExitInput;
            return (strict && !verdict) ? kExitNegative : kExitOk;
        }

        if (densepair->parsed()) {
            Graph g = load_graph(dp_g);
            ExtractedDensePair p = extract_dense_pair(g, dp_k);
            json j;
            j["g_prime"] = graph_to_json(p.sub.graph);
            json orig = json::array();
            for (int v : p.sub.new_to_old) orig.push_back(v);
            j["g_prime_original_ids"] = orig;
            j["X"] = vertex_set_to_json(p.x);
            j["dense_for"] = {{"d", stats(g).min_degree}, {"k", dp_k}};
            emit(j);
            return kExitOk;
        }

        if (menger->parsed()) {
            Graph g = load_graph(mg_g);
            VertexSet u = VertexSet::of(g.n, parse_vertex_list(mg_u));
            VertexSet w = VertexSet::of(g.n, parse_vertex_list(mg_w));
            MengerResult r = menger_paths(g, u, w, mg_l);
            json j;
            if (r.separation) {
                j["separation"] = separation_to_json(*r.separation);
            } else {
                j["paths"] = r.paths;
            }
            emit(j);
            return (strict && r.separation) ? kExitNegative : kExitOk;
        }

        if (embed->parsed()) {
            Graph h = load_graph(em_h);
            Graph g = load_graph(em_g);
            VertexSet x = VertexSet::of(g.n, parse_vertex_list(em_x));
            int dd = em_delta > 0 ? em_delta : std::max(1, stats(h).max_degree);
            std::vector<int> phi = hall_embed(h, dd, g, x);
            json j;
            j["embedding"] = phi;
            emit(j);
            return kExitOk;
        }

        if (decompose->parsed()) {
            Graph h = load_graph(dc_h);
            Decomposition d = bounded_decomposition(h, dc_c);
            json bags = json::array();
            for (const auto& b : d.bags) bags.push_back(vertex_set_to_json(b));
            json j;
            j["bags"] = bags;
            j["C"] = d.C;
            j["excess"] = decomposition_excess(d, h);
            emit(j);
            return kExitOk;
        }

        if (expand->parsed()) {
            Graph h = load_graph(ex_h);
            Decomposition d = bounded_decomposition(h, ex_c);
            ExpansionResult r = expand_for_component_size(h, d);
            json j;
            j["h_prime"] = graph_to_json(r.h_prime);
            json f = json::array();
            for (auto [u, v] : r.f_edges) f.push_back({u, v});
            j["F"] = f;
            json cm;
            for (int v = 0; v < r.h_prime.n; ++v)
                cm[std::to_string(v)] = {{"bag", r.bag_of[v]}, {"copies", r.orig_vertex[v]}};
            j["component_map"] = cm;
            j["excess"] = decomposition_excess(d, h);
            j["witness_verified"] = bool(verify_model(r.contraction_witness));
            emit(j);
            return kExitOk;
        }

        if (density->parsed()) {
            Graph g = load_graph(dr_g);
            ExtractResult r = extract_pieces(g, dr_d, dr_k, Rational::parse(dr_eps),
                                             Rational::parse(dr_gamma));
            json rows = json::array();
            for (const RoundInfo& row : r.ledger)
                rows.push_back({{"round", row.round},
                                {"v", row.v},
                                {"e", row.e},
                                {"density", row.density.to_string()},
                                {"action", row.action},
                                {"bounds_ok", row.bounds_ok},
                                {"note", row.note}});
            json j;
            j["ledger"] = rows;
            switch (r.outcome.tag) {
                case IncrementOutcome::Tag::Pieces: {
                    j["outcome"] = "pieces";
                    json ps = json::array();
                    for (const Piece& p : r.outcome.pieces)
                        ps.push_back({{"vertices", vertex_set_to_json(p.host_vertices)},
                                      {"v", p.subgraph.n},
                                      {"density", p.density.to_string()}});
                    j["pieces"] = ps;
                    break;
                }
                case IncrementOutcome::Tag::DenserMinor:
                    j["outcome"] = "denser-minor";
                    j["model"] = model_to_json(*r.outcome.minor_model);
                    j["claimed_density"] = r.outcome.claimed_density.to_string();
                    break;
                case IncrementOutcome::Tag::Inconclusive:
                    j["outcome"] = "inconclusive";
                    j["reason"] = r.outcome.reason;
                    break;
            }
            emit(j);
            return kExitOk;
        }

        if (assemble->parsed()) {
            std::ifstream in(as_spec);
            if (!in) throw std::runtime_error("cannot open " + as_spec);
            json sj = json::parse(in);
            PieceAssemblySpec spec;
            spec.h = graph_from_json(sj.at("h"));
            for (const auto& e : sj.at("F"))
                spec.f_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
            for (const auto& p : sj.at("pieces")) spec.pieces.push_back(p.get<std::vector<int>>());
            for (const auto& hh : sj.at("hosts")) spec.hosts.push_back(hh.get<std::vector<int>>());
            spec.best_effort = sj.value("best_effort", false);
            Graph g = graph_from_json(sj.at("G"));
            AssemblyOutcome out =
                as_pipeline ? assemble_via_dense_cores(spec, g) : assemble_minor_from_pieces(spec, g);
            json j;
            j["trace"] = out.trace;
            if (out.model) {
                j["model"] = model_to_json(*out.model);
                j["model_verified"] = bool(verify_model(*out.model));
            } else {
                j["failure"] = out.note;
            }
            emit(j);
            return out.model ? kExitOk : (strict ? kExitNegative : kExitOk);
        }

        if (haf->parsed()) {
            Graph h = load_graph(hf_h);
            FalsifySource src = hf_source == "constructions" ? FalsifySource::ConstructionsOnly
                                                             : FalsifySource::AllSmallGraphs;
            std::vector<Graph> corpus;
            FalsifyResult r;
            if (!hf_corpus.empty()) {
                corpus = read_graph6_file(hf_corpus);
                r = ha_falsify(h, hf_max, src, &corpus);
            } else {
                r = ha_falsify(h, hf_max, src);
            }
            json j;
            j["candidates_checked"] = r.candidates_checked;
            if (r.counterexample) {
                j["counterexample"] = graph_to_json(*r.counterexample);
                j["counterexample_graph6"] = to_graph6(*r.counterexample);
                j["min_degree"] = stats(*r.counterexample).min_degree;
            }
            emit(j);
            return kExitOk;
        }

        if (accept->parsed()) {
            bool ok = run_acceptance(quick, std::cout);
            return ok ? kExitOk : kExitNegative;
        }
    } catch (const BudgetExceededError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const DensityPreconditionFailed& e) {
        json j;
        j["failure"] = e.what();
        j["witness"] = separation_to_json(e.witness);
        emit(j);
        return kExitNegative;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
