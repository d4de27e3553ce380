#include "minorforge/acceptance.hpp"

#include <random>
#include <sstream>
#include <vector>

#include "minorforge/assembly.hpp"
#include "minorforge/canonical.hpp"
#include "minorforge/constructions.hpp"
#include "minorforge/decomposition.hpp"
#include "minorforge/density.hpp"
#include "minorforge/embedding.hpp"
#include "minorforge/errors.hpp"
#include "minorforge/separation.hpp"

namespace minorforge {

namespace {

constexpr uint64_t kSeed = 20240601;

std::vector<Graph> seeded_corpus(int max_n, int count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    out.push_back(path_graph(9));
    out.push_back(cycle_graph(8));
    out.push_back(complete(5));
    out.push_back(petersen());
    out.push_back(complete_bipartite(3, 4));
    out.push_back(build_graph(9, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8}, {0, 3}, {3, 6},
                                  {1, 4}, {4, 7}, {2, 5}, {5, 8}}, "grid3x3"));
    std::uniform_int_distribution<int> nd(1, max_n);
    std::uniform_real_distribution<double> pd(0.1, 0.8);
    while ((int)out.size() < count) {
        Graph g = random_gnp(nd(rng), pd(rng), rng);
        if (g.n > 0) out.push_back(g);
    }
    return out;
}

struct Criterion {
    int id;
    std::string name;
    bool pass = true;
    std::string detail;
};

void c1_oracle_equivalence(Criterion& c, bool quick) {
    // Fixed fixtures first.
    auto k5p = test_minor(complete(5), petersen());
    if (!k5p || !verify_model(*k5p)) {
        c.pass = false;
        c.detail = "K5 in Petersen not found";
        return;
    }
    if (test_minor(complete(6), petersen()) || test_minor_oracle2(complete(6), petersen())) {
        c.pass = false;
        c.detail = "K6 in Petersen claimed";
        return;
    }
    if (!test_minor_oracle2(complete(5), petersen())) {
        c.pass = false;
        c.detail = "oracle2 misses K5 in Petersen";
        return;
    }
    Graph friendship2 = construct_sktt_blocker(1, 2, 2).graph;
    if (test_minor(cycle_graph(4), friendship2) ||
        test_minor_oracle2(cycle_graph(4), friendship2)) {
        c.pass = false;
        c.detail = "C4 in friendship graph claimed";
        return;
    }

    int pairs = quick ? 200 : 1100;
    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<int> gn(3, 8);
    std::uniform_real_distribution<double> pd(0.15, 0.85);
    int disagreements = 0, found = 0;
    for (int i = 0; i < pairs; ++i) {
        int vg = gn(rng);
        std::uniform_int_distribution<int> hn(1, vg);
        int vh = hn(rng);
        Graph g = random_gnp(vg, pd(rng), rng);
        Graph h = random_gnp(vh, pd(rng), rng);
        auto m = test_minor(h, g);
        bool o2 = test_minor_oracle2(h, g);
        if (m.has_value() != o2) ++disagreements;
        if (m) {
            ++found;
            if (!verify_model(*m)) ++disagreements;
        }
    }
    std::ostringstream os;
    os << pairs << " seeded pairs, " << found << " positive, " << disagreements
       << " disagreements";
    c.detail = os.str();
    c.pass = disagreements == 0;
}

void c2_tightness_certificates(Criterion& c) {
    Sk7Blocker b = construct_sk7_blocker(1);
    if (!is_isomorphic(b.graph, complete_multipartite({3, 3, 3})) || b.delta_recomputed != 6) {
        c.pass = false;
        c.detail = "sk7 blocker is not K_{3,3,3} with delta 6";
        return;
    }
    if (test_minor(complete(7), b.graph) || test_minor_oracle2(complete(7), b.graph)) {
        c.pass = false;
        c.detail = "K7 minor found in K_{3,3,3}";
        return;
    }
    auto k6 = test_minor(complete(6), b.graph);  // tightness sanity
    if (!k6 || !verify_model(*k6)) {
        c.pass = false;
        c.detail = "K6 minor missing from K_{3,3,3}";
        return;
    }
    SkttBlocker f3 = construct_sktt_blocker(1, 2, 3);
    if (f3.graph.n != 7 || f3.graph.m != 9 || f3.e_closed_form != 9) {
        c.pass = false;
        c.detail = "friendship F3 closed forms off";
        return;
    }
    if (test_minor(complete_bipartite(2, 2), f3.graph) ||
        test_minor_oracle2(complete_bipartite(2, 2), f3.graph)) {
        c.pass = false;
        c.detail = "K_{2,2} minor found in F3";
        return;
    }
    c.detail = "K_{3,3,3} and F3 certified by both oracles";
}

void c3_dense_pair_extraction(Criterion& c, bool quick) {
    auto corpus = seeded_corpus(12, quick ? 60 : 210, kSeed + 1);
    int runs = 0;
    for (const Graph& g : corpus) {
        if (g.n == 0) continue;
        int d = stats(g).min_degree;
        for (int k = 1; k <= 3; ++k) {
            ExtractedDensePair p = extract_dense_pair(g, k);
            ++runs;
            if (p.x.count() > 2 * k) {
                c.pass = false;
                c.detail = "|X| > 2k on " + g.label;
                return;
            }
            if (!is_dense_pair(p.sub.graph, p.x, d, k)) {
                c.pass = false;
                c.detail = "extracted pair not dense on " + g.label;
                return;
            }
        }
    }
    c.detail = std::to_string(runs) + " extractions verified";
}

void c4_expansion(Criterion& c, bool quick) {
    std::mt19937_64 rng(kSeed + 2);
    std::vector<Graph> corpus;
    corpus.push_back(path_graph(10));
    corpus.push_back(cycle_graph(9));
    corpus.push_back(complete(3));
    corpus.push_back(edgeless(3));
    std::uniform_int_distribution<int> nd(3, 12);
    std::uniform_real_distribution<double> pd(0.08, 0.35);
    while ((int)corpus.size() < (quick ? 120 : 400)) corpus.push_back(random_gnp(nd(rng), pd(rng), rng));

    int successes = 0;
    for (const Graph& h : corpus) {
        for (int cc : {3, 4, 5}) {
            Decomposition dec;
            try {
                dec = bounded_decomposition(h, cc);
            } catch (const NoSeparatorSmallEnoughError&) {
                continue;
            }
            ExpansionResult ex = expand_for_component_size(h, dec);
            ++successes;
            if (!verify_model(ex.contraction_witness) ||
                ex.contraction_witness.pattern.n != h.n) {
                c.pass = false;
                c.detail = "contraction witness fails";
                return;
            }
            if (h.n > ex.h_prime.n || stats(ex.h_prime).max_degree > stats(h).max_degree + 2) {
                c.pass = false;
                c.detail = "size or degree bound fails";
                return;
            }
            if ((long long)ex.f_edges.size() != decomposition_excess(dec, h)) {
                c.pass = false;
                c.detail = "|F| != excess";
                return;
            }
            Graph rem = ex.h_prime;
            for (auto [u, v] : ex.f_edges) {
                rem.adj[u].reset(v);
                rem.adj[v].reset(u);
                --rem.m;
            }
            for (const auto& comp : components(rem)) {
                if (comp.count() > cc) {
                    c.pass = false;
                    c.detail = "component exceeds the bound";
                    return;
                }
                VertexSet orig(h.n);
                for (int v = comp.first(); v >= 0; v = comp.next(v)) orig.set(ex.orig_vertex[v]);
                if (!is_isomorphic(subgraph_induced(rem, comp), subgraph_induced(h, orig))) {
                    c.pass = false;
                    c.detail = "component not an induced copy";
                    return;
                }
            }
            for (auto [u, v] : ex.f_edges)
                if (component_of(rem, u, rem.vertex_set()).test(v)) {
                    c.pass = false;
                    c.detail = "F-edge inside one component";
                    return;
                }
            if (stats(h).is_bipartite && !stats(rem).is_bipartite) {
                c.pass = false;
                c.detail = "h'-F lost bipartiteness";
                return;
            }
        }
    }
    c.detail = std::to_string(successes) + " expansions verified";
    if (successes < (quick ? 40 : 100)) {
        c.pass = false;
        c.detail += " (too few decompositions succeeded)";
    }
}

void c5_bipartite_expansion(Criterion& c) {
    std::vector<Graph> hs{complete(3), complete(4), cycle_graph(5), petersen()};
    int equalities = 0, runs = 0;
    for (const Graph& h : hs) {
        for (int dd : {3, 4, 5}) {
            BipartiteExpansion ex = bipartite_expand(h, dd);
            ++runs;
            GraphStats s = stats(ex.graph);
            long long num = 4LL * h.m + 2LL * h.n * (dd - 2);
            if (!s.is_bipartite || s.max_degree > dd ||
                (long long)ex.graph.n * (dd - 2) > num || !verify_model(ex.witness)) {
                c.pass = false;
                c.detail = "expansion fails on " + h.label;
                return;
            }
            if (ex.bound_is_equality) ++equalities;
        }
    }
    c.detail = std::to_string(runs) + " expansions, " + std::to_string(equalities) +
               " met the size bound with equality";
}

void c6_mader(Criterion& c, bool quick) {
    auto corpus = seeded_corpus(12, quick ? 60 : 210, kSeed + 3);
    int runs = 0;
    for (const Graph& g : corpus) {
        if (g.m == 0) continue;
        MappedSubgraph sub = mader_subgraph(g);
        int target = (int)((Rational(g.m, g.n) / Rational(2)).ceil());
        if (sub.graph.n == 0 || connectivity(sub.graph) < target) {
            c.pass = false;
            c.detail = "connectivity below ceil(d/2) on " + g.label;
            return;
        }
        ++runs;
    }
    c.detail = std::to_string(runs) + " extractions meet the connectivity bound";
}

void c7_menger_duality(Criterion& c, bool quick) {
    std::mt19937_64 rng(kSeed + 4);
    std::uniform_int_distribution<int> nd(2, 10);
    std::uniform_real_distribution<double> pd(0.15, 0.7);
    int triples = quick ? 60 : 220;
    for (int i = 0; i < triples; ++i) {
        Graph g = random_gnp(nd(rng), pd(rng), rng);
        if (g.n < 2) {
            --i;
            continue;
        }
        std::uniform_int_distribution<int> vd(0, g.n - 1);
        VertexSet u(g.n), w(g.n);
        int us = 1 + (int)(rng() % 3), ws = 1 + (int)(rng() % 3);
        for (int j = 0; j < us; ++j) u.set(vd(rng));
        for (int j = 0; j < ws; ++j) w.set(vd(rng));
        int cut = min_vertex_cut_between(g, u, w);
        int best = 0;
        for (int l = 1; l <= g.n + 1; ++l) {
            MengerResult mr = menger_paths(g, u, w, l);
            if (mr.separation) {
                if ((int)mr.separation->order() > l - 1 ||
                    !menger_pair_valid(g, *mr.separation, u, w)) {
                    c.pass = false;
                    c.detail = "returned separation invalid";
                    return;
                }
                break;
            }
            // Verify the paths: pairwise disjoint, proper U-W endpoints.
            VertexSet seen(g.n);
            if ((int)mr.paths.size() != l) {
                c.pass = false;
                c.detail = "wrong path count";
                return;
            }
            for (const auto& p : mr.paths) {
                if (!u.test(p.front()) || !w.test(p.back())) {
                    c.pass = false;
                    c.detail = "path endpoints outside U/W";
                    return;
                }
                for (size_t j = 0; j + 1 < p.size(); ++j)
                    if (!g.has_edge(p[j], p[j + 1])) {
                        c.pass = false;
                        c.detail = "path uses a non-edge";
                        return;
                    }
                for (int v : p) {
                    if (seen.test(v)) {
                        c.pass = false;
                        c.detail = "paths overlap";
                        return;
                    }
                    seen.set(v);
                }
            }
            best = l;
        }
        if (best != cut) {
            c.pass = false;
            c.detail = "max path count " + std::to_string(best) + " != min cut " +
                       std::to_string(cut);
            return;
        }
    }
    c.detail = std::to_string(triples) + " triples match the max-flow cut";
}

void c8_density_pipeline(Criterion& c, bool quick) {
    std::mt19937_64 rng(kSeed + 5);
    std::vector<Graph> hosts{complete(40)};
    hosts.push_back(random_gnp(40, 0.6, rng));
    int inconclusive = 0, runs = 0;
    for (const Graph& g : hosts) {
        int d0 = stats(g).min_degree;
        for (Rational eps : {Rational(1, 20), Rational(1, 10)}) {
            for (int kk = 2; kk <= (quick ? 2 : 3); ++kk) {
                ExtractResult r = extract_pieces(g, d0, kk, eps, Rational(1, 5));
                ++runs;
                if (r.outcome.tag == IncrementOutcome::Tag::Pieces) {
                    if ((int)r.outcome.pieces.size() != kk) {
                        c.pass = false;
                        c.detail = "wrong piece count";
                        return;
                    }
                    VertexSet seen(g.n);
                    for (const Piece& p : r.outcome.pieces) {
                        Graph sub = subgraph_induced(g, p.host_vertices);
                        if (Rational(sub.n) > Rational(d0) / eps ||
                            Rational(sub.m, sub.n) < eps * Rational(d0)) {
                            c.pass = false;
                            c.detail = "piece bounds fail recomputation";
                            return;
                        }
                        if (seen.intersects(p.host_vertices)) {
                            c.pass = false;
                            c.detail = "pieces overlap";
                            return;
                        }
                        seen |= p.host_vertices;
                    }
                } else if (r.outcome.tag == IncrementOutcome::Tag::DenserMinor) {
                    if (!verify_model(*r.outcome.minor_model) ||
                        Rational(r.outcome.minor_pattern->m, r.outcome.minor_pattern->n) <
                            r.outcome.claimed_density) {
                        c.pass = false;
                        c.detail = "denser minor fails verification";
                        return;
                    }
                } else {
                    ++inconclusive;
                }
            }
        }
    }
    c.detail = std::to_string(runs) + " runs, " + std::to_string(inconclusive) +
               " inconclusive (reported, unbounded)";
}

void c9_assembly_fixture(Criterion& c) {
    Graph h = build_graph(4, {{0, 1}, {2, 3}, {1, 2}}, "2K2+F");
    PieceAssemblySpec spec;
    spec.h = h;
    spec.f_edges = {{1, 2}};
    spec.pieces = {{0, 1}, {2, 3}};
    Graph g(8, "2K4+matching");
    for (int b : {0, 4})
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) g.add_edge(b + i, b + j);
    for (int i = 0; i < 4; ++i) g.add_edge(i, i + 4);
    spec.hosts = {{0, 1, 2, 3}, {4, 5, 6, 7}};

    AssemblyOutcome out = assemble_minor_from_pieces(spec, g);
    if (!out.model || !verify_model(*out.model) || out.model->pattern.n != 4) {
        c.pass = false;
        c.detail = "fixture assembly failed: " + out.note;
        return;
    }
    AssemblyOutcome out2 = assemble_via_dense_cores(spec, g);
    if (!out2.model || !verify_model(*out2.model)) {
        c.pass = false;
        c.detail = "pipeline variant failed: " + out2.note;
        return;
    }

    Graph bad(8, "2K4+bridge");
    for (int b : {0, 4})
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) bad.add_edge(b + i, b + j);
    bad.add_edge(0, 4);
    bool witnessed = false;
    try {
        assemble_minor_from_pieces(spec, bad);
    } catch (const DensityPreconditionFailed& e) {
        witnessed = separation_valid(bad, e.witness) && e.witness.order() <= 2;
    }
    if (!witnessed) {
        c.pass = false;
        c.detail = "density violation not witnessed";
        return;
    }
    c.detail = "fixture model verified; violation fixture returned its separation";
}

void c10_falsification(Criterion& c, bool quick) {
    int max_n = quick ? 7 : 8;
    FalsifyResult p3 = ha_falsify(path_graph(3), max_n, FalsifySource::AllSmallGraphs);
    if (p3.counterexample) {
        c.pass = false;
        c.detail = "claimed counterexample for P3";
        return;
    }
    FalsifyResult k4 = ha_falsify(complete(4), max_n, FalsifySource::AllSmallGraphs);
    if (k4.counterexample) {
        c.pass = false;
        c.detail = "claimed counterexample for K4";
        return;
    }
    FalsifyResult k7 = ha_falsify(complete(7), 16, FalsifySource::ConstructionsOnly);
    if (!k7.counterexample || !is_isomorphic(*k7.counterexample, complete_multipartite({3, 3, 3}))) {
        c.pass = false;
        c.detail = "K7 probe did not return K_{3,3,3}";
        return;
    }
    c.detail = "P3/K4 clean to n=" + std::to_string(max_n) + " (" +
               std::to_string(p3.candidates_checked + k4.candidates_checked) +
               " candidates); K7 counterexample found";
}

void c11_hall_family(Criterion& c, bool quick) {
    std::mt19937_64 rng(kSeed + 6);
    int lo = 8, hi = quick ? 9 : 12;
    int runs = 0;
    for (int m = lo; m <= hi; ++m) {
        Graph h(2 * m);
        for (int i = 0; i < m; ++i) h.add_edge(2 * i, 2 * i + 1);
        int vh = h.n;
        for (int variant = 0; variant < 3; ++variant) {
            // Host: K_{vh+1} minus a seeded matching, optionally with a small
            // low-degree exceptional set.
            Graph g = complete(vh + 1);
            VertexSet x(g.n);
            if (variant >= 1) {
                int xs = std::min(vh / 4, 2 + variant);
                for (int i = 0; i < xs; ++i) x.set(i);
                // Push X degrees below vh-1 via a matching into distinct
                // non-X vertices (each non-X vertex loses at most one edge).
                for (int i = 0; i < xs; ++i) {
                    int partner = xs + i;
                    g.adj[i].reset(partner);
                    g.adj[partner].reset(i);
                    --g.m;
                    int partner2 = xs + ((i + 1) % xs) + xs;
                    g.adj[i].reset(partner2);
                    g.adj[partner2].reset(i);
                    --g.m;
                }
            } else {
                // Sparse perturbation away from X: a matching keeps deg >= vh-1.
                for (int i = 0; i + 1 < g.n; i += 2) {
                    if (rng() % 2 == 0) continue;
                    g.adj[i].reset(i + 1);
                    g.adj[i + 1].reset(i);
                    --g.m;
                }
            }
            std::vector<int> phi = hall_embed(h, 1, g, x);
            ++runs;
            std::vector<char> used(g.n, 0);
            for (int v = 0; v < h.n; ++v) {
                if (used[phi[v]]) {
                    c.pass = false;
                    c.detail = "non-injective embedding";
                    return;
                }
                used[phi[v]] = 1;
            }
            for (auto [a, b] : h.edges())
                if (!g.has_edge(phi[a], phi[b])) {
                    c.pass = false;
                    c.detail = "missing edge in embedding";
                    return;
                }
        }
    }
    c.detail = std::to_string(runs) + " instances embedded and verified";
}

}  // namespace

bool run_acceptance(bool quick, std::ostream& os) {
    std::vector<Criterion> cs;
    auto run = [&](int id, const std::string& name, auto&& fn) {
        Criterion c{id, name, true, ""};
        try {
            fn(c);
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = std::string("exception: ") + e.what();
        }
        os << (c.pass ? "[PASS] " : "[FAIL] ") << id << " " << name
           << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        os.flush();
        cs.push_back(c);
    };

    run(1, "oracle-equivalence", [&](Criterion& c) { c1_oracle_equivalence(c, quick); });
    run(2, "tightness-certificates", [&](Criterion& c) { c2_tightness_certificates(c); });
    run(3, "dense-pair-extraction", [&](Criterion& c) { c3_dense_pair_extraction(c, quick); });
    run(4, "bounded-expansion", [&](Criterion& c) { c4_expansion(c, quick); });
    run(5, "bipartite-degree-expansion", [&](Criterion& c) { c5_bipartite_expansion(c); });
    run(6, "mader-connectivity", [&](Criterion& c) { c6_mader(c, quick); });
    run(7, "menger-duality", [&](Criterion& c) { c7_menger_duality(c, quick); });
    run(8, "density-increment-contract", [&](Criterion& c) { c8_density_pipeline(c, quick); });
    run(9, "piece-assembly-fixture", [&](Criterion& c) { c9_assembly_fixture(c); });
    run(10, "degeneracy-falsification", [&](Criterion& c) { c10_falsification(c, quick); });
    run(11, "hall-embedding-family", [&](Criterion& c) { c11_hall_family(c, quick); });

    bool all = true;
    for (const auto& c : cs) all = all && c.pass;
    os << (all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << " (" << cs.size()
       << " criteria, " << (quick ? "quick" : "full") << " battery)\n";
    return all;
}

}  // namespace minorforge
