#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chordal/decomposition.hpp"
#include "chordal/errors.hpp"
#include "chordal/generators.hpp"
#include "chordal/graph_io.hpp"
#include "chordal/prng.hpp"
#include "chordal/spectrum.hpp"
#include "chordal/structural.hpp"

#include <algorithm>
#include <cmath>
#include <set>

using namespace chordal;

namespace {

Graph complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edge_list(n, e);
}

Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, e);
}

Graph star(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::from_edge_list(leaves + 1, e);
}

Graph fixture(const char* name) {
    return read_edge_list_file(std::string(FIXTURES_DIR) + "/" + name);
}

EigenvalueMultiset oracle_multiset(const Graph& g) {
    auto s = eigenvalues(laplacian(g));
    EigenvalueMultiset ms;
    for (double lam : s.values) {
        REQUIRE(std::fabs(lam - std::round(lam)) < 1e-6);
        ++ms[static_cast<std::int64_t>(std::round(lam))];
    }
    return ms;
}

bool contained_in_oracle(const EigenvalueMultiset& ms, const Graph& g) {
    auto groups = integer_eigenvalues(eigenvalues(laplacian(g)), 1e-6);
    for (auto [value, mult] : ms) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [v = value](const IntegerGroup& gr) { return gr.value == v; });
        if (it == groups.end() || it->multiplicity < mult) return false;
    }
    return true;
}

} // namespace

TEST_CASE("check_kappa_equals_a") {
    Graph k14 = star(4);
    auto w = check_kappa_equals_a(k14, decompose(k14));
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<Vertex>{0});

    Graph f3 = fixture("kt-split-2-3-3.el");
    CHECK_FALSE(check_kappa_equals_a(f3, decompose(f3)).has_value());

    Graph p4 = path(4);
    CHECK_FALSE(check_kappa_equals_a(p4, decompose(p4)).has_value());

    CHECK_THROWS_AS(check_kappa_equals_a(complete(4), decompose(complete(4))),
                    PreconditionError);
}

TEST_CASE("check_kappa_equals_a on the kappa fixtures") {
    Graph a = fixture("equal-conn-a.el");
    auto wa = check_kappa_equals_a(a, decompose(a));
    REQUIRE(wa.has_value());
    CHECK(*wa == std::vector<Vertex>{0, 4});  // vertices 1 and 5 of the file

    Graph b = fixture("equal-conn-b.el");
    auto wb = check_kappa_equals_a(b, decompose(b));
    REQUIRE(wb.has_value());
    CHECK(*wb == std::vector<Vertex>{2});

    Graph c = fixture("equal-conn-c.el");
    auto wc = check_kappa_equals_a(c, decompose(c));
    REQUIRE(wc.has_value());
    CHECK(*wc == std::vector<Vertex>{3});
}

TEST_CASE("quasi-threshold recognition") {
    CHECK_FALSE(recognize_quasi_threshold(path(4)).has_value());

    auto k1 = recognize_quasi_threshold(complete(1));
    REQUIRE(k1.has_value());
    CHECK(k1->root == 0);
    CHECK(k1->parent[0] == -1);

    Graph wd = windmill(4, 3);
    auto t = recognize_quasi_threshold(wd);
    REQUIRE(t.has_value());
    CHECK(t->root == 0);  // the hub
    CHECK(t->child_count[0] == 3);
    // each blade is a chain: depths within a blade are 1,2,3
    std::vector<int> depth_count(4, 0);
    for (Vertex v = 1; v < wd.order(); ++v) ++depth_count[static_cast<std::size_t>(t->depth[static_cast<std::size_t>(v)])];
    CHECK(depth_count[1] == 3);
    CHECK(depth_count[2] == 3);
    CHECK(depth_count[3] == 3);
}

TEST_CASE("tree closure reconstructs the graph") {
    SplitMix64 rng(3);
    for (int iter = 0; iter < 25; ++iter) {
        Graph g = random_quasi_threshold(1 + static_cast<int>(rng.next_below(80)), rng.next());
        auto t = recognize_quasi_threshold(g);
        REQUIRE(t.has_value());
        std::vector<Edge> closure;
        for (Vertex v = 0; v < g.order(); ++v)
            for (Vertex a = t->parent[static_cast<std::size_t>(v)]; a >= 0;
                 a = t->parent[static_cast<std::size_t>(a)])
                closure.emplace_back(std::min(a, v), std::max(a, v));
        std::sort(closure.begin(), closure.end());
        closure.erase(std::unique(closure.begin(), closure.end()), closure.end());
        CHECK(closure == g.edge_list());
        // leaves are simplicial
        auto d = decompose(g);
        for (Vertex v = 0; v < g.order(); ++v)
            if (t->child_count[static_cast<std::size_t>(v)] == 0) CHECK(d.is_simplicial(v));
    }
}

TEST_CASE("qt spectra on worked examples") {
    // K2: root with a single pendant child
    Graph k2 = complete(2);
    auto t2 = recognize_quasi_threshold(k2);
    REQUIRE(t2.has_value());
    CHECK(to_multiset(qt_spectrum_bapat(k2, *t2)) == EigenvalueMultiset{{0, 1}, {2, 1}});

    Graph wd = windmill(4, 3);
    EigenvalueMultiset wd_want{{10, 1}, {4, 6}, {1, 2}, {0, 1}};
    CHECK(to_multiset(qt_spectrum_bapat(wd, *recognize_quasi_threshold(wd))) == wd_want);
    CHECK(to_multiset(qt_spectrum_structural(wd, decompose(wd))) == wd_want);
    CHECK(oracle_multiset(wd) == wd_want);

    Graph sc = split_complete(2, 3);
    EigenvalueMultiset sc_want{{5, 2}, {2, 2}, {0, 1}};
    CHECK(to_multiset(qt_spectrum_bapat(sc, *recognize_quasi_threshold(sc))) == sc_want);
    CHECK(to_multiset(qt_spectrum_structural(sc, decompose(sc))) == sc_want);
    CHECK(oracle_multiset(sc) == sc_want);

    Graph kn = complete(7);
    CHECK(to_multiset(qt_spectrum_structural(kn, decompose(kn))) ==
          EigenvalueMultiset{{7, 6}, {0, 1}});

    CHECK_THROWS_AS(qt_spectrum_structural(path(4), decompose(path(4))), ClassificationError);
}

TEST_CASE("qt spectra agree with the oracle on random instances") {
    SplitMix64 rng(29);
    for (int iter = 0; iter < 20; ++iter) {
        Graph g = random_quasi_threshold(1 + static_cast<int>(rng.next_below(60)), rng.next());
        auto t = recognize_quasi_threshold(g);
        REQUIRE(t.has_value());
        auto d = decompose(g);
        auto a = to_multiset(qt_spectrum_bapat(g, *t));
        auto b = to_multiset(qt_spectrum_structural(g, d));
        CHECK(a == b);
        CHECK(a == oracle_multiset(g));
    }
}

TEST_CASE("qt_structure_checks") {
    Graph wd = windmill(4, 3);
    CHECK(qt_structure_checks(wd, decompose(wd)));

    Graph th = threshold_from_sequence("00101");
    CHECK(qt_structure_checks(th, decompose(th)));

    Graph k1 = complete(1);
    CHECK(qt_structure_checks(k1, decompose(k1)));

    CHECK_THROWS_AS(qt_structure_checks(path(4), decompose(path(4))), ClassificationError);
}

TEST_CASE("split graph test") {
    CHECK(is_split_graph(path(4)));
    CHECK(is_split_graph(complete(5)));
    CHECK(is_split_graph(star(4)));
    CHECK(is_split_graph(fixture("kt-split-2-3-3.el")));
    CHECK_FALSE(is_split_graph(path(5)));
    CHECK_FALSE(is_split_graph(windmill(4, 3)));
    Graph c4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK_FALSE(is_split_graph(c4));
}

TEST_CASE("kt-split recognition") {
    Graph f3 = fixture("kt-split-2-3-3.el");
    auto s3 = recognize_kt_split(f3, decompose(f3));
    REQUIRE(s3.has_value());
    CHECK(s3->k == 2);
    CHECK(s3->t == 3);
    CHECK(s3->r == 3);

    Graph sc = split_complete(2, 3);
    auto ssc = recognize_kt_split(sc, decompose(sc));
    REQUIRE(ssc.has_value());
    CHECK(ssc->k == 2);
    CHECK(ssc->t == 3);
    CHECK(ssc->r == 1);

    // P4 is the smallest r=2 instance: clique {1,2} with one pendant twin each
    Graph p4 = kt_split_graph(1, 1, 2);
    CHECK(p4.order() == 4);
    auto sp4 = recognize_kt_split(p4, decompose(p4));
    REQUIRE(sp4.has_value());
    CHECK(sp4->k == 1);
    CHECK(sp4->t == 1);
    CHECK(sp4->r == 2);

    // paw: split, but the pendant is not attached to a full separator class
    Graph paw = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    CHECK_FALSE(recognize_kt_split(paw, decompose(paw)).has_value());

    CHECK_THROWS_AS(recognize_kt_split(windmill(4, 3), decompose(windmill(4, 3))),
                    ClassificationError);
}

TEST_CASE("kt-split partial spectra") {
    KTSplitStructure fig{2, 3, 3, {}, {}};
    CHECK(to_multiset(kt_split_partial_spectrum(fig)) ==
          EigenvalueMultiset{{0, 1}, {2, 6}, {9, 3}, {5, 1}});

    // r=1 merges the rk+t and k+t families: k+t ends with multiplicity k
    KTSplitStructure sc{2, 3, 1, {}, {}};
    CHECK(to_multiset(kt_split_partial_spectrum(sc)) ==
          EigenvalueMultiset{{0, 1}, {2, 2}, {5, 2}});

    KTSplitStructure tiny{1, 1, 2, {}, {}};
    CHECK(to_multiset(kt_split_partial_spectrum(tiny)) == EigenvalueMultiset{{0, 1}, {2, 1}});
}

TEST_CASE("kt-split spectrum containment on the fixture") {
    Graph f3 = fixture("kt-split-2-3-3.el");
    auto s = recognize_kt_split(f3, decompose(f3));
    REQUIRE(s.has_value());
    auto ms = to_multiset(kt_split_partial_spectrum(*s));
    int total = 0;
    for (auto [v, m] : ms) total += m;
    CHECK(total == f3.order() - 2 * s->r + 2);
    CHECK(contained_in_oracle(ms, f3));
}

TEST_CASE("clique-size predictions") {
    Graph f4 = fixture("chordal-16.el");
    auto preds = simplicial_twin_predictions(f4, decompose(f4));
    CHECK(to_multiset(preds) == EigenvalueMultiset{{4, 3}, {5, 1}, {6, 1}});
    CHECK(contained_in_oracle(to_multiset(preds), f4));

    Graph kn = complete(6);
    CHECK(to_multiset(simplicial_twin_predictions(kn, decompose(kn))) ==
          EigenvalueMultiset{{6, 5}});

    CHECK(simplicial_twin_predictions(path(3), decompose(path(3))).empty());
}

TEST_CASE("predicted eigenvectors are exact in integer arithmetic") {
    SplitMix64 rng(53);
    for (int iter = 0; iter < 15; ++iter) {
        Graph g = random_chordal(2 + static_cast<int>(rng.next_below(50)), rng.next_unit(), rng.next());
        auto d = decompose(g);
        LaplacianMatrix L = laplacian(g);
        for (const auto& p : simplicial_twin_predictions(g, d)) {
            CHECK(static_cast<int>(p.vectors.size()) == p.multiplicity);
            std::set<Vertex> minus_seen;
            for (const auto& vec : p.vectors) {
                CHECK(vec.plus == p.vectors.front().plus);      // shared anchor
                CHECK(minus_seen.insert(vec.minus).second);     // distinct => independent
                for (int i = 0; i < g.order(); ++i) {
                    std::int64_t lhs = L.at(i, vec.plus) - L.at(i, vec.minus);
                    std::int64_t rhs = 0;
                    if (i == vec.plus) rhs = p.value;
                    if (i == vec.minus) rhs = -p.value;
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("threshold recognition") {
    CHECK(is_threshold_graph(threshold_from_sequence("01")));
    CHECK(is_threshold_graph(threshold_from_sequence("0001")));
    CHECK(is_threshold_graph(threshold_from_sequence("00011")));
    CHECK(is_threshold_graph(complete(5)));
    CHECK(is_threshold_graph(star(6)));
    CHECK_FALSE(is_threshold_graph(windmill(4, 3)));  // peeling stalls after the hub
    CHECK_FALSE(is_threshold_graph(path(4)));
    CHECK_FALSE(is_threshold_graph(core_satellite(2, 3, 2)));
}

TEST_CASE("classify on worked examples") {
    Classification wd = classify(windmill(4, 3));
    CHECK(wd.windmill);
    CHECK(wd.gen_core_satellite);
    CHECK(wd.quasi_threshold);
    CHECK(wd.kappa_equals_a);
    CHECK(wd.chordal);
    CHECK_FALSE(wd.threshold);
    CHECK_FALSE(wd.split);

    Classification f3 = classify(fixture("kt-split-2-3-3.el"));
    CHECK(f3.kt_split);
    CHECK(f3.split);
    CHECK(f3.chordal);
    CHECK_FALSE(f3.quasi_threshold);
    CHECK_FALSE(f3.kappa_equals_a);
    CHECK_FALSE(f3.split_complete);

    Classification sc = classify(split_complete(2, 3));
    CHECK(sc.split_complete);
    CHECK(sc.kt_split);
    CHECK(sc.threshold);
    CHECK(sc.quasi_threshold);
    CHECK(sc.kappa_equals_a);
    CHECK(sc.gen_core_satellite);

    Classification cs = classify(core_satellite(2, 3, 2));
    CHECK(cs.gen_core_satellite);
    CHECK(cs.quasi_threshold);
    CHECK_FALSE(cs.windmill);
    CHECK_FALSE(cs.threshold);
    CHECK_FALSE(cs.split_complete);

    Classification c4 = classify(Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    CHECK_FALSE(c4.chordal);
    CHECK_FALSE(c4.split);
    CHECK_FALSE(c4.quasi_threshold);

    Classification kn = classify(complete(5));
    CHECK(kn.chordal);
    CHECK(kn.threshold);
    CHECK(kn.quasi_threshold);
    CHECK(kn.kappa_equals_a);
    CHECK_FALSE(kn.kt_split);
    CHECK_FALSE(kn.split_complete);
    CHECK_FALSE(kn.windmill);
}

TEST_CASE("fixture classifications") {
    CHECK(classify(fixture("windmill-4-3.el")).windmill);
    CHECK(classify(fixture("split-complete-2-5.el")).split_complete);
    Classification c = classify(fixture("core-satellite-2-3-2.el"));
    CHECK(c.gen_core_satellite);
    CHECK_FALSE(c.windmill);
    for (const char* name : {"equal-conn-a.el", "equal-conn-b.el", "equal-conn-c.el"})
        CHECK(classify(fixture(name)).kappa_equals_a);
    // satisfies the separator condition without being quasi-threshold
    CHECK_FALSE(classify(fixture("equal-conn-a.el")).quasi_threshold);
}

TEST_CASE("theorem-2 test agrees with the oracle on random chordal graphs") {
    SplitMix64 rng(71);
    int done = 0;
    while (done < 40) {
        Graph g = random_chordal(2 + static_cast<int>(rng.next_below(58)), rng.next_unit(), rng.next());
        auto d = decompose(g);
        if (d.clique_count() == 1) continue;  // complete: excluded by the statement
        bool structural = check_kappa_equals_a(g, d).has_value();
        double a = algebraic_connectivity(eigenvalues(laplacian(g)));
        int kappa = vertex_connectivity_chordal(g, d);
        bool numerical = std::fabs(a - static_cast<double>(kappa)) < 1e-7;
        CHECK(structural == numerical);
        ++done;
    }
}

TEST_CASE("qt recognition matches P4/C4-freeness on small graphs") {
    // independent characterization: quasi-threshold iff no induced path or
    // cycle on four vertices
    auto has_induced_p4_or_c4 = [](const Graph& g) {
        const int n = g.order();
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                for (Vertex c = b + 1; c < n; ++c)
                    for (Vertex d = c + 1; d < n; ++d) {
                        Vertex vs[4] = {a, b, c, d};
                        int edges = 0, deg[4] = {0, 0, 0, 0};
                        for (int i = 0; i < 4; ++i)
                            for (int j = i + 1; j < 4; ++j)
                                if (g.has_edge(vs[i], vs[j])) {
                                    ++edges;
                                    ++deg[i];
                                    ++deg[j];
                                }
                        int deg1 = 0, deg2 = 0;
                        for (int dd : deg) {
                            if (dd == 1) ++deg1;
                            if (dd == 2) ++deg2;
                        }
                        bool p4 = edges == 3 && deg1 == 2 && deg2 == 2;
                        bool c4 = edges == 4 && deg2 == 4;
                        if (p4 || c4) return true;
                    }
        return false;
    };
    SplitMix64 rng(47);
    int tested = 0;
    while (tested < 200) {
        int n = 4 + static_cast<int>(rng.next_below(6));
        std::vector<Edge> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.next_unit() < 0.5) e.emplace_back(i, j);
        Graph g = Graph::from_edge_list(n, e);
        if (!g.is_connected()) continue;
        CHECK(recognize_quasi_threshold(g).has_value() == !has_induced_p4_or_c4(g));
        ++tested;
    }
}

TEST_CASE("hierarchy consistency over generators") {
    // classify() itself asserts the hierarchy edges; this just exercises it
    // across all families, including complete and degenerate cells.
    for (int k = 2; k <= 4; ++k)
        for (int l = 2; l <= 4; ++l) (void)classify(windmill(k, l));
    for (int k = 1; k <= 4; ++k)
        for (int t = 1; t <= 4; ++t) (void)classify(split_complete(k, t));
    for (int c = 1; c <= 3; ++c)
        for (int s = 1; s <= 3; ++s)
            for (int eta = 2; eta <= 3; ++eta) (void)classify(core_satellite(c, s, eta));
    for (int k = 1; k <= 3; ++k)
        for (int t = 1; t <= 3; ++t)
            for (int r = 1; r <= 3; ++r) (void)classify(kt_split_graph(k, t, r));
    SplitMix64 rng(83);
    for (int i = 0; i < 25; ++i) {
        (void)classify(random_quasi_threshold(1 + static_cast<int>(rng.next_below(40)), rng.next()));
        (void)classify(random_chordal(1 + static_cast<int>(rng.next_below(40)), rng.next_unit(), rng.next()));
    }
}
