#include "chordal/verify.hpp"

#include "chordal/decomposition.hpp"
#include "chordal/generators.hpp"
#include "chordal/prng.hpp"
#include "chordal/spectrum.hpp"
#include "chordal/structural.hpp"

#include <algorithm>
#include <cmath>

namespace chordal {

namespace {

struct Prop {
    PropertyResult result;
    explicit Prop(std::string name) { result.name = std::move(name); }
    void record(bool ok, const Graph& g, const std::string& note) {
        if (ok) {
            ++result.pass;
        } else {
            ++result.fail;
            if (!result.failing) {
                result.failing = g;
                result.note = note;
            }
        }
    }
};

bool wants(const VerifyOptions& opt, const std::string& family) {
    return opt.families.empty() ||
           std::find(opt.families.begin(), opt.families.end(), family) != opt.families.end();
}

bool contained(const EigenvalueMultiset& ms, const std::vector<IntegerGroup>& groups) {
    for (auto [value, mult] : ms) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [v = value](const IntegerGroup& g) { return g.value == v; });
        if (it == groups.end() || it->multiplicity < mult) return false;
    }
    return true;
}

bool equals_spectrum(const EigenvalueMultiset& ms, const Spectrum& s, double tol) {
    EigenvalueMultiset seen;
    for (double lam : s.values) {
        double r = std::round(lam);
        if (std::fabs(lam - r) > tol) return false;
        ++seen[static_cast<std::int64_t>(r)];
    }
    return seen == ms;
}

// comparability closure of the tree representation must reproduce the graph
bool tree_closure_matches(const Graph& g, const TreeRepresentation& t) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex a = t.parent[static_cast<std::size_t>(v)]; a >= 0;
             a = t.parent[static_cast<std::size_t>(a)])
            edges.emplace_back(std::min(a, v), std::max(a, v));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges == g.edge_list();
}

void verify_qt(const VerifyOptions& opt, std::vector<PropertyResult>& out) {
    Prop accepted("qt: generator output accepted by recognizer");
    Prop closure("qt: tree closure reconstructs the graph");
    Prop structure("qt: clique/separator structure checks");
    Prop equiv("qt: tree route == structural route == oracle spectrum");
    SplitMix64 rng(opt.seed);
    for (int i = 0; i < opt.count; ++i) {
        int n = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(opt.max_n)));
        Graph g = random_quasi_threshold(n, rng.next());
        auto tree = recognize_quasi_threshold(g);
        accepted.record(tree.has_value(), g, "recognizer rejected a generated instance");
        if (!tree) continue;
        closure.record(tree_closure_matches(g, *tree), g, "closure mismatch");
        auto d = decompose(g);
        structure.record(qt_structure_checks(g, d), g, "structure check failed");
        auto structural = to_multiset(qt_spectrum_structural(g, d));
        auto bapat = to_multiset(qt_spectrum_bapat(g, *tree));
        bool ok = structural == bapat && equals_spectrum(structural, eigenvalues(laplacian(g)), 1e-6);
        equiv.record(ok, g, "spectrum mismatch");
    }
    out.push_back(std::move(accepted.result));
    out.push_back(std::move(closure.result));
    out.push_back(std::move(structure.result));
    out.push_back(std::move(equiv.result));
}

void verify_chordal(const VerifyOptions& opt, std::vector<PropertyResult>& out) {
    Prop chordality("chordal: generator output is chordal");
    Prop planted("chordal: planted chordless cycle is detected");
    Prop seps_clique("chordal: every separator is a clique");
    Prop sep_sum("chordal: separator multiplicities sum to cliques-1");
    Prop subtree("chordal: cliques containing a vertex form a subtree");
    Prop kappa("chordal: structural kappa=a test agrees with the oracle");
    Prop twins("chordal: clique-size predictions contained in oracle groups");
    SplitMix64 rng(opt.seed + 1);
    int oracle_cap = std::min(opt.max_n, 60);
    for (int i = 0; i < opt.count; ++i) {
        int n = 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(std::max(1, opt.max_n - 1))));
        double density = 0.15 + 0.7 * rng.next_unit();
        Graph g = random_chordal(n, density, rng.next());
        bool ch = is_chordal(g);
        chordality.record(ch, g, "non-chordal generator output");
        if (!ch) continue;
        auto d = decompose(g);

        bool all_cliques = true;
        for (const auto& s : d.separators)
            for (std::size_t a = 0; a < s.size() && all_cliques; ++a)
                for (std::size_t b = a + 1; b < s.size(); ++b)
                    if (!g.has_edge(s[a], s[b])) {
                        all_cliques = false;
                        break;
                    }
        seps_clique.record(all_cliques, g, "non-clique separator");

        int mu_sum = 0;
        for (int m : d.multiplicity) mu_sum += m;
        sep_sum.record(mu_sum == d.clique_count() - 1, g, "multiplicity sum mismatch");

        // induced-subtree property: the cliques containing v must be
        // connected in the clique tree
        std::vector<std::vector<int>> tree_adj(static_cast<std::size_t>(d.clique_count()));
        for (auto [a, b] : d.tree_edges) {
            tree_adj[static_cast<std::size_t>(a)].push_back(b);
            tree_adj[static_cast<std::size_t>(b)].push_back(a);
        }
        bool subtree_ok = true;
        for (Vertex v = 0; v < g.order() && subtree_ok; ++v) {
            std::vector<char> has(static_cast<std::size_t>(d.clique_count()), 0);
            int total = 0;
            for (int qi = 0; qi < d.clique_count(); ++qi) {
                const auto& q = d.cliques[static_cast<std::size_t>(qi)];
                if (std::binary_search(q.begin(), q.end(), v)) {
                    has[static_cast<std::size_t>(qi)] = 1;
                    ++total;
                }
            }
            int start = -1;
            for (int qi = 0; qi < d.clique_count(); ++qi)
                if (has[static_cast<std::size_t>(qi)]) {
                    start = qi;
                    break;
                }
            std::vector<int> stack{start};
            std::vector<char> seen(static_cast<std::size_t>(d.clique_count()), 0);
            seen[static_cast<std::size_t>(start)] = 1;
            int reached = 1;
            while (!stack.empty()) {
                int q = stack.back();
                stack.pop_back();
                for (int w : tree_adj[static_cast<std::size_t>(q)])
                    if (has[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = 1;
                        ++reached;
                        stack.push_back(w);
                    }
            }
            subtree_ok = reached == total;
        }
        subtree.record(subtree_ok, g, "induced subtree violated");

        if (g.order() <= oracle_cap && d.clique_count() > 1) {
            auto s = eigenvalues(laplacian(g));
            bool structural = check_kappa_equals_a(g, d).has_value();
            double a = algebraic_connectivity(s);
            int k = vertex_connectivity_chordal(g, d);
            bool numerical = std::fabs(a - static_cast<double>(k)) < 1e-7;
            kappa.record(structural == numerical, g, "kappa=a disagreement");
            auto preds = to_multiset(simplicial_twin_predictions(g, d));
            twins.record(contained(preds, integer_eigenvalues(s, 1e-6)), g,
                         "prediction missing from oracle groups");
        }
    }
    for (int i = 0; i < std::max(opt.count / 4, 5); ++i) {
        int base = 2 + static_cast<int>(rng.next_below(20));
        int len = 4 + static_cast<int>(rng.next_below(5));
        Graph g = planted_cycle(base, len, rng.next());
        planted.record(!is_chordal(g), g, "chordless cycle missed");
    }
    out.push_back(std::move(chordality.result));
    out.push_back(std::move(planted.result));
    out.push_back(std::move(seps_clique.result));
    out.push_back(std::move(sep_sum.result));
    out.push_back(std::move(subtree.result));
    out.push_back(std::move(kappa.result));
    out.push_back(std::move(twins.result));
}

void verify_kt(const VerifyOptions&, std::vector<PropertyResult>& out) {
    Prop roundtrip("kt-split: recognizer recovers generator parameters");
    Prop spectrum("kt-split: guaranteed eigenvalues contained in oracle groups");
    Prop splitness("kt-split: removing clique edges leaves r copies of K_{k,t}");
    for (int k = 1; k <= 5; ++k)
        for (int t = 1; t <= 5; ++t)
            for (int r = 1; r <= 5; ++r) {
                Graph g = kt_split_graph(k, t, r);
                auto d = decompose(g);
                auto rec = recognize_kt_split(g, d);
                if (t == 1 && r == 1) {
                    // K_{k+1}: complete, so no separator/twin structure exists
                    roundtrip.record(!rec.has_value(), g, "complete graph recognized as kt-split");
                    continue;
                }
                bool ok = rec && rec->k == k && rec->t == t && rec->r == r;
                roundtrip.record(ok, g, "parameter mismatch");
                if (!ok) continue;

                auto partial = to_multiset(kt_split_partial_spectrum(*rec));
                auto s = eigenvalues(laplacian(g));
                auto groups = integer_eigenvalues(s, 1e-6);
                bool spec_ok = r == 1 ? equals_spectrum(partial, s, 1e-6) : contained(partial, groups);
                spectrum.record(spec_ok, g, "spectrum containment failed");

                // splitness: drop clique-side edges, expect r components,
                // each K_{k,t}
                std::vector<Edge> rest;
                for (auto [u, v] : g.edge_list())
                    if (u >= r * k || v >= r * k) rest.emplace_back(u, v);
                Graph h = Graph::from_edge_list(g.order(), rest);
                auto comps = connected_components(h);
                bool split_ok = static_cast<int>(comps.size()) == r;
                for (const auto& comp : comps) {
                    if (static_cast<int>(comp.size()) != k + t) split_ok = false;
                }
                if (split_ok) {
                    int want_edges = r * k * t;
                    split_ok = h.size() == want_edges;
                }
                splitness.record(split_ok, g, "splitness structure mismatch");
            }
    out.push_back(std::move(roundtrip.result));
    out.push_back(std::move(spectrum.result));
    out.push_back(std::move(splitness.result));
}

void verify_threshold(const VerifyOptions& opt, std::vector<PropertyResult>& out) {
    Prop peel("threshold: construction recognized by peeling");
    Prop chain("threshold: separators form an inclusion chain");
    Prop universal("threshold: smallest separator is universal");
    SplitMix64 rng(opt.seed + 2);
    for (int i = 0; i < opt.count; ++i) {
        int len = 1 + static_cast<int>(rng.next_below(12));
        std::string bits;
        for (int b = 0; b < len - 1; ++b) bits += rng.next_below(2) ? '1' : '0';
        bits += '1';  // connected
        Graph g = threshold_from_sequence(bits);
        peel.record(is_threshold_graph(g), g, "peeling rejected " + bits);
        auto d = decompose(g);
        bool chain_ok = true;
        for (std::size_t a = 0; a < d.separators.size(); ++a)
            for (std::size_t b = a + 1; b < d.separators.size(); ++b) {
                const auto &x = d.separators[a], &y = d.separators[b];
                const auto &small = x.size() <= y.size() ? x : y;
                const auto &big = x.size() <= y.size() ? y : x;
                if (!std::includes(big.begin(), big.end(), small.begin(), small.end()))
                    chain_ok = false;
            }
        chain.record(chain_ok, g, "non-nested separators in " + bits);
        if (!d.separators.empty()) {
            auto smallest = std::min_element(
                d.separators.begin(), d.separators.end(),
                [](const auto& a, const auto& b) { return a.size() < b.size(); });
            bool uni = true;
            for (Vertex v : *smallest)
                if (g.degree(v) != g.order() - 1) uni = false;
            universal.record(uni, g, "smallest separator not universal in " + bits);
        }
    }
    out.push_back(std::move(peel.result));
    out.push_back(std::move(chain.result));
    out.push_back(std::move(universal.result));
}

} // namespace

std::vector<PropertyResult> run_verify(const VerifyOptions& opt) {
    std::vector<PropertyResult> out;
    if (wants(opt, "qt")) verify_qt(opt, out);
    if (wants(opt, "chordal")) verify_chordal(opt, out);
    if (wants(opt, "kt-split")) verify_kt(opt, out);
    if (wants(opt, "threshold")) verify_threshold(opt, out);
    return out;
}

} // namespace chordal
