#include "chordal/structural.hpp"

#include "chordal/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>

namespace chordal {

const char* provenance_tag(Provenance p) {
    switch (p) {
        case Provenance::zero: return "zero";
        case Provenance::non_simplicial_degree: return "nonSimplicialDegree";
        case Provenance::clique_simplicials: return "cliqueSimplicials";
        case Provenance::separator_multiplicity: return "separatorMultiplicity";
        case Provenance::kt_split: return "ktSplit";
        case Provenance::simplicial_twins: return "theorem8";
    }
    return "?";
}

EigenvalueMultiset to_multiset(const std::vector<PredictedEigenvalue>& predictions) {
    EigenvalueMultiset ms;
    for (const auto& p : predictions)
        if (p.multiplicity > 0) ms[p.value] += p.multiplicity;
    return ms;
}

std::optional<std::vector<Vertex>> check_kappa_equals_a(const Graph& g,
                                                        const ChordalDecomposition& d) {
    if (d.clique_count() == 1)
        throw PreconditionError("check_kappa_equals_a: complete graphs are excluded");
    // intersection of the distinct separators
    std::vector<Vertex> inter = d.separators.front();
    for (std::size_t i = 1; i < d.separators.size() && !inter.empty(); ++i) {
        std::vector<Vertex> next;
        std::set_intersection(inter.begin(), inter.end(), d.separators[i].begin(),
                              d.separators[i].end(), std::back_inserter(next));
        inter = std::move(next);
    }
    if (inter.empty()) return std::nullopt;
    bool is_separator = std::find(d.separators.begin(), d.separators.end(), inter) !=
                        d.separators.end();
    if (!is_separator) return std::nullopt;
    for (Vertex v : inter)
        if (g.degree(v) != g.order() - 1) return std::nullopt;
    return inter;
}

namespace {

// Arc direction of the recognition step: each edge points from the
// endpoint whose closed neighborhood must contain the other's. Ties in
// degree (true twins) point toward the higher id.
bool arc_toward_second(const Graph& g, Vertex tail, Vertex head) {
    int dt = g.degree(tail), dh = g.degree(head);
    return dt > dh || (dt == dh && head > tail);
}

} // namespace

std::optional<TreeRepresentation> recognize_quasi_threshold(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw PreconditionError("recognize_quasi_threshold: empty graph");
    if (!g.is_connected())
        throw PreconditionError("recognize_quasi_threshold requires a connected graph");

    // Nesting test: along every arc u->w, N[w] must be contained in N[u].
    std::vector<int> stamp(static_cast<std::size_t>(n), -1);
    for (Vertex u = 0; u < n; ++u) {
        stamp[static_cast<std::size_t>(u)] = u;
        for (Vertex x : g.neighbors(u)) stamp[static_cast<std::size_t>(x)] = u;
        for (Vertex w : g.neighbors(u)) {
            if (!arc_toward_second(g, u, w)) continue;
            for (Vertex x : g.neighbors(w))
                if (stamp[static_cast<std::size_t>(x)] != u) return std::nullopt;
        }
    }

    // Parent = the in-neighbor with the smallest closed neighborhood, i.e.
    // the deepest vertex whose neighborhood still contains ours. Ties
    // (true twins) resolve toward the higher id, matching the arc rule.
    TreeRepresentation t;
    t.parent.assign(static_cast<std::size_t>(n), -1);
    int roots = 0;
    for (Vertex w = 0; w < n; ++w) {
        Vertex best = -1;
        for (Vertex v : g.neighbors(w)) {
            if (!arc_toward_second(g, v, w)) continue;
            if (best < 0 || g.degree(v) < g.degree(best) ||
                (g.degree(v) == g.degree(best) && v > best))
                best = v;
        }
        t.parent[static_cast<std::size_t>(w)] = best;
        if (best < 0) {
            t.root = w;
            ++roots;
        }
    }
    if (roots != 1)
        throw std::logic_error("quasi-threshold tree construction produced " +
                               std::to_string(roots) + " roots");

    t.depth.assign(static_cast<std::size_t>(n), 0);
    t.child_count.assign(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<Vertex>> children(static_cast<std::size_t>(n));
    for (Vertex w = 0; w < n; ++w) {
        Vertex p = t.parent[static_cast<std::size_t>(w)];
        if (p >= 0) {
            children[static_cast<std::size_t>(p)].push_back(w);
            ++t.child_count[static_cast<std::size_t>(p)];
        }
    }
    std::vector<Vertex> stack{t.root};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex c : children[static_cast<std::size_t>(v)]) {
            t.depth[static_cast<std::size_t>(c)] = t.depth[static_cast<std::size_t>(v)] + 1;
            stack.push_back(c);
        }
    }
    return t;
}

std::vector<PredictedEigenvalue> qt_spectrum_bapat(const Graph& g, const TreeRepresentation& t) {
    std::vector<PredictedEigenvalue> out;
    for (Vertex v = 0; v < g.order(); ++v) {
        int c = t.child_count[static_cast<std::size_t>(v)];
        if (c == 0) continue;  // pendant
        out.push_back({g.degree(v) + 1, 1, Provenance::non_simplicial_degree, -1, {}, {}});
        if (c >= 2)
            out.push_back({t.depth[static_cast<std::size_t>(v)] + 1, c - 1,
                           Provenance::separator_multiplicity, -1, {}, {}});
    }
    out.push_back({0, 1, Provenance::zero, -1, {}, {}});
    return out;
}

std::vector<PredictedEigenvalue> qt_spectrum_structural(const Graph& g,
                                                        const ChordalDecomposition& d) {
    if (!recognize_quasi_threshold(g))
        throw ClassificationError("qt_spectrum_structural: graph is not quasi-threshold");
    std::vector<PredictedEigenvalue> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!d.is_simplicial(v))
            out.push_back({g.degree(v) + 1, 1, Provenance::non_simplicial_degree, -1, {}, {}});
    for (int qi = 0; qi < d.clique_count(); ++qi) {
        int p = static_cast<int>(d.simplicial_per_clique[static_cast<std::size_t>(qi)].size());
        if (p >= 2)
            out.push_back({static_cast<std::int64_t>(d.cliques[static_cast<std::size_t>(qi)].size()),
                           p - 1, Provenance::clique_simplicials, qi, {}, {}});
    }
    for (int si = 0; si < d.separator_count(); ++si)
        out.push_back({static_cast<std::int64_t>(d.separators[static_cast<std::size_t>(si)].size()),
                       d.multiplicity[static_cast<std::size_t>(si)],
                       Provenance::separator_multiplicity, -1,
                       d.separators[static_cast<std::size_t>(si)], {}});
    out.push_back({0, 1, Provenance::zero, -1, {}, {}});
    return out;
}

bool qt_structure_checks(const Graph& g, const ChordalDecomposition& d) {
    auto tree = recognize_quasi_threshold(g);
    if (!tree) throw ClassificationError("qt_structure_checks: graph is not quasi-threshold");

    // (i) every maximal clique has at least one simplicial vertex
    for (const auto& simp : d.simplicial_per_clique)
        if (simp.empty()) return false;

    // (ii) the separators inside each clique form an inclusion chain
    for (const auto& q : d.cliques) {
        std::vector<const std::vector<Vertex>*> inside;
        for (const auto& s : d.separators)
            if (std::includes(q.begin(), q.end(), s.begin(), s.end())) inside.push_back(&s);
        for (std::size_t i = 0; i < inside.size(); ++i)
            for (std::size_t j = i + 1; j < inside.size(); ++j) {
                const auto &a = *inside[i], &b = *inside[j];
                const auto &small = a.size() <= b.size() ? a : b, &big = a.size() <= b.size() ? b : a;
                if (!std::includes(big.begin(), big.end(), small.begin(), small.end()))
                    return false;
            }
    }

    // (iii) every maximal root-to-leaf path is a maximal clique whose
    // simplicial vertices form the tail of the path
    std::set<std::vector<Vertex>> clique_set(d.cliques.begin(), d.cliques.end());
    for (Vertex leaf = 0; leaf < g.order(); ++leaf) {
        if (tree->child_count[static_cast<std::size_t>(leaf)] != 0) continue;
        std::vector<Vertex> path;
        for (Vertex v = leaf; v >= 0; v = tree->parent[static_cast<std::size_t>(v)])
            path.push_back(v);
        std::reverse(path.begin(), path.end());
        for (std::size_t i = 0; i < path.size(); ++i)
            for (std::size_t j = i + 1; j < path.size(); ++j)
                if (!g.has_edge(path[i], path[j])) return false;
        std::vector<Vertex> sorted_path = path;
        std::sort(sorted_path.begin(), sorted_path.end());
        if (clique_set.find(sorted_path) == clique_set.end()) return false;
        bool seen_simplicial = false;
        for (Vertex v : path) {
            if (d.is_simplicial(v))
                seen_simplicial = true;
            else if (seen_simplicial)
                return false;  // simplicial vertices must be a contiguous tail
        }
        if (!d.is_simplicial(leaf)) return false;
    }
    return true;
}

bool is_split_graph(const Graph& g) {
    // Degree-sequence characterization: with degrees d_1 >= ... >= d_n and
    // h = max{i : d_i >= i-1}, the graph is split iff
    // sum_{i<=h} d_i = h(h-1) + sum_{i>h} d_i.
    const int n = g.order();
    std::vector<long long> deg(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    std::sort(deg.rbegin(), deg.rend());
    int h = 0;
    for (int i = 1; i <= n; ++i)
        if (deg[static_cast<std::size_t>(i - 1)] >= i - 1) h = i;
    long long lhs = 0, rhs = static_cast<long long>(h) * (h - 1);
    for (int i = 1; i <= n; ++i) {
        if (i <= h)
            lhs += deg[static_cast<std::size_t>(i - 1)];
        else
            rhs += deg[static_cast<std::size_t>(i - 1)];
    }
    return lhs == rhs;
}

std::optional<KTSplitStructure> recognize_kt_split(const Graph& g,
                                                   const ChordalDecomposition& d) {
    if (!is_split_graph(g)) throw ClassificationError("recognize_kt_split: not a split graph");
    if (d.separators.empty()) return std::nullopt;  // complete graph: no separator to carry twins

    KTSplitStructure s;
    s.r = d.separator_count();
    s.k = static_cast<int>(d.separators.front().size());
    std::vector<char> in_sep(static_cast<std::size_t>(g.order()), 0);
    for (const auto& sep : d.separators) {
        if (static_cast<int>(sep.size()) != s.k) return std::nullopt;
        for (Vertex v : sep) {
            if (in_sep[static_cast<std::size_t>(v)]) return std::nullopt;  // not disjoint
            in_sep[static_cast<std::size_t>(v)] = 1;
        }
    }

    std::map<std::vector<Vertex>, int> sep_index;
    for (int i = 0; i < s.r; ++i) sep_index.emplace(d.separators[static_cast<std::size_t>(i)], i);
    s.separators = d.separators;
    s.twin_classes.assign(static_cast<std::size_t>(s.r), {});
    for (Vertex v : d.simplicial) {
        std::vector<Vertex> nb(g.neighbors(v).begin(), g.neighbors(v).end());
        auto it = sep_index.find(nb);
        if (it == sep_index.end()) return std::nullopt;  // simplicial not attached to a separator
        s.twin_classes[static_cast<std::size_t>(it->second)].push_back(v);
    }
    s.t = static_cast<int>(s.twin_classes.front().size());
    if (s.t == 0) return std::nullopt;
    for (const auto& cls : s.twin_classes)
        if (static_cast<int>(cls.size()) != s.t) return std::nullopt;

    if (g.order() != (s.k + s.t) * s.r) return std::nullopt;
    // biregularity: simplicial side degree k, clique side degree rk+t-1
    for (Vertex v = 0; v < g.order(); ++v) {
        int want = d.is_simplicial(v) ? s.k : s.r * s.k + s.t - 1;
        if (g.degree(v) != want) return std::nullopt;
    }
    return s;
}

std::vector<PredictedEigenvalue> kt_split_partial_spectrum(const KTSplitStructure& s) {
    const std::int64_t k = s.k, t = s.t, r = s.r;
    EigenvalueMultiset ms;
    ms[k] += static_cast<int>(r * (t - 1));
    ms[r * k + t] += static_cast<int>(r * (k - 1));
    ms[k + t] += 1;
    std::vector<PredictedEigenvalue> out;
    out.push_back({0, 1, Provenance::zero, -1, {}, {}});
    for (auto [value, mult] : ms)
        if (mult > 0) out.push_back({value, mult, Provenance::kt_split, -1, {}, {}});
    return out;
}

std::vector<PredictedEigenvalue> simplicial_twin_predictions(const Graph& g,
                                                             const ChordalDecomposition& d) {
    std::vector<PredictedEigenvalue> out;
    for (int qi = 0; qi < d.clique_count(); ++qi) {
        const auto& simp = d.simplicial_per_clique[static_cast<std::size_t>(qi)];
        if (simp.size() < 2) continue;
        PredictedEigenvalue p;
        p.value = static_cast<std::int64_t>(d.cliques[static_cast<std::size_t>(qi)].size());
        p.multiplicity = static_cast<int>(simp.size()) - 1;
        p.provenance = Provenance::simplicial_twins;
        p.clique = qi;
        Vertex anchor = simp.front();  // lowest id: clique vertex lists are sorted
        for (std::size_t i = 1; i < simp.size(); ++i) p.vectors.push_back({anchor, simp[i]});
        (void)g;
        out.push_back(std::move(p));
    }
    return out;
}

bool is_threshold_graph(const Graph& g) {
    // Reverse peeling. Every universal removal lowers all remaining
    // degrees by one, so with u removals so far a vertex is universal iff
    // deg0 - u == active - 1 and isolated iff deg0 - u == 0; the candidates
    // are always the extremes of the original degree order.
    const int n = g.order();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    int lo = 0, hi = n - 1, active = n, removed_universal = 0;
    while (active > 0) {
        if (g.degree(order[static_cast<std::size_t>(hi)]) - removed_universal == active - 1) {
            --hi;
            ++removed_universal;
        } else if (g.degree(order[static_cast<std::size_t>(lo)]) - removed_universal == 0) {
            ++lo;
        } else {
            return false;
        }
        --active;
    }
    return true;
}

namespace {

bool is_split_complete_graph(const Graph& g) {
    const int n = g.order();
    std::vector<char> universal(static_cast<std::size_t>(n), 0);
    int u_count = 0;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) {
            universal[static_cast<std::size_t>(v)] = 1;
            ++u_count;
        }
    if (u_count == 0 || u_count == n) return false;  // complete graphs excluded
    for (auto [a, b] : g.edge_list())
        if (!universal[static_cast<std::size_t>(a)] && !universal[static_cast<std::size_t>(b)])
            return false;
    return true;
}

bool is_windmill_graph(const Graph& g) {
    const int n = g.order();
    std::vector<Vertex> universal;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) universal.push_back(v);
    if (universal.size() != 1) return false;
    Vertex hub = universal.front();
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
        if (v != hub) rest.push_back(v);
    auto [sub, labels] = induced_subgraph(g, rest);
    (void)labels;
    auto comps = connected_components(sub);
    if (comps.size() < 2) return false;
    std::size_t size = comps.front().size();
    for (const auto& comp : comps) {
        if (comp.size() != size) return false;
        for (Vertex v : comp)
            if (sub.degree(v) != static_cast<int>(size) - 1) return false;  // blade must be complete
    }
    return true;
}

void assert_hierarchy(const Classification& c) {
    auto require = [](bool child, bool parent, const char* what) {
        if (child && !parent) throw std::logic_error(std::string("class hierarchy violation: ") + what);
    };
    require(c.kappa_equals_a, c.chordal, "kappa_equals_a => chordal");
    require(c.split, c.chordal, "split => chordal");
    require(c.quasi_threshold, c.kappa_equals_a, "quasi_threshold => kappa_equals_a");
    require(c.threshold, c.quasi_threshold, "threshold => quasi_threshold");
    require(c.threshold, c.split, "threshold => split");
    require(c.kt_split, c.split, "kt_split => split");
    require(c.gen_core_satellite, c.quasi_threshold, "gen_core_satellite => quasi_threshold");
    require(c.split_complete, c.kt_split, "split_complete => kt_split");
    require(c.split_complete, c.threshold, "split_complete => threshold");
    require(c.split_complete, c.gen_core_satellite, "split_complete => gen_core_satellite");
    require(c.windmill, c.gen_core_satellite, "windmill => gen_core_satellite");
}

} // namespace

Classification classify(const Graph& g, const ChordalDecomposition* d) {
    if (!g.is_connected()) throw PreconditionError("classify requires a connected graph");
    Classification c;
    c.chordal = d != nullptr || is_chordal(g);
    c.split = is_split_graph(g);
    if (c.chordal) {
        ChordalDecomposition local;
        if (!d) {
            local = decompose(g);
            d = &local;
        }
        bool complete = d->clique_count() == 1;
        c.kappa_equals_a = complete || check_kappa_equals_a(g, *d).has_value();
        c.quasi_threshold = recognize_quasi_threshold(g).has_value();
        c.threshold = is_threshold_graph(g);
        c.kt_split = c.split && recognize_kt_split(g, *d).has_value();
        c.gen_core_satellite = d->separator_count() == 1;
        c.split_complete = is_split_complete_graph(g);
        c.windmill = is_windmill_graph(g);
    }
    assert_hierarchy(c);
    return c;
}

Classification classify(const Graph& g) { return classify(g, nullptr); }

} // namespace chordal
