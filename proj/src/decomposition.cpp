#include "chordal/decomposition.hpp"

#include "chordal/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace chordal {

namespace {

struct McsRun {
    std::vector<Vertex> order;              // visit order
    std::vector<int> position;              // position[v] = index in order
    std::vector<int> weight_at_visit;       // |visited neighbors| when v was visited
    std::vector<std::vector<Vertex>> madj;  // visited neighbors of v at its visit
};

// Maximum cardinality search with weight buckets. Ties break toward the
// lowest vertex id, which makes every downstream structure deterministic.
McsRun run_mcs(const Graph& g, bool collect_madj) {
    const int n = g.order();
    McsRun r;
    r.order.reserve(static_cast<std::size_t>(n));
    r.position.assign(static_cast<std::size_t>(n), -1);
    r.weight_at_visit.assign(static_cast<std::size_t>(n), 0);
    if (collect_madj) r.madj.resize(static_cast<std::size_t>(n));

    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<std::set<Vertex>> bucket(static_cast<std::size_t>(n) + 1);
    for (Vertex v = 0; v < n; ++v) bucket[0].insert(v);
    int max_w = 0;

    for (int i = 0; i < n; ++i) {
        while (max_w > 0 && bucket[static_cast<std::size_t>(max_w)].empty()) --max_w;
        Vertex v = *bucket[static_cast<std::size_t>(max_w)].begin();
        bucket[static_cast<std::size_t>(max_w)].erase(bucket[static_cast<std::size_t>(max_w)].begin());
        r.position[static_cast<std::size_t>(v)] = i;
        r.order.push_back(v);
        r.weight_at_visit[static_cast<std::size_t>(v)] = weight[static_cast<std::size_t>(v)];
        for (Vertex w : g.neighbors(v)) {
            if (r.position[static_cast<std::size_t>(w)] >= 0) {
                if (collect_madj) r.madj[static_cast<std::size_t>(v)].push_back(w);
            } else {
                int& ww = weight[static_cast<std::size_t>(w)];
                bucket[static_cast<std::size_t>(ww)].erase(w);
                ++ww;
                bucket[static_cast<std::size_t>(ww)].insert(w);
                if (ww > max_w) max_w = ww;
            }
        }
    }
    return r;
}

void require_connected(const Graph& g, const char* op) {
    if (!g.is_connected())
        throw PreconditionError(std::string(op) + " requires a connected graph");
}

// Elimination-ordering verification (the A-set test): for each vertex in
// elimination order, its later neighbors must contain everything promised
// by previously eliminated vertices that chose it as parent.
bool verify_peo(const Graph& g, const McsRun& mcs) {
    const int n = g.order();
    // elimination position: reverse of the visit order
    std::vector<int> epos(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        epos[static_cast<std::size_t>(v)] = n - 1 - mcs.position[static_cast<std::size_t>(v)];

    std::vector<std::vector<Vertex>> pending(static_cast<std::size_t>(n));
    std::vector<int> stamp(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        Vertex v = mcs.order[static_cast<std::size_t>(n - 1 - i)];
        for (Vertex u : g.neighbors(v)) stamp[static_cast<std::size_t>(u)] = i;
        for (Vertex u : pending[static_cast<std::size_t>(v)])
            if (stamp[static_cast<std::size_t>(u)] != i) return false;
        Vertex parent = -1;
        int best = n;
        for (Vertex u : g.neighbors(v)) {
            int p = epos[static_cast<std::size_t>(u)];
            if (p > i && p < best) {
                best = p;
                parent = u;
            }
        }
        if (parent < 0) continue;
        for (Vertex u : g.neighbors(v)) {
            int p = epos[static_cast<std::size_t>(u)];
            if (p > i && u != parent) pending[static_cast<std::size_t>(parent)].push_back(u);
        }
    }
    return true;
}

} // namespace

std::vector<Vertex> mcs_order(const Graph& g) {
    require_connected(g, "mcs_order");
    return run_mcs(g, false).order;
}

bool is_chordal(const Graph& g) {
    require_connected(g, "is_chordal");
    return verify_peo(g, run_mcs(g, false));
}

ChordalDecomposition decompose(const Graph& g) {
    require_connected(g, "decompose");
    const int n = g.order();
    McsRun mcs = run_mcs(g, true);
    if (!verify_peo(g, mcs)) throw ClassificationError("decompose: graph is not chordal");

    ChordalDecomposition d;
    d.peo.assign(mcs.order.rbegin(), mcs.order.rend());
    d.home_clique.assign(static_cast<std::size_t>(n), -1);

    // A maximal clique closes whenever the cardinality counter fails to
    // increase; the fresh clique is the new vertex plus its visited
    // neighborhood, and it hangs off the clique of the most recently
    // visited such neighbor.
    std::vector<std::vector<Vertex>> raw_separators;
    int current = -1;
    int prev_w = -1;
    for (int i = 0; i < n; ++i) {
        Vertex v = mcs.order[static_cast<std::size_t>(i)];
        int w = mcs.weight_at_visit[static_cast<std::size_t>(v)];
        if (i == 0) {
            d.cliques.push_back({v});
            current = 0;
        } else if (w <= prev_w) {
            const auto& madj = mcs.madj[static_cast<std::size_t>(v)];
            Vertex attach = madj.front();
            for (Vertex u : madj)
                if (mcs.position[static_cast<std::size_t>(u)] > mcs.position[static_cast<std::size_t>(attach)])
                    attach = u;
            int parent = d.home_clique[static_cast<std::size_t>(attach)];
            std::vector<Vertex> clique = madj;
            clique.push_back(v);
            d.cliques.push_back(std::move(clique));
            current = d.clique_count() - 1;
            d.tree_edges.emplace_back(current, parent);
            raw_separators.push_back(madj);
        } else {
            d.cliques[static_cast<std::size_t>(current)].push_back(v);
        }
        d.home_clique[static_cast<std::size_t>(v)] = current;
        prev_w = w;
    }

    for (auto& q : d.cliques) std::sort(q.begin(), q.end());

    std::map<std::vector<Vertex>, int> sep_index;
    for (auto& s : raw_separators) {
        std::sort(s.begin(), s.end());
        auto [it, inserted] = sep_index.emplace(s, d.separator_count());
        if (inserted) {
            d.separators.push_back(it->first);
            d.multiplicity.push_back(0);
        }
        d.edge_separator.push_back(it->second);
        ++d.multiplicity[static_cast<std::size_t>(it->second)];
    }

    d.clique_membership.assign(static_cast<std::size_t>(n), 0);
    for (const auto& q : d.cliques)
        for (Vertex v : q) ++d.clique_membership[static_cast<std::size_t>(v)];
    d.simplicial_per_clique.resize(d.cliques.size());
    for (std::size_t qi = 0; qi < d.cliques.size(); ++qi)
        for (Vertex v : d.cliques[qi])
            if (d.clique_membership[static_cast<std::size_t>(v)] == 1)
                d.simplicial_per_clique[qi].push_back(v);
    for (Vertex v = 0; v < n; ++v)
        if (d.clique_membership[static_cast<std::size_t>(v)] == 1) d.simplicial.push_back(v);
    return d;
}

std::vector<Vertex> simplicial_vertices(const Graph&, const ChordalDecomposition& d) {
    return d.simplicial;
}

int vertex_connectivity_chordal(const Graph& g, const ChordalDecomposition& d) {
    if (d.separators.empty()) return g.order() - 1;  // complete graph
    std::size_t best = d.separators.front().size();
    for (const auto& s : d.separators) best = std::min(best, s.size());
    return static_cast<int>(best);
}

} // namespace chordal
