#include "chordal/report.hpp"

#include "chordal/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace chordal {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool contained_in_groups(const EigenvalueMultiset& ms, const std::vector<IntegerGroup>& groups) {
    for (auto [value, mult] : ms) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [v = value](const IntegerGroup& gr) { return gr.value == v; });
        if (it == groups.end() || it->multiplicity < mult) return false;
    }
    return true;
}

bool equals_full_spectrum(const EigenvalueMultiset& ms, const Spectrum& s, double tol) {
    EigenvalueMultiset seen;
    for (double lam : s.values) {
        double r = std::round(lam);
        if (std::fabs(lam - r) > tol) return false;
        ++seen[static_cast<std::int64_t>(r)];
    }
    return seen == ms;
}

std::vector<Vertex> relabel(const std::vector<Vertex>& vs, const std::vector<Vertex>& labels) {
    std::vector<Vertex> out;
    out.reserve(vs.size());
    for (Vertex v : vs) out.push_back(labels[static_cast<std::size_t>(v)]);
    return out;
}

nlohmann::ordered_json prediction_to_json(const PredictedEigenvalue& p,
                                          const std::vector<Vertex>& labels,
                                          const std::vector<IntegerGroup>* groups) {
    nlohmann::ordered_json j;
    j["value"] = p.value;
    j["multiplicity"] = p.multiplicity;
    j["provenance"] = provenance_tag(p.provenance);
    if (groups) {
        auto it = std::find_if(groups->begin(), groups->end(),
                               [&](const IntegerGroup& gr) { return gr.value == p.value; });
        j["confirmed"] = it != groups->end() && it->multiplicity >= p.multiplicity;
    }
    if (p.clique >= 0) j["clique"] = p.clique;
    if (!p.separator.empty()) j["separator"] = relabel(p.separator, labels);
    if (!p.vectors.empty()) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& v : p.vectors) {
            nlohmann::ordered_json e;
            e["plus"] = labels[static_cast<std::size_t>(v.plus)];
            e["minus"] = labels[static_cast<std::size_t>(v.minus)];
            arr.push_back(std::move(e));
        }
        j["eigenvectors"] = std::move(arr);
    }
    return j;
}

void run_verdicts(ComponentAnalysis& c, double tol) {
    if (!c.oracle_ran || !c.spectrum) return;
    const Spectrum& s = *c.spectrum;
    const int n = c.graph.order();

    if (c.chordal) {
        auto twins = to_multiset(simplicial_twin_predictions(c.graph, *c.decomposition));
        c.verdicts.push_back({"clique_size_predictions_contained",
                              contained_in_groups(twins, c.integer_groups), ""});
    }
    if (!c.qt_structural.empty()) {
        bool same = to_multiset(c.qt_structural) == to_multiset(c.qt_bapat);
        c.verdicts.push_back({"qt_tree_equals_structural", same, ""});
        c.verdicts.push_back({"qt_spectrum_equals_oracle",
                              equals_full_spectrum(to_multiset(c.qt_structural), s, tol), ""});
    }
    if (c.kt) {
        auto partial = to_multiset(kt_split_partial_spectrum(*c.kt));
        bool ok = c.kt->r == 1 ? equals_full_spectrum(partial, s, tol)
                               : contained_in_groups(partial, c.integer_groups);
        c.verdicts.push_back({"kt_split_spectrum_" + std::string(c.kt->r == 1 ? "equals" : "contained"),
                              ok, ""});
    }
    if (c.chordal && c.decomposition->clique_count() > 1 && n >= 2) {
        int kappa = vertex_connectivity_chordal(c.graph, *c.decomposition);
        double a = algebraic_connectivity(s);
        bool structural = c.kappa_witness.has_value();
        bool numerical = std::fabs(a - static_cast<double>(kappa)) < 1e-7;
        c.verdicts.push_back({"kappa_equals_a_matches_oracle", structural == numerical, ""});
        c.verdicts.push_back({"fiedler_bound", fiedler_check(c.graph, s, kappa), ""});
    }
}

} // namespace

bool AnalysisReport::all_ok() const {
    for (const auto& c : components)
        for (const auto& v : c.verdicts)
            if (!v.ok) return false;
    return true;
}

AnalysisReport analyze(const Graph& g, const AnalyzeOptions& opt) {
    AnalysisReport r;
    r.n = g.order();
    r.m = g.size();
    r.connected = g.is_connected();
    r.tol = opt.tol;

    for (auto& comp_vertices : connected_components(g)) {
        ComponentAnalysis c;
        auto [sub, labels] = induced_subgraph(g, comp_vertices);
        c.vertices = labels;
        c.graph = std::move(sub);

        auto t0 = Clock::now();
        c.chordal = is_chordal(c.graph);
        if (c.chordal) c.decomposition = decompose(c.graph);
        c.timings.decompose_ms = ms_since(t0);

        t0 = Clock::now();
        c.classification = classify(c.graph, c.chordal ? &*c.decomposition : nullptr);
        c.timings.classify_ms = ms_since(t0);

        t0 = Clock::now();
        if (c.chordal) {
            const auto& d = *c.decomposition;
            auto twins = simplicial_twin_predictions(c.graph, d);
            c.predictions.insert(c.predictions.end(), twins.begin(), twins.end());
            if (d.clique_count() > 1) c.kappa_witness = check_kappa_equals_a(c.graph, d);
            c.tree = recognize_quasi_threshold(c.graph);
            if (c.tree) {
                c.qt_structural = qt_spectrum_structural(c.graph, d);
                c.qt_bapat = qt_spectrum_bapat(c.graph, *c.tree);
                c.predictions.insert(c.predictions.end(), c.qt_structural.begin(),
                                     c.qt_structural.end());
            }
            if (c.classification.split) {
                c.kt = recognize_kt_split(c.graph, d);
                if (c.kt) {
                    auto partial = kt_split_partial_spectrum(*c.kt);
                    c.predictions.insert(c.predictions.end(), partial.begin(), partial.end());
                }
            }
        }
        c.timings.predict_ms = ms_since(t0);

        if (!opt.run_oracle) {
            c.oracle_note = "skipped: disabled";
        } else if (c.graph.order() > opt.oracle_max_n && !opt.force_oracle) {
            c.oracle_note = "skipped: n > " + std::to_string(opt.oracle_max_n) +
                            " (use --force-oracle)";
        } else {
            t0 = Clock::now();
            c.spectrum = eigenvalues(laplacian(c.graph));
            c.integer_groups = integer_eigenvalues(*c.spectrum, opt.tol);
            c.oracle_ran = true;
            c.timings.oracle_ms = ms_since(t0);
        }

        run_verdicts(c, opt.tol);
        r.components.push_back(std::move(c));
    }
    return r;
}

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", x);
    // normalize the sign of zero so reports never print -0.000000000
    if (std::string(buf) == "-0.000000000") return "0.000000000";
    return buf;
}

nlohmann::ordered_json classification_to_json(const Classification& c) {
    nlohmann::ordered_json j;
    j["chordal"] = c.chordal;
    j["split"] = c.split;
    j["kappa_equals_a"] = c.kappa_equals_a;
    j["quasi_threshold"] = c.quasi_threshold;
    j["threshold"] = c.threshold;
    j["kt_split"] = c.kt_split;
    j["gen_core_satellite"] = c.gen_core_satellite;
    j["split_complete"] = c.split_complete;
    j["windmill"] = c.windmill;
    return j;
}

nlohmann::ordered_json decomposition_to_json(const ChordalDecomposition& d,
                                             const std::vector<Vertex>& labels) {
    nlohmann::ordered_json j;
    auto cliques = nlohmann::ordered_json::array();
    for (const auto& q : d.cliques) cliques.push_back(relabel(q, labels));
    j["cliques"] = std::move(cliques);
    auto seps = nlohmann::ordered_json::array();
    for (int i = 0; i < d.separator_count(); ++i) {
        nlohmann::ordered_json s;
        s["vertices"] = relabel(d.separators[static_cast<std::size_t>(i)], labels);
        s["multiplicity"] = d.multiplicity[static_cast<std::size_t>(i)];
        seps.push_back(std::move(s));
    }
    j["separators"] = std::move(seps);
    j["simplicial"] = relabel(d.simplicial, labels);
    return j;
}

nlohmann::ordered_json report_to_json(const AnalysisReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["input"] = {{"n", r.n}, {"m", r.m}, {"connected", r.connected}};
    j["tolerance"] = format_real(r.tol);
    auto comps = nlohmann::ordered_json::array();
    for (const auto& c : r.components) {
        nlohmann::ordered_json cj;
        cj["vertices"] = c.vertices;
        cj["n"] = c.graph.order();
        cj["m"] = c.graph.size();
        cj["chordal"] = c.chordal;
        if (c.decomposition) cj["decomposition"] = decomposition_to_json(*c.decomposition, c.vertices);
        cj["classification"] = classification_to_json(c.classification);
        if (c.kappa_witness) cj["kappa_equals_a_witness"] = relabel(*c.kappa_witness, c.vertices);
        if (c.kt) {
            nlohmann::ordered_json kj;
            kj["k"] = c.kt->k;
            kj["t"] = c.kt->t;
            kj["r"] = c.kt->r;
            auto seps = nlohmann::ordered_json::array();
            for (const auto& s : c.kt->separators) seps.push_back(relabel(s, c.vertices));
            kj["separators"] = std::move(seps);
            auto twins = nlohmann::ordered_json::array();
            for (const auto& a : c.kt->twin_classes) twins.push_back(relabel(a, c.vertices));
            kj["twin_classes"] = std::move(twins);
            cj["kt_split"] = std::move(kj);
        }
        auto preds = nlohmann::ordered_json::array();
        for (const auto& p : c.predictions)
            preds.push_back(prediction_to_json(p, c.vertices, c.oracle_ran ? &c.integer_groups : nullptr));
        cj["predictions"] = std::move(preds);
        if (c.oracle_ran) {
            nlohmann::ordered_json sj;
            auto vals = nlohmann::ordered_json::array();
            for (double x : c.spectrum->values) vals.push_back(format_real(x));
            sj["values"] = std::move(vals);
            if (c.graph.order() >= 2)
                sj["algebraic_connectivity"] = format_real(algebraic_connectivity(*c.spectrum));
            auto groups = nlohmann::ordered_json::array();
            for (const auto& gr : c.integer_groups)
                groups.push_back({{"value", gr.value}, {"multiplicity", gr.multiplicity}});
            sj["integer_groups"] = std::move(groups);
            cj["spectrum"] = std::move(sj);
        } else {
            cj["oracle_note"] = c.oracle_note;
        }
        auto verdicts = nlohmann::ordered_json::array();
        for (const auto& v : c.verdicts) {
            nlohmann::ordered_json vj;
            vj["name"] = v.name;
            vj["ok"] = v.ok;
            if (!v.note.empty()) vj["note"] = v.note;
            verdicts.push_back(std::move(vj));
        }
        cj["verification"] = std::move(verdicts);
        cj["timings_ms"] = {{"decompose", c.timings.decompose_ms},
                            {"classify", c.timings.classify_ms},
                            {"predict", c.timings.predict_ms},
                            {"oracle", c.timings.oracle_ms}};
        comps.push_back(std::move(cj));
    }
    j["components"] = std::move(comps);
    j["all_ok"] = r.all_ok();
    return j;
}

void print_summary(std::ostream& out, const AnalysisReport& r) {
    out << "graph: n=" << r.n << " m=" << r.m << (r.connected ? "" : " (disconnected)") << "\n";
    for (std::size_t i = 0; i < r.components.size(); ++i) {
        const auto& c = r.components[i];
        if (r.components.size() > 1)
            out << "component " << i << ": n=" << c.graph.order() << " m=" << c.graph.size() << "\n";
        out << "  chordal: " << (c.chordal ? "yes" : "no") << "\n";
        if (c.decomposition) {
            out << "  cliques: " << c.decomposition->clique_count()
                << ", distinct separators: " << c.decomposition->separator_count()
                << ", simplicial vertices: " << c.decomposition->simplicial.size() << "\n";
        }
        const auto& cl = c.classification;
        out << "  classes:";
        if (cl.chordal) out << " chordal";
        if (cl.split) out << " split";
        if (cl.kappa_equals_a) out << " kappa=a";
        if (cl.quasi_threshold) out << " quasi-threshold";
        if (cl.threshold) out << " threshold";
        if (cl.kt_split) out << " (k,t)-split";
        if (cl.gen_core_satellite) out << " gen-core-satellite";
        if (cl.split_complete) out << " split-complete";
        if (cl.windmill) out << " windmill";
        out << "\n";
        auto print_multiset = [&out](const char* label, const EigenvalueMultiset& ms) {
            if (ms.empty()) return;
            out << "  " << label << ":";
            int shown = 0;
            for (auto [value, mult] : ms) {
                if (++shown > 24) {
                    out << " ... (" << ms.size() << " distinct values)";
                    break;
                }
                out << " " << value << "x" << mult;
            }
            out << "\n";
        };
        EigenvalueMultiset twins;
        for (const auto& p : c.predictions)
            if (p.provenance == Provenance::simplicial_twins) twins[p.value] += p.multiplicity;
        print_multiset("clique-size predictions", twins);
        print_multiset("quasi-threshold spectrum", to_multiset(c.qt_structural));
        if (c.kt) print_multiset("(k,t)-split guaranteed values",
                                 to_multiset(kt_split_partial_spectrum(*c.kt)));
        if (c.oracle_ran) {
            out << "  oracle integer groups:";
            for (const auto& gr : c.integer_groups)
                out << " " << gr.value << "x" << gr.multiplicity;
            out << "\n";
            for (const auto& v : c.verdicts)
                out << "  [" << (v.ok ? "ok" : "FAIL") << "] " << v.name << "\n";
        } else {
            out << "  oracle: " << c.oracle_note << "\n";
        }
    }
}

} // namespace chordal
