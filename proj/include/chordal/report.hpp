#pragma once

#include "chordal/decomposition.hpp"
#include "chordal/graph.hpp"
#include "chordal/spectrum.hpp"
#include "chordal/structural.hpp"

#include "json.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace chordal {

struct AnalyzeOptions {
    bool run_oracle = true;
    bool force_oracle = false;    ///< override the size guardrail
    int oracle_max_n = 2000;      ///< dense-solver guardrail
    double tol = 1e-6;            ///< integer-detection tolerance
};

struct Verdict {
    std::string name;
    bool ok = false;
    std::string note;
};

struct StageTimings {
    double decompose_ms = 0.0;
    double classify_ms = 0.0;
    double predict_ms = 0.0;
    double oracle_ms = 0.0;
};

/// Analysis of one connected component, vertices relabeled 0..k-1 with
/// `vertices` holding the original labels.
struct ComponentAnalysis {
    std::vector<Vertex> vertices;
    Graph graph;
    bool chordal = false;
    std::optional<ChordalDecomposition> decomposition;
    Classification classification;
    std::optional<KTSplitStructure> kt;
    std::optional<TreeRepresentation> tree;
    std::vector<PredictedEigenvalue> predictions;       ///< all structure-only predictions
    std::vector<PredictedEigenvalue> qt_structural;     ///< present iff quasi-threshold
    std::vector<PredictedEigenvalue> qt_bapat;          ///< present iff quasi-threshold
    std::optional<std::vector<Vertex>> kappa_witness;
    bool oracle_ran = false;
    std::string oracle_note;
    std::optional<Spectrum> spectrum;
    std::vector<IntegerGroup> integer_groups;
    std::vector<Verdict> verdicts;
    StageTimings timings;
};

struct AnalysisReport {
    int n = 0;
    int m = 0;
    bool connected = false;
    double tol = 1e-6;
    std::vector<ComponentAnalysis> components;

    bool all_ok() const;
};

AnalysisReport analyze(const Graph& g, const AnalyzeOptions& opt);

nlohmann::ordered_json report_to_json(const AnalysisReport& r);
nlohmann::ordered_json classification_to_json(const Classification& c);
nlohmann::ordered_json decomposition_to_json(const ChordalDecomposition& d,
                                             const std::vector<Vertex>& labels);

void print_summary(std::ostream& out, const AnalysisReport& r);

/// Fixed 9-decimal rendering used for spectra in reports.
std::string format_real(double x);

} // namespace chordal
