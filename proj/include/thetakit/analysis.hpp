#pragma once

#include <string>
#include <vector>

#include "thetakit/bounds.hpp"
#include "thetakit/exact.hpp"
#include "thetakit/graph.hpp"
#include "thetakit/report.hpp"
#include "thetakit/theta.hpp"

namespace thetakit {

// spectrum, theta, srg, ramanujan, product-bounds, chromatic-bounds, capacity, k0
const std::vector<std::string>& analysis_tasks();

struct AnalysisOptions {
    std::vector<std::string> tasks;
    SolveOptions solve;
    ThetaOptions theta;
    int power_k = 3;              // strong powers examined by product-bounds
    double violation_tol = 1e-6;  // relative slack below which a report counts as violated
};

struct AnalysisSection {
    std::string task;
    Json values = Json::object();
    std::vector<BoundReport> reports;
};

struct AnalysisReport {
    std::string graph;
    int n = 0;
    long long edges = 0;
    std::vector<AnalysisSection> sections;
    double violation_tol = 1e-6;

    std::vector<const BoundReport*> violations() const;
    Json to_json() const;
};

// Throws std::invalid_argument for unknown task names or an empty task list.
AnalysisReport analyze(const Graph& g, const AnalysisOptions& opt);

std::string render_table(const AnalysisReport& r, bool color);

struct PowerRow {
    int k = 0;
    double order = 0;
    double degree = 0;
    double lambda2 = 0;
    double lambda_min = 0;
    std::optional<double> lambda2_lower;   // theta-based product bound
    std::optional<double> lambda_min_upper;
    double alon_boppana = 0;               // 2 sqrt(d_k - 1)
    std::optional<bool> ramanujan;
};

struct PowerTable {
    std::string graph;
    double theta_lower = 0;
    double theta_upper = 0;
    std::string theta_source;
    std::vector<PowerRow> rows;

    std::vector<BoundReport> reports() const;
    Json to_json() const;
};

// Per-k spectra of G^k from the factor spectrum (no materialisation) with the product bounds.
PowerTable power_table(const Graph& g, int k_max, const ThetaOptions& topt = {});
std::string render_power_table(const PowerTable& t, bool color);

}  // namespace thetakit
