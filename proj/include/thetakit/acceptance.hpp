#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace thetakit {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;      // first failure, or a short summary on success
    double seconds = 0;
};

struct AcceptanceOptions {
    bool include_slow = false;                           // Cameron capacity certificate
    std::chrono::duration<double> solver_budget{120.0};  // per exact solve
    int sweep_products = 200;
    std::uint64_t seed = 20221106;
};

// Each check is self-contained and deterministic.
CriterionResult check_srg_closed_forms();
CriterionResult check_exact_theta();
CriterionResult check_pentagon_power_table();
CriterionResult check_k0_and_ramanujan();
CriterionResult check_equality_iff_srg();
CriterionResult check_g_sequence();
CriterionResult check_chromatic(const AcceptanceOptions& opt = {});
CriterionResult check_capacity(const AcceptanceOptions& opt = {});
CriterionResult check_affine_polar();
CriterionResult check_oracle_sweep(const AcceptanceOptions& opt = {});

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});

}  // namespace thetakit
