#pragma once

#include <optional>

#include "denom/denom.hpp"
#include "qpoch/qpoch.hpp"
#include "uqd/fusion.hpp"

namespace qar::report {

using cartan::CartanType;
using quiver::DynkinQuiver;

struct CheckResult {
    std::string id;
    bool passed = false;
    std::string detail;
};

struct Report {
    std::string command;
    bool passed = true;
    long elapsed_ms = 0;
    std::vector<CheckResult> checks;
    std::string text;  // human-readable payload
    std::string dot;   // graph payload, empty when not applicable
    std::string json_data;  // extra machine-readable payload (already-encoded object)

    void add(CheckResult c) {
        passed = passed && c.passed;
        checks.push_back(std::move(c));
    }
    std::string to_json() const;
    std::string to_text() const;
};

/// effective worker count: explicit argument, else the QAR_JOBS environment
/// variable, else the hardware concurrency
int effective_jobs(int requested);

/// deterministic parallel map over [0, n): results land in a pre-sized vector
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

Report run_denom(char family, int rank, int k, int l);
Report run_quiver(char family, int rank, const std::string& arrows);
Report run_phi(char family, int rank, const std::string& arrows, int base_vertex, int base_value,
               bool print_ar, bool use_window = false, int window_lo = 0, int window_hi = 0);
Report run_gammaj(char family, int rank, const std::string& arrows, int base_vertex, int base_value);
Report run_verify(const std::string& suite, char family, int rank, const std::string& arrows,
                  bool all_orientations, int jobs);
Report run_qpoch_verify(int rank);
Report run_rmatrix(const std::string& action, const std::string& rep_a, const std::string& rep_b,
                   int rank);
Report run_fusion(int k, int rank);

}  // namespace qar::report
