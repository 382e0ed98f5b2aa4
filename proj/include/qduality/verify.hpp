#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qduality/measures.hpp"

namespace qduality {

// The seven inequalities checked on every state:
//   tohs_l  : C_hs <= S_l(iota)
//   tohs_vn : C_hs <= S_vn(iota)
//   heub    : C_wy <= Upsilon
//   heub2   : C_wy <= Omega
//   cpl1    : C_l1 + P_l1 <= d-1
//   tocp    : C_hs <= 2 sum_{m<n} rho_mm rho_nn
//   tocpH   : C_wy <= 2 sum_{m<n} (sqrt rho)_mm (sqrt rho)_nn
inline constexpr int kNumInequalities = 7;

struct IneqVerdict {
    const char* name;
    double slack;  // bound minus left-hand side
    double tol;    // pass iff slack >= -tol
    bool pass;
};

// Every measure, bound and verdict for one state, computed from a single
// eigendecomposition.
struct StateQuantifiers {
    double c_hs = 0, c_wy = 0, c_l1 = 0;
    double s_l_iota = 0, s_vn_iota = 0;
    double upsilon = 0, omega = 0;
    double p_hs_l = 0, p_hs_vn = 0, p_l1 = 0;
    double bound_pop_hs = 0, bound_pop_wy = 0;
    double slack_tohs_l = 0, slack_tohs_vn = 0, slack_heub = 0, slack_heub2 = 0,
           slack_cpl1 = 0;
    std::array<IneqVerdict, kNumInequalities> verdicts{};
    bool pass_all = false;

    std::vector<MeasureValue> measure_values() const;
};

StateQuantifiers evaluate_state(const DensityMatrix& rho, const Tolerances& tol = {});

struct TradeoffRecord {
    int d = 0;
    std::int64_t sample_id = 0;
    std::uint64_t stream_seed = 0;  // per-sample seed, recorded in the CSV
    int rank = 0;
    StateQuantifiers q;
};

struct WernerRecord {
    double w = 0, a = 0;
    StateQuantifiers q;
};

// Engines run either as the plain serial reference implementation or as the
// OpenMP kernel; both produce identical results because every sample owns an
// independently derived RNG stream keyed by (seed, d, sample_id).
enum class ExecMode { serial, parallel };

// Worker count for the parallel engines: the OpenMP default, capped by the
// QDUALITY_THREADS environment variable (integer >= 1) and by `cap` when > 0.
int resolve_worker_count(int cap = 0);

struct CampaignConfig {
    int d_min = 2;
    int d_max = 8;
    std::int64_t samples = 1000;
    int rank = 0;  // 0 = full rank (per-dimension d)
    std::uint64_t seed = 1;
    Tolerances tol{};
    int max_threads = 0;             // 0 = env/OpenMP default
    std::int64_t corrupt_sample = -1;  // test hook: flat record index to corrupt
};

struct DimensionSummary {
    int d = 0;
    std::int64_t samples = 0;
    std::array<std::int64_t, kNumInequalities> pass_counts{};
    std::int64_t all_pass_count = 0;
    double mean_slack_tohs_l = 0;  // tightness-trend statistic
};

struct ViolationDump {
    int d = 0;
    std::int64_t sample_id = 0;
    std::uint64_t stream_seed = 0;
    std::string failed_inequalities;
    ComplexMatrix state;
};

struct CampaignResult {
    std::vector<TradeoffRecord> records;  // ordered by (d, sample_id)
    std::vector<DimensionSummary> per_dim;
    bool all_pass = false;
    std::optional<ViolationDump> first_violation;
};

// Generates and evaluates the campaign sample (d, sample_id); the CLI
// `evaluate` command reuses it so single-state runs match campaign rows.
TradeoffRecord evaluate_sample(int d, int rank, std::uint64_t campaign_seed,
                               std::int64_t sample_id, const Tolerances& tol = {},
                               bool corrupt = false);

CampaignResult run_campaign(const CampaignConfig& cfg, ExecMode mode = ExecMode::parallel);

struct WernerConfig {
    std::vector<double> w_values{0.0, 0.25, 0.5, 0.75, 1.0};
    int a_steps = 101;  // uniform grid on [0,1], endpoints included
    Tolerances tol{};
    int max_threads = 0;
};

std::vector<WernerRecord> werner_sweep(const WernerConfig& cfg,
                                       ExecMode mode = ExecMode::parallel);

// Numerical axiom suites for the predictability criteria P1-P6 and the
// wave-quantifier criteria W1-W6. P1/W1 are Lipschitz-style smoke tests
// (|f(rho)-f(rho')| <= 10d ||rho-rho'||_hs), heuristic rather than proof.
enum class PredictabilityMeasure { hs_linear, hs_vn, l1 };
enum class WaveMeasure { hs, wy, l1 };

struct AxiomReport {
    std::string measure;
    std::string axiom;  // "P1".."P6" or "W1".."W6"
    int d = 0;
    std::int64_t trials = 0;
    std::int64_t checks = 0;
    std::int64_t violations = 0;
    double worst_slack = 0;  // min signed slack over all checks
    std::string params;
};

std::vector<AxiomReport> axiom_suite_predictability(PredictabilityMeasure measure, int d,
                                                    std::int64_t trials, std::uint64_t seed,
                                                    const Tolerances& tol = {},
                                                    ExecMode mode = ExecMode::parallel);
std::vector<AxiomReport> axiom_suite_wave(WaveMeasure measure, int d, std::int64_t trials,
                                          std::uint64_t seed, const Tolerances& tol = {},
                                          ExecMode mode = ExecMode::parallel);

}  // namespace qduality
