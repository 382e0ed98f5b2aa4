#include "qduality/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>

namespace qduality {

std::vector<MeasureValue> StateQuantifiers::measure_values() const {
    return {
        make_measure("c_hs", c_hs, "element"),
        make_measure("c_wy", c_wy, "sqrt_offdiag"),
        make_measure("c_l1", c_l1, ""),
        make_measure("s_l_iota", s_l_iota, ""),
        make_measure("s_vn_iota", s_vn_iota, ""),
        make_measure("upsilon", upsilon, ""),
        make_measure("omega", omega, ""),
        make_measure("p_hs_l", p_hs_l, "closed_form"),
        make_measure("p_hs_vn", p_hs_vn, "closed_form"),
        make_measure("p_l1", p_l1, ""),
        make_measure("bound_pop_hs", bound_pop_hs, ""),
        make_measure("bound_pop_wy", bound_pop_wy, ""),
    };
}

StateQuantifiers evaluate_state(const DensityMatrix& rho, const Tolerances& tol) {
    const int d = rho.dim();
    const EigenSystem es = hermitian_eig(rho.matrix(), tol);
    const ComplexMatrix sq = matrix_sqrt(es, tol);
    const std::vector<double> pops = rho.populations();
    const std::vector<double> sqd = sq.real_diagonal();

    StateQuantifiers q;
    q.c_hs = c_hs(rho);
    q.c_wy = c_wy_from_sqrt(sq);
    q.c_l1 = c_l1(rho);
    q.s_l_iota = linear_entropy(pops);
    q.s_vn_iota = von_neumann_entropy(pops);
    const WyBounds wb = wy_bounds_from_diag(sqd);
    q.upsilon = wb.upsilon;
    q.omega = wb.omega;
    q.p_hs_l = p_hs_linear(rho);
    q.p_hs_vn = p_hs_vn(rho);
    q.p_l1 = p_l1(rho);
    q.bound_pop_hs = population_bound_from_diag(pops);
    q.bound_pop_wy = population_bound_from_diag(sqd);

    q.slack_tohs_l = q.s_l_iota - q.c_hs;
    q.slack_tohs_vn = q.s_vn_iota - q.c_hs;
    q.slack_heub = q.upsilon - q.c_wy;
    q.slack_heub2 = q.omega - q.c_wy;
    q.slack_cpl1 = static_cast<double>(d - 1) - (q.c_l1 + q.p_l1);

    const auto verdict = [&](const char* name, double slack, double vtol) {
        return IneqVerdict{name, slack, vtol, slack >= -vtol};
    };
    q.verdicts = {
        verdict("tohs_l", q.slack_tohs_l, tol.exact),
        verdict("tohs_vn", q.slack_tohs_vn, tol.exact),
        verdict("heub", q.slack_heub, tol.spectral),
        verdict("heub2", q.slack_heub2, tol.spectral),
        verdict("cpl1", q.slack_cpl1, tol.exact),
        verdict("tocp", q.bound_pop_hs - q.c_hs, tol.exact),
        verdict("tocpH", q.bound_pop_wy - q.c_wy, tol.spectral),
    };
    q.pass_all = true;
    for (const auto& v : q.verdicts) q.pass_all = q.pass_all && v.pass;

    return q;
}

int resolve_worker_count(int cap) {
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("QDUALITY_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1)
            throw UsageError("QDUALITY_THREADS must be an integer >= 1");
        n = static_cast<int>(std::min<long>(n, v));
    }
    if (cap > 0) n = std::min(n, cap);
    return std::max(1, n);
}

namespace {

DensityMatrix sample_state(int d, int rank, std::uint64_t stream_seed, const Tolerances& tol,
                           bool corrupt) {
    Rng rng(stream_seed);
    DensityMatrix rho = random_state(d, rank, rng, tol);
    if (corrupt) {
        // Test hook: scale the state by 4. The matrix stays positive (so every
        // quantity is still computable) but S_l(iota) = 1 - 16 sum p^2 <= 0 for
        // d <= 16 while C_hs grows, so the tohs_l verdict fails.
        rho = DensityMatrix::unchecked(4.0 * rho.matrix());
    }
    return rho;
}

// Runs `body(i)` for every flat index, serially or under OpenMP. Exceptions
// escaping a worker are captured and rethrown after the loop.
template <typename Body>
void run_indexed(std::int64_t total, ExecMode mode, int max_threads, Body&& body) {
    if (mode == ExecMode::serial) {
        for (std::int64_t i = 0; i < total; ++i) body(i);
        return;
    }
    const int workers = resolve_worker_count(max_threads);
    std::exception_ptr err;
    // Per-sample cost grows steeply with d and the flat index is sorted by d,
    // so dynamic chunks are needed for balance. Each record lands in its own
    // slot with values independent of the executing thread, so scheduling
    // cannot change the output.
#pragma omp parallel for schedule(dynamic, 8) num_threads(workers)
    for (std::int64_t i = 0; i < total; ++i) {
        try {
            body(i);
        } catch (...) {
#pragma omp critical(qduality_run_indexed_err)
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
}

}  // namespace

TradeoffRecord evaluate_sample(int d, int rank, std::uint64_t campaign_seed,
                               std::int64_t sample_id, const Tolerances& tol, bool corrupt) {
    const std::uint64_t stream = derive_stream_seed(campaign_seed, d, sample_id);
    const DensityMatrix rho = sample_state(d, rank, stream, tol, corrupt);
    return TradeoffRecord{d, sample_id, stream, rank, evaluate_state(rho, tol)};
}

CampaignResult run_campaign(const CampaignConfig& cfg, ExecMode mode) {
    if (cfg.d_min < 2 || cfg.d_max < cfg.d_min || cfg.d_max > 16)
        throw ParamOutOfRange("campaign: d range must satisfy 2 <= d_min <= d_max <= 16");
    if (cfg.samples < 1) throw ParamOutOfRange("campaign: samples must be >= 1");
    if (cfg.rank != 0 && (cfg.rank < 1 || cfg.rank > cfg.d_min))
        throw ParamOutOfRange("campaign: rank must be 'full' or within [1, d_min]");

    const int dims = cfg.d_max - cfg.d_min + 1;
    const std::int64_t total = static_cast<std::int64_t>(dims) * cfg.samples;

    CampaignResult result;
    result.records.resize(static_cast<size_t>(total));
    run_indexed(total, mode, cfg.max_threads, [&](std::int64_t i) {
        const int d = cfg.d_min + static_cast<int>(i / cfg.samples);
        const std::int64_t sid = i % cfg.samples;
        const int rank = cfg.rank == 0 ? d : cfg.rank;
        result.records[static_cast<size_t>(i)] =
            evaluate_sample(d, rank, cfg.seed, sid, cfg.tol, i == cfg.corrupt_sample);
    });

    result.per_dim.resize(static_cast<size_t>(dims));
    result.all_pass = true;
    for (int k = 0; k < dims; ++k) {
        DimensionSummary& s = result.per_dim[static_cast<size_t>(k)];
        s.d = cfg.d_min + k;
        s.samples = cfg.samples;
        double slack_sum = 0.0;
        for (std::int64_t i = k * cfg.samples; i < (k + 1) * cfg.samples; ++i) {
            const TradeoffRecord& r = result.records[static_cast<size_t>(i)];
            for (int v = 0; v < kNumInequalities; ++v)
                if (r.q.verdicts[static_cast<size_t>(v)].pass)
                    ++s.pass_counts[static_cast<size_t>(v)];
            if (r.q.pass_all) ++s.all_pass_count;
            slack_sum += r.q.slack_tohs_l;
        }
        s.mean_slack_tohs_l = slack_sum / static_cast<double>(cfg.samples);
        result.all_pass = result.all_pass && s.all_pass_count == cfg.samples;
    }

    if (!result.all_pass) {
        for (std::int64_t i = 0; i < total; ++i) {
            const TradeoffRecord& r = result.records[static_cast<size_t>(i)];
            if (r.q.pass_all) continue;
            std::string failed;
            for (const auto& v : r.q.verdicts) {
                if (v.pass) continue;
                if (!failed.empty()) failed += '+';
                failed += v.name;
            }
            const DensityMatrix rho = sample_state(r.d, r.rank, r.stream_seed, cfg.tol,
                                                   i == cfg.corrupt_sample);
            result.first_violation =
                ViolationDump{r.d, r.sample_id, r.stream_seed, failed, rho.matrix()};
            break;
        }
    }
    return result;
}

std::vector<WernerRecord> werner_sweep(const WernerConfig& cfg, ExecMode mode) {
    if (cfg.a_steps < 2) throw ParamOutOfRange("werner: a_steps must be >= 2");
    if (cfg.w_values.empty()) throw ParamOutOfRange("werner: w grid is empty");
    for (double w : cfg.w_values)
        if (!(w >= 0.0 && w <= 1.0)) throw ParamOutOfRange("werner: w outside [0,1]");

    const std::int64_t total =
        static_cast<std::int64_t>(cfg.w_values.size()) * cfg.a_steps;
    std::vector<WernerRecord> records(static_cast<size_t>(total));
    run_indexed(total, mode, cfg.max_threads, [&](std::int64_t i) {
        const size_t wi = static_cast<size_t>(i / cfg.a_steps);
        const int ai = static_cast<int>(i % cfg.a_steps);
        const double w = cfg.w_values[wi];
        const double a = static_cast<double>(ai) / (cfg.a_steps - 1);
        records[static_cast<size_t>(i)] =
            WernerRecord{w, a, evaluate_state(werner_ququart(w, a, cfg.tol), cfg.tol)};
    });
    return records;
}

// ---------------------------------------------------------------------------
// Axiom suites
// ---------------------------------------------------------------------------

namespace {

struct AxiomAccum {
    std::int64_t checks = 0;
    std::int64_t violations = 0;
    double worst = std::numeric_limits<double>::infinity();
};

void record_check(AxiomAccum& a, double slack, double tol) {
    ++a.checks;
    a.worst = std::min(a.worst, slack);
    if (slack < -tol) ++a.violations;
}

void merge_accums(std::vector<AxiomAccum>& into, const std::vector<AxiomAccum>& from) {
    for (size_t i = 0; i < into.size(); ++i) {
        into[i].checks += from[i].checks;
        into[i].violations += from[i].violations;
        into[i].worst = std::min(into[i].worst, from[i].worst);
    }
}

template <typename TrialFn>
std::vector<AxiomAccum> run_axiom_trials(std::int64_t trials, int n_axioms, ExecMode mode,
                                         TrialFn&& trial) {
    std::vector<AxiomAccum> totals(static_cast<size_t>(n_axioms));
    if (mode == ExecMode::serial) {
        for (std::int64_t t = 0; t < trials; ++t) trial(t, totals.data());
        return totals;
    }
    const int workers = resolve_worker_count(0);
    std::exception_ptr err;
#pragma omp parallel num_threads(workers)
    {
        std::vector<AxiomAccum> local(static_cast<size_t>(n_axioms));
#pragma omp for schedule(static) nowait
        for (std::int64_t t = 0; t < trials; ++t) {
            try {
                trial(t, local.data());
            } catch (...) {
#pragma omp critical(qduality_axiom_err)
                if (!err) err = std::current_exception();
            }
        }
        // Merging is commutative (sums and min), so the totals do not depend
        // on thread count or completion order.
#pragma omp critical(qduality_axiom_merge)
        merge_accums(totals, local);
    }
    if (err) std::rethrow_exception(err);
    return totals;
}

DensityMatrix basis_state(int d, int j) {
    ComplexMatrix m(d);
    m(j, j) = 1.0;
    return DensityMatrix::unchecked(std::move(m));
}

DensityMatrix uniform_pure_state(int d) {
    ComplexMatrix m(d);
    const double v = 1.0 / d;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) m(r, c) = v;
    return DensityMatrix::unchecked(std::move(m));
}

DensityMatrix maximally_mixed_state(int d) {
    ComplexMatrix m(d);
    for (int i = 0; i < d; ++i) m(i, i) = 1.0 / d;
    return DensityMatrix::unchecked(std::move(m));
}

DensityMatrix diagonal_state(std::span<const double> pops) {
    return DensityMatrix::unchecked(ComplexMatrix::diagonal(pops));
}

std::vector<int> random_permutation(int d, Rng& rng) {
    std::vector<int> p(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) p[static_cast<size_t>(i)] = i;
    for (int i = d - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(p[static_cast<size_t>(i)], p[static_cast<size_t>(j)]);
    }
    return p;
}

DensityMatrix permuted_state(const DensityMatrix& rho, std::span<const int> perm) {
    const int d = rho.dim();
    ComplexMatrix out(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            out(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]) = rho.matrix()(i, j);
    return DensityMatrix::unchecked(std::move(out));
}

DensityMatrix mix_states(double w, const DensityMatrix& x, const DensityMatrix& y) {
    return DensityMatrix::unchecked(w * x.matrix() + (1.0 - w) * y.matrix());
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    double sum = 0.0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) sum += std::norm(a(r, c) - b(r, c));
    return std::sqrt(sum);
}

constexpr double kP5Eps[2] = {1e-3, 1e-4};
constexpr double kLipschitzMix[2] = {1e-3, 1e-5};

struct MeasureInfo {
    const char* name;
    std::function<double(const DensityMatrix&)> fn;
    std::function<double(int)> max_value;
    double eq_tol;     // equality-style checks (permutations, extremal values)
    double bound_tol;  // one-sided bound checks (extremal bounds, convexity)
    bool spectral;     // goes through the eigensolver
};

MeasureInfo predictability_info(PredictabilityMeasure m, const Tolerances& tol) {
    switch (m) {
        case PredictabilityMeasure::hs_linear:
            return {"p_hs_l", [](const DensityMatrix& r) { return p_hs_linear(r); },
                    [](int d) { return s_l_max(d); }, tol.component_imag, tol.exact, false};
        case PredictabilityMeasure::hs_vn:
            return {"p_hs_vn", [](const DensityMatrix& r) { return p_hs_vn(r); },
                    [](int d) { return s_vn_max(d); }, tol.component_imag, tol.exact, false};
        case PredictabilityMeasure::l1:
            return {"p_l1", [](const DensityMatrix& r) { return p_l1(r); },
                    [](int d) { return static_cast<double>(d - 1); }, tol.component_imag,
                    tol.exact, false};
    }
    throw UnknownMeasure("axiom_suite_predictability: unknown measure");
}

MeasureInfo wave_info(WaveMeasure m, const Tolerances& tol) {
    switch (m) {
        case WaveMeasure::hs:
            return {"c_hs", [](const DensityMatrix& r) { return c_hs(r); },
                    [](int d) { return s_l_max(d); }, tol.component_imag, tol.exact, false};
        case WaveMeasure::wy:
            return {"c_wy", [tol](const DensityMatrix& r) { return c_wy(r, CwyForm::sqrt_offdiag, tol); },
                    [](int d) { return s_l_max(d); }, tol.spectral, tol.spectral, true};
        case WaveMeasure::l1:
            return {"c_l1", [](const DensityMatrix& r) { return c_l1(r); },
                    [](int d) { return static_cast<double>(d - 1); }, tol.component_imag,
                    tol.exact, false};
    }
    throw UnknownMeasure("axiom_suite_wave: unknown measure");
}

// Shared by P1/W1: Lipschitz-style continuity smoke test with K = 10d.
void lipschitz_check(const MeasureInfo& info, const DensityMatrix& rho, double f_rho,
                     Rng& rng, int d, const Tolerances& tol, AxiomAccum& acc) {
    Rng& r = rng;
    DensityMatrix sigma = random_state(d, d, r, tol);
    const double dist = frobenius_distance(rho.matrix(), sigma.matrix());
    for (double t : kLipschitzMix) {
        const DensityMatrix mixed = mix_states(1.0 - t, rho, sigma);
        const double diff = std::abs(info.fn(mixed) - f_rho);
        record_check(acc, 10.0 * d * (t * dist) - diff, 0.0);
    }
}

void permutation_check(const MeasureInfo& info, const DensityMatrix& rho, double f_rho,
                       Rng& rng, int d, AxiomAccum& acc) {
    for (int i = 0; i < 20; ++i) {
        const std::vector<int> perm = random_permutation(d, rng);
        const double fp = info.fn(permuted_state(rho, perm));
        record_check(acc, -std::abs(fp - f_rho), info.eq_tol);
    }
}

void p_trial(const MeasureInfo& info, int d, std::int64_t t, std::uint64_t seed,
             const Tolerances& tol, AxiomAccum* ax) {
    Rng rng(derive_stream_seed(seed, d, t));
    const DensityMatrix rho = random_state(d, d, rng, tol);
    const double f_rho = info.fn(rho);
    const double fmax = info.max_value(d);

    // P1: continuity (heuristic).
    lipschitz_check(info, rho, f_rho, rng, d, tol, ax[0]);

    // P2: invariance under path relabeling.
    permutation_check(info, rho, f_rho, rng, d, ax[1]);

    // P3: maximum exactly at basis states; no state exceeds it.
    {
        const int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(d)));
        record_check(ax[2], -std::abs(info.fn(basis_state(d, j)) - fmax), info.eq_tol);
        record_check(ax[2], fmax - f_rho, info.bound_tol);
    }

    // P4: minimum 0 at uniform populations; no state goes below.
    record_check(ax[3], -std::abs(info.fn(maximally_mixed_state(d))), info.eq_tol);
    record_check(ax[3], -std::abs(info.fn(uniform_pure_state(d))), info.eq_tol);
    record_check(ax[3], f_rho, info.bound_tol);

    // P5: a population transfer from a larger to a smaller entry cannot
    // increase P. Pairs closer than eps are skipped: there the first-order
    // argument degenerates and the change is O(eps^2) of either sign.
    {
        std::vector<double> pops = rho.populations();
        for (double& p : pops)
            if (p < 0.0) p = 0.0;
        for (int attempt = 0; attempt < 10; ++attempt) {
            int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(d)));
            int k = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(d)));
            if (j == k) continue;
            if (pops[static_cast<size_t>(j)] < pops[static_cast<size_t>(k)]) std::swap(j, k);
            for (double eps : kP5Eps) {
                if (pops[static_cast<size_t>(j)] - pops[static_cast<size_t>(k)] <= eps) continue;
                std::vector<double> shifted = pops;
                shifted[static_cast<size_t>(j)] -= eps;
                shifted[static_cast<size_t>(k)] += eps;
                record_check(ax[4], f_rho - info.fn(diagonal_state(shifted)), info.eq_tol);
            }
        }
    }

    // P6: convexity.
    {
        const DensityMatrix xi = random_state(d, d, rng, tol);
        const DensityMatrix eta = random_state(d, d, rng, tol);
        const double om = rng.uniform01();
        const double mixed = info.fn(mix_states(om, xi, eta));
        record_check(ax[5], om * info.fn(xi) + (1.0 - om) * info.fn(eta) - mixed,
                     info.bound_tol);
    }
}

void w_trial(const MeasureInfo& info, WaveMeasure kind, int d, std::int64_t t,
             std::uint64_t seed, const Tolerances& tol, AxiomAccum* ax) {
    Rng rng(derive_stream_seed(seed, d, t));
    const DensityMatrix rho = random_state(d, d, rng, tol);
    const double f_rho = info.fn(rho);
    const double fmax = info.max_value(d);

    // W1: continuity (heuristic).
    lipschitz_check(info, rho, f_rho, rng, d, tol, ax[0]);

    // W2: invariance under path relabeling.
    permutation_check(info, rho, f_rho, rng, d, ax[1]);

    // W3: minimum 0 at basis states; no state goes below.
    {
        const int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(d)));
        record_check(ax[2], -std::abs(info.fn(basis_state(d, j))), info.eq_tol);
        record_check(ax[2], f_rho, info.bound_tol);
    }

    // W4: maximum at the uniform pure state; no state exceeds it.
    record_check(ax[3], -std::abs(info.fn(uniform_pure_state(d)) - fmax), info.eq_tol);
    record_check(ax[3], fmax - f_rho, info.bound_tol);

    // W5: decreasing an off-diagonal magnitude cannot increase W.
    if (kind != WaveMeasure::wy) {
        // Phase-preserving multiplicative shrinkage of one coherence pair.
        // The perturbed matrix is re-validated; shrinkage can in principle
        // leave the state set, in which case the check is skipped.
        for (int attempt = 0; attempt < 5; ++attempt) {
            const int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(d)));
            const int k = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(d)));
            if (j == k) continue;
            if (std::abs(rho.matrix()(j, k)) <= 1e-12) continue;
            for (double eps : kP5Eps) {
                ComplexMatrix m = rho.matrix();
                m(j, k) *= (1.0 - eps);
                m(k, j) *= (1.0 - eps);
                try {
                    const DensityMatrix shrunk = validate(m, tol);
                    record_check(ax[4], f_rho - info.fn(shrunk), info.eq_tol);
                } catch (const Error&) {
                    // perturbation left the state set; nothing to compare
                }
            }
        }
    } else {
        // For C_wy the shrinkage acts on sqrt(rho): scaling its j-th row by
        // 1-eps maps rho to D rho D with D = diag(1,..,1-eps,..,1). The result
        // is kept subnormalized (Tr < 1); renormalizing would scale every
        // coherence outside row j by 1/Tr > 1 and break the monotonicity the
        // axiom asserts. C_wy is recomputed from scratch on the perturbed
        // matrix through its square root.
        for (int attempt = 0; attempt < 3; ++attempt) {
            const int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(d)));
            for (double eps : kP5Eps) {
                ComplexMatrix m = rho.matrix();
                for (int c = 0; c < d; ++c) {
                    if (c == j) continue;
                    m(j, c) *= (1.0 - eps);
                    m(c, j) *= (1.0 - eps);
                }
                m(j, j) *= (1.0 - eps) * (1.0 - eps);
                const double shrunk = c_wy_from_sqrt(matrix_sqrt(m, tol), CwyForm::sqrt_offdiag);
                record_check(ax[4], f_rho - shrunk, tol.exact);
            }
        }
    }

    // W6: convexity.
    {
        const DensityMatrix xi = random_state(d, d, rng, tol);
        const DensityMatrix eta = random_state(d, d, rng, tol);
        const double om = rng.uniform01();
        const double mixed = info.fn(mix_states(om, xi, eta));
        record_check(ax[5], om * info.fn(xi) + (1.0 - om) * info.fn(eta) - mixed,
                     info.bound_tol);
    }
}

std::vector<AxiomReport> assemble_reports(const char* prefix, const MeasureInfo& info, int d,
                                          std::int64_t trials,
                                          const std::vector<AxiomAccum>& acc,
                                          const std::string& params) {
    std::vector<AxiomReport> reports;
    reports.reserve(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) {
        AxiomReport r;
        r.measure = info.name;
        r.axiom = prefix + std::to_string(i + 1);
        r.d = d;
        r.trials = trials;
        r.checks = acc[i].checks;
        r.violations = acc[i].violations;
        r.worst_slack = acc[i].checks == 0 ? 0.0 : acc[i].worst;
        r.params = params;
        reports.push_back(std::move(r));
    }
    return reports;
}

const char* kPParams = "K=10d;perms=20;eps={1e-3,1e-4};pairs<=10";
const char* kWParams = "K=10d;perms=20;eps={1e-3,1e-4};pairs<=5";

}  // namespace

std::vector<AxiomReport> axiom_suite_predictability(PredictabilityMeasure measure, int d,
                                                    std::int64_t trials, std::uint64_t seed,
                                                    const Tolerances& tol, ExecMode mode) {
    if (d < 2 || d > 16) throw ParamOutOfRange("axiom suite: d must be within [2,16]");
    if (trials < 1) throw ParamOutOfRange("axiom suite: trials must be >= 1");
    const MeasureInfo info = predictability_info(measure, tol);
    const auto acc = run_axiom_trials(trials, 6, mode, [&](std::int64_t t, AxiomAccum* ax) {
        p_trial(info, d, t, seed, tol, ax);
    });
    return assemble_reports("P", info, d, trials, acc, kPParams);
}

std::vector<AxiomReport> axiom_suite_wave(WaveMeasure measure, int d, std::int64_t trials,
                                          std::uint64_t seed, const Tolerances& tol,
                                          ExecMode mode) {
    if (d < 2 || d > 16) throw ParamOutOfRange("axiom suite: d must be within [2,16]");
    if (trials < 1) throw ParamOutOfRange("axiom suite: trials must be >= 1");
    const MeasureInfo info = wave_info(measure, tol);
    const auto acc = run_axiom_trials(trials, 6, mode, [&](std::int64_t t, AxiomAccum* ax) {
        w_trial(info, measure, d, t, seed, tol, ax);
    });
    return assemble_reports("W", info, d, trials, acc, kWParams);
}

}  // namespace qduality
