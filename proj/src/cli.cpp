#include "qduality/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "qduality/csv.hpp"

namespace qduality {

namespace {

void parse_d_range(const std::string& text, int& d_min, int& d_max) {
    const auto parse_int = [&](const std::string& s) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            throw UsageError("--d: expected an integer or a range like 2..8, got '" + text + "'");
        }
        if (used != s.size())
            throw UsageError("--d: expected an integer or a range like 2..8, got '" + text + "'");
        return v;
    };
    const size_t pos = text.find("..");
    if (pos == std::string::npos) {
        d_min = d_max = parse_int(text);
    } else {
        d_min = parse_int(text.substr(0, pos));
        d_max = parse_int(text.substr(pos + 2));
    }
    if (d_min < 2 || d_max < d_min || d_max > 16)
        throw UsageError("--d: range must satisfy 2 <= d_min <= d_max <= 16");
}

int parse_rank(const std::string& text) {
    if (text == "full") return 0;
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw UsageError("--rank: expected 'full' or an integer >= 1, got '" + text + "'");
    }
    if (used != text.size() || v < 1)
        throw UsageError("--rank: expected 'full' or an integer >= 1, got '" + text + "'");
    return v;
}

void add_tolerance_options(CLI::App* cmd, Tolerances& tol) {
    cmd->add_option("--tol-validation", tol.validation, "state validation tolerance");
    cmd->add_option("--tol-exact", tol.exact, "slack tolerance for closed-form identities");
    cmd->add_option("--tol-spectral", tol.spectral,
                    "slack tolerance for eigensolver-derived quantities");
}

}  // namespace

RunConfig parse_config(int argc, const char* const* argv) {
    RunConfig cfg;
    Tolerances tol;

    CLI::App app{"quantum coherence / predictability trade-off verifier"};
    app.require_subcommand(1);

    std::string d_range = "2..8";
    std::string rank_text = "full";

    CLI::App* campaign = app.add_subcommand(
        "campaign", "random-state campaign over a dimension range (trade-off CSV)");
    campaign->add_option("--d", d_range, "dimension range, e.g. 2..8 or a single value");
    campaign->add_option("--samples", cfg.campaign.samples, "states per dimension")
        ->capture_default_str();
    campaign->add_option("--rank", rank_text, "state rank: 'full' or an integer");
    campaign->add_option("--seed", cfg.campaign.seed, "campaign seed")->capture_default_str();
    campaign->add_option("--out", cfg.output_path, "output CSV path (default campaign.csv)");
    campaign->add_flag("--serial", cfg.serial, "run the serial reference engine");
    campaign
        ->add_option("--corrupt-sample", cfg.campaign.corrupt_sample,
                     "test hook: corrupt the state at this flat record index")
        ->group("");  // hidden
    add_tolerance_options(campaign, tol);

    CLI::App* werner = app.add_subcommand("werner", "Werner-ququart parameter sweep (CSV)");
    werner->add_option("--w", cfg.werner.w_values, "comma-separated list of w values")
        ->delimiter(',');
    werner->add_option("--a-steps", cfg.werner.a_steps, "grid points on a in [0,1]")
        ->capture_default_str();
    werner->add_option("--out", cfg.output_path, "output CSV path (default werner.csv)");
    werner->add_flag("--serial", cfg.serial, "run the serial reference engine");
    add_tolerance_options(werner, tol);

    CLI::App* axioms = app.add_subcommand(
        "axioms", "numerical P1-P6 / W1-W6 axiom suites for all six measures");
    axioms->add_option("--d", cfg.axioms.d, "dimension")->capture_default_str();
    axioms->add_option("--trials", cfg.axioms.trials, "random states per suite")
        ->capture_default_str();
    axioms->add_option("--seed", cfg.axioms.seed, "suite seed")->capture_default_str();
    axioms->add_option("--out", cfg.output_path, "optional report CSV path");
    axioms->add_flag("--serial", cfg.serial, "run the serial reference engine");
    add_tolerance_options(axioms, tol);

    CLI::App* evaluate = app.add_subcommand(
        "evaluate", "evaluate one sampled state and print all measures and verdicts");
    std::string eval_rank_text = "full";
    evaluate->add_option("--d", cfg.eval.d, "dimension")->capture_default_str();
    evaluate->add_option("--rank", eval_rank_text, "state rank: 'full' or an integer");
    evaluate->add_option("--seed", cfg.eval.seed, "campaign seed")->capture_default_str();
    evaluate->add_option("--sample", cfg.eval.sample_id, "sample index within the campaign")
        ->capture_default_str();
    evaluate->add_option("--out", cfg.output_path, "optional one-row CSV path");
    evaluate->add_flag("--normalized", cfg.eval.normalized,
                       "also print complementarity sums divided by their bounds");
    evaluate->add_flag("--serial", cfg.serial, "no-op; single states always run serially");
    add_tolerance_options(evaluate, tol);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (campaign->parsed()) {
        cfg.command = RunConfig::Command::campaign;
        parse_d_range(d_range, cfg.campaign.d_min, cfg.campaign.d_max);
        cfg.campaign.rank = parse_rank(rank_text);
        if (cfg.campaign.rank > cfg.campaign.d_min)
            throw UsageError("--rank: exceeds the smallest dimension in --d");
        if (cfg.campaign.samples < 1) throw UsageError("--samples: must be >= 1");
        cfg.campaign.tol = tol;
    } else if (werner->parsed()) {
        cfg.command = RunConfig::Command::werner;
        if (cfg.werner.a_steps < 2) throw UsageError("--a-steps: must be >= 2");
        for (double w : cfg.werner.w_values)
            if (!(w >= 0.0 && w <= 1.0)) throw UsageError("--w: values must lie in [0,1]");
        cfg.werner.tol = tol;
    } else if (axioms->parsed()) {
        cfg.command = RunConfig::Command::axioms;
        if (cfg.axioms.d < 2 || cfg.axioms.d > 16) throw UsageError("--d: must be in [2,16]");
        if (cfg.axioms.trials < 1) throw UsageError("--trials: must be >= 1");
    } else {
        cfg.command = RunConfig::Command::evaluate;
        if (cfg.eval.d < 2 || cfg.eval.d > 16) throw UsageError("--d: must be in [2,16]");
        cfg.eval.rank = parse_rank(eval_rank_text);
        if (cfg.eval.rank > cfg.eval.d) throw UsageError("--rank: exceeds --d");
        if (cfg.eval.sample_id < 0) throw UsageError("--sample: must be >= 0");
    }
    cfg.tol = tol;
    return cfg;
}

namespace {

void print_violation(const ViolationDump& v) {
    std::cerr << "VIOLATION: d=" << v.d << " sample_id=" << v.sample_id
              << " stream_seed=" << v.stream_seed << " failed=" << v.failed_inequalities
              << "\noffending state (row-major, re im):\n";
    for (int r = 0; r < v.state.dim(); ++r) {
        for (int c = 0; c < v.state.dim(); ++c) {
            const cplx e = v.state(r, c);
            std::cerr << format_double(e.real()) << ' ' << format_double(e.imag());
            std::cerr << (c + 1 == v.state.dim() ? '\n' : '\t');
        }
    }
}

void print_per_inequality(const std::array<std::int64_t, kNumInequalities>& counts,
                          std::int64_t n) {
    static const char* names[kNumInequalities] = {"tohs_l", "tohs_vn", "heub", "heub2",
                                                  "cpl1",   "tocp",    "tocpH"};
    for (int i = 0; i < kNumInequalities; ++i)
        std::cout << ' ' << names[i] << '=' << counts[static_cast<size_t>(i)] << '/' << n;
    std::cout << '\n';
}

int execute_campaign(const RunConfig& cfg) {
    const CampaignResult res =
        run_campaign(cfg.campaign, cfg.serial ? ExecMode::serial : ExecMode::parallel);
    const std::string path = cfg.output_path.empty() ? "campaign.csv" : cfg.output_path;
    write_text_file(path, campaign_csv(res.records));

    std::cout << "campaign d=" << cfg.campaign.d_min << ".." << cfg.campaign.d_max
              << " samples=" << cfg.campaign.samples << " seed=" << cfg.campaign.seed
              << " rank=" << (cfg.campaign.rank == 0 ? std::string("full")
                                                     : std::to_string(cfg.campaign.rank))
              << " -> " << path << '\n';
    for (const DimensionSummary& s : res.per_dim) {
        std::cout << "d=" << s.d << " pass=" << s.all_pass_count << '/' << s.samples
                  << " mean_slack_tohs_l=" << format_double(s.mean_slack_tohs_l) << " |";
        print_per_inequality(s.pass_counts, s.samples);
    }
    if (res.first_violation) print_violation(*res.first_violation);
    std::cout << (res.all_pass ? "all inequalities hold\n" : "violations detected\n");
    return res.all_pass ? 0 : 1;
}

int execute_werner(const RunConfig& cfg) {
    const std::vector<WernerRecord> records =
        werner_sweep(cfg.werner, cfg.serial ? ExecMode::serial : ExecMode::parallel);
    const std::string path = cfg.output_path.empty() ? "werner.csv" : cfg.output_path;
    write_text_file(path, werner_csv(records));

    std::array<std::int64_t, kNumInequalities> counts{};
    std::int64_t all_pass = 0;
    for (const WernerRecord& r : records) {
        for (int i = 0; i < kNumInequalities; ++i)
            if (r.q.verdicts[static_cast<size_t>(i)].pass) ++counts[static_cast<size_t>(i)];
        if (r.q.pass_all) ++all_pass;
    }
    const std::int64_t n = static_cast<std::int64_t>(records.size());
    std::cout << "werner sweep: " << n << " grid points -> " << path << '\n'
              << "pass=" << all_pass << '/' << n << " |";
    print_per_inequality(counts, n);
    return all_pass == n ? 0 : 1;
}

int execute_axioms(const RunConfig& cfg) {
    const ExecMode mode = cfg.serial ? ExecMode::serial : ExecMode::parallel;
    std::vector<AxiomReport> all;
    for (auto m : {PredictabilityMeasure::hs_linear, PredictabilityMeasure::hs_vn,
                   PredictabilityMeasure::l1}) {
        auto r = axiom_suite_predictability(m, cfg.axioms.d, cfg.axioms.trials, cfg.axioms.seed,
                                            cfg.tol, mode);
        all.insert(all.end(), r.begin(), r.end());
    }
    for (auto m : {WaveMeasure::hs, WaveMeasure::wy, WaveMeasure::l1}) {
        auto r = axiom_suite_wave(m, cfg.axioms.d, cfg.axioms.trials, cfg.axioms.seed,
                                  cfg.tol, mode);
        all.insert(all.end(), r.begin(), r.end());
    }

    std::int64_t violations = 0;
    std::printf("%-8s %-5s %8s %8s %10s  %s\n", "measure", "axiom", "trials", "checks",
                "violations", "worst_slack");
    for (const AxiomReport& r : all) {
        std::printf("%-8s %-5s %8lld %8lld %10lld  %s\n", r.measure.c_str(), r.axiom.c_str(),
                    static_cast<long long>(r.trials), static_cast<long long>(r.checks),
                    static_cast<long long>(r.violations), format_double(r.worst_slack).c_str());
        violations += r.violations;
    }
    if (!cfg.output_path.empty()) write_text_file(cfg.output_path, axiom_csv(all));
    std::cout << (violations == 0 ? "all axiom checks hold\n" : "axiom violations detected\n");
    return violations == 0 ? 0 : 1;
}

int execute_evaluate(const RunConfig& cfg) {
    const int rank = cfg.eval.rank == 0 ? cfg.eval.d : cfg.eval.rank;
    const TradeoffRecord rec =
        evaluate_sample(cfg.eval.d, rank, cfg.eval.seed, cfg.eval.sample_id, cfg.tol);
    std::cout << "state d=" << rec.d << " sample=" << rec.sample_id
              << " stream_seed=" << rec.stream_seed << " rank=" << rec.rank << '\n';
    for (const MeasureValue& m : rec.q.measure_values()) {
        std::cout << "  " << m.name << " = " << format_double(m.value);
        if (!m.formula_variant.empty()) std::cout << "  [" << m.formula_variant << ']';
        std::cout << '\n';
    }
    for (const IneqVerdict& v : rec.q.verdicts)
        std::cout << "  " << v.name << ": slack=" << format_double(v.slack)
                  << (v.pass ? " pass" : " FAIL") << '\n';
    if (cfg.eval.normalized) {
        // display only; CSV rows always carry the raw values
        const int d = rec.d;
        std::cout << "  normalized (c_hs+p_hs_l)/s_l_max = "
                  << format_double((rec.q.c_hs + rec.q.p_hs_l) / s_l_max(d)) << '\n'
                  << "  normalized (c_hs+p_hs_vn)/s_vn_max = "
                  << format_double((rec.q.c_hs + rec.q.p_hs_vn) / s_vn_max(d)) << '\n'
                  << "  normalized (c_wy+p_hs_l)/s_l_max = "
                  << format_double((rec.q.c_wy + rec.q.p_hs_l) / s_l_max(d)) << '\n'
                  << "  normalized (c_wy+p_hs_vn)/s_vn_max = "
                  << format_double((rec.q.c_wy + rec.q.p_hs_vn) / s_vn_max(d)) << '\n'
                  << "  normalized (c_l1+p_l1)/(d-1) = "
                  << format_double((rec.q.c_l1 + rec.q.p_l1) / (d - 1)) << '\n';
    }
    if (!cfg.output_path.empty())
        write_text_file(cfg.output_path, campaign_csv({&rec, 1}));
    return rec.q.pass_all ? 0 : 1;
}

}  // namespace

int execute(const RunConfig& cfg) {
    switch (cfg.command) {
        case RunConfig::Command::campaign:
            return execute_campaign(cfg);
        case RunConfig::Command::werner:
            return execute_werner(cfg);
        case RunConfig::Command::axioms:
            return execute_axioms(cfg);
        case RunConfig::Command::evaluate:
            return execute_evaluate(cfg);
    }
    throw Error("execute: unreachable");
}

int cli_main(int argc, const char* const* argv) {
    try {
        return execute(parse_config(argc, argv));
    } catch (const HelpRequested& h) {
        std::cout << h.what();
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace qduality
