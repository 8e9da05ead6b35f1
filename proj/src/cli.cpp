#include "chanent/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "chanent/json_io.hpp"
#include "chanent/random.hpp"

namespace chanent::cli {

namespace {

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file " + cfg.output_path);
    out << text;
}

std::string dump(const json& j) {
    return j.dump(2) + "\n";
}

Channel load_channel(const RunConfig& cfg) {
    if (!cfg.input_path.empty()) {
        std::ifstream in(cfg.input_path, std::ios::binary);
        if (!in) throw ValidationError("cannot open input file " + cfg.input_path);
        std::stringstream ss;
        ss << in.rdbuf();
        return channel_from_text(ss.str());
    }
    if (cfg.p >= 0.0 && cfg.q >= 0.0) {
        if (cfg.p > 1.0 || cfg.q > 1.0)
            throw ValidationError("--p and --q must lie in [0, 1]");
        return Channel::classical(StochasticMatrix{{cfg.p, 1.0 - cfg.p}, {cfg.q, 1.0 - cfg.q}});
    }
    throw ValidationError("no input: pass --input FILE or both --p and --q");
}

double psd_tol(const RunConfig& cfg) {
    return cfg.tolerance > 0.0 ? cfg.tolerance : tol::psd_slack;
}

double extremal_tol(const RunConfig& cfg) {
    return cfg.tolerance > 0.0 ? cfg.tolerance : 1e-8;
}

double to_unit(const RunConfig& cfg, double nats) {
    return cfg.bits ? nats / M_LN2 : nats;
}

int cmd_choi(const RunConfig& cfg) {
    const Channel t = load_channel(cfg);
    const auto rho = representative_operator(t);
    const auto props = verify_properties(t, cfg.seed);
    const bool unital = check_unital(t);
    const bool cp = rho.positive_within(psd_tol(cfg));

    json out;
    out["rho"] = rho_to_json(rho);
    out["properties"] = properties_to_json(props);
    out["unital"] = unital;
    out["completely_positive"] = cp;
    out["partial_trace_deviation"] = round_sig(
        max_abs_diff(partial_trace_second(rho.matrix, t.dim()), ComplexMatrix::identity(t.dim())));
    if (unital && cp)
        out["extremal"] = is_extremal_choi(t, extremal_tol(cfg));
    else
        out["extremal"] = nullptr;
    out["channel"] = channel_to_json(Channel::superoperator(t.dim(), t.superoperator_matrix()));
    emit(cfg, dump(out));
    return (unital && cp) ? exit_ok : exit_invalid;
}

int cmd_entropy(const RunConfig& cfg) {
    const Channel t = load_channel(cfg);
    json out;
    out["d_choi"] = round_sig(to_unit(cfg, choi_entropy(t, cfg.normalized).nats));
    out["normalized"] = cfg.normalized;
    out["unit"] = cfg.bits ? "bits" : "nats";
    const auto rho = representative_operator(t);
    json spec = json::array();
    for (double lam : rho.spectrum.eigenvalues) spec.push_back(round_sig(lam));
    out["choi_spectrum"] = std::move(spec);
    if (t.kind() == Channel::Kind::state) {
        out["ohya"] = round_sig(to_unit(cfg, ohya_entropy(t.state_density()).nats));
        out["mixing_upper_bound"] =
            round_sig(to_unit(cfg, state_channel_entropy_upper(t.state_density()).nats));
    }
    emit(cfg, dump(out));
    return exit_ok;
}

int cmd_hent(const RunConfig& cfg) {
    const Channel t = load_channel(cfg);
    if (t.kind() != Channel::Kind::stochastic) {
        std::cerr << "hent: exact H(T) is available for classical (stochastic) channels only;\n"
                     "use `entropy` for the d(rho_T) upper bound on quantum inputs\n";
        return exit_not_classical;
    }
    const auto report = channel_entropy_classical(t.stochastic());
    emit(cfg, dump(entropy_report_to_json(report, cfg.bits)));
    return exit_ok;
}

int cmd_verify(const RunConfig& cfg) {
    const Channel t = load_channel(cfg);
    const auto rho = representative_operator(t);
    const auto props = verify_properties(t, cfg.seed);
    const bool unital = check_unital(t);
    const bool cp = rho.positive_within(psd_tol(cfg));

    json checks;
    checks["unital"] = unital;
    checks["completely_positive"] = cp;
    checks["properties"] = properties_to_json(props);
    const double pt_dev =
        max_abs_diff(partial_trace_second(rho.matrix, t.dim()), ComplexMatrix::identity(t.dim()));
    checks["partial_trace_deviation"] = round_sig(pt_dev);
    checks["trace"] = round_sig(rho.matrix.trace().real());

    bool pass = unital && cp && props.a && props.b && props.c && pt_dev < 1e-10;
    double roundtrip = -1.0;
    if (unital && pt_dev < 1e-10) {
        const Channel back = reconstruct(rho);
        double dev = 0.0;
        for (int i = 0; i < t.dim(); ++i)
            for (int j = 0; j < t.dim(); ++j) {
                const auto unit = ComplexMatrix::unit(t.dim(), i, j);
                dev = std::max(dev, max_abs_diff(t.apply(unit), back.apply(unit)));
            }
        roundtrip = dev;
        pass = pass && dev < 1e-10;
    }
    checks["roundtrip_deviation"] = roundtrip < 0.0 ? json(nullptr) : json(round_sig(roundtrip));

    json out;
    out["checks"] = std::move(checks);
    if (t.kind() == Channel::Kind::stochastic && t.dim() <= 3) {
        const auto report = verify_inequality(t.stochastic());
        out["entropy_report"] = entropy_report_to_json(report, cfg.bits);
        pass = pass && report.gap >= -1e-9;
    }
    out["pass"] = pass;
    emit(cfg, dump(out));
    return pass ? exit_ok : exit_invalid;
}

int cmd_example(const RunConfig& cfg) {
    if (cfg.sweep_step <= 0.0) {
        std::cerr << "example: --sweep-step must be positive\n";
        return exit_usage;
    }
    const double start = cfg.sweep_start > 0.0 ? cfg.sweep_start : cfg.sweep_step;
    const double stop = cfg.sweep_stop > 0.0 ? cfg.sweep_stop : 1.0 - cfg.sweep_step;
    const double unit = cfg.bits ? M_LN2 : 1.0;

    std::string csv = "p,H_closed_form,H_vertex,d_choi,gap\n";
    char line[256];
    for (double pv = start; pv < stop + 1e-12; pv += cfg.sweep_step) {
        const double qv = 1.0 - pv;
        if (pv <= 0.0 || pv >= 1.0) continue;
        const double h_closed = minimize_F_closed_form(pv, qv).nats;
        const auto report =
            channel_entropy_classical(StochasticMatrix{{pv, 1.0 - pv}, {qv, 1.0 - qv}});
        if (std::fabs(h_closed - report.h_channel.nats) > 1e-10) {
            std::cerr << "example: closed form and vertex search disagree at p=" << pv << "\n";
            return exit_invalid;
        }
        if (report.gap <= 0.0) {
            std::cerr << "example: gap is not strictly positive at p=" << pv << "\n";
            return exit_invalid;
        }
        std::snprintf(line, sizeof(line), "%.12g,%.12g,%.12g,%.12g,%.12g\n", pv, h_closed / unit,
                      report.h_channel.nats / unit, report.d_choi.nats / unit, report.gap / unit);
        csv += line;
    }
    emit(cfg, csv);
    return exit_ok;
}

int cmd_random(const RunConfig& cfg) {
    if (cfg.count < 1) {
        std::cerr << "random: --count must be at least 1\n";
        return exit_usage;
    }
    if (cfg.n < 2 || cfg.n > 3) {
        std::cerr << "random: --n must be 2 or 3\n";
        return exit_usage;
    }
    SampleRng rng(cfg.seed);
    double min_gap = 0.0, max_gap = 0.0;
    bool first = true;
    int failures = 0;
    for (int trial = 0; trial < cfg.count; ++trial) {
        const StochasticMatrix s = random_stochastic(rng, cfg.n);
        const auto report = channel_entropy_classical(s);
        if (report.gap < -1e-9) ++failures;
        if (first || report.gap < min_gap) min_gap = report.gap;
        if (first || report.gap > max_gap) max_gap = report.gap;
        first = false;
    }
    json out;
    out["count"] = cfg.count;
    out["n"] = cfg.n;
    out["seed"] = cfg.seed;
    out["failures"] = failures;
    out["min_gap"] = round_sig(min_gap);
    out["max_gap"] = round_sig(max_gap);
    emit(cfg, dump(out));
    return failures == 0 ? exit_ok : exit_invalid;
}

} // namespace

int run(const std::vector<std::string>& args) {
    RunConfig cfg;
    CLI::App app{"mixing entropy of unital completely positive channels"};
    app.require_subcommand(1);

    auto add_common = [&cfg](CLI::App* cmd) {
        cmd->add_option("--input,-i", cfg.input_path, "channel specification (JSON)");
        cmd->add_option("--output,-o", cfg.output_path, "output file (default stdout)");
        cmd->add_option("--p", cfg.p, "first row parameter of a 2x2 classical channel");
        cmd->add_option("--q", cfg.q, "second row parameter of a 2x2 classical channel");
        cmd->add_option("--seed", cfg.seed, "random seed");
        cmd->add_option("--tol", cfg.tolerance, "tolerance override for PSD/extremality checks");
        cmd->add_flag("--bits", cfg.bits, "report entropies in bits instead of nats");
    };

    CLI::App* choi = app.add_subcommand("choi", "representative operator, properties, extremality");
    CLI::App* entropy = app.add_subcommand("entropy", "entropy of the representative operator");
    entropy->add_flag("--normalized", cfg.normalized,
                      "use rho_T / n instead of rho_T (differs from the default by more "
                      "than the ln n shift)");
    CLI::App* hent = app.add_subcommand("hent", "exact mixing entropy H(T) of a classical channel");
    CLI::App* verify = app.add_subcommand("verify", "full consistency checks for a channel");
    CLI::App* example = app.add_subcommand("example", "CSV sweep of the 2x2 channel family, q = 1-p");
    example->add_option("--sweep-step", cfg.sweep_step, "p increment (default 0.1)");
    example->add_option("--sweep-start", cfg.sweep_start, "first p (default: step)");
    example->add_option("--sweep-stop", cfg.sweep_stop, "last p (default: 1 - step)");
    CLI::App* random = app.add_subcommand("random", "randomized inequality harness");
    random->add_option("--count", cfg.count, "number of random channels (default 100)");
    random->add_option("--n", cfg.n, "channel dimension, 2 or 3 (default 2)");
    for (CLI::App* cmd : {choi, entropy, hent, verify, example, random}) add_common(cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_usage;
    }

    try {
        if (choi->parsed()) return cmd_choi(cfg);
        if (entropy->parsed()) return cmd_entropy(cfg);
        if (hent->parsed()) return cmd_hent(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (example->parsed()) return cmd_example(cfg);
        if (random->parsed()) return cmd_random(cfg);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        // malformed input data is a usage error; failed validation of
        // well-formed data is reported as invalid
        return std::string(e.what()).find("malformed JSON") != std::string::npos ? exit_usage
                                                                                 : exit_invalid;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    }
    return exit_usage;
}

} // namespace chanent::cli
