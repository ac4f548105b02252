// SPDX-License-Identifier: Apache-2.0
//
// lcu: minimum time-energy-uncertainty states on the half-line momentum
// spectrum. JSON reports go to standard output, diagnostics to standard
// error; nonzero exit codes match lcu::errc values.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "lcu/boost.hpp"
#include "lcu/errors.hpp"
#include "lcu/extremal.hpp"
#include "lcu/io.hpp"
#include "lcu/sampler.hpp"
#include "lcu/state.hpp"
#include "lcu/weber.hpp"

namespace {

using nlohmann::json;

std::size_t default_grid_n() {
    if (const char* env = std::getenv("LCU_DEFAULT_N")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v >= 3 && v % 2 == 1)
            return static_cast<std::size_t>(v);
        lcu::fail(lcu::errc::usage,
                  "LCU_DEFAULT_N must be an odd integer >= 3, got \"" + std::string(env) + "\"");
    }
    return 4001;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void diag(const std::string& msg) { std::cerr << "lcu: " << msg << "\n"; }

void warn_boundary(const lcu::SpectralState& state) {
    if (lcu::cutoff_warning(state))
        diag("warning: |f(k_max)|/max|f| = " + lcu::format_double(lcu::boundary_ratio(state)) +
             " exceeds 1e-6; the cutoff clips the state");
}

double resolve_mu(const std::string& mu_arg, double tol) {
    if (mu_arg == "auto")
        return lcu::solve_mu(lcu::kMuBracketLo, lcu::kMuBracketHi, tol).mu;
    try {
        std::size_t pos = 0;
        const double v = std::stod(mu_arg, &pos);
        if (pos == mu_arg.size())
            return v;
    } catch (const std::exception&) {
    }
    lcu::fail(lcu::errc::usage, "--mu expects a number or \"auto\", got \"" + mu_arg + "\"");
}

lcu::TimeGrid auto_or_explicit_time_grid(const lcu::SpectralState& state,
                                         std::optional<double> tau_min,
                                         std::optional<double> tau_max, std::size_t m) {
    if (tau_min && tau_max)
        return lcu::make_time_grid(*tau_min, *tau_max, m);
    if (tau_min || tau_max)
        lcu::fail(lcu::errc::usage, "give both --tau-min and --tau-max or neither");
    const double half = 10.0 * std::sqrt(lcu::time_variance_spectral(state));
    return lcu::make_time_grid(-half, half, m);
}

json moments_json(const lcu::Moments& m) {
    return json{{"mean", m.mean}, {"variance", m.variance}, {"second_moment", m.second_moment}};
}

int run(int argc, char** argv) {
    CLI::App app{"minimum time-energy-uncertainty states on the half-line spectrum"};
    app.require_subcommand(1);
    const std::size_t env_n = default_grid_n();

    // solve-mu
    auto* sc_solve = app.add_subcommand("solve-mu", "solve D'_{mu-1/2}(-2 sqrt(mu)) = 0");
    double bracket_lo = lcu::kMuBracketLo, bracket_hi = lcu::kMuBracketHi, solve_tol = 1e-10;
    sc_solve->add_option("--bracket-lo", bracket_lo, "lower bracket end");
    sc_solve->add_option("--bracket-hi", bracket_hi, "upper bracket end");
    sc_solve->add_option("--tol", solve_tol, "residual tolerance");
    sc_solve->callback([&] {
        const lcu::RootResult r = lcu::solve_mu(bracket_lo, bracket_hi, solve_tol);
        emit(json{{"mu", r.mu},
                  {"mu_squared", r.mu_squared},
                  {"nu", r.nu},
                  {"residual", r.residual},
                  {"iterations", r.iterations}});
    });

    // extremal
    auto* sc_ext = app.add_subcommand("extremal", "build the analytic extremal state");
    std::string mu_arg = "auto", ext_out;
    double ext_c = 1.0, ext_tol = 1e-10;
    std::optional<double> ext_kmax;
    std::size_t ext_n = env_n;
    sc_ext->add_option("--mu", mu_arg, "mu value or \"auto\" to solve for it");
    sc_ext->add_option("--c", ext_c, "mean momentum gauge (> 0)");
    sc_ext->add_option("--kmax", ext_kmax, "momentum cutoff (default 12 c)");
    sc_ext->add_option("--n", ext_n, "grid size (odd)");
    sc_ext->add_option("--tol", ext_tol, "root solver tolerance for --mu auto");
    sc_ext->add_option("-o,--output", ext_out, "state file to write (\"-\" for stdout)")
        ->required();
    sc_ext->callback([&] {
        const double mu = resolve_mu(mu_arg, ext_tol);
        const auto grid = lcu::make_momentum_grid(ext_kmax.value_or(12.0 * ext_c), ext_n);
        auto [state, params] = lcu::build_extremal(mu, ext_c, grid);
        const auto q = lcu::extremal_integrals(state);
        lcu::write_state_file(state, ext_out);
        const json report{{"mu", params.mu},
                          {"nu", params.nu},
                          {"a", params.a},
                          {"b", params.b},
                          {"c", params.c},
                          {"c_quadrature", q.c},
                          {"scale", params.scale},
                          {"omega", lcu::omega(state)},
                          {"omega_sqrt", std::sqrt(lcu::omega(state))},
                          {"boundary_ratio", lcu::boundary_ratio(state)}};
        if (ext_out == "-")
            std::cerr << report.dump(2) << "\n";
        else
            emit(report);
    });

    // minimize
    auto* sc_min = app.add_subcommand("minimize", "minimize Omega by projected descent");
    std::string min_init = "gaussian", min_input, min_out;
    double min_kbar = 1.0, min_sigma = 0.7, min_kmax = 12.0, min_step = 0.1,
           min_grad_tol = 1e-7;
    std::size_t min_n = env_n;
    int min_max_iter = 200000;
    sc_min->add_option("--init", min_init, "initializer: gaussian or file")
        ->check(CLI::IsMember({"gaussian", "file"}));
    sc_min->add_option("--input", min_input, "state file for --init file");
    sc_min->add_option("--kbar", min_kbar, "gaussian center");
    sc_min->add_option("--sigma", min_sigma, "gaussian width");
    sc_min->add_option("--kmax", min_kmax, "momentum cutoff");
    sc_min->add_option("--n", min_n, "grid size (odd)");
    sc_min->add_option("--step", min_step, "initial step");
    sc_min->add_option("--max-iter", min_max_iter, "iteration cap");
    sc_min->add_option("--grad-tol", min_grad_tol, "projected-gradient norm target");
    sc_min->add_option("-o,--output", min_out, "write the converged state here");
    sc_min->callback([&] {
        lcu::SpectralState init;
        if (min_init == "file") {
            if (min_input.empty())
                lcu::fail(lcu::errc::usage, "--init file requires --input");
            init = lcu::normalize(lcu::read_state_file(min_input));
        } else {
            init = lcu::make_gaussian(min_kbar, min_sigma,
                                      lcu::make_momentum_grid(min_kmax, min_n));
        }
        const lcu::MinimizeReport rep =
            lcu::minimize_omega(init, min_step, min_max_iter, min_grad_tol);
        if (!min_out.empty())
            lcu::write_state_file(rep.state, min_out);
        emit(json{{"omega_min", rep.omega_min},
                  {"omega_min_sqrt", std::sqrt(rep.omega_min)},
                  {"iterations", rep.iterations},
                  {"grad_norm", rep.grad_norm}});
    });

    // stats
    auto* sc_stats = app.add_subcommand("stats", "norm, moments and Omega of a state");
    std::string stats_path;
    sc_stats->add_option("state", stats_path, "state file (\"-\" for stdin)")->required();
    sc_stats->callback([&] {
        const auto state = lcu::read_state_file(stats_path);
        warn_boundary(state);
        const double n2 = lcu::norm_squared(state);
        const auto m = lcu::momentum_moments(state);
        const double tvs = lcu::time_variance_spectral(state);
        emit(json{{"norm_squared", n2},
                  {"boundary_ratio", lcu::boundary_ratio(state)},
                  {"mean", m.mean},
                  {"variance", m.variance},
                  {"second_moment", m.second_moment},
                  {"time_variance_spectral", tvs},
                  {"omega", tvs * m.variance},
                  {"omega_sqrt", std::sqrt(tvs * m.variance)}});
    });

    // timedist
    auto* sc_time = app.add_subcommand("timedist", "time-domain amplitude and moments");
    std::string time_path, time_out;
    std::optional<double> time_lo, time_hi;
    std::size_t time_m = 2001;
    sc_time->add_option("state", time_path, "state file (\"-\" for stdin)")->required();
    sc_time->add_option("--tau-min", time_lo, "window start (default auto)");
    sc_time->add_option("--tau-max", time_hi, "window end (default auto)");
    sc_time->add_option("--m", time_m, "time grid size (odd)");
    sc_time->add_option("-o,--output", time_out, "CSV file: tau,re,im,density")->required();
    sc_time->callback([&] {
        const auto state = lcu::normalize(lcu::read_state_file(time_path));
        warn_boundary(state);
        const auto tg = auto_or_explicit_time_grid(state, time_lo, time_hi, time_m);
        const auto ta = lcu::time_amplitude(state, tg);
        lcu::write_timedist_csv_file(ta, time_out);
        auto j = moments_json(lcu::time_moments(ta));
        j["norm_squared"] = lcu::norm_squared(ta);
        j["window"] = json::array({tg.tau_min(), tg.tau_max()});
        j["m"] = tg.n;
        emit(j);
    });

    // boost
    auto* sc_boost = app.add_subcommand("boost", "apply a Lorentz boost to a state");
    std::string boost_path, boost_out;
    double boost_beta = 0.0;
    sc_boost->add_option("--beta", boost_beta, "velocity in units of c, |beta| < 1")
        ->required();
    sc_boost->add_option("state", boost_path, "state file (\"-\" for stdin)")->required();
    sc_boost->add_option("-o,--output", boost_out, "boosted state file (\"-\" for stdout)")
        ->required();
    sc_boost->callback([&] {
        const auto state = lcu::read_state_file(boost_path);
        const auto boosted = lcu::boost_state(state, boost_beta);
        lcu::write_state_file(boosted, boost_out);
        const auto m = lcu::momentum_moments(boosted);
        const json report{{"beta", boost_beta},
                          {"doppler", lcu::make_transform(boost_beta, 0, 0).doppler},
                          {"k_max", boosted.grid.k_max()},
                          {"mean", m.mean},
                          {"variance", m.variance}};
        if (boost_out == "-")
            std::cerr << report.dump(2) << "\n";
        else
            emit(report);
    });

    // invariance
    auto* sc_inv = app.add_subcommand("invariance", "Omega invariance report under a boost");
    std::string inv_path;
    double inv_beta = 0.0;
    sc_inv->add_option("--beta", inv_beta, "velocity in units of c")->required();
    sc_inv->add_option("state", inv_path, "state file (\"-\" for stdin)")->required();
    sc_inv->callback([&] {
        const auto state = lcu::read_state_file(inv_path);
        const auto r = lcu::invariance_report(state, inv_beta);
        emit(json{{"beta", r.beta},
                  {"doppler", r.doppler},
                  {"measured",
                   {{"mean", r.mean_m},
                    {"var_k", r.var_k_m},
                    {"var_tau", r.var_tau_m},
                    {"product", r.product_m},
                    {"product_sqrt", r.product_sqrt_m}}},
                  {"predicted",
                   {{"mean", r.mean_pred},
                    {"var_k", r.var_k_pred},
                    {"var_tau", r.var_tau_pred},
                    {"product", r.product_rest}}},
                  {"deviation",
                   {{"mean", r.dev_mean},
                    {"var_k", r.dev_var_k},
                    {"var_tau", r.dev_var_tau},
                    {"product", r.dev_product}}}});
    });

    // covariance
    auto* sc_cov = app.add_subcommand("covariance", "distribution-level covariance check");
    std::string cov_path;
    double cov_beta = 0.0, cov_a = 0.0, cov_a0 = 0.0;
    sc_cov->add_option("--beta", cov_beta, "velocity in units of c");
    sc_cov->add_option("--a", cov_a, "spatial translation");
    sc_cov->add_option("--a0", cov_a0, "time translation");
    sc_cov->add_option("state", cov_path, "state file (\"-\" for stdin)")->required();
    sc_cov->callback([&] {
        const auto state = lcu::read_state_file(cov_path);
        const auto r = lcu::covariance_check(state, cov_beta, cov_a, cov_a0);
        emit(json{{"beta", r.beta},
                  {"a", r.a},
                  {"a0", r.a0},
                  {"dev_tau", r.dev_tau},
                  {"dev_tau_alt_ordering", r.dev_tau_alt},
                  {"dev_k", r.dev_k}});
    });

    // sample
    auto* sc_sample = app.add_subcommand("sample", "Monte Carlo measurement outcomes");
    std::string sample_kind, sample_path, sample_out;
    std::size_t sample_count = 100000, sample_m = 2001;
    std::uint64_t sample_seed = 1;
    std::optional<double> sample_lo, sample_hi;
    sc_sample->add_option("--kind", sample_kind, "momentum or tau")
        ->required()
        ->check(CLI::IsMember({"momentum", "tau"}));
    sc_sample->add_option("--n,--count", sample_count, "number of samples");
    sc_sample->add_option("--seed", sample_seed, "64-bit seed");
    sc_sample->add_option("--tau-min", sample_lo, "tau window start (kind tau)");
    sc_sample->add_option("--tau-max", sample_hi, "tau window end (kind tau)");
    sc_sample->add_option("--m", sample_m, "tau grid size (kind tau)");
    sc_sample->add_option("state", sample_path, "state file (\"-\" for stdin)")->required();
    sc_sample->add_option("-o,--output", sample_out, "CSV file with header \"value\"")
        ->required();
    sc_sample->callback([&] {
        const auto state = lcu::normalize(lcu::read_state_file(sample_path));
        lcu::SampleBatch batch;
        if (sample_kind == "momentum") {
            batch = lcu::sample_momentum(state, sample_count, sample_seed);
        } else {
            const auto tg = auto_or_explicit_time_grid(state, sample_lo, sample_hi, sample_m);
            batch = lcu::sample_tau(state, tg, sample_count, sample_seed);
        }
        lcu::write_samples_csv_file(batch, sample_out);
        const auto est = lcu::estimate_moments(batch);
        emit(json{{"kind", sample_kind},
                  {"count", est.count},
                  {"seed", sample_seed},
                  {"mean", est.mean},
                  {"variance", est.variance},
                  {"se_mean", est.se_mean},
                  {"se_variance", est.se_variance}});
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help and friends
        emit(json{{"error",
                   {{"code", static_cast<int>(lcu::errc::usage)},
                    {"name", "usage"},
                    {"message", e.what()}}}});
        return static_cast<int>(lcu::errc::usage);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const lcu::error& e) {
        emit(json{{"error",
                   {{"code", e.exit_code()},
                    {"name", lcu::errc_name(e.code())},
                    {"message", e.what()}}}});
        return e.exit_code();
    } catch (const std::exception& e) {
        emit(json{{"error", {{"code", 1}, {"name", "internal"}, {"message", e.what()}}}});
        return 1;
    }
}
