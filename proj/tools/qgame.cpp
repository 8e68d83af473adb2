// Command-line front end: single payoff evaluations, (p, theta) payoff
// surface sweeps, the self-verification suite and equilibrium reports.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qgame/analytic.hpp"
#include "qgame/equilibrium.hpp"
#include "qgame/game.hpp"
#include "qgame/sweep.hpp"
#include "qgame/verify.hpp"

namespace {

constexpr double kHalfPi = 1.5707963267948966;
constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitCheckFailure = 2;

struct ChannelArg {
    std::string name = "ad";

    std::vector<qgame::ChannelKind> kinds() const {
        using qgame::ChannelKind;
        if (name == "ad") return {ChannelKind::AmplitudeDamping};
        if (name == "pd") return {ChannelKind::PhaseDamping};
        if (name == "dp") return {ChannelKind::Depolarizing};
        if (name == "all")
            return {ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping,
                    ChannelKind::Depolarizing};
        // "nd" (no damping) is any channel at p=0.
        if (name == "nd") return {ChannelKind::AmplitudeDamping};
        throw CLI::ValidationError("--channel", "must be one of ad, pd, dp, nd, all");
    }

    bool is_no_damping() const { return name == "nd"; }
};

std::string resolve_output(const std::string& path) {
    if (path.empty() || std::filesystem::path(path).is_absolute()) return path;
    if (const char* dir = std::getenv("QGAME_OUTPUT_DIR"))
        return (std::filesystem::path(dir) / path).string();
    return path;
}

qgame::analytic::PlayerRole role_of(std::size_t player_index, std::size_t players) {
    using qgame::analytic::PlayerRole;
    if (player_index < 2) return PlayerRole::Cooperator;
    if (player_index == 2) return PlayerRole::SoloC;
    (void)players;
    return PlayerRole::SoloD;
}

int run_payoff(std::size_t players, const ChannelArg& channel, double p, double theta, double q,
               double r, double s, bool have_s, bool compare_analytic) {
    const qgame::GameSpec spec = qgame::GameSpec::for_players(players);
    if (players == 4 && !have_s) throw CLI::ValidationError("--s", "required for --players 4");
    if (players == 3 && have_s) throw CLI::ValidationError("--s", "only valid for --players 4");
    if (channel.is_no_damping()) p = 0.0;
    const qgame::StrategyProfile profile =
        players == 3 ? qgame::StrategyProfile(q, r) : qgame::StrategyProfile(q, r, s);

    static const char* labels[] = {"P_A", "P_B", "P_C", "P_D"};
    for (qgame::ChannelKind kind : channel.kinds()) {
        const qgame::PayoffVector pay =
            qgame::play(spec, qgame::NoiseModel(kind, p), theta, profile);
        std::printf("channel=%s p=%.12g theta=%.12g q=%.12g r=%.12g", to_string(kind).c_str(), p,
                    theta, q, r);
        if (players == 4) std::printf(" s=%.12g", s);
        std::printf("\n");
        for (std::size_t i = 0; i < pay.size(); ++i) {
            std::printf("  %s = %.12g", labels[i], pay[i]);
            if (compare_analytic) {
                qgame::analytic::AnalyticQuery query{players,        kind, role_of(i, players),
                                                     p,    theta, q,    r,    s};
                const double cf = qgame::analytic::payoff_closed_form(query);
                std::printf("   closed-form = %.12g   |diff| = %.3g", cf, std::abs(pay[i] - cf));
            }
            std::printf("\n");
        }
    }
    return kExitOk;
}

int run_verify(unsigned seed, std::size_t samples) {
    const auto results = qgame::verify::run_checks({seed, samples});
    bool all_ok = true;
    for (const auto& check : results) {
        std::printf("%-32s max deviation %.3e  (tol %.0e)  %s\n", check.name.c_str(),
                    check.deviation, check.tolerance, check.passed() ? "PASS" : "FAIL");
        all_ok = all_ok && check.passed();
    }
    if (!all_ok) {
        std::fprintf(stderr, "verification failed\n");
        return kExitCheckFailure;
    }
    return kExitOk;
}

int run_equilibrium(std::size_t players, const ChannelArg& channel, double p, double theta,
                    std::size_t grid_points) {
    if (channel.kinds().size() != 1)
        throw CLI::ValidationError("--channel", "equilibrium needs a single channel");
    if (channel.is_no_damping()) p = 0.0;
    const qgame::GameSpec spec = qgame::GameSpec::for_players(players);
    qgame::SearchConfig config;
    config.grid_points = grid_points;
    const qgame::EquilibriumReport report = qgame::maximize_cooperator_payoff(
        spec, qgame::NoiseModel(channel.kinds()[0], p), theta, config);
    std::printf("argmax: q=%.6f r=%.6f", report.argmax.q, report.argmax.r);
    if (report.argmax.s) std::printf(" s=%.6f", *report.argmax.s);
    std::printf("\nvalue: %.12g\n", report.value);
    std::printf("stationarity residual: %.3e\n", report.stationarity_residual);
    std::printf("nash violation: %.3e\n", report.nash_violation);
    if (report.flat_surface) std::printf("flat payoff surface\n");
    const double analytic_max = qgame::analytic::max_payoff_closed_form(
        players, channel.kinds()[0], p, theta);
    std::printf("closed-form value at q=r%s=1/2: %.12g\n", players == 4 ? "=s" : "",
                analytic_max);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cooperative quantum games under decoherence"};
    app.require_subcommand(1);

    std::size_t players = 3;
    ChannelArg channel;
    double p = 0.0, theta = kHalfPi, q = 0.5, r = 0.5, s = 0.5;
    double theta_deg = -1.0;
    bool compare = false;

    auto add_common = [&](CLI::App* cmd, bool with_strategy) {
        cmd->add_option("--players", players, "number of players (3 or 4)")
            ->check(CLI::IsMember({3, 4}));
        cmd->add_option("--channel", channel.name, "channel: ad, pd, dp, nd or all");
        cmd->add_option("--p", p, "decoherence parameter")->check(CLI::Range(0.0, 1.0));
        auto* th = cmd->add_option("--theta", theta, "entanglement parameter, radians")
                       ->check(CLI::Range(0.0, kHalfPi + 1e-12));
        cmd->add_option("--theta-deg", theta_deg, "entanglement parameter, degrees")
            ->excludes(th);
        if (with_strategy) {
            cmd->add_option("--q", q, "cooperator parameter")->check(CLI::Range(0.0, 1.0));
            cmd->add_option("--r", r, "player C parameter")->check(CLI::Range(0.0, 1.0));
        }
    };

    auto* payoff = app.add_subcommand("payoff", "evaluate one payoff vector");
    add_common(payoff, true);
    auto* s_opt = payoff->add_option("--s", s, "player D parameter (four players)")
                      ->check(CLI::Range(0.0, 1.0));
    payoff->add_flag("--analytic", compare, "also print closed-form values and differences");

    auto* surface = app.add_subcommand("surface", "sweep payoffs over a (p, theta) grid");
    add_common(surface, true);
    auto* s_opt2 = surface->add_option("--s", s, "player D parameter (four players)")
                       ->check(CLI::Range(0.0, 1.0));
    std::vector<double> p_range{0.0, 1.0};
    std::vector<double> theta_range{0.0, kHalfPi};
    std::size_t p_count = 101, theta_count = 101;
    std::string output = "surface.csv", format = "csv";
    surface->add_option("--p-range", p_range, "p sweep range: min max")->expected(2);
    surface->add_option("--p-count", p_count, "p grid points");
    surface->add_option("--theta-range", theta_range, "theta sweep range: min max")->expected(2);
    surface->add_option("--theta-count", theta_count, "theta grid points");
    surface->add_option("-o,--output", output, "output file (relative paths resolve under QGAME_OUTPUT_DIR)");
    surface->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* verify = app.add_subcommand("verify", "run the invariant verification suite");
    unsigned seed = 42;
    std::size_t samples = 1000;
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--samples", samples, "random tuples per check")->check(CLI::PositiveNumber);

    auto* equilibrium = app.add_subcommand("equilibrium", "locate the payoff-maximizing profile");
    add_common(equilibrium, false);
    std::size_t grid_points = 101;
    equilibrium->add_option("--grid-points", grid_points, "grid points per axis")
        ->check(CLI::Range(std::size_t{3}, std::size_t{100000}));

    try {
        app.parse(argc, argv);
        if (theta_deg >= 0.0) theta = theta_deg * kHalfPi / 90.0;

        if (payoff->parsed())
            return run_payoff(players, channel, p, theta, q, r, s, s_opt->count() > 0, compare);

        if (surface->parsed()) {
            qgame::SweepRequest request;
            request.players = players;
            request.kinds = channel.kinds();
            request.q = q;
            request.r = r;
            if (s_opt2->count() > 0) request.s = s;
            if (channel.is_no_damping()) {
                p_range = {0.0, 0.0};
                p_count = 1;
            }
            request.p_grid = {p_range[0], p_range[1], p_count};
            request.theta_grid = {theta_range[0], theta_range[1], theta_count};
            request.format = format == "json" ? qgame::OutputFormat::Json : qgame::OutputFormat::Csv;
            const auto rows = qgame::run_sweep(request);
            const std::string path = resolve_output(output);
            qgame::write_sweep(rows, request.format, path);
            std::printf("wrote %zu rows to %s\n", rows.size(), path.c_str());
            return kExitOk;
        }

        if (verify->parsed()) return run_verify(seed, samples);

        if (equilibrium->parsed())
            return run_equilibrium(players, channel, p, theta, grid_points);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitCheckFailure;
    }
    return kExitValidation;
}
