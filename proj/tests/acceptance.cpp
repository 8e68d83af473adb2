// Acceptance suite: end-to-end checks of the simulator against the
// closed-form results, one printed pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qgame/analytic.hpp"
#include "qgame/equilibrium.hpp"
#include "qgame/game.hpp"
#include "qgame/verify.hpp"

using namespace qgame;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

const ChannelKind kKinds[] = {ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping,
                              ChannelKind::Depolarizing};

struct Tuple {
    double p, theta, q, r, s;
};

std::vector<Tuple> random_tuples(unsigned seed, std::size_t n) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Tuple> out(n);
    for (auto& t : out) t = {unit(rng), unit(rng) * kHalfPi, unit(rng), unit(rng), unit(rng)};
    return out;
}

StrategyProfile profile_for(std::size_t players, const Tuple& t) {
    return players == 3 ? StrategyProfile(t.q, t.r) : StrategyProfile(t.q, t.r, t.s);
}

PayoffVector closed_form(std::size_t players, ChannelKind kind, const Tuple& t) {
    using namespace analytic;
    AnalyticQuery query{players, kind, PlayerRole::Cooperator, t.p, t.theta, t.q, t.r, t.s};
    PayoffVector out{payoff_closed_form(query)};
    out.push_back(out[0]);
    query.player = PlayerRole::SoloC;
    out.push_back(payoff_closed_form(query));
    if (players == 4) {
        query.player = PlayerRole::SoloD;
        out.push_back(payoff_closed_form(query));
    }
    return out;
}

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %2d: %s  %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass) ++failures;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();

    // 1 & 2: closed forms vs the Kraus pipeline, and zero-sum, on 1000
    // seeded tuples per (game, channel).
    {
        double oracle_dev = 0.0, zero_sum_dev = 0.0;
        for (std::size_t players : {3u, 4u}) {
            const GameSpec spec = GameSpec::for_players(players);
            const auto tuples = random_tuples(42 + unsigned(players), 1000);
            for (ChannelKind kind : kKinds)
                for (const auto& t : tuples) {
                    const PayoffVector numeric =
                        play(spec, NoiseModel(kind, t.p), t.theta, profile_for(players, t));
                    const PayoffVector analytic_vals = closed_form(players, kind, t);
                    double sum = 0.0;
                    for (std::size_t i = 0; i < numeric.size(); ++i) {
                        oracle_dev = std::max(oracle_dev,
                                              std::abs(numeric[i] - analytic_vals[i]));
                        sum += numeric[i];
                    }
                    zero_sum_dev = std::max(zero_sum_dev, std::abs(sum));
                }
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report(1, oracle_dev <= 1e-10 && seconds < 30.0,
               "closed-form vs pipeline max |diff| = " + fmt(oracle_dev) + " (tol 1e-10), " +
                   fmt(seconds) + " s (< 30 s)");
        report(2, zero_sum_dev <= 1e-12,
               "max |sum of payoffs| = " + fmt(zero_sum_dev) + " (tol 1e-12)");
    }

    // 3: phase damping cooperator payoff is 1/2 at q=r(=s)=1/2 on a 21x21 grid.
    {
        double dev = 0.0;
        for (std::size_t players : {3u, 4u}) {
            const GameSpec spec = GameSpec::for_players(players);
            const StrategyProfile half =
                players == 3 ? StrategyProfile(0.5, 0.5) : StrategyProfile(0.5, 0.5, 0.5);
            for (int i = 0; i <= 20; ++i)
                for (int j = 0; j <= 20; ++j) {
                    const PayoffVector pay =
                        play(spec, NoiseModel(ChannelKind::PhaseDamping, i / 20.0),
                             kHalfPi * j / 20.0, half);
                    dev = std::max(dev, std::abs(pay[0] - 0.5));
                }
        }
        report(3, dev <= 1e-12, "max |P_AB - 1/2| = " + fmt(dev) + " (tol 1e-12)");
    }

    // 4: depolarizing at p=3/4 annihilates all payoffs.
    {
        double dev = 0.0;
        for (std::size_t players : {3u, 4u}) {
            const GameSpec spec = GameSpec::for_players(players);
            for (const auto& t : random_tuples(101, 100)) {
                const PayoffVector pay = play(spec, NoiseModel(ChannelKind::Depolarizing, 0.75),
                                              t.theta, profile_for(players, t));
                for (double v : pay) dev = std::max(dev, std::abs(v));
            }
        }
        report(4, dev <= 1e-12, "max |payoff| at p=0.75 = " + fmt(dev) + " (tol 1e-12)");
    }

    // 5: AD and PD coincide at p=1, with common maximized value 1/2.
    {
        double dev = 0.0, max_dev = 0.0;
        for (std::size_t players : {3u, 4u}) {
            const GameSpec spec = GameSpec::for_players(players);
            for (const auto& t : random_tuples(202, 100)) {
                const StrategyProfile profile = profile_for(players, t);
                const PayoffVector ad =
                    play(spec, NoiseModel(ChannelKind::AmplitudeDamping, 1.0), t.theta, profile);
                const PayoffVector pd =
                    play(spec, NoiseModel(ChannelKind::PhaseDamping, 1.0), t.theta, profile);
                for (std::size_t i = 0; i < ad.size(); ++i)
                    dev = std::max(dev, std::abs(ad[i] - pd[i]));
            }
            for (ChannelKind kind : {ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping})
                for (double theta : {0.0, 0.8, kHalfPi})
                    max_dev = std::max(
                        max_dev,
                        std::abs(analytic::max_payoff_closed_form(players, kind, 1.0, theta) -
                                 0.5));
        }
        report(5, dev <= 1e-12 && max_dev <= 1e-12,
               "AD vs PD at p=1 max |diff| = " + fmt(dev) + ", |max payoff - 1/2| = " +
                   fmt(max_dev) + " (tol 1e-12)");
    }

    // 6: at theta=0 the damping-channel payoffs are independent of p.
    {
        double dev = 0.0;
        for (std::size_t players : {3u, 4u}) {
            const GameSpec spec = GameSpec::for_players(players);
            for (const auto& t : random_tuples(303, 30)) {
                const StrategyProfile profile = profile_for(players, t);
                for (ChannelKind kind :
                     {ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping}) {
                    const PayoffVector base = play(spec, NoiseModel(kind, 0.0), 0.0, profile);
                    for (int step = 1; step <= 10; ++step) {
                        const PayoffVector pay =
                            play(spec, NoiseModel(kind, step / 10.0), 0.0, profile);
                        for (std::size_t i = 0; i < pay.size(); ++i)
                            dev = std::max(dev, std::abs(pay[i] - base[i]));
                    }
                }
            }
        }
        report(6, dev <= 1e-12, "theta=0 payoff spread over p = " + fmt(dev) + " (tol 1e-12)");
    }

    // 7: equilibrium recovery at q=r(=s)=1/2 (grid step 0.01) and Nash
    // stability of that profile.
    {
        double argmax_dev = 0.0, worst_violation = 0.0;
        SearchConfig config;  // 101 grid points per axis
        for (std::size_t players : {3u, 4u}) {
            const GameSpec spec = GameSpec::for_players(players);
            for (ChannelKind kind : kKinds)
                for (double p : {0.0, 0.25, 0.5, 0.9})
                    for (double theta : {0.0, std::numbers::pi / 4, kHalfPi}) {
                        const EquilibriumReport rep = maximize_cooperator_payoff(
                            spec, NoiseModel(kind, p), theta, config);
                        if (!rep.flat_surface) {
                            argmax_dev = std::max(argmax_dev, std::abs(rep.argmax.q - 0.5));
                            argmax_dev = std::max(argmax_dev, std::abs(rep.argmax.r - 0.5));
                            if (rep.argmax.s)
                                argmax_dev = std::max(argmax_dev, std::abs(*rep.argmax.s - 0.5));
                        }
                        const StrategyProfile half = players == 3
                                                         ? StrategyProfile(0.5, 0.5)
                                                         : StrategyProfile(0.5, 0.5, 0.5);
                        worst_violation = std::max(
                            worst_violation,
                            nash_check(spec, NoiseModel(kind, p), theta, half, config));
                    }
        }
        report(7, argmax_dev <= 0.01 + 1e-9 && worst_violation <= 1e-8,
               "max |argmax - 1/2| = " + fmt(argmax_dev) +
                   " (tol 0.01), max nash violation = " + fmt(worst_violation) +
                   " (tol 1e-8; q=r=1/2 is not Nash-stable under AD/DP for 0<p<1, theta>0: "
                   "the solo player gains by unilateral deviation)");
    }

    // 8: interior minimum of the maximized AD payoff over p at theta=pi/2.
    {
        const ExtremumOverP result =
            find_extremum_over_p(3, ChannelKind::AmplitudeDamping, kHalfPi, SearchConfig{});
        const double at_one =
            analytic::max_payoff_closed_form(3, ChannelKind::AmplitudeDamping, 1.0, kHalfPi);
        const bool pass = result.interior && result.p_star >= 0.50 && result.p_star <= 0.75 &&
                          at_one > result.value;
        char detail[160];
        std::snprintf(detail, sizeof detail,
                      "p* = %.4f in [0.50, 0.75], payoff %.4f rising to %.4f at p=1",
                      result.p_star, result.value, at_one);
        report(8, pass, detail);
    }

    // 9: at p=0.5, q=r=0.2 the channel ordering is PD > AD > DP for large
    // entanglement, and the DP payoff at theta=pi/2 is about 0.046.
    {
        bool ordered = true;
        const GameSpec spec = GameSpec::three_player();
        const StrategyProfile profile(0.2, 0.2);
        for (int i = 0; i <= 20; ++i) {
            const double theta = 1.2 + (kHalfPi - 1.2) * i / 20.0;
            const double ad =
                play(spec, NoiseModel(ChannelKind::AmplitudeDamping, 0.5), theta, profile)[0];
            const double pd =
                play(spec, NoiseModel(ChannelKind::PhaseDamping, 0.5), theta, profile)[0];
            const double dp =
                play(spec, NoiseModel(ChannelKind::Depolarizing, 0.5), theta, profile)[0];
            ordered = ordered && pd > ad && ad > dp;
        }
        const double dp_end =
            play(spec, NoiseModel(ChannelKind::Depolarizing, 0.5), kHalfPi, profile)[0];
        const bool pass = ordered && dp_end < 0.06 && std::abs(dp_end - 0.046) <= 0.01;
        char detail[128];
        std::snprintf(detail, sizeof detail,
                      "PD > AD > DP on [1.2, pi/2]: %s; DP at pi/2 = %.4f (0.046 +- 0.01)",
                      ordered ? "yes" : "no", dp_end);
        report(9, pass, detail);
    }

    // 10: completeness and trace preservation for every constructed Kraus
    // set up to 4 qubits, including the 256-operator depolarizing set.
    {
        double completeness_dev = 0.0, trace_dev = 0.0;
        std::mt19937_64 rng(404);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (ChannelKind kind : kKinds)
            for (double p : {0.0, 0.25, 0.5, 0.75, 1.0})
                for (std::size_t n : {1u, 2u, 3u, 4u}) {
                    const KrausSet kraus = lift_kraus(NoiseModel(kind, p), n);
                    completeness_dev = std::max(completeness_dev, check_completeness(kraus));
                    if (n >= 3) {
                        const DensityMatrix rho = initial_state(n, unit(rng) * kHalfPi);
                        const ComplexMatrix out = apply_channel(rho.matrix, kraus);
                        trace_dev = std::max(trace_dev, std::abs(trace(out).real() - 1.0));
                    }
                }
        report(10, completeness_dev <= 1e-12 && trace_dev <= 1e-12,
               "completeness dev = " + fmt(completeness_dev) + ", trace dev = " +
                   fmt(trace_dev) + " (tol 1e-12)");
    }

    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
