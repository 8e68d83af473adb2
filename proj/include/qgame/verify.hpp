#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "qgame/analytic.hpp"
#include "qgame/game.hpp"

namespace qgame {
namespace verify {

struct CheckResult {
    std::string name;
    double deviation;
    double tolerance;

    bool passed() const { return deviation <= tolerance; }
};

struct Options {
    unsigned seed = 42;
    std::size_t samples = 1000;
};

namespace detail {

constexpr double kHalfPi = 1.5707963267948966;

inline ChannelKind kinds[] = {ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping,
                              ChannelKind::Depolarizing};

struct Sample {
    double p, theta, q, r, s;
};

inline std::vector<Sample> draw_samples(unsigned seed, std::size_t n) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Sample> out(n);
    for (auto& s : out)
        s = {unit(rng), unit(rng) * kHalfPi, unit(rng), unit(rng), unit(rng)};
    return out;
}

inline PayoffVector closed_form_payoffs(std::size_t players, ChannelKind kind, const Sample& s) {
    using namespace analytic;
    AnalyticQuery query{players, kind, PlayerRole::Cooperator, s.p, s.theta, s.q, s.r, s.s};
    PayoffVector out;
    out.push_back(payoff_closed_form(query));
    out.push_back(out[0]);
    query.player = PlayerRole::SoloC;
    out.push_back(payoff_closed_form(query));
    if (players == 4) {
        query.player = PlayerRole::SoloD;
        out.push_back(payoff_closed_form(query));
    }
    return out;
}

inline StrategyProfile profile_for(std::size_t players, const Sample& s) {
    return players == 3 ? StrategyProfile(s.q, s.r) : StrategyProfile(s.q, s.r, s.s);
}

}  // namespace detail

inline double weight_zero_sum_deviation(const std::vector<std::vector<double>>& tables) {
    double worst = 0.0;
    for (std::size_t i = 0; i < tables.front().size(); ++i) {
        double sum = 0.0;
        for (const auto& t : tables) sum += t[i];
        worst = std::max(worst, std::abs(sum));
    }
    return worst;
}

/// Full machine-checkable invariant suite. Each entry is the worst observed
/// deviation over seeded random samples against its tolerance.
inline std::vector<CheckResult> run_checks(const Options& opts = {}) {
    using detail::kHalfPi;
    std::vector<CheckResult> results;
    const auto samples = detail::draw_samples(opts.seed, opts.samples);

    // Closed forms vs the Kraus pipeline, and zero-sum of pipeline payoffs.
    double oracle_dev = 0.0, zero_sum_dev = 0.0;
    for (std::size_t players : {3u, 4u}) {
        const GameSpec spec = GameSpec::for_players(players);
        for (ChannelKind kind : detail::kinds) {
            for (const auto& s : samples) {
                const PayoffVector numeric =
                    play(spec, NoiseModel(kind, s.p), s.theta, detail::profile_for(players, s));
                const PayoffVector analytic_vals = detail::closed_form_payoffs(players, kind, s);
                double sum = 0.0;
                for (std::size_t i = 0; i < numeric.size(); ++i) {
                    oracle_dev = std::max(oracle_dev, std::abs(numeric[i] - analytic_vals[i]));
                    sum += numeric[i];
                }
                zero_sum_dev = std::max(zero_sum_dev, std::abs(sum));
            }
        }
    }
    results.push_back({"oracle-equivalence", oracle_dev, 1e-10});
    results.push_back({"zero-sum", zero_sum_dev, 1e-12});

    {
        std::vector<std::vector<double>> tables;
        for (std::size_t players : {3u, 4u}) {
            const GameSpec spec = GameSpec::for_players(players);
            tables.clear();
            for (std::size_t pl = 0; pl < players; ++pl) tables.push_back(spec.weights(pl));
            results.push_back({"weight-table-zero-sum-" + std::to_string(players) + "p",
                               weight_zero_sum_deviation(tables), 0.0});
        }
    }

    // Channel machinery: completeness and trace preservation up to 4 qubits.
    {
        double completeness_dev = 0.0, trace_dev = 0.0;
        std::mt19937_64 rng(opts.seed + 1);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (ChannelKind kind : detail::kinds)
            for (double p : {0.0, 0.25, 0.5, 0.75, 1.0})
                for (std::size_t n : {1u, 2u, 3u, 4u}) {
                    const KrausSet kraus = lift_kraus(NoiseModel(kind, p), n);
                    completeness_dev = std::max(completeness_dev, check_completeness(kraus));
                    const DensityMatrix rho = initial_state(std::max<std::size_t>(n, 3), 0.3);
                    if (n >= 3) {
                        const ComplexMatrix out = apply_channel(rho.matrix, kraus);
                        trace_dev = std::max(trace_dev, std::abs(trace(out).real() - 1.0));
                    }
                }
        results.push_back({"kraus-completeness", completeness_dev, 1e-12});
        results.push_back({"trace-preservation", trace_dev, 1e-12});
    }

    // PD cooperator payoff is exactly 1/2 at q=r(=s)=1/2 on a (p, theta) grid.
    {
        double dev = 0.0;
        for (std::size_t players : {3u, 4u}) {
            const GameSpec spec = GameSpec::for_players(players);
            const StrategyProfile half =
                players == 3 ? StrategyProfile(0.5, 0.5) : StrategyProfile(0.5, 0.5, 0.5);
            for (std::size_t i = 0; i < 21; ++i)
                for (std::size_t j = 0; j < 21; ++j) {
                    const double p = i / 20.0, theta = kHalfPi * j / 20.0;
                    const PayoffVector pay =
                        play(spec, NoiseModel(ChannelKind::PhaseDamping, p), theta, half);
                    dev = std::max(dev, std::abs(pay[0] - 0.5));
                }
        }
        results.push_back({"pd-maximized-half", dev, 1e-12});
    }

    // Depolarizing at p = 3/4 annihilates every payoff.
    {
        double dev = 0.0;
        const std::size_t n = std::min<std::size_t>(opts.samples, 100);
        for (std::size_t players : {3u, 4u}) {
            const GameSpec spec = GameSpec::for_players(players);
            for (std::size_t i = 0; i < n; ++i) {
                const auto& s = samples[i];
                const PayoffVector pay = play(spec, NoiseModel(ChannelKind::Depolarizing, 0.75),
                                              s.theta, detail::profile_for(players, s));
                for (double v : pay) dev = std::max(dev, std::abs(v));
            }
        }
        results.push_back({"dp-annihilation-at-0.75", dev, 1e-12});
    }

    // AD and PD coincide at full decoherence.
    {
        double dev = 0.0;
        const std::size_t n = std::min<std::size_t>(opts.samples, 100);
        for (std::size_t players : {3u, 4u}) {
            const GameSpec spec = GameSpec::for_players(players);
            for (std::size_t i = 0; i < n; ++i) {
                const auto& s = samples[i];
                const StrategyProfile profile = detail::profile_for(players, s);
                const PayoffVector ad =
                    play(spec, NoiseModel(ChannelKind::AmplitudeDamping, 1.0), s.theta, profile);
                const PayoffVector pd =
                    play(spec, NoiseModel(ChannelKind::PhaseDamping, 1.0), s.theta, profile);
                for (std::size_t k = 0; k < ad.size(); ++k)
                    dev = std::max(dev, std::abs(ad[k] - pd[k]));
            }
        }
        results.push_back({"ad-pd-coincide-at-p1", dev, 1e-12});
    }

    // theta = 0 payoffs do not depend on p for the damping channels.
    {
        double dev = 0.0;
        const std::size_t n = std::min<std::size_t>(opts.samples, 50);
        for (std::size_t players : {3u, 4u}) {
            const GameSpec spec = GameSpec::for_players(players);
            for (ChannelKind kind : {ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping})
                for (std::size_t i = 0; i < n; ++i) {
                    const StrategyProfile profile = detail::profile_for(players, samples[i]);
                    const PayoffVector base = play(spec, NoiseModel(kind, 0.0), 0.0, profile);
                    for (int step = 1; step <= 10; ++step) {
                        const PayoffVector pay =
                            play(spec, NoiseModel(kind, step / 10.0), 0.0, profile);
                        for (std::size_t k = 0; k < pay.size(); ++k)
                            dev = std::max(dev, std::abs(pay[k] - base[k]));
                    }
                }
        }
        results.push_back({"theta0-p-independence", dev, 1e-12});
    }

    // p = 0: all three channels are the identity channel.
    {
        double dev = 0.0;
        const std::size_t n = std::min<std::size_t>(opts.samples, 100);
        for (std::size_t players : {3u, 4u}) {
            const GameSpec spec = GameSpec::for_players(players);
            for (std::size_t i = 0; i < n; ++i) {
                const auto& s = samples[i];
                const StrategyProfile profile = detail::profile_for(players, s);
                const PayoffVector ad =
                    play(spec, NoiseModel(ChannelKind::AmplitudeDamping, 0.0), s.theta, profile);
                for (ChannelKind kind : {ChannelKind::PhaseDamping, ChannelKind::Depolarizing}) {
                    const PayoffVector other = play(spec, NoiseModel(kind, 0.0), s.theta, profile);
                    for (std::size_t k = 0; k < ad.size(); ++k)
                        dev = std::max(dev, std::abs(ad[k] - other[k]));
                }
            }
        }
        results.push_back({"p0-channel-independence", dev, 1e-12});
    }

    return results;
}

}  // namespace verify
}  // namespace qgame
