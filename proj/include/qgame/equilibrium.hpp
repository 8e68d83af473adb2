#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "qgame/analytic.hpp"
#include "qgame/game.hpp"

namespace qgame {

struct SearchConfig {
    std::size_t grid_points = 101;  // per axis
    double refine_tol = 1e-6;
    unsigned seed = 42;

    void validate() const {
        if (grid_points < 3) throw std::invalid_argument("SearchConfig: grid_points must be >= 3");
        if (!(refine_tol > 0)) throw std::invalid_argument("SearchConfig: refine_tol must be positive");
    }
};

struct EquilibriumReport {
    StrategyProfile argmax{0.5, 0.5};
    double value = 0.0;
    double stationarity_residual = 0.0;  // max |central-difference gradient| component
    double nash_violation = 0.0;         // max unilateral-deviation gain found
    bool flat_surface = false;           // payoff constant over the whole grid
};

namespace detail {

/// Golden-section maximization of f over [lo, hi].
inline double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                                 double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return (a + b) / 2;
}

inline StrategyProfile make_profile(std::size_t players, const std::vector<double>& x) {
    return players == 3 ? StrategyProfile(x[0], x[1]) : StrategyProfile(x[0], x[1], x[2]);
}

}  // namespace detail

inline double nash_check(const GameSpec& spec, const NoiseModel& model, double theta,
                         const StrategyProfile& profile, const SearchConfig& config = {});

/// Grid search for the cooperator-payoff maximizer with the opponent
/// parameters co-varied over the same grid (all strategy parameters move
/// together, the way the joint stationarity condition couples them),
/// followed by golden-section refinement. Grid ties break toward the
/// smallest parameter value.
inline EquilibriumReport maximize_cooperator_payoff(const GameSpec& spec, const NoiseModel& model,
                                                    double theta, const SearchConfig& config = {}) {
    config.validate();
    const PayoffTable table(spec, model, theta);
    const std::size_t axes = spec.players() == 3 ? 2 : 3;
    const std::size_t n = config.grid_points;

    auto coop = [&](const std::vector<double>& x) {
        return table.cooperator_payoff(detail::make_profile(spec.players(), x));
    };
    auto coop_diag = [&](double t) { return coop(std::vector<double>(axes, t)); };

    double best_t = 0.0;
    double best_value = coop_diag(0.0);
    double lo_value = best_value, hi_value = best_value;
    for (std::size_t i = 1; i < n; ++i) {
        const double t = double(i) / double(n - 1);
        const double v = coop_diag(t);
        lo_value = std::min(lo_value, v);
        hi_value = std::max(hi_value, v);
        if (v > best_value + 1e-15) {
            best_value = v;
            best_t = t;
        }
    }

    EquilibriumReport report;
    report.flat_surface = (hi_value - lo_value) <= 1e-12;

    if (!report.flat_surface) {
        const double step = 1.0 / double(n - 1);
        const double refined = detail::golden_section_max(
            coop_diag, std::max(0.0, best_t - step), std::min(1.0, best_t + step),
            config.refine_tol);
        if (coop_diag(refined) > best_value) {
            best_t = refined;
            best_value = coop_diag(refined);
        }
    }

    const std::vector<double> best(axes, best_t);
    report.argmax = detail::make_profile(spec.players(), best);
    report.value = best_value;

    const double h = 1e-4;
    for (std::size_t a = 0; a < axes; ++a) {
        std::vector<double> plus = best, minus = best;
        plus[a] = std::min(1.0, best[a] + h);
        minus[a] = std::max(0.0, best[a] - h);
        const double grad = (coop(plus) - coop(minus)) / (plus[a] - minus[a]);
        report.stationarity_residual = std::max(report.stationarity_residual, std::abs(grad));
    }
    report.nash_violation = nash_check(spec, model, theta, report.argmax, config);
    return report;
}

/// Maximum payoff gain any single decision-maker (the pair AB acting as one
/// agent, then C, then D) can obtain by deviating alone from `profile`,
/// scanning its own parameter over the grid plus golden-section refinement.
inline double nash_check(const GameSpec& spec, const NoiseModel& model, double theta,
                         const StrategyProfile& profile, const SearchConfig& config) {
    config.validate();
    if (profile.players() != spec.players())
        throw std::invalid_argument("nash_check: profile does not match game");
    const PayoffTable table(spec, model, theta);
    const PayoffVector base = table.evaluate(profile);
    const std::size_t axes = spec.players() == 3 ? 2 : 3;
    const std::size_t n = config.grid_points;

    std::vector<double> x0 = {profile.q, profile.r};
    if (profile.s) x0.push_back(*profile.s);

    double violation = 0.0;
    for (std::size_t a = 0; a < axes; ++a) {
        // Agent 0 is the cooperating pair (its payoff is the cooperator
        // payoff); agents 1 and 2 are the solo players.
        const std::size_t payoff_index = a == 0 ? 0 : (spec.players() == 3 ? 2 : a + 1);
        auto agent_payoff = [&](double t) {
            std::vector<double> x = x0;
            x[a] = t;
            return table.evaluate(detail::make_profile(spec.players(), x))[payoff_index];
        };
        double best = base[payoff_index];
        double best_t = x0[a];
        for (std::size_t i = 0; i < n; ++i) {
            const double t = double(i) / double(n - 1);
            const double v = agent_payoff(t);
            if (v > best) {
                best = v;
                best_t = t;
            }
        }
        const double step = 1.0 / double(n - 1);
        const double refined_t = detail::golden_section_max(
            agent_payoff, std::max(0.0, best_t - step), std::min(1.0, best_t + step),
            config.refine_tol);
        best = std::max(best, agent_payoff(refined_t));
        violation = std::max(violation, best - base[payoff_index]);
    }
    return violation;
}

struct ExtremumOverP {
    double p_star = 0.0;
    double value = 0.0;
    bool flat = false;      // payoff constant in p
    bool interior = false;  // minimizer strictly inside (0,1)
};

/// Minimize the maximized cooperator payoff over the decoherence parameter
/// at fixed theta: dense grid scan plus golden-section refinement.
inline ExtremumOverP find_extremum_over_p(std::size_t players, ChannelKind kind, double theta,
                                          const SearchConfig& config = {}) {
    config.validate();
    auto value_at = [&](double p) {
        return analytic::max_payoff_closed_form(players, kind, p, theta);
    };
    const std::size_t n = std::max<std::size_t>(config.grid_points, 1001);
    double best_p = 0.0, best_v = value_at(0.0);
    double lo = best_v, hi = best_v;
    for (std::size_t i = 0; i < n; ++i) {
        const double p = double(i) / double(n - 1);
        const double v = value_at(p);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        if (v < best_v - 1e-15) {
            best_v = v;
            best_p = p;
        }
    }
    ExtremumOverP out;
    out.flat = (hi - lo) <= 1e-12;
    if (out.flat) {
        out.p_star = 0.0;
        out.value = best_v;
        return out;
    }
    const double step = 1.0 / double(n - 1);
    const double refined = detail::golden_section_max(
        [&](double p) { return -value_at(p); }, std::max(0.0, best_p - step),
        std::min(1.0, best_p + step), config.refine_tol);
    if (value_at(refined) < best_v) {
        best_p = refined;
        best_v = value_at(refined);
    }
    out.p_star = best_p;
    out.value = best_v;
    out.interior = best_p > step && best_p < 1.0 - step;
    return out;
}

}  // namespace qgame
