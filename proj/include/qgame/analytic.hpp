#pragma once

#include <cmath>
#include <stdexcept>

#include "qgame/channels.hpp"

namespace qgame {
namespace analytic {

enum class PlayerRole { Cooperator, SoloC, SoloD };

/// One closed-form payoff lookup: which game, channel and player, at which
/// channel/entanglement/strategy parameters. s participates only in the
/// four-player game and SoloD only exists there.
struct AnalyticQuery {
    std::size_t players;
    ChannelKind kind;
    PlayerRole player;
    double p;
    double theta;
    double q;
    double r;
    double s = 0.0;
};

namespace detail {

inline void check_unit(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument(std::string(name) + " must lie in [0,1]");
}

inline void check_domain(const AnalyticQuery& query) {
    if (query.players != 3 && query.players != 4)
        throw std::invalid_argument("players must be 3 or 4");
    if (query.players == 3 && query.player == PlayerRole::SoloD)
        throw std::invalid_argument("player D exists only in the four-player game");
    check_unit(query.p, "p");
    check_unit(query.q, "q");
    check_unit(query.r, "r");
    if (query.players == 4) check_unit(query.s, "s");
    if (!(query.theta >= 0.0 && query.theta <= 1.5707963267948966 + 1e-12))
        throw std::invalid_argument("theta must lie in [0, pi/2]");
}

// 1 - 2p(1-p)(1-cos theta): the population-mixing factor common to the
// amplitude damping formulas.
inline double damping_factor(double p, double theta) {
    return 1.0 - 2.0 * p * (1.0 - p) * (1.0 - std::cos(theta));
}

inline double three_player_cooperator(const AnalyticQuery& qu) {
    const double sn = std::sin(qu.theta);
    const double poly = qu.q + qu.r - 2.0 * qu.q * qu.r;
    switch (qu.kind) {
        case ChannelKind::AmplitudeDamping: {
            const double root = std::sqrt(qu.q * qu.r * (1 - qu.p) * (1 - qu.q) * (1 - qu.r));
            return (poly * damping_factor(qu.p, qu.theta) + 2.0 * (1 - qu.p) * root * sn) /
                   (1.0 + 4.0 * (1 - qu.p) * root * sn);
        }
        case ChannelKind::PhaseDamping: {
            const double root = std::sqrt(qu.q * qu.r * (1 - qu.p) * (1 - qu.q) * (1 - qu.r));
            return (poly + 2.0 * (1 - qu.p) * root * sn) / (1.0 + 4.0 * (1 - qu.p) * root * sn);
        }
        case ChannelKind::Depolarizing: {
            const double f = 3.0 - 4.0 * qu.p;
            const double root = std::sqrt(qu.q * qu.r * (1 - qu.q) * (1 - qu.r));
            return f * f * (3.0 * poly + 2.0 * f * root * sn) /
                   (27.0 + 4.0 * f * f * f * root * sn);
        }
    }
    throw std::logic_error("unknown channel kind");
}

struct FourPlayerPayoffs {
    double cooperator;
    double solo_c;
    double solo_d;
};

inline FourPlayerPayoffs four_player(const AnalyticQuery& qu) {
    const double sn = std::sin(qu.theta);
    const double q = qu.q, r = qu.r, s = qu.s, p = qu.p;
    const double root = std::sqrt(q * r * s * (1 - q) * (1 - r) * (1 - s));
    const double coop_poly = r + s - 2.0 * r * s;
    const double c_poly = s - 4.0 * q * s - 3.0 * r + 4.0 * q * r + 2.0 * r * s;
    const double d_poly = r - 4.0 * q * r - 3.0 * s + 4.0 * q * s + 2.0 * r * s;
    switch (qu.kind) {
        case ChannelKind::AmplitudeDamping: {
            const double k = damping_factor(p, qu.theta);
            const double g = 4.0 * (1 - p) * (1 - p) * root * sn;
            const double den = 1.0 + 2.0 * g;
            return {(coop_poly * k + g) / den, (c_poly * k - g) / den, (d_poly * k - g) / den};
        }
        case ChannelKind::PhaseDamping: {
            const double g = 4.0 * (1 - p) * (1 - p) * root * sn;
            const double den = 1.0 + 2.0 * g;
            return {(coop_poly + g) / den, (c_poly - g) / den, (d_poly - g) / den};
        }
        case ChannelKind::Depolarizing: {
            const double f = 3.0 - 4.0 * p;
            const double g = 4.0 * f * f * root * sn;
            const double den = 81.0 + 2.0 * f * f * g;
            return {f * f * (9.0 * coop_poly + g) / den, f * f * (9.0 * c_poly - g) / den,
                    f * f * (9.0 * d_poly - g) / den};
        }
    }
    throw std::logic_error("unknown channel kind");
}

}  // namespace detail

/// Closed-form payoff of the queried player. Three-player solo payoffs are
/// minus twice the cooperator payoff (the zero-sum identity holds for all
/// three channels).
inline double payoff_closed_form(const AnalyticQuery& query) {
    detail::check_domain(query);
    if (query.players == 3) {
        const double coop = detail::three_player_cooperator(query);
        return query.player == PlayerRole::Cooperator ? coop : -2.0 * coop;
    }
    const auto all = detail::four_player(query);
    switch (query.player) {
        case PlayerRole::Cooperator: return all.cooperator;
        case PlayerRole::SoloC: return all.solo_c;
        case PlayerRole::SoloD: return all.solo_d;
    }
    throw std::logic_error("unknown player role");
}

/// Maximized cooperator payoff at the equilibrium point q=r(=s)=1/2.
inline double max_payoff_closed_form(std::size_t players, ChannelKind kind, double p,
                                     double theta) {
    detail::check_unit(p, "p");
    if (!(theta >= 0.0 && theta <= 1.5707963267948966 + 1e-12))
        throw std::invalid_argument("theta must lie in [0, pi/2]");
    const double sn = std::sin(theta);
    if (players == 3) {
        switch (kind) {
            case ChannelKind::AmplitudeDamping: {
                const double h = std::pow(1 - p, 1.5) * sn;
                return (detail::damping_factor(p, theta) + h) / (2.0 * (1.0 + h));
            }
            case ChannelKind::PhaseDamping:
                return 0.5;
            case ChannelKind::Depolarizing: {
                const double f = 3.0 - 4.0 * p;
                return f * f * (3.0 + f * sn) / (54.0 + 2.0 * f * f * f * sn);
            }
        }
        throw std::logic_error("unknown channel kind");
    }
    if (players == 4) {
        switch (kind) {
            case ChannelKind::AmplitudeDamping: {
                const double h = (1 - p) * (1 - p) * sn;
                return (detail::damping_factor(p, theta) + h) / (2.0 * (1.0 + h));
            }
            case ChannelKind::PhaseDamping:
                return 0.5;
            case ChannelKind::Depolarizing: {
                const double f = 3.0 - 4.0 * p;
                // Eq. 24 family evaluated at q=r=s=1/2.
                return f * f * (4.5 + 0.5 * f * f * sn) / (81.0 + f * f * f * f * sn);
            }
        }
        throw std::logic_error("unknown channel kind");
    }
    throw std::invalid_argument("players must be 3 or 4");
}

}  // namespace analytic
}  // namespace qgame
