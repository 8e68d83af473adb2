#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgame/channels.hpp"
#include "qgame/complex_matrix.hpp"

namespace qgame {

/// Unit-trace Hermitian PSD state of `qubits` qubits.
struct DensityMatrix {
    std::size_t qubits;
    ComplexMatrix matrix;

    std::size_t dim() const { return std::size_t{1} << qubits; }
};

/// Strategy parameters: q for the cooperating pair (A,B), r for the first
/// solo player C, s for the second solo player D in the four-player game.
struct StrategyProfile {
    double q;
    double r;
    std::optional<double> s;

    StrategyProfile(double q_, double r_) : q(q_), r(r_) { validate(); }
    StrategyProfile(double q_, double r_, double s_) : q(q_), r(r_), s(s_) { validate(); }

    std::size_t players() const { return s ? 4 : 3; }

private:
    void validate() const {
        auto in_unit = [](double x) { return x >= 0.0 && x <= 1.0; };
        if (!in_unit(q)) throw std::invalid_argument("StrategyProfile: q must lie in [0,1]");
        if (!in_unit(r)) throw std::invalid_argument("StrategyProfile: r must lie in [0,1]");
        if (s && !in_unit(*s)) throw std::invalid_argument("StrategyProfile: s must lie in [0,1]");
    }
};

using PayoffVector = std::vector<double>;

/// The cooperative game: player count and the per-player payoff weights
/// over computational-basis outcomes. Winner takes one unit from the
/// equally-split stake of the loser, so each basis column sums to zero.
class GameSpec {
public:
    static GameSpec three_player() {
        GameSpec spec;
        spec.players_ = 3;
        spec.weights_ = {
            // A wins with B when C differs; A loses alone on |011>, |100>.
            {0, 1, 1, -2, -2, 1, 1, 0},
            {0, 1, -2, 1, 1, -2, 1, 0},
            {0, -2, 1, 1, 1, 1, -2, 0},
        };
        return spec;
    }

    static GameSpec four_player() {
        GameSpec spec;
        spec.players_ = 4;
        spec.weights_ = {
            {0, 1, 1, 0, 1, 0, 0, -3, -3, 0, 0, 1, 0, 1, 1, 0},
            {0, 1, 1, 0, -3, 0, 0, 1, 1, 0, 0, -3, 0, 1, 1, 0},
            {0, 1, -3, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, -3, 1, 0},
            {0, -3, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, -3, 0},
        };
        return spec;
    }

    static GameSpec for_players(std::size_t players) {
        if (players == 3) return three_player();
        if (players == 4) return four_player();
        throw std::invalid_argument("GameSpec: players must be 3 or 4");
    }

    std::size_t players() const { return players_; }
    std::size_t qubits() const { return players_; }
    std::size_t dim() const { return std::size_t{1} << players_; }

    const std::vector<double>& weights(std::size_t player) const {
        return weights_.at(player);
    }

private:
    GameSpec() = default;
    std::size_t players_ = 0;
    std::vector<std::vector<double>> weights_;
};

/// GHZ-type initial state cos(theta/2)|0..0> + sin(theta/2)|1..1>.
inline DensityMatrix initial_state(std::size_t players, double theta) {
    if (players != 3 && players != 4)
        throw std::invalid_argument("initial_state: players must be 3 or 4");
    if (!(theta >= 0.0 && theta <= std::numbers::pi / 2 + 1e-12))
        throw std::invalid_argument("initial_state: theta must lie in [0, pi/2]");
    const std::size_t dim = std::size_t{1} << players;
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    ComplexMatrix rho(dim, dim);
    rho(0, 0) = c * c;
    rho(0, dim - 1) = c * s;
    rho(dim - 1, 0) = c * s;
    rho(dim - 1, dim - 1) = s * s;
    return DensityMatrix{players, std::move(rho)};
}

/// Joint move of the cooperating pair: sqrt(q) I(x)I + sqrt(1-q) X(x)X.
/// Not unitary in general; the final state is renormalized by trace.
inline ComplexMatrix cooperator_op(double q) {
    if (!(q >= 0.0 && q <= 1.0))
        throw std::invalid_argument("cooperator_op: q must lie in [0,1]");
    return std::sqrt(q) * ComplexMatrix::identity(4) +
           std::sqrt(1 - q) * kron(pauli_x(), pauli_x());
}

/// Single-player move sqrt(x) I + sqrt(1-x) X.
inline ComplexMatrix solo_op(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument("solo_op: parameter must lie in [0,1]");
    return std::sqrt(x) * ComplexMatrix::identity(2) + std::sqrt(1 - x) * pauli_x();
}

inline ComplexMatrix joint_strategy_op(const StrategyProfile& profile) {
    ComplexMatrix op = kron(cooperator_op(profile.q), solo_op(profile.r));
    if (profile.s) op = kron(op, solo_op(*profile.s));
    return op;
}

/// rho' = U rho U^dag / Tr(U rho U^dag) with U the joint strategy operator.
inline DensityMatrix final_state(const DensityMatrix& rho_noisy, const StrategyProfile& profile) {
    const ComplexMatrix op = joint_strategy_op(profile);
    if (op.rows() != rho_noisy.dim())
        throw std::invalid_argument("final_state: state dimension does not match strategy profile");
    ComplexMatrix sandwiched = matmul(matmul(op, rho_noisy.matrix), adjoint(op));
    const double norm = trace(sandwiched).real();
    if (norm <= 1e-15)
        throw std::runtime_error("final_state: degenerate strategy, normalization trace vanishes");
    sandwiched = (1.0 / norm) * sandwiched;
    return DensityMatrix{rho_noisy.qubits, std::move(sandwiched)};
}

/// Per-player weighted sum of the final state's diagonal.
inline PayoffVector payoffs(const DensityMatrix& rho_final, const GameSpec& spec) {
    if (rho_final.dim() != spec.dim())
        throw std::invalid_argument("payoffs: state dimension does not match game");
    const auto diag = diagonal(rho_final.matrix);
    PayoffVector out(spec.players(), 0.0);
    for (std::size_t player = 0; player < spec.players(); ++player) {
        const auto& w = spec.weights(player);
        double sum = 0.0;
        for (std::size_t i = 0; i < diag.size(); ++i) sum += w[i] * diag[i].real();
        out[player] = sum;
    }
    return out;
}

/// Full pipeline: prepare, decohere, apply strategies, read out payoffs.
/// Noise acts on the initial state before the strategy sandwich.
inline PayoffVector play(const GameSpec& spec, const NoiseModel& model, double theta,
                         const StrategyProfile& profile) {
    if (profile.players() != spec.players())
        throw std::invalid_argument("play: strategy profile does not match player count");
    DensityMatrix rho = initial_state(spec.players(), theta);
    rho.matrix = apply_channel(rho.matrix, lift_kraus(model, spec.qubits()));
    return payoffs(final_state(rho, profile), spec);
}

/// Precomputed payoff evaluator for a fixed (game, channel, theta).
///
/// The joint strategy operator is a linear combination of the fixed basis
/// operators P_T = {I,XX} (x) {I,X} ((x) {I,X}), so each payoff is a ratio
/// of quadratic forms in the coefficient vector. Precomputing those forms
/// turns one evaluation into ~100 flops, which makes dense grid searches
/// over (q, r, s) cheap.
class PayoffTable {
public:
    PayoffTable(const GameSpec& spec, const NoiseModel& model, double theta)
        : players_(spec.players()), terms_(spec.players() == 3 ? 4 : 8) {
        DensityMatrix rho = initial_state(players_, theta);
        const ComplexMatrix noisy = apply_channel(rho.matrix, lift_kraus(model, players_));

        std::vector<ComplexMatrix> basis;
        {
            const ComplexMatrix i2 = ComplexMatrix::identity(2);
            const ComplexMatrix x = pauli_x();
            const ComplexMatrix xx = kron(x, x);
            const ComplexMatrix i4 = ComplexMatrix::identity(4);
            for (std::size_t t = 0; t < terms_; ++t) {
                ComplexMatrix m = (t & (terms_ / 2)) ? xx : i4;
                m = kron(m, (t & (terms_ / 4)) ? x : i2);
                if (players_ == 4) m = kron(m, (t & 1) ? x : i2);
                basis.push_back(std::move(m));
            }
        }

        trace_form_.assign(terms_ * terms_, 0.0);
        payoff_forms_.assign(players_, std::vector<double>(terms_ * terms_, 0.0));
        for (std::size_t t = 0; t < terms_; ++t)
            for (std::size_t u = 0; u < terms_; ++u) {
                const ComplexMatrix prod = matmul(matmul(basis[t], noisy), adjoint(basis[u]));
                const auto diag = diagonal(prod);
                double tr = 0.0;
                for (const auto& d : diag) tr += d.real();
                trace_form_[t * terms_ + u] = tr;
                for (std::size_t player = 0; player < players_; ++player) {
                    const auto& w = spec.weights(player);
                    double sum = 0.0;
                    for (std::size_t i = 0; i < diag.size(); ++i) sum += w[i] * diag[i].real();
                    payoff_forms_[player][t * terms_ + u] = sum;
                }
            }
    }

    PayoffVector evaluate(const StrategyProfile& profile) const {
        if (profile.players() != players_)
            throw std::invalid_argument("PayoffTable: strategy profile does not match game");
        std::array<double, 8> coef{};
        coefficients(profile, coef);
        double norm = quad(trace_form_, coef);
        if (norm <= 1e-15)
            throw std::runtime_error("PayoffTable: degenerate strategy, normalization trace vanishes");
        PayoffVector out(players_);
        for (std::size_t player = 0; player < players_; ++player)
            out[player] = quad(payoff_forms_[player], coef) / norm;
        return out;
    }

    double cooperator_payoff(const StrategyProfile& profile) const {
        return evaluate(profile)[0];
    }

    std::size_t players() const { return players_; }

private:
    void coefficients(const StrategyProfile& profile, std::array<double, 8>& coef) const {
        const double aq = std::sqrt(profile.q), bq = std::sqrt(1 - profile.q);
        const double ar = std::sqrt(profile.r), br = std::sqrt(1 - profile.r);
        if (players_ == 3) {
            coef = {aq * ar, aq * br, bq * ar, bq * br, 0, 0, 0, 0};
        } else {
            const double as = std::sqrt(*profile.s), bs = std::sqrt(1 - *profile.s);
            coef = {aq * ar * as, aq * ar * bs, aq * br * as, aq * br * bs,
                    bq * ar * as, bq * ar * bs, bq * br * as, bq * br * bs};
        }
    }

    double quad(const std::vector<double>& form, const std::array<double, 8>& coef) const {
        double sum = 0.0;
        for (std::size_t t = 0; t < terms_; ++t) {
            if (coef[t] == 0.0) continue;
            double row = 0.0;
            for (std::size_t u = 0; u < terms_; ++u) row += form[t * terms_ + u] * coef[u];
            sum += coef[t] * row;
        }
        return sum;
    }

    std::size_t players_;
    std::size_t terms_;
    std::vector<double> trace_form_;
    std::vector<std::vector<double>> payoff_forms_;
};

}  // namespace qgame
