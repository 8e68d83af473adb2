#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgame/complex_matrix.hpp"

namespace qgame {

enum class ChannelKind { AmplitudeDamping, PhaseDamping, Depolarizing };

inline std::string to_string(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::AmplitudeDamping: return "ad";
        case ChannelKind::PhaseDamping: return "pd";
        case ChannelKind::Depolarizing: return "dp";
    }
    throw std::logic_error("unknown channel kind");
}

/// A single-qubit decoherence channel: kind plus decoherence parameter
/// p in [0,1] (p=0 undecohered, p=1 fully decohered).
struct NoiseModel {
    ChannelKind kind;
    double p;

    NoiseModel(ChannelKind k, double prob) : kind(k), p(prob) {
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("NoiseModel: p must lie in [0,1], got " + std::to_string(prob));
    }
};

/// Kraus operators of a channel on `qubits` qubits. All operators share the
/// dimension 2^qubits and resolve the identity: sum_k E_k^dag E_k = I.
struct KrausSet {
    std::size_t qubits;
    std::vector<ComplexMatrix> operators;

    std::size_t dim() const { return std::size_t{1} << qubits; }
};

/// Kraus operators for one qubit. AD and PD have two operators, DP has four
/// (uniform Pauli errors with weight p/3 each).
inline KrausSet single_qubit_kraus(const NoiseModel& model) {
    const double p = model.p;
    KrausSet set{1, {}};
    switch (model.kind) {
        case ChannelKind::AmplitudeDamping:
            set.operators.push_back(ComplexMatrix(2, 2, {1, 0, 0, std::sqrt(1 - p)}));
            set.operators.push_back(ComplexMatrix(2, 2, {0, std::sqrt(p), 0, 0}));
            break;
        case ChannelKind::PhaseDamping:
            set.operators.push_back(ComplexMatrix(2, 2, {1, 0, 0, std::sqrt(1 - p)}));
            set.operators.push_back(ComplexMatrix(2, 2, {0, 0, 0, std::sqrt(p)}));
            break;
        case ChannelKind::Depolarizing:
            set.operators.push_back(std::sqrt(1 - p) * ComplexMatrix::identity(2));
            set.operators.push_back(std::sqrt(p / 3) * pauli_x());
            set.operators.push_back(std::sqrt(p / 3) * pauli_y());
            set.operators.push_back(std::sqrt(p / 3) * pauli_z());
            break;
    }
    return set;
}

/// All m^n Kronecker products of the m single-qubit operators, one factor
/// per qubit. Enumeration is lexicographic over per-qubit operator indices
/// with the leftmost factor (qubit of player A) most significant.
inline KrausSet lift_kraus(const NoiseModel& model, std::size_t n) {
    if (n == 0) throw std::invalid_argument("lift_kraus: need at least one qubit");
    const KrausSet single = single_qubit_kraus(model);
    std::vector<ComplexMatrix> current = single.operators;
    for (std::size_t q = 1; q < n; ++q) {
        std::vector<ComplexMatrix> next;
        next.reserve(current.size() * single.operators.size());
        for (const auto& left : current)
            for (const auto& right : single.operators)
                next.push_back(kron(left, right));
        current = std::move(next);
    }
    return KrausSet{n, std::move(current)};
}

/// Max entrywise deviation of sum_k E_k^dag E_k from the identity.
inline double check_completeness(const KrausSet& kraus) {
    if (kraus.operators.empty())
        throw std::invalid_argument("check_completeness: empty Kraus set");
    ComplexMatrix sum(kraus.dim(), kraus.dim());
    for (const auto& op : kraus.operators)
        sum = sum + matmul(adjoint(op), op);
    return max_abs_diff(sum, ComplexMatrix::identity(kraus.dim()));
}

/// rho -> sum_k E_k rho E_k^dag.
inline ComplexMatrix apply_channel(const ComplexMatrix& rho, const KrausSet& kraus) {
    if (rho.rows() != kraus.dim() || rho.cols() != kraus.dim())
        throw std::invalid_argument("apply_channel: state dimension does not match Kraus set");
    ComplexMatrix out(rho.rows(), rho.cols());
    for (const auto& op : kraus.operators)
        out = out + matmul(matmul(op, rho), adjoint(op));
    return out;
}

}  // namespace qgame
