#pragma once

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgame/game.hpp"

#include <json.hpp>

namespace qgame {

enum class OutputFormat { Csv, Json };

struct GridAxis {
    double min = 0.0;
    double max = 1.0;
    std::size_t count = 2;

    void validate(const char* name, double lo, double hi) const {
        if (count < 1) throw std::invalid_argument(std::string(name) + ": count must be >= 1");
        if (count >= 2 && !(min < max))
            throw std::invalid_argument(std::string(name) + ": min must be < max");
        if (!(min >= lo && max <= hi))
            throw std::invalid_argument(std::string(name) + ": range outside parameter domain");
    }

    double at(std::size_t i) const {
        return count == 1 ? min : min + (max - min) * double(i) / double(count - 1);
    }
};

/// A (p, theta) payoff-surface sweep at fixed strategy parameters.
/// kinds holds one channel or all three (the "all" request).
struct SweepRequest {
    std::size_t players = 3;
    std::vector<ChannelKind> kinds = {ChannelKind::AmplitudeDamping};
    double q = 0.5;
    double r = 0.5;
    std::optional<double> s;
    GridAxis p_grid{0.0, 1.0, 2};
    GridAxis theta_grid{0.0, 1.5707963267948966, 2};
    OutputFormat format = OutputFormat::Csv;

    void validate() const {
        if (players != 3 && players != 4)
            throw std::invalid_argument("players must be 3 or 4");
        if (kinds.empty()) throw std::invalid_argument("channel list must be non-empty");
        if (players == 4 && !s) throw std::invalid_argument("s is required for the four-player game");
        if (players == 3 && s) throw std::invalid_argument("s is only valid for the four-player game");
        p_grid.validate("p_grid", 0.0, 1.0);
        theta_grid.validate("theta_grid", 0.0, 1.5707963267948966 + 1e-12);
    }
};

struct SweepRow {
    std::size_t players;
    ChannelKind channel;
    double p;
    double theta;
    double q;
    double r;
    std::optional<double> s;
    PayoffVector payoffs;
};

namespace detail {

inline std::string fmt12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace detail

/// Evaluate the sweep in deterministic grid order: p outer, theta inner,
/// channels in request order per grid point. Every row is re-checked for
/// the zero-sum property before being returned.
inline std::vector<SweepRow> run_sweep(const SweepRequest& request) {
    request.validate();
    const GameSpec spec = GameSpec::for_players(request.players);
    const StrategyProfile profile =
        request.s ? StrategyProfile(request.q, request.r, *request.s)
                  : StrategyProfile(request.q, request.r);
    std::vector<SweepRow> rows;
    rows.reserve(request.p_grid.count * request.theta_grid.count * request.kinds.size());
    for (std::size_t pi = 0; pi < request.p_grid.count; ++pi) {
        const double p = request.p_grid.at(pi);
        for (std::size_t ti = 0; ti < request.theta_grid.count; ++ti) {
            const double theta = request.theta_grid.at(ti);
            for (ChannelKind kind : request.kinds) {
                PayoffVector pay = play(spec, NoiseModel(kind, p), theta, profile);
                double sum = 0.0;
                for (double v : pay) sum += v;
                if (std::abs(sum) > 1e-12)
                    throw std::runtime_error("sweep row violates the zero-sum invariant");
                rows.push_back({request.players, kind, p, theta, request.q, request.r, request.s,
                                std::move(pay)});
            }
        }
    }
    return rows;
}

inline constexpr const char* kCsvHeader = "players,channel,p,theta,q,r,s,P_A,P_B,P_C,P_D";

inline std::string to_csv(const std::vector<SweepRow>& rows) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& row : rows) {
        out += std::to_string(row.players);
        out += ',';
        out += to_string(row.channel);
        out += ',';
        out += detail::fmt12(row.p);
        out += ',';
        out += detail::fmt12(row.theta);
        out += ',';
        out += detail::fmt12(row.q);
        out += ',';
        out += detail::fmt12(row.r);
        out += ',';
        if (row.s) out += detail::fmt12(*row.s);
        for (std::size_t i = 0; i < 4; ++i) {
            out += ',';
            if (i < row.payoffs.size()) out += detail::fmt12(row.payoffs[i]);
        }
        out += '\n';
    }
    return out;
}

inline std::string to_json(const std::vector<SweepRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    static const char* player_names[] = {"P_A", "P_B", "P_C", "P_D"};
    for (const auto& row : rows) {
        nlohmann::json obj = {
            {"players", row.players}, {"channel", to_string(row.channel)},
            {"p", row.p},             {"theta", row.theta},
            {"q", row.q},             {"r", row.r},
        };
        if (row.s) obj["s"] = *row.s;
        for (std::size_t i = 0; i < row.payoffs.size(); ++i)
            obj[player_names[i]] = row.payoffs[i];
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

inline std::vector<SweepRow> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw std::runtime_error("parse_csv: unexpected header");
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        while (fields.size() < 11) fields.emplace_back();
        SweepRow row;
        row.players = std::stoul(fields[0]);
        if (fields[1] == "ad") row.channel = ChannelKind::AmplitudeDamping;
        else if (fields[1] == "pd") row.channel = ChannelKind::PhaseDamping;
        else if (fields[1] == "dp") row.channel = ChannelKind::Depolarizing;
        else throw std::runtime_error("parse_csv: unknown channel " + fields[1]);
        row.p = std::stod(fields[2]);
        row.theta = std::stod(fields[3]);
        row.q = std::stod(fields[4]);
        row.r = std::stod(fields[5]);
        if (!fields[6].empty()) row.s = std::stod(fields[6]);
        for (std::size_t i = 7; i < 11; ++i)
            if (!fields[i].empty()) row.payoffs.push_back(std::stod(fields[i]));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline void write_sweep(const std::vector<SweepRow>& rows, OutputFormat format,
                        const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output path: " + path);
    out << (format == OutputFormat::Csv ? to_csv(rows) : to_json(rows));
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace qgame
