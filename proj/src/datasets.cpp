// Copyright 2026 The srmkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "srmkit/datasets.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>

#include <json.hpp>

#include "srmkit/analysis.hpp"
#include "srmkit/constellations.hpp"
#include "srmkit/error.hpp"
#include "srmkit/gus.hpp"
#include "srmkit/srm.hpp"

namespace srmkit {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = s.find(sep, pos);
        out.push_back(trim(s.substr(pos, next - pos)));
        if (next == std::string_view::npos) {
            return out;
        }
        pos = next + 1;
    }
}

double parse_double(std::string_view text, const char *what) {
    const std::string buf(trim(text));
    char *end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (buf.empty() || end != buf.c_str() + buf.size() || !std::isfinite(v)) {
        throw Error(ErrorKind::InvalidArgument, std::string(what) + ": cannot parse '" + buf + "'");
    }
    return v;
}

std::size_t parse_count(std::string_view text, const char *what) {
    text = trim(text);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw Error(ErrorKind::InvalidArgument, std::string(what) + ": cannot parse '" + std::string(text) + "'");
    }
    return v;
}

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

double clamp_info(double v, std::size_t states) {
    return std::clamp(v, 0.0, std::log2(static_cast<double>(states)));
}

void cross_check(double closed, double pipeline, double tol, const std::string &what) {
    if (std::abs(closed - pipeline) > tol) {
        char buf[96];
        std::snprintf(buf, sizeof buf, ": closed form %.15g vs pipeline %.15g", closed, pipeline);
        throw Error(ErrorKind::CrossCheckMismatch, what + buf);
    }
}

std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string cell_text(const Cell &cell) {
    struct Visitor {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(double v) const { return format_number(v); }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(const std::string &v) const { return csv_escape(v); }
    };
    return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json cell_json(const Cell &cell) {
    struct Visitor {
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        nlohmann::ordered_json operator()(double v) const { return std::strtod(format_number(v).c_str(), nullptr); }
        nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
        nlohmann::ordered_json operator()(const std::string &v) const { return v; }
    };
    return std::visit(Visitor{}, cell);
}

Cell as_cell(std::size_t v) { return static_cast<std::int64_t>(v); }

} // namespace

PhotonGrid PhotonGrid::parse(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
        throw Error(ErrorKind::InvalidArgument, "grid must be start:stop:count");
    }
    PhotonGrid g{parse_double(parts[0], "grid start"), parse_double(parts[1], "grid stop"),
                 parse_count(parts[2], "grid count")};
    if (g.start < 0.0 || g.stop < g.start) {
        throw Error(ErrorKind::InvalidArgument, "grid needs 0 <= start <= stop");
    }
    if (g.count == 0) {
        throw Error(ErrorKind::InvalidArgument, "grid count must be at least 1");
    }
    return g;
}

std::vector<double> PhotonGrid::values() const {
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = count == 1 ? start : start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    if (count > 1) {
        out.back() = stop;
    }
    return out;
}

std::string format_number(double value) {
    if (value == 0.0) {
        return "0"; // no "-0"
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string to_csv(const Dataset &data) {
    std::string out;
    for (std::size_t c = 0; c < data.columns.size(); ++c) {
        out += (c ? "," : "") + csv_escape(data.columns[c]);
    }
    out += '\n';
    for (const auto &row : data.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) {
                out += ',';
            }
            out += cell_text(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Dataset &data) {
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto &row : data.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) {
            obj[data.columns[c]] = cell_json(row[c]);
        }
        records.push_back(std::move(obj));
    }
    return records.dump(1) + "\n";
}

std::vector<double> parse_angle_list(std::string_view text) {
    std::vector<double> out;
    for (std::string_view tok : split(text, ',')) {
        if (tok.empty()) {
            throw Error(ErrorKind::InvalidArgument, "empty entry in angle list");
        }
        const std::size_t pi_pos = tok.find("pi");
        if (pi_pos == std::string_view::npos) {
            out.push_back(parse_double(tok, "angle"));
            continue;
        }
        std::string_view coeff = trim(tok.substr(0, pi_pos));
        if (!coeff.empty() && coeff.back() == '*') {
            coeff.remove_suffix(1);
        }
        double v = std::numbers::pi * (coeff.empty() ? 1.0 : parse_double(coeff, "angle coefficient"));
        std::string_view rest = trim(tok.substr(pi_pos + 2));
        if (!rest.empty()) {
            if (rest.front() != '/') {
                throw Error(ErrorKind::InvalidArgument, "malformed angle '" + std::string(tok) + "'");
            }
            const double den = parse_double(rest.substr(1), "angle divisor");
            if (den == 0.0) {
                throw Error(ErrorKind::InvalidArgument, "zero divisor in angle '" + std::string(tok) + "'");
            }
            v /= den;
        }
        out.push_back(v);
    }
    return out;
}

std::vector<std::size_t> parse_size_list(std::string_view text) {
    std::vector<std::size_t> out;
    for (std::string_view tok : split(text, ',')) {
        out.push_back(parse_count(tok, "integer list"));
    }
    return out;
}

std::vector<double> default_fig1_deltas() {
    constexpr double pi = std::numbers::pi;
    return {0.0, pi / 8.0, pi / 4.0, 3.0 * pi / 8.0, pi / 2.0};
}

Dataset fig1_dataset(const PhotonGrid &grid, const std::vector<double> &deltas, const Tolerances &tol) {
    Dataset out{{"alpha_sq", "delta", "pc", "pe", "degenerate"}, {}};
    for (double delta : deltas) {
        for (double a2 : grid.values()) {
            const double alpha = std::sqrt(a2);
            FlaggedValue pc = pc_double_bpsk_equal_amp(alpha, delta);
            if (!pc.degenerate) {
                try {
                    const auto fast = fast_srm(make_double_bpsk(alpha, alpha * std::polar(1.0, delta), 0.25), tol);
                    cross_check(pc.value, fast.result.pc, tol.recon, "double BPSK Pc");
                } catch (const Error &e) {
                    if (e.kind() != ErrorKind::GramSingular) {
                        throw;
                    }
                    pc.degenerate = true;
                }
            }
            const double v = clamp_unit(pc.value);
            out.rows.push_back({a2, delta, v, 1.0 - v, std::int64_t{pc.degenerate ? 1 : 0}});
        }
    }
    return out;
}

Dataset pam4_dataset(const PhotonGrid &grid, const Tolerances &tol) {
    Dataset out{{"alpha_sq", "p_star", "pc", "pe", "status"}, {}};
    for (double a2 : grid.values()) {
        const double alpha = std::sqrt(a2);
        try {
            const PriorOptimum opt = optimize_prior_4pam(alpha, {}, tol);
            const auto fast = fast_srm(make_double_bpsk(alpha, 3.0 * alpha, opt.p_star), tol);
            const double v = clamp_unit(fast.result.pc);
            out.rows.push_back({a2, opt.p_star, v, 1.0 - v, std::string(opt.certificate.optimal ? "ok" : "uncertified")});
        } catch (const Error &e) {
            std::string status;
            switch (e.kind()) {
            case ErrorKind::NoRoot:
                status = "no_root";
                break;
            case ErrorKind::GramSingular:
            case ErrorKind::DomainError:
                status = "singular";
                break;
            default:
                throw;
            }
            out.rows.push_back({a2, std::monostate{}, std::monostate{}, std::monostate{}, status});
        }
    }
    return out;
}

Dataset ppm_dataset(const PhotonGrid &grid, const std::vector<std::size_t> &ms, const Tolerances &tol) {
    Dataset out{{"alpha_sq", "m", "scheme", "pe", "mutual_info_bits"}, {}};
    for (std::size_t m : ms) {
        for (int scheme = 0; scheme < 2; ++scheme) {
            const bool dbl = scheme == 1;
            for (double a2 : grid.values()) {
                const double alpha = std::sqrt(a2);
                const double pc = dbl ? double_ppm_closed_form(m, alpha).pc : ppm_closed_form(m, alpha).pc;
                const double info = dbl ? mutual_info_double_ppm(m, alpha) : mutual_info_ppm(m, alpha);
                if (alpha > 0.0) {
                    try {
                        const auto fast = fast_srm(dbl ? make_double_ppm(m, alpha) : make_ppm_ensemble(m, alpha), tol);
                        cross_check(pc, fast.result.pc, tol.recon, "PPM Pc");
                        cross_check(info, channel_stats(fast.result).mutual_info_bits, tol.recon, "PPM mutual information");
                    } catch (const Error &e) {
                        if (e.kind() != ErrorKind::GramSingular) {
                            throw;
                        }
                    }
                }
                out.rows.push_back({a2, as_cell(m), std::string(dbl ? "double_ppm" : "ppm"), 1.0 - clamp_unit(pc),
                                    clamp_info(info, dbl ? 2 * m : m)});
            }
        }
    }
    return out;
}

SweepScheme parse_scheme(std::string_view name) {
    if (name == "psk") return SweepScheme::Psk;
    if (name == "ppm") return SweepScheme::Ppm;
    if (name == "double_ppm") return SweepScheme::DoublePpm;
    if (name == "double_bpsk") return SweepScheme::DoubleBpsk;
    if (name == "pam4") return SweepScheme::Pam4;
    throw Error(ErrorKind::InvalidArgument, "unknown scheme '" + std::string(name) + "'");
}

std::string_view to_string(SweepScheme scheme) noexcept {
    switch (scheme) {
    case SweepScheme::Psk:
        return "psk";
    case SweepScheme::Ppm:
        return "ppm";
    case SweepScheme::DoublePpm:
        return "double_ppm";
    case SweepScheme::DoubleBpsk:
        return "double_bpsk";
    case SweepScheme::Pam4:
        return "pam4";
    }
    return "unknown";
}

Dataset sweep_dataset(const SweepConfig &config, const Tolerances &tol) {
    Dataset out{{"scheme", "m", "delta", "p", "alpha_sq", "pc", "pe", "mutual_info_bits", "srm_optimal", "status"}, {}};
    const std::string name(to_string(config.scheme));

    struct Variant {
        std::size_t m = 0;
        Cell delta;
    };
    std::vector<Variant> variants;
    switch (config.scheme) {
    case SweepScheme::Psk:
    case SweepScheme::Ppm:
    case SweepScheme::DoublePpm:
        for (std::size_t m : config.ms) {
            variants.push_back({m, std::monostate{}});
        }
        break;
    case SweepScheme::DoubleBpsk:
        for (double d : config.deltas) {
            variants.push_back({2, d});
        }
        break;
    case SweepScheme::Pam4:
        variants.push_back({2, std::monostate{}});
        break;
    }
    const std::size_t min_m = config.scheme == SweepScheme::Psk ? 1 : 2;
    for (const Variant &var : variants) {
        if (var.m < min_m) {
            throw Error(ErrorKind::InvalidArgument, name + " needs m >= " + std::to_string(min_m));
        }
    }
    if (config.prior && !(*config.prior > 0.0 && *config.prior < 0.5)) {
        throw Error(ErrorKind::InvalidPrior, "prior p must lie in (0, 1/2)");
    }

    for (const Variant &var : variants) {
        for (double a2 : config.grid.values()) {
            const double alpha = std::sqrt(a2);
            Cell prior = std::monostate{};
            std::vector<Cell> row{name, as_cell(var.m), var.delta, prior, a2};
            try {
                std::optional<GusEnsemble> ens;
                switch (config.scheme) {
                case SweepScheme::Psk:
                    ens = make_psk(var.m, alpha);
                    break;
                case SweepScheme::Ppm:
                    ens = make_ppm_ensemble(var.m, alpha);
                    break;
                case SweepScheme::DoublePpm:
                    ens = make_double_ppm(var.m, alpha);
                    break;
                case SweepScheme::DoubleBpsk: {
                    const double p = config.prior.value_or(0.25);
                    row[3] = p;
                    ens = make_double_bpsk(alpha, alpha * std::polar(1.0, std::get<double>(var.delta)), p);
                    break;
                }
                case SweepScheme::Pam4: {
                    const double p = config.prior ? *config.prior : optimize_prior_4pam(alpha, {}, tol).p_star;
                    row[3] = p;
                    ens = make_double_bpsk(alpha, 3.0 * alpha, p);
                    break;
                }
                }
                const auto fast = fast_srm(*ens, tol);
                const ChannelStats stats = channel_stats(fast.result);
                const OptimalityVerdict verdict = verify_optimality_oracle(ens->gram(), fast.result.factor, tol);
                const double pc = clamp_unit(fast.result.pc);
                row.insert(row.end(), {pc, 1.0 - pc, clamp_info(stats.mutual_info_bits, ens->base().size()),
                                       std::int64_t{verdict.optimal ? 1 : 0}, std::string("ok")});
            } catch (const Error &e) {
                std::string status;
                switch (e.kind()) {
                case ErrorKind::GramSingular:
                case ErrorKind::DomainError:
                    status = "singular";
                    break;
                case ErrorKind::NoRoot:
                    status = "no_root";
                    break;
                default:
                    throw;
                }
                row.insert(row.end(), {std::monostate{}, std::monostate{}, std::monostate{}, std::monostate{}, status});
            }
            out.rows.push_back(std::move(row));
        }
    }
    return out;
}

} // namespace srmkit
