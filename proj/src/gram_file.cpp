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

#include "srmkit/gram_file.hpp"

#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "srmkit/datasets.hpp"
#include "srmkit/error.hpp"

namespace srmkit {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string &msg) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

double to_double(const std::string &tok, std::size_t line) {
    char *end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (tok.empty() || end != tok.c_str() + tok.size() || !std::isfinite(v)) {
        fail(line, "expected a number, got '" + tok + "'");
    }
    return v;
}

std::size_t to_index(const std::string &tok, std::size_t line) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
        fail(line, "expected a non-negative integer, got '" + tok + "'");
    }
    return static_cast<std::size_t>(std::stoull(tok));
}

std::vector<std::string> tokens(const std::string &line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string t; ss >> t;) {
        out.push_back(t);
    }
    return out;
}

std::string verdict_text(const OptimalityVerdict &v) {
    std::string out = std::string(to_string(v.method)) + " optimal=" + (v.optimal ? "true" : "false");
    if (v.boundary) {
        out += " boundary=true";
    }
    if (!v.witness.empty()) {
        out += " witness=\"" + v.witness + "\"";
    }
    return out;
}

nlohmann::ordered_json verdict_json(const OptimalityVerdict &v) {
    nlohmann::ordered_json j;
    j["method"] = std::string(to_string(v.method));
    j["optimal"] = v.optimal;
    j["boundary"] = v.boundary;
    j["witness"] = v.witness;
    return j;
}

double rounded(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

} // namespace

GramFile parse_gram_file(std::istream &in) {
    std::optional<std::size_t> n;
    std::optional<std::vector<double>> priors;
    std::optional<IndexBlocks> blocks;
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, Complex>> inners;
    std::set<std::pair<std::size_t, std::size_t>> seen;

    std::string raw;
    for (std::size_t line_no = 1; std::getline(in, raw); ++line_no) {
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        const auto tok = tokens(raw);
        if (tok.empty()) {
            continue;
        }
        const std::string &key = tok[0];
        if (key != "n" && !n) {
            fail(line_no, "the first statement must be 'n <count>'");
        }
        if (key == "n") {
            if (n) {
                fail(line_no, "duplicate 'n'");
            }
            if (tok.size() != 2) {
                fail(line_no, "expected 'n <count>'");
            }
            n = to_index(tok[1], line_no);
            if (*n == 0) {
                fail(line_no, "n must be positive");
            }
        } else if (key == "priors") {
            if (priors) {
                fail(line_no, "duplicate 'priors'");
            }
            if (tok.size() != *n + 1) {
                fail(line_no, "expected " + std::to_string(*n) + " priors");
            }
            std::vector<double> q;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                q.push_back(to_double(tok[i], line_no));
            }
            priors = std::move(q);
        } else if (key == "inner") {
            if (tok.size() != 5) {
                fail(line_no, "expected 'inner i j re im'");
            }
            const std::size_t i = to_index(tok[1], line_no);
            const std::size_t j = to_index(tok[2], line_no);
            if (!(i < j) || j >= *n) {
                fail(line_no, "inner needs 0 <= i < j < n");
            }
            if (!seen.insert({i, j}).second) {
                fail(line_no, "duplicate inner product for pair (" + tok[1] + "," + tok[2] + ")");
            }
            inners.push_back({{i, j}, Complex(to_double(tok[3], line_no), to_double(tok[4], line_no))});
        } else if (key == "blocks") {
            if (blocks) {
                fail(line_no, "duplicate 'blocks'");
            }
            if (tok.size() < 2) {
                fail(line_no, "expected at least one index set");
            }
            IndexBlocks b;
            for (std::size_t t = 1; t < tok.size(); ++t) {
                std::vector<std::size_t> set;
                std::istringstream ss(tok[t]);
                for (std::string idx; std::getline(ss, idx, ',');) {
                    const std::size_t v = to_index(idx, line_no);
                    if (v >= *n) {
                        fail(line_no, "block index " + idx + " out of range");
                    }
                    set.push_back(v);
                }
                b.push_back(std::move(set));
            }
            blocks = std::move(b);
        } else {
            fail(line_no, "unknown statement '" + key + "'");
        }
    }
    if (!n) {
        throw Error(ErrorKind::ParseError, "missing 'n <count>'");
    }
    if (!priors) {
        throw Error(ErrorKind::ParseError, "missing 'priors'");
    }

    const auto dim = static_cast<Eigen::Index>(*n);
    ComplexMatrix overlaps = ComplexMatrix::Identity(dim, dim);
    for (const auto &[ij, v] : inners) {
        overlaps(static_cast<Eigen::Index>(ij.first), static_cast<Eigen::Index>(ij.second)) = v;
        overlaps(static_cast<Eigen::Index>(ij.second), static_cast<Eigen::Index>(ij.first)) = std::conj(v);
    }
    return {Constellation(std::move(*priors), overlaps), std::move(blocks)};
}

GramFile parse_gram_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_gram_file(in);
}

CheckReport run_check(const GramFile &file, const Tolerances &tol) {
    CheckReport r;
    r.gram = weighted_gram(file.constellation);
    r.srm = srm(r.gram, tol);
    r.stats = channel_stats(r.srm);
    if (file.blocks) {
        r.block_verdict = check_block_sqrt_diagonal(r.gram, *file.blocks, tol);
    }
    try {
        r.factor_verdict = check_factor_conditions(r.srm.factor, tol);
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::SingularFactor) {
            throw;
        }
        r.factor_verdict.method = OptimalityMethod::FactorConditions;
        r.factor_verdict.witness = e.what();
    }
    r.oracle_verdict = verify_optimality_oracle(r.gram, r.srm.factor, tol);
    return r;
}

std::string format_check_text(const CheckReport &report) {
    std::string out;
    out += "states " + std::to_string(report.srm.per_state_correct.size()) + "\n";
    out += "pc " + format_number(report.srm.pc) + "\n";
    out += "per_state_correct";
    for (double p : report.srm.per_state_correct) {
        out += " " + format_number(p);
    }
    out += "\nmutual_info_bits " + format_number(report.stats.mutual_info_bits) + "\n";
    if (report.block_verdict) {
        out += verdict_text(*report.block_verdict) + "\n";
    }
    out += verdict_text(report.factor_verdict) + "\n";
    out += verdict_text(report.oracle_verdict) + "\n";
    out += std::string("srm_optimal ") + (report.oracle_verdict.optimal ? "true" : "false") + "\n";
    return out;
}

std::string format_check_json(const CheckReport &report) {
    nlohmann::ordered_json j;
    j["states"] = report.srm.per_state_correct.size();
    j["pc"] = rounded(report.srm.pc);
    nlohmann::ordered_json per = nlohmann::ordered_json::array();
    for (double p : report.srm.per_state_correct) {
        per.push_back(rounded(p));
    }
    j["per_state_correct"] = per;
    j["mutual_info_bits"] = rounded(report.stats.mutual_info_bits);
    nlohmann::ordered_json verdicts = nlohmann::ordered_json::array();
    if (report.block_verdict) {
        verdicts.push_back(verdict_json(*report.block_verdict));
    }
    verdicts.push_back(verdict_json(report.factor_verdict));
    verdicts.push_back(verdict_json(report.oracle_verdict));
    j["verdicts"] = verdicts;
    j["srm_optimal"] = report.oracle_verdict.optimal;
    return j.dump(1) + "\n";
}

} // namespace srmkit
