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

// srmkit command-line front end: figure datasets, pipeline sweeps and
// optimality checks of user-supplied Gram files.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "srmkit/datasets.hpp"
#include "srmkit/error.hpp"
#include "srmkit/gram_file.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct Options {
    std::string grid;
    std::string deltas;
    std::string ms;
    std::string out;
    std::string format = "csv";
    std::optional<double> tol_psd;
    std::optional<double> tol_cond;
    std::string scheme = "psk";
    std::optional<double> prior;
    std::string gram_path;
};

srmkit::Tolerances tolerances(const Options &o) {
    srmkit::Tolerances tol;
    if (o.tol_psd) {
        if (!(*o.tol_psd > 0.0)) {
            throw srmkit::Error(srmkit::ErrorKind::InvalidArgument, "--tol-psd must be positive");
        }
        tol.psd = *o.tol_psd;
    }
    if (o.tol_cond) {
        if (!(*o.tol_cond > 0.0)) {
            throw srmkit::Error(srmkit::ErrorKind::InvalidArgument, "--tol-cond must be positive");
        }
        tol.cond = *o.tol_cond;
    }
    return tol;
}

srmkit::PhotonGrid grid_or(const Options &o, srmkit::PhotonGrid fallback) {
    return o.grid.empty() ? fallback : srmkit::PhotonGrid::parse(o.grid);
}

void emit(const Options &o, const std::string &text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
        throw srmkit::Error(srmkit::ErrorKind::InvalidArgument, "cannot open output file " + o.out);
    }
    file << text;
}

void emit(const Options &o, const srmkit::Dataset &data) {
    emit(o, o.format == "json" ? srmkit::to_json(data) : srmkit::to_csv(data));
}

void add_common(CLI::App *cmd, Options &o, bool grid, bool delta, bool m) {
    if (grid) {
        cmd->add_option("--grid", o.grid, "Photon-number grid start:stop:count on |alpha|^2");
    }
    if (delta) {
        cmd->add_option("--delta", o.deltas, "Comma-separated phase shifts, e.g. 0,pi/8,pi/4");
    }
    if (m) {
        cmd->add_option("--m", o.ms, "Comma-separated constellation sizes");
    }
    cmd->add_option("--out", o.out, "Output path (default: stdout)");
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--tol-psd", o.tol_psd, "Semidefinite tolerance (default 1e-10)");
    cmd->add_option("--tol-cond", o.tol_cond, "Equality-condition tolerance (default 1e-9)");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Square-root measurement analysis of pure-state constellations"};
    app.require_subcommand(1);
    Options o;

    auto *fig1 = app.add_subcommand("fig1", "Double BPSK (|alpha|=|beta|, p=1/4): Pc vs |alpha|^2 per delta");
    add_common(fig1, o, true, true, false);
    auto *fig2 = app.add_subcommand("fig2", "4-PAM: SRM-optimal prior p* vs |alpha|^2");
    add_common(fig2, o, true, false, false);
    auto *fig3 = app.add_subcommand("fig3", "4-PAM: error probability at p* vs |alpha|^2");
    add_common(fig3, o, true, false, false);
    auto *fig4 = app.add_subcommand("fig4", "PPM and double PPM error probability");
    add_common(fig4, o, true, false, true);
    auto *fig5 = app.add_subcommand("fig5", "PPM and double PPM mutual information");
    add_common(fig5, o, true, false, true);
    auto *sweep = app.add_subcommand("sweep", "Generic pipeline sweep of one scheme");
    add_common(sweep, o, true, true, true);
    sweep->add_option("--scheme", o.scheme, "Scheme")
        ->check(CLI::IsMember({"psk", "ppm", "double_ppm", "double_bpsk", "pam4"}));
    sweep->add_option("--p", o.prior, "Prior of the |+-alpha> states (double_bpsk, pam4)");
    auto *check = app.add_subcommand("check", "SRM and optimality verdicts for a Gram file");
    check->add_option("gram-file", o.gram_path, "Gram file")->required();
    add_common(check, o, false, false, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        const srmkit::Tolerances tol = tolerances(o);
        if (fig1->parsed()) {
            const auto deltas = o.deltas.empty() ? srmkit::default_fig1_deltas() : srmkit::parse_angle_list(o.deltas);
            emit(o, srmkit::fig1_dataset(grid_or(o, {0.1, 10.0, 100}), deltas, tol));
        } else if (fig2->parsed() || fig3->parsed()) {
            emit(o, srmkit::pam4_dataset(grid_or(o, {0.1, 10.0, 100}), tol));
        } else if (fig4->parsed() || fig5->parsed()) {
            const auto ms = o.ms.empty() ? std::vector<std::size_t>{2, 16} : srmkit::parse_size_list(o.ms);
            emit(o, srmkit::ppm_dataset(grid_or(o, {0.1, 20.0, 200}), ms, tol));
        } else if (sweep->parsed()) {
            srmkit::SweepConfig cfg;
            cfg.scheme = srmkit::parse_scheme(o.scheme);
            cfg.grid = grid_or(o, {0.1, 10.0, 100});
            if (!o.ms.empty()) {
                cfg.ms = srmkit::parse_size_list(o.ms);
            }
            cfg.deltas = o.deltas.empty() ? srmkit::default_fig1_deltas() : srmkit::parse_angle_list(o.deltas);
            cfg.prior = o.prior;
            emit(o, srmkit::sweep_dataset(cfg, tol));
        } else if (check->parsed()) {
            std::ifstream in(o.gram_path);
            if (!in) {
                throw srmkit::Error(srmkit::ErrorKind::InvalidArgument, "cannot open " + o.gram_path);
            }
            const auto report = srmkit::run_check(srmkit::parse_gram_file(in), tol);
            emit(o, o.format == "json" ? srmkit::format_check_json(report) : srmkit::format_check_text(report));
        }
    } catch (const srmkit::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return srmkit::is_numerical(e.kind()) ? kExitNumerical : kExitValidation;
    }
    return 0;
}
