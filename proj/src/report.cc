// Copyright 2026 The qdisrupt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdisrupt/report.h"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qdisrupt/game.h"
#include "qdisrupt/rotations.h"

namespace qdisrupt::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Json config_json(const RunConfig &config) {
    Json j;
    j["command"] = config.command;
    j["seed"] = config.seed;
    j["samples"] = config.samples;
    j["mode"] = mode_name(config.mode);
    j["format"] = format_name(config.format);
    j["output"] = config.output_path ? Json(*config.output_path) : Json(nullptr);
    j["shards"] = config.shards;
    return j;
}

Json estimate_json(const McEstimate &e) {
    Json j;
    j["matrix"] = matrix_to_json(e.mean);
    j["std_error"] = e.std_error;
    j["samples"] = e.samples;
    return j;
}

Json state_json(const DensityMatrix &rho) {
    PolarizedDecomposition d = decompose_polarized(rho);
    Json j;
    j["matrix"] = matrix_to_json(rho);
    j["purity"] = purity(rho);
    j["entropy"] = entropy(rho);
    j["w_polarized"] = d.w_polarized;
    j["w_unpolarized"] = d.w_unpolarized;
    return j;
}

std::vector<Json> matrix_cells(const ComplexMatrix2 &m) {
    std::vector<Json> cells;
    for (int k = 0; k < 4; ++k) {
        cells.emplace_back(m.at(k).real());
        cells.emplace_back(m.at(k).imag());
    }
    return cells;
}

std::vector<std::string> matrix_header() {
    return {"a00_re", "a00_im", "a01_re", "a01_im", "a10_re", "a10_im", "a11_re", "a11_im"};
}

void append_state_row(Report &report, const std::string &source, const DensityMatrix &rho, double std_error) {
    PolarizedDecomposition d = decompose_polarized(rho);
    std::vector<Json> row{source};
    for (Json &cell : matrix_cells(rho)) {
        row.push_back(std::move(cell));
    }
    row.insert(row.end(), {purity(rho), entropy(rho), d.w_polarized, d.w_unpolarized, std_error});
    report.rows.push_back(std::move(row));
}

std::vector<std::string> state_header() {
    std::vector<std::string> header{"source"};
    for (const std::string &h : matrix_header()) {
        header.push_back(h);
    }
    header.insert(header.end(), {"purity", "entropy", "w_polarized", "w_unpolarized", "std_error"});
    return header;
}

std::string csv_field(const Json &cell) {
    if (cell.is_number_float()) {
        return format_double(cell.get<double>());
    }
    if (cell.is_string()) {
        std::string s = cell.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos) {
            return s;
        }
        std::string quoted = "\"";
        for (char c : s) {
            quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
        }
        return quoted + "\"";
    }
    if (cell.is_null()) {
        return "";
    }
    return cell.dump();
}

}  // namespace

McOptions RunConfig::mc_options() const {
    return McOptions{samples, RngStream(seed, 0), shards};
}

std::string mode_name(Mode mode) {
    return mode == Mode::kAnalytic ? "analytic" : "mc";
}

Mode parse_mode(const std::string &text) {
    if (text == "analytic") {
        return Mode::kAnalytic;
    }
    if (text == "mc") {
        return Mode::kMonteCarlo;
    }
    throw CliError("BadArgument", kExitUsage, "mode must be analytic or mc, got '" + text + "'");
}

std::string format_name(OutputFormat format) {
    return format == OutputFormat::kJson ? "json" : "csv";
}

OutputFormat parse_format(const std::string &text) {
    if (text == "json") {
        return OutputFormat::kJson;
    }
    if (text == "csv") {
        return OutputFormat::kCsv;
    }
    throw CliError("BadArgument", kExitUsage, "format must be json or csv, got '" + text + "'");
}

Json matrix_to_json(const ComplexMatrix2 &m) {
    auto entry = [](const Complex &z) { return Json::array({z.real(), z.imag()}); };
    return Json::array({Json::array({entry(m.a00), entry(m.a01)}), Json::array({entry(m.a10), entry(m.a11)})});
}

ComplexMatrix2 matrix_from_json(const Json &j) {
    auto entry = [&](int r, int c) { return Complex(j.at(r).at(c).at(0).get<double>(), j.at(r).at(c).at(1).get<double>()); };
    return {entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1)};
}

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) {
        throw CliError("IoError", kExitRuntime, "cannot format number");
    }
    return std::string(buf, end);
}

std::string render_json(const Report &report) {
    Json j;
    j["config"] = report.config;
    j["results"] = report.results;
    j["duration_ms"] = report.duration_ms;
    return j.dump(2) + "\n";
}

std::string render_csv(const Report &report) {
    std::string out;
    for (std::size_t i = 0; i < report.csv_header.size(); ++i) {
        out += (i ? "," : "") + report.csv_header[i];
    }
    out += "\n";
    for (const std::vector<Json> &row : report.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += (i ? "," : "") + csv_field(row[i]);
        }
        out += "\n";
    }
    return out;
}

void emit(const Report &report, const RunConfig &config) {
    std::string text = config.format == OutputFormat::kJson ? render_json(report) : render_csv(report);
    if (!config.output_path) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw CliError("IoError", kExitRuntime, "cannot open '" + *config.output_path + "' for writing");
    }
    file << text;
    file.flush();
    if (!file) {
        throw CliError("IoError", kExitRuntime, "failed writing '" + *config.output_path + "'");
    }
}

UnitAxis parse_axis(const std::string &text) {
    if (text == "x") {
        return UnitAxis::x();
    }
    if (text == "y") {
        return UnitAxis::y();
    }
    if (text == "z") {
        return UnitAxis::z();
    }
    double parts[3];
    const char *cursor = text.data();
    const char *end = text.data() + text.size();
    for (int i = 0; i < 3; ++i) {
        while (cursor < end && (*cursor == ' ' || *cursor == '(')) {
            ++cursor;
        }
        auto [next, ec] = std::from_chars(cursor, end, parts[i]);
        if (ec != std::errc()) {
            throw CliError("BadAxis", kExitUsage, "expected x, y, z or nx,ny,nz; got '" + text + "'");
        }
        cursor = next;
        while (cursor < end && (*cursor == ' ' || *cursor == ')')) {
            ++cursor;
        }
        if (i < 2) {
            if (cursor == end || *cursor != ',') {
                throw CliError("BadAxis", kExitUsage, "expected x, y, z or nx,ny,nz; got '" + text + "'");
            }
            ++cursor;
        }
    }
    if (cursor != end) {
        throw CliError("BadAxis", kExitUsage, "trailing characters in axis '" + text + "'");
    }
    double len = std::sqrt(parts[0] * parts[0] + parts[1] * parts[1] + parts[2] * parts[2]);
    if (!std::isfinite(len) || len == 0.0) {
        throw CliError("BadAxis", kExitUsage, "axis '" + text + "' is the zero vector");
    }
    if (std::abs(len - 1.0) > 1e-6) {
        throw CliError("BadAxis", kExitUsage, "axis '" + text + "' is not normalized (length " + format_double(len) + ")");
    }
    return UnitAxis::normalized(parts[0], parts[1], parts[2]);
}

Report cmd_odds_table(const RunConfig &config) {
    auto start = Clock::now();
    Report report;
    report.config = config_json(config);
    report.csv_header = {"case", "strategy", "q_win", "odds"};
    Json rows = Json::array();
    for (const OddsRow &row : odds_table(config.mode, config.mc_options())) {
        Json j;
        j["case"] = row.case_label;
        j["strategy"] = row.strategy.label;
        j["channel"] = row.strategy.spec.describe();
        j["q_win"] = row.outcome.q_win_probability;
        j["odds"] = row.outcome.odds_string();
        j["std_error"] = row.outcome.estimate ? Json(row.outcome.estimate->std_error) : Json(nullptr);
        j["post_channel_state"] = matrix_to_json(row.outcome.post_channel_state);
        rows.push_back(j);
        report.rows.push_back({row.case_label, row.strategy.label, row.outcome.q_win_probability,
                               row.outcome.odds_string()});
    }
    report.results["rows"] = rows;
    report.duration_ms = elapsed_ms(start);
    return report;
}

Report cmd_angle_scan(const RunConfig &config, const AngleScanArgs &args) {
    auto start = Clock::now();
    if (!(args.theta_min_deg < args.theta_max_deg)) {
        throw CliError("BadRange", kExitUsage,
                       "theta_min (" + format_double(args.theta_min_deg) + ") must be below theta_max (" +
                           format_double(args.theta_max_deg) + ")");
    }
    if (args.steps < 2) {
        throw CliError("BadRange", kExitUsage, "angle scan needs at least 2 steps");
    }
    AngleScanResult scan = angle_scan(args.theta_min_deg * kPi / 180.0, args.theta_max_deg * kPi / 180.0, args.steps);

    Report report;
    report.config = config_json(config);
    report.config["theta_min_deg"] = args.theta_min_deg;
    report.config["theta_max_deg"] = args.theta_max_deg;
    report.config["steps"] = args.steps;
    report.csv_header = {"theta_degrees", "purity", "trace_distance_to_mixed"};
    Json rows = Json::array();
    for (std::size_t i = 0; i < scan.angles.size(); ++i) {
        double deg = scan.angles[i] * 180.0 / kPi;
        rows.push_back({{"theta_degrees", deg},
                        {"purity", scan.purity[i]},
                        {"trace_distance_to_mixed", scan.distance_to_mixed[i]}});
        report.rows.push_back({deg, scan.purity[i], scan.distance_to_mixed[i]});
    }
    report.results["rows"] = rows;
    report.results["argmin_degrees"] = scan.argmin_angle * 180.0 / kPi;
    report.results["refined_root_degrees"] =
        scan.refined_root ? Json(*scan.refined_root * 180.0 / kPi) : Json(nullptr);
    report.duration_ms = elapsed_ms(start);
    return report;
}

Report cmd_iterate(const RunConfig &config, int n_max) {
    auto start = Clock::now();
    if (n_max < 1) {
        throw CliError("BadArgument", kExitUsage, "n_max must be at least 1");
    }
    Report report;
    report.config = config_json(config);
    report.config["n_max"] = n_max;
    report.csv_header = {"n", "polarized_weight", "q_win"};
    bool mc = config.mode == Mode::kMonteCarlo;
    if (mc) {
        report.csv_header.insert(report.csv_header.end(), {"mc_polarized_weight", "mc_q_win", "mc_std_error"});
    }
    Json rows = Json::array();
    for (int n = 1; n <= n_max; ++n) {
        ChannelSpec spec = ChannelSpec::iterated(ChannelSpec::random_basis_measurement(), n);
        DensityMatrix exact = apply_channel_analytic(spec, rho_initial());
        GameOutcome outcome = outcome_from_state(exact);
        double weight = decompose_polarized(exact).w_polarized;
        Json j;
        j["n"] = n;
        j["polarized_weight"] = weight;
        j["q_win"] = outcome.q_win_probability;
        j["odds"] = outcome.odds_string();
        std::vector<Json> row{n, weight, outcome.q_win_probability};
        if (mc) {
            McOptions options = config.mc_options();
            McEstimate estimate = apply_channel_mc(spec, rho_initial(), options);
            double mc_weight = decompose_polarized(estimate.state()).w_polarized;
            double mc_q = outcome_from_state(estimate.state()).q_win_probability;
            j["mc_polarized_weight"] = mc_weight;
            j["mc_q_win"] = mc_q;
            j["mc"] = estimate_json(estimate);
            row.insert(row.end(), {mc_weight, mc_q, estimate.std_error});
        }
        rows.push_back(j);
        report.rows.push_back(std::move(row));
    }
    report.results["rows"] = rows;
    report.duration_ms = elapsed_ms(start);
    return report;
}

Report cmd_twirl(const RunConfig &config, const TwirlArgs &args) {
    auto start = Clock::now();
    Angle theta = Angle::degrees(args.theta_deg);
    std::optional<UnitAxis> axis;
    if (args.axis) {
        axis = parse_axis(*args.axis);
    }
    ChannelSpec spec = axis ? ChannelSpec::fixed_rotation(*axis, theta) : ChannelSpec::random_axis_rotation(theta);

    Report report;
    report.config = config_json(config);
    report.config["theta_deg"] = args.theta_deg;
    report.config["axis"] = args.axis ? Json(*args.axis) : Json("random");
    report.csv_header = state_header();
    report.results["channel"] = spec.describe();
    report.results["contraction"] = axis ? Json(nullptr) : Json(twirl_contraction(theta.radians()));

    DensityMatrix exact = apply_channel_analytic(spec, rho_initial());
    report.results["analytic"] = state_json(exact);
    append_state_row(report, "analytic", exact, 0.0);
    if (config.mode == Mode::kMonteCarlo) {
        McEstimate estimate = apply_channel_mc(spec, rho_initial(), config.mc_options());
        Json j = state_json(estimate.state());
        j["std_error"] = estimate.std_error;
        j["samples"] = estimate.samples;
        report.results["mc"] = j;
        append_state_row(report, "mc", estimate.state(), estimate.std_error);
    }
    report.duration_ms = elapsed_ms(start);
    return report;
}

Report cmd_measure(const RunConfig &config, const MeasureArgs &args) {
    auto start = Clock::now();
    if (args.repeat < 1) {
        throw CliError("BadArgument", kExitUsage, "repeat must be at least 1");
    }
    ChannelSpec single = args.axis == "random" ? ChannelSpec::random_basis_measurement()
                                               : ChannelSpec::fixed_axis_measurement(parse_axis(args.axis));
    ChannelSpec spec = args.repeat == 1 ? single : ChannelSpec::iterated(single, args.repeat);

    Report report;
    report.config = config_json(config);
    report.config["axis"] = args.axis;
    report.config["repeat"] = args.repeat;
    report.csv_header = state_header();
    report.results["channel"] = spec.describe();

    DensityMatrix exact = apply_channel_analytic(spec, rho_initial());
    report.results["analytic"] = state_json(exact);
    append_state_row(report, "analytic", exact, 0.0);
    if (config.mode == Mode::kMonteCarlo) {
        McEstimate estimate = apply_channel_mc(spec, rho_initial(), config.mc_options());
        Json j = state_json(estimate.state());
        j["std_error"] = estimate.std_error;
        j["samples"] = estimate.samples;
        report.results["mc"] = j;
        append_state_row(report, "mc", estimate.state(), estimate.std_error);
    }
    report.duration_ms = elapsed_ms(start);
    return report;
}

}  // namespace qdisrupt::cli
