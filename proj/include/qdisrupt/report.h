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

#ifndef QDISRUPT_REPORT_H_
#define QDISRUPT_REPORT_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qdisrupt/channels.h"
#include "qdisrupt/qmat.h"

namespace qdisrupt::cli {

using Json = nlohmann::ordered_json;

enum class OutputFormat { kJson, kCsv };

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntime = 3;

/// A failure with a fixed exit code. `name` is the error tag shown to users
/// ("BadRange", "BadAxis", "IoError").
class CliError : public std::runtime_error {
   public:
    CliError(std::string name, int exit_code, const std::string &what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)), exit_code_(exit_code) {
    }
    const std::string &name() const {
        return name_;
    }
    int exit_code() const {
        return exit_code_;
    }

   private:
    std::string name_;
    int exit_code_;
};

struct RunConfig {
    std::string command;
    std::uint64_t seed = 0;
    std::uint64_t samples = 100000;
    Mode mode = Mode::kAnalytic;
    OutputFormat format = OutputFormat::kJson;
    std::optional<std::string> output_path;
    unsigned shards = 1;

    McOptions mc_options() const;
};

/// Result of one command. `rows` mirrors `csv_header` and is what the CSV
/// rendering prints; `results` carries everything for JSON.
struct Report {
    Json config;
    Json results;
    std::vector<std::string> csv_header;
    std::vector<std::vector<Json>> rows;
    double duration_ms = 0.0;
};

std::string mode_name(Mode mode);
Mode parse_mode(const std::string &text);
std::string format_name(OutputFormat format);
OutputFormat parse_format(const std::string &text);

/// [[[re, im], [re, im]], [[re, im], [re, im]]]
Json matrix_to_json(const ComplexMatrix2 &m);
ComplexMatrix2 matrix_from_json(const Json &j);

/// Shortest representation that round-trips, "C" locale.
std::string format_double(double v);

std::string render_json(const Report &report);
std::string render_csv(const Report &report);

/// Writes the rendering selected by config to config.output_path, or to
/// stdout when unset. Throws CliError "IoError".
void emit(const Report &report, const RunConfig &config);

struct AngleScanArgs {
    double theta_min_deg = 0.0;
    double theta_max_deg = 180.0;
    std::size_t steps = 181;
};

struct TwirlArgs {
    double theta_deg = 120.0;
    std::optional<std::string> axis;  // fixed axis instead of a random one
};

struct MeasureArgs {
    std::string axis = "random";
    int repeat = 1;
};

/// "x", "y", "z" or "nx,ny,nz". The custom form must have unit length within
/// 1e-6 and is re-normalized. Throws CliError "BadAxis".
UnitAxis parse_axis(const std::string &text);

Report cmd_odds_table(const RunConfig &config);
/// Throws CliError "BadRange" when theta_min >= theta_max or steps < 2.
Report cmd_angle_scan(const RunConfig &config, const AngleScanArgs &args);
Report cmd_iterate(const RunConfig &config, int n_max);
Report cmd_twirl(const RunConfig &config, const TwirlArgs &args);
Report cmd_measure(const RunConfig &config, const MeasureArgs &args);

}  // namespace qdisrupt::cli

#endif  // QDISRUPT_REPORT_H_
