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

// qdisrupt: qubit disruption channels and the quantum penny-flip odds.
//
//   qdisrupt odds-table [--mode analytic|mc]
//   qdisrupt angle-scan 0 180 --steps 181
//   qdisrupt iterate --n-max 6 --mode mc --samples 100000
//   qdisrupt twirl --theta 120 [--axis x|y|z|nx,ny,nz]
//   qdisrupt measure --axis random --repeat 3
//
// Shared flags: --seed --samples --mode --format --output --shards.
// Exit codes: 0 ok, 2 bad arguments, 3 runtime failure.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qdisrupt/report.h"

namespace {

using namespace qdisrupt::cli;

struct SharedFlags {
    std::uint64_t seed = 0;
    std::uint64_t samples = 100000;
    std::string mode = "analytic";
    std::string format = "json";
    std::string output;
    unsigned shards = 1;
};

void add_shared_flags(CLI::App *cmd, SharedFlags &flags) {
    cmd->add_option("--seed", flags.seed, "RNG seed")->capture_default_str();
    cmd->add_option("--samples", flags.samples, "Monte Carlo samples")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--mode", flags.mode, "analytic or mc")
        ->check(CLI::IsMember({"analytic", "mc"}))
        ->capture_default_str();
    cmd->add_option("--format", flags.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--output", flags.output, "write the report here instead of stdout");
    cmd->add_option("--shards", flags.shards, "parallel Monte Carlo shards")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

RunConfig make_config(const std::string &command, const SharedFlags &flags) {
    RunConfig config;
    config.command = command;
    config.seed = flags.seed;
    config.samples = flags.samples;
    config.mode = parse_mode(flags.mode);
    config.format = parse_format(flags.format);
    if (!flags.output.empty()) {
        config.output_path = flags.output;
    }
    config.shards = flags.shards;
    return config;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Qubit disruption channels and quantum penny-flip odds"};
    app.require_subcommand(1);

    SharedFlags flags;

    CLI::App *odds = app.add_subcommand("odds-table", "Q's odds against the three P strategies");
    add_shared_flags(odds, flags);

    AngleScanArgs scan_args;
    CLI::App *scan = app.add_subcommand("angle-scan", "Scan the twirl angle for full mixing (degrees)");
    scan->add_option("theta_min", scan_args.theta_min_deg, "start angle, degrees")->capture_default_str();
    scan->add_option("theta_max", scan_args.theta_max_deg, "end angle, degrees")->capture_default_str();
    scan->add_option("--steps", scan_args.steps, "grid points")->capture_default_str();
    add_shared_flags(scan, flags);

    int n_max = 6;
    CLI::App *iterate = app.add_subcommand("iterate", "Polarized weight after n random measurements");
    iterate->add_option("--n-max", n_max, "largest n")->capture_default_str();
    add_shared_flags(iterate, flags);

    TwirlArgs twirl_args;
    std::string twirl_axis;
    CLI::App *twirl = app.add_subcommand("twirl", "Rotate |0><0| about a random (or fixed) axis");
    twirl->add_option("--theta", twirl_args.theta_deg, "rotation angle, degrees")->capture_default_str();
    twirl->add_option("--axis", twirl_axis, "fixed axis x|y|z|nx,ny,nz (default: random)");
    add_shared_flags(twirl, flags);

    MeasureArgs measure_args;
    CLI::App *measure = app.add_subcommand("measure", "Measure |0><0| along an axis");
    measure->add_option("--axis", measure_args.axis, "x|y|z|random|nx,ny,nz")->capture_default_str();
    measure->add_option("--repeat", measure_args.repeat, "number of measurements")->capture_default_str();
    add_shared_flags(measure, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (odds->parsed()) {
            RunConfig config = make_config("odds-table", flags);
            emit(cmd_odds_table(config), config);
        } else if (scan->parsed()) {
            RunConfig config = make_config("angle-scan", flags);
            emit(cmd_angle_scan(config, scan_args), config);
        } else if (iterate->parsed()) {
            RunConfig config = make_config("iterate", flags);
            emit(cmd_iterate(config, n_max), config);
        } else if (twirl->parsed()) {
            RunConfig config = make_config("twirl", flags);
            if (!twirl_axis.empty()) {
                twirl_args.axis = twirl_axis;
            }
            emit(cmd_twirl(config, twirl_args), config);
        } else if (measure->parsed()) {
            RunConfig config = make_config("measure", flags);
            emit(cmd_measure(config, measure_args), config);
        }
    } catch (const CliError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const qdisrupt::InvariantError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}
