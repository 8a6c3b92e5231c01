// SPDX-License-Identifier: Apache-2.0
//
// fr3sim: multi-band cellular coverage/capacity and terrestrial-satellite
// interference simulator for the upper mid-band (6-24 GHz)
// Copyright (C) 2026 the fr3sim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "fr3sim/runner.hpp"
#include "fr3sim/version.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace
{

// values below 1000 are treated as GHz, larger values as Hz
double parse_freq(double value) { return value < 1000.0 ? value * 1e9 : value; }

std::string default_out_dir()
{
    if (const char *env = std::getenv("FR3SIM_OUT_DIR"))
        return env;
    return "out";
}

struct CommonArgs
{
    std::string config_path;
    std::string out_dir = default_out_dir();
    std::vector<double> freqs;
    std::vector<double> lambdas;
    std::string direction;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int drops = 0;
    bool drops_set = false;
    int threads = 1;
};

void add_common_options(CLI::App *cmd, CommonArgs &args)
{
    cmd->add_option("--config", args.config_path, "Scenario config file (JSON); omit for built-in defaults")
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", args.out_dir, "Output directory (default: $FR3SIM_OUT_DIR or ./out)");
    cmd->add_option("--seed", args.seed, "Master seed override")->each([&args](const std::string &) {
        args.seed_set = true;
    });
    cmd->add_option("--drops", args.drops, "Number of Monte-Carlo drops override")
        ->check(CLI::PositiveNumber)
        ->each([&args](const std::string &) { args.drops_set = true; });
    cmd->add_option("--freq", args.freqs, "Band selection (GHz, or Hz when >= 1000); must match configured bands")
        ->delimiter(',');
    cmd->add_option("--lambda", args.lambdas, "Regularization grid override")->delimiter(',');
    cmd->add_option("--direction", args.direction, "Link direction: dl or ul")
        ->check(CLI::IsMember({"dl", "ul"}));
    cmd->add_option("--threads", args.threads, "Worker threads (results are invariant to this)")
        ->check(CLI::PositiveNumber);
}

fr3sim::RunOverrides to_overrides(const CommonArgs &args)
{
    fr3sim::RunOverrides ov;
    if (args.seed_set)
        ov.seed = args.seed;
    if (args.drops_set)
        ov.drops = args.drops;
    if (!args.direction.empty())
        ov.direction = fr3sim::link_direction_from_string(args.direction);
    for (double f : args.freqs)
        ov.freqs_hz.push_back(parse_freq(f));
    ov.lambdas = args.lambdas;
    ov.threads = args.threads;
    return ov;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"fr3sim: multi-band coverage/capacity and terrestrial-satellite interference simulator"};
    app.set_version_flag("--version", fr3sim::version_string);
    app.require_subcommand(1);

    CommonArgs satint_args;
    CLI::App *satint = app.add_subcommand("satint", "Terrestrial-to-satellite interference experiment");
    add_common_options(satint, satint_args);

    CommonArgs capacity_args;
    CLI::App *capacity = app.add_subcommand("capacity", "Multi-band coverage/capacity experiment");
    add_common_options(capacity, capacity_args);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        int code = app.exit(e);
        return code == 0 ? 0 : fr3sim::exit_config_error;
    }

    try
    {
        if (satint->parsed())
            return fr3sim::cmd_satint(satint_args.config_path, satint_args.out_dir, to_overrides(satint_args));
        return fr3sim::cmd_capacity(capacity_args.config_path, capacity_args.out_dir, to_overrides(capacity_args));
    }
    catch (const std::exception &e)
    {
        std::cerr << "fr3sim: " << e.what() << '\n';
        return fr3sim::exit_runtime_error;
    }
}
