// SPDX-License-Identifier: Apache-2.0
//
// secna: sliding extended coprime nested arrays for non-circular DOA estimation
// Copyright (C) 2026 The secna authors
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

// Command-line front end: array designs, co-array analysis, DOF table, simulation,
// single-shot estimation and Monte Carlo RMSE sweeps.
//
// Exit codes: 0 success, 2 parameter error, 3 invariant violation.

#include <secna/io.hpp>
#include <secna/secna.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace
{
    using secna::io::json;

    struct Globals
    {
        std::optional<std::uint64_t> seed;
        std::optional<std::int64_t> trials;
        double grid_step = 0.1;
        std::string out;
    };

    // Writes to --out when given, stdout otherwise.
    template <class Fn>
    void emit(const std::string &path, Fn &&write)
    {
        if (path.empty() || path == "-")
        {
            write(std::cout);
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw secna::ParameterError("cannot open output file " + path);
        write(f);
    }

    json read_json_file(const std::string &path)
    {
        std::ifstream f(path);
        if (!f)
            throw secna::ParameterError("cannot open " + path);
        try
        {
            return json::parse(f);
        }
        catch (const json::exception &e)
        {
            throw secna::ParameterError(path + ": " + e.what());
        }
    }

    secna::Scenario load_scenario(const std::string &path, const Globals &g)
    {
        auto s = secna::io::scenario_from_json(read_json_file(path));
        if (g.seed)
            s.seed = *g.seed;
        return s;
    }

    secna::ExperimentConfig sweep_config(const std::vector<std::string> &arrays, std::size_t q, double span,
                                         std::vector<double> values, const Globals &g)
    {
        secna::ExperimentConfig c;
        c.arrays.clear();
        for (const auto &a : arrays)
            c.arrays.push_back(secna::parse_array_spec(a));
        c.q = q;
        c.angle_span_deg = span;
        c.sweep_values = std::move(values);
        c.grid_step_deg = g.grid_step;
        if (g.trials)
            c.trials = *g.trials;
        if (g.seed)
            c.master_seed = *g.seed;
        return c;
    }

    void write_report(const secna::RmseReport &r, const Globals &g, const std::string &report_path)
    {
        emit(g.out, [&](std::ostream &os) { os << secna::sweep_csv(r); });
        if (!report_path.empty())
            emit(report_path, [&](std::ostream &os) { os << secna::io::report_json(r).dump(2) << '\n'; });
        for (const auto &p : r.points)
            if (p.flagged)
                std::cerr << "warning: " << p.array << " at " << p.sweep_value << ": " << p.failures << "/"
                          << p.trials << " trials excluded (peak shortfall)\n";
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Sliding extended coprime nested arrays: design, co-array analysis and DOA benchmarking"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--seed", g.seed, "Master / scenario seed");
    app.add_option("--trials", g.trials, "Monte Carlo trials per sweep point")->check(CLI::PositiveNumber);
    app.add_option("--grid-step", g.grid_step, "Spectrum grid step in degrees")->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "Output file (default: stdout)");

    // design
    std::string array_spec;
    std::optional<std::int64_t> budget;
    auto *design = app.add_subcommand("design", "Emit an array design as JSON {design, params, positions}");
    design->add_option("--array", array_spec, "secna:m,n | nested:n1,n2 | ula:count");
    design->add_option("--budget", budget, "Pick the best SECNA for an odd sensor budget");

    // coarray
    std::string kind = "sdca";
    auto *coarray = app.add_subcommand("coarray", "Lag weight function as CSV plus DOF/VAA summary");
    coarray->add_option("--array", array_spec, "Array spec")->required();
    coarray->add_option("--kind", kind, "sdca | dca | sca")->check(CLI::IsMember({"sdca", "dca", "sca"}));

    // dof-table
    std::vector<std::int64_t> budgets{9, 13, 19, 23, 27};
    auto *dof = app.add_subcommand("dof-table", "DOF comparison of NA, ESNA, RSNA and SECNA as JSON");
    dof->add_option("--budgets", budgets, "Odd sensor counts >= 9")->delimiter(',');

    // simulate
    std::string scenario_path;
    bool extended = false;
    auto *simulate = app.add_subcommand("simulate", "Generate snapshots; CSV rows are sensors, columns re,im pairs");
    simulate->add_option("--array", array_spec, "Array spec")->required();
    simulate->add_option("--scenario", scenario_path, "Scenario JSON")->required();
    simulate->add_flag("--extended", extended, "Append the conjugate rows");

    // estimate
    std::optional<std::size_t> q_opt;
    auto *estimate = app.add_subcommand("estimate", "Simulate a scenario and estimate DOAs; spectrum CSV to --out, "
                                                    "peaks JSON to stdout");
    estimate->add_option("--array", array_spec, "Array spec")->required();
    estimate->add_option("--scenario", scenario_path, "Scenario JSON")->required();
    estimate->add_option("--q", q_opt, "Number of sources to estimate (default: scenario count)");

    // sweeps
    std::vector<std::string> arrays{"secna:3,4", "nested:6,7"};
    std::size_t q = 31;
    double span = 60.0, snr_fixed = 20.0;
    std::int64_t snapshots_fixed = 2000;
    std::vector<double> snr_list{-5, 0, 5, 10, 15, 20};
    std::vector<double> snapshot_list{300, 1000, 2000, 2600};
    std::string report_path;
    unsigned threads = 0;

    auto *sweep_snr = app.add_subcommand("sweep-snr", "RMSE versus SNR; CSV sweep_value,array,rmse,failures");
    auto *sweep_t = app.add_subcommand("sweep-snapshots", "RMSE versus snapshot count; same CSV layout");
    for (auto *sub : {sweep_snr, sweep_t})
    {
        sub->add_option("--arrays", arrays, "Array specs to compare");
        sub->add_option("--q", q, "Number of sources, uniform over [-span, span]");
        sub->add_option("--span", span, "Half-width of the source sector in degrees");
        sub->add_option("--report", report_path, "Also write a JSON report with config and timing");
        sub->add_option("--threads", threads, "Worker threads (0: all cores)");
    }
    sweep_snr->add_option("--snr", snr_list, "SNR points in dB")->delimiter(',');
    sweep_snr->add_option("--snapshots", snapshots_fixed, "Snapshots per trial");
    sweep_t->add_option("--snapshot-list", snapshot_list, "Snapshot counts")->delimiter(',');
    sweep_t->add_option("--snr", snr_fixed, "SNR in dB");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try
    {
        if (design->parsed())
        {
            if (budget && !array_spec.empty())
                throw secna::ParameterError("give either --array or --budget");
            json j;
            if (budget)
                j = secna::io::secna_json(secna::build_secna(secna::best_coprime_pair(*budget)));
            else if (array_spec.empty())
                throw secna::ParameterError("design needs --array or --budget");
            else
            {
                const auto spec = secna::parse_array_spec(array_spec);
                j = spec.design == "secna" && spec.params.size() == 2
                        ? secna::io::secna_json(secna::build_secna({spec.params[0], spec.params[1]}))
                        : secna::io::array_json(secna::make_array(spec));
            }
            emit(g.out, [&](std::ostream &os) { os << j.dump(2) << '\n'; });
        }
        else if (coarray->parsed())
        {
            const auto arr = secna::make_array(secna::parse_array_spec(array_spec));
            const auto lags = kind == "dca" ? secna::diff_coarray(arr)
                              : kind == "sca" ? secna::sum_coarray(arr)
                                              : secna::sdca(arr);
            emit(g.out, [&](std::ostream &os) { secna::io::write_coarray_csv(os, lags); });
        }
        else if (dof->parsed())
        {
            const auto t = secna::dof_table(budgets);
            emit(g.out, [&](std::ostream &os) { os << secna::io::dof_table_json(t).dump(2) << '\n'; });
            for (const auto &r : t.rows)
                for (const auto &[name, cell] : {std::pair{"NA", r.na}, std::pair{"ESNA", r.esna},
                                                 std::pair{"RSNA", r.rsna}, std::pair{"SECNA", r.secna}})
                    if (!cell.matches_reference())
                        std::cerr << "note: " << name << " at " << r.budget << " sensors computes " << cell.value
                                  << ", published table lists " << *cell.reference << '\n';
        }
        else if (simulate->parsed())
        {
            const auto arr = secna::make_array(secna::parse_array_spec(array_spec));
            auto x = secna::gen_snapshots(arr, load_scenario(scenario_path, g));
            if (extended)
                x = secna::extend_snapshots(x);
            emit(g.out, [&](std::ostream &os) { secna::io::write_snapshots_csv(os, x); });
        }
        else if (estimate->parsed())
        {
            const auto arr = secna::make_array(secna::parse_array_spec(array_spec));
            const auto scn = load_scenario(scenario_path, g);
            const auto spec =
                secna::estimate_doa(arr, secna::gen_snapshots(arr, scn), q_opt.value_or(scn.sources()), g.grid_step);
            if (!g.out.empty())
                emit(g.out, [&](std::ostream &os) { secna::io::write_spectrum_csv(os, spec); });
            std::cout << secna::io::peaks_json(spec).dump(2) << '\n';
        }
        else if (sweep_snr->parsed() || sweep_t->parsed())
        {
            const bool by_snr = sweep_snr->parsed();
            auto cfg = sweep_config(arrays, q, span, by_snr ? snr_list : snapshot_list, g);
            cfg.snr_db = snr_fixed;
            cfg.snapshots = snapshots_fixed;
            cfg.threads = threads;
            write_report(by_snr ? secna::sweep_snr(cfg) : secna::sweep_snapshots(cfg), g, report_path);
        }
        return 0;
    }
    catch (const secna::InvariantError &e)
    {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return 3;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    catch (const std::domain_error &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
