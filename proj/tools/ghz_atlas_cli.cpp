// Copyright 2026 The ghz-atlas authors
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
//
// ghz-atlas: enumerate, classify and verify GHZ-Mermin experiments.

#include <iostream>

#include "CLI11.hpp"

#include "ghz/report.hpp"

namespace {

struct CliFlags {
    std::string format = "text";
    double tol = ghz::kDecisionTol;
    int threads = 1;
    bool no_cache = false;
    std::string out_dir;
};

void add_common_flags(CLI::App* cmd, CliFlags& flags) {
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--tol", flags.tol, "Rank/eigenvalue decision tolerance")->capture_default_str();
    cmd->add_option("--threads", flags.threads, "Worker threads for the search")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_flag("--no-cache", flags.no_cache, "Bypass the enumeration cache");
    cmd->add_option("--out-dir", flags.out_dir, "Also write the rendered output into this directory");
}

ghz::CommandOptions to_options(const CliFlags& flags) {
    ghz::CommandOptions opts;
    opts.format = *ghz::parse_format(flags.format);
    opts.tol = flags.tol;
    opts.threads = flags.threads;
    opts.no_cache = flags.no_cache;
    if (!flags.out_dir.empty()) {
        opts.out_dir = flags.out_dir;
    }
    return opts;
}

int emit(const ghz::ReportDocument& doc, const ghz::CommandOptions& opts, const std::string& stem) {
    std::string rendered = doc.render(opts.format);
    std::cout << rendered;
    if (opts.out_dir) {
        std::error_code ec;
        std::filesystem::create_directories(*opts.out_dir, ec);
        const char* ext = opts.format == ghz::OutputFormat::Json  ? ".json"
                          : opts.format == ghz::OutputFormat::Csv ? ".csv"
                                                                  : ".txt";
        std::ofstream out(*opts.out_dir / (stem + ext));
        out << rendered;
    }
    return doc.exit_code;
}

std::optional<std::vector<int>> parse_eps(const std::string& text) {
    std::vector<int> eps;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        if (tok == "1" || tok == "+1") {
            eps.push_back(+1);
        } else if (tok == "-1") {
            eps.push_back(-1);
        } else {
            return std::nullopt;
        }
    }
    return eps;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GHZ-Mermin experiment atlas: enumeration, invariants, value-assignment "
                 "verdicts and Hilbert-space verification for small qubit systems"};
    app.require_subcommand(1);

    CliFlags flags;
    int qubits = 4;
    int size = 5;
    std::string experiment;
    std::string eps_text;

    auto* enumerate = app.add_subcommand("enumerate", "Classify all experiments of one shape");
    enumerate->add_option("--qubits", qubits, "Number of qubits")->check(CLI::Range(2, 6))->required();
    enumerate->add_option("--size", size, "Elements per experiment")->check(CLI::Range(2, 20))->required();
    add_common_flags(enumerate, flags);

    auto* check = app.add_subcommand("check", "Validate and classify one experiment");
    check->add_option("experiment", experiment, "Comma-separated axis words, e.g. \"xxxx,yyxx,xxyy\"")
        ->required();
    add_common_flags(check, flags);

    auto* eigen = app.add_subcommand("eigen", "Joint eigenspaces of one experiment");
    eigen->add_option("experiment", experiment, "Comma-separated axis words")->required();
    eigen->add_option("--eps", eps_text, "Requested eigenvalues, e.g. \"-1,1,1,1,1\"");
    add_common_flags(eigen, flags);

    auto* tables = app.add_subcommand("tables", "Regenerate the invariant tables and diff the references");
    add_common_flags(tables, flags);

    auto* bell = app.add_subcommand("bell", "Bell-operator bounds and the maximizing state");
    add_common_flags(bell, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ghz::kExitUsage;
    }

    ghz::CommandOptions opts = to_options(flags);
    try {
        if (enumerate->parsed()) {
            return emit(ghz::cmd_enumerate(qubits, size, opts), opts,
                        "enumerate_n" + std::to_string(qubits) + "_m" + std::to_string(size));
        }
        if (check->parsed()) {
            return emit(ghz::cmd_check(experiment, opts), opts, "check");
        }
        if (eigen->parsed()) {
            std::optional<std::vector<int>> eps;
            if (!eps_text.empty()) {
                eps = parse_eps(eps_text);
                if (!eps) {
                    std::cerr << "error: --eps entries must be +1 or -1\n";
                    return ghz::kExitUsage;
                }
            }
            return emit(ghz::cmd_eigen(experiment, eps, opts), opts, "eigen");
        }
        if (tables->parsed()) {
            return emit(ghz::cmd_tables(opts), opts, "tables");
        }
        if (bell->parsed()) {
            return emit(ghz::cmd_bell(opts), opts, "bell");
        }
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return ghz::kExitUsage;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return ghz::kExitMismatch;
    }
    return ghz::kExitUsage;
}
