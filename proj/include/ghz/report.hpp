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

#ifndef GHZ_REPORT_HPP
#define GHZ_REPORT_HPP

#include <cstdlib>
#include <sstream>

#include "ghz/enumerate.hpp"
#include "ghz/hilbert.hpp"

namespace ghz {

// Exit-code contract: 0 success, 1 verification mismatch or invalid input,
// 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

enum class OutputFormat { Text, Json, Csv };

inline std::optional<OutputFormat> parse_format(std::string_view s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    return std::nullopt;
}

struct TableDoc {
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// A command's result: printable tables plus the same data as JSON.
struct ReportDocument {
    std::vector<TableDoc> sections;
    nlohmann::json json;
    int exit_code = kExitOk;

    std::string render_text() const {
        std::ostringstream out;
        for (std::size_t s = 0; s < sections.size(); ++s) {
            const auto& t = sections[s];
            if (s) {
                out << "\n";
            }
            if (!t.title.empty()) {
                out << t.title << "\n";
            }
            std::vector<std::size_t> width(t.header.size(), 0);
            auto widen = [&](const std::vector<std::string>& row) {
                for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
                    width[i] = std::max(width[i], display_width(row[i]));
                }
            };
            widen(t.header);
            for (const auto& row : t.rows) {
                widen(row);
            }
            auto emit = [&](const std::vector<std::string>& row) {
                for (std::size_t i = 0; i < row.size(); ++i) {
                    if (i) {
                        out << "  ";
                    }
                    out << row[i];
                    if (i + 1 < row.size()) {
                        for (std::size_t k = display_width(row[i]); k < width[i]; ++k) {
                            out << ' ';
                        }
                    }
                }
                out << "\n";
            };
            if (!t.header.empty()) {
                emit(t.header);
            }
            for (const auto& row : t.rows) {
                emit(row);
            }
        }
        return out.str();
    }

    std::string render_csv() const {
        std::ostringstream out;
        bool first = true;
        for (const auto& t : sections) {
            if (!first) {
                out << "\n";
            }
            first = false;
            auto emit = [&](const std::vector<std::string>& row) {
                for (std::size_t i = 0; i < row.size(); ++i) {
                    if (i) {
                        out << ",";
                    }
                    bool quote = row[i].find_first_of(",\"\n") != std::string::npos;
                    if (quote) {
                        out << '"';
                        for (char c : row[i]) {
                            if (c == '"') {
                                out << '"';
                            }
                            out << c;
                        }
                        out << '"';
                    } else {
                        out << row[i];
                    }
                }
                out << "\n";
            };
            if (!t.header.empty()) {
                emit(t.header);
            }
            for (const auto& row : t.rows) {
                emit(row);
            }
        }
        return out.str();
    }

    std::string render_json() const { return json.dump(1) + "\n"; }

    std::string render(OutputFormat f) const {
        switch (f) {
            case OutputFormat::Text: return render_text();
            case OutputFormat::Json: return render_json();
            case OutputFormat::Csv: return render_csv();
        }
        return {};
    }

  private:
    // Column width in glyphs, not bytes (the nu/eps notation is multibyte).
    static std::size_t display_width(const std::string& s) {
        std::size_t w = 0;
        for (unsigned char c : s) {
            w += (c & 0xc0) != 0x80;
        }
        return w;
    }
};

struct CommandOptions {
    OutputFormat format = OutputFormat::Text;
    double tol = kDecisionTol;
    int threads = 1;
    bool no_cache = false;
    std::optional<std::filesystem::path> out_dir;

    EnumerateOptions enumerate_options() const {
        EnumerateOptions opts;
        opts.threads = threads;
        if (!no_cache) {
            if (const char* env = std::getenv("GHZ_ATLAS_CACHE")) {
                opts.cache_dir = std::filesystem::path(env);
            } else if (const char* home = std::getenv("HOME")) {
                opts.cache_dir = std::filesystem::path(home) / ".cache" / "ghz-atlas";
            } else {
                opts.cache_dir = std::filesystem::path(".ghz-atlas-cache");
            }
        }
        return opts;
    }
};

namespace detail {

inline std::string join_ints(std::span<const int> values, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) {
            s += sep;
        }
        s += std::to_string(values[i]);
    }
    return s;
}

inline std::string triad_counts(std::span<const int> triad) {
    if (triad.empty()) {
        return "-";
    }
    std::map<int, int> counts;
    for (int t : triad) {
        ++counts[t];
    }
    std::string s;
    for (auto [value, count] : counts) {
        if (!s.empty()) {
            s += " ";
        }
        s += std::to_string(value) + "x" + std::to_string(count);
    }
    return s;
}

inline std::string eps_string(std::span<const int> eps) {
    std::string s;
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (i) {
            s += ",";
        }
        s += eps[i] > 0 ? "+1" : "-1";
    }
    return s;
}

inline std::string labels_string(const std::vector<std::string>& labels) {
    if (labels.empty()) {
        return "-";
    }
    std::string s;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) {
            s += ", ";
        }
        s += labels[i];
    }
    return s;
}

inline std::string assignment_pretty(const ValueAssignment& a) {
    std::string s;
    for (const auto& [sym, expr] : a.entries) {
        if (!s.empty()) {
            s += ", ";
        }
        s += "ν(" + sym.str() + ") = " + expr.pretty();
    }
    return s.empty() ? "all ν(·) = 1" : s + "; remaining ν(·) = 1";
}

inline nlohmann::json state_to_json(const StateVector& v) {
    nlohmann::json j = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        j.push_back({v(i).real(), v(i).imag()});
    }
    return j;
}

}  // namespace detail

/// `enumerate`: classify all experiments of one shape, one row per class.
inline ReportDocument cmd_enumerate(int qubits, int size, const CommandOptions& opts) {
    ReportDocument doc;
    auto result = enumerate_classes(qubits, size, opts.enumerate_options());
    TableDoc table;
    table.title = "GHZ-Mermin experiments: " + std::to_string(qubits) + " qubits, " +
                  std::to_string(size) + " elements -> " + std::to_string(result.classes.size()) +
                  " classes (" + std::to_string(result.experiment_count) + " experiments)";
    table.header = {"#", "label", "canonical form", "C", "R", "triads", "verdict"};
    for (std::size_t i = 0; i < result.classes.size(); ++i) {
        const auto& cls = result.classes[i];
        table.rows.push_back({std::to_string(i + 1), detail::labels_string(cls.labels),
                              cls.canonical.str(), std::to_string(cls.invariants.c),
                              "(" + detail::join_ints(cls.invariants.r) + ")",
                              detail::triad_counts(cls.invariants.triad),
                              cls.verdict.nontrivial() ? "nontrivial" : "trivial"});
    }
    doc.sections.push_back(std::move(table));
    doc.json = to_json(result);
    return doc;
}

/// `check`: validate one experiment and report invariants and the verdict.
/// Indices in the output refer to the element order as entered.
inline ReportDocument cmd_check(std::string_view experiment_text, const CommandOptions& opts) {
    ReportDocument doc;
    std::vector<PauliString> ordered;
    try {
        std::string text(experiment_text);
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
            while (!tok.empty() && tok.back() == ' ') tok.pop_back();
            if (!tok.empty()) {
                PauliString w = PauliString::parse(tok);
                if (std::find(ordered.begin(), ordered.end(), w) == ordered.end()) {
                    ordered.push_back(w);
                }
            }
        }
        if (ordered.empty()) {
            throw std::invalid_argument("no elements given");
        }
    } catch (const std::exception& ex) {
        doc.sections.push_back({"invalid experiment", {"error"}, {{ex.what()}}});
        doc.json = {{"valid", false}, {"error", ex.what()}};
        doc.exit_code = kExitMismatch;
        return doc;
    }

    auto validated = Experiment::try_validate(ordered);
    if (auto* issue = std::get_if<ValidationIssue>(&validated)) {
        doc.sections.push_back({"invalid experiment", {"error"}, {{issue->message}}});
        doc.json = {{"valid", false}, {"error", issue->message}};
        doc.exit_code = kExitMismatch;
        return doc;
    }
    const Experiment& e = std::get<Experiment>(validated);

    auto verdict = classify(std::span<const PauliString>(ordered));
    auto record = InvariantRecord::of(e);
    auto lookup = find_class_of(e, opts.enumerate_options());

    TableDoc info{"experiment", {"field", "value"}, {}};
    info.rows.push_back({"elements", [&] {
                             std::string s;
                             for (std::size_t i = 0; i < ordered.size(); ++i) {
                                 if (i) {
                                     s += ",";
                                 }
                                 s += ordered[i].str();
                             }
                             return s;
                         }()});
    info.rows.push_back({"canonical class", lookup.info.canonical.str()});
    info.rows.push_back({"class label", detail::labels_string(lookup.info.labels)});
    info.rows.push_back({"C", std::to_string(record.c)});
    info.rows.push_back({"R (canonical order)", "(" + detail::join_ints(record.r) + ")"});
    info.rows.push_back({"triads", detail::triad_counts(record.triad)});
    info.rows.push_back({"verdict", verdict.nontrivial() ? "nontrivial" : "trivial"});
    if (verdict.certificate) {
        std::string idx;
        for (std::size_t i : verdict.certificate->indices) {
            idx += (idx.empty() ? "" : ",") + std::to_string(i + 1);
        }
        info.rows.push_back({"certificate", "product over elements {" + idx + "} = " +
                                                (verdict.certificate->sign < 0 ? "-1" : "+1")});
    }
    if (verdict.assignment) {
        info.rows.push_back({"assignment", detail::assignment_pretty(*verdict.assignment)});
    }
    doc.sections.push_back(std::move(info));

    doc.json = {{"valid", true},
                {"elements", [&] {
                     nlohmann::json arr = nlohmann::json::array();
                     for (const auto& w : ordered) {
                         arr.push_back(w.str());
                     }
                     return arr;
                 }()},
                {"canonical", lookup.info.canonical.str()},
                {"c", record.c},
                {"r", record.r},
                {"triad_profile", record.triad},
                {"verdict", verdict_to_json(verdict)}};
    if (!lookup.info.labels.empty()) {
        doc.json["paper_label"] = detail::labels_string(lookup.info.labels);
    }
    return doc;
}

/// `eigen`: achievable eigenvalue vectors, or one joint eigenspace.
inline ReportDocument cmd_eigen(std::string_view experiment_text, const std::optional<std::vector<int>>& eps,
                                const CommandOptions& opts) {
    ReportDocument doc;
    std::vector<PauliString> ordered;
    try {
        std::string text(experiment_text);
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
            while (!tok.empty() && tok.back() == ' ') tok.pop_back();
            if (!tok.empty()) {
                PauliString w = PauliString::parse(tok);
                if (std::find(ordered.begin(), ordered.end(), w) == ordered.end()) {
                    ordered.push_back(w);
                }
            }
        }
        Experiment::validate(ordered);  // diagnostics only
    } catch (const std::exception& ex) {
        doc.sections.push_back({"invalid experiment", {"error"}, {{ex.what()}}});
        doc.json = {{"valid", false}, {"error", ex.what()}};
        doc.exit_code = kExitMismatch;
        return doc;
    }
    std::span<const PauliString> elems(ordered);

    if (!eps) {
        auto sectors = achievable_vectors(elems, opts.tol);
        TableDoc table{"achievable eigenvalue vectors", {"eps", "dim", "ghz"}, {}};
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& sector : sectors) {
            std::string ghz_flag = "-";
            nlohmann::json entry{{"eps", sector.eps}, {"dim", sector.dim}};
            if (sector.dim == 1 && ordered[0].size() == 4) {
                auto space = joint_eigenspace(elems, sector.eps, opts.tol);
                bool g = is_ghz_form(space.basis.at(0), std::max(opts.tol, 1e-8)).is_ghz();
                ghz_flag = g ? "yes" : "no";
                entry["ghz"] = g;
            }
            table.rows.push_back({detail::eps_string(sector.eps), std::to_string(sector.dim), ghz_flag});
            arr.push_back(std::move(entry));
        }
        doc.sections.push_back(std::move(table));
        doc.json = {{"experiment", experiment_text}, {"sectors", std::move(arr)}};
        return doc;
    }

    if (eps->size() != ordered.size()) {
        doc.sections.push_back({"error", {"error"}, {{"eps length does not match element count"}}});
        doc.json = {{"error", "eps length mismatch"}};
        doc.exit_code = kExitUsage;
        return doc;
    }
    auto space = joint_eigenspace(elems, *eps, opts.tol);
    if (space.status == JointEigenspace::Status::InconsistentEps) {
        std::string idx;
        for (std::size_t i : space.violated->indices) {
            idx += (idx.empty() ? "" : ",") + std::to_string(i + 1);
        }
        std::string msg = "no common eigenstate: elements {" + idx + "} multiply to " +
                          (space.violated->sign < 0 ? "-1" : "+1") +
                          " * identity, the requested eigenvalues multiply to the opposite sign";
        doc.sections.push_back({"joint eigenspace", {"result"}, {{msg}}});
        doc.json = {{"eps", *eps},
                    {"dim", 0},
                    {"consistent", false},
                    {"violated", {{"indices", [&] {
                                       nlohmann::json a = nlohmann::json::array();
                                       for (std::size_t i : space.violated->indices) {
                                           a.push_back(i + 1);
                                       }
                                       return a;
                                   }()},
                                  {"sign", space.violated->sign}}}};
        return doc;
    }

    TableDoc table{"joint eigenspace", {"field", "value"}, {}};
    table.rows.push_back({"dim", std::to_string(space.basis.size())});
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& v : space.basis) {
        basis.push_back(detail::state_to_json(v));
    }
    nlohmann::json report{{"eps", *eps}, {"dim", space.basis.size()}, {"consistent", true},
                          {"basis", std::move(basis)}};
    if (space.basis.size() == 1 && ordered[0].size() == 4) {
        auto ghz = is_ghz_form(space.basis[0], std::max(opts.tol, 1e-8));
        table.rows.push_back({"ghz", ghz.is_ghz() ? "yes" : "no"});
        report["ghz"] = ghz.is_ghz();
        if (ghz.decomposition) {
            nlohmann::json dec;
            dec["theta"] = ghz.decomposition->theta;
            dec["phi"] = ghz.decomposition->phi;
            dec["u"] = nlohmann::json::array();
            dec["v"] = nlohmann::json::array();
            for (int j = 0; j < 4; ++j) {
                dec["u"].push_back(detail::state_to_json(ghz.decomposition->u[j]));
                dec["v"].push_back(detail::state_to_json(ghz.decomposition->v[j]));
            }
            report["decomposition"] = std::move(dec);
            std::ostringstream osc;
            osc.precision(6);
            osc << "theta=" << ghz.decomposition->theta << " phi=" << ghz.decomposition->phi;
            table.rows.push_back({"decomposition", osc.str()});
        }
    }
    doc.sections.push_back(std::move(table));
    doc.json = std::move(report);
    return doc;
}

// ---- reference-table regeneration ----

struct TableDiff {
    std::string table_name;
    bool matches = true;
    std::vector<std::string> notes;  // one line per disagreement
};

/// Compares one shipped reference table against the freshly enumerated
/// classification of the same shape. Rows are compared as multisets of
/// (C, R-multiset); R tuples are order-free because element order is a
/// representation choice.
inline TableDiff diff_reference_table(const golden::ReferenceTable& table,
                                      const ClassificationResult& result) {
    TableDiff diff{std::string(table.name), true, {}};
    using Key = std::pair<int, std::vector<int>>;
    std::multiset<Key> expected, generated;
    for (const auto& row : table.rows) {
        std::vector<int> r(row.r.begin(), row.r.begin() + table.size);
        std::sort(r.begin(), r.end(), std::greater<int>());
        expected.insert({row.c, std::move(r)});
    }
    for (const auto& cls : result.classes) {
        generated.insert({cls.invariants.c, cls.invariants.r_sorted()});
    }
    if (table.rows.size() != result.classes.size()) {
        diff.matches = false;
        diff.notes.push_back("row count: reference lists " + std::to_string(table.rows.size()) +
                             " forms, enumeration yields " + std::to_string(result.classes.size()) +
                             " classes");
    }
    auto fmt = [](const Key& k) {
        std::string s = "C=" + std::to_string(k.first) + " R=(";
        for (std::size_t i = 0; i < k.second.size(); ++i) {
            s += (i ? "," : "") + std::to_string(k.second[i]);
        }
        return s + ")";
    };
    std::multiset<Key> missing, extra;
    std::set_difference(expected.begin(), expected.end(), generated.begin(), generated.end(),
                        std::inserter(missing, missing.end()));
    std::set_difference(generated.begin(), generated.end(), expected.begin(), expected.end(),
                        std::inserter(extra, extra.end()));
    for (const auto& k : missing) {
        diff.matches = false;
        diff.notes.push_back("reference row " + fmt(k) + " not reproduced by enumeration");
    }
    for (const auto& k : extra) {
        diff.matches = false;
        diff.notes.push_back("enumerated class " + fmt(k) + " has no matching reference row");
    }
    return diff;
}

/// `tables`: regenerate all six invariant tables and diff them against the
/// shipped reference copies. Exit status reflects the diff.
inline ReportDocument cmd_tables(const CommandOptions& opts,
                                 std::span<const golden::ReferenceTable> tables = golden::reference_tables()) {
    ReportDocument doc;
    nlohmann::json arr = nlohmann::json::array();
    bool all_match = true;
    for (const auto& ref : tables) {
        auto result = enumerate_classes(ref.sites, ref.size, opts.enumerate_options());
        TableDiff diff = diff_reference_table(ref, result);
        all_match = all_match && diff.matches;

        TableDoc table;
        table.title = std::string(ref.name) + " (" + std::to_string(ref.size) + "-element forms): " +
                      (diff.matches ? "match" : "MISMATCH");
        table.header = {"label", "C", "R"};
        for (const auto& row : ref.rows) {
            std::vector<int> r(row.r.begin(), row.r.begin() + ref.size);
            table.rows.push_back({std::string(row.label), std::to_string(row.c),
                                  "(" + detail::join_ints(r) + ")"});
        }
        for (const auto& note : diff.notes) {
            table.rows.push_back({"!", "", note});
        }
        doc.sections.push_back(std::move(table));

        nlohmann::json entry{{"table", std::string(ref.name)},
                             {"size", ref.size},
                             {"matches", diff.matches},
                             {"notes", diff.notes},
                             {"class_count", result.classes.size()},
                             {"reference_rows", ref.rows.size()}};
        arr.push_back(std::move(entry));
    }
    doc.json = {{"tables", std::move(arr)}, {"all_match", all_match}};
    doc.exit_code = all_match ? kExitOk : kExitMismatch;
    return doc;
}

/// `bell`: spectral and value-assignment bounds of the nine-term Bell
/// operator.
inline ReportDocument cmd_bell(const CommandOptions& opts) {
    ReportDocument doc;
    auto analysis = bell_analysis(opts.tol);
    auto ghz = is_ghz_form(analysis.maximizer, std::max(opts.tol, 1e-8));
    bool identity_ok = verify_bsquared_identity(kConstructionTol);

    TableDoc table{"Bell operator analysis", {"field", "value"}, {}};
    std::ostringstream qm;
    qm.precision(12);
    qm << analysis.quantum_max;
    table.rows.push_back({"quantum_max", qm.str()});
    table.rows.push_back({"degenerate", analysis.degenerate ? "yes" : "no"});
    table.rows.push_back({"maximizer_ghz", ghz.is_ghz() ? "yes" : "no"});
    table.rows.push_back({"classical_max", std::to_string(analysis.classical_max)});
    std::ostringstream bound;
    bound.precision(12);
    bound << analysis.advertised_bound;
    table.rows.push_back({"advertised_bound", bound.str()});
    table.rows.push_back({"note", "the advertised bound equals the quantum maximum; the exhaustive "
                                  "value-assignment bound is " +
                                      std::to_string(analysis.classical_max) + ", strictly smaller"});
    table.rows.push_back({"bsquared_identity", identity_ok ? "holds" : "FAILS"});
    doc.sections.push_back(std::move(table));

    doc.json = {{"quantum_max", analysis.quantum_max},
                {"degenerate", analysis.degenerate},
                {"maximizer_ghz", ghz.is_ghz()},
                {"maximizer", detail::state_to_json(analysis.maximizer)},
                {"classical_max", analysis.classical_max},
                {"advertised_bound", analysis.advertised_bound},
                {"bound_discrepancy",
                 "advertised bound equals the quantum maximum; exhaustive value-assignment bound is " +
                     std::to_string(analysis.classical_max)},
                {"bsquared_identity", identity_ok}};
    return doc;
}

}  // namespace ghz

#endif
