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
// Shipped reference data: the classically labeled forms of four-qubit
// GHZ-Mermin experiments, the published invariant tables for them, and the
// published parametric value assignments. Labels are attached to enumerated
// classes by equivalence, never by string equality, so they survive any
// change of canonical representative. The table data is shipped verbatim as
// printed; the tables subcommand diffs freshly computed invariants against
// it and reports every disagreement.

#ifndef GHZ_GOLDEN_HPP
#define GHZ_GOLDEN_HPP

#include <string_view>

#include "ghz/lhv.hpp"

namespace ghz::golden {

struct LabeledForm {
    std::string_view label;
    std::string_view elements;  // comma-separated words, in the originally listed order
};

/// The reference forms, listed element order preserved.
inline constexpr LabeledForm kForms[] = {
    // four qubits, three elements
    {"(2.7)", "xxxx,yyxx,xxyy"},
    {"(2.8)", "xxxx,yyxx,zzyy"},
    {"(2.9)", "xxxx,yyyy,zzzz"},
    // four elements
    {"(3.1)", "xxxx,yyxx,zzxx,xxyy"},
    {"(3.2)", "xxxx,yyxx,yxyx,xxyy"},
    {"(3.3)", "xxxx,yyxx,yxyx,yxxy"},
    {"(3.4)", "xxxx,yyxx,yxyx,zzzy"},
    {"(3.5)", "xxxx,yyxx,xxyy,yyyy"},
    {"(3.6)", "xxxx,yyxx,xxyy,zzyy"},
    {"(3.7)", "xxxx,yyxx,xxyy,zzzz"},
    {"(3.8)", "xxxx,yyxx,zzyy,zzzz"},
    // five elements
    {"(4A.1)", "xxxx,yyxx,zzxx,xxyy,xxzz"},
    {"(4A.2)", "xxxx,yyxx,zzxx,xxyy,yyyy"},
    {"(4A.3)", "xxxx,yyxx,zzxx,xxyy,yyzz"},
    {"(4A.4)", "xxxx,yyxx,yxyx,xxyy,yxxy"},
    {"(4A.5)", "xxxx,yyxx,yxyx,xxyy,xyxy"},
    {"(4A.6)", "xxxx,yyxx,yxyx,xxyy,zzzz"},
    {"(4A.7)", "xxxx,yyxx,yxyx,yxxy,zzzz"},
    {"(4A.8)", "xxxx,yyxx,yxyx,zzzy,xyyx"},
    {"(4A.9)", "xxxx,yyxx,xxyy,yyyy,zzzz"},
    {"(4A.10)", "xxxx,yyxx,xxyy,zzyy,yyzz"},
    {"(4A.11)", "xxxx,yyxx,xxyy,zzzz,yyzz"},
    // six elements
    {"(4B.1)", "xxxx,yyxx,zzxx,xxyy,xxzz,yyyy"},
    {"(4B.2)", "xxxx,yyxx,zzxx,xxyy,yyyy,zzyy"},
    {"(4B.3)", "xxxx,yyxx,zzxx,xxyy,yyyy,zzzz"},
    {"(4B.4)", "xxxx,yyxx,zzxx,xxyy,yyzz,zzzz"},
    {"(4B.5)", "xxxx,yyxx,yxyx,xxyy,yxxy,xyyx"},
    {"(4B.6)", "xxxx,yyxx,yxyx,xxyy,yxxy,zzzz"},
    {"(4B.7)", "xxxx,yyxx,yxyx,xxyy,xyxy,yyyy"},
    {"(4B.8)", "xxxx,yyxx,yxyx,xxyy,xyxy,zzzz"},
    {"(4B.9)", "xxxx,yyxx,xxyy,zzyy,yyzz,zzzz"},
    // seven elements
    {"(4C.1)", "xxxx,yyxx,zzxx,xxyy,xxzz,yyyy,zzzz"},
    {"(4C.2)", "xxxx,yyxx,zzxx,xxyy,xxzz,yyyy,zzyy"},
    {"(4C.3)", "xxxx,yyxx,yxyx,xxyy,yxxy,xyyx,xyxy"},
    {"(4C.4)", "xxxx,yyxx,yxyx,xxyy,yxxy,xyyx,zzzz"},
    {"(4C.5)", "xxxx,yyxx,yxyx,xxyy,xyxy,yyyy,zzzz"},
    // eight elements
    {"(4D.1)", "xxxx,yyxx,zzxx,xxyy,xxzz,yyyy,zzzz,yyzz"},
    {"(4D.2)", "xxxx,yyxx,yxyx,xxyy,yxxy,xyyx,xyxy,yyyy"},
    {"(4D.3)", "xxxx,yyxx,yxyx,xxyy,yxxy,xyyx,xyxy,zzzz"},
    // nine elements
    {"(5.1)", "xxxx,yyxx,zzxx,xxyy,xxzz,yyyy,zzzz,yyzz,zzyy"},
    {"(5.2)", "xxxx,yyxx,yxyx,xxyy,yxxy,xyyx,xyxy,yyyy,zzzz"},
    // three qubits: the Mermin experiment
    {"(M)", "xxx,xyy,yxy,yyx"},
};

struct TableRow {
    std::string_view label;
    int c;
    std::array<int, 9> r;  // first `size` entries meaningful
};

struct ReferenceTable {
    std::string_view name;
    int sites;
    int size;  // elements per experiment
    std::span<const TableRow> rows;
};

// Invariant tables, shipped exactly as printed.
inline constexpr TableRow kTableI[] = {
    {"(3.1)", 2, {3, 2, 2, 1}}, {"(3.2)", 0, {3, 2, 3, 2}}, {"(3.3)", 0, {3, 3, 3, 3}},
    {"(3.4)", 3, {2, 2, 2, 0}}, {"(3.5)", 0, {2, 2, 2, 2}}, {"(3.6)", 2, {2, 1, 2, 1}},
    {"(3.7)", 4, {2, 1, 1, 0}}, {"(3.8)", 4, {1, 1, 1, 1}},
};
inline constexpr TableRow kTableIII[] = {
    {"(4A.1)", 4, {4, 2, 2, 2, 2}},  {"(4A.2)", 2, {3, 3, 2, 2, 2}}, {"(4A.3)", 4, {3, 3, 2, 1, 1}},
    {"(4A.4)", 0, {4, 3, 4, 3, 4}},  {"(4A.5)", 0, {4, 3, 3, 3, 3}}, {"(4A.6)", 4, {3, 2, 3, 2, 0}},
    {"(4A.7)", 4, {3, 3, 3, 3, 0}},  {"(4A.8)", 3, {3, 3, 3, 0, 3}}, {"(4A.9)", 4, {2, 2, 2, 2, 0}},
    {"(4A.10)", 4, {2, 2, 2, 1, 1}}, {"(4A.11)", 4, {2, 2, 1, 1, 2}},
};
inline constexpr TableRow kTableV[] = {
    {"(4B.1)", 4, {4, 3, 2, 3, 2, 2}}, {"(4B.2)", 2, {3, 3, 3, 3, 3, 3}}, {"(4B.3)", 4, {3, 3, 3, 2, 2, 1}},
    {"(4B.4)", 4, {3, 3, 3, 1, 2, 2}}, {"(4B.5)", 0, {5, 4, 5, 4, 4, 4}}, {"(4B.6)", 4, {4, 3, 4, 3, 4, 0}},
    {"(4B.7)", 0, {4, 4, 4, 4, 4, 4}}, {"(4B.8)", 4, {4, 3, 3, 3, 3, 0}}, {"(4B.9)", 4, {2, 2, 2, 2, 2, 2}},
};
inline constexpr TableRow kTableVI[] = {
    {"(4C.1)", 4, {4, 3, 3, 3, 3, 2, 2}}, {"(4C.2)", 4, {4, 3, 3, 4, 2, 3, 3}},
    {"(4C.3)", 0, {6, 5, 5, 5, 5, 5, 5}}, {"(4C.4)", 4, {5, 4, 5, 4, 4, 4, 0}},
    {"(4C.5)", 4, {4, 4, 4, 4, 4, 4, 0}},
};
inline constexpr TableRow kTableVII[] = {
    {"(4D.1)", 4, {4, 4, 3, 2, 4, 3, 3, 4}},
    {"(4D.2)", 0, {6, 6, 6, 6, 6, 6, 6, 6}},
    {"(4D.3)", 4, {6, 5, 5, 5, 5, 5, 5, 0}},
};
inline constexpr TableRow kTableVIII[] = {
    {"(5.1)", 4, {4, 4, 4, 4, 4, 4, 4, 4, 4}},
    {"(5.2)", 4, {6, 6, 6, 6, 6, 6, 6, 6, 0}},
};

inline const std::array<ReferenceTable, 6>& reference_tables() {
    static const std::array<ReferenceTable, 6> tables = {{
        {"Table I", 4, 4, kTableI},
        {"Table III", 4, 5, kTableIII},
        {"Table V", 4, 6, kTableV},
        {"Table VI", 4, 7, kTableVI},
        {"Table VII", 4, 8, kTableVII},
        {"Table VIII", 4, 9, kTableVIII},
    }};
    return tables;
}

/// Published parametric value assignments for the trivial reference forms,
/// eps indices numbered by the forms' listed element order. Entries are
/// "symbol=expr" pairs; all other symbols take the value 1.
struct ReferenceAssignment {
    std::string_view label;
    std::string_view entries;  // e.g. "x1=e1 y1=e2 y3=e1e3"
};

inline constexpr ReferenceAssignment kAssignments[] = {
    {"(3.1)", "x1=e1 y1=e2 z1=e3 y3=e1e4"},
    {"(3.2)", "x1=e1 y2=e2e3 y1=e3 y4=e1e4"},
    {"(3.3)", "x1=e1 y2=e2 y3=e3 y4=e4"},
    {"(3.4)", "x1=e1 y2=e2 y3=e3 z1=e4"},
    {"(3.5)", "x1=e1 y1=e2 y3=e1e3"},
    {"(3.6)", "x1=e1 y1=e2 y3=e1e3 z1=e1e3e4"},
    {"(3.7)", "x1=e1 y1=e2 y3=e1e3 z1=e4"},
    {"(3.8)", "x1=e1 y1=e2 y3=e3 z3=e4"},
    {"(4A.1)", "x1=e1 y1=e2 z1=e3 y3=e1e4 z3=e1e5"},
    {"(4A.3)", "x1=e1 y1=e2 z1=e3 y3=e1e4 z3=e2e5"},
    {"(4A.6)", "x1=e1 y2=e2 y3=e3 y4=e1e3e4 z1=e5"},
    {"(4A.7)", "x1=e1 y2=e2 y3=e3 y4=e4 z1=e5"},
    {"(4A.10)", "x1=e1 y1=e2 y3=e1e3 z1=e1e3e4 z3=e2e5"},
    {"(4A.11)", "x1=e1 y1=e2 y3=e1e3 z1=e2e4e5 z3=e2e5"},
};

/// Parses "x1=e1 y3=e1e4" into a ValueAssignment (sites 1-based in the text).
inline ValueAssignment parse_assignment(std::string_view text) {
    ValueAssignment a;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && text[pos] == ' ') {
            ++pos;
        }
        std::size_t end = text.find(' ', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view tok = text.substr(pos, end - pos);
        pos = end;
        if (tok.empty()) {
            continue;
        }
        std::size_t eq = tok.find('=');
        if (eq == std::string_view::npos || eq < 2) {
            throw std::invalid_argument("bad assignment token: " + std::string(tok));
        }
        auto axis = axis_from_char(tok[0]);
        if (!axis) {
            throw std::invalid_argument("bad symbol in assignment token: " + std::string(tok));
        }
        int site = std::stoi(std::string(tok.substr(1, eq - 1)));
        EpsExpr expr;
        std::string_view rhs = tok.substr(eq + 1);
        std::size_t i = 0;
        if (i < rhs.size() && rhs[i] == '-') {
            expr.negative = true;
            ++i;
        }
        if (rhs.substr(i) == "1") {
            i = rhs.size();
        }
        while (i < rhs.size()) {
            if (rhs[i] != 'e') {
                throw std::invalid_argument("bad eps expression: " + std::string(rhs));
            }
            std::size_t d = i + 1;
            while (d < rhs.size() && rhs[d] >= '0' && rhs[d] <= '9') {
                ++d;
            }
            expr.eps.push_back(std::stoul(std::string(rhs.substr(i + 1, d - i - 1))) - 1);
            i = d;
        }
        std::sort(expr.eps.begin(), expr.eps.end());
        a.entries[{static_cast<std::uint8_t>(site - 1), *axis}] = std::move(expr);
    }
    return a;
}

}  // namespace ghz::golden

#endif
