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

#ifndef GHZ_LHV_HPP
#define GHZ_LHV_HPP

#include <bit>
#include <map>

#include "ghz/experiment.hpp"

namespace ghz {

/// A local observable symbol: the axis measured at one site. site is 0-based.
struct ObservableSymbol {
    std::uint8_t site;
    Axis axis;
    friend auto operator<=>(const ObservableSymbol&, const ObservableSymbol&) = default;

    /// 1-based rendering, e.g. "y3".
    std::string str() const {
        return std::string(1, axis_char(axis)) + std::to_string(site + 1);
    }
};

/// A subset of experiment elements whose site-wise axis multiplicities are
/// all even. Such a selection multiplies to +-identity; sign records which.
/// Because every symbol occurs an even number of times across the subset, any
/// +-1 value assignment forces the product of the selected eigenvalues to +1,
/// so a subset of sign -1 certifies that no assignment exists.
///
/// Indices are 0-based and refer to the element ordering the subset was
/// computed against (canonical order for the Experiment overloads).
struct IdentitySubset {
    std::vector<std::size_t> indices;
    int sign = +1;

    std::uint32_t mask() const {
        std::uint32_t m = 0;
        for (std::size_t i : indices) {
            m |= 1u << i;
        }
        return m;
    }
};

/// A formal +-1 expression: an optional minus sign times a product of
/// eigenvalue symbols eps_i (0-based indices).
struct EpsExpr {
    bool negative = false;
    std::vector<std::size_t> eps;  // ascending

    bool is_one() const { return !negative && eps.empty(); }

    /// Machine form: "1", "e1e3", "-e2".
    std::string str() const {
        if (eps.empty()) {
            return negative ? "-1" : "1";
        }
        std::string s = negative ? "-" : "";
        for (std::size_t i : eps) {
            s += "e" + std::to_string(i + 1);
        }
        return s;
    }

    /// Text form with epsilon glyphs.
    std::string pretty() const {
        if (eps.empty()) {
            return negative ? "-1" : "1";
        }
        std::string s = negative ? "-" : "";
        for (std::size_t i : eps) {
            s += "ε";
            for (char d : std::to_string(i + 1)) {
                static const char* sub[] = {"₀", "₁", "₂", "₃", "₄",
                                            "₅", "₆", "₇", "₈", "₉"};
                s += sub[d - '0'];
            }
        }
        return s;
    }
};

/// A parametric EPR value assignment: nu(symbol) for the symbols that do not
/// take the default value 1.
struct ValueAssignment {
    std::map<ObservableSymbol, EpsExpr> entries;

    EpsExpr value_of(ObservableSymbol s) const {
        auto it = entries.find(s);
        return it == entries.end() ? EpsExpr{} : it->second;
    }
};

struct TrivialityVerdict {
    enum class Kind { Trivial, Nontrivial };
    Kind kind;
    std::optional<ValueAssignment> assignment;   // present when Trivial
    std::optional<IdentitySubset> certificate;   // present when Nontrivial

    bool nontrivial() const { return kind == Kind::Nontrivial; }
};

namespace detail {

// Per-element parity fingerprints. xor over a subset being zero means:
//  * symbol masks: every (site, axis) symbol occurs an even number of times;
//  * gf2 masks: the site-wise products all cancel to the identity
//    (x=(1,0), y=(1,1), z=(0,1) in the standard two-bit encoding).
inline std::vector<std::uint64_t> symbol_parity_masks(std::span<const PauliString> elems) {
    std::vector<std::uint64_t> masks(elems.size(), 0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j < elems[i].size(); ++j) {
            masks[i] ^= 1ull << (3 * j + static_cast<int>(elems[i][j]));
        }
    }
    return masks;
}

inline std::vector<std::uint64_t> gf2_residual_masks(std::span<const PauliString> elems) {
    static constexpr std::uint64_t enc[3] = {0b01, 0b11, 0b10};  // x, y, z
    std::vector<std::uint64_t> masks(elems.size(), 0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j < elems[i].size(); ++j) {
            masks[i] ^= enc[static_cast<int>(elems[i][j])] << (2 * j);
        }
    }
    return masks;
}

inline int subset_sign(std::span<const PauliString> elems, std::uint32_t mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (mask >> i & 1u) {
            idx.push_back(i);
        }
    }
    ProductResult p = subset_product(elems, idx);
    if (!p.is_identity_word() || !p.phase.is_real()) {
        throw std::logic_error("selection does not multiply to +-identity");
    }
    return p.phase.sign();
}

inline std::vector<IdentitySubset> scan_subsets(std::span<const PauliString> elems,
                                                const std::vector<std::uint64_t>& parity) {
    const std::size_t m = elems.size();
    if (m > 20) {
        throw std::invalid_argument("subset scan limited to 20 elements");
    }
    // acc[mask] = xor of parity over mask, built from mask minus its lowest bit.
    std::vector<std::uint64_t> acc(std::size_t(1) << m, 0);
    std::vector<IdentitySubset> out;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::uint32_t low = mask & (mask - 1);
        acc[mask] = acc[low] ^ parity[std::countr_zero(mask)];
        if (acc[mask] == 0) {
            IdentitySubset s;
            for (std::size_t i = 0; i < m; ++i) {
                if (mask >> i & 1u) {
                    s.indices.push_back(i);
                }
            }
            s.sign = subset_sign(elems, mask);
            out.push_back(std::move(s));
        }
    }
    return out;
}

struct Gf2Basis {
    std::map<int, std::uint64_t> by_lead;  // leading-bit index -> basis row

    std::uint64_t reduce(std::uint64_t v) const {
        while (v) {
            int lead = 63 - std::countl_zero(v);
            auto it = by_lead.find(lead);
            if (it == by_lead.end()) {
                break;
            }
            v ^= it->second;
        }
        return v;
    }
    void insert(std::uint64_t v) {
        v = reduce(v);
        if (v) {
            by_lead[63 - std::countl_zero(v)] = v;
        }
    }
};

inline EpsExpr expr_from_bits(std::uint64_t bits, std::size_t m) {
    EpsExpr ex;
    ex.negative = (bits >> m) & 1u;
    for (std::size_t i = 0; i < m; ++i) {
        if (bits >> i & 1u) {
            ex.eps.push_back(i);
        }
    }
    return ex;
}

inline std::uint64_t expr_to_bits(const EpsExpr& ex, std::size_t m) {
    std::uint64_t bits = ex.negative ? (std::uint64_t(1) << m) : 0;
    for (std::size_t i : ex.eps) {
        if (i >= m) {
            throw std::invalid_argument("eps index out of range in expression");
        }
        bits |= std::uint64_t(1) << i;
    }
    return bits;
}

}  // namespace detail

inline std::vector<ObservableSymbol> symbols_of(std::span<const PauliString> elems) {
    std::set<ObservableSymbol> set;
    for (const auto& w : elems) {
        for (std::size_t j = 0; j < w.size(); ++j) {
            set.insert({static_cast<std::uint8_t>(j), w[j]});
        }
    }
    return {set.begin(), set.end()};
}

inline std::vector<ObservableSymbol> symbols_of(const Experiment& e) {
    return symbols_of(std::span(e.elements()));
}

/// All non-empty subsets whose site-wise axis multiplicities are all even,
/// each with its exact product sign. These are the subsets whose eigenvalue
/// products every EPR value assignment forces to +1. Exhaustive 2^m scan;
/// deterministic ascending-mask order. Indices refer to the given ordering.
inline std::vector<IdentitySubset> identity_subsets(std::span<const PauliString> elems) {
    return detail::scan_subsets(elems, detail::symbol_parity_masks(elems));
}

inline std::vector<IdentitySubset> identity_subsets(const Experiment& e) {
    return identity_subsets(std::span(e.elements()));
}

/// All non-empty subsets whose operator product is +-identity, with signs.
/// A superset of identity_subsets: a site can also cancel with all three axes
/// appearing an odd number of times. These subsets constrain which eigenvalue
/// vectors possess a joint eigenstate at all.
inline std::vector<IdentitySubset> operator_identities(std::span<const PauliString> elems) {
    return detail::scan_subsets(elems, detail::gf2_residual_masks(elems));
}

inline std::vector<IdentitySubset> operator_identities(const Experiment& e) {
    return operator_identities(std::span(e.elements()));
}

/// Verifies a parametric assignment: every element's site-wise product of
/// assigned values must reduce to eps_i, where reduction may use the relation
/// prod_{i in S} eps_i = sign(S) for each supplied subset. Symbols absent from
/// the assignment take the value 1; symbols absent from the experiment are
/// rejected.
inline bool check_assignment(std::span<const PauliString> elems, const ValueAssignment& a,
                             std::span<const IdentitySubset> subsets) {
    const std::size_t m = elems.size();
    auto syms = symbols_of(elems);
    for (const auto& [sym, expr] : a.entries) {
        if (!std::binary_search(syms.begin(), syms.end(), sym)) {
            throw std::invalid_argument("assignment references unknown symbol " + sym.str());
        }
        (void)expr;
    }
    detail::Gf2Basis relations;
    for (const auto& s : subsets) {
        std::uint64_t v = s.sign < 0 ? (std::uint64_t(1) << m) : 0;
        for (std::size_t i : s.indices) {
            v |= std::uint64_t(1) << i;
        }
        relations.insert(v);
    }
    for (std::size_t i = 0; i < m; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < elems[i].size(); ++j) {
            ObservableSymbol sym{static_cast<std::uint8_t>(j), elems[i][j]};
            auto it = a.entries.find(sym);
            if (it != a.entries.end()) {
                acc ^= detail::expr_to_bits(it->second, m);
            }
        }
        std::uint64_t diff = acc ^ (std::uint64_t(1) << i);
        if (relations.reduce(diff) != 0) {
            return false;
        }
    }
    return true;
}

inline bool check_assignment(const Experiment& e, const ValueAssignment& a,
                             std::span<const IdentitySubset> subsets) {
    return check_assignment(std::span(e.elements()), a, subsets);
}

/// Decides trivial vs. nontrivial for an ordered element list.
///
/// Nontrivial iff some identity subset carries sign -1: on every joint
/// eigenstate the selected eigenvalues multiply to -1, while any value
/// assignment forces +1. Otherwise a parametric assignment is produced by
/// GF(2) elimination over the occurring symbols, the formal eps symbols
/// carried through an augmented block; free symbols are fixed to 1.
inline TrivialityVerdict classify(std::span<const PauliString> elems) {
    const std::size_t m = elems.size();
    auto evens = identity_subsets(elems);
    for (const auto& s : evens) {
        if (s.sign < 0) {
            return {TrivialityVerdict::Kind::Nontrivial, std::nullopt, s};
        }
    }

    auto syms = symbols_of(elems);
    const std::size_t ns = syms.size();
    std::map<ObservableSymbol, std::size_t> sym_index;
    for (std::size_t i = 0; i < ns; ++i) {
        sym_index[syms[i]] = i;
    }

    struct Row {
        std::uint64_t sym = 0;  // coefficient bits over symbols
        std::uint64_t rhs = 0;  // formal eps bits
    };
    std::vector<Row> rows(m);
    for (std::size_t i = 0; i < m; ++i) {
        rows[i].rhs = std::uint64_t(1) << i;
        for (std::size_t j = 0; j < elems[i].size(); ++j) {
            rows[i].sym ^= std::uint64_t(1) << sym_index[{static_cast<std::uint8_t>(j), elems[i][j]}];
        }
    }

    // All even subsets have sign +1 here, so the eps relations are linear.
    detail::Gf2Basis relations;
    for (const auto& s : evens) {
        std::uint64_t v = 0;
        for (std::size_t i : s.indices) {
            v |= std::uint64_t(1) << i;
        }
        relations.insert(v);
    }

    // Gauss-Jordan over symbol columns.
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (column, row)
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ns && rank < rows.size(); ++col) {
        std::size_t r = rank;
        while (r < rows.size() && !(rows[r].sym >> col & 1u)) {
            ++r;
        }
        if (r == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[r]);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k != rank && (rows[k].sym >> col & 1u)) {
                rows[k].sym ^= rows[rank].sym;
                rows[k].rhs ^= rows[rank].rhs;
            }
        }
        pivots.emplace_back(col, rank);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r) {
        if (relations.reduce(rows[r].rhs) != 0) {
            throw std::logic_error("dependent eigenvalue combination not generated by even subsets");
        }
    }

    ValueAssignment assignment;
    for (auto [col, r] : pivots) {
        std::uint64_t rhs = relations.reduce(rows[r].rhs);
        if (rhs == 0) {
            continue;  // nu = 1, left implicit
        }
        assignment.entries[syms[col]] = detail::expr_from_bits(rhs, m);
    }
    if (!check_assignment(elems, assignment, evens)) {
        throw std::logic_error("solver produced an assignment that fails verification");
    }
    return {TrivialityVerdict::Kind::Trivial, std::move(assignment), std::nullopt};
}

inline TrivialityVerdict classify(const Experiment& e) {
    return classify(std::span(e.elements()));
}

}  // namespace ghz

#endif
