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

#ifndef GHZ_SYMMETRY_HPP
#define GHZ_SYMMETRY_HPP

#include <numeric>
#include <random>

#include "ghz/experiment.hpp"

namespace ghz {

namespace detail {

// The six permutations of {X,Y,Z}, lexicographic.
inline constexpr std::array<std::array<std::uint8_t, 3>, 6> kAxisPerms = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

/// Invokes fn(site_perm, axis_lut_per_site) for every element of the
/// equivalence group: all n! qubit permutations combined with an independent
/// axis permutation at each site (n! * 6^n elements). site_perm maps old site
/// index to new site index; luts[j] relabels the axis at new site j.
template <typename Fn>
void for_each_group_element(std::size_t n, Fn&& fn) {
    if (n > 6) {
        throw std::invalid_argument("group scan limited to 6 sites (6^n * n! elements)");
    }
    std::vector<std::uint8_t> site_perm(n);
    std::iota(site_perm.begin(), site_perm.end(), 0);
    std::vector<std::uint8_t> odo(n, 0);
    std::vector<std::array<std::uint8_t, 3>> luts(n);
    do {
        std::fill(odo.begin(), odo.end(), 0);
        for (std::size_t j = 0; j < n; ++j) {
            luts[j] = kAxisPerms[0];
        }
        while (true) {
            fn(site_perm, luts);
            std::size_t j = 0;
            while (j < n && odo[j] == 5) {
                odo[j] = 0;
                luts[j] = kAxisPerms[0];
                ++j;
            }
            if (j == n) {
                break;
            }
            ++odo[j];
            luts[j] = kAxisPerms[odo[j]];
        }
    } while (std::next_permutation(site_perm.begin(), site_perm.end()));
}

}  // namespace detail

/// A qubit permutation paired with one axis relabeling per site. Acting on a
/// word first moves site i to site qubit_perm[i], then applies axis_perms[j]
/// to the letter now at site j.
struct SymmetryElement {
    std::vector<std::uint8_t> qubit_perm;
    std::vector<std::array<std::uint8_t, 3>> axis_perms;

    static SymmetryElement identity(std::size_t n) {
        SymmetryElement g;
        g.qubit_perm.resize(n);
        std::iota(g.qubit_perm.begin(), g.qubit_perm.end(), 0);
        g.axis_perms.assign(n, detail::kAxisPerms[0]);
        return g;
    }

    template <typename Rng>
    static SymmetryElement random(std::size_t n, Rng& rng) {
        SymmetryElement g = identity(n);
        std::shuffle(g.qubit_perm.begin(), g.qubit_perm.end(), rng);
        std::uniform_int_distribution<int> pick(0, 5);
        for (auto& p : g.axis_perms) {
            p = detail::kAxisPerms[pick(rng)];
        }
        return g;
    }

    std::size_t sites() const { return qubit_perm.size(); }

    /// g.then_after(h) = g o h (h acts first).
    SymmetryElement compose_after(const SymmetryElement& h) const {
        if (sites() != h.sites()) {
            throw std::invalid_argument("composing symmetry elements of different site counts");
        }
        const std::size_t n = sites();
        SymmetryElement out = identity(n);
        for (std::size_t i = 0; i < n; ++i) {
            out.qubit_perm[i] = qubit_perm[h.qubit_perm[i]];
        }
        // Letter at final site k passed through h's lut at site j = h.qubit_perm[i],
        // then this->lut at k = qubit_perm[j].
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t k = qubit_perm[j];
            for (int a = 0; a < 3; ++a) {
                out.axis_perms[k][a] = axis_perms[k][h.axis_perms[j][a]];
            }
        }
        return out;
    }

    SymmetryElement inverse() const {
        const std::size_t n = sites();
        SymmetryElement out = identity(n);
        for (std::size_t i = 0; i < n; ++i) {
            out.qubit_perm[qubit_perm[i]] = static_cast<std::uint8_t>(i);
        }
        for (std::size_t i = 0; i < n; ++i) {
            // out.axis_perms acts at new site i; undo this->axis_perms[qubit_perm[i]].
            const auto& p = axis_perms[qubit_perm[i]];
            for (int a = 0; a < 3; ++a) {
                out.axis_perms[i][p[a]] = static_cast<std::uint8_t>(a);
            }
        }
        return out;
    }

    friend bool operator==(const SymmetryElement&, const SymmetryElement&) = default;
};

inline PauliString act(const SymmetryElement& g, const PauliString& w) {
    if (g.sites() != w.size()) {
        throw std::invalid_argument("symmetry element and word have different site counts");
    }
    const std::size_t n = w.size();
    std::vector<Axis> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[g.qubit_perm[i]] = w[i];
    }
    for (std::size_t j = 0; j < n; ++j) {
        out[j] = static_cast<Axis>(g.axis_perms[j][static_cast<int>(out[j])]);
    }
    return PauliString(std::move(out));
}

/// Group action on an experiment. Validity is preserved by construction; the
/// result is revalidated anyway.
inline Experiment act(const SymmetryElement& g, const Experiment& e) {
    if (g.sites() != e.sites()) {
        throw std::invalid_argument("symmetry element and experiment have different site counts");
    }
    std::vector<PauliString> words;
    words.reserve(e.size());
    for (const auto& w : e.elements()) {
        words.push_back(act(g, w));
    }
    auto v = Experiment::try_validate(std::move(words));
    if (std::holds_alternative<ValidationIssue>(v)) {
        throw std::logic_error("group action broke experiment validity: " +
                               std::get<ValidationIssue>(v).message);
    }
    return std::get<Experiment>(std::move(v));
}

namespace detail {

/// Letters of an experiment as a k x n byte matrix, row-sorted image codes.
/// Comparing packed codes (2 bits per site, site 1 most significant) equals
/// lexicographic word comparison because X<Y<Z maps to 0<1<2.
inline std::uint32_t pack_letters(const std::uint8_t* letters, std::size_t n) {
    std::uint32_t code = 0;
    for (std::size_t j = 0; j < n; ++j) {
        code = (code << 2) | letters[j];
    }
    return code;
}

inline std::vector<std::uint32_t> min_orbit_image(const std::vector<std::vector<std::uint8_t>>& letters,
                                                  std::size_t n) {
    const std::size_t k = letters.size();
    std::vector<std::uint32_t> best;
    std::vector<std::uint32_t> cur(k);
    std::vector<std::vector<std::uint8_t>> moved(k, std::vector<std::uint8_t>(n));
    std::vector<std::uint8_t> site_perm(n);
    std::iota(site_perm.begin(), site_perm.end(), 0);
    do {
        for (std::size_t e = 0; e < k; ++e) {
            for (std::size_t i = 0; i < n; ++i) {
                moved[e][site_perm[i]] = letters[e][i];
            }
        }
        std::vector<std::uint8_t> odo(n, 0);
        std::vector<const std::uint8_t*> lut(n, kAxisPerms[0].data());
        while (true) {
            for (std::size_t e = 0; e < k; ++e) {
                std::uint32_t code = 0;
                const auto& row = moved[e];
                for (std::size_t j = 0; j < n; ++j) {
                    code = (code << 2) | lut[j][row[j]];
                }
                cur[e] = code;
            }
            std::sort(cur.begin(), cur.end());
            if (best.empty() || cur < best) {
                best = cur;
            }
            std::size_t j = 0;
            while (j < n && odo[j] == 5) {
                odo[j] = 0;
                lut[j] = kAxisPerms[0].data();
                ++j;
            }
            if (j == n) {
                break;
            }
            ++odo[j];
            lut[j] = kAxisPerms[odo[j]].data();
        }
    } while (std::next_permutation(site_perm.begin(), site_perm.end()));
    return best;
}

inline std::vector<std::vector<std::uint8_t>> experiment_letters(const Experiment& e) {
    std::vector<std::vector<std::uint8_t>> letters(e.size(), std::vector<std::uint8_t>(e.sites()));
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = 0; j < e.sites(); ++j) {
            letters[i][j] = static_cast<std::uint8_t>(e[i][j]);
        }
    }
    return letters;
}

inline PauliString unpack_code(std::uint32_t code, std::size_t n) {
    std::vector<Axis> axes(n);
    for (std::size_t j = 0; j < n; ++j) {
        axes[n - 1 - j] = static_cast<Axis>(code & 3);
        code >>= 2;
    }
    return PauliString(std::move(axes));
}

}  // namespace detail

/// The lexicographically least image of e over the whole group, by exhaustive
/// orbit minimization (n! * 6^n images; ~31k at four sites). Idempotent and
/// constant on orbits, hence a complete equivalence invariant.
inline Experiment canonical_form(const Experiment& e) {
    if (e.sites() > 6) {
        throw std::invalid_argument("canonical_form limited to 6 sites");
    }
    auto best = detail::min_orbit_image(detail::experiment_letters(e), e.sites());
    std::vector<PauliString> words;
    words.reserve(best.size());
    for (std::uint32_t code : best) {
        words.push_back(detail::unpack_code(code, e.sites()));
    }
    return Experiment::validate(std::move(words));
}

/// Equivalence under qubit permutations and per-site axis relabelings.
/// Defined only within equal site counts; experiments of different element
/// counts are never equivalent (the group preserves element count).
inline bool equivalent(const Experiment& a, const Experiment& b) {
    if (a.sites() != b.sites()) {
        throw std::invalid_argument("equivalence is defined only for equal site counts");
    }
    if (a.size() != b.size()) {
        return false;
    }
    return canonical_form(a) == canonical_form(b);
}

}  // namespace ghz

#endif
