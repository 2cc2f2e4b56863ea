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

#ifndef GHZ_PAULI_HPP
#define GHZ_PAULI_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ghz {

/// One of the three spin axes at a site. The order X < Y < Z is fixed and is
/// the order used by every lexicographic comparison in the library.
enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline char axis_char(Axis a) {
    return "xyz"[static_cast<int>(a)];
}

inline std::optional<Axis> axis_from_char(char c) {
    switch (c) {
        case 'x': case 'X': return Axis::X;
        case 'y': case 'Y': return Axis::Y;
        case 'z': case 'Z': return Axis::Z;
        default: return std::nullopt;
    }
}

/// Element of the cyclic phase group {+1, +i, -1, -i}, stored as the exponent
/// of i. All phase arithmetic is exact; no floating point is involved.
class Phase {
  public:
    constexpr Phase() = default;
    static constexpr Phase one() { return Phase(0); }
    static constexpr Phase i() { return Phase(1); }
    static constexpr Phase minus_one() { return Phase(2); }
    static constexpr Phase minus_i() { return Phase(3); }
    static constexpr Phase from_ipow(int k) { return Phase(static_cast<std::uint8_t>(((k % 4) + 4) % 4)); }

    constexpr int ipow() const { return ipow_; }
    constexpr bool is_real() const { return ipow_ % 2 == 0; }
    /// +1 or -1. Only valid for real phases.
    constexpr int sign() const { return ipow_ == 0 ? +1 : -1; }

    friend constexpr Phase operator*(Phase a, Phase b) { return Phase((a.ipow_ + b.ipow_) & 3); }
    Phase& operator*=(Phase o) { ipow_ = (ipow_ + o.ipow_) & 3; return *this; }
    friend constexpr bool operator==(Phase, Phase) = default;

    std::string str() const {
        static const char* names[] = {"+1", "+i", "-1", "-i"};
        return names[ipow_];
    }

  private:
    constexpr explicit Phase(std::uint8_t p) : ipow_(p) {}
    std::uint8_t ipow_ = 0;
};

/// Single-site product rule sigma_a sigma_b = i^phase * sigma_c, with c absent
/// when a == b (the square is the identity).
struct SiteProduct {
    std::uint8_t phase_ipow;
    std::optional<Axis> axis;
};

inline SiteProduct axis_product(Axis a, Axis b) {
    if (a == b) {
        return {0, std::nullopt};
    }
    int ia = static_cast<int>(a), ib = static_cast<int>(b);
    Axis c = static_cast<Axis>(3 - ia - ib);
    // xy, yz, zx are the cyclic pairs and carry +i; the reversed pairs carry -i.
    bool cyclic = (ib - ia + 3) % 3 == 1;
    return {static_cast<std::uint8_t>(cyclic ? 1 : 3), c};
}

/// An unsigned nonlocal observable: one genuine spin axis per site, no
/// identity factors, no sign. Two or more sites.
class PauliString {
  public:
    explicit PauliString(std::vector<Axis> axes) : axes_(std::move(axes)) {
        if (axes_.size() < 2) {
            throw std::invalid_argument("PauliString needs at least 2 sites");
        }
    }

    /// Parses a compact axis word such as "xxyy" (case-insensitive). When
    /// expected_sites is given, any other length is rejected.
    static PauliString parse(std::string_view text, std::optional<std::size_t> expected_sites = std::nullopt) {
        if (text.empty()) {
            throw std::invalid_argument("empty axis word");
        }
        if (expected_sites && text.size() != *expected_sites) {
            throw std::invalid_argument(
                "axis word \"" + std::string(text) + "\" has " + std::to_string(text.size()) +
                " sites, expected " + std::to_string(*expected_sites));
        }
        std::vector<Axis> axes;
        axes.reserve(text.size());
        for (char c : text) {
            auto a = axis_from_char(c);
            if (!a) {
                throw std::invalid_argument("illegal character '" + std::string(1, c) + "' in axis word \"" +
                                            std::string(text) + "\"");
            }
            axes.push_back(*a);
        }
        if (axes.size() < 2) {
            throw std::invalid_argument("axis word \"" + std::string(text) + "\" is too short (need >= 2 sites)");
        }
        return PauliString(std::move(axes));
    }

    std::size_t size() const { return axes_.size(); }
    Axis operator[](std::size_t j) const { return axes_[j]; }
    const std::vector<Axis>& axes() const { return axes_; }

    std::string str() const {
        std::string s;
        s.reserve(axes_.size());
        for (Axis a : axes_) {
            s.push_back(axis_char(a));
        }
        return s;
    }

    friend bool operator==(const PauliString&, const PauliString&) = default;
    friend std::strong_ordering operator<=>(const PauliString& a, const PauliString& b) {
        return a.axes_ <=> b.axes_;
    }

  private:
    std::vector<Axis> axes_;
};

/// Number of sites at which the two words carry different (i.e. orthogonal)
/// axes. Words of unequal length are rejected.
inline int orthogonal_site_count(const PauliString& p, const PauliString& q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("site-count mismatch: " + p.str() + " vs " + q.str());
    }
    int odd = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        odd += p[j] != q[j];
    }
    return odd;
}

/// Two axis words commute exactly when they differ at an even number of sites.
inline bool commutes(const PauliString& p, const PauliString& q) {
    return orthogonal_site_count(p, q) % 2 == 0;
}

/// Phase-tracked product of a selection of words. Sites where every factor
/// cancelled hold no axis; a full cancellation leaves a pure +-1 phase.
struct ProductResult {
    Phase phase;
    std::vector<std::optional<Axis>> letters;

    bool is_identity_word() const {
        for (const auto& l : letters) {
            if (l) {
                return false;
            }
        }
        return true;
    }

    /// The residual as a PauliString, when no site cancelled.
    std::optional<PauliString> word() const {
        std::vector<Axis> axes;
        axes.reserve(letters.size());
        for (const auto& l : letters) {
            if (!l) {
                return std::nullopt;
            }
            axes.push_back(*l);
        }
        return PauliString(std::move(axes));
    }

    std::string str() const {
        std::string s = phase.str();
        s += " * ";
        for (const auto& l : letters) {
            s.push_back(l ? axis_char(*l) : '1');
        }
        return s;
    }
};

/// Ordered product of two words (no commutation requirement).
inline ProductResult word_product(const PauliString& p, const PauliString& q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("site-count mismatch in product");
    }
    ProductResult r;
    r.letters.resize(p.size());
    int ipow = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        SiteProduct sp = axis_product(p[j], q[j]);
        ipow += sp.phase_ipow;
        r.letters[j] = sp.axis;
    }
    r.phase = Phase::from_ipow(ipow);
    return r;
}

/// Multiplies strings[subset] site-by-site in ascending index order, tracking
/// the exact global phase. Repeated indices are allowed (squares cancel).
/// The selected strings must pairwise commute so that the phase is
/// order-independent; non-commuting selections are rejected.
inline ProductResult subset_product(std::span<const PauliString> strings, std::span<const std::size_t> subset) {
    if (subset.empty()) {
        throw std::invalid_argument("subset_product of an empty selection");
    }
    std::vector<std::size_t> order(subset.begin(), subset.end());
    std::sort(order.begin(), order.end());
    for (std::size_t idx : order) {
        if (idx >= strings.size()) {
            throw std::out_of_range("subset index out of range");
        }
    }
    for (std::size_t a = 0; a < order.size(); ++a) {
        for (std::size_t b = a + 1; b < order.size(); ++b) {
            if (!commutes(strings[order[a]], strings[order[b]])) {
                throw std::invalid_argument("subset_product over non-commuting strings " +
                                            strings[order[a]].str() + ", " + strings[order[b]].str());
            }
        }
    }
    const std::size_t n = strings[order[0]].size();
    ProductResult r;
    r.letters.assign(n, std::nullopt);
    int ipow = 0;
    for (std::size_t idx : order) {
        const PauliString& w = strings[idx];
        if (w.size() != n) {
            throw std::invalid_argument("site-count mismatch in subset_product");
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (!r.letters[j]) {
                r.letters[j] = w[j];
            } else {
                SiteProduct sp = axis_product(*r.letters[j], w[j]);
                ipow += sp.phase_ipow;
                r.letters[j] = sp.axis;
            }
        }
    }
    r.phase = Phase::from_ipow(ipow);
    if (r.is_identity_word() && !r.phase.is_real()) {
        throw std::logic_error("identity residual with imaginary phase; inputs cannot have been commuting");
    }
    return r;
}

/// A nonlocal observable with an arbitrary unit direction per site.
class GeneralObservable {
  public:
    explicit GeneralObservable(std::vector<std::array<double, 3>> directions)
        : directions_(std::move(directions)) {
        for (const auto& d : directions_) {
            double norm2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
            if (std::abs(norm2 - 1.0) > 1e-12) {
                throw std::invalid_argument("site direction is not a unit vector");
            }
        }
    }

    static GeneralObservable from_axes(const PauliString& p) {
        std::vector<std::array<double, 3>> dirs(p.size(), {0.0, 0.0, 0.0});
        for (std::size_t j = 0; j < p.size(); ++j) {
            dirs[j][static_cast<int>(p[j])] = 1.0;
        }
        return GeneralObservable(std::move(dirs));
    }

    std::size_t size() const { return directions_.size(); }
    const std::array<double, 3>& direction(std::size_t j) const { return directions_[j]; }

  private:
    std::vector<std::array<double, 3>> directions_;
};

enum class GeneralCommutation {
    Commuting,           // parallel-or-orthogonal everywhere, even orthogonal count
    OddOrthogonalCount,  // dichotomy holds but the orthogonal-site count is odd
    DichotomyViolated,   // some site is neither parallel nor orthogonal within tol
};

/// Structure test for two general observables: at every site the directions
/// must be parallel (|<a,a'>| ~ 1) or orthogonal (|<a,a'>| ~ 0), and the
/// number of orthogonal sites must be even. A site failing the dichotomy is
/// reported distinctly; such a pair never commutes.
inline GeneralCommutation commutes_general(const GeneralObservable& o1, const GeneralObservable& o2, double tol) {
    if (o1.size() != o2.size()) {
        throw std::invalid_argument("site-count mismatch in commutes_general");
    }
    int orthogonal = 0;
    for (std::size_t j = 0; j < o1.size(); ++j) {
        const auto& a = o1.direction(j);
        const auto& b = o2.direction(j);
        double dot = std::abs(a[0] * b[0] + a[1] * b[1] + a[2] * b[2]);
        if (dot <= tol) {
            ++orthogonal;
        } else if (std::abs(dot - 1.0) > tol) {
            return GeneralCommutation::DichotomyViolated;
        }
    }
    return orthogonal % 2 == 0 ? GeneralCommutation::Commuting : GeneralCommutation::OddOrthogonalCount;
}

inline bool commutes(const GeneralObservable& o1, const GeneralObservable& o2, double tol) {
    return commutes_general(o1, o2, tol) == GeneralCommutation::Commuting;
}

}  // namespace ghz

#endif
