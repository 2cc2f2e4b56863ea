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

#ifndef GHZ_EXPERIMENT_HPP
#define GHZ_EXPERIMENT_HPP

#include <algorithm>
#include <set>
#include <variant>

#include "ghz/pauli.hpp"

namespace ghz {

struct ValidationIssue {
    enum class Kind {
        EmptySet,
        TooFewElements,
        SiteCountMismatch,
        NonCommutingPair,
        SingleAxisSite,
    };
    Kind kind;
    std::string message;
    // Witnesses, populated per kind.
    std::string first_word, second_word;
    int odd_site_count = 0;
    int site = -1;  // 1-based
};

/// A set of mutually commuting axis words with at least two distinct axes at
/// every site. Elements are stored sorted (lexicographic, X < Y < Z); input
/// order and duplicates are irrelevant, matching set semantics.
class Experiment {
  public:
    static std::variant<Experiment, ValidationIssue> try_validate(std::vector<PauliString> candidate) {
        if (candidate.empty()) {
            return ValidationIssue{ValidationIssue::Kind::EmptySet, "empty candidate set"};
        }
        std::sort(candidate.begin(), candidate.end());
        candidate.erase(std::unique(candidate.begin(), candidate.end()), candidate.end());
        const std::size_t n = candidate[0].size();
        for (const auto& w : candidate) {
            if (w.size() != n) {
                return ValidationIssue{ValidationIssue::Kind::SiteCountMismatch,
                                       "site-count mismatch: " + candidate[0].str() + " vs " + w.str(),
                                       candidate[0].str(), w.str()};
            }
        }
        if (candidate.size() < 2) {
            return ValidationIssue{ValidationIssue::Kind::TooFewElements,
                                   "a single element can never show two distinct axes per site"};
        }
        for (std::size_t a = 0; a < candidate.size(); ++a) {
            for (std::size_t b = a + 1; b < candidate.size(); ++b) {
                int odd = orthogonal_site_count(candidate[a], candidate[b]);
                if (odd % 2 != 0) {
                    ValidationIssue issue{ValidationIssue::Kind::NonCommutingPair, "", candidate[a].str(),
                                          candidate[b].str(), odd};
                    issue.message = "non-commuting pair " + issue.first_word + ", " + issue.second_word +
                                    " (orthogonal at " + std::to_string(odd) + " sites, odd)";
                    return issue;
                }
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            std::set<Axis> axes;
            for (const auto& w : candidate) {
                axes.insert(w[j]);
            }
            if (axes.size() < 2) {
                ValidationIssue issue{ValidationIssue::Kind::SingleAxisSite, ""};
                issue.site = static_cast<int>(j) + 1;
                issue.message = "site " + std::to_string(j + 1) + " has only axis " +
                                std::string(1, axis_char(*axes.begin()));
                return issue;
            }
        }
        return Experiment(std::move(candidate));
    }

    /// Throwing variant of try_validate.
    static Experiment validate(std::vector<PauliString> candidate) {
        auto v = try_validate(std::move(candidate));
        if (auto* issue = std::get_if<ValidationIssue>(&v)) {
            throw std::invalid_argument(issue->message);
        }
        return std::get<Experiment>(std::move(v));
    }

    /// Parses the interchange form "xxxx,yyxx,..." (order-insensitive).
    static Experiment parse(std::string_view text) {
        std::vector<PauliString> words;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            if (comma == std::string_view::npos) {
                comma = text.size();
            }
            std::string_view tok = text.substr(pos, comma - pos);
            while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
            while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
            if (!tok.empty()) {
                words.push_back(PauliString::parse(tok));
            }
            pos = comma + 1;
            if (comma == text.size()) {
                break;
            }
        }
        return validate(std::move(words));
    }

    std::size_t size() const { return elements_.size(); }
    std::size_t sites() const { return elements_[0].size(); }
    const std::vector<PauliString>& elements() const { return elements_; }
    const PauliString& operator[](std::size_t i) const { return elements_[i]; }

    /// Canonical interchange form: sorted comma-separated words.
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            if (i) {
                s.push_back(',');
            }
            s += elements_[i].str();
        }
        return s;
    }

    friend bool operator==(const Experiment&, const Experiment&) = default;
    friend std::strong_ordering operator<=>(const Experiment& a, const Experiment& b) {
        return a.elements_ <=> b.elements_;
    }

  private:
    explicit Experiment(std::vector<PauliString> sorted) : elements_(std::move(sorted)) {}
    std::vector<PauliString> elements_;
};

/// Number of sites at which all three axes occur across the experiment.
inline int c_invariant(const Experiment& e) {
    int c = 0;
    for (std::size_t j = 0; j < e.sites(); ++j) {
        bool seen[3] = {false, false, false};
        for (const auto& w : e.elements()) {
            seen[static_cast<int>(w[j])] = true;
        }
        c += seen[0] && seen[1] && seen[2];
    }
    return c;
}

/// Per-element count of other elements orthogonal to it at exactly two sites,
/// in canonical element order.
inline std::vector<int> r_invariant(const Experiment& e) {
    std::vector<int> r(e.size(), 0);
    for (std::size_t a = 0; a < e.size(); ++a) {
        for (std::size_t b = a + 1; b < e.size(); ++b) {
            if (orthogonal_site_count(e[a], e[b]) == 2) {
                ++r[a];
                ++r[b];
            }
        }
    }
    return r;
}

/// The R invariant proper: the same counts as a sorted multiset (descending).
/// Only the multiset survives element reordering.
inline std::vector<int> r_multiset(const Experiment& e) {
    auto r = r_invariant(e);
    std::sort(r.begin(), r.end(), std::greater<int>());
    return r;
}

/// Number of sites at which all three axes occur across the given words.
/// Subsets of an experiment are legal inputs; they need not satisfy the
/// two-axes-per-site rule themselves.
inline int triad_site_count(std::span<const PauliString> words) {
    if (words.empty()) {
        return 0;
    }
    int t = 0;
    for (std::size_t j = 0; j < words[0].size(); ++j) {
        bool seen[3] = {false, false, false};
        for (const auto& w : words) {
            seen[static_cast<int>(w[j])] = true;
        }
        t += seen[0] && seen[1] && seen[2];
    }
    return t;
}

/// For every 3-element subset, the number of sites carrying a triad within
/// that subset; sorted ascending. Empty for experiments of fewer than three
/// elements (defined, not an error).
inline std::vector<int> triad_profile(const Experiment& e) {
    std::vector<int> out;
    const std::size_t m = e.size();
    if (m < 3) {
        return out;
    }
    std::array<PauliString, 3> subset{e[0], e[0], e[0]};
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            for (std::size_t c = b + 1; c < m; ++c) {
                subset = {e[a], e[b], e[c]};
                out.push_back(triad_site_count(subset));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct InvariantRecord {
    int c = 0;
    std::vector<int> r;      // per element, canonical order
    std::vector<int> triad;  // sorted multiset over 3-subsets

    static InvariantRecord of(const Experiment& e) {
        return {c_invariant(e), r_invariant(e), triad_profile(e)};
    }

    std::vector<int> r_sorted() const {
        auto s = r;
        std::sort(s.begin(), s.end(), std::greater<int>());
        return s;
    }
};

}  // namespace ghz

#endif
