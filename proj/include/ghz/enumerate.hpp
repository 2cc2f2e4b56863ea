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

#ifndef GHZ_ENUMERATE_HPP
#define GHZ_ENUMERATE_HPP

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

#include "ghz/golden.hpp"
#include "ghz/lhv.hpp"
#include "ghz/symmetry.hpp"

namespace ghz {

struct ClassInfo {
    Experiment canonical;
    std::vector<std::string> labels;  // reference labels bound by equivalence
    InvariantRecord invariants;
    TrivialityVerdict verdict;
    std::uint64_t orbit_size = 0;
};

struct ClassificationResult {
    int sites = 0;
    int size = 0;
    std::uint64_t experiment_count = 0;  // all valid experiments of this shape
    std::vector<ClassInfo> classes;      // pairwise inequivalent, sorted by canonical form
};

struct EnumerateOptions {
    int threads = 1;
    std::optional<std::filesystem::path> cache_dir;  // nullopt disables caching
};

namespace detail {

struct VecHash {
    std::size_t operator()(const std::vector<std::uint16_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint16_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

inline std::vector<std::array<std::uint8_t, 8>> all_words(std::size_t n) {
    std::size_t count = 1;
    for (std::size_t j = 0; j < n; ++j) {
        count *= 3;
    }
    std::vector<std::array<std::uint8_t, 8>> words(count);
    for (std::size_t c = 0; c < count; ++c) {
        std::size_t v = c;
        for (std::size_t j = 0; j < n; ++j) {
            words[c][n - 1 - j] = static_cast<std::uint8_t>(v % 3);
            v /= 3;
        }
    }
    return words;
}

/// All valid experiments of the given element count, as sorted word-index
/// vectors in deterministic order. Depth-first clique extension over the
/// commutation graph with lexicographically increasing vertices; the
/// two-axes-per-site rule is applied to completed sets only.
inline std::vector<std::vector<std::uint16_t>> enumerate_experiments(std::size_t n, std::size_t size,
                                                                     int threads) {
    const auto words = all_words(n);
    const std::size_t nw = words.size();
    const std::size_t blocks = (nw + 63) / 64;
    std::vector<std::uint64_t> adj(nw * blocks, 0);
    for (std::size_t a = 0; a < nw; ++a) {
        for (std::size_t b = a + 1; b < nw; ++b) {
            int diff = 0;
            for (std::size_t j = 0; j < n; ++j) {
                diff += words[a][j] != words[b][j];
            }
            if (diff % 2 == 0) {
                adj[a * blocks + b / 64] |= 1ull << (b % 64);
                adj[b * blocks + a / 64] |= 1ull << (a % 64);
            }
        }
    }

    auto search_from = [&](std::size_t root) {
        std::vector<std::vector<std::uint16_t>> found;
        std::vector<std::uint16_t> chosen{static_cast<std::uint16_t>(root)};
        std::vector<std::uint64_t> cand(adj.begin() + root * blocks, adj.begin() + (root + 1) * blocks);
        // Mask off candidates <= root.
        for (std::size_t b = 0; b <= root / 64; ++b) {
            if (b < root / 64) {
                cand[b] = 0;
            } else {
                cand[b] &= ~((root % 64 == 63) ? ~0ull : ((1ull << (root % 64 + 1)) - 1));
            }
        }
        auto complete = [&]() {
            for (std::size_t j = 0; j < n; ++j) {
                bool seen[3] = {false, false, false};
                for (std::uint16_t w : chosen) {
                    seen[words[w][j]] = true;
                }
                if (seen[0] + seen[1] + seen[2] < 2) {
                    return;
                }
            }
            found.push_back(chosen);
        };
        auto dfs = [&](auto&& self, const std::vector<std::uint64_t>& cur) -> void {
            if (chosen.size() == size) {
                complete();
                return;
            }
            std::size_t remaining = 0;
            for (std::uint64_t blk : cur) {
                remaining += std::popcount(blk);
            }
            if (chosen.size() + remaining < size) {
                return;
            }
            for (std::size_t b = 0; b < blocks; ++b) {
                std::uint64_t blk = cur[b];
                while (blk) {
                    std::size_t v = b * 64 + std::countr_zero(blk);
                    blk &= blk - 1;
                    std::vector<std::uint64_t> next(blocks);
                    for (std::size_t k = 0; k < blocks; ++k) {
                        next[k] = cur[k] & adj[v * blocks + k];
                    }
                    // Restrict to vertices above v.
                    for (std::size_t k = 0; k <= v / 64 && k < blocks; ++k) {
                        if (k < v / 64) {
                            next[k] = 0;
                        } else {
                            next[k] &= ~((v % 64 == 63) ? ~0ull : ((1ull << (v % 64 + 1)) - 1));
                        }
                    }
                    chosen.push_back(static_cast<std::uint16_t>(v));
                    self(self, next);
                    chosen.pop_back();
                }
            }
        };
        dfs(dfs, cand);
        return found;
    };

    std::vector<std::vector<std::vector<std::uint16_t>>> per_root(nw);
    if (threads <= 1) {
        for (std::size_t root = 0; root < nw; ++root) {
            per_root[root] = search_from(root);
        }
    } else {
        std::atomic<std::size_t> next_root{0};
        auto worker = [&]() {
            while (true) {
                std::size_t root = next_root.fetch_add(1);
                if (root >= nw) {
                    return;
                }
                per_root[root] = search_from(root);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    std::vector<std::vector<std::uint16_t>> out;
    for (auto& part : per_root) {
        for (auto& e : part) {
            out.push_back(std::move(e));
        }
    }
    return out;
}

inline Experiment experiment_from_indices(const std::vector<std::array<std::uint8_t, 8>>& words,
                                          const std::vector<std::uint16_t>& idx, std::size_t n) {
    std::vector<PauliString> elems;
    elems.reserve(idx.size());
    for (std::uint16_t w : idx) {
        std::vector<Axis> axes(n);
        for (std::size_t j = 0; j < n; ++j) {
            axes[j] = static_cast<Axis>(words[w][j]);
        }
        elems.emplace_back(std::move(axes));
    }
    return Experiment::validate(std::move(elems));
}

/// Reference labels bound to canonical forms, computed once.
inline const std::unordered_map<std::string, std::vector<std::string>>& label_index() {
    static const auto index = [] {
        std::unordered_map<std::string, std::vector<std::string>> map;
        for (const auto& form : golden::kForms) {
            Experiment e = Experiment::parse(form.elements);
            map[canonical_form(e).str()].emplace_back(form.label);
        }
        return map;
    }();
    return index;
}

}  // namespace detail

nlohmann::json to_json(const ClassificationResult& result);
std::optional<ClassificationResult> classification_from_json(const nlohmann::json& j);

/// Enumerates every GHZ-Mermin experiment with `size` elements on `sites`
/// qubits and classifies them into equivalence classes.
///
/// The search is an exhaustive clique enumeration over the commutation graph
/// on the 3^n axis words, followed by exact orbit deduplication: each distinct
/// experiment is marked by scanning the full symmetry orbit of its class, and
/// the lexicographically least orbit member becomes the canonical
/// representative. Output order is the sorted canonical forms, independent of
/// thread count.
inline ClassificationResult enumerate_classes(int sites, int size, const EnumerateOptions& opts = {}) {
    if (sites < 2 || sites > 6) {
        throw std::invalid_argument("enumerate_classes supports 2..6 sites");
    }
    if (size < 2) {
        throw std::invalid_argument("experiments have at least 2 elements");
    }

    std::filesystem::path cache_file;
    if (opts.cache_dir) {
        cache_file = *opts.cache_dir /
                     ("classes_n" + std::to_string(sites) + "_m" + std::to_string(size) + ".json");
        std::ifstream in(cache_file);
        if (in) {
            nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
            if (!j.is_discarded()) {
                if (auto cached = classification_from_json(j);
                    cached && cached->sites == sites && cached->size == size) {
                    return *cached;
                }
            }
        }
    }

    const std::size_t n = static_cast<std::size_t>(sites);
    const auto words = detail::all_words(n);
    auto experiments = detail::enumerate_experiments(n, static_cast<std::size_t>(size), opts.threads);

    ClassificationResult result;
    result.sites = sites;
    result.size = size;
    result.experiment_count = experiments.size();

    std::unordered_set<std::vector<std::uint16_t>, detail::VecHash> members;
    members.reserve(experiments.size() * 2);
    for (const auto& e : experiments) {
        members.insert(e);
    }
    if (members.size() != experiments.size()) {
        throw std::logic_error("clique search produced duplicate experiments");
    }

    std::sort(experiments.begin(), experiments.end());
    std::unordered_set<std::vector<std::uint16_t>, detail::VecHash> seen;
    seen.reserve(experiments.size() * 2);
    for (const auto& exp : experiments) {
        if (seen.contains(exp)) {
            continue;
        }
        // Walk the whole orbit of this class, marking every member.
        std::vector<std::vector<std::uint8_t>> letters(exp.size(), std::vector<std::uint8_t>(n));
        for (std::size_t i = 0; i < exp.size(); ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                letters[i][j] = words[exp[i]][j];
            }
        }
        std::unordered_set<std::vector<std::uint16_t>, detail::VecHash> orbit;
        std::vector<std::uint16_t> image(exp.size());
        std::vector<std::uint16_t> best;
        detail::for_each_group_element(n, [&](const std::vector<std::uint8_t>& site_perm,
                                              const std::vector<std::array<std::uint8_t, 3>>& luts) {
            for (std::size_t i = 0; i < letters.size(); ++i) {
                std::array<std::uint8_t, 8> moved{};
                for (std::size_t jj = 0; jj < n; ++jj) {
                    moved[site_perm[jj]] = letters[i][jj];
                }
                std::uint32_t idx = 0;
                for (std::size_t jj = 0; jj < n; ++jj) {
                    idx = idx * 3 + luts[jj][moved[jj]];
                }
                image[i] = static_cast<std::uint16_t>(idx);
            }
            std::sort(image.begin(), image.end());
            auto [it, inserted] = orbit.insert(image);
            if (inserted) {
                if (!members.contains(image)) {
                    throw std::logic_error("orbit member missing from exhaustive search");
                }
                if (best.empty() || image < best) {
                    best = image;
                }
            }
        });
        for (const auto& member : orbit) {
            seen.insert(member);
        }

        ClassInfo info{detail::experiment_from_indices(words, best, n), {}, {}, {}, orbit.size()};
        info.invariants = InvariantRecord::of(info.canonical);
        info.verdict = classify(info.canonical);
        auto labels_it = detail::label_index().find(info.canonical.str());
        if (labels_it != detail::label_index().end()) {
            info.labels = labels_it->second;
        }
        result.classes.push_back(std::move(info));
    }
    if (seen.size() != experiments.size()) {
        throw std::logic_error("orbit partition does not cover the search results");
    }
    std::sort(result.classes.begin(), result.classes.end(),
              [](const ClassInfo& a, const ClassInfo& b) { return a.canonical < b.canonical; });

    if (opts.cache_dir) {
        std::error_code ec;
        std::filesystem::create_directories(*opts.cache_dir, ec);
        if (!ec) {
            auto tmp = cache_file;
            tmp += ".tmp";
            std::ofstream out(tmp);
            if (out) {
                out << to_json(result).dump(1) << "\n";
                out.close();
                std::filesystem::rename(tmp, cache_file, ec);
            }
        }
    }
    return result;
}

/// Largest element count with a nonzero class count, by exhaustive upward
/// scan. Sizes below the first populated one (odd site counts have no
/// two-element experiments) are skipped.
inline int max_experiment_size(int sites, const EnumerateOptions& opts = {}) {
    std::size_t hard_cap = 1;
    for (int j = 0; j < sites; ++j) {
        hard_cap *= 3;
    }
    int best = 0;
    for (int size = 2; size <= static_cast<int>(hard_cap); ++size) {
        auto result = enumerate_classes(sites, size, opts);
        if (!result.classes.empty()) {
            best = size;
        } else if (best != 0) {
            break;
        }
    }
    return best;
}

struct ClassLookup {
    std::size_t index;  // position in the ClassificationResult
    ClassInfo info;
};

/// Locates the equivalence class of e within the enumerated classification of
/// its shape.
inline ClassLookup find_class_of(const Experiment& e, const EnumerateOptions& opts = {}) {
    auto result = enumerate_classes(static_cast<int>(e.sites()), static_cast<int>(e.size()), opts);
    Experiment canon = canonical_form(e);
    for (std::size_t i = 0; i < result.classes.size(); ++i) {
        if (result.classes[i].canonical == canon) {
            return {i, result.classes[i]};
        }
    }
    throw std::logic_error("experiment missing from its own classification: " + e.str());
}

// ---- serialization ----

inline nlohmann::json verdict_to_json(const TrivialityVerdict& v) {
    nlohmann::json j;
    j["kind"] = v.nontrivial() ? "nontrivial" : "trivial";
    if (v.certificate) {
        nlohmann::json c;
        c["indices"] = nlohmann::json::array();
        for (std::size_t i : v.certificate->indices) {
            c["indices"].push_back(i + 1);  // 1-based in serialized form
        }
        c["sign"] = v.certificate->sign;
        j["certificate"] = std::move(c);
    }
    if (v.assignment) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& [sym, expr] : v.assignment->entries) {
            a.push_back({{"site", sym.site + 1}, {"axis", std::string(1, axis_char(sym.axis))},
                         {"expr", expr.str()}});
        }
        j["assignment"] = std::move(a);
    }
    return j;
}

inline nlohmann::json to_json(const ClassificationResult& result) {
    nlohmann::json j;
    j["n"] = result.sites;
    j["size"] = result.size;
    j["experiment_count"] = result.experiment_count;
    j["classes"] = nlohmann::json::array();
    for (const auto& cls : result.classes) {
        nlohmann::json c;
        c["canonical"] = cls.canonical.str();
        if (!cls.labels.empty()) {
            std::string joined;
            for (std::size_t i = 0; i < cls.labels.size(); ++i) {
                if (i) {
                    joined += ", ";
                }
                joined += cls.labels[i];
            }
            c["paper_label"] = joined;
        }
        c["c"] = cls.invariants.c;
        c["r"] = cls.invariants.r;
        c["triad_profile"] = cls.invariants.triad;
        c["verdict"] = cls.verdict.nontrivial() ? "nontrivial" : "trivial";
        c["detail"] = verdict_to_json(cls.verdict);
        c["orbit_size"] = cls.orbit_size;
        j["classes"].push_back(std::move(c));
    }
    return j;
}

inline std::optional<ClassificationResult> classification_from_json(const nlohmann::json& j) {
    try {
        ClassificationResult result;
        result.sites = j.at("n").get<int>();
        result.size = j.at("size").get<int>();
        result.experiment_count = j.at("experiment_count").get<std::uint64_t>();
        for (const auto& c : j.at("classes")) {
            Experiment canon = Experiment::parse(c.at("canonical").get<std::string>());
            ClassInfo info{canon, {}, InvariantRecord::of(canon), classify(canon),
                           c.at("orbit_size").get<std::uint64_t>()};
            auto labels_it = detail::label_index().find(info.canonical.str());
            if (labels_it != detail::label_index().end()) {
                info.labels = labels_it->second;
            }
            result.classes.push_back(std::move(info));
        }
        return result;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace ghz

#endif
