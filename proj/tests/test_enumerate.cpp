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

#include "ghz/enumerate.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace ghz;
using ghz_test::exp_of;

namespace {

const ClassificationResult& classes(int sites, int size) {
    static std::map<std::pair<int, int>, ClassificationResult> memo;
    auto key = std::make_pair(sites, size);
    auto it = memo.find(key);
    if (it == memo.end()) {
        it = memo.emplace(key, enumerate_classes(sites, size)).first;
    }
    return it->second;
}

}  // namespace

TEST_CASE("four-qubit class counts and experiment totals", "[enumerate]") {
    // Counts confirmed by an independent exhaustive-search implementation.
    struct Expected {
        int size;
        std::size_t class_count;
        std::uint64_t experiments;
        std::size_t nontrivial;
    };
    const Expected expected[] = {
        {2, 1, 648, 0},  {3, 3, 7992, 0},  {4, 8, 27864, 0}, {5, 10, 33048, 2},
        {6, 8, 22680, 2}, {7, 5, 9720, 2}, {8, 3, 2430, 2},  {9, 2, 270, 1},
        {10, 0, 0, 0},   {11, 0, 0, 0},   {12, 0, 0, 0},
    };
    for (const auto& ex : expected) {
        const auto& result = classes(4, ex.size);
        INFO("size " << ex.size);
        CHECK(result.classes.size() == ex.class_count);
        CHECK(result.experiment_count == ex.experiments);
        std::size_t nontrivial = 0;
        for (const auto& cls : result.classes) {
            nontrivial += cls.verdict.nontrivial();
        }
        CHECK(nontrivial == ex.nontrivial);
        // Orbit sizes partition the experiment count.
        std::uint64_t total = 0;
        for (const auto& cls : result.classes) {
            total += cls.orbit_size;
        }
        CHECK(total == ex.experiments);
    }
}

TEST_CASE("two and three qubit classifications", "[enumerate]") {
    CHECK(classes(2, 2).classes.size() == 1);
    CHECK(classes(2, 3).classes.size() == 1);
    CHECK(classes(2, 4).classes.empty());
    CHECK(classes(3, 2).classes.empty());  // odd site counts admit no two-element experiments
    CHECK(classes(3, 3).classes.size() == 1);
    CHECK(classes(3, 4).classes.size() == 1);
    CHECK(classes(3, 5).classes.empty());

    CHECK(classes(2, 3).classes[0].canonical.str() == "xx,yy,zz");
    const auto& mermin = classes(3, 4).classes[0];
    CHECK(mermin.verdict.nontrivial());
    CHECK(mermin.labels == std::vector<std::string>{"(M)"});

    std::size_t nontrivial_n3 = 0;
    for (int size = 2; size <= 5; ++size) {
        for (const auto& cls : classes(3, size).classes) {
            nontrivial_n3 += cls.verdict.nontrivial();
        }
    }
    CHECK(nontrivial_n3 == 1);
}

TEST_CASE("maximal experiment sizes", "[enumerate]") {
    CHECK(max_experiment_size(4) == 9);
    CHECK(max_experiment_size(3) == 4);
    CHECK(max_experiment_size(2) == 3);
}

TEST_CASE("five-element classes carry the expected labels", "[enumerate]") {
    const auto& result = classes(4, 5);
    std::map<std::string, std::string> label_to_canonical;
    for (const auto& cls : result.classes) {
        for (const auto& label : cls.labels) {
            label_to_canonical[label] = cls.canonical.str();
        }
    }
    // All eleven reference labels bind; two of them name the same class.
    for (const char* label : {"(4A.1)", "(4A.2)", "(4A.3)", "(4A.4)", "(4A.5)", "(4A.6)", "(4A.7)",
                              "(4A.8)", "(4A.9)", "(4A.10)", "(4A.11)"}) {
        INFO(label);
        CHECK(label_to_canonical.contains(label));
    }
    CHECK(label_to_canonical["(4A.10)"] == label_to_canonical["(4A.11)"]);
    CHECK(label_to_canonical["(4A.4)"] != label_to_canonical["(4A.8)"]);

    // The nontrivial classes are exactly the (4A.4) and (4A.8) ones.
    for (const auto& cls : result.classes) {
        bool labeled_nontrivial = false;
        for (const auto& label : cls.labels) {
            labeled_nontrivial |= label == "(4A.4)" || label == "(4A.8)";
        }
        CHECK(cls.verdict.nontrivial() == labeled_nontrivial);
    }
}

TEST_CASE("six-element reference labels merge the third and fourth forms", "[enumerate]") {
    const auto& result = classes(4, 6);
    std::map<std::string, std::string> label_to_canonical;
    for (const auto& cls : result.classes) {
        for (const auto& label : cls.labels) {
            label_to_canonical[label] = cls.canonical.str();
        }
    }
    CHECK(label_to_canonical.size() == 9);
    CHECK(label_to_canonical["(4B.3)"] == label_to_canonical["(4B.4)"]);
}

TEST_CASE("class lookup finds the orbit of any member", "[enumerate]") {
    auto lookup = find_class_of(exp_of("xxxx,yyxx,yxyx,xxyy,yxxy"));
    CHECK(std::find(lookup.info.labels.begin(), lookup.info.labels.end(), "(4A.4)") !=
          lookup.info.labels.end());

    auto lookup2 = find_class_of(exp_of("xxxx,yyxx,zzxx,xxyy,xxzz"));
    CHECK(std::find(lookup2.info.labels.begin(), lookup2.info.labels.end(), "(4A.1)") !=
          lookup2.info.labels.end());

    std::mt19937_64 rng(61);
    auto base = exp_of("xxxx,yyxx,yxyx,xxyy,yxxy");
    for (int trial = 0; trial < 20; ++trial) {
        auto g = SymmetryElement::random(4, rng);
        auto moved = find_class_of(act(g, base));
        CHECK(moved.index == lookup.index);
        CHECK(moved.info.canonical == lookup.info.canonical);
    }
}

TEST_CASE("restricting a class member lands in a smaller class", "[enumerate][property]") {
    for (int size = 4; size <= 9; ++size) {
        const auto& bigger = classes(4, size);
        const auto& smaller = classes(4, size - 1);
        std::set<std::string> smaller_canon;
        for (const auto& cls : smaller.classes) {
            smaller_canon.insert(cls.canonical.str());
        }
        for (const auto& cls : bigger.classes) {
            const auto& elems = cls.canonical.elements();
            for (std::size_t skip = 0; skip < elems.size(); ++skip) {
                std::vector<PauliString> rest;
                for (std::size_t i = 0; i < elems.size(); ++i) {
                    if (i != skip) {
                        rest.push_back(elems[i]);
                    }
                }
                auto v = Experiment::try_validate(rest);
                if (std::holds_alternative<Experiment>(v)) {
                    auto canon = canonical_form(std::get<Experiment>(v));
                    CHECK(smaller_canon.contains(canon.str()));
                }
            }
        }
    }
}

TEST_CASE("enumeration is deterministic across runs and thread counts", "[enumerate]") {
    EnumerateOptions serial, parallel;
    parallel.threads = 4;
    auto a = enumerate_classes(4, 6, serial);
    auto b = enumerate_classes(4, 6, serial);
    auto c = enumerate_classes(4, 6, parallel);
    CHECK(to_json(a) == to_json(b));
    CHECK(to_json(a) == to_json(c));
}

TEST_CASE("cache round-trips classifications", "[enumerate]") {
    auto dir = std::filesystem::temp_directory_path() /
               ("ghz-atlas-test-" + std::to_string(std::random_device{}()));
    EnumerateOptions cached;
    cached.cache_dir = dir;
    auto fresh = enumerate_classes(4, 4, cached);
    CHECK(std::filesystem::exists(dir / "classes_n4_m4.json"));
    auto reloaded = enumerate_classes(4, 4, cached);
    CHECK(to_json(fresh) == to_json(reloaded));
    std::filesystem::remove_all(dir);
}
