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

#include "ghz/hilbert.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "ghz/symmetry.hpp"
#include "test_helpers.hpp"

using namespace ghz;
using ghz_test::exp_of;
using ghz_test::golden_words;

namespace {

StateVector ghz_minus() {
    StateVector s = StateVector::Zero(16);
    s(0) = 1.0 / std::sqrt(2.0);
    s(15) = -1.0 / std::sqrt(2.0);
    return s;
}

std::vector<int> eps_of(std::initializer_list<int> v) { return v; }

/// Haar-ish random single-qubit unitary.
Eigen::Matrix2cd random_unitary(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Eigen::Matrix2cd m;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            m(i, j) = std::complex<double>(g(rng), g(rng));
        }
    }
    Eigen::HouseholderQR<Eigen::Matrix2cd> qr(m);
    Eigen::Matrix2cd q = qr.householderQ();
    Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < 2; ++i) {
        q.col(i) *= r(i, i) / std::abs(r(i, i));
    }
    return q;
}

}  // namespace

TEST_CASE("word operators act correctly on the computational basis", "[hilbert]") {
    StateVector zero = StateVector::Zero(16);
    zero(0) = 1;
    CHECK((to_operator(PauliString::parse("zzzz")) * zero - zero).norm() < 1e-12);

    auto ghz = ghz_minus();
    CHECK((to_operator(PauliString::parse("xxxx")) * ghz + ghz).norm() < 1e-12);
    CHECK((to_operator(PauliString::parse("yyxx")) * ghz - ghz).norm() < 1e-12);
}

TEST_CASE("word operators are hermitian involutions", "[hilbert][property]") {
    std::mt19937_64 rng(67);
    std::uniform_int_distribution<int> axis(0, 2);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Axis> a(4);
        for (auto& x : a) {
            x = static_cast<Axis>(axis(rng));
        }
        Operator op = to_operator(PauliString(a));
        CHECK((op - op.adjoint()).norm() < 1e-12);
        CHECK((op * op - Operator::Identity(16, 16)).norm() < 1e-12);
    }
}

TEST_CASE("matrix commutators vanish exactly for commuting words", "[hilbert][property]") {
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<int> axis(0, 2);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Axis> a(4), b(4);
        for (int j = 0; j < 4; ++j) {
            a[j] = static_cast<Axis>(axis(rng));
            b[j] = static_cast<Axis>(axis(rng));
        }
        PauliString p(a), q(b);
        Operator P = to_operator(p), Q = to_operator(q);
        double norm = (P * Q - Q * P).norm();
        CHECK((norm < 1e-12) == commutes(p, q));
    }
}

TEST_CASE("achievable sectors of the nontrivial five-element form", "[hilbert]") {
    auto form = golden_words("(4A.4)");
    auto sectors = achievable_vectors(std::span<const PauliString>(form));
    REQUIRE(sectors.size() == 16);
    int total = 0;
    bool found_reference = false;
    for (const auto& sector : sectors) {
        CHECK(sector.dim == 1);
        total += sector.dim;
        CHECK(sector.eps[0] * sector.eps[2] * sector.eps[3] * sector.eps[4] == -1);
        found_reference |= sector.eps == eps_of({-1, 1, 1, 1, 1});
    }
    CHECK(total == 16);
    CHECK(found_reference);
}

TEST_CASE("achievable sectors of the triad triple", "[hilbert]") {
    auto sectors = achievable_vectors(exp_of("xxxx,yyyy,zzzz"));
    REQUIRE(sectors.size() == 4);
    for (const auto& sector : sectors) {
        CHECK(sector.dim == 4);
        CHECK(sector.eps[0] * sector.eps[1] * sector.eps[2] == 1);
    }
}

TEST_CASE("sector dimensions always resolve the identity", "[hilbert][property]") {
    for (const char* label : {"(2.7)", "(2.9)", "(3.7)", "(4A.8)", "(4D.2)"}) {
        INFO(label);
        auto sectors = achievable_vectors(Experiment::validate(golden_words(label)));
        int total = 0;
        for (const auto& sector : sectors) {
            total += sector.dim;
        }
        CHECK(total == 16);
    }
}

TEST_CASE("a sector is achievable exactly when every operator identity sign holds", "[hilbert]") {
    for (const char* label : {"(2.9)", "(3.5)", "(3.7)", "(4A.4)"}) {
        INFO(label);
        auto e = Experiment::validate(golden_words(label));
        auto identities = operator_identities(e);
        std::set<std::vector<int>> achievable;
        for (const auto& sector : achievable_vectors(e)) {
            achievable.insert(sector.eps);
        }
        const std::size_t m = e.size();
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            std::vector<int> eps(m);
            for (std::size_t i = 0; i < m; ++i) {
                eps[i] = (mask >> i & 1u) ? -1 : 1;
            }
            bool consistent = true;
            for (const auto& id : identities) {
                int prod = 1;
                for (std::size_t i : id.indices) {
                    prod *= eps[i];
                }
                consistent = consistent && prod == id.sign;
            }
            CHECK(achievable.contains(eps) == consistent);
        }
    }
}

TEST_CASE("joint eigenspaces verify their residuals", "[hilbert]") {
    auto form = golden_words("(4A.4)");
    auto space = joint_eigenspace(std::span<const PauliString>(form), eps_of({-1, 1, 1, 1, 1}));
    REQUIRE(space.status == JointEigenspace::Status::Ok);
    REQUIRE(space.basis.size() == 1);
    CHECK(std::abs(std::abs(space.basis[0].dot(ghz_minus())) - 1.0) < 1e-9);

    auto wide = joint_eigenspace(exp_of("xxxx,yyyy,zzzz"), eps_of({1, 1, 1}));
    REQUIRE(wide.status == JointEigenspace::Status::Ok);
    CHECK(wide.basis.size() == 4);

    auto none = joint_eigenspace(std::span<const PauliString>(form), eps_of({1, 1, 1, 1, 1}));
    CHECK(none.status == JointEigenspace::Status::InconsistentEps);
    CHECK(none.basis.empty());
    REQUIRE(none.violated.has_value());
    CHECK(none.violated->indices == std::vector<std::size_t>{0, 2, 3, 4});
    CHECK(none.violated->sign == -1);
}

TEST_CASE("the ghz form detector accepts the reference state", "[hilbert]") {
    auto check = is_ghz_form(ghz_minus(), 1e-9);
    REQUIRE(check.is_ghz());
    REQUIRE(check.decomposition.has_value());
    const auto& d = *check.decomposition;
    // The two branches are the computational product states, in either order.
    for (int j = 0; j < 4; ++j) {
        CHECK(std::abs(d.u[j].dot(d.v[j])) < 1e-9);
        double u0 = std::abs(d.u[j](0)), v0 = std::abs(d.v[j](0));
        CHECK(((u0 > 1 - 1e-9 && v0 < 1e-9) || (v0 > 1 - 1e-9 && u0 < 1e-9)));
    }
    // Reconstruction.
    StateVector rebuilt = StateVector::Zero(16);
    for (int idx = 0; idx < 16; ++idx) {
        std::complex<double> u = 1, v = 1;
        for (int j = 0; j < 4; ++j) {
            int bit = (idx >> (3 - j)) & 1;
            u *= d.u[j](bit);
            v *= d.v[j](bit);
        }
        rebuilt(idx) = (std::polar(1.0, d.theta) * u + std::polar(1.0, d.phi) * v) / std::sqrt(2.0);
    }
    CHECK((rebuilt - ghz_minus()).norm() < 1e-9);
}

TEST_CASE("the ghz form detector rejects non-ghz states", "[hilbert]") {
    StateVector product = StateVector::Zero(16);
    product(0) = 1;
    CHECK_FALSE(is_ghz_form(product, 1e-9).is_ghz());

    // Balanced superposition of two product states that share a site-2 overlap.
    double a = std::sqrt(0.3), b = std::sqrt(0.2);
    StateVector s = StateVector::Zero(16);
    s(0b0000) = a;
    s(0b1111) = -a;
    s(0b0100) = b;
    s(0b1011) = -b;
    auto check = is_ghz_form(s, 1e-9);
    CHECK_FALSE(check.is_ghz());
    CHECK(check.status == GhzCheck::Status::NotGhz);

    CHECK_THROWS_AS(is_ghz_form(StateVector::Zero(16), 1e-9), std::invalid_argument);
}

TEST_CASE("ghz detection is invariant under local unitaries", "[hilbert][property]") {
    std::mt19937_64 rng(73);
    StateVector yes = ghz_minus();
    double a = std::sqrt(0.3), b = std::sqrt(0.2);
    StateVector no = StateVector::Zero(16);
    no(0b0000) = a;
    no(0b1111) = -a;
    no(0b0100) = b;
    no(0b1011) = -b;
    for (int trial = 0; trial < 60; ++trial) {
        Operator u = kron(kron(Operator(random_unitary(rng)), Operator(random_unitary(rng))),
                          kron(Operator(random_unitary(rng)), Operator(random_unitary(rng))));
        CHECK(is_ghz_form((u * yes).normalized(), 1e-8).is_ghz());
        CHECK_FALSE(is_ghz_form((u * no).normalized(), 1e-8).is_ghz());
    }
}

TEST_CASE("bell operator bounds", "[hilbert]") {
    auto analysis = bell_analysis();
    CHECK(std::abs(analysis.quantum_max - 9.0) < 1e-9);
    CHECK_FALSE(analysis.degenerate);
    CHECK(analysis.classical_max == 5);
    CHECK(is_ghz_form(analysis.maximizer, 1e-8).is_ghz());

    auto ghz = ghz_minus();
    std::complex<double> expectation = ghz.dot(bell_operator() * ghz);
    CHECK(std::abs(expectation.real() - 9.0) < 1e-9);
    CHECK(std::abs(expectation.imag()) < 1e-12);
}

TEST_CASE("the squared four-term operator identity", "[hilbert]") {
    CHECK(verify_bsquared_identity(1e-12));

    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 10; ++trial) {
        std::array<SiteTriad, 4> triads;
        for (auto& t : triads) {
            auto frame = ghz_test::random_triad(rng);
            t = {frame[0], frame[1], frame[2]};
        }
        CHECK(verify_bsquared_identity(triads, 1e-10));
    }

    // Breaking the triad at one site breaks the identity.
    SiteTriad axes{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    SiteTriad broken{{1, 0, 0}, {0, 1, 0}, {1, 0, 0}};
    CHECK_FALSE(verify_bsquared_identity({broken, axes, axes, axes}, 1e-10));
}
