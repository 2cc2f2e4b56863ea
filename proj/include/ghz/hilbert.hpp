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

#ifndef GHZ_HILBERT_HPP
#define GHZ_HILBERT_HPP

#include <complex>

#include <Eigen/Dense>

#include "ghz/lhv.hpp"

namespace ghz {

using Operator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Construction identities (hermiticity, unit norms) are checked at 1e-12;
/// rank and eigenvalue decisions default to 1e-9.
inline constexpr double kConstructionTol = 1e-12;
inline constexpr double kDecisionTol = 1e-9;

inline Eigen::Matrix2cd pauli_matrix(Axis a) {
    using namespace std::complex_literals;
    Eigen::Matrix2cd m;
    switch (a) {
        case Axis::X: m << 0, 1, 1, 0; break;
        case Axis::Y: m << 0, -1i, 1i, 0; break;
        case Axis::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

/// a . sigma for a unit direction.
inline Eigen::Matrix2cd direction_matrix(const std::array<double, 3>& a) {
    return a[0] * pauli_matrix(Axis::X) + a[1] * pauli_matrix(Axis::Y) + a[2] * pauli_matrix(Axis::Z);
}

inline Operator kron(const Operator& a, const Operator& b) {
    Operator out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// Tensor product of the standard Pauli matrices in site order; site 1 is the
/// most significant bit of the computational basis index.
inline Operator to_operator(const PauliString& p) {
    Operator m = pauli_matrix(p[0]);
    for (std::size_t j = 1; j < p.size(); ++j) {
        m = kron(m, pauli_matrix(p[j]));
    }
    return m;
}

inline Operator to_operator(const GeneralObservable& o) {
    Operator m = direction_matrix(o.direction(0));
    for (std::size_t j = 1; j < o.size(); ++j) {
        m = kron(m, direction_matrix(o.direction(j)));
    }
    return m;
}

/// A +-1 eigenvalue vector together with its joint eigenspace dimension.
struct EigenSector {
    std::vector<int> eps;  // one per element, canonical element order
    int dim = 0;
};

namespace detail {

inline Operator joint_projector(const std::vector<Operator>& ops, std::span<const int> eps) {
    const Eigen::Index dim = ops[0].rows();
    Operator p = Operator::Identity(dim, dim);
    for (std::size_t i = 0; i < ops.size(); ++i) {
        p = p * (Operator::Identity(dim, dim) + double(eps[i]) * ops[i]) * 0.5;
    }
    return p;
}

/// Rank of a projector by eigenvalue counting: eigenvalues must cluster at 0
/// and 1 within tol, anything in between is a numerical failure.
inline int projector_rank(const Operator& p, double tol) {
    Eigen::SelfAdjointEigenSolver<Operator> solver(p);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed");
    }
    int rank = 0;
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
        double lam = solver.eigenvalues()(i);
        if (std::abs(lam - 1.0) <= tol) {
            ++rank;
        } else if (std::abs(lam) > tol) {
            throw std::runtime_error("projector eigenvalue away from {0,1}: " + std::to_string(lam));
        }
    }
    return rank;
}

}  // namespace detail

/// All eigenvalue vectors with a nonzero joint eigenspace, with dimensions,
/// computed by simultaneous projection and eigenvalue-counted rank. The
/// dimensions over all sectors always sum to 2^n. Eps entries follow the
/// given element ordering.
inline std::vector<EigenSector> achievable_vectors(std::span<const PauliString> elems,
                                                   double tol = kDecisionTol) {
    if (elems.empty() || elems[0].size() > 6) {
        throw std::invalid_argument("dense verification limited to 1..6 sites");
    }
    std::vector<Operator> ops;
    ops.reserve(elems.size());
    for (const auto& w : elems) {
        ops.push_back(to_operator(w));
    }
    const std::size_t m = elems.size();
    std::vector<EigenSector> out;
    std::vector<int> eps(m, +1);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        for (std::size_t i = 0; i < m; ++i) {
            eps[i] = (mask >> i & 1u) ? -1 : +1;
        }
        int dim = detail::projector_rank(detail::joint_projector(ops, eps), tol);
        if (dim > 0) {
            out.push_back({eps, dim});
        }
    }
    return out;
}

inline std::vector<EigenSector> achievable_vectors(const Experiment& e, double tol = kDecisionTol) {
    return achievable_vectors(std::span(e.elements()), tol);
}

struct JointEigenspace {
    enum class Status { Ok, InconsistentEps };
    Status status = Status::Ok;
    std::vector<StateVector> basis;              // orthonormal, empty when inconsistent
    std::optional<IdentitySubset> violated;      // the identity whose sign the eps vector breaks
};

/// Orthonormal basis of the simultaneous eigenspace for the given eigenvalue
/// vector (same element ordering as `elems`). An eps vector that violates an
/// operator identity has no eigenstate; that case is reported distinctly from
/// any numerical failure (which throws).
inline JointEigenspace joint_eigenspace(std::span<const PauliString> elems, std::span<const int> eps,
                                        double tol = kDecisionTol) {
    if (eps.size() != elems.size()) {
        throw std::invalid_argument("eps length does not match element count");
    }
    for (int v : eps) {
        if (v != 1 && v != -1) {
            throw std::invalid_argument("eps entries must be +-1");
        }
    }
    JointEigenspace out;
    for (const auto& subset : operator_identities(elems)) {
        int prod = 1;
        for (std::size_t i : subset.indices) {
            prod *= eps[i];
        }
        if (prod != subset.sign) {
            out.status = JointEigenspace::Status::InconsistentEps;
            out.violated = subset;
            return out;
        }
    }
    std::vector<Operator> ops;
    for (const auto& w : elems) {
        ops.push_back(to_operator(w));
    }
    Operator p = detail::joint_projector(ops, eps);
    Eigen::SelfAdjointEigenSolver<Operator> solver(p);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed");
    }
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
        if (std::abs(solver.eigenvalues()(i) - 1.0) <= tol) {
            out.basis.push_back(solver.eigenvectors().col(i));
        }
    }
    // The numerical backend is not trusted: every claimed eigenpair is
    // re-verified by its residual.
    for (const auto& v : out.basis) {
        for (std::size_t i = 0; i < ops.size(); ++i) {
            double residual = (ops[i] * v - double(eps[i]) * v).norm();
            if (residual > tol) {
                throw std::runtime_error("eigenvector residual " + std::to_string(residual) +
                                         " exceeds tolerance");
            }
        }
    }
    return out;
}

inline JointEigenspace joint_eigenspace(const Experiment& e, std::span<const int> eps,
                                        double tol = kDecisionTol) {
    return joint_eigenspace(std::span(e.elements()), eps, tol);
}

/// A balanced two-term product decomposition: the state equals
/// (e^{i theta} |u_1..u_n> + e^{i phi} |v_1..v_n>) / sqrt(2) with <u_j|v_j> = 0
/// at every site.
struct GhzDecomposition {
    std::vector<Eigen::Vector2cd> u, v;  // one per site
    double theta = 0, phi = 0;
};

struct GhzCheck {
    enum class Status { Ghz, NotGhz, Ambiguous };
    Status status = Status::NotGhz;
    std::optional<GhzDecomposition> decomposition;
    std::string note;

    bool is_ghz() const { return status == Status::Ghz; }
};

namespace detail {

// Rank-1 factorization r = u w^T of a 2x2 built from a 4-vector; returns the
// Frobenius residual of the factorization.
inline double factor_rank1(const Eigen::Vector4cd& r, Eigen::Vector2cd& u, Eigen::Vector2cd& w) {
    Eigen::Matrix2cd R;
    R << r(0), r(1), r(2), r(3);
    Eigen::Index i0 = std::abs(R(0, 0)) + std::abs(R(0, 1)) >= std::abs(R(1, 0)) + std::abs(R(1, 1)) ? 0 : 1;
    Eigen::Vector2cd row(R(i0, 0), R(i0, 1));
    w = row.normalized();
    u = R * w.conjugate();
    double nu = u.norm();
    if (nu == 0) {
        return 1.0;
    }
    u /= nu;
    Eigen::Matrix2cd outer = (u * nu) * w.transpose();
    return (R - outer).norm() / R.norm();
}

// Projective roots (alpha : beta) of a q2^2 + b ab + c b^2 = 0. Returns false
// when the two roots are not clearly distinct (including the identically-zero
// quadratic, where the whole pencil is rank one).
inline bool pencil_roots(std::complex<double> a, std::complex<double> b, std::complex<double> c,
                         std::array<std::complex<double>, 2>& alpha,
                         std::array<std::complex<double>, 2>& beta, double tol) {
    double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
    if (scale < tol) {
        return false;  // every pencil member is rank one; no two-term split exists
    }
    if (std::abs(a) < tol * scale) {
        alpha[0] = 1;
        beta[0] = 0;
        if (std::abs(c) < tol * scale) {
            alpha[1] = 0;
            beta[1] = 1;
            return std::abs(b) >= tol * scale;
        }
        if (std::abs(b) < tol * scale) {
            return false;  // double root at (1 : 0)
        }
        alpha[1] = -c;
        beta[1] = b;
        return true;
    }
    std::complex<double> disc = std::sqrt(b * b - 4.0 * a * c);
    if (std::abs(disc) < tol * scale) {
        return false;  // double root
    }
    alpha[0] = (-b + disc) / (2.0 * a);
    beta[0] = 1;
    alpha[1] = (-b - disc) / (2.0 * a);
    beta[1] = 1;
    return true;
}

struct SplitHalf {
    std::array<Eigen::Vector4cd, 2> states;   // the two product vectors of the half
    std::array<Eigen::Vector2cd, 2> site_a;   // per-root factor at the half's first site
    std::array<Eigen::Vector2cd, 2> site_b;   // ... and second site
};

// Extracts the two product vectors spanned by the half's reduced state space.
// status: 0 ok, 1 not-ghz, 2 ambiguous.
inline int split_half(const Eigen::Matrix4cd& gram_source, SplitHalf& out, double tol) {
    Eigen::Matrix4cd rho = gram_source * gram_source.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed");
    }
    auto lam = solver.eigenvalues();
    double deviation = std::max(
        std::max(std::abs(lam(3) - 0.5), std::abs(lam(2) - 0.5)),
        std::max(std::abs(lam(1)), std::abs(lam(0))));
    if (deviation > tol) {
        return deviation <= 100 * tol ? 2 : 1;
    }
    Eigen::Vector4cd w1 = solver.eigenvectors().col(3);
    Eigen::Vector4cd w2 = solver.eigenvectors().col(2);
    auto det2 = [](const Eigen::Vector4cd& v) {
        return v(0) * v(3) - v(1) * v(2);
    };
    std::complex<double> a = det2(w1);
    std::complex<double> c = det2(w2);
    std::complex<double> b = w1(0) * w2(3) + w2(0) * w1(3) - w1(1) * w2(2) - w2(1) * w1(2);
    std::array<std::complex<double>, 2> alpha, beta;
    if (!pencil_roots(a, b, c, alpha, beta, 1e-3 * std::sqrt(tol))) {
        return 1;
    }
    for (int k = 0; k < 2; ++k) {
        Eigen::Vector4cd r = alpha[k] * w1 + beta[k] * w2;
        double norm = r.norm();
        if (norm < 1e-12) {
            return 1;
        }
        r /= norm;
        if (factor_rank1(r, out.site_a[k], out.site_b[k]) > 1e3 * tol) {
            return 2;
        }
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                r(2 * i + j) = out.site_a[k](i) * out.site_b[k](j);
            }
        }
        out.states[k] = r;
    }
    return 0;
}

}  // namespace detail

/// Decides whether a four-qubit state is a balanced superposition of two
/// product states orthogonal at every site, and returns the decomposition
/// when it is.
///
/// The reduced state on sites {1,2} must have exactly two nonzero eigenvalues,
/// both 1/2; inside its two-dimensional range the product vectors are the
/// roots of the rank-one determinant quadratic, which must be distinct. The
/// same runs on sites {3,4}; the two root pairs are then matched (both
/// pairings tried), per-site orthogonality is required, and the phases are
/// fitted by overlap and confirmed by reconstruction. Rank decisions near the
/// tolerance boundary are reported as ambiguous rather than as a negative.
inline GhzCheck is_ghz_form(const StateVector& s, double tol) {
    if (s.size() != 16) {
        throw std::invalid_argument("is_ghz_form expects a four-qubit state");
    }
    if (std::abs(s.norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("state is not normalized");
    }
    GhzCheck check;
    Eigen::Matrix4cd m;  // rows: sites {1,2}, columns: sites {3,4}
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            m(i, j) = s(4 * i + j);
        }
    }
    detail::SplitHalf front, back;
    int st1 = detail::split_half(m, front, tol);
    int st2 = st1 == 0 ? detail::split_half(m.transpose(), back, tol) : st1;
    if (st1 != 0 || st2 != 0) {
        int st = st1 != 0 ? st1 : st2;
        check.status = st == 2 ? GhzCheck::Status::Ambiguous : GhzCheck::Status::NotGhz;
        check.note = st == 2 ? "reduced-state spectrum or factorization at tolerance boundary"
                             : "no balanced two-term product structure";
        return check;
    }

    for (int pairing = 0; pairing < 2; ++pairing) {
        int k0 = pairing, k1 = 1 - pairing;
        // Per-site orthogonality across the two branches.
        double overlap = std::max(
            std::max(std::abs(front.site_a[0].dot(front.site_a[1])),
                     std::abs(front.site_b[0].dot(front.site_b[1]))),
            std::max(std::abs(back.site_a[k0].dot(back.site_a[k1])),
                     std::abs(back.site_b[k0].dot(back.site_b[k1]))));
        if (overlap > tol) {
            continue;
        }
        StateVector cand_u(16), cand_v(16);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                cand_u(4 * i + j) = front.states[0](i) * back.states[k0](j);
                cand_v(4 * i + j) = front.states[1](i) * back.states[k1](j);
            }
        }
        std::complex<double> cu = cand_u.dot(s);  // conjugating inner product
        std::complex<double> cv = cand_v.dot(s);
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        if (std::abs(std::abs(cu) - inv_sqrt2) > tol || std::abs(std::abs(cv) - inv_sqrt2) > tol) {
            continue;
        }
        StateVector rebuilt = cu * cand_u + cv * cand_v;
        if ((rebuilt - s).norm() > tol) {
            continue;
        }
        GhzDecomposition d;
        d.theta = std::arg(cu * std::sqrt(2.0));
        d.phi = std::arg(cv * std::sqrt(2.0));
        if (d.theta < 0) d.theta += 2 * M_PI;
        if (d.phi < 0) d.phi += 2 * M_PI;
        d.u = {front.site_a[0], front.site_b[0], back.site_a[k0], back.site_b[k0]};
        d.v = {front.site_a[1], front.site_b[1], back.site_a[k1], back.site_b[k1]};
        check.status = GhzCheck::Status::Ghz;
        check.decomposition = std::move(d);
        return check;
    }
    check.status = GhzCheck::Status::NotGhz;
    check.note = "product branches are not orthogonal at every site";
    return check;
}

/// The nine-term Bell operator: signed sum with -1 on xxxx and yyyy, +1 on the
/// six mixed words and on zzzz.
inline const std::vector<std::pair<PauliString, int>>& bell_terms() {
    static const std::vector<std::pair<PauliString, int>> terms = [] {
        std::vector<std::pair<PauliString, int>> t;
        auto add = [&](const char* w, int s) { t.emplace_back(PauliString::parse(w), s); };
        add("xxxx", -1);
        add("yyxx", +1);
        add("yxyx", +1);
        add("xxyy", +1);
        add("yxxy", +1);
        add("xyyx", +1);
        add("xyxy", +1);
        add("yyyy", -1);
        add("zzzz", +1);
        return t;
    }();
    return terms;
}

inline Operator bell_operator() {
    Operator b = Operator::Zero(16, 16);
    for (const auto& [w, s] : bell_terms()) {
        b += double(s) * to_operator(w);
    }
    return b;
}

struct BellAnalysis {
    double quantum_max = 0;
    StateVector maximizer;
    bool degenerate = false;
    int classical_max = 0;
    double advertised_bound = 9.0;  // the bound printed alongside the operator
};

/// Spectral maximum of the Bell operator plus the exhaustive value-assignment
/// maximum over all 2^12 choices of nu: {x,y,z} x {1..4} -> +-1.
inline BellAnalysis bell_analysis(double tol = kDecisionTol) {
    BellAnalysis out;
    Eigen::SelfAdjointEigenSolver<Operator> solver(bell_operator());
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed");
    }
    out.quantum_max = solver.eigenvalues()(15);
    out.maximizer = solver.eigenvectors().col(15);
    out.degenerate = solver.eigenvalues()(15) - solver.eigenvalues()(14) < tol;

    int best = std::numeric_limits<int>::min();
    for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
        auto value = [&](Axis a, int site) {
            return (mask >> (static_cast<int>(a) * 4 + site) & 1u) ? -1 : +1;
        };
        int total = 0;
        for (const auto& [w, s] : bell_terms()) {
            int prod = s;
            for (int j = 0; j < 4; ++j) {
                prod *= value(w[j], j);
            }
            total += prod;
        }
        best = std::max(best, total);
    }
    out.classical_max = best;
    return out;
}

/// One site's orthonormal observable triad.
struct SiteTriad {
    std::array<double, 3> a, a_prime, a_dprime;
};

/// Checks the four-term operator identity
///   B^2 = 4 + 4 (A''1 A''2 + A''1 A''3 + A''2 A''3)
/// for B = -A1 A2 A3 A4 + A'1 A'2 A3 A4 + A'1 A2 A'3 A4 + A1 A'2 A'3 A4,
/// entrywise within tol.
inline bool verify_bsquared_identity(const std::array<SiteTriad, 4>& triads, double tol) {
    std::array<Eigen::Matrix2cd, 4> A, Ap, App;
    for (int j = 0; j < 4; ++j) {
        A[j] = direction_matrix(triads[j].a);
        Ap[j] = direction_matrix(triads[j].a_prime);
        App[j] = direction_matrix(triads[j].a_dprime);
    }
    auto prod4 = [&](const Eigen::Matrix2cd& m1, const Eigen::Matrix2cd& m2, const Eigen::Matrix2cd& m3,
                     const Eigen::Matrix2cd& m4) {
        return kron(kron(Operator(m1), Operator(m2)), kron(Operator(m3), Operator(m4)));
    };
    Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();
    Operator b = -prod4(A[0], A[1], A[2], A[3]) + prod4(Ap[0], Ap[1], A[2], A[3]) +
                 prod4(Ap[0], A[1], Ap[2], A[3]) + prod4(A[0], Ap[1], Ap[2], A[3]);
    Operator rhs = 4.0 * Operator::Identity(16, 16) +
                   4.0 * (prod4(App[0], App[1], id2, id2) + prod4(App[0], id2, App[2], id2) +
                          prod4(id2, App[1], App[2], id2));
    return ((b * b) - rhs).cwiseAbs().maxCoeff() <= tol;
}

/// The axis instantiation A=x, A'=y, A''=z.
inline bool verify_bsquared_identity(double tol = kConstructionTol) {
    SiteTriad axes{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    return verify_bsquared_identity({axes, axes, axes, axes}, tol);
}

}  // namespace ghz

#endif
