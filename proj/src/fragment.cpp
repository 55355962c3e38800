// Copyright 2026 The kdlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kdlab/fragment.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "kdlab/errors.hpp"
#include "kdlab/kd.hpp"
#include "kdlab/simplex_lsq.hpp"

namespace kdlab {

double KdRealityResult::worst_violation() const { return std::max(direct_violation, support_violation); }

KdRealityResult is_kd_real(const Operator &A, double tol) {
    require_hermitian(A, std::max(tol, kDefaultTolerances.structural));
    const auto &G = *A.group;
    KdRealityResult out;
    out.direct_violation = kd(A).values.imag().cwiseAbs().maxCoeff();
    const PhaseSpaceFunction x0 = char_fn(A, CharOrder::standard0);
    for (int g = 0; g < G.order(); ++g) {
        for (int c = 0; c < G.order(); ++c) {
            if (!G.pairs_to_one(c, g)) out.support_violation = std::max(out.support_violation, std::abs(x0(g, c)));
        }
    }
    out.direct_verdict = out.direct_violation <= tol;
    out.support_verdict = out.support_violation <= tol;
    out.verdict = out.direct_verdict && out.support_verdict;
    return out;
}

int kd_real_dimension(const FiniteAbelianGroup &G) {
    int count = 0;
    for (int g = 0; g < G.order(); ++g) {
        for (int c = 0; c < G.order(); ++c) count += G.pairs_to_one(c, g) ? 1 : 0;
    }
    return count;
}

Operator project_kd_real(const Operator &A) {
    const auto &G = *A.group;
    PhaseSpaceFunction x0 = char_fn(A, CharOrder::standard0);
    for (int g = 0; g < G.order(); ++g) {
        for (int c = 0; c < G.order(); ++c) {
            if (!G.pairs_to_one(c, g)) x0.values(g, c) = 0.0;
        }
    }
    return from_char_fn(x0);
}

double KdPositivityResult::worst_violation() const { return std::max({0.0, max_imag, -min_real}); }

KdPositivityResult is_kd_positive_state(const Operator &rho, double tol, double state_tol) {
    require_state(rho, state_tol);
    const PhaseSpaceFunction table = kd(rho);
    KdPositivityResult out;
    out.max_imag = table.values.imag().cwiseAbs().maxCoeff();
    out.min_real = table.values.real().minCoeff();
    out.verdict = out.max_imag <= tol && out.min_real >= -tol;
    return out;
}

const char *to_string(Verdict v) {
    switch (v) {
        case Verdict::inside:
            return "inside";
        case Verdict::outside:
            return "outside";
        case Verdict::inconclusive:
            return "inconclusive";
    }
    return "?";
}

PureFamilyBasis::PureFamilyBasis(GroupPtr G, int bound)
    : group_(std::move(G)), states_(enumerate_kd_positive_pure(group_, bound)) {
    const int n = group_->order();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    columns_.resize(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(states_.size()));
    for (std::size_t i = 0; i < states_.size(); ++i) {
        const Eigen::MatrixXd re = kd_pure(states_[i].vector).values.real() * scale;
        columns_.col(static_cast<Eigen::Index>(i)) = Eigen::Map<const Eigen::VectorXd>(re.data(), re.size());
    }
    if (states_.empty()) return;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(columns_);
    const Eigen::VectorXd &s = svd.singularValues();
    const double cutoff = 1e-9 * std::max(1.0, s[0]);
    span_dimension_ = static_cast<int>((s.array() > cutoff).count());
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> PureFamilyBasis::coordinates(const Operator &A) const {
    require_same_group(group_, A.group);
    const PhaseSpaceFunction table = kd(A);
    const double scale = 1.0 / std::sqrt(static_cast<double>(group_->order()));
    const Eigen::MatrixXd re = table.values.real() * scale;
    const Eigen::MatrixXd im = table.values.imag() * scale;
    return {Eigen::Map<const Eigen::VectorXd>(re.data(), re.size()),
            Eigen::Map<const Eigen::VectorXd>(im.data(), im.size())};
}

Operator PureFamilyBasis::combination(const Eigen::VectorXd &coefficients) const {
    if (coefficients.size() != static_cast<Eigen::Index>(states_.size())) {
        throw PreconditionError("coefficient vector does not match the family size");
    }
    Operator sum = Operator::zero(group_);
    for (std::size_t i = 0; i < states_.size(); ++i) {
        const double c = coefficients[static_cast<Eigen::Index>(i)];
        if (c != 0.0) sum.kernel += c * (states_[i].vector.values * states_[i].vector.values.adjoint());
    }
    return sum;
}

namespace {

// W = D / ||D|| for the residual D = A - P, given in scaled KD coordinates,
// together with the gap <W, A> - max_i <W, Pi_i>.
void attach_witness(const PureFamilyBasis &basis, const Eigen::VectorXd &a_re, const Eigen::VectorXd &a_im,
                    const Eigen::VectorXd &fit_re, MembershipResult &out) {
    const GroupPtr &G = basis.group();
    const int n = G->order();
    Eigen::VectorXd d_re = a_re - fit_re;
    Eigen::VectorXd d_im = a_im;
    const double norm = std::sqrt(d_re.squaredNorm() + d_im.squaredNorm());
    if (norm == 0.0) return;
    d_re /= norm;
    d_im /= norm;
    // Real HS pairing in KD coordinates; family tables are real.
    const double on_a = d_re.dot(a_re) + d_im.dot(a_im);
    const double on_family = (basis.columns().transpose() * d_re).maxCoeff();
    out.gap = on_a - on_family;

    const double unscale = std::sqrt(static_cast<double>(n));
    CMatrix table(n, n);
    for (int c = 0; c < n; ++c) {
        for (int g = 0; g < n; ++g) {
            const Eigen::Index k = static_cast<Eigen::Index>(c) * n + g;
            table(g, c) = Complex(d_re[k], d_im[k]) * unscale;
        }
    }
    out.witness = kd_inverse(PhaseSpaceFunction(G, std::move(table)));
}

}  // namespace

MembershipResult span_membership(const PureFamilyBasis &basis, const Operator &A, double tol) {
    require_hermitian(A, std::max(tol, kDefaultTolerances.structural));
    const auto [a_re, a_im] = basis.coordinates(A);
    MembershipResult out;
    out.span_dimension = basis.span_dimension();
    out.coefficients = basis.columns().completeOrthogonalDecomposition().solve(a_re);
    const Eigen::VectorXd fit = basis.columns() * out.coefficients;
    out.residual = std::sqrt((a_re - fit).squaredNorm() + a_im.squaredNorm());
    if (out.residual <= tol) {
        out.verdict = Verdict::inside;
        return out;
    }
    attach_witness(basis, a_re, a_im, fit, out);
    out.verdict = out.gap > tol ? Verdict::outside : Verdict::inconclusive;
    return out;
}

MembershipResult conv_membership(const PureFamilyBasis &basis, const Operator &rho, const Tolerances &tol) {
    const KdPositivityResult pos = is_kd_positive_state(rho, tol.positivity, tol.positivity);
    if (!pos.verdict) {
        std::ostringstream msg;
        msg << "hull membership needs a KD-positive state (violation " << pos.worst_violation() << ")";
        throw PreconditionError(msg.str());
    }
    const auto [a_re, a_im] = basis.coordinates(rho);
    const SimplexLsqResult fit = simplex_lsq(basis.columns(), a_re);
    MembershipResult out;
    out.span_dimension = basis.span_dimension();
    out.coefficients = fit.lambda;
    out.iterations = fit.iterations;
    out.residual = std::sqrt(fit.residual * fit.residual + a_im.squaredNorm());
    if (!fit.converged) out.detail = "active-set iteration limit reached";
    if (out.residual <= tol.membership) {
        out.verdict = Verdict::inside;
        return out;
    }
    attach_witness(basis, a_re, a_im, basis.columns() * fit.lambda, out);
    out.verdict = out.gap > tol.membership ? Verdict::outside : Verdict::inconclusive;
    return out;
}

namespace {

// Euclidean projection onto {x >= 0, sum x = 1}.
Eigen::VectorXd project_simplex(const Eigen::VectorXd &v) {
    std::vector<double> s(v.data(), v.data() + v.size());
    std::sort(s.begin(), s.end(), std::greater<>());
    double cumulative = 0.0;
    double theta = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        cumulative += s[i];
        const double t = (cumulative - 1.0) / static_cast<double>(i + 1);
        if (s[i] - t > 0.0) theta = t;
    }
    return (v.array() - theta).max(0.0);
}

// Both projections act on the kernel K; the HS metric is a fixed multiple of
// the Frobenius metric on K, so Euclidean projections coincide.
CMatrix project_states(const GroupPtr &G, const CMatrix &k) {
    const double n = G->order();
    const CMatrix m = (k + k.adjoint()) * (0.5 / n);
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(m);
    const Eigen::VectorXd w = project_simplex(eig.eigenvalues());
    return eig.eigenvectors() * w.cast<Complex>().asDiagonal() * eig.eigenvectors().adjoint() * n;
}

CMatrix project_kd_polyhedron(const GroupPtr &G, const CMatrix &k) {
    PhaseSpaceFunction table = kd(Operator(G, k));
    table.values = table.values.real().cwiseMax(0.0).cast<Complex>();
    return kd_inverse(table).kernel;
}

}  // namespace

ProjectionResult project_onto_kdpos(const Operator &rho0, int max_iter, double tol) {
    require_hermitian(rho0, std::max(tol, kDefaultTolerances.structural));
    if (std::abs(rho0.trace() - 1.0) > std::max(tol, kDefaultTolerances.positivity)) {
        throw PreconditionError("projection onto KD-positive states needs a trace-one operator");
    }
    const GroupPtr &G = rho0.group;
    const double n = G->order();
    const int dim = rho0.dim();
    CMatrix x = rho0.kernel;
    CMatrix p = CMatrix::Zero(dim, dim);
    CMatrix q = CMatrix::Zero(dim, dim);
    CMatrix y = x;
    ProjectionResult out;
    for (out.iterations = 1; out.iterations <= max_iter; ++out.iterations) {
        y = project_states(G, x + p);
        p = x + p - y;
        const CMatrix x_next = project_kd_polyhedron(G, y + q);
        q = y + q - x_next;
        const double step = (x_next - x).norm() / n;
        x = x_next;
        out.set_gap = (y - x).norm() / n;
        if (out.set_gap <= tol && step <= tol) {
            out.converged = true;
            break;
        }
    }
    out.iterations = std::min(out.iterations, max_iter);
    out.rho = Operator(G, y);
    out.distance = hs_norm(out.rho - rho0);
    const PhaseSpaceFunction table = kd(out.rho);
    out.kd_violation = std::max({0.0, table.values.imag().cwiseAbs().maxCoeff(), -table.values.real().minCoeff()});
    return out;
}

}  // namespace kdlab
