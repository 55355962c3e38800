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

#include "kdlab/operator.hpp"

#include <cmath>
#include <sstream>

#include "kdlab/errors.hpp"

namespace kdlab {

Operator::Operator(GroupPtr g, CMatrix k) : group(std::move(g)), kernel(std::move(k)) {
    const int n = group->order();
    if (kernel.rows() != n || kernel.cols() != n) {
        throw PreconditionError("kernel on " + group->spec() + " must be " + std::to_string(n) + "x" +
                                std::to_string(n));
    }
}

Operator Operator::zero(GroupPtr g) {
    const int n = g->order();
    return Operator(std::move(g), CMatrix::Zero(n, n));
}

Operator Operator::identity(GroupPtr g) {
    const int n = g->order();
    return Operator(std::move(g), CMatrix::Identity(n, n) * static_cast<double>(n));
}

Operator Operator::maximally_mixed(GroupPtr g) {
    const int n = g->order();
    return Operator(std::move(g), CMatrix::Identity(n, n));
}

Operator Operator::projector(const GFunction &psi) {
    return Operator(psi.group, psi.values * psi.values.adjoint());
}

Operator Operator::from_matrix(GroupPtr g, const CMatrix &m) {
    const double n = g->order();
    return Operator(std::move(g), m * n);
}

CMatrix Operator::matrix() const { return kernel / static_cast<double>(dim()); }

GFunction Operator::apply(const GFunction &psi) const {
    require_same_group(group, psi.group);
    return GFunction(group, kernel * psi.values / static_cast<double>(dim()));
}

Operator Operator::adjoint() const { return Operator(group, kernel.adjoint()); }

Complex Operator::trace() const { return kernel.trace() / static_cast<double>(dim()); }

bool Operator::is_hermitian(double tol) const {
    return (kernel - kernel.adjoint()).cwiseAbs().maxCoeff() / dim() <= tol;
}

Operator Operator::operator*(const Operator &o) const {
    require_same_group(group, o.group);
    return Operator(group, kernel * o.kernel / static_cast<double>(dim()));
}

Operator Operator::operator+(const Operator &o) const {
    require_same_group(group, o.group);
    return Operator(group, kernel + o.kernel);
}

Operator Operator::operator-(const Operator &o) const {
    require_same_group(group, o.group);
    return Operator(group, kernel - o.kernel);
}

Operator Operator::operator*(Complex s) const { return Operator(group, kernel * s); }

Complex hs_inner(const Operator &a, const Operator &b) {
    require_same_group(a.group, b.group);
    const double n = a.dim();
    return (a.kernel.conjugate().cwiseProduct(b.kernel)).sum() / (n * n);
}

double hs_norm(const Operator &a) { return a.kernel.norm() / a.dim(); }

Complex trace_of_product(const Operator &a, const Operator &b) {
    require_same_group(a.group, b.group);
    const double n = a.dim();
    return (a.kernel.cwiseProduct(b.kernel.transpose())).sum() / (n * n);
}

Operator multiplication_operator(const GFunction &f) {
    const int n = f.group->order();
    CMatrix k = CMatrix::Zero(n, n);
    k.diagonal() = f.values * static_cast<double>(n);
    return Operator(f.group, std::move(k));
}

Operator fourier_multiplier(const DualFunction &h) {
    const auto &G = *h.group;
    const GFunction conv = inverse_fourier(h);
    const int n = G.order();
    CMatrix k(n, n);
    for (int g = 0; g < n; ++g) {
        for (int gp = 0; gp < n; ++gp) k(g, gp) = conv(G.sub(g, gp));
    }
    return Operator(h.group, std::move(k));
}

Eigen::VectorXd hermitian_eigenvalues(const Operator &a) {
    CMatrix m = a.matrix();
    m = (m + m.adjoint()).eval() * 0.5;
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

void require_hermitian(const Operator &a, double tol) {
    if (!a.is_hermitian(tol)) {
        std::ostringstream msg;
        msg << "operator is not Hermitian (max |K - K^*| / |G| = "
            << (a.kernel - a.kernel.adjoint()).cwiseAbs().maxCoeff() / a.dim() << ")";
        throw PreconditionError(msg.str());
    }
}

void require_state(const Operator &rho, double tol) {
    require_hermitian(rho, tol);
    const Complex tr = rho.trace();
    if (std::abs(tr - 1.0) > tol) {
        std::ostringstream msg;
        msg << "operator is not a state: trace = " << tr.real() << (tr.imag() >= 0 ? "+" : "") << tr.imag()
            << "i, expected 1";
        throw PreconditionError(msg.str());
    }
    const double lmin = hermitian_eigenvalues(rho).minCoeff();
    if (lmin < -tol) {
        std::ostringstream msg;
        msg << "operator is not a state: not positive semidefinite (min eigenvalue " << lmin << ")";
        throw PreconditionError(msg.str());
    }
}

PhaseSpaceFunction::PhaseSpaceFunction(GroupPtr g, CMatrix v) : group(std::move(g)), values(std::move(v)) {
    const int n = group->order();
    if (values.rows() != n || values.cols() != n) {
        throw PreconditionError("phase-space table on " + group->spec() + " must be " + std::to_string(n) +
                                "x" + std::to_string(n));
    }
}

PhaseSpaceFunction PhaseSpaceFunction::zeros(GroupPtr g) {
    const int n = g->order();
    return PhaseSpaceFunction(std::move(g), CMatrix::Zero(n, n));
}

PhaseSpaceFunction PhaseSpaceFunction::conj() const { return PhaseSpaceFunction(group, values.conjugate()); }

Complex l2_inner(const PhaseSpaceFunction &a, const PhaseSpaceFunction &b) {
    require_same_group(a.group, b.group);
    return (a.values.conjugate().cwiseProduct(b.values)).sum() / static_cast<double>(a.group->order());
}

double l2_norm(const PhaseSpaceFunction &f) {
    return std::sqrt(f.values.squaredNorm() / static_cast<double>(f.group->order()));
}

double max_abs_diff(const PhaseSpaceFunction &a, const PhaseSpaceFunction &b) {
    require_same_group(a.group, b.group);
    return (a.values - b.values).cwiseAbs().maxCoeff();
}

double max_abs_diff(const Operator &a, const Operator &b) {
    require_same_group(a.group, b.group);
    return (a.kernel - b.kernel).cwiseAbs().maxCoeff();
}

PhaseSpaceFunction tensor(const GFunction &f, const DualFunction &h) {
    require_same_group(f.group, h.group);
    return PhaseSpaceFunction(f.group, f.values * h.values.transpose());
}

}  // namespace kdlab
