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

#pragma once

#include "kdlab/harmonic.hpp"

namespace kdlab {

/// Operator on L^2(G, mu_G) stored by its integral kernel K, K(g, g') =
/// k_A(g, g'). It acts by (A psi)(g) = (1/|G|) sum_g' K(g, g') psi(g'), so
/// the identity has kernel |G| * I and a pure state |psi><psi| has kernel
/// psi(g) conj(psi(g')). The 1/|G| weight lives in the operations, never in
/// the stored kernel.
///
/// matrix() = K / |G| is the ordinary matrix of A in the orthonormal basis
/// sqrt(|G|) delta_g; trace, spectrum and Hilbert-Schmidt norm agree with it.
struct Operator {
    GroupPtr group;
    CMatrix kernel;

    Operator() = default;
    Operator(GroupPtr g, CMatrix k);

    static Operator zero(GroupPtr g);
    static Operator identity(GroupPtr g);
    /// I / |G|.
    static Operator maximally_mixed(GroupPtr g);
    /// |psi><psi|, with no normalisation applied.
    static Operator projector(const GFunction &psi);
    static Operator from_matrix(GroupPtr g, const CMatrix &m);

    int dim() const { return static_cast<int>(kernel.rows()); }
    CMatrix matrix() const;

    GFunction apply(const GFunction &psi) const;
    Operator adjoint() const;
    Complex trace() const;
    bool is_hermitian(double tol) const;

    Operator operator*(const Operator &o) const;
    Operator operator+(const Operator &o) const;
    Operator operator-(const Operator &o) const;
    Operator operator*(Complex s) const;
};

/// tr(A^* B) = (1/|G|^2) sum conj(K_A) K_B.
Complex hs_inner(const Operator &a, const Operator &b);
double hs_norm(const Operator &a);
/// tr(A B) without forming the product.
Complex trace_of_product(const Operator &a, const Operator &b);

/// Multiplication by f: kernel |G| f(g) delta_{g,g'}.
Operator multiplication_operator(const GFunction &f);
/// Fourier multiplier by h: kernel (F^{-1} h)(g - g').
Operator fourier_multiplier(const DualFunction &h);

/// Eigenvalues (ascending) of a Hermitian operator.
Eigen::VectorXd hermitian_eigenvalues(const Operator &a);

/// Checks that rho is Hermitian, PSD and has unit trace; throws
/// PreconditionError naming the first violated condition.
void require_state(const Operator &rho, double tol);
void require_hermitian(const Operator &a, double tol);

/// Complex table over G x G^, rows indexed by element, columns by character.
struct PhaseSpaceFunction {
    GroupPtr group;
    CMatrix values;

    PhaseSpaceFunction() = default;
    PhaseSpaceFunction(GroupPtr g, CMatrix v);
    static PhaseSpaceFunction zeros(GroupPtr g);

    Complex operator()(int g, int chi) const { return values(g, chi); }
    PhaseSpaceFunction conj() const;
};

/// <F, H> = (1/|G|) sum conj(F) H, the mu_G x mu_{G^} inner product.
Complex l2_inner(const PhaseSpaceFunction &a, const PhaseSpaceFunction &b);
double l2_norm(const PhaseSpaceFunction &f);
double max_abs_diff(const PhaseSpaceFunction &a, const PhaseSpaceFunction &b);
double max_abs_diff(const Operator &a, const Operator &b);

/// f (x) h as a phase-space table.
PhaseSpaceFunction tensor(const GFunction &f, const DualFunction &h);

}  // namespace kdlab
