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

#include "kdlab/operator.hpp"

namespace kdlab {

/// Kirkwood-Dirac distribution
///   KD_A(g, chi) = conj(chi(g)) (1/|G|) sum_g' K(g, g') chi(g').
/// A unitary map from Hilbert-Schmidt operators onto L^2(G x G^).
PhaseSpaceFunction kd(const Operator &A);

/// KD of |psi><psi| via conj(chi(g)) psi(g) conj(psi^(chi)); O(|G|^2).
PhaseSpaceFunction kd_pure(const GFunction &psi);

/// Inverse of kd: K(g, g') = sum_chi F(g, chi) chi(g - g').
Operator kd_inverse(const PhaseSpaceFunction &F);

/// Ordering of the characteristic function.
enum class CharOrder {
    standard0,  // X0(g, chi) = tr(A U(g, chi, 1))
    standard1,  // X1 = X0 conj(chi(g)) = tr(A T_g M_chi)
    half,       // X^(1/2) = X0 conj(chi(g/2)); needs an invertible doubling map
};

const char *to_string(CharOrder order);
/// Accepts "0"/"standard0", "1"/"standard1", "half". Throws ParseError.
CharOrder parse_char_order(std::string_view text);

/// Characteristic function of the requested order. `half` on a group with
/// an even factor throws UnsupportedOrderError.
PhaseSpaceFunction char_fn(const Operator &A, CharOrder order);

/// (F_symp F)(g, chi) = (1/|G|) sum_{g', chi'} F(g', chi') chi(g') conj(chi'(g)).
PhaseSpaceFunction symplectic_fourier(const PhaseSpaceFunction &F);
/// Explicit inverse of symplectic_fourier (which happens to be an involution).
PhaseSpaceFunction inverse_symplectic_fourier(const PhaseSpaceFunction &F);

/// Anti-KD distribution F_symp(X0_A) = conj(KD_{A^*}).
PhaseSpaceFunction akd(const Operator &A);

/// Wigner function F_symp(X^(1/2)_A); odd-order groups only.
PhaseSpaceFunction wigner(const Operator &A);

/// Operator whose standard characteristic function X0 is the given table.
Operator from_char_fn(const PhaseSpaceFunction &X0);

/// Born-rule marginals of a state's KD distribution.
struct Marginals {
    /// sum_chi KD(g, chi) = K(g, g) = <g|rho|g>; averages to 1 under mu_G.
    Eigen::VectorXd position;
    /// (1/|G|) sum_g KD(g, chi) = <chi|rho|chi>; sums to 1.
    Eigen::VectorXd momentum;
};

/// Throws PreconditionError if rho is not a state at tolerance `tol`.
Marginals marginals(const Operator &rho, double tol = 1e-9);

/// Standard-ordered quantisation of f (x) h: multiplication by f composed
/// with the Fourier multiplier h. Kernel f(g) (F^{-1} h)(g - g').
Operator kohn_nirenberg(const GFunction &f, const DualFunction &h);

}  // namespace kdlab
