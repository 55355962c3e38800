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

/// Element (g, chi, z) of the Weyl-Heisenberg group G x G^ x S^1. The phase
/// is kept as a unit complex number, not an angle.
struct WHElement {
    int g = 0;
    int chi = 0;
    Complex z{1.0, 0.0};

    /// Throws PreconditionError when |z| differs from 1 by more than 1e-12.
    void validate(const FiniteAbelianGroup &G) const;
};

WHElement wh_identity();

/// (g, chi, z)(g', chi', z') = (g + g', chi chi', z z' conj(chi'(g))).
WHElement wh_mul(const FiniteAbelianGroup &G, const WHElement &a, const WHElement &b);

/// (g, chi, z)^{-1} = (-g, conj chi, conj(z chi(g))).
WHElement wh_inv(const FiniteAbelianGroup &G, const WHElement &a);

/// U(g, chi, z) = z M_chi T_g, with (T_g psi)(x) = psi(x - g) and
/// (M_chi psi)(x) = chi(x) psi(x). Returned as a dense kernel.
Operator wh_unitary(const GroupPtr &G, const WHElement &a);

/// U(a) A U(a)^*.
Operator wh_conjugate(const Operator &A, const WHElement &a);

/// U(a) psi.
GFunction wh_act(const GFunction &psi, const WHElement &a);

bool wh_equal(const WHElement &a, const WHElement &b, double tol);

}  // namespace kdlab
