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

#include "kdlab/weyl_heisenberg.hpp"

#include <cmath>

#include "kdlab/errors.hpp"

namespace kdlab {

void WHElement::validate(const FiniteAbelianGroup &G) const {
    if (g < 0 || g >= G.order() || chi < 0 || chi >= G.order()) {
        throw PreconditionError("Weyl-Heisenberg element out of range for " + G.spec());
    }
    if (std::abs(std::abs(z) - 1.0) > 1e-12) {
        throw PreconditionError("Weyl-Heisenberg phase must have modulus 1");
    }
}

WHElement wh_identity() { return WHElement{}; }

WHElement wh_mul(const FiniteAbelianGroup &G, const WHElement &a, const WHElement &b) {
    return WHElement{G.add(a.g, b.g), G.mul_chars(a.chi, b.chi), a.z * b.z * std::conj(G.pair(b.chi, a.g))};
}

WHElement wh_inv(const FiniteAbelianGroup &G, const WHElement &a) {
    return WHElement{G.neg(a.g), G.conj_char(a.chi), std::conj(a.z * G.pair(a.chi, a.g))};
}

Operator wh_unitary(const GroupPtr &G, const WHElement &a) {
    a.validate(*G);
    const int n = G->order();
    CMatrix k = CMatrix::Zero(n, n);
    // (U psi)(x) = z chi(x) psi(x - g)  =>  K(x, x - g) = |G| z chi(x).
    for (int x = 0; x < n; ++x) k(x, G->sub(x, a.g)) = static_cast<double>(n) * a.z * G->pair(a.chi, x);
    return Operator(G, std::move(k));
}

Operator wh_conjugate(const Operator &A, const WHElement &a) {
    const auto &G = *A.group;
    a.validate(G);
    const int n = G.order();
    // Entrywise: K'(x, y) = z conj(z) chi(x) conj(chi(y)) K(x - g, y - g).
    CMatrix k(n, n);
    for (int x = 0; x < n; ++x) {
        const int xs = G.sub(x, a.g);
        const Complex cx = G.pair(a.chi, x);
        for (int y = 0; y < n; ++y) {
            k(x, y) = cx * std::conj(G.pair(a.chi, y)) * A.kernel(xs, G.sub(y, a.g)) * std::norm(a.z);
        }
    }
    return Operator(A.group, std::move(k));
}

GFunction wh_act(const GFunction &psi, const WHElement &a) {
    const auto &G = *psi.group;
    a.validate(G);
    CVector out(G.order());
    for (int x = 0; x < G.order(); ++x) out[x] = a.z * G.pair(a.chi, x) * psi(G.sub(x, a.g));
    return GFunction(psi.group, std::move(out));
}

bool wh_equal(const WHElement &a, const WHElement &b, double tol) {
    return a.g == b.g && a.chi == b.chi && std::abs(a.z - b.z) <= tol;
}

}  // namespace kdlab
