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

#include "kdlab/kd.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "kdlab/errors.hpp"
#include "kdlab/weyl_heisenberg.hpp"

namespace kdlab {

PhaseSpaceFunction kd(const Operator &A) {
    const auto &X = A.group->character_table();
    const double n = A.dim();
    CMatrix inner = A.kernel * X.transpose() / n;  // (g, c): (1/|G|) sum_g' K(g, g') chi_c(g')
    return PhaseSpaceFunction(A.group, X.transpose().conjugate().cwiseProduct(inner));
}

PhaseSpaceFunction kd_pure(const GFunction &psi) {
    const auto &X = psi.group->character_table();
    const DualFunction hat = fourier(psi);
    CMatrix outer = psi.values * hat.values.adjoint();
    return PhaseSpaceFunction(psi.group, X.transpose().conjugate().cwiseProduct(outer));
}

Operator kd_inverse(const PhaseSpaceFunction &F) {
    const auto &X = F.group->character_table();
    CMatrix weighted = F.values.cwiseProduct(X.transpose());  // F(g, c) chi_c(g)
    return Operator(F.group, weighted * X.conjugate());       // ... times conj(chi_c(g'))
}

const char *to_string(CharOrder order) {
    switch (order) {
        case CharOrder::standard0:
            return "standard0";
        case CharOrder::standard1:
            return "standard1";
        case CharOrder::half:
            return "half";
    }
    return "?";
}

CharOrder parse_char_order(std::string_view text) {
    std::string t(text);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t == "0" || t == "standard0") return CharOrder::standard0;
    if (t == "1" || t == "standard1") return CharOrder::standard1;
    if (t == "half" || t == "1/2") return CharOrder::half;
    throw ParseError("unknown characteristic-function order '" + t + "' (expected 0, 1 or half)");
}

namespace {

// X0(g, chi) = tr(A M_chi T_g). For fixed g the product A T_g is a column
// permutation of K, so tr(A T_g M_chi) collapses to a weighted diagonal sum:
// tr(A M_chi T_g) = (1/|G|) sum_x K(x, x + g) chi(x + g).
CMatrix standard_char_table(const Operator &A) {
    const auto &G = *A.group;
    const int n = G.order();
    CMatrix diag(n, n);  // diag(g, y) = K(y - g, y)
    for (int g = 0; g < n; ++g) {
        for (int y = 0; y < n; ++y) diag(g, y) = A.kernel(G.sub(y, g), y);
    }
    return diag * G.character_table().transpose() / static_cast<double>(n);
}

}  // namespace

PhaseSpaceFunction char_fn(const Operator &A, CharOrder order) {
    const auto &G = *A.group;
    if (order == CharOrder::half && !G.doubling_invertible()) {
        throw UnsupportedOrderError("half-order characteristic function needs odd cyclic factors; " + G.spec() +
                                    " has an even factor");
    }
    CMatrix table = standard_char_table(A);
    const int n = G.order();
    if (order == CharOrder::standard1) {
        table = table.cwiseProduct(G.character_table().transpose().conjugate());
    } else if (order == CharOrder::half) {
        for (int g = 0; g < n; ++g) {
            const int half_g = G.halve(g);
            for (int c = 0; c < n; ++c) table(g, c) *= std::conj(G.pair(c, half_g));
        }
    }
    return PhaseSpaceFunction(A.group, std::move(table));
}

PhaseSpaceFunction symplectic_fourier(const PhaseSpaceFunction &F) {
    const auto &X = F.group->character_table();
    const double n = F.group->order();
    // R(g, c) = (1/|G|) sum_{g', c'} X(c, g') F(g', c') conj(X(c', g)).
    CMatrix r = (X * F.values * X.conjugate()).transpose() / n;
    return PhaseSpaceFunction(F.group, std::move(r));
}

PhaseSpaceFunction inverse_symplectic_fourier(const PhaseSpaceFunction &R) {
    const auto &X = R.group->character_table();
    const double n = R.group->order();
    // F(g', c') = (1/|G|) sum_{g, c} R(g, c) conj(X(c, g')) X(c', g).
    CMatrix f = X.conjugate().transpose() * R.values.transpose() * X.transpose() / n;
    return PhaseSpaceFunction(R.group, std::move(f));
}

PhaseSpaceFunction akd(const Operator &A) { return symplectic_fourier(char_fn(A, CharOrder::standard0)); }

PhaseSpaceFunction wigner(const Operator &A) { return symplectic_fourier(char_fn(A, CharOrder::half)); }

Operator from_char_fn(const PhaseSpaceFunction &X0) {
    const auto &X = X0.group->character_table();
    PhaseSpaceFunction x1(X0.group, X0.values.cwiseProduct(X.transpose().conjugate()));
    return kd_inverse(symplectic_fourier(x1));
}

Marginals marginals(const Operator &rho, double tol) {
    require_state(rho, tol);
    const PhaseSpaceFunction table = kd(rho);
    const double n = rho.dim();
    Marginals m;
    m.position = table.values.rowwise().sum().real();
    m.momentum = table.values.colwise().sum().real().transpose() / n;
    return m;
}

Operator kohn_nirenberg(const GFunction &f, const DualFunction &h) {
    require_same_group(f.group, h.group);
    const auto &G = *f.group;
    const GFunction conv = inverse_fourier(h);
    const int n = G.order();
    CMatrix k(n, n);
    for (int g = 0; g < n; ++g) {
        for (int gp = 0; gp < n; ++gp) k(g, gp) = f(g) * conv(G.sub(g, gp));
    }
    return Operator(f.group, std::move(k));
}

}  // namespace kdlab
