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

#include "kdlab/sampling.hpp"

namespace kdlab {

namespace {

CMatrix gaussian_matrix(Rng &rng, int rows, int cols) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix m(rows, cols);
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < rows; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            m(i, j) = Complex(re, im);
        }
    }
    return m;
}

}  // namespace

Operator random_operator(const GroupPtr &G, Rng &rng) {
    return Operator(G, gaussian_matrix(rng, G->order(), G->order()));
}

Operator random_hermitian(const GroupPtr &G, Rng &rng) {
    const CMatrix k = gaussian_matrix(rng, G->order(), G->order());
    return Operator(G, (k + k.adjoint()) * 0.5);
}

GFunction haar_pure_state(const GroupPtr &G, Rng &rng) {
    CVector v = gaussian_matrix(rng, G->order(), 1).col(0);
    v *= std::sqrt(static_cast<double>(G->order())) / v.norm();
    return GFunction(G, std::move(v));
}

Operator random_state(const GroupPtr &G, Rng &rng, int rank) {
    const int n = G->order();
    if (rank <= 0 || rank > n) rank = n;
    const CMatrix b = gaussian_matrix(rng, n, rank);
    CMatrix m = b * b.adjoint();
    m /= m.trace().real();
    m = (m + m.adjoint()).eval() * 0.5;
    return Operator::from_matrix(G, m);
}

}  // namespace kdlab
