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

#include <random>

#include "kdlab/operator.hpp"

namespace kdlab {

using Rng = std::mt19937_64;

/// Kernel with i.i.d. standard complex Gaussian entries.
Operator random_operator(const GroupPtr &G, Rng &rng);
/// Hermitian part of random_operator.
Operator random_hermitian(const GroupPtr &G, Rng &rng);
/// Uniformly (Haar) distributed unit vector in L^2(G, mu_G).
GFunction haar_pure_state(const GroupPtr &G, Rng &rng);
/// Normalised Wishart state B B^* / tr(B B^*) with B of the given rank
/// (rank <= 0 means full rank).
Operator random_state(const GroupPtr &G, Rng &rng, int rank = 0);

}  // namespace kdlab
