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

#include "kdlab/group.hpp"

namespace kdlab {

// Measure conventions: mu_G puts mass 1/|G| on every point (a probability
// measure) and mu_{G^} is counting measure, which is the scaling that makes
// Fourier inversion hold without extra constants.

/// Function on G, indexed in canonical element order.
struct GFunction {
    GroupPtr group;
    CVector values;

    GFunction() = default;
    GFunction(GroupPtr g, CVector v);
    static GFunction zeros(GroupPtr g);

    Complex operator()(int g) const { return values[g]; }
    int size() const { return static_cast<int>(values.size()); }
};

/// Function on G^, indexed by character label.
struct DualFunction {
    GroupPtr group;
    CVector values;

    DualFunction() = default;
    DualFunction(GroupPtr g, CVector v);
    static DualFunction zeros(GroupPtr g);

    Complex operator()(int chi) const { return values[chi]; }
    int size() const { return static_cast<int>(values.size()); }
};

/// <a, b> = (1/|G|) sum conj(a) b.
Complex l2_inner(const GFunction &a, const GFunction &b);
double l2_norm(const GFunction &psi);
/// <a, b> = sum conj(a) b.
Complex l2_inner(const DualFunction &a, const DualFunction &b);
double l2_norm(const DualFunction &phi);

/// psi^(chi) = (1/|G|) sum_g psi(g) conj(chi(g)).
DualFunction fourier(const GFunction &psi);
/// psi(g) = sum_chi phi(chi) chi(g).
GFunction inverse_fourier(const DualFunction &phi);

/// The character chi_c viewed as a function on G (a momentum eigenvector).
GFunction character_function(GroupPtr G, int chi);
/// Indicator function of a subset of G given as a subgroup.
GFunction indicator(GroupPtr G, const Subgroup &H);

/// Probability Haar density of H relative to mu_G: (|G|/|H|) 1_H. Its
/// Fourier transform is the indicator of H^perp.
GFunction haar_density(GroupPtr G, const Subgroup &H);

/// mu_G(H) = |H| / |G|.
double haar_mass(const FiniteAbelianGroup &G, const Subgroup &H);
/// mu_{G^}(H^perp) = |H^perp|.
double dual_haar_mass(const Subgroup &H_perp);

void require_same_group(const GroupPtr &a, const GroupPtr &b);

}  // namespace kdlab
