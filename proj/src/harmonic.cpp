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

#include "kdlab/harmonic.hpp"

#include <cmath>

#include "kdlab/errors.hpp"

namespace kdlab {

void require_same_group(const GroupPtr &a, const GroupPtr &b) {
    if (!a || !b) throw PreconditionError("missing group");
    if (a != b && !(*a == *b)) {
        throw PreconditionError("group mismatch: " + a->spec() + " vs " + b->spec());
    }
}

GFunction::GFunction(GroupPtr g, CVector v) : group(std::move(g)), values(std::move(v)) {
    if (values.size() != group->order()) {
        throw PreconditionError("function on " + group->spec() + " needs " + std::to_string(group->order()) +
                                " values, got " + std::to_string(values.size()));
    }
}

GFunction GFunction::zeros(GroupPtr g) {
    const int n = g->order();
    return GFunction(std::move(g), CVector::Zero(n));
}

DualFunction::DualFunction(GroupPtr g, CVector v) : group(std::move(g)), values(std::move(v)) {
    if (values.size() != group->order()) {
        throw PreconditionError("function on the dual of " + group->spec() + " needs " +
                                std::to_string(group->order()) + " values, got " +
                                std::to_string(values.size()));
    }
}

DualFunction DualFunction::zeros(GroupPtr g) {
    const int n = g->order();
    return DualFunction(std::move(g), CVector::Zero(n));
}

Complex l2_inner(const GFunction &a, const GFunction &b) {
    require_same_group(a.group, b.group);
    return a.values.dot(b.values) / static_cast<double>(a.group->order());
}

double l2_norm(const GFunction &psi) {
    return std::sqrt(psi.values.squaredNorm() / static_cast<double>(psi.group->order()));
}

Complex l2_inner(const DualFunction &a, const DualFunction &b) {
    require_same_group(a.group, b.group);
    return a.values.dot(b.values);
}

double l2_norm(const DualFunction &phi) { return phi.values.norm(); }

DualFunction fourier(const GFunction &psi) {
    const auto &X = psi.group->character_table();
    CVector out = X.conjugate() * psi.values / static_cast<double>(psi.group->order());
    return DualFunction(psi.group, std::move(out));
}

GFunction inverse_fourier(const DualFunction &phi) {
    const auto &X = phi.group->character_table();
    CVector out = X.transpose() * phi.values;
    return GFunction(phi.group, std::move(out));
}

GFunction character_function(GroupPtr G, int chi) {
    CVector v = G->character_table().row(chi).transpose();
    return GFunction(std::move(G), std::move(v));
}

GFunction indicator(GroupPtr G, const Subgroup &H) {
    CVector v = CVector::Zero(G->order());
    for (int h : H.elements()) v[h] = 1.0;
    return GFunction(std::move(G), std::move(v));
}

GFunction haar_density(GroupPtr G, const Subgroup &H) {
    GFunction f = indicator(G, H);
    f.values *= static_cast<double>(G->order()) / H.order();
    return f;
}

double haar_mass(const FiniteAbelianGroup &G, const Subgroup &H) {
    return static_cast<double>(H.order()) / G.order();
}

double dual_haar_mass(const Subgroup &H_perp) { return static_cast<double>(H_perp.order()); }

}  // namespace kdlab
