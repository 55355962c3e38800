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

#include "kdlab/classify.hpp"

#include <cmath>
#include <sstream>

#include "kdlab/errors.hpp"

namespace kdlab {

namespace {

KdPureState build_state(const GroupPtr &G, const Subgroup &H, const Subgroup &H_perp, int g_rep, int chi_rep) {
    const int n = G->order();
    const double amplitude = std::sqrt(static_cast<double>(n) / H.order());
    CVector v = CVector::Zero(n);
    for (int h : H.elements()) {
        const int x = G->add(g_rep, h);
        v[x] = amplitude * G->pair(chi_rep, x);
    }
    return KdPureState{H, H_perp, g_rep, chi_rep, GFunction(G, std::move(v))};
}

}  // namespace

KdPureState make_subgroup_state(const GroupPtr &G, const Subgroup &H, int g, int chi) {
    if (g < 0 || g >= G->order() || chi < 0 || chi >= G->order()) {
        throw PreconditionError("element or character index out of range for " + G->spec());
    }
    Subgroup H_perp = annihilator(*G, H);
    const int g_rep = coset_rep_of(*G, H, g);
    const int chi_rep = coset_rep_of(*G, H_perp, chi);
    return build_state(G, H, H_perp, g_rep, chi_rep);
}

PhaseSpaceFunction expected_kd(const GroupPtr &G, const KdPureState &state) {
    const int n = G->order();
    CMatrix table = CMatrix::Zero(n, n);
    for (int h : state.H.elements()) {
        const int g = G->add(state.g_rep, h);
        for (int eta : state.H_perp.elements()) table(g, G->mul_chars(state.chi_rep, eta)) = 1.0;
    }
    return PhaseSpaceFunction(G, std::move(table));
}

std::vector<KdPureState> enumerate_kd_positive_pure(const GroupPtr &G, int bound) {
    std::vector<KdPureState> family;
    for (const Subgroup &H : enumerate_subgroups(*G, bound)) {
        const Subgroup H_perp = annihilator(*G, H);
        const std::vector<int> g_reps = coset_reps(*G, H);
        const std::vector<int> chi_reps = coset_reps(*G, H_perp);
        for (int g : g_reps) {
            for (int chi : chi_reps) family.push_back(build_state(G, H, H_perp, g, chi));
        }
    }
    return family;
}

std::optional<std::size_t> recognize_kd_positive_pure(const std::vector<KdPureState> &family,
                                                      const GFunction &psi, double tol) {
    const double norm = l2_norm(psi);
    if (std::abs(norm - 1.0) > tol) {
        std::ostringstream msg;
        msg << "recognition needs a unit vector; |psi| = " << norm;
        throw PreconditionError(msg.str());
    }
    std::optional<std::size_t> best;
    double best_overlap = 1.0 - tol;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const double overlap = std::abs(l2_inner(family[i].vector, psi));
        if (overlap > best_overlap) {
            best_overlap = overlap;
            best = i;
        }
    }
    return best;
}

}  // namespace kdlab
