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

#include "kdlab/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kdlab/kd.hpp"
#include "kdlab/sampling.hpp"

namespace kdlab {

double evaluate_gap(const PureFamilyBasis &basis, const Operator &rho, const Operator &W) {
    double best = -std::numeric_limits<double>::infinity();
    for (const KdPureState &s : basis.states()) best = std::max(best, hs_inner(W, s.projector()).real());
    return hs_inner(W, rho).real() - best;
}

namespace {

Operator traceless_unit(Operator W) {
    W.kernel = (W.kernel + W.kernel.adjoint()).eval() * 0.5;
    const double n = W.dim();
    W.kernel.diagonal().array() -= W.kernel.trace() / n;
    const double norm = hs_norm(W);
    if (norm > 0.0) W.kernel /= norm;
    return W;
}

Operator sample_direction(const GroupPtr &G, Rng &rng, bool kd_signs) {
    for (;;) {
        Operator W;
        if (kd_signs) {
            std::bernoulli_distribution coin(0.5);
            const int n = G->order();
            CMatrix table(n, n);
            for (int c = 0; c < n; ++c) {
                for (int g = 0; g < n; ++g) table(g, c) = coin(rng) ? 1.0 : -1.0;
            }
            W = kd_inverse(PhaseSpaceFunction(G, std::move(table)));
        } else {
            W = random_hermitian(G, rng);
        }
        W = traceless_unit(std::move(W));
        if (hs_norm(W) > 0.5) return W;
    }
}

// Makes rho exactly KD-real, then mixes in I/|G| until both the spectrum and
// the KD table are nonnegative.
Operator repair(const Operator &rho) {
    Operator r = project_kd_real(rho);
    r.kernel = (r.kernel + r.kernel.adjoint()).eval() * 0.5;
    const double n = r.dim();
    const double lmin = hermitian_eigenvalues(r).minCoeff();
    const double kmin = kd(r).values.real().minCoeff();
    const double violation = std::max({0.0, -lmin, -kmin});
    const double eps = std::min(1.0, 2.0 * n * violation);
    if (eps > 0.0) r = r * Complex(1.0 - eps) + Operator::maximally_mixed(r.group) * Complex(eps);
    return r;
}

}  // namespace

WitnessResult find_conv_gap_witness(const PureFamilyBasis &basis, const WitnessOptions &options) {
    const GroupPtr &G = basis.group();
    Rng rng(options.seed);
    const Operator mixed = Operator::maximally_mixed(G);
    WitnessResult best;
    best.rho = mixed;
    best.W = Operator::zero(G);
    double best_gap = -std::numeric_limits<double>::infinity();
    // On the trivial group the only state is I itself; there is nowhere to walk.
    if (G->order() == 1) return best;

    while (best.steps_used < options.budget) {
        const Operator W = sample_direction(G, rng, best.directions % 2 == 0);
        ++best.directions;
        Operator rho = mixed;
        for (int s = 0; s < options.steps_per_direction && best.steps_used < options.budget; ++s) {
            ++best.steps_used;
            const Operator target = rho + W * Complex(options.step);
            const ProjectionResult proj =
                project_onto_kdpos(target, options.projection_iterations, options.projection_tol);
            rho = repair(proj.rho);
            if (!is_kd_positive_state(rho, options.tol.positivity, options.tol.positivity).verdict) continue;
            const MembershipResult m = conv_membership(basis, rho, options.tol);
            if (m.verdict != Verdict::outside || m.gap <= best_gap) continue;
            const double verified = evaluate_gap(basis, rho, *m.witness);
            if (std::abs(verified - m.gap) > options.tol.membership) continue;
            best_gap = m.gap;
            best.rho = rho;
            best.W = *m.witness;
            best.gap = m.gap;
            best.verified_gap = verified;
            best.found = verified > options.tol.witness;
        }
        if (best.found && options.stop_at_first) break;
    }
    return best;
}

}  // namespace kdlab
