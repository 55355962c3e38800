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

#include "kdlab/simplex_lsq.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "kdlab/errors.hpp"

namespace kdlab {

namespace {

// Minimiser of ||A_P x - b|| over the affine plane sum(x) = 1, written as
// x = e_0 + Z y with Z = [e_i - e_0]. Returns the values on P in order.
Eigen::VectorXd solve_on_plane(const Eigen::MatrixXd &A, const Eigen::VectorXd &b, const std::vector<int> &P) {
    const int k = static_cast<int>(P.size());
    Eigen::VectorXd x = Eigen::VectorXd::Zero(k);
    x[0] = 1.0;
    if (k == 1) return x;
    Eigen::MatrixXd D(A.rows(), k - 1);
    for (int i = 1; i < k; ++i) D.col(i - 1) = A.col(P[i]) - A.col(P[0]);
    const Eigen::VectorXd r0 = b - A.col(P[0]);
    const Eigen::VectorXd y = D.completeOrthogonalDecomposition().solve(r0);
    x.tail(k - 1) = y;
    x[0] = 1.0 - y.sum();
    return x;
}

}  // namespace

SimplexLsqResult simplex_lsq(const Eigen::MatrixXd &A, const Eigen::VectorXd &b, double kkt_tol, int max_iter) {
    const int n = static_cast<int>(A.cols());
    if (n == 0) throw PreconditionError("simplex least squares needs at least one column");
    if (A.rows() != b.size()) throw PreconditionError("simplex least squares: row count mismatch");
    if (max_iter <= 0) max_iter = 10 * n + 100;

    const double scale = 1.0 + A.colwise().squaredNorm().maxCoeff();
    SimplexLsqResult out;
    out.lambda = Eigen::VectorXd::Zero(n);

    // Lowest index among (numerically) tied vertices, so results do not hinge
    // on rounding noise.
    const Eigen::VectorXd dist = (A.colwise() - b).colwise().squaredNorm().transpose();
    const double tie = 1e-12 * scale;
    int start = 0;
    for (int j = 1; j < n; ++j) {
        if (dist[j] < dist[start] - tie) start = j;
    }
    out.lambda[start] = 1.0;
    std::vector<int> passive{start};
    std::vector<char> in_passive(static_cast<std::size_t>(n), 0);
    in_passive[start] = 1;
    // Columns whose entry stalled at zero; cleared whenever the objective drops.
    std::vector<char> blocked(static_cast<std::size_t>(n), 0);
    double objective = (A * out.lambda - b).squaredNorm();

    auto multipliers = [&](Eigen::VectorXd &mu) {
        const Eigen::VectorXd grad = A.transpose() * (A * out.lambda - b);
        double nu = 0.0;
        for (int j : passive) nu -= grad[j];
        nu /= static_cast<double>(passive.size());
        mu = grad.array() + nu;
        return nu;
    };

    Eigen::VectorXd mu;
    for (out.iterations = 0; out.iterations < max_iter; ++out.iterations) {
        out.nu = multipliers(mu);
        int entering = -1;
        double most_negative = -kkt_tol * scale;
        for (int j = 0; j < n; ++j) {
            if (in_passive[j] || blocked[j]) continue;
            if (mu[j] < most_negative - (entering < 0 ? 0.0 : tie)) {
                most_negative = mu[j];
                entering = j;
            }
        }
        if (entering < 0) {
            out.converged = true;
            break;
        }
        passive.push_back(entering);
        in_passive[entering] = 1;

        for (int inner = 0; inner <= n; ++inner) {
            const Eigen::VectorXd z = solve_on_plane(A, b, passive);
            const int k = static_cast<int>(passive.size());
            double alpha = 1.0;
            for (int i = 0; i < k; ++i) {
                if (z[i] > 0.0) continue;
                const double cur = out.lambda[passive[i]];
                const double denom = cur - z[i];
                alpha = std::min(alpha, denom > 0.0 ? cur / denom : 0.0);
            }
            for (int i = 0; i < k; ++i) {
                const int j = passive[i];
                out.lambda[j] += alpha * (z[i] - out.lambda[j]);
            }
            if (alpha >= 1.0) break;
            // Drop every coordinate that reached the boundary.
            std::vector<int> kept;
            for (int i = 0; i < k; ++i) {
                const int j = passive[i];
                if (z[i] <= 0.0 && out.lambda[j] <= 1e-15) {
                    out.lambda[j] = 0.0;
                    in_passive[j] = 0;
                } else {
                    kept.push_back(j);
                }
            }
            if (kept.empty()) {  // cannot happen for a feasible start; keep the entering vertex
                kept.push_back(entering);
                in_passive[entering] = 1;
            }
            passive.swap(kept);
        }
        const double s = out.lambda.sum();
        if (s > 0.0) out.lambda /= s;

        const double next = (A * out.lambda - b).squaredNorm();
        if (next < objective * (1.0 - 1e-14) - 1e-300) {
            std::fill(blocked.begin(), blocked.end(), 0);
            objective = next;
        } else if (!in_passive[entering]) {
            blocked[entering] = 1;
        } else {
            objective = std::min(objective, next);
        }
    }

    out.nu = multipliers(mu);
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
        if (!in_passive[j]) worst = std::max(worst, -mu[j]);
    }
    out.kkt_violation = worst;
    out.residual = (A * out.lambda - b).norm();
    return out;
}

}  // namespace kdlab
