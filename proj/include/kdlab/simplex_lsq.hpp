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

#include <Eigen/Dense>

namespace kdlab {

struct SimplexLsqResult {
    Eigen::VectorXd lambda;
    /// ||A lambda - b||, evaluated directly from the final lambda.
    double residual = 0.0;
    /// Multiplier of the constraint sum(lambda) = 1.
    double nu = 0.0;
    /// max(0, -min_j mu_j) with mu = A^T (A lambda - b) + nu.
    double kkt_violation = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Solves  min ||A lambda - b||  subject to  lambda >= 0, sum(lambda) = 1
/// with a primal active-set method. Each equality-constrained subproblem is
/// solved in null-space coordinates by a rank-revealing QR, so collinear or
/// duplicated columns are tolerated. `max_iter` <= 0 picks 10 * cols + 100.
SimplexLsqResult simplex_lsq(const Eigen::MatrixXd &A, const Eigen::VectorXd &b, double kkt_tol = 1e-12,
                             int max_iter = 0);

}  // namespace kdlab
