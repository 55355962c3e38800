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

#include <random>

#include <gtest/gtest.h>

#include "kdlab/errors.hpp"
#include "kdlab/simplex_lsq.hpp"
#include "oracles.hpp"

using namespace kdlab;

TEST(simplex_lsq, vertex_target) {
    Eigen::MatrixXd A(2, 3);
    A << 1, 0, 0,
         0, 1, 0;
    const Eigen::VectorXd b = A.col(1);
    const SimplexLsqResult r = simplex_lsq(A, b);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.residual, 0.0, 1e-14);
    EXPECT_NEAR(r.lambda[1], 1.0, 1e-14);
}

TEST(simplex_lsq, point_outside_projects_to_edge) {
    Eigen::MatrixXd A(2, 2);
    A << 0, 1,
         0, 0;
    Eigen::VectorXd b(2);
    b << 0.25, 1.0;
    const SimplexLsqResult r = simplex_lsq(A, b);
    EXPECT_NEAR(r.lambda[0], 0.75, 1e-12);
    EXPECT_NEAR(r.lambda[1], 0.25, 1e-12);
    EXPECT_NEAR(r.residual, 1.0, 1e-12);
}

TEST(simplex_lsq, tie_prefers_lowest_index) {
    Eigen::MatrixXd A(2, 4);
    A << 1, -1, 0, 0,
         0, 0, 1, -1;
    const SimplexLsqResult r = simplex_lsq(A, Eigen::VectorXd::Zero(2));
    EXPECT_NEAR(r.residual, 0.0, 1e-14);
    EXPECT_NEAR(r.lambda[0], 0.5, 1e-14);
    EXPECT_NEAR(r.lambda[1], 0.5, 1e-14);
    EXPECT_EQ(r.lambda[2], 0.0);
    EXPECT_EQ(r.lambda[3], 0.0);
}

TEST(simplex_lsq, rejects_bad_shapes) {
    EXPECT_THROW(simplex_lsq(Eigen::MatrixXd(2, 0), Eigen::VectorXd(2)), PreconditionError);
    EXPECT_THROW(simplex_lsq(Eigen::MatrixXd::Ones(2, 2), Eigen::VectorXd(3)), PreconditionError);
}

TEST(simplex_lsq, matches_support_enumeration) {
    std::mt19937_64 rng(31);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 2 + trial % 6;
        const int n = 1 + trial % 9;
        Eigen::MatrixXd A(m, n);
        Eigen::VectorXd b(m);
        for (int i = 0; i < m; ++i) {
            b[i] = gauss(rng);
            for (int j = 0; j < n; ++j) A(i, j) = gauss(rng);
        }
        const SimplexLsqResult r = simplex_lsq(A, b);
        ASSERT_TRUE(r.converged);
        EXPECT_GE(r.lambda.minCoeff(), 0.0);
        EXPECT_NEAR(r.lambda.sum(), 1.0, 1e-12);
        EXPECT_LE(r.kkt_violation, 1e-9);
        EXPECT_NEAR(r.residual, oracle::simplex_lsq_min(A, b), 1e-9) << "trial " << trial;
    }
}

TEST(simplex_lsq, degenerate_columns) {
    Eigen::MatrixXd A(3, 6);
    A << 1, 1, 0, 0, 0.5, 0.5,
         0, 0, 1, 1, 0.5, 0.5,
         0, 0, 0, 0, 0, 0;
    Eigen::VectorXd b(3);
    b << 0.3, 0.7, 0.0;
    const SimplexLsqResult r = simplex_lsq(A, b);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.residual, 0.0, 1e-12);
    EXPECT_NEAR((A * r.lambda - b).norm(), 0.0, 1e-12);
}
