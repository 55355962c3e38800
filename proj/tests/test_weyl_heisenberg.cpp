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

#include <gtest/gtest.h>

#include "kdlab/errors.hpp"
#include "kdlab/kd.hpp"
#include "kdlab/sampling.hpp"
#include "kdlab/weyl_heisenberg.hpp"
#include "oracles.hpp"

using namespace kdlab;

namespace {

const std::vector<std::vector<int>> kBattery = {{2}, {3}, {4}, {2, 2}, {6}, {8}, {9}, {2, 4}, {3, 3}, {12}, {2, 2, 2}};

WHElement random_element(const FiniteAbelianGroup &G, Rng &rng) {
    std::uniform_int_distribution<int> idx(0, G.order() - 1);
    std::uniform_real_distribution<double> turn(0.0, 1.0);
    WHElement a;
    a.g = idx(rng);
    a.chi = idx(rng);
    a.z = std::polar(1.0, 2.0 * std::numbers::pi * turn(rng));
    return a;
}

}  // namespace

TEST(weyl_heisenberg, multiplication_examples) {
    auto Z4 = parse_group("Z4");
    const WHElement a{1, 1, 1.0};
    const WHElement sq = wh_mul(*Z4, a, a);
    EXPECT_TRUE(wh_equal(sq, WHElement{2, 2, Complex(0, -1)}, 1e-12));
    EXPECT_TRUE(wh_equal(wh_mul(*Z4, a, wh_identity()), a, 1e-15));

    auto Z2 = parse_group("Z2");
    EXPECT_TRUE(wh_equal(wh_mul(*Z2, WHElement{1, 1, 1.0}, WHElement{1, 1, 1.0}), WHElement{0, 0, -1.0}, 1e-12));
}

TEST(weyl_heisenberg, inverse_examples) {
    auto Z4 = parse_group("Z4");
    EXPECT_TRUE(wh_equal(wh_inv(*Z4, wh_identity()), wh_identity(), 1e-15));
    const WHElement a{1, 1, 1.0};
    EXPECT_TRUE(wh_equal(wh_inv(*Z4, a), WHElement{3, 3, Complex(0, -1)}, 1e-12));
    EXPECT_TRUE(wh_equal(wh_inv(*Z4, wh_inv(*Z4, a)), a, 1e-12));
}

TEST(weyl_heisenberg, group_axioms_on_random_elements) {
    Rng rng(3);
    for (const auto &f : kBattery) {
        auto G = make_group(f);
        for (int t = 0; t < 50; ++t) {
            const WHElement a = random_element(*G, rng), b = random_element(*G, rng), c = random_element(*G, rng);
            EXPECT_TRUE(wh_equal(wh_mul(*G, wh_mul(*G, a, b), c), wh_mul(*G, a, wh_mul(*G, b, c)), 1e-12));
            EXPECT_TRUE(wh_equal(wh_mul(*G, a, wh_inv(*G, a)), wh_identity(), 1e-12));
            EXPECT_TRUE(wh_equal(wh_mul(*G, wh_inv(*G, a), a), wh_identity(), 1e-12));
        }
    }
}

TEST(weyl_heisenberg, rejects_non_unit_phase) {
    auto G = parse_group("Z3");
    EXPECT_THROW((WHElement{0, 0, 1.1}.validate(*G)), PreconditionError);
    EXPECT_THROW((WHElement{5, 0, 1.0}.validate(*G)), PreconditionError);
}

TEST(weyl_heisenberg, unitary_action_examples) {
    auto Z2 = parse_group("Z2");
    EXPECT_LT(max_abs_diff(wh_unitary(Z2, wh_identity()), Operator::identity(Z2)), 1e-15);
    CVector v(2);
    v << Complex(0.3, 0.1), Complex(-1.2, 0.0);
    const GFunction psi(Z2, v);
    const GFunction t = wh_act(psi, WHElement{1, 0, 1.0});
    EXPECT_LT(std::abs(t(0) - v[1]) + std::abs(t(1) - v[0]), 1e-15);
    const GFunction m = wh_act(psi, WHElement{0, 1, 1.0});
    EXPECT_LT(std::abs(m(0) - v[0]) + std::abs(m(1) + v[1]), 1e-15);
    const GFunction viaop = wh_unitary(Z2, WHElement{1, 1, 1.0}).apply(psi);
    EXPECT_LT((viaop.values - wh_act(psi, WHElement{1, 1, 1.0}).values).norm(), 1e-14);
}

TEST(weyl_heisenberg, conjugation_examples) {
    auto Z2 = parse_group("Z2");
    CVector d0(2), d1(2);
    d0 << std::sqrt(2.0), 0.0;
    d1 << 0.0, std::sqrt(2.0);
    const Operator P0 = Operator::projector(GFunction(Z2, d0));
    const Operator P1 = Operator::projector(GFunction(Z2, d1));
    EXPECT_LT(max_abs_diff(wh_conjugate(P0, WHElement{1, 0, 1.0}), P1), 1e-14);
    EXPECT_LT(max_abs_diff(wh_conjugate(P0, wh_identity()), P0), 1e-15);
}

TEST(weyl_heisenberg, representation_and_unitarity) {
    Rng rng(5);
    for (const auto &f : kBattery) {
        auto G = make_group(f);
        const Operator I = Operator::identity(G);
        for (int t = 0; t < 100; ++t) {
            const WHElement a = random_element(*G, rng), b = random_element(*G, rng);
            const Operator Ua = wh_unitary(G, a);
            ASSERT_LT(max_abs_diff(Ua * wh_unitary(G, b), wh_unitary(G, wh_mul(*G, a, b))), 1e-10 * G->order());
            ASSERT_LT(max_abs_diff(Ua * Ua.adjoint(), I), 1e-10 * G->order());
        }
    }
}

TEST(weyl_heisenberg, kd_covariance) {
    Rng rng(9);
    for (const auto &f : kBattery) {
        auto G = make_group(f);
        const int n = G->order();
        for (int t = 0; t < 20; ++t) {
            const Operator A = random_operator(G, rng);
            const WHElement a = random_element(*G, rng);
            const Operator B = wh_conjugate(A, a);
            EXPECT_NEAR(std::abs(B.trace() - A.trace()), 0.0, 1e-10);
            const PhaseSpaceFunction kA = kd(A), kB = kd(B);
            double worst = 0.0;
            for (int g = 0; g < n; ++g) {
                for (int c = 0; c < n; ++c) {
                    const Complex moved = kA(oracle::sub(f, g, a.g), oracle::sub(f, c, a.chi));
                    worst = std::max(worst, std::abs(kB(g, c) - moved));
                }
            }
            EXPECT_LT(worst, 1e-10) << G->spec();
        }
    }
}
