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

#include <cmath>

#include <gtest/gtest.h>

#include "kdlab/errors.hpp"
#include "kdlab/kd.hpp"
#include "kdlab/sampling.hpp"
#include "kdlab/weyl_heisenberg.hpp"
#include "oracles.hpp"

using namespace kdlab;

namespace {

const std::vector<std::vector<int>> kBattery = {{2}, {3}, {4}, {2, 2}, {6}, {8}, {9}, {2, 4}, {3, 3}, {12}, {2, 2, 2}};

GFunction z2_negative_state() {
    auto G = parse_group("Z2");
    CVector v(2);
    v << 1.2, std::sqrt(0.56);
    return GFunction(G, v);
}

CMatrix diff(const PhaseSpaceFunction &a, const CMatrix &b) { return a.values - b; }

}  // namespace

TEST(kd, z2_position_state) {
    auto G = parse_group("Z2");
    CVector v(2);
    v << std::sqrt(2.0), 0.0;
    const PhaseSpaceFunction F = kd(Operator::projector(GFunction(G, v)));
    CMatrix expect(2, 2);
    expect << 1.0, 1.0, 0.0, 0.0;
    EXPECT_LT(diff(F, expect).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(kd, z2_momentum_state) {
    auto G = parse_group("Z2");
    const PhaseSpaceFunction F = kd(Operator::projector(character_function(G, 1)));
    CMatrix expect(2, 2);
    expect << 0.0, 1.0, 0.0, 1.0;
    EXPECT_LT(diff(F, expect).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(kd, z2_negative_value) {
    const double b = std::sqrt(0.56);
    const PhaseSpaceFunction F = kd(Operator::projector(z2_negative_state()));
    EXPECT_NEAR(F(1, 1).real(), b * (b - 1.2) / 2.0, 1e-14);
    EXPECT_NEAR(F(1, 1).real(), -0.169, 1e-3);
    EXPECT_NEAR(F(1, 1).imag(), 0.0, 1e-15);
}

TEST(kd, matches_naive_loops) {
    Rng rng(1);
    for (const auto &f : kBattery) {
        auto G = make_group(f);
        const Operator A = random_operator(G, rng);
        EXPECT_LT(diff(kd(A), oracle::kd(f, A.kernel)).cwiseAbs().maxCoeff(), 1e-10) << G->spec();
        const GFunction psi = haar_pure_state(G, rng);
        EXPECT_LT(diff(kd_pure(psi), kd(Operator::projector(psi)).values).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(kd, unitarity_and_round_trip) {
    Rng rng(2);
    for (const auto &f : kBattery) {
        auto G = make_group(f);
        for (int t = 0; t < 100; ++t) {
            const Operator A = random_operator(G, rng), B = random_operator(G, rng);
            ASSERT_LT(std::abs(hs_inner(A, B) - l2_inner(kd(A), kd(B))), 1e-10);
            ASSERT_LT(max_abs_diff(kd_inverse(kd(A)), A), 1e-10);
        }
    }
}

TEST(kd, inverse_examples) {
    auto G = parse_group("Z3");
    const int n = G->order();
    CVector d0 = CVector::Zero(n);
    d0[0] = std::sqrt(3.0);
    const Operator P = Operator::projector(GFunction(G, d0));
    EXPECT_LT(max_abs_diff(kd_inverse(kd(P)), P), 1e-12);

    CMatrix ind = CMatrix::Zero(n, n);
    ind.col(0).setOnes();
    const Operator chi0 = kd_inverse(PhaseSpaceFunction(G, ind));
    EXPECT_LT(max_abs_diff(chi0, Operator::projector(character_function(G, 0))), 1e-12);

    EXPECT_LT(kd_inverse(PhaseSpaceFunction::zeros(G)).kernel.cwiseAbs().maxCoeff(), 1e-300);
}

TEST(kd, char_fn_matches_trace_definition) {
    Rng rng(4);
    for (const auto &f : kBattery) {
        auto G = make_group(f);
        const int n = G->order();
        const Operator A = random_operator(G, rng);
        const PhaseSpaceFunction X0 = char_fn(A, CharOrder::standard0);
        EXPECT_LT(diff(X0, oracle::char_fn0(f, A.kernel)).cwiseAbs().maxCoeff(), 1e-10);
        double worst = 0.0;
        for (int g = 0; g < n; ++g) {
            for (int c = 0; c < n; ++c) {
                const Complex direct = trace_of_product(A, wh_unitary(G, WHElement{g, c, 1.0}));
                worst = std::max(worst, std::abs(X0(g, c) - direct));
            }
        }
        EXPECT_LT(worst, 1e-10) << G->spec();
        const PhaseSpaceFunction X1 = char_fn(A, CharOrder::standard1);
        for (int g = 0; g < n; ++g) {
            for (int c = 0; c < n; ++c) EXPECT_LT(std::abs(X1(g, c) - X0(g, c) * std::conj(G->pair(c, g))), 1e-12);
        }
    }
}

TEST(kd, char_fn_examples) {
    auto G = parse_group("Z2");
    const PhaseSpaceFunction X = char_fn(Operator::projector(character_function(G, 0)), CharOrder::standard0);
    CMatrix expect(2, 2);
    expect << 1.0, 0.0, 1.0, 0.0;
    EXPECT_LT(diff(X, expect).cwiseAbs().maxCoeff(), 1e-14);

    auto Z6 = parse_group("Z6");
    EXPECT_NEAR(std::abs(char_fn(Operator::maximally_mixed(Z6), CharOrder::standard0)(0, 0) - 1.0), 0.0, 1e-14);
    EXPECT_THROW(char_fn(Operator::maximally_mixed(parse_group("Z4")), CharOrder::half), UnsupportedOrderError);
}

TEST(kd, char_order_parsing) {
    EXPECT_EQ(parse_char_order("0"), CharOrder::standard0);
    EXPECT_EQ(parse_char_order("standard1"), CharOrder::standard1);
    EXPECT_EQ(parse_char_order("half"), CharOrder::half);
    EXPECT_THROW(parse_char_order("2"), ParseError);
}

TEST(kd, symplectic_fourier_matches_oracle) {
    Rng rng(6);
    for (const auto &f : kBattery) {
        auto G = make_group(f);
        const PhaseSpaceFunction F = kd(random_operator(G, rng));
        const PhaseSpaceFunction S = symplectic_fourier(F);
        EXPECT_LT(diff(S, oracle::symplectic(f, F.values)).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_NEAR(l2_norm(S), l2_norm(F), 1e-10);
        EXPECT_LT(max_abs_diff(inverse_symplectic_fourier(S), F), 1e-10);
    }
}

TEST(kd, symplectic_fourier_of_constants) {
    auto G = parse_group("Z2xZ2");
    const int n = G->order();
    const PhaseSpaceFunction S = symplectic_fourier(PhaseSpaceFunction(G, CMatrix::Ones(n, n)));
    CMatrix expect = CMatrix::Zero(n, n);
    expect(0, 0) = static_cast<double>(n);
    EXPECT_LT(diff(S, expect).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT(diff(symplectic_fourier(PhaseSpaceFunction(G, expect)), CMatrix::Ones(n, n)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(kd, oconnell_and_akd) {
    Rng rng(8);
    for (const auto &f : kBattery) {
        auto G = make_group(f);
        for (int t = 0; t < 20; ++t) {
            const Operator A = random_operator(G, rng);
            EXPECT_LT(max_abs_diff(kd(A), symplectic_fourier(char_fn(A, CharOrder::standard1))), 1e-10);
            EXPECT_LT(max_abs_diff(akd(A), kd(A.adjoint()).conj()), 1e-10);
            const Operator H = random_hermitian(G, rng);
            EXPECT_LT(max_abs_diff(akd(H), kd(H).conj()), 1e-10);
            EXPECT_LT(max_abs_diff(from_char_fn(char_fn(A, CharOrder::standard0)), A), 1e-10);
        }
    }
}

TEST(kd, akd_examples) {
    auto G = parse_group("Z3");
    const Operator P = Operator::projector(character_function(G, 0));
    EXPECT_LT(max_abs_diff(akd(P), kd(P)), 1e-12);
    EXPECT_LT(akd(Operator::zero(G)).values.cwiseAbs().maxCoeff(), 1e-300);
}

TEST(kd, marginals) {
    auto G = parse_group("Z2");
    const Marginals m = marginals(Operator::projector(z2_negative_state()));
    EXPECT_NEAR(m.position[0], 1.44, 1e-12);
    EXPECT_NEAR(m.position[1], 0.56, 1e-12);

    auto Z6 = parse_group("Z6");
    const Marginals p = marginals(Operator::projector(character_function(Z6, 0)));
    for (int c = 0; c < 6; ++c) EXPECT_NEAR(p.momentum[c], c == 0 ? 1.0 : 0.0, 1e-12);

    const Marginals u = marginals(Operator::maximally_mixed(Z6));
    for (int i = 0; i < 6; ++i) {
        EXPECT_NEAR(u.position[i], 1.0, 1e-12);
        EXPECT_NEAR(u.momentum[i], 1.0 / 6.0, 1e-12);
    }
    EXPECT_THROW(marginals(Operator::identity(Z6)), PreconditionError);
}

TEST(kd, born_rule_and_total_mass) {
    Rng rng(10);
    for (const auto &f : kBattery) {
        auto G = make_group(f);
        const int n = G->order();
        for (int t = 0; t < 20; ++t) {
            const Operator rho = random_state(G, rng);
            const Marginals m = marginals(rho);
            for (int g = 0; g < n; ++g) EXPECT_NEAR(m.position[g], rho.kernel(g, g).real(), 1e-10);
            for (int c = 0; c < n; ++c) {
                const GFunction e = character_function(G, c);
                EXPECT_NEAR(m.momentum[c], l2_inner(e, rho.apply(e)).real(), 1e-10);
            }
            EXPECT_NEAR(m.momentum.sum(), 1.0, 1e-10);
            EXPECT_NEAR(kd(rho).values.sum().real() / n, 1.0, 1e-10);
        }
    }
}

TEST(kd, kohn_nirenberg_examples) {
    auto G = parse_group("Z2");
    CVector fv(2);
    fv << 2.0, 0.0;
    const GFunction f(G, fv);
    const DualFunction h(G, CVector::Ones(2));
    const Operator A = kohn_nirenberg(f, h);
    CMatrix expect = CMatrix::Zero(2, 2);
    expect(0, 0) = 4.0;
    EXPECT_LT((A.kernel - expect).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LT(max_abs_diff(kd(A), tensor(f, h)), 1e-14);
}

TEST(kd, kohn_nirenberg_is_standard_ordered) {
    Rng rng(12);
    std::normal_distribution<double> gauss;
    for (const auto &fac : kBattery) {
        auto G = make_group(fac);
        const int n = G->order();
        CVector fv(n), hv(n);
        for (int i = 0; i < n; ++i) {
            fv[i] = Complex(gauss(rng), gauss(rng));
            hv[i] = Complex(gauss(rng), gauss(rng));
        }
        const GFunction f(G, fv);
        const DualFunction h(G, hv);
        const Operator A = kohn_nirenberg(f, h);
        EXPECT_LT(max_abs_diff(kd(A), tensor(f, h)), 1e-10);
        EXPECT_LT(max_abs_diff(A, multiplication_operator(f) * fourier_multiplier(h)), 1e-10);
        const GFunction one(G, CVector::Ones(n));
        EXPECT_LT(max_abs_diff(kohn_nirenberg(one, h), fourier_multiplier(h)), 1e-10);
    }
}

TEST(kd, kohn_nirenberg_ordering_matters) {
    Rng rng(13);
    std::normal_distribution<double> gauss;
    auto G = parse_group("Z4");
    CVector fv(4), hv(4);
    for (int i = 0; i < 4; ++i) {
        fv[i] = gauss(rng);
        hv[i] = gauss(rng);
    }
    const GFunction f(G, fv);
    const DualFunction h(G, hv);
    const Operator std_order = kohn_nirenberg(f, h);
    const Operator other = fourier_multiplier(h) * multiplication_operator(f);
    EXPECT_GT(hs_norm(std_order - other), 0.1);
}

TEST(kd, wigner_is_real_on_odd_groups) {
    Rng rng(14);
    for (const char *spec : {"Z3", "Z9", "Z3xZ3", "Z5xZ3"}) {
        auto G = parse_group(spec);
        for (int t = 0; t < 20; ++t) {
            const Operator A = random_operator(G, rng);
            EXPECT_LT(max_abs_diff(wigner(A).conj(), wigner(A.adjoint())), 1e-10);
            EXPECT_LT(wigner(random_hermitian(G, rng)).values.imag().cwiseAbs().maxCoeff(), 1e-10);
        }
    }
    for (const char *spec : {"Z2", "Z4", "Z6", "Z2xZ2"}) {
        EXPECT_THROW(wigner(Operator::maximally_mixed(parse_group(spec))), UnsupportedOrderError);
    }
}
