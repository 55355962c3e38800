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

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "kdlab/errors.hpp"
#include "kdlab/group.hpp"
#include "oracles.hpp"

using namespace kdlab;

namespace {

const std::vector<std::vector<int>> kBattery = {{2}, {3}, {4}, {2, 2}, {6}, {8}, {9}, {2, 4}, {3, 3}, {12}, {2, 2, 2}};

std::vector<int> elements_of(const Subgroup &H) { return H.elements(); }

}  // namespace

TEST(group, parse_product) {
    auto G = parse_group("Z4xZ2");
    EXPECT_EQ(G->factors(), (std::vector<int>{4, 2}));
    EXPECT_EQ(G->order(), 8);
    EXPECT_EQ(G->spec(), "Z4xZ2");
}

TEST(group, parse_is_case_and_space_tolerant) {
    auto G = parse_group("  z3 X Z3 ");
    EXPECT_EQ(G->factors(), (std::vector<int>{3, 3}));
}

TEST(group, parse_trivial) {
    auto G = parse_group("Z1");
    EXPECT_EQ(G->order(), 1);
    EXPECT_TRUE(G->is_trivial());
}

TEST(group, parse_rejects_bad_input) {
    EXPECT_THROW(parse_group("Z0"), ParseError);
    EXPECT_THROW(parse_group("Z-3"), ParseError);
    EXPECT_THROW(parse_group("Y4"), ParseError);
    EXPECT_THROW(parse_group("Z4x"), ParseError);
    EXPECT_THROW(parse_group(""), ParseError);
    try {
        parse_group("Z4xQ2");
        FAIL() << "expected a parse error";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.position(), 3u);
    }
}

TEST(group, element_arithmetic_examples) {
    auto Z4 = parse_group("Z4");
    EXPECT_EQ(add(*Z4, Element{{3}}, Element{{2}}), Element{{1}});
    auto V = parse_group("Z2xZ2");
    EXPECT_EQ(add(*V, Element{{1, 0}}, Element{{1, 1}}), (Element{{0, 1}}));
    auto Z6 = parse_group("Z6");
    EXPECT_EQ(neg(*Z6, Element{{4}}), Element{{2}});
    EXPECT_THROW(add(*Z4, Element{{1, 0}}, Element{{1}}), PreconditionError);
}

TEST(group, pairing_examples) {
    auto Z4 = parse_group("Z4");
    const Complex v = pair(*Z4, Character{{1}}, Element{{3}});
    EXPECT_NEAR(v.real(), 0.0, 1e-15);
    EXPECT_NEAR(v.imag(), -1.0, 1e-15);
    auto V = parse_group("Z2xZ2");
    EXPECT_NEAR(std::abs(pair(*V, Character{{1, 1}}, Element{{1, 0}}) + 1.0), 0.0, 1e-15);
}

TEST(group, tables_match_oracle) {
    for (const auto &f : kBattery) {
        auto G = make_group(f);
        const int n = G->order();
        for (int a = 0; a < n; ++a) {
            EXPECT_EQ(G->residues(a), oracle::decode(f, a));
            EXPECT_EQ(G->neg(a), oracle::neg(f, a));
            for (int b = 0; b < n; ++b) {
                EXPECT_EQ(G->add(a, b), oracle::add(f, a, b));
                EXPECT_LT(std::abs(G->pair(a, b) - oracle::pair(f, a, b)), 1e-12);
                EXPECT_NEAR(std::abs(G->pair(a, b)), 1.0, 1e-15);
            }
            EXPECT_EQ(G->pair(a, 0), Complex(1.0, 0.0));
        }
    }
}

TEST(group, character_is_homomorphism) {
    for (const auto &f : kBattery) {
        auto G = make_group(f);
        const int n = G->order();
        for (int c = 0; c < n; ++c) {
            for (int g = 0; g < n; ++g) {
                for (int h = 0; h < n; ++h) {
                    EXPECT_LT(std::abs(G->pair(c, G->add(g, h)) - G->pair(c, g) * G->pair(c, h)), 1e-12);
                }
            }
        }
    }
}

TEST(group, subgroup_counts) {
    EXPECT_EQ(enumerate_subgroups(*parse_group("Z4")).size(), 3u);
    EXPECT_EQ(enumerate_subgroups(*parse_group("Z2xZ2")).size(), 5u);
    EXPECT_EQ(enumerate_subgroups(*parse_group("Z6")).size(), 4u);
    EXPECT_EQ(enumerate_subgroups(*parse_group("Z1")).size(), 1u);
}

TEST(group, z4_subgroups_listed_in_order) {
    const auto subs = enumerate_subgroups(*parse_group("Z4"));
    ASSERT_EQ(subs.size(), 3u);
    EXPECT_EQ(elements_of(subs[0]), (std::vector<int>{0}));
    EXPECT_EQ(elements_of(subs[1]), (std::vector<int>{0, 2}));
    EXPECT_EQ(elements_of(subs[2]), (std::vector<int>{0, 1, 2, 3}));
}

TEST(group, subgroups_match_brute_force_closure) {
    for (const auto &f : kBattery) {
        auto G = make_group(f);
        const auto subs = enumerate_subgroups(*G);
        std::set<std::vector<int>> got;
        for (const auto &H : subs) got.insert(H.elements());
        EXPECT_EQ(got.size(), subs.size()) << G->spec();
        EXPECT_EQ(got, oracle::all_subgroups(f)) << G->spec();
        EXPECT_TRUE(std::is_sorted(subs.begin(), subs.end()));
        EXPECT_EQ(subs.front().order(), 1);
        EXPECT_EQ(subs.back().order(), G->order());
    }
}

TEST(group, cyclic_subgroups_follow_divisors) {
    for (int n : {2, 3, 4, 6, 8, 9, 12, 30, 64}) {
        int divisors = 0;
        for (int d = 1; d <= n; ++d) divisors += (n % d == 0);
        EXPECT_EQ(static_cast<int>(enumerate_subgroups(*make_group({n})).size()), divisors) << n;
    }
}

TEST(group, subgroup_bound) {
    auto G = make_group({16, 2});
    EXPECT_THROW(enumerate_subgroups(*G, 16), BoundExceededError);
    EXPECT_NO_THROW(enumerate_subgroups(*G, 32));
}

TEST(group, annihilator_examples) {
    auto Z4 = parse_group("Z4");
    const auto subs = enumerate_subgroups(*Z4);
    EXPECT_EQ(annihilator(*Z4, subs[1]).elements(), (std::vector<int>{0, 2}));
    EXPECT_EQ(annihilator(*Z4, subs[0]).order(), 4);
    EXPECT_EQ(annihilator(*Z4, subs[2]).elements(), (std::vector<int>{0}));
}

TEST(group, annihilator_duality_on_battery) {
    for (const auto &f : kBattery) {
        auto G = make_group(f);
        for (const auto &H : enumerate_subgroups(*G)) {
            const Subgroup Hp = annihilator(*G, H);
            EXPECT_EQ(Hp.elements(), oracle::annihilator(f, H.elements()));
            EXPECT_EQ(G->order() % H.order(), 0);
            EXPECT_EQ(H.order() * Hp.order(), G->order());
            EXPECT_EQ(annihilator(*G, Hp), H);
        }
    }
}

TEST(group, coset_reps_examples) {
    auto Z4 = parse_group("Z4");
    const auto subs = enumerate_subgroups(*Z4);
    EXPECT_EQ(coset_reps(*Z4, subs[1]), (std::vector<int>{0, 1}));
    EXPECT_EQ(coset_reps(*Z4, subs[2]), (std::vector<int>{0}));
    auto V = parse_group("Z2xZ2");
    const int e10 = V->index_of(Element{{1, 0}});
    const Subgroup H = generated_subgroup(*V, std::vector<int>{e10});
    const auto reps = coset_reps(*V, H);
    ASSERT_EQ(reps.size(), 2u);
    EXPECT_EQ(V->element(reps[0]), (Element{{0, 0}}));
    EXPECT_EQ(V->element(reps[1]), (Element{{0, 1}}));
}

TEST(group, cosets_partition_group) {
    for (const auto &f : kBattery) {
        auto G = make_group(f);
        for (const auto &H : enumerate_subgroups(*G)) {
            const auto reps = coset_reps(*G, H);
            EXPECT_EQ(static_cast<int>(reps.size()) * H.order(), G->order());
            std::vector<int> hits(G->order(), 0);
            for (int r : reps) {
                for (int h : H.elements()) ++hits[G->add(r, h)];
                EXPECT_EQ(coset_rep_of(*G, H, r), r);
            }
            EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int c) { return c == 1; }));
        }
    }
}

TEST(group, doubling_map) {
    auto Z3 = parse_group("Z3");
    EXPECT_TRUE(Z3->doubling_invertible());
    EXPECT_EQ(Z3->halve(1), 2);
    auto Z9 = parse_group("Z9");
    EXPECT_EQ(Z9->halve(1), 5);
    auto Z4 = parse_group("Z4");
    EXPECT_FALSE(Z4->doubling_invertible());
    EXPECT_THROW(Z4->halve(1), UnsupportedOrderError);
    auto Z33 = parse_group("Z3xZ3");
    for (int g = 0; g < Z33->order(); ++g) EXPECT_EQ(Z33->add(Z33->halve(g), Z33->halve(g)), g);
}

TEST(group, element_order) {
    auto Z12 = parse_group("Z12");
    EXPECT_EQ(Z12->element_order(0), 1);
    EXPECT_EQ(Z12->element_order(8), 3);
    EXPECT_EQ(Z12->element_order(5), 12);
}
