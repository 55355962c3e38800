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

#include "kdlab/verify.hpp"

using namespace kdlab;

namespace {

VerifyOptions quick() {
    VerifyOptions o;
    o.samples = 10;
    o.witness_budget = 100;
    return o;
}

}  // namespace

TEST(verify, klein_four_is_green) {
    VerifyOptions o = quick();
    o.witness_budget = 400;
    const VerificationReport r = verify_all(parse_group("Z2xZ2"), o);
    EXPECT_EQ(r.family_size, 20u);
    for (const auto &c : r.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(std::is_sorted(r.checks.begin(), r.checks.end(),
                               [](const Check &a, const Check &b) { return a.name < b.name; }));
    for (const auto &c : r.checks) EXPECT_FALSE(c.anchor.empty()) << c.name;
}

TEST(verify, green_on_small_battery) {
    for (const char *spec : {"Z1", "Z2", "Z3", "Z4", "Z6", "Z9"}) {
        const VerificationReport r = verify_all(parse_group(spec), quick());
        for (const auto &c : r.checks) EXPECT_TRUE(c.passed) << spec << " " << c.name << ": " << c.detail;
    }
}

TEST(verify, reports_are_reproducible) {
    const auto G = parse_group("Z3xZ3");
    Json a = to_json(verify_all(G, quick()));
    Json b = to_json(verify_all(G, quick()));
    a.erase("timestamp");
    b.erase("timestamp");
    EXPECT_EQ(a.dump(), b.dump());
}

TEST(verify, table_has_six_digits) {
    const VerificationReport r = verify_all(parse_group("Z2"), quick());
    const std::string t = to_table(r);
    EXPECT_NE(t.find("classify.family_size"), std::string::npos);
    EXPECT_EQ(utc_timestamp().size(), 20u);
}
