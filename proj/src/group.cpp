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

#include "kdlab/group.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "kdlab/errors.hpp"

namespace kdlab {

namespace {

// exp(2 pi i num / den) with exact values on the quarter turns.
Complex unit_phase(std::int64_t num, std::int64_t den) {
    num %= den;
    if (num < 0) num += den;
    if (num == 0) return {1.0, 0.0};
    if (2 * num == den) return {-1.0, 0.0};
    if (4 * num == den) return {0.0, 1.0};
    if (4 * num == 3 * den) return {0.0, -1.0};
    double angle = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    return std::polar(1.0, angle);
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
    if (factors_.size() == 1 && factors_[0] == 1) factors_.clear();
    std::int64_t order = 1;
    for (int n : factors_) {
        if (n < 2) {
            throw PreconditionError("cyclic factor must be >= 2 (Z1 is only valid on its own), got " +
                                    std::to_string(n));
        }
        order *= n;
        if (order > kMaxOrder) {
            throw BoundExceededError("group order exceeds " + std::to_string(kMaxOrder));
        }
        phase_modulus_ = std::lcm(phase_modulus_, static_cast<std::int64_t>(n));
    }
    order_ = static_cast<int>(order);

    strides_.assign(factors_.size(), 1);
    for (int j = static_cast<int>(factors_.size()) - 2; j >= 0; --j) {
        strides_[j] = strides_[j + 1] * factors_[j + 1];
    }
    for (int n : factors_) phase_weight_.push_back(phase_modulus_ / n);

    const auto N = static_cast<std::size_t>(order_);
    add_table_.resize(N * N);
    neg_table_.resize(N);
    std::vector<std::vector<int>> tuples(N);
    for (int g = 0; g < order_; ++g) tuples[g] = residues(g);
    std::vector<int> tmp(factors_.size());
    for (int g = 0; g < order_; ++g) {
        for (int h = 0; h < order_; ++h) {
            for (std::size_t j = 0; j < factors_.size(); ++j) {
                tmp[j] = (tuples[g][j] + tuples[h][j]) % factors_[j];
            }
            add_table_[g * N + h] = index_of_residues(tmp);
        }
        for (std::size_t j = 0; j < factors_.size(); ++j) {
            tmp[j] = (factors_[j] - tuples[g][j]) % factors_[j];
        }
        neg_table_[g] = index_of_residues(tmp);
    }

    characters_.resize(order_, order_);
    for (int c = 0; c < order_; ++c) {
        for (int g = 0; g < order_; ++g) {
            characters_(c, g) = unit_phase(phase_numerator(c, g), phase_modulus_);
        }
    }
}

std::int64_t FiniteAbelianGroup::phase_numerator(int chi, int g) const {
    std::int64_t num = 0;
    int c_rest = chi;
    int g_rest = g;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        int cj = c_rest / strides_[j];
        int gj = g_rest / strides_[j];
        c_rest %= strides_[j];
        g_rest %= strides_[j];
        num += static_cast<std::int64_t>(cj) * gj % factors_[j] * phase_weight_[j];
    }
    return num % phase_modulus_;
}

bool FiniteAbelianGroup::pairs_to_one(int chi, int g) const { return phase_numerator(chi, g) == 0; }

std::vector<int> FiniteAbelianGroup::residues(int index) const {
    std::vector<int> r(factors_.size());
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        r[j] = index / strides_[j];
        index %= strides_[j];
    }
    return r;
}

int FiniteAbelianGroup::index_of_residues(std::span<const int> residues) const {
    if (residues.size() != factors_.size()) {
        throw PreconditionError("residue tuple has " + std::to_string(residues.size()) +
                                " entries, group has " + std::to_string(factors_.size()) + " factors");
    }
    int index = 0;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        if (residues[j] < 0 || residues[j] >= factors_[j]) {
            throw PreconditionError("residue " + std::to_string(residues[j]) + " out of range for Z" +
                                    std::to_string(factors_[j]));
        }
        index += residues[j] * strides_[j];
    }
    return index;
}

Element FiniteAbelianGroup::element(int index) const { return Element{residues(index)}; }
int FiniteAbelianGroup::index_of(const Element &g) const { return index_of_residues(g.residues); }
Character FiniteAbelianGroup::character(int index) const { return Character{residues(index)}; }
int FiniteAbelianGroup::index_of(const Character &chi) const { return index_of_residues(chi.label); }

bool FiniteAbelianGroup::doubling_invertible() const {
    return std::all_of(factors_.begin(), factors_.end(), [](int n) { return n % 2 == 1; });
}

int FiniteAbelianGroup::halve(int g) const {
    if (!doubling_invertible()) {
        throw UnsupportedOrderError("doubling map of " + spec() + " is not invertible (even factor)");
    }
    std::vector<int> r = residues(g);
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        const int inv2 = (factors_[j] + 1) / 2;
        r[j] = static_cast<int>(static_cast<std::int64_t>(r[j]) * inv2 % factors_[j]);
    }
    return index_of_residues(r);
}

int FiniteAbelianGroup::element_order(int g) const {
    int k = 1;
    for (int x = g; x != 0; x = add(x, g)) ++k;
    return g == 0 ? 1 : k;
}

std::string FiniteAbelianGroup::spec() const {
    if (factors_.empty()) return "Z1";
    std::string s;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        if (j) s += 'x';
        s += 'Z' + std::to_string(factors_[j]);
    }
    return s;
}

std::string FiniteAbelianGroup::format_element(int g) const {
    std::string s = "(";
    auto r = residues(g);
    for (std::size_t j = 0; j < r.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(r[j]);
    }
    return s + ")";
}

GroupPtr make_group(std::vector<int> factors) {
    return std::make_shared<const FiniteAbelianGroup>(std::move(factors));
}

GroupPtr parse_group(std::string_view spec) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < spec.size() && std::isspace(static_cast<unsigned char>(spec[pos]))) ++pos;
    };
    auto expect_letter = [&](char lower, const char *what) {
        skip_ws();
        if (pos >= spec.size() || std::tolower(static_cast<unsigned char>(spec[pos])) != lower) {
            throw ParseError(std::string("expected ") + what, pos);
        }
        ++pos;
    };

    std::vector<int> factors;
    std::vector<std::size_t> factor_pos;
    while (true) {
        expect_letter('z', "'Z'");
        skip_ws();
        const std::size_t start = pos;
        if (pos < spec.size() && (spec[pos] == '-' || spec[pos] == '+')) {
            throw ParseError("factor must be a positive integer", pos);
        }
        std::int64_t value = 0;
        while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) {
            value = value * 10 + (spec[pos] - '0');
            if (value > FiniteAbelianGroup::kMaxOrder) {
                throw ParseError("factor too large (max " +
                                     std::to_string(FiniteAbelianGroup::kMaxOrder) + ")",
                                 start);
            }
            ++pos;
        }
        if (pos == start) throw ParseError("expected integer after 'Z'", pos);
        if (value <= 0) throw ParseError("factor must be >= 1", start);
        factors.push_back(static_cast<int>(value));
        factor_pos.push_back(start);
        skip_ws();
        if (pos == spec.size()) break;
        expect_letter('x', "'x' or end of input");
    }

    if (factors.size() > 1) {
        for (std::size_t j = 0; j < factors.size(); ++j) {
            if (factors[j] == 1) throw ParseError("Z1 is only valid on its own", factor_pos[j]);
        }
    }
    std::int64_t order = 1;
    for (int n : factors) {
        order *= n;
        if (order > FiniteAbelianGroup::kMaxOrder) {
            throw ParseError("group order exceeds " + std::to_string(FiniteAbelianGroup::kMaxOrder), 0);
        }
    }
    return make_group(std::move(factors));
}

namespace {

void check_tuple(const FiniteAbelianGroup &G, const std::vector<int> &r) {
    if (static_cast<int>(r.size()) != G.rank()) {
        throw PreconditionError("element has " + std::to_string(r.size()) + " residues, " + G.spec() +
                                " has " + std::to_string(G.rank()) + " factors");
    }
}

}  // namespace

Element add(const FiniteAbelianGroup &G, const Element &g, const Element &h) {
    check_tuple(G, g.residues);
    check_tuple(G, h.residues);
    return G.element(G.add(G.index_of(g), G.index_of(h)));
}

Element neg(const FiniteAbelianGroup &G, const Element &g) {
    check_tuple(G, g.residues);
    return G.element(G.neg(G.index_of(g)));
}

Element sub(const FiniteAbelianGroup &G, const Element &g, const Element &h) {
    check_tuple(G, g.residues);
    check_tuple(G, h.residues);
    return G.element(G.sub(G.index_of(g), G.index_of(h)));
}

Complex pair(const FiniteAbelianGroup &G, const Character &chi, const Element &g) {
    check_tuple(G, chi.label);
    check_tuple(G, g.residues);
    return G.pair(G.index_of(chi), G.index_of(g));
}

Subgroup::Subgroup(int group_order, std::vector<int> sorted_elements)
    : elements_(std::move(sorted_elements)), mask_(static_cast<std::size_t>(group_order), 0) {
    for (int g : elements_) mask_[g] = 1;
}

bool Subgroup::operator<(const Subgroup &o) const {
    if (order() != o.order()) return order() < o.order();
    return elements_ < o.elements_;
}

namespace {

// H + <g>, as a sorted index list.
std::vector<int> extend(const FiniteAbelianGroup &G, const std::vector<char> &member, int g) {
    std::vector<char> out(member);
    std::vector<int> base;
    for (int x = 0; x < G.order(); ++x) {
        if (member[x]) base.push_back(x);
    }
    for (int m = g; m != 0; m = G.add(m, g)) {
        if (member[m]) break;  // <g> has re-entered H
        for (int h : base) out[G.add(h, m)] = 1;
    }
    std::vector<int> elements;
    for (int x = 0; x < G.order(); ++x) {
        if (out[x]) elements.push_back(x);
    }
    return elements;
}

}  // namespace

Subgroup generated_subgroup(const FiniteAbelianGroup &G, std::span<const int> generators) {
    std::vector<char> member(static_cast<std::size_t>(G.order()), 0);
    member[0] = 1;
    for (int g : generators) {
        auto els = extend(G, member, g);
        std::fill(member.begin(), member.end(), 0);
        for (int x : els) member[x] = 1;
    }
    std::vector<int> elements;
    for (int x = 0; x < G.order(); ++x) {
        if (member[x]) elements.push_back(x);
    }
    return Subgroup(G.order(), std::move(elements));
}

std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup &G, int bound) {
    if (G.order() > bound) {
        throw BoundExceededError("subgroup enumeration bound exceeded: |G| = " + std::to_string(G.order()) +
                                 " > " + std::to_string(bound));
    }
    // Breadth-first: every subgroup is reached from a smaller one by adjoining
    // a single element.
    std::set<std::vector<int>> seen{{0}};
    std::vector<std::vector<int>> frontier{{0}};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto &H : frontier) {
            std::vector<char> member(static_cast<std::size_t>(G.order()), 0);
            for (int x : H) member[x] = 1;
            // H + <g> only depends on the coset g + H.
            std::vector<char> covered(member);
            for (int g = 0; g < G.order(); ++g) {
                if (covered[g]) continue;
                for (int h : H) covered[G.add(g, h)] = 1;
                auto K = extend(G, member, g);
                if (seen.insert(K).second) next.push_back(std::move(K));
            }
        }
        frontier = std::move(next);
    }
    std::vector<Subgroup> out;
    out.reserve(seen.size());
    for (const auto &els : seen) out.emplace_back(G.order(), els);
    std::sort(out.begin(), out.end());
    return out;
}

Subgroup annihilator(const FiniteAbelianGroup &G, const Subgroup &H) {
    std::vector<int> chars;
    for (int c = 0; c < G.order(); ++c) {
        bool trivial_on_H = true;
        for (int h : H.elements()) {
            if (!G.pairs_to_one(c, h)) {
                trivial_on_H = false;
                break;
            }
        }
        if (trivial_on_H) chars.push_back(c);
    }
    return Subgroup(G.order(), std::move(chars));
}

std::vector<int> coset_reps(const FiniteAbelianGroup &G, const Subgroup &H) {
    std::vector<char> covered(static_cast<std::size_t>(G.order()), 0);
    std::vector<int> reps;
    for (int g = 0; g < G.order(); ++g) {
        if (covered[g]) continue;
        reps.push_back(g);
        for (int h : H.elements()) covered[G.add(g, h)] = 1;
    }
    return reps;
}

int coset_rep_of(const FiniteAbelianGroup &G, const Subgroup &H, int g) {
    int best = g;
    for (int h : H.elements()) best = std::min(best, G.add(g, h));
    return best;
}

}  // namespace kdlab
