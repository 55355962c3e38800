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

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace kdlab {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Element of G as a residue tuple (g_1, ..., g_k), 0 <= g_j < n_j.
struct Element {
    std::vector<int> residues;
    bool operator==(const Element &) const = default;
};

/// Character chi_c of G, labelled by a residue tuple c. The pairing is
/// chi_c(g) = prod_j exp(2 pi i c_j g_j / n_j), which identifies G^ with G.
struct Character {
    std::vector<int> label;
    bool operator==(const Character &) const = default;
};

/// Finite abelian group Z_{n_1} x ... x Z_{n_k}, kept in its written
/// factor order (Z2xZ3 and Z6 are distinct objects). Elements and
/// character labels are indexed lexicographically on residue tuples,
/// last factor fastest. The constructor precomputes the addition and
/// character tables, so the object is immutable and thread-safe.
class FiniteAbelianGroup {
   public:
    /// Hard cap on |G| for the dense tables.
    static constexpr int kMaxOrder = 2048;

    /// `factors` empty or {1} gives the trivial group. Every other factor must be >= 2.
    explicit FiniteAbelianGroup(std::vector<int> factors);

    const std::vector<int> &factors() const { return factors_; }
    int order() const { return order_; }
    int rank() const { return static_cast<int>(factors_.size()); }
    bool is_trivial() const { return order_ == 1; }

    Element element(int index) const;
    int index_of(const Element &g) const;
    Character character(int index) const;
    int index_of(const Character &chi) const;
    std::vector<int> residues(int index) const;
    int index_of_residues(std::span<const int> residues) const;

    int add(int g, int h) const { return add_table_[static_cast<std::size_t>(g) * order_ + h]; }
    int neg(int g) const { return neg_table_[g]; }
    int sub(int g, int h) const { return add(g, neg(h)); }
    int zero() const { return 0; }

    /// chi_c(g) for character index c and element index g.
    Complex pair(int chi, int g) const { return characters_(chi, g); }
    /// Exact test of chi_c(g) == 1 in integer arithmetic.
    bool pairs_to_one(int chi, int g) const;
    /// Table X(c, g) = chi_c(g).
    const CMatrix &character_table() const { return characters_; }

    /// Character product chi_a * chi_b as a label index (= add on labels).
    int mul_chars(int a, int b) const { return add(a, b); }
    /// Complex conjugate character (= negated label).
    int conj_char(int a) const { return neg(a); }

    /// Whether g -> g + g is a bijection (every n_j odd).
    bool doubling_invertible() const;
    /// The unique h with h + h = g. Throws UnsupportedOrderError for even factors.
    int halve(int g) const;

    /// Order of the cyclic subgroup generated by g.
    int element_order(int g) const;

    /// Canonical spec text, e.g. "Z4xZ2" (or "Z1" for the trivial group).
    std::string spec() const;
    std::string format_element(int g) const;

    bool operator==(const FiniteAbelianGroup &o) const { return factors_ == o.factors_; }

   private:
    std::vector<int> factors_;
    std::vector<int> strides_;
    int order_ = 1;
    std::int64_t phase_modulus_ = 1;  // lcm of the factors
    std::vector<int> add_table_;
    std::vector<int> neg_table_;
    std::vector<std::int64_t> phase_weight_;  // lcm / n_j
    CMatrix characters_;

    std::int64_t phase_numerator(int chi, int g) const;
};

using GroupPtr = std::shared_ptr<const FiniteAbelianGroup>;

GroupPtr make_group(std::vector<int> factors);

/// Parses `group := factor ("x" factor)*; factor := "Z" integer`,
/// case-insensitive and whitespace-tolerant. "Z1" gives the trivial group.
/// Throws ParseError with the offending position.
GroupPtr parse_group(std::string_view spec);

// Residue-tuple arithmetic. Throws PreconditionError when the tuple does not
// fit the group.
Element add(const FiniteAbelianGroup &G, const Element &g, const Element &h);
Element neg(const FiniteAbelianGroup &G, const Element &g);
Element sub(const FiniteAbelianGroup &G, const Element &g, const Element &h);
Complex pair(const FiniteAbelianGroup &G, const Character &chi, const Element &g);

/// Subgroup stored as its sorted element indices; the sorted list doubles
/// as the canonical id.
class Subgroup {
   public:
    Subgroup() = default;
    Subgroup(int group_order, std::vector<int> sorted_elements);

    const std::vector<int> &elements() const { return elements_; }
    int order() const { return static_cast<int>(elements_.size()); }
    bool contains(int g) const { return mask_[g] != 0; }
    const std::vector<int> &canonical_id() const { return elements_; }

    bool operator==(const Subgroup &o) const { return elements_ == o.elements_; }
    bool operator<(const Subgroup &o) const;

   private:
    std::vector<int> elements_;
    std::vector<char> mask_;
};

inline constexpr int kDefaultSubgroupBound = 512;

/// Smallest subgroup containing `generators`.
Subgroup generated_subgroup(const FiniteAbelianGroup &G, std::span<const int> generators);

/// Every subgroup of G, sorted by (|H|, canonical id). Throws
/// BoundExceededError when |G| > bound.
std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup &G,
                                          int bound = kDefaultSubgroupBound);

/// H^perp as a subgroup of G^ (indexed by character labels).
Subgroup annihilator(const FiniteAbelianGroup &G, const Subgroup &H);

/// One representative per coset of H, the smallest index in each coset,
/// listed in increasing order.
std::vector<int> coset_reps(const FiniteAbelianGroup &G, const Subgroup &H);

/// Smallest element of the coset g + H.
int coset_rep_of(const FiniteAbelianGroup &G, const Subgroup &H, int g);

}  // namespace kdlab
