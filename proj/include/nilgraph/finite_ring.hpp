// Copyright 2026 The nilgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NILGRAPH_FINITE_RING_HPP
#define NILGRAPH_FINITE_RING_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nilgraph::ring {

/// Dense element index. Index 0 is always zero and index 1 is always one.
using Element = std::uint32_t;

struct RingLimits {
  std::size_t order_cap = 256;
  /// Ideal enumeration is exponential in the worst case, hence the smaller cap.
  std::size_t ideal_cap = 64;
};

/// A subset of the elements of one ring, stored as a membership mask.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : mask_(universe, false) {}
  static ElementSet from_members(std::size_t universe, std::span<const Element> members);
  static ElementSet full(std::size_t universe);

  void insert(Element e);
  void erase(Element e);
  bool contains(Element e) const { return e < mask_.size() && mask_[e]; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  std::size_t universe() const noexcept { return mask_.size(); }

  /// Members in increasing index order.
  std::vector<Element> members() const;

  bool is_subset_of(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;
  ElementSet unite(const ElementSet& other) const;
  ElementSet minus(const ElementSet& other) const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.mask_ == b.mask_;
  }

 private:
  std::vector<bool> mask_;
  std::size_t count_ = 0;
};

/// A finite ring with identity given by Cayley tables over dense indices.
///
/// Instances are immutable handles onto shared table storage, so copies are
/// cheap and safe to pass between threads.
class FiniteRing {
 public:
  /// Builds a ring from raw tables (row-major, order x order) and checks
  /// every ring axiom exhaustively. Throws Error(RingAxiom) with a witness.
  static FiniteRing from_tables(std::size_t order, std::vector<Element> add_table,
                                std::vector<Element> mul_table, std::string label,
                                std::vector<std::string> element_labels,
                                const RingLimits& limits = {});

  std::size_t order() const noexcept;
  static constexpr Element zero() noexcept { return 0; }
  static constexpr Element one() noexcept { return 1; }

  Element add(Element a, Element b) const noexcept { return add_[a * order_ + b]; }
  Element mul(Element a, Element b) const noexcept { return mul_[a * order_ + b]; }
  Element neg(Element a) const noexcept;
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
  Element pow(Element a, std::size_t k) const noexcept;
  /// k-fold sum a + ... + a.
  Element times(Element a, std::size_t k) const noexcept;

  const std::string& label() const noexcept;
  const std::string& element_label(Element e) const;
  std::optional<Element> find(std::string_view element_label) const;

  bool is_commutative() const noexcept;
  /// Additive order of one.
  std::size_t characteristic() const noexcept;

  /// Factors of a binary product construction; empty otherwise.
  std::span<const FiniteRing> factors() const noexcept;
  /// Component indices of e in factors(), one per factor.
  std::span<const Element> coordinates(Element e) const;

  /// True when both rings carry identical tables.
  bool same_tables(const FiniteRing& other) const noexcept;

  std::span<const Element> add_table() const noexcept { return {add_, order_ * order_}; }
  std::span<const Element> mul_table() const noexcept { return {mul_, order_ * order_}; }

 private:
  struct Data;
  explicit FiniteRing(std::shared_ptr<const Data> data);
  friend struct RingBuilder;

  std::shared_ptr<const Data> data_;
  // Cached views into data_ for the hot arithmetic paths.
  std::size_t order_ = 0;
  const Element* add_ = nullptr;
  const Element* mul_ = nullptr;
};

/// Z/n with canonical residues as indices.
FiniteRing make_zmod(std::size_t n, const RingLimits& limits = {});

/// Componentwise product R x S; elements are labelled "(r,s)".
FiniteRing make_product(const FiniteRing& r, const FiniteRing& s, const RingLimits& limits = {});

/// k x k matrices over a commutative ring; elements are labelled "[[a,b],[c,d]]".
FiniteRing make_matrix_ring(const FiniteRing& base, std::size_t k, const RingLimits& limits = {});

/// base[t]/(modulus) for a monic modulus given little-endian as base indices.
FiniteRing make_quotient_poly(const FiniteRing& base, std::span<const Element> modulus,
                              const RingLimits& limits = {});

/// Exhaustive search for a ring isomorphism r -> s. Feasible only for small
/// orders (at most 9 elements); returns the image table when one exists.
std::optional<std::vector<Element>> find_isomorphism(const FiniteRing& r, const FiniteRing& s);

}  // namespace nilgraph::ring

#endif  // NILGRAPH_FINITE_RING_HPP
