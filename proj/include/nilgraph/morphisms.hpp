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

#ifndef NILGRAPH_MORPHISMS_HPP
#define NILGRAPH_MORPHISMS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nilgraph/finite_ring.hpp"
#include "nilgraph/ring_analysis.hpp"

namespace nilgraph::morph {

using ring::Element;
using ring::FiniteRing;

/// A validated ring endomorphism given by its image table.
class RingMap {
 public:
  const FiniteRing& ring() const noexcept { return ring_; }
  std::span<const Element> table() const noexcept { return table_; }
  Element operator()(Element a) const { return table_[a]; }

  bool is_endo() const noexcept { return is_endo_; }
  bool is_injective() const noexcept { return is_injective_; }
  bool is_bijective() const noexcept { return is_bijective_; }
  bool is_identity() const noexcept;

  friend bool operator==(const RingMap& a, const RingMap& b) { return a.table_ == b.table_; }

 private:
  RingMap(FiniteRing r, std::vector<Element> table);
  friend RingMap validate_endo(const FiniteRing& r, std::vector<Element> table);

  FiniteRing ring_;
  std::vector<Element> table_;
  bool is_endo_ = false;
  bool is_injective_ = false;
  bool is_bijective_ = false;
};

/// A validated sigma-derivation: additive with d(ab) = sigma(a)d(b) + d(a)b.
class DerivationMap {
 public:
  const FiniteRing& ring() const noexcept { return sigma_.ring(); }
  const RingMap& sigma() const noexcept { return sigma_; }
  std::span<const Element> table() const noexcept { return table_; }
  Element operator()(Element a) const { return table_[a]; }
  bool is_zero() const noexcept;

 private:
  DerivationMap(RingMap sigma, std::vector<Element> table)
      : sigma_(std::move(sigma)), table_(std::move(table)) {}
  friend DerivationMap validate_derivation(const FiniteRing& r, const RingMap& sigma,
                                           std::vector<Element> table);

  RingMap sigma_;
  std::vector<Element> table_;
};

/// Checks the table exhaustively. Throws NotAdditive, NotMultiplicative or
/// UnitNotFixed with a witness, TableSize for malformed tables.
RingMap validate_endo(const FiniteRing& r, std::vector<Element> table);

/// Throws NotAdditive or LeibnizFails with a witness pair.
DerivationMap validate_derivation(const FiniteRing& r, const RingMap& sigma,
                                  std::vector<Element> table);

RingMap identity_map(const FiniteRing& r);
/// a -> a^p for a commutative ring of prime characteristic p.
RingMap frobenius_map(const FiniteRing& r);
/// (a,b) -> (b,a) on a product of two identical factors.
RingMap swap_map(const FiniteRing& r);
DerivationMap zero_derivation(const FiniteRing& r, const RingMap& sigma);

/// f after g.
RingMap compose(const RingMap& f, const RingMap& g);

/// Every distinct ordered product sigma_1^{a_1} o ... o sigma_n^{a_n}, identity first.
/// The set is finite because the ring is; throws InvalidArgument beyond `cap`.
std::vector<RingMap> composite_maps(std::span<const RingMap> sigma, std::size_t cap = 4096);

/// Failure witness: offending generator index (or composite index for
/// rigidity) and the element pair.
struct CompatWitness {
  std::size_t map_index = 0;
  Element a = 0;
  Element b = 0;
};

struct CompatReport {
  bool sigma_compatible = false;
  bool delta_compatible = false;
  bool sigma_rigid = false;
  bool weak_sigma_compatible = false;
  bool weak_delta_compatible = false;

  std::optional<CompatWitness> sigma_witness;
  std::optional<CompatWitness> delta_witness;
  std::optional<CompatWitness> rigid_witness;  ///< b unused; a*sigma^alpha(a) = 0
  std::optional<CompatWitness> weak_sigma_witness;
  std::optional<CompatWitness> weak_delta_witness;

  bool compatible() const noexcept { return sigma_compatible && delta_compatible; }
  bool weak_compatible() const noexcept { return weak_sigma_compatible && weak_delta_compatible; }
};

/// Decides compatibility, rigidity and the weak variants. delta[i] must be a
/// sigma[i]-derivation. nil is taken from `sets`.
CompatReport compatibility_report(const FiniteRing& r, const ring::ElementSets& sets,
                                  std::span<const RingMap> sigma,
                                  std::span<const DerivationMap> delta);

}  // namespace nilgraph::morph

#endif  // NILGRAPH_MORPHISMS_HPP
