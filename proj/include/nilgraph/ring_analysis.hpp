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

#ifndef NILGRAPH_RING_ANALYSIS_HPP
#define NILGRAPH_RING_ANALYSIS_HPP

#include <optional>
#include <vector>

#include "nilgraph/finite_ring.hpp"

namespace nilgraph::ring {

/// Distinguished subsets of a finite ring.
struct ElementSets {
  ElementSet nil;       ///< nilpotent elements
  ElementSet left_zd;   ///< x with xy = 0 for some y != 0 (contains zero)
  ElementSet right_zd;  ///< x with yx = 0 for some y != 0 (contains zero)
  ElementSet zd_star;   ///< nonzero left or right zero divisors
  ElementSet units;
  /// x with x*y nilpotent for some y != 0.
  ElementSet z_nil;
};

struct RadicalReport {
  ElementSet prime_radical;
  ElementSet upper_nilradical;
  std::vector<ElementSet> minimal_primes;
  std::vector<ElementSet> all_primes;
};

struct PropertyReport {
  bool reduced = false;
  bool reversible = false;
  bool symmetric = false;
  /// Unknown (nullopt) when the ideal cap blocks radical computation.
  std::optional<bool> two_primal;
  std::optional<bool> ni;

  // Counterexamples for failed properties.
  std::optional<Element> reduced_witness;                 ///< nonzero nilpotent
  std::optional<std::vector<Element>> reversible_witness;  ///< (a,b): ab = 0, ba != 0
  std::optional<std::vector<Element>> symmetric_witness;   ///< (a,b,c): abc = 0, acb != 0
  std::optional<Element> two_primal_witness;               ///< nilpotent outside P(R)
  std::optional<Element> ni_witness;                       ///< nilpotent outside nil*(R)
};

/// Smallest k >= 1 with x^k = 0, or nullopt when x is not nilpotent.
std::optional<std::size_t> nilpotency_index(const FiniteRing& r, Element x);

ElementSets element_sets(const FiniteRing& r);

/// Z_N(R) via the shortcut "nil != {0} and NI implies Z_N(R) = R"; nullopt
/// when the shortcut does not apply. Used to cross-check element_sets().
std::optional<ElementSet> z_nil_shortcut(const FiniteRing& r, const ElementSet& nil, bool ni);

/// All two-sided ideals, ordered by size and then by member list.
std::vector<ElementSet> enumerate_ideals(const FiniteRing& r, const RingLimits& limits = {});

/// Prime ideals and minimal primes (prime_radical/upper_nilradical left empty).
RadicalReport minimal_primes(const FiniteRing& r, const RingLimits& limits = {});

RadicalReport radicals(const FiniteRing& r, const RingLimits& limits = {});

/// Decides all five properties. Radical-based flags become unknown when the
/// ring exceeds the ideal cap.
PropertyReport ring_properties(const FiniteRing& r, const RingLimits& limits = {});

/// Additive subgroup generated by a set of elements.
ElementSet additive_closure(const FiniteRing& r, const ElementSet& generators);

}  // namespace nilgraph::ring

#endif  // NILGRAPH_RING_ANALYSIS_HPP
