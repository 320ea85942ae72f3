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

#include "nilgraph/ring_analysis.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "nilgraph/error.hpp"

namespace nilgraph::ring {

namespace {

// Dense bitset used while enumerating subgroups; ordered so it can key a std::set.
using Mask = std::vector<std::uint64_t>;

Mask empty_mask(std::size_t n) { return Mask((n + 63) / 64, 0); }
bool test(const Mask& m, Element e) { return (m[e / 64] >> (e % 64)) & 1U; }
void set_bit(Mask& m, Element e) { m[e / 64] |= std::uint64_t{1} << (e % 64); }

ElementSet to_set(const Mask& m, std::size_t n) {
  ElementSet s(n);
  for (Element e = 0; e < n; ++e)
    if (test(m, e)) s.insert(e);
  return s;
}

std::vector<Element> bits(const Mask& m, std::size_t n) {
  std::vector<Element> out;
  for (Element e = 0; e < n; ++e)
    if (test(m, e)) out.push_back(e);
  return out;
}

// Subgroup generated by a subgroup h and one extra element g.
Mask join_subgroup(const FiniteRing& r, const Mask& h, Element g) {
  const std::size_t n = r.order();
  const auto members = bits(h, n);
  Mask k = h;
  Element step = g;
  while (!test(h, step)) {
    for (Element x : members) set_bit(k, r.add(x, step));
    step = r.add(step, g);
  }
  return k;
}

bool is_two_sided(const FiniteRing& r, const std::vector<Element>& members, const Mask& m) {
  const auto n = static_cast<Element>(r.order());
  for (Element x : members)
    for (Element y = 0; y < n; ++y)
      if (!test(m, r.mul(x, y)) || !test(m, r.mul(y, x))) return false;
  return true;
}

// Elementwise criterion: for a, b outside P some r has arb outside P.
bool is_prime_ideal(const FiniteRing& r, const ElementSet& p) {
  const auto n = static_cast<Element>(r.order());
  if (p.size() == r.order()) return false;
  for (Element a = 0; a < n; ++a) {
    if (p.contains(a)) continue;
    for (Element b = 0; b < n; ++b) {
      if (p.contains(b)) continue;
      bool escapes = false;
      for (Element x = 0; x < n && !escapes; ++x)
        escapes = !p.contains(r.mul(r.mul(a, x), b));
      if (!escapes) return false;
    }
  }
  return true;
}

void check_ideal_cap(const FiniteRing& r, const RingLimits& limits) {
  if (r.order() > limits.ideal_cap) {
    throw Error(ErrorCode::IdealCapExceeded, "order " + std::to_string(r.order()) +
                                                 " exceeds ideal-enumeration cap " +
                                                 std::to_string(limits.ideal_cap));
  }
}

}  // namespace

std::optional<std::size_t> nilpotency_index(const FiniteRing& r, Element x) {
  // The power sequence enters a cycle within `order` steps.
  Element p = x;
  for (std::size_t k = 1; k <= r.order(); ++k) {
    if (p == FiniteRing::zero()) return k;
    p = r.mul(p, x);
  }
  return std::nullopt;
}

ElementSets element_sets(const FiniteRing& r) {
  const std::size_t n = r.order();
  const auto N = static_cast<Element>(n);
  ElementSets s{ElementSet(n), ElementSet(n), ElementSet(n), ElementSet(n), ElementSet(n), ElementSet(n)};
  for (Element x = 0; x < N; ++x)
    if (nilpotency_index(r, x)) s.nil.insert(x);
  for (Element x = 0; x < N; ++x) {
    bool left = false, right = false, unit = false, znil = false;
    for (Element y = 0; y < N; ++y) {
      if (y != 0) {
        left = left || r.mul(x, y) == 0;
        right = right || r.mul(y, x) == 0;
        znil = znil || s.nil.contains(r.mul(x, y));
      }
      unit = unit || (r.mul(x, y) == 1 && r.mul(y, x) == 1);
    }
    if (left) s.left_zd.insert(x);
    if (right) s.right_zd.insert(x);
    if ((left || right) && x != 0) s.zd_star.insert(x);
    if (unit) s.units.insert(x);
    if (znil) s.z_nil.insert(x);
  }
  return s;
}

std::optional<ElementSet> z_nil_shortcut(const FiniteRing& r, const ElementSet& nil, bool ni) {
  if (nil.size() > 1 && ni) return ElementSet::full(r.order());
  return std::nullopt;
}

ElementSet additive_closure(const FiniteRing& r, const ElementSet& generators) {
  const std::size_t n = r.order();
  Mask h = empty_mask(n);
  set_bit(h, 0);
  for (Element g : generators.members())
    if (!test(h, g)) h = join_subgroup(r, h, g);
  return to_set(h, n);
}

std::vector<ElementSet> enumerate_ideals(const FiniteRing& r, const RingLimits& limits) {
  check_ideal_cap(r, limits);
  const std::size_t n = r.order();
  const auto N = static_cast<Element>(n);

  // Breadth-first walk over additive subgroups: every subgroup is reached by
  // adjoining its elements one at a time starting from {0}.
  Mask start = empty_mask(n);
  set_bit(start, 0);
  std::set<Mask> seen{start};
  std::deque<Mask> queue{start};
  while (!queue.empty()) {
    Mask h = std::move(queue.front());
    queue.pop_front();
    for (Element g = 0; g < N; ++g) {
      if (test(h, g)) continue;
      Mask k = join_subgroup(r, h, g);
      if (seen.insert(k).second) queue.push_back(std::move(k));
    }
  }

  std::vector<std::pair<std::vector<Element>, Mask>> ideals;
  for (const Mask& m : seen) {
    auto members = bits(m, n);
    if (is_two_sided(r, members, m)) ideals.emplace_back(std::move(members), m);
  }
  std::sort(ideals.begin(), ideals.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<ElementSet> out;
  out.reserve(ideals.size());
  for (const auto& [members, m] : ideals) out.push_back(ElementSet::from_members(n, members));
  return out;
}

RadicalReport minimal_primes(const FiniteRing& r, const RingLimits& limits) {
  RadicalReport report;
  for (const ElementSet& ideal : enumerate_ideals(r, limits))
    if (is_prime_ideal(r, ideal)) report.all_primes.push_back(ideal);
  for (const ElementSet& p : report.all_primes) {
    bool minimal = true;
    for (const ElementSet& q : report.all_primes)
      if (!(q == p) && q.is_subset_of(p)) {
        minimal = false;
        break;
      }
    if (minimal) report.minimal_primes.push_back(p);
  }
  return report;
}

RadicalReport radicals(const FiniteRing& r, const RingLimits& limits) {
  const std::size_t n = r.order();
  RadicalReport report;
  const auto ideals = enumerate_ideals(r, limits);
  for (const ElementSet& ideal : ideals)
    if (is_prime_ideal(r, ideal)) report.all_primes.push_back(ideal);
  for (const ElementSet& p : report.all_primes) {
    bool minimal = true;
    for (const ElementSet& q : report.all_primes)
      if (!(q == p) && q.is_subset_of(p)) {
        minimal = false;
        break;
      }
    if (minimal) report.minimal_primes.push_back(p);
  }

  ElementSet prime_radical = ElementSet::full(n);
  for (const ElementSet& p : report.all_primes) prime_radical = prime_radical.intersect(p);
  report.prime_radical = prime_radical;

  ElementSet nil(n);
  for (Element x = 0; x < n; ++x)
    if (nilpotency_index(r, x)) nil.insert(x);
  ElementSet nil_union(n);
  nil_union.insert(0);
  for (const ElementSet& ideal : ideals)
    if (ideal.is_subset_of(nil)) nil_union = nil_union.unite(ideal);
  report.upper_nilradical = additive_closure(r, nil_union);
  return report;
}

PropertyReport ring_properties(const FiniteRing& r, const RingLimits& limits) {
  const auto N = static_cast<Element>(r.order());
  PropertyReport p;

  ElementSet nil(r.order());
  for (Element x = 0; x < N; ++x)
    if (nilpotency_index(r, x)) nil.insert(x);
  p.reduced = nil.size() == 1;
  if (!p.reduced) p.reduced_witness = nil.members()[1];

  p.reversible = true;
  for (Element a = 0; a < N && p.reversible; ++a)
    for (Element b = 0; b < N; ++b)
      if (r.mul(a, b) == 0 && r.mul(b, a) != 0) {
        p.reversible = false;
        p.reversible_witness = std::vector<Element>{a, b};
        break;
      }

  p.symmetric = true;
  for (Element a = 0; a < N && p.symmetric; ++a)
    for (Element b = 0; b < N && p.symmetric; ++b) {
      const Element ab = r.mul(a, b);
      for (Element c = 0; c < N; ++c)
        if (r.mul(ab, c) == 0 && r.mul(r.mul(a, c), b) != 0) {
          p.symmetric = false;
          p.symmetric_witness = std::vector<Element>{a, b, c};
          break;
        }
    }

  if (r.order() <= limits.ideal_cap) {
    const RadicalReport rad = radicals(r, limits);
    p.two_primal = rad.prime_radical == nil;
    p.ni = rad.upper_nilradical == nil;
    if (!*p.two_primal) p.two_primal_witness = nil.minus(rad.prime_radical).members().front();
    if (!*p.ni) p.ni_witness = nil.minus(rad.upper_nilradical).members().front();
  }
  return p;
}

}  // namespace nilgraph::ring
