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

#include "nilgraph/morphisms.hpp"

#include <map>
#include <set>

#include "nilgraph/error.hpp"

namespace nilgraph::morph {

namespace {

std::string pair_text(const FiniteRing& r, Element a, Element b) {
  return "(" + r.element_label(a) + ", " + r.element_label(b) + ")";
}

void check_table(const FiniteRing& r, std::span<const Element> table, const char* what) {
  if (table.size() != r.order()) {
    throw Error(ErrorCode::TableSize, std::string(what) + " table has " +
                                          std::to_string(table.size()) + " entries, ring " +
                                          r.label() + " has order " + std::to_string(r.order()));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= r.order()) {
      throw Error(ErrorCode::TableSize, std::string(what) + " table entry " + std::to_string(i) +
                                            " = " + std::to_string(table[i]) + " is out of range");
    }
  }
}

void check_additive(const FiniteRing& r, std::span<const Element> f, const char* what) {
  const auto n = static_cast<Element>(r.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (f[r.add(a, b)] != r.add(f[a], f[b]))
        throw Error(ErrorCode::NotAdditive,
                    std::string(what) + " fails f(a+b) = f(a)+f(b) at " + pair_text(r, a, b));
}

}  // namespace

RingMap::RingMap(FiniteRing r, std::vector<Element> table)
    : ring_(std::move(r)), table_(std::move(table)) {
  std::vector<bool> hit(table_.size(), false);
  std::size_t distinct = 0;
  for (Element e : table_)
    if (!hit[e]) {
      hit[e] = true;
      ++distinct;
    }
  is_endo_ = true;
  is_injective_ = distinct == table_.size();
  is_bijective_ = is_injective_;
}

bool RingMap::is_identity() const noexcept {
  for (Element i = 0; i < table_.size(); ++i)
    if (table_[i] != i) return false;
  return true;
}

bool DerivationMap::is_zero() const noexcept {
  for (Element e : table_)
    if (e != 0) return false;
  return true;
}

RingMap validate_endo(const FiniteRing& r, std::vector<Element> table) {
  check_table(r, table, "endomorphism");
  check_additive(r, table, "endomorphism");
  const auto n = static_cast<Element>(r.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (table[r.mul(a, b)] != r.mul(table[a], table[b]))
        throw Error(ErrorCode::NotMultiplicative,
                    "endomorphism fails f(ab) = f(a)f(b) at " + pair_text(r, a, b));
  if (table[FiniteRing::one()] != FiniteRing::one())
    throw Error(ErrorCode::UnitNotFixed,
                "endomorphism sends 1 to " + r.element_label(table[FiniteRing::one()]));
  return RingMap(r, std::move(table));
}

DerivationMap validate_derivation(const FiniteRing& r, const RingMap& sigma,
                                  std::vector<Element> table) {
  if (!sigma.ring().same_tables(r))
    throw Error(ErrorCode::InvalidArgument, "derivation and its endomorphism act on different rings");
  check_table(r, table, "derivation");
  check_additive(r, table, "derivation");
  const auto n = static_cast<Element>(r.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element rhs = r.add(r.mul(sigma(a), table[b]), r.mul(table[a], b));
      if (table[r.mul(a, b)] != rhs)
        throw Error(ErrorCode::LeibnizFails,
                    "d(ab) != sigma(a)d(b) + d(a)b at " + pair_text(r, a, b));
    }
  // Follows from Leibniz at (1,1) since sigma(1) = 1; kept as a guard.
  if (table[FiniteRing::one()] != 0)
    throw Error(ErrorCode::LeibnizFails, "derivation does not vanish at 1");
  return DerivationMap(sigma, std::move(table));
}

RingMap identity_map(const FiniteRing& r) {
  std::vector<Element> t(r.order());
  for (Element i = 0; i < t.size(); ++i) t[i] = i;
  return validate_endo(r, std::move(t));
}

RingMap frobenius_map(const FiniteRing& r) {
  const std::size_t p = r.characteristic();
  bool prime = p >= 2;
  for (std::size_t d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
  if (!prime || !r.is_commutative())
    throw Error(ErrorCode::InvalidArgument,
                "frobenius needs a commutative ring of prime characteristic, got " + r.label());
  std::vector<Element> t(r.order());
  for (Element i = 0; i < t.size(); ++i) t[i] = r.pow(i, p);
  return validate_endo(r, std::move(t));
}

RingMap swap_map(const FiniteRing& r) {
  const auto f = r.factors();
  if (f.size() != 2 || !f[0].same_tables(f[1]))
    throw Error(ErrorCode::InvalidArgument,
                "swap needs a product of two identical factors, got " + r.label());
  std::map<std::pair<Element, Element>, Element> by_coords;
  for (Element e = 0; e < r.order(); ++e) {
    const auto c = r.coordinates(e);
    by_coords[{c[0], c[1]}] = e;
  }
  std::vector<Element> t(r.order());
  for (Element e = 0; e < r.order(); ++e) {
    const auto c = r.coordinates(e);
    t[e] = by_coords.at({c[1], c[0]});
  }
  return validate_endo(r, std::move(t));
}

DerivationMap zero_derivation(const FiniteRing& r, const RingMap& sigma) {
  return validate_derivation(r, sigma, std::vector<Element>(r.order(), 0));
}

RingMap compose(const RingMap& f, const RingMap& g) {
  std::vector<Element> t(g.table().size());
  for (Element i = 0; i < t.size(); ++i) t[i] = f(g(i));
  return validate_endo(f.ring(), std::move(t));
}

std::vector<RingMap> composite_maps(std::span<const RingMap> sigma, std::size_t cap) {
  if (sigma.empty()) return {};
  const FiniteRing& r = sigma.front().ring();
  auto key_of = [](const RingMap& m) {
    return std::vector<Element>(m.table().begin(), m.table().end());
  };
  // Ordered products sigma_1^{a_1} o ... o sigma_n^{a_n}: build the distinct
  // powers of each generator, then fold them from the right.
  std::vector<RingMap> out{identity_map(r)};
  for (auto it = sigma.rbegin(); it != sigma.rend(); ++it) {
    std::vector<RingMap> powers{identity_map(r)};
    std::set<std::vector<Element>> seen_powers{key_of(powers.front())};
    for (;;) {
      RingMap next = compose(*it, powers.back());
      if (!seen_powers.insert(key_of(next)).second) break;
      powers.push_back(std::move(next));
    }
    std::vector<RingMap> folded;
    std::set<std::vector<Element>> seen;
    for (const RingMap& p : powers)
      for (const RingMap& tail : out) {
        RingMap m = compose(p, tail);
        if (!seen.insert(key_of(m)).second) continue;
        if (folded.size() >= cap)
          throw Error(ErrorCode::InvalidArgument,
                      "more than " + std::to_string(cap) + " distinct composite maps");
        folded.push_back(std::move(m));
      }
    out = std::move(folded);
  }
  return out;
}

// Compatibility is decided on the generators only. For the two-sided
// conditions this suffices: the relation "ab = 0 iff a s(b) = 0" holding for
// all (a,b) and each generator s also holds for (a, t(b)), so it chains along
// any word s_1 ... s_k by induction on k. The one-sided delta condition chains
// the same way, since a d_i(b) = 0 is again a vanishing product. The weak
// variants repeat the argument with "= 0" replaced by "in nil". Rigidity does
// not chain this way (a appears on both sides), so it is checked over every
// distinct composite map.
CompatReport compatibility_report(const FiniteRing& r, const ring::ElementSets& sets,
                                  std::span<const RingMap> sigma,
                                  std::span<const DerivationMap> delta) {
  if (sigma.size() != delta.size())
    throw Error(ErrorCode::InvalidArgument, "sigma and delta lists differ in length");
  const auto n = static_cast<Element>(r.order());
  const ring::ElementSet& nil = sets.nil;
  CompatReport rep;
  rep.sigma_compatible = rep.delta_compatible = true;
  rep.weak_sigma_compatible = rep.weak_delta_compatible = true;

  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const RingMap& s = sigma[i];
    const DerivationMap& d = delta[i];
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        const Element ab = r.mul(a, b);
        const Element asb = r.mul(a, s(b));
        const Element adb = r.mul(a, d(b));
        if (rep.sigma_compatible && ((ab == 0) != (asb == 0))) {
          rep.sigma_compatible = false;
          rep.sigma_witness = CompatWitness{i, a, b};
        }
        if (rep.delta_compatible && ab == 0 && adb != 0) {
          rep.delta_compatible = false;
          rep.delta_witness = CompatWitness{i, a, b};
        }
        if (rep.weak_sigma_compatible && (nil.contains(ab) != nil.contains(asb))) {
          rep.weak_sigma_compatible = false;
          rep.weak_sigma_witness = CompatWitness{i, a, b};
        }
        if (rep.weak_delta_compatible && nil.contains(ab) && !nil.contains(adb)) {
          rep.weak_delta_compatible = false;
          rep.weak_delta_witness = CompatWitness{i, a, b};
        }
      }
  }

  rep.sigma_rigid = true;
  const auto maps = sigma.empty() ? std::vector<RingMap>{identity_map(r)} : composite_maps(sigma);
  for (std::size_t k = 0; k < maps.size() && rep.sigma_rigid; ++k)
    for (Element a = 1; a < n; ++a)
      if (r.mul(a, maps[k](a)) == 0) {
        rep.sigma_rigid = false;
        rep.rigid_witness = CompatWitness{k, a, a};
        break;
      }
  return rep;
}

}  // namespace nilgraph::morph
