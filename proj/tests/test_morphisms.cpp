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

#include <gtest/gtest.h>

#include "nilgraph/error.hpp"
#include "nilgraph/morphisms.hpp"

namespace nilgraph::morph {
namespace {

using ring::make_product;
using ring::make_quotient_poly;
using ring::make_zmod;

FiniteRing f4() {
  const Element m[] = {1, 1, 1};
  return make_quotient_poly(make_zmod(2), m);
}

FiniteRing dual2() {
  const Element m[] = {0, 0, 1};
  return make_quotient_poly(make_zmod(2), m);
}

Element el(const FiniteRing& r, const std::string& l) { return r.find(l).value(); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

TEST(ValidateEndo, IdentityOnZ4) {
  RingMap id = identity_map(make_zmod(4));
  EXPECT_TRUE(id.is_endo());
  EXPECT_TRUE(id.is_bijective());
  EXPECT_TRUE(id.is_identity());
}

TEST(ValidateEndo, FrobeniusOnF4HasOrderTwo) {
  FiniteRing r = f4();
  RingMap fr = frobenius_map(r);
  EXPECT_TRUE(fr.is_bijective());
  EXPECT_FALSE(fr.is_identity());
  // Freshman's dream: (a+b)^2 = a^2 + b^2 in characteristic 2.
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b)
      EXPECT_EQ(r.mul(r.add(a, b), r.add(a, b)), r.add(r.mul(a, a), r.mul(b, b)));
  EXPECT_TRUE(compose(fr, fr).is_identity());
  EXPECT_EQ(fr(el(r, "t")), el(r, "t+1"));
}

TEST(ValidateEndo, SwapOnZ2xZ2) {
  FiniteRing r = make_product(make_zmod(2), make_zmod(2));
  RingMap s = swap_map(r);
  EXPECT_TRUE(s.is_bijective());
  EXPECT_EQ(s(el(r, "(1,0)")), el(r, "(0,1)"));
}

TEST(ValidateEndo, RejectionsCarryCodes) {
  FiniteRing z4 = make_zmod(4);
  EXPECT_EQ(code_of([&] { validate_endo(z4, {0, 2, 0, 2}); }), ErrorCode::NotMultiplicative);
  EXPECT_EQ(code_of([&] { validate_endo(z4, {0, 1, 1, 1}); }), ErrorCode::NotAdditive);
  EXPECT_EQ(code_of([&] { validate_endo(z4, {0, 0, 0, 0}); }), ErrorCode::UnitNotFixed);
  EXPECT_EQ(code_of([&] { validate_endo(z4, {0, 1, 2}); }), ErrorCode::TableSize);
  EXPECT_EQ(code_of([&] { validate_endo(z4, {0, 1, 2, 7}); }), ErrorCode::TableSize);
}

TEST(ValidateDerivation, ZeroAndFormalDerivative) {
  FiniteRing d = dual2();
  RingMap id = identity_map(d);
  EXPECT_TRUE(zero_derivation(d, id).is_zero());
  std::vector<Element> ddt(4);
  ddt[el(d, "0")] = el(d, "0");
  ddt[el(d, "1")] = el(d, "0");
  ddt[el(d, "t")] = el(d, "1");
  ddt[el(d, "t+1")] = el(d, "1");
  DerivationMap dm = validate_derivation(d, id, ddt);
  EXPECT_FALSE(dm.is_zero());
}

TEST(ValidateDerivation, DoublingOnZ4Fails) {
  FiniteRing z4 = make_zmod(4);
  RingMap id = identity_map(z4);
  try {
    validate_derivation(z4, id, {0, 2, 0, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LeibnizFails);
    EXPECT_NE(std::string(e.what()).find("(1, 1)"), std::string::npos) << e.what();
  }
}

TEST(Compat, Z4IdentityCompatibleNotRigid) {
  FiniteRing z4 = make_zmod(4);
  RingMap id = identity_map(z4);
  std::vector<RingMap> s{id};
  std::vector<DerivationMap> d{zero_derivation(z4, id)};
  CompatReport rep = compatibility_report(z4, ring::element_sets(z4), s, d);
  EXPECT_TRUE(rep.sigma_compatible);
  EXPECT_TRUE(rep.delta_compatible);
  EXPECT_TRUE(rep.weak_sigma_compatible);
  EXPECT_TRUE(rep.weak_delta_compatible);
  EXPECT_FALSE(rep.sigma_rigid);
  ASSERT_TRUE(rep.rigid_witness);
  EXPECT_EQ(rep.rigid_witness->a, 2u);
}

TEST(Compat, SwapIsIncompatible) {
  FiniteRing r = make_product(make_zmod(2), make_zmod(2));
  RingMap sw = swap_map(r);
  std::vector<RingMap> s{sw};
  std::vector<DerivationMap> d{zero_derivation(r, sw)};
  CompatReport rep = compatibility_report(r, ring::element_sets(r), s, d);
  EXPECT_FALSE(rep.sigma_compatible);
  ASSERT_TRUE(rep.sigma_witness);
  const auto w = *rep.sigma_witness;
  EXPECT_NE((r.mul(w.a, w.b) == 0), (r.mul(w.a, sw(w.b)) == 0));
  // The pair a = b = (1,0) separates the two conditions.
  const Element a = el(r, "(1,0)");
  EXPECT_NE(r.mul(a, a), 0u);
  EXPECT_EQ(r.mul(a, sw(a)), 0u);
}

TEST(Compat, FrobeniusOnFieldIsRigid) {
  FiniteRing r = f4();
  RingMap fr = frobenius_map(r);
  std::vector<RingMap> s{fr};
  std::vector<DerivationMap> d{zero_derivation(r, fr)};
  CompatReport rep = compatibility_report(r, ring::element_sets(r), s, d);
  EXPECT_TRUE(rep.compatible());
  EXPECT_TRUE(rep.sigma_rigid);
}

TEST(Compat, FormalDerivativeIsNotDeltaCompatible) {
  FiniteRing d = dual2();
  RingMap id = identity_map(d);
  std::vector<Element> ddt{0, 0, 0, 0};
  ddt[el(d, "t")] = el(d, "1");
  ddt[el(d, "t+1")] = el(d, "1");
  std::vector<RingMap> s{id};
  std::vector<DerivationMap> dl{validate_derivation(d, id, ddt)};
  CompatReport rep = compatibility_report(d, ring::element_sets(d), s, dl);
  EXPECT_TRUE(rep.sigma_compatible);
  EXPECT_FALSE(rep.delta_compatible);
  // t * t = 0 but t * d(t) = t.
  ASSERT_TRUE(rep.delta_witness);
  EXPECT_EQ(d.mul(rep.delta_witness->a, rep.delta_witness->b), 0u);
}

TEST(CompositeMaps, OrderedProductsOnly) {
  FiniteRing r = f4();
  std::vector<RingMap> s{frobenius_map(r)};
  auto maps = composite_maps(s);
  ASSERT_EQ(maps.size(), 2u);
  EXPECT_TRUE(maps[0].is_identity());
  std::vector<RingMap> two{frobenius_map(r), identity_map(r)};
  EXPECT_EQ(composite_maps(two).size(), 2u);
}

}  // namespace
}  // namespace nilgraph::morph
