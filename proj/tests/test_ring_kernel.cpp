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

#include <array>
#include <set>

#include "nilgraph/error.hpp"
#include "nilgraph/finite_ring.hpp"
#include "nilgraph/ring_analysis.hpp"

namespace nilgraph::ring {
namespace {

using Members = std::vector<Element>;

Element el(const FiniteRing& r, const std::string& label) {
  auto e = r.find(label);
  if (!e) throw std::runtime_error("no element " + label + " in " + r.label());
  return *e;
}

Members labels_to(const FiniteRing& r, std::initializer_list<const char*> labels) {
  Members out;
  for (const char* l : labels) out.push_back(el(r, l));
  std::sort(out.begin(), out.end());
  return out;
}

std::set<Members> as_sets(const std::vector<ElementSet>& v) {
  std::set<Members> out;
  for (const auto& s : v) out.insert(s.members());
  return out;
}

// Independent 2x2 matrix arithmetic over Z/2, entries row-major.
using Mat = std::array<int, 4>;
Mat mat_mul(const Mat& a, const Mat& b) {
  return {(a[0] * b[0] + a[1] * b[2]) % 2, (a[0] * b[1] + a[1] * b[3]) % 2,
          (a[2] * b[0] + a[3] * b[2]) % 2, (a[2] * b[1] + a[3] * b[3]) % 2};
}
std::string mat_label(const Mat& m) {
  return "[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],[" + std::to_string(m[2]) +
         "," + std::to_string(m[3]) + "]]";
}

TEST(Zmod, TablesMatchModularArithmetic) {
  for (std::size_t n : {2u, 4u, 6u, 8u, 12u}) {
    FiniteRing r = make_zmod(n);
    ASSERT_EQ(r.order(), n);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        EXPECT_EQ(r.add(a, b), (a + b) % n);
        EXPECT_EQ(r.mul(a, b), (a * b) % n);
      }
  }
}

TEST(Zmod, SmallExamples) {
  FiniteRing z2 = make_zmod(2);
  EXPECT_EQ(z2.add(1, 1), 0u);
  FiniteRing z4 = make_zmod(4);
  EXPECT_EQ(z4.mul(2, 2), 0u);
  FiniteRing z6 = make_zmod(6);
  EXPECT_EQ(z6.mul(2, 3), 0u);
  EXPECT_EQ(z6.mul(4, 3), 0u);
  EXPECT_EQ(z6.label(), "Z/6");
  EXPECT_EQ(z6.characteristic(), 6u);
}

TEST(Zmod, RejectsOutOfRange) {
  EXPECT_THROW(make_zmod(1), Error);
  try {
    make_zmod(257);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderCapExceeded);
  }
}

TEST(Product, ComponentwiseArithmetic) {
  FiniteRing r = make_product(make_zmod(2), make_zmod(2));
  EXPECT_EQ(r.order(), 4u);
  EXPECT_EQ(r.mul(el(r, "(1,0)"), el(r, "(0,1)")), el(r, "(0,0)"));
  EXPECT_EQ(r.element_label(0), "(0,0)");
  EXPECT_EQ(r.element_label(1), "(1,1)");
}

TEST(Product, ChineseRemainderIsomorphism) {
  FiniteRing z2z3 = make_product(make_zmod(2), make_zmod(3));
  FiniteRing z6 = make_zmod(6);
  auto iso = find_isomorphism(z6, z2z3);
  ASSERT_TRUE(iso.has_value());
  // (1,1) generates the additive group.
  const Element g = el(z2z3, "(1,1)");
  std::set<Element> seen;
  Element x = 0;
  for (int k = 0; k < 6; ++k) {
    seen.insert(x);
    x = z2z3.add(x, g);
  }
  EXPECT_EQ(seen.size(), 6u);
  EXPECT_FALSE(find_isomorphism(make_zmod(4), make_product(make_zmod(2), make_zmod(2))));
}

TEST(Product, NilOfZ4xZ2) {
  FiniteRing r = make_product(make_zmod(4), make_zmod(2));
  EXPECT_EQ(element_sets(r).nil.members(), labels_to(r, {"(0,0)", "(2,0)"}));
}

TEST(Matrix, MatchesExplicitMatrixArithmetic) {
  FiniteRing r = make_matrix_ring(make_zmod(2), 2);
  ASSERT_EQ(r.order(), 16u);
  EXPECT_EQ(r.label(), "M2(Z/2)");
  EXPECT_EQ(r.element_label(1), "[[1,0],[0,1]]");
  for (int x = 0; x < 16; ++x)
    for (int y = 0; y < 16; ++y) {
      Mat a{x & 1, (x >> 1) & 1, (x >> 2) & 1, (x >> 3) & 1};
      Mat b{y & 1, (y >> 1) & 1, (y >> 2) & 1, (y >> 3) & 1};
      EXPECT_EQ(r.element_label(r.mul(el(r, mat_label(a)), el(r, mat_label(b)))),
                mat_label(mat_mul(a, b)));
    }
}

TEST(Matrix, MatrixUnitsAndNil) {
  FiniteRing r = make_matrix_ring(make_zmod(2), 2);
  const Element e11 = el(r, "[[1,0],[0,0]]"), e12 = el(r, "[[0,1],[0,0]]");
  const Element e21 = el(r, "[[0,0],[1,0]]"), e22 = el(r, "[[0,0],[0,1]]");
  EXPECT_EQ(r.mul(e12, e21), e11);
  EXPECT_EQ(r.mul(e21, e12), e22);
  EXPECT_EQ(element_sets(r).nil.members(),
            labels_to(r, {"[[0,0],[0,0]]", "[[0,1],[0,0]]", "[[0,0],[1,0]]", "[[1,1],[1,1]]"}));
}

TEST(Matrix, RejectsNoncommutativeBase) {
  FiniteRing m = make_matrix_ring(make_zmod(2), 2);
  try {
    make_matrix_ring(m, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCommutative);
  }
}

TEST(Quotient, DualNumbersAndField) {
  const Element dual[] = {0, 0, 1};
  FiniteRing d = make_quotient_poly(make_zmod(2), dual);
  EXPECT_EQ(d.order(), 4u);
  EXPECT_EQ(d.mul(el(d, "t"), el(d, "t")), 0u);
  EXPECT_EQ(element_sets(d).nil.members(), labels_to(d, {"0", "t"}));

  const Element f4mod[] = {1, 1, 1};
  FiniteRing f4 = make_quotient_poly(make_zmod(2), f4mod);
  EXPECT_EQ(f4.label(), "Z/2[t]/(t^2+t+1)");
  // Every nonzero element has an inverse, found by exhaustive search.
  for (Element a = 1; a < 4; ++a) {
    bool inv = false;
    for (Element b = 0; b < 4; ++b) inv = inv || f4.mul(a, b) == 1;
    EXPECT_TRUE(inv) << f4.element_label(a);
  }
  EXPECT_EQ(f4.mul(el(f4, "t"), el(f4, "t")), el(f4, "t+1"));

  const Element z3mod[] = {0, 0, 1};
  FiniteRing z3t = make_quotient_poly(make_zmod(3), z3mod);
  EXPECT_EQ(z3t.order(), 9u);
  EXPECT_EQ(element_sets(z3t).nil.members(), labels_to(z3t, {"0", "t", "2t"}));
}

TEST(Quotient, RejectsNonMonic) {
  const Element bad[] = {1, 0, 2};
  try {
    make_quotient_poly(make_zmod(4), bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonMonicModulus);
  }
}

TEST(FromTables, DetectsAxiomViolation) {
  // Z/2 addition with a non-distributive multiplication (everything times
  // anything is one, except products involving zero).
  std::vector<Element> add{0, 1, 1, 0};
  std::vector<Element> bad_mul{0, 0, 0, 0};
  try {
    FiniteRing::from_tables(2, add, bad_mul, "bad", {"0", "1"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RingAxiom);
  }
  EXPECT_NO_THROW(FiniteRing::from_tables(2, add, {0, 0, 0, 1}, "ok", {"0", "1"}));
}

TEST(ElementSets, Z4) {
  FiniteRing r = make_zmod(4);
  ElementSets s = element_sets(r);
  EXPECT_EQ(s.nil.members(), (Members{0, 2}));
  EXPECT_EQ(s.units.members(), (Members{1, 3}));
  EXPECT_EQ(s.zd_star.members(), (Members{2}));
  EXPECT_EQ(s.z_nil.members(), (Members{0, 1, 2, 3}));
}

TEST(ElementSets, Z2xZ2AndZ8) {
  FiniteRing r = make_product(make_zmod(2), make_zmod(2));
  ElementSets s = element_sets(r);
  EXPECT_EQ(s.nil.members(), (Members{0}));
  EXPECT_EQ(s.zd_star.members(), labels_to(r, {"(1,0)", "(0,1)"}));
  EXPECT_EQ(s.z_nil.members(), labels_to(r, {"(0,0)", "(1,0)", "(0,1)"}));
  EXPECT_EQ(element_sets(make_zmod(8)).nil.members(), (Members{0, 2, 4, 6}));
}

TEST(Ideals, SubgroupScans) {
  EXPECT_EQ(as_sets(enumerate_ideals(make_zmod(6))),
            (std::set<Members>{{0}, {0, 2, 4}, {0, 3}, {0, 1, 2, 3, 4, 5}}));
  EXPECT_EQ(as_sets(enumerate_ideals(make_zmod(4))),
            (std::set<Members>{{0}, {0, 2}, {0, 1, 2, 3}}));
  auto m = enumerate_ideals(make_matrix_ring(make_zmod(2), 2));
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0].size(), 1u);
  EXPECT_EQ(m[1].size(), 16u);
}

TEST(Ideals, CapReported) {
  FiniteRing r = make_zmod(65);
  try {
    enumerate_ideals(r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IdealCapExceeded);
  }
  PropertyReport p = ring_properties(r);
  EXPECT_FALSE(p.two_primal.has_value());
  EXPECT_FALSE(p.ni.has_value());
}

// Divisor oracle: the ideals of Z/n are exactly dZ/n for d | n.
TEST(Ideals, ZmodIdealsAreDivisorIdeals) {
  for (std::size_t n = 2; n <= 40; ++n) {
    std::set<Members> expect;
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d) continue;
      Members m;
      for (std::size_t x = 0; x < n; x += d) m.push_back(static_cast<Element>(x));
      expect.insert(m);
    }
    EXPECT_EQ(as_sets(enumerate_ideals(make_zmod(n))), expect) << n;
  }
}

TEST(Primes, MinimalPrimes) {
  EXPECT_EQ(as_sets(minimal_primes(make_zmod(6)).minimal_primes),
            (std::set<Members>{{0, 2, 4}, {0, 3}}));
  EXPECT_EQ(as_sets(minimal_primes(make_zmod(4)).minimal_primes), (std::set<Members>{{0, 2}}));
  FiniteRing r = make_product(make_zmod(2), make_zmod(2));
  EXPECT_EQ(as_sets(minimal_primes(r).minimal_primes),
            (std::set<Members>{labels_to(r, {"(0,0)", "(1,0)"}), labels_to(r, {"(0,0)", "(0,1)"})}));
}

TEST(Radicals, Examples) {
  RadicalReport z4 = radicals(make_zmod(4));
  EXPECT_EQ(z4.prime_radical.members(), (Members{0, 2}));
  EXPECT_EQ(z4.upper_nilradical.members(), (Members{0, 2}));
  RadicalReport m = radicals(make_matrix_ring(make_zmod(2), 2));
  EXPECT_EQ(m.prime_radical.members(), (Members{0}));
  EXPECT_EQ(m.upper_nilradical.members(), (Members{0}));
  EXPECT_EQ(radicals(make_zmod(6)).prime_radical.members(), (Members{0}));
}

TEST(Properties, Z6AllTrue) {
  PropertyReport p = ring_properties(make_zmod(6));
  EXPECT_TRUE(p.reduced);
  EXPECT_TRUE(p.reversible);
  EXPECT_TRUE(p.symmetric);
  EXPECT_EQ(p.two_primal, true);
  EXPECT_EQ(p.ni, true);
}

TEST(Properties, Z4) {
  PropertyReport p = ring_properties(make_zmod(4));
  EXPECT_FALSE(p.reduced);
  EXPECT_EQ(p.reduced_witness, Element{2});
  EXPECT_EQ(p.two_primal, true);
  EXPECT_EQ(p.ni, true);
}

TEST(Properties, M2Z2Witnesses) {
  FiniteRing r = make_matrix_ring(make_zmod(2), 2);
  PropertyReport p = ring_properties(r);
  EXPECT_FALSE(p.reversible);
  ASSERT_TRUE(p.reversible_witness);
  const auto& w = *p.reversible_witness;
  EXPECT_EQ(r.mul(w[0], w[1]), 0u);
  EXPECT_NE(r.mul(w[1], w[0]), 0u);
  EXPECT_EQ(p.two_primal, false);
  EXPECT_EQ(p.ni, false);
  ASSERT_TRUE(p.two_primal_witness);
  EXPECT_TRUE(element_sets(r).nil.contains(*p.two_primal_witness));
  // The spec's witness pair (E11, E12): E12 E11 = 0 while E11 E12 = E12.
  const Element e11 = el(r, "[[1,0],[0,0]]"), e12 = el(r, "[[0,1],[0,0]]");
  EXPECT_EQ(r.mul(e12, e11), 0u);
  EXPECT_EQ(r.mul(e11, e12), e12);
}

TEST(ZNilShortcut, AppliesOnlyToNonReducedNi) {
  FiniteRing z4 = make_zmod(4);
  auto s = element_sets(z4);
  auto cut = z_nil_shortcut(z4, s.nil, true);
  ASSERT_TRUE(cut);
  EXPECT_EQ(*cut, s.z_nil);
  FiniteRing z6 = make_zmod(6);
  EXPECT_FALSE(z_nil_shortcut(z6, element_sets(z6).nil, true));
}

TEST(AdditiveClosure, GeneratesSubgroup) {
  FiniteRing z12 = make_zmod(12);
  const Element gens[] = {4, 6};
  EXPECT_EQ(additive_closure(z12, ElementSet::from_members(12, gens)).members(),
            (Members{0, 2, 4, 6, 8, 10}));
}

}  // namespace
}  // namespace nilgraph::ring
