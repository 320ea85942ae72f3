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

#include <random>
#include <string>
#include <vector>

#include "generators.hpp"
#include "nilgraph/harness.hpp"
#include "nilgraph/ring_analysis.hpp"

namespace nilgraph {
namespace {

using ring::Element;
using spbw::Extension;
using spbw::Monomial;
using spbw::SkewPoly;
using testing::random_element;
using testing::random_poly;
using testing::random_poly_from;

constexpr int kTriples = 1000;

std::vector<Extension> corpus_extensions() {
  std::vector<Extension> out;
  for (const auto& e : harness::builtin_corpus())
    for (const auto& s : e.specs) out.emplace_back(s.spec);
  return out;
}

class SpecProperty : public ::testing::TestWithParam<std::size_t> {
 protected:
  static const std::vector<Extension>& all() {
    static const std::vector<Extension> exts = corpus_extensions();
    return exts;
  }
  const Extension& ext() const { return all()[GetParam()]; }
  std::mt19937_64 rng() const { return std::mt19937_64(0x5eed + GetParam()); }
};

TEST_P(SpecProperty, MultiplicationIsAssociative) {
  auto g = rng();
  const Extension& x = ext();
  for (int i = 0; i < kTriples; ++i) {
    const SkewPoly a = random_poly(x, g, 3), b = random_poly(x, g, 3), c = random_poly(x, g, 3);
    ASSERT_EQ(x.multiply(x.multiply(a, b), c), x.multiply(a, x.multiply(b, c)))
        << x.spec().name << ": a = " << x.format(a) << ", b = " << x.format(b) << ", c = " << x.format(c);
  }
}

TEST_P(SpecProperty, MultiplicationDistributesOverAddition) {
  auto g = rng();
  const Extension& x = ext();
  for (int i = 0; i < kTriples; ++i) {
    const SkewPoly a = random_poly(x, g, 3), b = random_poly(x, g, 3), c = random_poly(x, g, 3);
    ASSERT_EQ(x.multiply(a, x.add(b, c)), x.add(x.multiply(a, b), x.multiply(a, c)))
        << x.spec().name << ": a = " << x.format(a) << ", b = " << x.format(b) << ", c = " << x.format(c);
    ASSERT_EQ(x.multiply(x.add(a, b), c), x.add(x.multiply(a, c), x.multiply(b, c)))
        << x.spec().name << ": a = " << x.format(a) << ", b = " << x.format(b) << ", c = " << x.format(c);
  }
}

TEST_P(SpecProperty, IdentityZeroAndDegreeBound) {
  auto g = rng();
  const Extension& x = ext();
  for (int i = 0; i < 200; ++i) {
    const SkewPoly a = random_poly(x, g, 3), b = random_poly(x, g, 3);
    EXPECT_EQ(x.multiply(x.one(), a), a);
    EXPECT_EQ(x.multiply(a, x.one()), a);
    EXPECT_TRUE(x.multiply(a, x.zero()).is_zero());
    EXPECT_TRUE(x.add(a, x.neg(a)).is_zero());
    const SkewPoly ab = x.multiply(a, b);
    if (!ab.is_zero()) EXPECT_LE(ab.degree(), a.degree() + b.degree());
  }
}

TEST_P(SpecProperty, TextRoundTrip) {
  auto g = rng();
  const Extension& x = ext();
  for (int i = 0; i < 200; ++i) {
    const SkewPoly a = random_poly(x, g, 3);
    EXPECT_EQ(x.parse(x.format(a)), a) << x.format(a);
  }
}

std::string spec_name(const ::testing::TestParamInfo<std::size_t>& info) {
  static const std::vector<Extension> exts = corpus_extensions();
  return exts[info.param].spec().name;
}

INSTANTIATE_TEST_SUITE_P(Corpus, SpecProperty, ::testing::Range<std::size_t>(0, corpus_extensions().size()),
                         spec_name);

const Extension& find_spec(const std::string& name) {
  static const std::vector<Extension> exts = corpus_extensions();
  for (const auto& e : exts)
    if (e.spec().name == name) return e;
  throw std::runtime_error("no spec " + name);
}

TEST(CoefficientCriterion, MatchesPoweringOnEveryEligibleSpec) {
  std::size_t eligible = 0;
  for (const Extension& x : corpus_extensions()) {
    if (!x.criterion_available()) continue;
    ++eligible;
    const auto nil = x.base_sets().nil.members();
    const Extension big = x.with_degree_cap(64);
    std::mt19937_64 g(std::hash<std::string>{}(x.spec().name));
    for (int i = 0; i < 300; ++i) {
      const SkewPoly f = i % 2 ? random_poly(x, g, 2) : random_poly_from(x, g, 2, nil);
      const bool direct = big.is_nilpotent_direct(f, 16).status == spbw::NilStatus::Nilpotent;
      ASSERT_EQ(x.is_nilpotent_coeff(f), direct) << x.spec().name << ": " << x.format(f);
    }
  }
  EXPECT_GE(eligible, 10u);
}

TEST(LeadingCoefficientLaw, FrobeniusOverF4Exhaustive) {
  const Extension& x = find_spec("F4frob");
  const auto& r = x.base();
  for (std::size_t k = 0; k <= 4; ++k)
    for (Element a = 0; a < r.order(); ++a) {
      // sigma^k(a) = a^(2^k) in characteristic 2.
      const Element expected = r.pow(a, std::size_t{1} << k);
      const spbw::LeadingData ld = x.leading_data(x.monomial_times_scalar(Monomial::var(0, k), a));
      if (expected == 0) {
        EXPECT_TRUE(ld.zero);
        continue;
      }
      EXPECT_EQ(ld.lc, expected) << "k = " << k << ", a = " << r.element_label(a);
      EXPECT_EQ(ld.lm, Monomial::var(0, k));
    }
}

TEST(LeadingCoefficientLaw, SwapOverZ2xZ2Exhaustive) {
  const Extension& x = find_spec("Z2xZ2swap");
  const auto& r = x.base();
  for (std::size_t k = 0; k <= 4; ++k)
    for (Element a = 0; a < r.order(); ++a) {
      const auto c = r.coordinates(a);
      const std::string expected =
          k % 2 ? "(" + std::to_string(c[1]) + "," + std::to_string(c[0]) + ")" : r.element_label(a);
      const spbw::LeadingData ld = x.leading_data(x.monomial_times_scalar(Monomial::var(0, k), a));
      if (a == 0) {
        EXPECT_TRUE(ld.zero);
        continue;
      }
      EXPECT_EQ(r.element_label(ld.lc), expected) << "k = " << k;
    }
}

TEST(RingProperties, NilpotentsFormIdealInCommutativeCorpusRings) {
  for (const auto& e : harness::builtin_corpus()) {
    const auto& r = e.ring;
    if (!r.is_commutative()) continue;
    const auto nil = ring::element_sets(r).nil;
    for (Element a : nil.members())
      for (Element b = 0; b < r.order(); ++b) {
        EXPECT_TRUE(nil.contains(r.mul(a, b))) << e.id;
        if (nil.contains(b)) EXPECT_TRUE(nil.contains(r.add(a, b))) << e.id;
      }
  }
}

TEST(RingProperties, UnitsAndZeroDivisorsPartitionFiniteRings) {
  for (const auto& e : harness::builtin_corpus()) {
    const auto s = ring::element_sets(e.ring);
    for (Element a = 1; a < e.ring.order(); ++a)
      EXPECT_NE(s.units.contains(a), s.zd_star.contains(a)) << e.id << " " << e.ring.element_label(a);
  }
}

TEST(RingProperties, RandomAxiomsHoldForCorpusRings) {
  std::mt19937_64 g(99);
  for (const auto& e : harness::builtin_corpus()) {
    const auto& r = e.ring;
    for (int i = 0; i < 500; ++i) {
      const Element a = random_element(r, g), b = random_element(r, g), c = random_element(r, g);
      ASSERT_EQ(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c))) << e.id;
      ASSERT_EQ(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c))) << e.id;
      ASSERT_EQ(r.mul(r.add(a, b), c), r.add(r.mul(a, c), r.mul(b, c))) << e.id;
    }
  }
}

}  // namespace
}  // namespace nilgraph
