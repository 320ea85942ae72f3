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

#include <map>
#include <random>
#include <thread>

#include "nilgraph/error.hpp"
#include "nilgraph/spbw.hpp"

namespace nilgraph::spbw {
namespace {

using ring::make_quotient_poly;
using ring::make_zmod;

FiniteRing f4() {
  const Element m[] = {1, 1, 1};
  return make_quotient_poly(make_zmod(2), m);
}

Extension z4x() { return Extension(commutative_spec("Z4x", make_zmod(4), 1)); }

Extension f4_frobenius() {
  FiniteRing r = f4();
  auto s = morph::frobenius_map(r);
  return Extension(ore_spec("F4frob", r, s, morph::zero_derivation(r, s)));
}

Extension z5_quantum_plane() {
  SPBWSpec s = commutative_spec("Z5qp", make_zmod(5), 2);
  s.d[0] = 2;
  return Extension(s);
}

Extension z4_biquadratic() {
  SPBWSpec s = commutative_spec("Z4bq", make_zmod(4), 2);
  s.lower[0] = {1, 2, 2};
  return Extension(s);
}

Element el(const FiniteRing& r, const std::string& l) { return r.find(l).value(); }

Monomial mono(std::size_t a) { return Monomial::var(0, static_cast<std::uint8_t>(a)); }
Monomial mono(std::size_t a, std::size_t b) { return Monomial::from_exponents({a, b}); }

SkewPoly random_poly(const Extension& ext, std::mt19937_64& rng, std::size_t max_degree) {
  const auto monos = monomials_up_to(ext.num_vars(), max_degree);
  std::uniform_int_distribution<Element> coef(0, static_cast<Element>(ext.base().order() - 1));
  std::vector<Term> t;
  for (Monomial m : monos)
    if (rng() % 2) t.push_back(Term{m, coef(rng)});
  return ext.from_terms(t);
}

// ------------------------------------------------------------ dense oracles

// Dense representation keyed by exponent vector (a, b).
using Dense = std::map<std::pair<std::size_t, std::size_t>, Element>;

Dense to_dense(const SkewPoly& f) {
  Dense d;
  for (const Term& t : f.terms()) d[{t.mono.exponent(0), t.mono.exponent(1)}] = t.coef;
  return d;
}

void drop_zeros(Dense& d) {
  for (auto it = d.begin(); it != d.end();)
    it = it->second == 0 ? d.erase(it) : std::next(it);
}

// F4[x; Frobenius]: (a x^i)(b x^j) = a sigma^i(b) x^{i+j}.
Dense frobenius_oracle(const FiniteRing& r, const morph::RingMap& s, const Dense& f, const Dense& g) {
  Dense out;
  for (const auto& [fi, a] : f)
    for (const auto& [gj, b] : g) {
      Element sb = b;
      for (std::size_t k = 0; k < fi.first; ++k) sb = s(sb);
      Element& slot = out[{fi.first + gj.first, 0}];
      slot = r.add(slot, r.mul(a, sb));
    }
  drop_zeros(out);
  return out;
}

// Quantum plane with x2 x1 = q x1 x2: x2^a x1^b = q^{ab} x1^b x2^a.
Dense quantum_oracle(std::size_t q, std::size_t p, const Dense& f, const Dense& g) {
  Dense out;
  for (const auto& [fe, a] : f)
    for (const auto& [ge, b] : g) {
      std::size_t c = a * b % p;
      for (std::size_t k = 0; k < fe.second * ge.first; ++k) c = c * q % p;
      Element& slot = out[{fe.first + ge.first, fe.second + ge.second}];
      slot = static_cast<Element>((slot + c) % p);
    }
  drop_zeros(out);
  return out;
}

// Z4[x1][x2; s, d] with s(x1) = x1 + 2, d(x1) = 1 + 2 x1, which realises
// x2 x1 = x1 x2 + 1 + 2 x1 + 2 x2. Elements are sum_b p_b(x1) x2^b.
using Poly = std::vector<int>;  // coefficients of x1^k mod 4

Poly trim(Poly p) {
  for (int& c : p) c = ((c % 4) + 4) % 4;
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}
Poly padd(const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return trim(c);
}
Poly pmul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return trim(c);
}
Poly ppow(const Poly& a, std::size_t k) {
  Poly r{1};
  for (std::size_t i = 0; i < k; ++i) r = pmul(r, a);
  return r;
}
Poly sigma_x1(const Poly& p) {
  Poly out;
  for (std::size_t k = 0; k < p.size(); ++k) out = padd(out, pmul(Poly{p[k]}, ppow(Poly{2, 1}, k)));
  return out;
}
Poly delta_x1(const Poly& p) {
  // d(x1^k) = s(x1) d(x1^{k-1}) + d(x1) x1^{k-1}.
  Poly out;
  Poly dk;  // d(x1^0) = 0
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k > 0) dk = padd(pmul(Poly{2, 1}, dk), pmul(Poly{1, 2}, ppow(Poly{0, 1}, k - 1)));
    out = padd(out, pmul(Poly{p[k]}, dk));
  }
  return out;
}
using Iterated = std::map<std::size_t, Poly>;  // power of x2 -> coefficient

Iterated imul(const Iterated& f, const Iterated& g) {
  Iterated out;
  for (const auto& [i, p] : f)
    for (const auto& [j, q] : g) {
      // x2^i q = sum_k c_k x2^k by pushing q through one x2 at a time.
      std::map<std::size_t, Poly> cur{{0, q}};
      for (std::size_t step = 0; step < i; ++step) {
        std::map<std::size_t, Poly> next;
        for (const auto& [k, c] : cur) {
          next[k + 1] = padd(next[k + 1], sigma_x1(c));
          next[k] = padd(next[k], delta_x1(c));
        }
        cur = std::move(next);
      }
      for (const auto& [k, c] : cur) out[k + j] = padd(out[k + j], pmul(p, c));
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.empty() ? out.erase(it) : std::next(it);
  return out;
}

Iterated to_iterated(const SkewPoly& f) {
  Iterated out;
  for (const Term& t : f.terms()) {
    Poly& p = out[t.mono.exponent(1)];
    if (p.size() <= t.mono.exponent(0)) p.resize(t.mono.exponent(0) + 1, 0);
    p[t.mono.exponent(0)] = static_cast<int>(t.coef);
  }
  for (auto& [k, p] : out) p = trim(p);
  return out;
}

// ------------------------------------------------------------ validation

TEST(ValidateSpec, CorpusShapesAreValid) {
  EXPECT_TRUE(validate_spec(commutative_spec("Z4x", make_zmod(4), 1)).valid);
  EXPECT_NO_THROW(f4_frobenius());
  SPBWSpec qp = commutative_spec("Z5qp", make_zmod(5), 2);
  qp.d[0] = 2;
  SpecValidation v = validate_spec(qp);
  EXPECT_TRUE(v.valid) << v.detail;
  EXPECT_GT(v.triples_checked, 100u);
}

TEST(ValidateSpec, RejectsZeroQ) {
  SPBWSpec s = commutative_spec("bad", make_zmod(5), 2);
  s.d[0] = 0;
  SpecValidation v = validate_spec(s);
  EXPECT_FALSE(v.valid);
  EXPECT_EQ(v.code, ErrorCode::ZeroQ);
}

TEST(ValidateSpec, RejectsNonInjectiveSigma) {
  FiniteRing r = make_zmod(2);
  const FiniteRing p = ring::make_product(r, r);
  // Projection onto the first factor followed by the diagonal embedding.
  std::vector<Element> t(4);
  for (Element e = 0; e < 4; ++e) {
    const auto c = p.coordinates(e);
    t[e] = p.find("(" + std::to_string(c[0]) + "," + std::to_string(c[0]) + ")").value();
  }
  auto s = morph::validate_endo(p, t);
  EXPECT_FALSE(s.is_injective());
  SpecValidation v = validate_spec(ore_spec("proj", p, s, morph::zero_derivation(p, s)));
  EXPECT_EQ(v.code, ErrorCode::InvalidSigma);
}

TEST(ValidateSpec, RejectsMismatchedDelta) {
  FiniteRing r = f4();
  auto fr = morph::frobenius_map(r);
  auto id = morph::identity_map(r);
  SpecValidation v = validate_spec(ore_spec("mismatch", r, fr, morph::zero_derivation(r, id)));
  EXPECT_EQ(v.code, ErrorCode::InvalidDelta);
}

TEST(ValidateSpec, AssociativityFailureIsCaught) {
  // x2 x1 = x1 x2 + x2 is incompatible with x1 t = sigma(t) x1 for a
  // non-trivial sigma on F4.
  FiniteRing r = f4();
  SPBWSpec s = commutative_spec("broken", r, 2);
  s.sigma[0] = morph::frobenius_map(r);
  s.delta[0] = morph::zero_derivation(r, s.sigma[0]);
  s.lower[0] = {0, 0, 1};
  SpecValidation v = validate_spec(s);
  EXPECT_FALSE(v.valid);
  EXPECT_EQ(v.code, ErrorCode::AssociativityFail);
  try {
    Extension e(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AssociativityFail);
  }
}

// ------------------------------------------------------------ arithmetic

TEST(MonomialTimesScalar, Examples) {
  Extension z4 = z4x();
  EXPECT_EQ(z4.format(z4.monomial_times_scalar(mono(3), 3)), "3*x^3");
  Extension fx = f4_frobenius();
  const FiniteRing& r = fx.base();
  const Element t = el(r, "t");
  EXPECT_EQ(fx.monomial_times_scalar(mono(2), t), fx.term(t, mono(2)));
  EXPECT_EQ(fx.monomial_times_scalar(mono(1), t), fx.term(el(r, "t+1"), mono(1)));
  EXPECT_EQ(fx.format(fx.monomial_times_scalar(mono(1), t)), "(t+1)*x");
}

TEST(Multiply, Examples) {
  Extension z4 = z4x();
  EXPECT_EQ(z4.format(z4.multiply(z4.parse("2*x + 1"), z4.parse("2*x"))), "2*x");
  Extension qp = z5_quantum_plane();
  const SkewPoly x1 = qp.variable(0), x2 = qp.variable(1);
  EXPECT_EQ(qp.multiply(x2, x1), qp.term(2, mono(1, 1)));
  EXPECT_EQ(qp.multiply(qp.power(x2, 2), x1), qp.term(4, mono(1, 2)));
}

TEST(Multiply, DegreeCapIsEnforced) {
  Extension z4 = z4x();
  const SkewPoly x6 = z4.term(1, mono(6));
  EXPECT_NO_THROW(z4.multiply(x6, x6));
  try {
    z4.multiply(x6, z4.term(1, mono(7)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeCapExceeded);
    EXPECT_NE(std::string(e.what()).find("13"), std::string::npos);
  }
  EXPECT_NO_THROW(z4.with_degree_cap(20).multiply(x6, z4.term(1, mono(7))));
}

TEST(Multiply, CommutativeMatchesDenseModFour) {
  Extension z4 = z4x();
  std::mt19937_64 rng(7);
  for (int it = 0; it < 300; ++it) {
    SkewPoly f = random_poly(z4, rng, 4), g = random_poly(z4, rng, 4);
    std::vector<int> a(5, 0), b(5, 0), c(9, 0);
    for (const Term& t : f.terms()) a[t.mono.degree()] = static_cast<int>(t.coef);
    for (const Term& t : g.terms()) b[t.mono.degree()] = static_cast<int>(t.coef);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % 4;
    SkewPoly h = z4.multiply(f, g);
    for (std::size_t k = 0; k < 9; ++k) EXPECT_EQ(h.coefficient(mono(k)), static_cast<Element>(c[k]));
  }
}

TEST(Multiply, FrobeniusMatchesDenseOracle) {
  Extension fx = f4_frobenius();
  const auto& s = fx.spec().sigma[0];
  std::mt19937_64 rng(11);
  for (int it = 0; it < 300; ++it) {
    SkewPoly f = random_poly(fx, rng, 4), g = random_poly(fx, rng, 4);
    EXPECT_EQ(to_dense(fx.multiply(f, g)), frobenius_oracle(fx.base(), s, to_dense(f), to_dense(g)));
  }
}

TEST(Multiply, QuantumPlaneMatchesDenseOracle) {
  Extension qp = z5_quantum_plane();
  std::mt19937_64 rng(13);
  for (int it = 0; it < 300; ++it) {
    SkewPoly f = random_poly(qp, rng, 3), g = random_poly(qp, rng, 3);
    EXPECT_EQ(to_dense(qp.multiply(f, g)), quantum_oracle(2, 5, to_dense(f), to_dense(g)));
  }
}

TEST(Multiply, BiquadraticMatchesIteratedOre) {
  Extension bq = z4_biquadratic();
  EXPECT_EQ(bq.format(bq.multiply(bq.variable(1), bq.variable(0))), "x1*x2 + 2*x1 + 2*x2 + 1");
  std::mt19937_64 rng(17);
  for (int it = 0; it < 200; ++it) {
    SkewPoly f = random_poly(bq, rng, 3), g = random_poly(bq, rng, 3);
    EXPECT_EQ(to_iterated(bq.multiply(f, g)), imul(to_iterated(f), to_iterated(g)))
        << bq.format(f) << " * " << bq.format(g);
  }
}

TEST(Multiply, ConstantsMatchBaseTable) {
  Extension bq = z4_biquadratic();
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b)
      EXPECT_EQ(bq.multiply(bq.constant(a), bq.constant(b)), bq.constant(bq.base().mul(a, b)));
}

TEST(Multiply, ConcurrentUseAgrees) {
  Extension bq = z4_biquadratic();
  std::mt19937_64 rng(19);
  std::vector<std::pair<SkewPoly, SkewPoly>> work;
  for (int i = 0; i < 64; ++i) work.emplace_back(random_poly(bq, rng, 3), random_poly(bq, rng, 3));
  std::vector<SkewPoly> a(work.size()), b(work.size());
  auto run = [&](std::vector<SkewPoly>& out) {
    Extension fresh = z4_biquadratic();
    for (std::size_t i = 0; i < work.size(); ++i) out[i] = fresh.multiply(work[i].first, work[i].second);
  };
  std::thread t1(run, std::ref(a)), t2(run, std::ref(b));
  t1.join();
  t2.join();
  for (std::size_t i = 0; i < work.size(); ++i) {
    EXPECT_EQ(a[i], b[i]);
    EXPECT_EQ(a[i], bq.multiply(work[i].first, work[i].second));
  }
}

TEST(LeadingData, Examples) {
  Extension z4 = z4x();
  LeadingData ld = z4.leading_data(z4.parse("2*x + 1"));
  EXPECT_EQ(ld.lm, mono(1));
  EXPECT_EQ(ld.lc, 2u);
  EXPECT_EQ(ld.deg, 1u);
  LeadingData zero = z4.leading_data(z4.zero());
  EXPECT_TRUE(zero.zero);
  EXPECT_EQ(zero.lc, 0u);
  EXPECT_TRUE(zero.lm.is_one());
  Extension qp = z5_quantum_plane();
  LeadingData q = qp.leading_data(qp.parse("3*x1*x2^2 + x1^2"));
  EXPECT_EQ(q.lm, mono(1, 2));
  EXPECT_EQ(q.lc, 3u);
}

TEST(LeadingData, DeglexOrder) {
  // Degree first, then x1 > x2.
  EXPECT_TRUE(deglex_less(mono(0, 1), mono(1, 0)));
  EXPECT_TRUE(deglex_less(mono(2, 0), mono(0, 3)));
  EXPECT_TRUE(deglex_less(mono(1, 1), mono(2, 0)));
  EXPECT_EQ(monomials_up_to(2, 2).size(), 6u);
  const auto m = monomials_up_to(2, 2);
  for (std::size_t i = 1; i < m.size(); ++i) EXPECT_TRUE(deglex_less(m[i - 1], m[i]));
}

TEST(Power, Examples) {
  Extension z4 = z4x();
  EXPECT_TRUE(z4.power(z4.parse("2*x + 2"), 2).is_zero());
  EXPECT_EQ(z4.power(z4.parse("3*x"), 0), z4.one());
  Extension z8 = Extension(commutative_spec("Z8x", make_zmod(8), 1));
  EXPECT_TRUE(z8.power(z8.constant(2), 3).is_zero());
  EXPECT_THROW(z4.power(z4.parse("x^5"), 3), Error);
}

TEST(Nilpotency, DirectExamples) {
  Extension z4 = z4x();
  NilpotencyResult a = z4.is_nilpotent_direct(z4.parse("2*x + 2"), 4);
  EXPECT_EQ(a.status, NilStatus::Nilpotent);
  EXPECT_EQ(a.index, 2u);
  EXPECT_EQ(z4.is_nilpotent_direct(z4.parse("2*x + 1"), 8).status, NilStatus::NotNilpotentWithin);
  Extension qp = z5_quantum_plane();
  EXPECT_EQ(qp.is_nilpotent_direct(qp.variable(0), 3).status, NilStatus::NotNilpotentWithin);
  // Powers of x^3 leave the default cap before the budget runs out.
  EXPECT_EQ(z4.is_nilpotent_direct(z4.parse("x^3"), 16).status, NilStatus::CapExceeded);
}

TEST(Nilpotency, CoefficientCriterionExamples) {
  Extension z4 = z4x();
  EXPECT_TRUE(z4.is_nilpotent_coeff(z4.parse("2*x + 2")));
  EXPECT_FALSE(z4.is_nilpotent_coeff(z4.parse("2*x + 1")));
  Extension z8 = Extension(commutative_spec("Z8xy", make_zmod(8), 2));
  EXPECT_TRUE(z8.is_nilpotent_coeff(z8.parse("2*x1 + 6*x2^2")));
}

TEST(Nilpotency, AdjacencyExamples) {
  Extension z4 = z4x();
  EXPECT_TRUE(z4.nil_adjacent(z4.constant(2), z4.parse("2*x")));
  EXPECT_TRUE(z4.nil_adjacent(z4.parse("2*x + 1"), z4.constant(2)));
  EXPECT_FALSE(z4.nil_adjacent(z4.one(), z4.variable(0)));
}

TEST(Nilpotency, CriterionRequiresHypotheses) {
  FiniteRing r = ring::make_product(make_zmod(2), make_zmod(2));
  auto sw = morph::swap_map(r);
  Extension ext(ore_spec("swap", r, sw, morph::zero_derivation(r, sw)));
  EXPECT_FALSE(ext.criterion_available());
  try {
    ext.is_nilpotent_coeff(ext.variable(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionUnverified);
  }
  EXPECT_THROW(ext.nil_adjacent(ext.one(), ext.variable(0)), Error);
}

// ------------------------------------------------------------ text format

TEST(Text, FormatAndParseRoundTrip) {
  Extension qp = z5_quantum_plane();
  SkewPoly f = qp.parse("2*x1^2*x2 + 3*x2 + 1");
  EXPECT_EQ(qp.format(f), "2*x1^2*x2 + 3*x2 + 1");
  EXPECT_EQ(qp.parse(qp.format(f)), f);
  EXPECT_EQ(qp.format(qp.zero()), "0");
  EXPECT_EQ(qp.parse("x2*x1"), qp.term(2, mono(1, 1)));
  EXPECT_EQ(qp.parse("-x1"), qp.term(4, mono(1, 0)));
  EXPECT_EQ(qp.parse("x1 - x1"), qp.zero());

  Extension fx = f4_frobenius();
  SkewPoly g = fx.parse("(t+1)*x^2 + t");
  EXPECT_EQ(fx.format(g), "(t+1)*x^2 + (t)");
  EXPECT_EQ(fx.parse(fx.format(g)), g);
  // x t = sigma(t) x.
  EXPECT_EQ(fx.parse("x*t"), fx.parse("(t+1)*x"));

  Extension pr(commutative_spec("Z2xZ2x", ring::make_product(make_zmod(2), make_zmod(2)), 1));
  SkewPoly h = pr.parse("(1,0)*x + (0,1)");
  EXPECT_EQ(pr.format(h), "(1,0)*x + (0,1)");
}

TEST(Text, ParseErrorsReportPosition) {
  Extension qp = z5_quantum_plane();
  auto msg = [&](const char* text) {
    try {
      qp.parse(text);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(msg("2*x3").find("position 2"), std::string::npos);
  EXPECT_NE(msg("2 +").find("position 3"), std::string::npos);
  EXPECT_NE(msg("7").find("element index"), std::string::npos);
  EXPECT_NE(msg("x1 x2").find("expected '+'"), std::string::npos);
  EXPECT_NE(msg("(1").find("')'"), std::string::npos);
}

}  // namespace
}  // namespace nilgraph::spbw
