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

#ifndef NILGRAPH_SPBW_HPP
#define NILGRAPH_SPBW_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilgraph/error.hpp"
#include "nilgraph/finite_ring.hpp"
#include "nilgraph/morphisms.hpp"
#include "nilgraph/ring_analysis.hpp"

namespace nilgraph::spbw {

using ring::Element;
using ring::FiniteRing;

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector x_1^{a_1} ... x_n^{a_n}, one byte per variable with x_1 in
/// the most significant byte so that packed comparison is lexicographic.
class Monomial {
 public:
  constexpr Monomial() = default;
  static Monomial var(std::size_t i, std::uint8_t e = 1);
  static Monomial from_exponents(const std::vector<std::size_t>& e);
  static constexpr Monomial from_bits(std::uint64_t bits) noexcept {
    Monomial m;
    m.bits_ = bits;
    return m;
  }

  std::size_t exponent(std::size_t i) const noexcept {
    return (bits_ >> (8 * (kMaxVars - 1 - i))) & 0xFFU;
  }
  std::size_t degree() const noexcept;
  bool is_one() const noexcept { return bits_ == 0; }
  /// Largest variable index with a nonzero exponent; undefined for 1.
  std::size_t last_var() const noexcept;
  std::uint64_t bits() const noexcept { return bits_; }

  Monomial times_var(std::size_t i) const;
  Monomial without_var(std::size_t i) const noexcept;

  friend bool operator==(Monomial a, Monomial b) { return a.bits_ == b.bits_; }
  friend bool operator!=(Monomial a, Monomial b) { return a.bits_ != b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Degree-lexicographic order with x_1 > x_2 > ... > x_n.
bool deglex_less(Monomial a, Monomial b) noexcept;

struct Term {
  Monomial mono;
  Element coef = 0;
  friend bool operator==(const Term& a, const Term& b) {
    return a.mono == b.mono && a.coef == b.coef;
  }
};

/// An element of the extension in normal form: left coefficients on standard
/// monomials, leading term first, no zero coefficients.
class SkewPoly {
 public:
  SkewPoly() = default;

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Total degree; 0 for the zero polynomial.
  std::size_t degree() const noexcept { return terms_.empty() ? 0 : terms_.front().mono.degree(); }
  /// Coefficient of a monomial (0 when absent).
  Element coefficient(Monomial m) const noexcept;

  friend bool operator==(const SkewPoly& a, const SkewPoly& b) { return a.terms_ == b.terms_; }
  /// Canonical order: by degree, then term by term from the leading term.
  friend bool operator<(const SkewPoly& a, const SkewPoly& b);

 private:
  friend class Extension;
  explicit SkewPoly(std::vector<Term> t) : terms_(std::move(t)) {}
  std::vector<Term> terms_;
};

/// Defining data of an extension with relations, for i < j,
///   x_i r = sigma_i(r) x_i + delta_i(r),
///   x_j x_i = d_ij x_i x_j + r_0 + r_1 x_1 + ... + r_n x_n.
struct SPBWSpec {
  std::string name;
  FiniteRing base;
  std::size_t n = 1;
  std::vector<morph::RingMap> sigma;
  std::vector<morph::DerivationMap> delta;
  /// d_ij by pair_index(i, j); defaults to 1.
  std::vector<Element> d;
  /// (r_0, r_1, ..., r_n) by pair_index(i, j); defaults to zeros.
  std::vector<std::vector<Element>> lower;
  std::size_t degree_cap = 12;

  static std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) noexcept;
  /// All sigma_i bijective and all d_ij units.
  bool bijective() const;
};

/// Commuting variables with identity sigmas and zero derivations.
SPBWSpec commutative_spec(std::string name, const FiniteRing& base, std::size_t n);
/// One variable with the given sigma and delta.
SPBWSpec ore_spec(std::string name, const FiniteRing& base, morph::RingMap sigma,
                  morph::DerivationMap delta);

struct SpecValidation {
  bool valid = true;
  std::optional<ErrorCode> code;
  std::string detail;
  std::size_t triples_checked = 0;
};

/// Structural checks plus an associativity spot-check over a pool of scalars,
/// the variables and all degree-two monomials. Never throws.
SpecValidation validate_spec(const SPBWSpec& spec);

struct LeadingData {
  Monomial lm;
  Element lc = 0;
  std::size_t deg = 0;
  /// Equal to lm; kept separately to mirror the usual lm/lc/lt/exp notation.
  Monomial exp;
  bool zero = true;
};

enum class NilStatus { Nilpotent, NotNilpotentWithin, CapExceeded };

struct NilpotencyResult {
  NilStatus status = NilStatus::NotNilpotentWithin;
  std::size_t index = 0;   ///< smallest k with f^k = 0 when Nilpotent
  std::size_t budget = 0;  ///< K used
};

/// A validated extension with its arithmetic. Copies share normal-form caches,
/// which are internally synchronised, so one instance may be used from many
/// threads.
class Extension {
 public:
  /// Validates the spec; throws the validation error on failure.
  explicit Extension(SPBWSpec spec);

  const SPBWSpec& spec() const noexcept;
  const FiniteRing& base() const noexcept;
  std::size_t num_vars() const noexcept;
  const ring::ElementSets& base_sets() const noexcept;
  const ring::PropertyReport& base_properties() const noexcept;
  const morph::CompatReport& compat() const noexcept;
  /// The coefficient nilpotency criterion is available: base weakly
  /// compatible and NI.
  bool criterion_available() const noexcept;

  /// Same spec and caches with a different degree cap.
  Extension with_degree_cap(std::size_t cap) const;

  SkewPoly zero() const { return {}; }
  SkewPoly one() const { return constant(FiniteRing::one()); }
  SkewPoly constant(Element a) const;
  SkewPoly variable(std::size_t i) const;
  SkewPoly term(Element a, Monomial m) const;
  /// Normalises arbitrary terms (duplicates summed, zeros dropped).
  SkewPoly from_terms(std::vector<Term> terms) const;

  SkewPoly add(const SkewPoly& f, const SkewPoly& g) const;
  SkewPoly neg(const SkewPoly& f) const;
  SkewPoly sub(const SkewPoly& f, const SkewPoly& g) const { return add(f, neg(g)); }
  /// Left multiplication by a scalar.
  SkewPoly scale(Element a, const SkewPoly& f) const;
  /// Throws DegreeCapExceeded when deg f + deg g exceeds the cap.
  SkewPoly multiply(const SkewPoly& f, const SkewPoly& g) const;
  SkewPoly power(const SkewPoly& f, std::size_t k) const;

  /// Normal form of x^alpha r.
  SkewPoly monomial_times_scalar(Monomial alpha, Element r) const;
  /// Normal form of x^alpha x^beta.
  SkewPoly monomial_times_monomial(Monomial alpha, Monomial beta) const;

  LeadingData leading_data(const SkewPoly& f) const;

  NilpotencyResult is_nilpotent_direct(const SkewPoly& f, std::size_t budget = 16) const;
  /// Every coefficient nilpotent. Throws PreconditionUnverified unless
  /// criterion_available().
  bool is_nilpotent_coeff(const SkewPoly& f) const;
  /// f g nilpotent, decided through the coefficient criterion.
  bool nil_adjacent(const SkewPoly& f, const SkewPoly& g) const;

  /// Text form such as "2*x1^2*x2 + (t+1)*x2 + 1".
  std::string format(const SkewPoly& f) const;
  std::string format_coefficient(Element a) const;
  std::string format_monomial(Monomial m) const;
  /// Inverse of format; throws ParseError with position and expected token.
  SkewPoly parse(std::string_view text) const;

 private:
  struct State;
  explicit Extension(std::shared_ptr<const State> state, std::size_t cap);
  void require_criterion() const;

  std::shared_ptr<const State> state_;
  std::size_t degree_cap_;
};

/// All standard monomials in n variables of degree <= max_degree in
/// increasing deglex order.
std::vector<Monomial> monomials_up_to(std::size_t n, std::size_t max_degree);

}  // namespace nilgraph::spbw

#endif  // NILGRAPH_SPBW_HPP
