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

#include "nilgraph/spbw.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "spbw_state.hpp"

namespace nilgraph::spbw {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(std::size_t i, std::uint8_t e) {
  if (i >= kMaxVars) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  Monomial m;
  m.bits_ = std::uint64_t{e} << (8 * (kMaxVars - 1 - i));
  return m;
}

Monomial Monomial::from_exponents(const std::vector<std::size_t>& e) {
  if (e.size() > kMaxVars) throw Error(ErrorCode::InvalidArgument, "too many variables");
  Monomial m;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > 0xFF) throw Error(ErrorCode::InvalidArgument, "exponent exceeds 255");
    m.bits_ |= std::uint64_t{e[i]} << (8 * (kMaxVars - 1 - i));
  }
  return m;
}

std::size_t Monomial::degree() const noexcept {
  std::size_t d = 0;
  for (std::uint64_t b = bits_; b; b >>= 8) d += b & 0xFFU;
  return d;
}

std::size_t Monomial::last_var() const noexcept {
  for (std::size_t i = kMaxVars; i-- > 0;)
    if (exponent(i)) return i;
  return 0;
}

Monomial Monomial::times_var(std::size_t i) const {
  if (exponent(i) == 0xFF) throw Error(ErrorCode::DegreeCapExceeded, "exponent overflow");
  Monomial m = *this;
  m.bits_ += std::uint64_t{1} << (8 * (kMaxVars - 1 - i));
  return m;
}

Monomial Monomial::without_var(std::size_t i) const noexcept {
  Monomial m = *this;
  m.bits_ -= std::uint64_t{1} << (8 * (kMaxVars - 1 - i));
  return m;
}

bool deglex_less(Monomial a, Monomial b) noexcept {
  const std::size_t da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.bits() < b.bits();
}

// ---------------------------------------------------------------- SkewPoly

Element SkewPoly::coefficient(Monomial m) const noexcept {
  for (const Term& t : terms_)
    if (t.mono == m) return t.coef;
  return 0;
}

bool operator<(const SkewPoly& a, const SkewPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Term& x = a.terms_[i];
    const Term& y = b.terms_[i];
    if (x.mono != y.mono) return deglex_less(x.mono, y.mono);
    if (x.coef != y.coef) return x.coef < y.coef;
  }
  return a.terms_.size() < b.terms_.size();
}

// ---------------------------------------------------------------- SPBWSpec

std::size_t SPBWSpec::pair_index(std::size_t i, std::size_t j, std::size_t n) noexcept {
  // Row-major position of (i, j), i < j, in the strict upper triangle.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

bool SPBWSpec::bijective() const {
  for (const auto& s : sigma)
    if (!s.is_bijective()) return false;
  for (Element q : d) {
    bool unit = false;
    for (Element y = 0; y < base.order() && !unit; ++y)
      unit = base.mul(q, y) == 1 && base.mul(y, q) == 1;
    if (!unit) return false;
  }
  return true;
}

SPBWSpec commutative_spec(std::string name, const FiniteRing& base, std::size_t n) {
  std::vector<morph::RingMap> sigma;
  std::vector<morph::DerivationMap> delta;
  for (std::size_t i = 0; i < n; ++i) {
    sigma.push_back(morph::identity_map(base));
    delta.push_back(morph::zero_derivation(base, sigma.back()));
  }
  const std::size_t pairs = n * (n - 1) / 2;
  return SPBWSpec{std::move(name),
                  base,
                  n,
                  std::move(sigma),
                  std::move(delta),
                  std::vector<Element>(pairs, FiniteRing::one()),
                  std::vector<std::vector<Element>>(pairs, std::vector<Element>(n + 1, 0)),
                  12};
}

SPBWSpec ore_spec(std::string name, const FiniteRing& base, morph::RingMap sigma,
                  morph::DerivationMap delta) {
  return SPBWSpec{std::move(name), base, 1, {std::move(sigma)}, {std::move(delta)}, {}, {}, 12};
}

// ---------------------------------------------------------------- engine core

namespace detail {

namespace {

struct Accumulator {
  const FiniteRing& r;
  std::unordered_map<std::uint64_t, Element> acc;

  void add(Monomial m, Element c) {
    if (c == 0) return;
    auto [it, fresh] = acc.try_emplace(m.bits(), c);
    if (!fresh) it->second = r.add(it->second, c);
  }

  Terms finish() {
    Terms out;
    out.reserve(acc.size());
    for (const auto& [bits, c] : acc)
      if (c != 0) out.push_back(Term{Monomial::from_bits(bits), c});
    std::sort(out.begin(), out.end(),
              [](const Term& a, const Term& b) { return deglex_less(b.mono, a.mono); });
    return out;
  }
};

}  // namespace

Terms normalize(const FiniteRing& r, const std::vector<Term>& terms) {
  Accumulator acc{r, {}};
  for (const Term& t : terms) acc.add(t.mono, t.coef);
  return acc.finish();
}

Core::Core(SPBWSpec s) : spec(std::move(s)) {}

template <class Map, class Key, class Fn>
TermsPtr Core::cached(Map& map, const Key& key, Fn&& compute) const {
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = map.find(key);
    if (it != map.end()) return it->second;
  }
  // Computed outside the lock: the recursion re-enters the caches.
  TermsPtr value = std::make_shared<const Terms>(compute());
  std::lock_guard<std::mutex> lock(mu);
  return map.try_emplace(key, std::move(value)).first->second;
}

TermsPtr Core::times_scalar(Monomial alpha, Element r) const {
  static const TermsPtr kEmpty = std::make_shared<const Terms>();
  if (r == 0) return kEmpty;
  if (alpha.is_one()) return std::make_shared<const Terms>(Terms{Term{alpha, r}});
  return cached(scalar_cache, PairKey{alpha.bits(), r}, [&] {
    // x^alpha r = x^alpha' (x_k r) = (x^alpha' sigma_k(r)) x_k + x^alpha' delta_k(r)
    // with x_k the last variable of alpha. Recursion is on |alpha|.
    const FiniteRing& R = spec.base;
    const std::size_t k = alpha.last_var();
    const Monomial rest = alpha.without_var(k);
    Accumulator acc{R, {}};
    for (const TermsPtr t_src = times_scalar(rest, spec.sigma[k](r)); const Term& t : *t_src)
      for (const TermsPtr u_src = times_var(t.mono, k); const Term& u : *u_src) acc.add(u.mono, R.mul(t.coef, u.coef));
    for (const TermsPtr t_src = times_scalar(rest, spec.delta[k](r)); const Term& t : *t_src) acc.add(t.mono, t.coef);
    return acc.finish();
  });
}

TermsPtr Core::times_var(Monomial gamma, std::size_t j) const {
  if (gamma.is_one() || gamma.last_var() <= j)
    return std::make_shared<const Terms>(Terms{Term{gamma.times_var(j), FiniteRing::one()}});
  return cached(var_cache, PairKey{gamma.bits(), j}, [&] {
    // gamma = gamma' x_m with m > j, and
    //   x_m x_j = d x_j x_m + r_0 + sum_k r_k x_k.
    // Every recursive call is on gamma' or on a monomial of degree below
    // |gamma|, except x^{gamma'+e_j} x_m, which is already standard.
    const FiniteRing& R = spec.base;
    const std::size_t m = gamma.last_var();
    const Monomial rest = gamma.without_var(m);
    const std::size_t p = SPBWSpec::pair_index(j, m, spec.n);
    const Element q = spec.d[p];
    const auto& low = spec.lower[p];
    Accumulator acc{R, {}};
    for (const TermsPtr t_src = times_scalar(rest, q); const Term& t : *t_src)
      for (const TermsPtr u_src = times_var(t.mono, j); const Term& u : *u_src) {
        const Element tu = R.mul(t.coef, u.coef);
        if (tu == 0) continue;
        for (const TermsPtr v_src = times_var(u.mono, m); const Term& v : *v_src) acc.add(v.mono, R.mul(tu, v.coef));
      }
    for (const TermsPtr t_src = times_scalar(rest, low[0]); const Term& t : *t_src) acc.add(t.mono, t.coef);
    for (std::size_t k = 0; k < spec.n; ++k) {
      if (low[k + 1] == 0) continue;
      for (const TermsPtr t_src = times_scalar(rest, low[k + 1]); const Term& t : *t_src)
        for (const TermsPtr u_src = times_var(t.mono, k); const Term& u : *u_src) acc.add(u.mono, R.mul(t.coef, u.coef));
    }
    return acc.finish();
  });
}

TermsPtr Core::times_mono(Monomial alpha, Monomial beta) const {
  if (beta.is_one()) return std::make_shared<const Terms>(Terms{Term{alpha, FiniteRing::one()}});
  return cached(mono_cache, MonoKey{alpha.bits(), beta.bits()}, [&] {
    const FiniteRing& R = spec.base;
    Terms cur{Term{alpha, FiniteRing::one()}};
    for (std::size_t j = 0; j < spec.n; ++j)
      for (std::size_t e = 0; e < beta.exponent(j); ++e) {
        Accumulator acc{R, {}};
        for (const Term& t : cur)
          for (const TermsPtr u_src = times_var(t.mono, j); const Term& u : *u_src) acc.add(u.mono, R.mul(t.coef, u.coef));
        cur = acc.finish();
      }
    return cur;
  });
}

Terms Core::multiply(const Terms& f, const Terms& g) const {
  const FiniteRing& R = spec.base;
  Accumulator acc{R, {}};
  // a x^alpha * b x^beta = a (x^alpha b) x^beta
  //                      = sum_mu a c_mu x^mu x^beta.
  for (const Term& ft : f)
    for (const Term& gt : g)
      for (const TermsPtr c_src = times_scalar(ft.mono, gt.coef); const Term& c : *c_src) {
        const Element ac = R.mul(ft.coef, c.coef);
        if (ac == 0) continue;
        for (const TermsPtr e_src = times_mono(c.mono, gt.mono); const Term& e : *e_src) acc.add(e.mono, R.mul(ac, e.coef));
      }
  return acc.finish();
}

}  // namespace detail

// ---------------------------------------------------------------- validation

namespace {

std::string describe(const detail::Core& core, const Terms& f) {
  // Plain rendering used only in diagnostics before an Extension exists.
  if (f.empty()) return "0";
  std::string s;
  for (const Term& t : f) {
    if (!s.empty()) s += " + ";
    s += core.spec.base.element_label(t.coef);
    for (std::size_t i = 0; i < core.spec.n; ++i)
      if (t.mono.exponent(i)) s += "*x" + std::to_string(i + 1) + "^" + std::to_string(t.mono.exponent(i));
  }
  return s;
}

SpecValidation fail(ErrorCode code, std::string detail) {
  SpecValidation v;
  v.valid = false;
  v.code = code;
  v.detail = std::move(detail);
  return v;
}

}  // namespace

SpecValidation validate_spec(const SPBWSpec& spec) {
  const FiniteRing& R = spec.base;
  const std::size_t n = spec.n;
  if (n < 1 || n > kMaxVars)
    return fail(ErrorCode::InvalidArgument, "number of variables must be in [1, 8]");
  if (spec.degree_cap < 1 || spec.degree_cap > 255)
    return fail(ErrorCode::InvalidArgument, "degree cap must be in [1, 255]");
  if (spec.sigma.size() != n)
    return fail(ErrorCode::InvalidSigma, "expected " + std::to_string(n) + " endomorphisms");
  if (spec.delta.size() != n)
    return fail(ErrorCode::InvalidDelta, "expected " + std::to_string(n) + " derivations");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = spec.sigma[i];
    if (!s.ring().same_tables(R) || !s.is_endo())
      return fail(ErrorCode::InvalidSigma, "sigma_" + std::to_string(i + 1) + " is not an endomorphism of the base");
    if (!s.is_injective())
      return fail(ErrorCode::InvalidSigma, "sigma_" + std::to_string(i + 1) + " is not injective");
    const auto& dl = spec.delta[i];
    if (!dl.ring().same_tables(R) || !(dl.sigma() == s))
      return fail(ErrorCode::InvalidDelta,
                  "delta_" + std::to_string(i + 1) + " is not a sigma_" + std::to_string(i + 1) + "-derivation");
  }
  const std::size_t pairs = n * (n - 1) / 2;
  if (spec.d.size() != pairs || spec.lower.size() != pairs)
    return fail(ErrorCode::InvalidArgument, "expected " + std::to_string(pairs) + " relations");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t p = SPBWSpec::pair_index(i, j, n);
      const std::string ij = std::to_string(i + 1) + "," + std::to_string(j + 1);
      if (spec.d[p] >= R.order()) return fail(ErrorCode::InvalidArgument, "d_" + ij + " out of range");
      if (spec.d[p] == 0) return fail(ErrorCode::ZeroQ, "d_" + ij + " is zero");
      if (spec.lower[p].size() != n + 1)
        return fail(ErrorCode::InvalidArgument, "relation " + ij + " needs " + std::to_string(n + 1) + " lower coefficients");
      for (Element c : spec.lower[p])
        if (c >= R.order()) return fail(ErrorCode::InvalidArgument, "relation " + ij + " coefficient out of range");
    }

  // Associativity spot-check (u v) w = u (v w) over a bounded pool.
  detail::Core core(spec);
  std::vector<Terms> pool;
  for (Element a = 1; a < R.order() && a <= 6; ++a) pool.push_back(Terms{Term{Monomial{}, a}});
  for (std::size_t i = 0; i < n; ++i) pool.push_back(Terms{Term{Monomial::var(i), 1}});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      pool.push_back(Terms{Term{Monomial::var(i).times_var(j), 1}});
  SpecValidation ok;
  for (const Terms& u : pool)
    for (const Terms& v : pool)
      for (const Terms& w : pool) {
        const std::size_t deg = u.front().mono.degree() + v.front().mono.degree() + w.front().mono.degree();
        if (deg > spec.degree_cap) continue;
        const Terms left = core.multiply(core.multiply(u, v), w);
        const Terms right = core.multiply(u, core.multiply(v, w));
        ++ok.triples_checked;
        if (left != right)
          return fail(ErrorCode::AssociativityFail, "(uv)w != u(vw) for u = " + describe(core, u) +
                                                        ", v = " + describe(core, v) +
                                                        ", w = " + describe(core, w));
      }
  return ok;
}

// ---------------------------------------------------------------- Extension

struct Extension::State {
  explicit State(SPBWSpec spec) : core(std::move(spec)) {}
  detail::Core core;
  ring::ElementSets sets;
  ring::PropertyReport props;
  morph::CompatReport compat;
  bool criterion = false;
};

Extension::Extension(SPBWSpec spec) : degree_cap_(spec.degree_cap) {
  const SpecValidation v = validate_spec(spec);
  if (!v.valid) throw Error(*v.code, (spec.name.empty() ? "" : spec.name + ": ") + v.detail);
  auto st = std::make_shared<State>(std::move(spec));
  const SPBWSpec& s = st->core.spec;
  st->sets = ring::element_sets(s.base);
  st->props = ring::ring_properties(s.base);
  st->compat = morph::compatibility_report(s.base, st->sets, s.sigma, s.delta);
  st->criterion = st->compat.weak_compatible() && st->props.ni.value_or(false);
  state_ = std::move(st);
}

Extension::Extension(std::shared_ptr<const State> state, std::size_t cap)
    : state_(std::move(state)), degree_cap_(cap) {}

const SPBWSpec& Extension::spec() const noexcept { return state_->core.spec; }
const FiniteRing& Extension::base() const noexcept { return state_->core.spec.base; }
std::size_t Extension::num_vars() const noexcept { return state_->core.spec.n; }
const ring::ElementSets& Extension::base_sets() const noexcept { return state_->sets; }
const ring::PropertyReport& Extension::base_properties() const noexcept { return state_->props; }
const morph::CompatReport& Extension::compat() const noexcept { return state_->compat; }
bool Extension::criterion_available() const noexcept { return state_->criterion; }

Extension Extension::with_degree_cap(std::size_t cap) const {
  if (cap < 1 || cap > 255) throw Error(ErrorCode::InvalidArgument, "degree cap must be in [1, 255]");
  return Extension(state_, cap);
}

SkewPoly Extension::constant(Element a) const { return term(a, Monomial{}); }

SkewPoly Extension::variable(std::size_t i) const {
  if (i >= num_vars()) throw Error(ErrorCode::InvalidArgument, "no variable x" + std::to_string(i + 1));
  return term(FiniteRing::one(), Monomial::var(i));
}

SkewPoly Extension::term(Element a, Monomial m) const {
  if (a >= base().order()) throw Error(ErrorCode::InvalidArgument, "coefficient out of range");
  for (std::size_t i = num_vars(); i < kMaxVars; ++i)
    if (m.exponent(i)) throw Error(ErrorCode::InvalidArgument, "monomial uses an undeclared variable");
  if (m.degree() > degree_cap_)
    throw Error(ErrorCode::DegreeCapExceeded, "monomial degree " + std::to_string(m.degree()) +
                                                  " exceeds cap " + std::to_string(degree_cap_));
  if (a == 0) return {};
  return SkewPoly(Terms{Term{m, a}});
}

SkewPoly Extension::from_terms(std::vector<Term> terms) const {
  for (const Term& t : terms) (void)term(t.coef, t.mono);
  return SkewPoly(detail::normalize(base(), terms));
}

SkewPoly Extension::add(const SkewPoly& f, const SkewPoly& g) const {
  Terms all = f.terms_;
  all.insert(all.end(), g.terms_.begin(), g.terms_.end());
  return SkewPoly(detail::normalize(base(), all));
}

SkewPoly Extension::neg(const SkewPoly& f) const {
  Terms out = f.terms_;
  for (Term& t : out) t.coef = base().neg(t.coef);
  return SkewPoly(std::move(out));
}

SkewPoly Extension::scale(Element a, const SkewPoly& f) const {
  Terms out;
  for (const Term& t : f.terms_) {
    const Element c = base().mul(a, t.coef);
    if (c != 0) out.push_back(Term{t.mono, c});
  }
  return SkewPoly(std::move(out));
}

SkewPoly Extension::multiply(const SkewPoly& f, const SkewPoly& g) const {
  if (f.is_zero() || g.is_zero()) return {};
  const std::size_t deg = f.degree() + g.degree();
  if (deg > degree_cap_)
    throw Error(ErrorCode::DegreeCapExceeded, "product degree " + std::to_string(deg) +
                                                  " exceeds cap " + std::to_string(degree_cap_));
  return SkewPoly(state_->core.multiply(f.terms_, g.terms_));
}

SkewPoly Extension::power(const SkewPoly& f, std::size_t k) const {
  if (k == 0) return one();
  if (k * f.degree() > degree_cap_)
    throw Error(ErrorCode::DegreeCapExceeded, "power degree " + std::to_string(k * f.degree()) +
                                                  " exceeds cap " + std::to_string(degree_cap_));
  SkewPoly p = f;
  for (std::size_t i = 1; i < k; ++i) p = multiply(p, f);
  return p;
}

SkewPoly Extension::monomial_times_scalar(Monomial alpha, Element r) const {
  (void)term(FiniteRing::one(), alpha);
  if (r >= base().order()) throw Error(ErrorCode::InvalidArgument, "coefficient out of range");
  return SkewPoly(*state_->core.times_scalar(alpha, r));
}

SkewPoly Extension::monomial_times_monomial(Monomial alpha, Monomial beta) const {
  return multiply(term(FiniteRing::one(), alpha), term(FiniteRing::one(), beta));
}

LeadingData Extension::leading_data(const SkewPoly& f) const {
  LeadingData ld;
  if (f.is_zero()) return ld;
  ld.lm = ld.exp = f.terms_.front().mono;
  ld.lc = f.terms_.front().coef;
  ld.deg = ld.lm.degree();
  ld.zero = false;
  return ld;
}

NilpotencyResult Extension::is_nilpotent_direct(const SkewPoly& f, std::size_t budget) const {
  if (budget < 1) throw Error(ErrorCode::InvalidArgument, "nilpotency budget must be positive");
  NilpotencyResult res;
  res.budget = budget;
  SkewPoly p = f;
  for (std::size_t k = 1; k <= budget; ++k) {
    if (p.is_zero()) {
      res.status = NilStatus::Nilpotent;
      res.index = k;
      return res;
    }
    if (k == budget) break;
    if (p.degree() + f.degree() > degree_cap_) {
      res.status = NilStatus::CapExceeded;
      return res;
    }
    p = multiply(p, f);
  }
  res.status = NilStatus::NotNilpotentWithin;
  return res;
}

void Extension::require_criterion() const {
  if (!criterion_available()) {
    std::string why;
    if (!state_->props.ni.has_value()) why = "NI property unknown (ideal cap)";
    else if (!*state_->props.ni) why = "base ring is not NI";
    else why = "base ring is not weakly compatible";
    throw Error(ErrorCode::PreconditionUnverified,
                "coefficient criterion unavailable for " + spec().name + ": " + why);
  }
}

bool Extension::is_nilpotent_coeff(const SkewPoly& f) const {
  require_criterion();
  for (const Term& t : f.terms_)
    if (!state_->sets.nil.contains(t.coef)) return false;
  return true;
}

bool Extension::nil_adjacent(const SkewPoly& f, const SkewPoly& g) const {
  require_criterion();
  return is_nilpotent_coeff(multiply(f, g));
}

std::vector<Monomial> monomials_up_to(std::size_t n, std::size_t max_degree) {
  if (n < 1 || n > kMaxVars) throw Error(ErrorCode::InvalidArgument, "number of variables must be in [1, 8]");
  std::vector<Monomial> out{Monomial{}};
  std::vector<Monomial> layer{Monomial{}};
  for (std::size_t d = 1; d <= max_degree; ++d) {
    std::vector<Monomial> next;
    for (Monomial m : layer) {
      // Extend only at or after the last variable to avoid duplicates.
      const std::size_t from = m.is_one() ? 0 : m.last_var();
      for (std::size_t i = from; i < n; ++i) next.push_back(m.times_var(i));
    }
    std::sort(next.begin(), next.end(), deglex_less);
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace nilgraph::spbw
