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

#include "nilgraph/finite_ring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "nilgraph/error.hpp"

namespace nilgraph::ring {

// ---------------------------------------------------------------------------
// ElementSet

ElementSet ElementSet::from_members(std::size_t universe, std::span<const Element> members) {
  ElementSet s(universe);
  for (Element e : members) s.insert(e);
  return s;
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (std::size_t e = 0; e < universe; ++e) s.insert(static_cast<Element>(e));
  return s;
}

void ElementSet::insert(Element e) {
  if (e >= mask_.size()) throw Error(ErrorCode::InvalidArgument, "element outside set universe");
  if (!mask_[e]) {
    mask_[e] = true;
    ++count_;
  }
}

void ElementSet::erase(Element e) {
  if (e < mask_.size() && mask_[e]) {
    mask_[e] = false;
    --count_;
  }
}

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  out.reserve(count_);
  for (std::size_t e = 0; e < mask_.size(); ++e)
    if (mask_[e]) out.push_back(static_cast<Element>(e));
  return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (std::size_t e = 0; e < mask_.size(); ++e)
    if (mask_[e] && !other.contains(static_cast<Element>(e))) return false;
  return true;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  ElementSet out(universe());
  for (std::size_t e = 0; e < mask_.size(); ++e)
    if (mask_[e] && other.contains(static_cast<Element>(e))) out.insert(static_cast<Element>(e));
  return out;
}

ElementSet ElementSet::unite(const ElementSet& other) const {
  ElementSet out = *this;
  for (std::size_t e = 0; e < other.universe(); ++e)
    if (other.contains(static_cast<Element>(e))) out.insert(static_cast<Element>(e));
  return out;
}

ElementSet ElementSet::minus(const ElementSet& other) const {
  ElementSet out(universe());
  for (std::size_t e = 0; e < mask_.size(); ++e)
    if (mask_[e] && !other.contains(static_cast<Element>(e))) out.insert(static_cast<Element>(e));
  return out;
}

// ---------------------------------------------------------------------------
// FiniteRing

struct FiniteRing::Data {
  std::size_t order = 0;
  std::vector<Element> add;
  std::vector<Element> mul;
  std::vector<Element> neg;
  std::string label;
  std::vector<std::string> labels;
  std::unordered_map<std::string, Element> by_label;
  bool commutative = false;
  std::size_t characteristic = 0;
  std::vector<FiniteRing> factors;
  std::vector<Element> coords;  // order * factors.size()
};

namespace {

[[noreturn]] void axiom_failure(const std::string& what, std::initializer_list<Element> witness) {
  std::ostringstream os;
  os << what << " fails at (";
  bool first = true;
  for (Element e : witness) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << ')';
  throw Error(ErrorCode::RingAxiom, os.str());
}

void check_cap(std::size_t order, const RingLimits& limits) {
  if (order > limits.order_cap) {
    throw Error(ErrorCode::OrderCapExceeded, "order " + std::to_string(order) +
                                                 " exceeds order cap " +
                                                 std::to_string(limits.order_cap));
  }
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

struct RingBuilder {
  static FiniteRing build(std::size_t n, std::vector<Element> add, std::vector<Element> mul,
                          std::string label, std::vector<std::string> labels,
                          std::vector<FiniteRing> factors, std::vector<Element> coords,
                          const RingLimits& limits) {
    check_cap(n, limits);
    if (n < 2) throw Error(ErrorCode::RingAxiom, "a ring needs one != zero, so order >= 2");
    if (add.size() != n * n || mul.size() != n * n)
      throw Error(ErrorCode::RingAxiom, "table size does not match order " + std::to_string(n));
    if (labels.size() != n)
      throw Error(ErrorCode::RingAxiom, "element label count does not match order");
    for (Element v : add)
      if (v >= n) throw Error(ErrorCode::RingAxiom, "addition table entry out of range");
    for (Element v : mul)
      if (v >= n) throw Error(ErrorCode::RingAxiom, "multiplication table entry out of range");

    auto A = [&](Element a, Element b) { return add[a * n + b]; };
    auto M = [&](Element a, Element b) { return mul[a * n + b]; };
    const auto N = static_cast<Element>(n);

    std::vector<Element> neg(n, N);
    for (Element a = 0; a < N; ++a) {
      if (A(a, 0) != a || A(0, a) != a) axiom_failure("additive identity", {a});
      if (M(a, 1) != a || M(1, a) != a) axiom_failure("multiplicative identity", {a});
      for (Element b = 0; b < N; ++b) {
        if (A(a, b) != A(b, a)) axiom_failure("additive commutativity", {a, b});
        if (A(a, b) == 0) neg[a] = b;
      }
      if (neg[a] == N) axiom_failure("additive inverse", {a});
    }
    for (Element a = 0; a < N; ++a) {
      for (Element b = 0; b < N; ++b) {
        const Element ab_sum = A(a, b);
        const Element ab_prod = M(a, b);
        for (Element c = 0; c < N; ++c) {
          if (A(ab_sum, c) != A(a, A(b, c))) axiom_failure("additive associativity", {a, b, c});
          if (M(ab_prod, c) != M(a, M(b, c))) axiom_failure("multiplicative associativity", {a, b, c});
          if (M(a, A(b, c)) != A(ab_prod, M(a, c))) axiom_failure("left distributivity", {a, b, c});
          if (M(A(a, b), c) != A(M(a, c), M(b, c))) axiom_failure("right distributivity", {a, b, c});
        }
      }
    }

    auto d = std::make_shared<FiniteRing::Data>();
    d->order = n;
    d->add = std::move(add);
    d->mul = std::move(mul);
    d->neg = std::move(neg);
    d->label = std::move(label);
    d->labels = std::move(labels);
    for (Element e = 0; e < N; ++e) {
      if (!d->by_label.emplace(d->labels[e], e).second)
        throw Error(ErrorCode::RingAxiom, "duplicate element label '" + d->labels[e] + "'");
    }
    d->commutative = true;
    for (Element a = 0; a < N && d->commutative; ++a)
      for (Element b = a + 1; b < N; ++b)
        if (d->mul[a * n + b] != d->mul[b * n + a]) {
          d->commutative = false;
          break;
        }
    Element acc = 1;
    std::size_t ch = 1;
    while (acc != 0) {
      acc = d->add[acc * n + 1];
      ++ch;
    }
    d->characteristic = ch;
    d->factors = std::move(factors);
    d->coords = std::move(coords);
    return FiniteRing(std::move(d));
  }

  /// Relabels a naturally indexed structure so that zero -> 0 and one -> 1,
  /// keeping the remaining elements in natural order.
  static FiniteRing from_natural(std::size_t n, std::size_t natural_zero, std::size_t natural_one,
                                 const std::function<std::size_t(std::size_t, std::size_t)>& add_fn,
                                 const std::function<std::size_t(std::size_t, std::size_t)>& mul_fn,
                                 const std::function<std::string(std::size_t)>& label_fn,
                                 std::string label, std::vector<FiniteRing> factors,
                                 const std::function<std::vector<Element>(std::size_t)>& coord_fn,
                                 const RingLimits& limits) {
    check_cap(n, limits);
    std::vector<Element> to_dense(n);
    std::vector<std::size_t> to_natural(n);
    to_dense[natural_zero] = 0;
    to_dense[natural_one] = 1;
    to_natural[0] = natural_zero;
    to_natural[1] = natural_one;
    Element next = 2;
    for (std::size_t x = 0; x < n; ++x) {
      if (x == natural_zero || x == natural_one) continue;
      to_dense[x] = next;
      to_natural[next] = x;
      ++next;
    }
    std::vector<Element> add(n * n), mul(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        add[a * n + b] = to_dense[add_fn(to_natural[a], to_natural[b])];
        mul[a * n + b] = to_dense[mul_fn(to_natural[a], to_natural[b])];
      }
    std::vector<std::string> labels(n);
    for (std::size_t e = 0; e < n; ++e) labels[e] = label_fn(to_natural[e]);
    std::vector<Element> coords;
    if (!factors.empty()) {
      coords.reserve(n * factors.size());
      for (std::size_t e = 0; e < n; ++e) {
        auto c = coord_fn(to_natural[e]);
        coords.insert(coords.end(), c.begin(), c.end());
      }
    }
    return build(n, std::move(add), std::move(mul), std::move(label), std::move(labels),
                 std::move(factors), std::move(coords), limits);
  }
};

FiniteRing::FiniteRing(std::shared_ptr<const Data> data)
    : data_(std::move(data)),
      order_(data_->order),
      add_(data_->add.data()),
      mul_(data_->mul.data()) {}

FiniteRing FiniteRing::from_tables(std::size_t order, std::vector<Element> add_table,
                                   std::vector<Element> mul_table, std::string label,
                                   std::vector<std::string> element_labels,
                                   const RingLimits& limits) {
  return RingBuilder::build(order, std::move(add_table), std::move(mul_table), std::move(label),
                            std::move(element_labels), {}, {}, limits);
}

std::size_t FiniteRing::order() const noexcept { return order_; }

Element FiniteRing::neg(Element a) const noexcept { return data_->neg[a]; }

Element FiniteRing::pow(Element a, std::size_t k) const noexcept {
  Element r = one();
  for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

Element FiniteRing::times(Element a, std::size_t k) const noexcept {
  Element r = zero();
  for (std::size_t i = 0; i < k; ++i) r = add(r, a);
  return r;
}

const std::string& FiniteRing::label() const noexcept { return data_->label; }

const std::string& FiniteRing::element_label(Element e) const {
  if (e >= order_) throw Error(ErrorCode::InvalidArgument, "element index out of range");
  return data_->labels[e];
}

std::optional<Element> FiniteRing::find(std::string_view element_label) const {
  auto it = data_->by_label.find(std::string(element_label));
  if (it == data_->by_label.end()) return std::nullopt;
  return it->second;
}

bool FiniteRing::is_commutative() const noexcept { return data_->commutative; }

std::size_t FiniteRing::characteristic() const noexcept { return data_->characteristic; }

std::span<const FiniteRing> FiniteRing::factors() const noexcept { return data_->factors; }

std::span<const Element> FiniteRing::coordinates(Element e) const {
  const std::size_t k = data_->factors.size();
  if (k == 0) return {};
  return std::span<const Element>(data_->coords).subspan(e * k, k);
}

bool FiniteRing::same_tables(const FiniteRing& other) const noexcept {
  return data_ == other.data_ ||
         (data_->add == other.data_->add && data_->mul == other.data_->mul);
}

// ---------------------------------------------------------------------------
// Constructions

FiniteRing make_zmod(std::size_t n, const RingLimits& limits) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "Z/n needs n >= 2");
  check_cap(n, limits);
  return RingBuilder::from_natural(
      n, 0, 1, [n](std::size_t a, std::size_t b) { return (a + b) % n; },
      [n](std::size_t a, std::size_t b) { return (a * b) % n; },
      [](std::size_t a) { return std::to_string(a); }, "Z/" + std::to_string(n), {}, {}, limits);
}

FiniteRing make_product(const FiniteRing& r, const FiniteRing& s, const RingLimits& limits) {
  const std::size_t nr = r.order(), ns = s.order();
  check_cap(nr * ns, limits);
  auto split = [ns](std::size_t x) { return std::pair<Element, Element>(x / ns, x % ns); };
  auto join = [ns](Element a, Element b) { return static_cast<std::size_t>(a) * ns + b; };
  return RingBuilder::from_natural(
      nr * ns, join(0, 0), join(1, 1),
      [&](std::size_t x, std::size_t y) {
        auto [a1, b1] = split(x);
        auto [a2, b2] = split(y);
        return join(r.add(a1, a2), s.add(b1, b2));
      },
      [&](std::size_t x, std::size_t y) {
        auto [a1, b1] = split(x);
        auto [a2, b2] = split(y);
        return join(r.mul(a1, a2), s.mul(b1, b2));
      },
      [&](std::size_t x) {
        auto [a, b] = split(x);
        return "(" + r.element_label(a) + "," + s.element_label(b) + ")";
      },
      r.label() + " x " + s.label(), {r, s},
      [&](std::size_t x) {
        auto [a, b] = split(x);
        return std::vector<Element>{a, b};
      },
      limits);
}

FiniteRing make_matrix_ring(const FiniteRing& base, std::size_t k, const RingLimits& limits) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "matrix size must be >= 1");
  if (!base.is_commutative())
    throw Error(ErrorCode::NotCommutative, "matrix rings need a commutative base, got " + base.label());
  const std::size_t q = base.order();
  const std::size_t cells = k * k;
  std::size_t n = 1;
  for (std::size_t i = 0; i < cells; ++i) {
    n *= q;
    check_cap(n, limits);
  }
  auto decode = [q, cells](std::size_t x) {
    std::vector<Element> m(cells);
    for (std::size_t i = 0; i < cells; ++i) {
      m[i] = static_cast<Element>(x % q);
      x /= q;
    }
    return m;
  };
  auto encode = [q, cells](const std::vector<Element>& m) {
    std::size_t x = 0;
    for (std::size_t i = cells; i-- > 0;) x = x * q + m[i];
    return x;
  };
  std::vector<Element> ident(cells, 0);
  for (std::size_t i = 0; i < k; ++i) ident[i * k + i] = 1;
  return RingBuilder::from_natural(
      n, 0, encode(ident),
      [&](std::size_t x, std::size_t y) {
        auto a = decode(x), b = decode(y);
        for (std::size_t i = 0; i < cells; ++i) a[i] = base.add(a[i], b[i]);
        return encode(a);
      },
      [&](std::size_t x, std::size_t y) {
        auto a = decode(x), b = decode(y);
        std::vector<Element> c(cells, 0);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) {
            Element acc = 0;
            for (std::size_t l = 0; l < k; ++l)
              acc = base.add(acc, base.mul(a[i * k + l], b[l * k + j]));
            c[i * k + j] = acc;
          }
        return encode(c);
      },
      [&](std::size_t x) {
        auto a = decode(x);
        std::string s = "[";
        for (std::size_t i = 0; i < k; ++i) {
          if (i) s += ',';
          s += '[';
          for (std::size_t j = 0; j < k; ++j) {
            if (j) s += ',';
            s += base.element_label(a[i * k + j]);
          }
          s += ']';
        }
        return s + "]";
      },
      "M" + std::to_string(k) + "(" + base.label() + ")", {}, {}, limits);
}

FiniteRing make_quotient_poly(const FiniteRing& base, std::span<const Element> modulus,
                              const RingLimits& limits) {
  if (modulus.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "modulus must have degree >= 1");
  for (Element c : modulus)
    if (c >= base.order()) throw Error(ErrorCode::InvalidArgument, "modulus coefficient out of range");
  if (modulus.back() != FiniteRing::one())
    throw Error(ErrorCode::NonMonicModulus, "leading modulus coefficient must be one");
  if (!base.is_commutative())
    throw Error(ErrorCode::NotCommutative, "quotient rings need a commutative base, got " + base.label());
  const std::size_t deg = modulus.size() - 1;
  const std::size_t q = base.order();
  std::size_t n = 1;
  for (std::size_t i = 0; i < deg; ++i) {
    n *= q;
    check_cap(n, limits);
  }
  const std::vector<Element> mod(modulus.begin(), modulus.end());
  auto decode = [q, deg](std::size_t x) {
    std::vector<Element> c(deg);
    for (std::size_t i = 0; i < deg; ++i) {
      c[i] = static_cast<Element>(x % q);
      x /= q;
    }
    return c;
  };
  auto encode = [q, deg](const std::vector<Element>& c) {
    std::size_t x = 0;
    for (std::size_t i = deg; i-- > 0;) x = x * q + c[i];
    return x;
  };
  auto coeff_label = [&](Element c) {
    const std::string& l = base.element_label(c);
    return all_digits(l) ? l : "(" + l + ")";
  };
  std::string label = base.label() + "[t]/(";
  {
    bool first = true;
    for (std::size_t i = deg + 1; i-- > 0;) {
      if (mod[i] == 0) continue;
      if (!first) label += "+";
      first = false;
      if (i == 0) {
        label += coeff_label(mod[i]);
      } else {
        if (mod[i] != 1) label += coeff_label(mod[i]);
        label += "t";
        if (i > 1) label += "^" + std::to_string(i);
      }
    }
    label += ")";
  }
  return RingBuilder::from_natural(
      n, 0, 1,
      [&](std::size_t x, std::size_t y) {
        auto a = decode(x), b = decode(y);
        for (std::size_t i = 0; i < deg; ++i) a[i] = base.add(a[i], b[i]);
        return encode(a);
      },
      [&](std::size_t x, std::size_t y) {
        auto a = decode(x), b = decode(y);
        std::vector<Element> prod(2 * deg - 1, 0);
        for (std::size_t i = 0; i < deg; ++i)
          for (std::size_t j = 0; j < deg; ++j)
            prod[i + j] = base.add(prod[i + j], base.mul(a[i], b[j]));
        for (std::size_t top = prod.size(); top-- > deg;) {
          const Element c = prod[top];
          if (c == 0) continue;
          for (std::size_t i = 0; i <= deg; ++i) {
            const std::size_t pos = top - deg + i;
            prod[pos] = base.sub(prod[pos], base.mul(c, mod[i]));
          }
        }
        prod.resize(deg);
        return encode(prod);
      },
      [&](std::size_t x) {
        auto c = decode(x);
        std::string s;
        for (std::size_t i = deg; i-- > 0;) {
          if (c[i] == 0) continue;
          if (!s.empty()) s += "+";
          if (i == 0) {
            s += coeff_label(c[i]);
          } else {
            if (c[i] != 1) s += coeff_label(c[i]);
            s += "t";
            if (i > 1) s += "^" + std::to_string(i);
          }
        }
        return s.empty() ? base.element_label(0) : s;
      },
      label, {}, {}, limits);
}

std::optional<std::vector<Element>> find_isomorphism(const FiniteRing& r, const FiniteRing& s) {
  const std::size_t n = r.order();
  if (n != s.order()) return std::nullopt;
  if (n > 10) throw Error(ErrorCode::InvalidArgument, "isomorphism search limited to order <= 10");
  std::vector<Element> rest(n - 2);
  std::iota(rest.begin(), rest.end(), Element{2});
  do {
    std::vector<Element> phi(n);
    phi[0] = 0;
    phi[1] = 1;
    for (std::size_t i = 2; i < n; ++i) phi[i] = rest[i - 2];
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a)
      for (Element b = 0; b < n; ++b)
        if (phi[r.add(a, b)] != s.add(phi[a], phi[b]) || phi[r.mul(a, b)] != s.mul(phi[a], phi[b])) {
          ok = false;
          break;
        }
    if (ok) return phi;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return std::nullopt;
}

}  // namespace nilgraph::ring
