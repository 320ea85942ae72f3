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

// Internal normal-form machinery shared by the extension arithmetic and the
// spec validator.

#ifndef NILGRAPH_SRC_SPBW_STATE_HPP
#define NILGRAPH_SRC_SPBW_STATE_HPP

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "nilgraph/spbw.hpp"

namespace nilgraph::spbw {

namespace detail {

using Terms = std::vector<Term>;
using TermsPtr = std::shared_ptr<const Terms>;

/// Sums duplicate monomials, drops zeros, sorts leading term first.
Terms normalize(const FiniteRing& r, const std::vector<Term>& terms);

struct PairKey {
  std::uint64_t mono;
  std::uint64_t other;
  friend bool operator==(const PairKey& a, const PairKey& b) {
    return a.mono == b.mono && a.other == b.other;
  }
};
using MonoKey = PairKey;

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.mono * 0x9E3779B97F4A7C15ULL ^ k.other);
  }
};

/// Memoised normal forms of x^alpha r, x^gamma x_j and x^alpha x^beta.
class Core {
 public:
  explicit Core(SPBWSpec s);

  TermsPtr times_scalar(Monomial alpha, Element r) const;
  TermsPtr times_var(Monomial gamma, std::size_t j) const;
  TermsPtr times_mono(Monomial alpha, Monomial beta) const;
  Terms multiply(const Terms& f, const Terms& g) const;

  SPBWSpec spec;

 private:
  template <class Map, class Key, class Fn>
  TermsPtr cached(Map& map, const Key& key, Fn&& compute) const;

  using Cache = std::unordered_map<PairKey, TermsPtr, PairKeyHash>;
  mutable std::mutex mu;
  mutable Cache scalar_cache;
  mutable Cache var_cache;
  mutable Cache mono_cache;
};

}  // namespace detail

using detail::Terms;

}  // namespace nilgraph::spbw

#endif  // NILGRAPH_SRC_SPBW_STATE_HPP
