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

#ifndef NILGRAPH_TESTS_GENERATORS_HPP
#define NILGRAPH_TESTS_GENERATORS_HPP

#include <random>
#include <vector>

#include "nilgraph/spbw.hpp"

namespace nilgraph::testing {

inline ring::Element random_element(const ring::FiniteRing& r, std::mt19937_64& rng) {
  return static_cast<ring::Element>(rng() % r.order());
}

/// Each standard monomial of degree <= max_degree is present with
/// probability 1/2 and gets a uniform coefficient.
inline spbw::SkewPoly random_poly(const spbw::Extension& ext, std::mt19937_64& rng, std::size_t max_degree) {
  std::vector<spbw::Term> t;
  for (spbw::Monomial m : spbw::monomials_up_to(ext.num_vars(), max_degree))
    if (rng() % 2) t.push_back(spbw::Term{m, random_element(ext.base(), rng)});
  return ext.from_terms(t);
}

/// Polynomial whose coefficients are drawn from the given pool.
inline spbw::SkewPoly random_poly_from(const spbw::Extension& ext, std::mt19937_64& rng, std::size_t max_degree,
                                      const std::vector<ring::Element>& pool) {
  std::vector<spbw::Term> t;
  for (spbw::Monomial m : spbw::monomials_up_to(ext.num_vars(), max_degree))
    if (rng() % 2) t.push_back(spbw::Term{m, pool[rng() % pool.size()]});
  return ext.from_terms(t);
}

}  // namespace nilgraph::testing

#endif  // NILGRAPH_TESTS_GENERATORS_HPP
