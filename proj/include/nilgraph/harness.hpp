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

#ifndef NILGRAPH_HARNESS_HPP
#define NILGRAPH_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilgraph/finite_ring.hpp"
#include "nilgraph/graph.hpp"
#include "nilgraph/spbw.hpp"

namespace nilgraph::harness {

enum class Verdict { Pass, Fail, Vacuous, Unknown };
std::string_view to_string(Verdict v) noexcept;

struct Hypothesis {
  std::string name;
  bool holds = false;
};

struct CheckRecord {
  std::string check_id;
  std::string subject;
  std::vector<Hypothesis> hypotheses;
  Verdict verdict = Verdict::Vacuous;
  std::vector<std::string> witnesses;
  /// Which statement governed the verdict, or why it is vacuous/unknown.
  std::string note;
  double runtime_ms = 0.0;
};

/// A sample-level fact that is recorded but never turned into a verdict.
struct Observation {
  std::string subject;
  std::string name;
  bool holds = false;
  std::string detail;
};

struct VerdictCounts {
  std::size_t pass = 0, fail = 0, vacuous = 0, unknown = 0;
};

struct VerificationReport {
  std::vector<CheckRecord> checks;
  std::vector<Observation> observations;

  void merge(VerificationReport other);
  /// Orders checks by (check_id, subject) and observations by (subject, name).
  void sort();
  VerdictCounts counts() const;
  bool failed() const { return counts().fail > 0; }
  /// First record with the given id and subject, or nullptr.
  const CheckRecord* find(std::string_view check_id, std::string_view subject) const;
};

/// A known metric of an exact ring graph or of a sampled extension graph.
/// `graph` is "nilpotent" or "zero_divisor" for rings and "nilpotent" for
/// specs; `value` uses the export encoding ("2", "inf", "undefined", "true").
struct ExpectedValue {
  std::string subject;
  std::string graph = "nilpotent";
  std::string metric;
  std::string value;
  /// How the value was obtained (hand computation, literature, ...).
  std::string source;
};

struct SpecEntry {
  spbw::SPBWSpec spec;
  /// Overrides the suite sampler degree for graph checks.
  std::optional<std::size_t> graph_degree;
  /// Overrides the degree used by the nilpotency criterion check.
  std::optional<std::size_t> criterion_degree;
};

struct CorpusEntry {
  std::string id;
  ring::FiniteRing ring;
  std::vector<SpecEntry> specs;
  std::vector<ExpectedValue> expected;
};

struct SuiteParams {
  graph::SamplerParams sampler{2, 512, true};
  /// Polynomial degree for the criterion check.
  std::size_t criterion_degree = 2;
  /// Enumerate all polynomials when |R|^(#monomials) stays below this.
  std::size_t exhaustive_limit = 1024;
  std::size_t criterion_samples = 500;
  /// Powering budget K of the direct nilpotency test.
  std::size_t power_budget = 16;
  std::uint64_t seed = 0x6e696c6772617068ULL;
};

/// Rings Z/2, Z/4, Z/5, Z/6, Z/8, Z/12, Z/2 x Z/2, Z/4 x Z/2, Z/2[t]/(t^2),
/// F_4, Z/3[t]/(t^2), M_2(Z/2) with their commutative polynomial specs plus
/// skew, quantum-plane, bi-quadratic and negative-control specs.
std::vector<CorpusEntry> builtin_corpus();

/// Zero-divisor graph bounds, nilpotent graph bounds for NI rings, the
/// completeness characterisation and the 2-primal nilpotent graph claims.
VerificationReport verify_base_ring_theorems(const ring::FiniteRing& r, const std::string& id);

/// Completeness of the nilpotent graph across a whole corpus: the complete
/// graphs are exactly those of rings isomorphic to Z/2 x Z/2.
VerificationReport verify_completeness_corpus(const std::vector<CorpusEntry>& corpus);

/// Diameter and girth claims for the extension, decided on a bounded sample.
VerificationReport verify_extension_theorems(const SpecEntry& entry, const SuiteParams& params);

/// Coefficient criterion versus direct powering.
VerificationReport verify_nilpotency_criterion(const SpecEntry& entry, const SuiteParams& params);

/// Compares recorded expectations of one entry with computed metrics.
VerificationReport verify_expected(const CorpusEntry& entry, const SuiteParams& params);

VerificationReport run_suite(const std::vector<CorpusEntry>& corpus, const SuiteParams& params);

/// Versioned JSON report. Everything outside the "timing" object is a pure
/// function of the corpus and parameters.
std::string report_json(const VerificationReport& report, bool include_timing = true);
std::string report_markdown(const VerificationReport& report);

/// Metric value in the export encoding, or nullopt for an unknown metric name.
std::optional<std::string> metric_value(const graph::NilGraph& g, const graph::GraphMetrics& m,
                                        std::string_view metric);

}  // namespace nilgraph::harness

#endif  // NILGRAPH_HARNESS_HPP
