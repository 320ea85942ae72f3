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

#ifndef NILGRAPH_CONFIG_HPP
#define NILGRAPH_CONFIG_HPP

#include <string>
#include <string_view>
#include <vector>

#include "nilgraph/harness.hpp"

namespace nilgraph::cli {

struct OutputOptions {
  std::string format = "json";
  std::string path;
};

/// Rings, maps, specs and run options resolved from a JSON config file.
///
/// Layout (every key optional):
///   include_builtin: bool (default true)
///   rings:    [{id, kind: zmod|product|matrix|quotient_poly, n | of | base + k | base + modulus}]
///             (product factors and bases are ring ids or inline constructions)
///   maps:     [{id, ring, kind: endomorphism|derivation, preset | table, sigma (derivations)}]
///   specs:    [{id, ring, vars, sigma: [map ids], delta: [map ids], d: [..], lower: [[..]],
///               degree_cap, graph_degree, criterion_degree}]
///   sampler:  {max_degree, max_vertices, criterion_degree, criterion_samples, exhaustive_limit,
///              power_budget, seed}
///   output:   {format, path}
///   expected: [{subject, graph, metric, value, source}]
/// Elements are given as indices or as element labels. Errors are
/// Error(ConfigError) naming a JSON pointer, or a line and column for syntax.
struct CliConfig {
  std::vector<harness::CorpusEntry> corpus;
  harness::SuiteParams params;
  OutputOptions output;

  /// Throws UnknownId.
  const harness::CorpusEntry& ring_entry(std::string_view id) const;
  /// Throws UnknownId.
  const harness::SpecEntry& spec_entry(std::string_view id) const;
  bool has_ring(std::string_view id) const;
  bool has_spec(std::string_view id) const;
};

/// The builtin corpus with default parameters.
CliConfig default_config();
CliConfig parse_config(std::string_view json_text);
/// Reads and parses a file; unreadable files are ConfigError.
CliConfig load_config(const std::string& path);

}  // namespace nilgraph::cli

#endif  // NILGRAPH_CONFIG_HPP
