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

#ifndef NILGRAPH_CLI_HPP
#define NILGRAPH_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "nilgraph/config.hpp"

namespace nilgraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitConfigError = 2;

/// Ring summary: order, element sets, radicals, properties, minimal primes.
std::string cmd_ring(const CliConfig& config, const std::string& ring_id);

enum class GraphChoice { Nilpotent, ZeroDivisor };

/// Exact graph for a ring id, sampled nilpotent graph for a spec id,
/// serialised as DOT or JSON.
std::string cmd_graph(const CliConfig& config, const std::string& subject, GraphChoice kind,
                      graph::ExportFormat format);

/// Compatibility, rigidity and weak-compatibility report for a spec.
std::string cmd_compat(const CliConfig& config, const std::string& spec_id);

/// Runs the suite; returns the report.
harness::VerificationReport cmd_verify(const CliConfig& config);

/// Entry point behind the nilgraph executable. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilgraph::cli

#endif  // NILGRAPH_CLI_HPP
