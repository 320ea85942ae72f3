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

#include "nilgraph/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "nilgraph/error.hpp"
#include "nilgraph/morphisms.hpp"
#include "nilgraph/ring_analysis.hpp"

namespace nilgraph::cli {

using ring::Element;
using ring::FiniteRing;

namespace {

std::string set_text(const FiniteRing& r, const ring::ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (Element e : s.members()) {
    out += (first ? "" : ", ") + r.element_label(e);
    first = false;
  }
  return out + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string tri(const std::optional<bool>& b) { return b ? yes_no(*b) : "unknown (ideal cap)"; }

std::string witness(const FiniteRing& r, const std::optional<Element>& w) {
  return w ? " (witness " + r.element_label(*w) + ")" : "";
}

std::string witness(const FiniteRing& r, const std::optional<std::vector<Element>>& w) {
  if (!w) return "";
  std::string out = " (witness ";
  for (std::size_t i = 0; i < w->size(); ++i) out += (i ? ", " : "") + r.element_label((*w)[i]);
  return out + ")";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

std::string compat_witness(const FiniteRing& r, const std::optional<morph::CompatWitness>& w, bool pair) {
  if (!w) return "";
  std::string out = " (map " + std::to_string(w->map_index) + ", a = " + r.element_label(w->a);
  if (pair) out += ", b = " + r.element_label(w->b);
  return out + ")";
}

}  // namespace

std::string cmd_ring(const CliConfig& config, const std::string& ring_id) {
  const FiniteRing& r = config.ring_entry(ring_id).ring;
  const ring::ElementSets s = ring::element_sets(r);
  const ring::PropertyReport p = ring::ring_properties(r);
  std::ostringstream out;
  out << "ring " << ring_id << " = " << r.label() << "\n";
  out << "order: " << r.order() << "\n";
  out << "characteristic: " << r.characteristic() << "\n";
  out << "commutative: " << yes_no(r.is_commutative()) << "\n";
  out << "nil = " << set_text(r, s.nil) << "\n";
  out << "units = " << set_text(r, s.units) << "\n";
  out << "Z(R)* = " << set_text(r, s.zd_star) << "\n";
  out << "Z_N(R) = " << set_text(r, s.z_nil) << "\n";
  try {
    const ring::RadicalReport rad = ring::radicals(r);
    out << "prime radical = " << set_text(r, rad.prime_radical) << "\n";
    out << "upper nilradical = " << set_text(r, rad.upper_nilradical) << "\n";
    out << "reduced: " << yes_no(p.reduced) << witness(r, p.reduced_witness) << "\n";
    out << "reversible: " << yes_no(p.reversible) << witness(r, p.reversible_witness) << "\n";
    out << "symmetric: " << yes_no(p.symmetric) << witness(r, p.symmetric_witness) << "\n";
    out << "2-primal: " << tri(p.two_primal) << witness(r, p.two_primal_witness) << "\n";
    out << "NI: " << tri(p.ni) << witness(r, p.ni_witness) << "\n";
    out << "minimal primes: " << rad.minimal_primes.size() << "\n";
    for (const auto& m : rad.minimal_primes) out << "  " << set_text(r, m) << "\n";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::IdealCapExceeded) throw;
    out << "reduced: " << yes_no(p.reduced) << witness(r, p.reduced_witness) << "\n";
    out << "reversible: " << yes_no(p.reversible) << witness(r, p.reversible_witness) << "\n";
    out << "symmetric: " << yes_no(p.symmetric) << witness(r, p.symmetric_witness) << "\n";
    out << "radicals unavailable: " << e.what() << "\n";
  }
  return out.str();
}

std::string cmd_graph(const CliConfig& config, const std::string& subject, GraphChoice kind,
                      graph::ExportFormat format) {
  if (config.has_ring(subject)) {
    const FiniteRing& r = config.ring_entry(subject).ring;
    const graph::NilGraph g = kind == GraphChoice::Nilpotent ? graph::build_nilpotent_graph(r)
                                                            : graph::build_zero_divisor_graph(r);
    return graph::export_graph(g, format);
  }
  if (config.has_spec(subject)) {
    if (kind == GraphChoice::ZeroDivisor)
      throw Error(ErrorCode::InvalidArgument, "only the nilpotent graph is available for spec '" + subject + "'");
    const harness::SpecEntry& s = config.spec_entry(subject);
    graph::SamplerParams sp = config.params.sampler;
    return graph::export_graph(graph::sample_spbw_graph(spbw::Extension(s.spec), sp), format);
  }
  throw Error(ErrorCode::UnknownId, "no ring or spec '" + subject + "'");
}

std::string cmd_compat(const CliConfig& config, const std::string& spec_id) {
  const spbw::Extension ext(config.spec_entry(spec_id).spec);
  const morph::CompatReport& c = ext.compat();
  const FiniteRing& r = ext.base();
  std::ostringstream out;
  out << "spec " << spec_id << " over " << r.label() << " in " << ext.num_vars() << " variable(s)\n";
  out << "sigma-compatible: " << yes_no(c.sigma_compatible) << compat_witness(r, c.sigma_witness, true) << "\n";
  out << "delta-compatible: " << yes_no(c.delta_compatible) << compat_witness(r, c.delta_witness, true) << "\n";
  out << "(Sigma,Delta)-compatible: " << yes_no(c.compatible()) << "\n";
  out << "Sigma-rigid: " << yes_no(c.sigma_rigid) << compat_witness(r, c.rigid_witness, false) << "\n";
  out << "weak sigma-compatible: " << yes_no(c.weak_sigma_compatible)
      << compat_witness(r, c.weak_sigma_witness, true) << "\n";
  out << "weak delta-compatible: " << yes_no(c.weak_delta_compatible)
      << compat_witness(r, c.weak_delta_witness, true) << "\n";
  out << "NI base: " << tri(ext.base_properties().ni) << "\n";
  out << "nilpotency criterion available: " << yes_no(ext.criterion_available()) << "\n";
  return out.str();
}

harness::VerificationReport cmd_verify(const CliConfig& config) {
  return harness::run_suite(config.corpus, config.params);
}

namespace {

struct Options {
  std::string config_path;
  std::string subject;
  bool json = false, dot = false, markdown = false;
  bool nilpotent = false, zero_divisor = false;
  std::optional<std::size_t> max_degree, max_vertices;
  std::string out_path;
};

CliConfig load(const Options& o) {
  CliConfig c = o.config_path.empty() ? default_config() : load_config(o.config_path);
  if (o.max_degree) {
    if (*o.max_degree < 1) throw Error(ErrorCode::ConfigError, "--max-degree must be at least 1");
    c.params.sampler.max_degree = *o.max_degree;
  }
  if (o.max_vertices) {
    if (*o.max_vertices < 1) throw Error(ErrorCode::ConfigError, "--max-vertices must be at least 1");
    c.params.sampler.max_vertices = *o.max_vertices;
  }
  if (!o.out_path.empty()) c.output.path = o.out_path;
  return c;
}

graph::ExportFormat format_of(const Options& o, const CliConfig& c) {
  if (o.dot) return graph::ExportFormat::Dot;
  if (o.json) return graph::ExportFormat::Json;
  return c.output.format == "dot" ? graph::ExportFormat::Dot : graph::ExportFormat::Json;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) out << text;
  else write_file(path, text);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nilpotent and zero-divisor graphs of finite rings and their skew PBW extensions", "nilgraph"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) { sub->add_option("--config", o.config_path, "JSON config file"); };
  auto sampling = [&](CLI::App* sub) {
    sub->add_option("--max-degree", o.max_degree, "Largest polynomial degree sampled");
    sub->add_option("--max-vertices", o.max_vertices, "Vertex budget of sampled graphs");
  };
  auto formats = [&](CLI::App* sub) {
    auto* j = sub->add_flag("--json", o.json, "JSON output");
    auto* d = sub->add_flag("--dot", o.dot, "Graphviz DOT output");
    j->excludes(d);
  };

  CLI::App* ring_cmd = app.add_subcommand("ring", "Inspect a ring");
  common(ring_cmd);
  ring_cmd->add_option("ring", o.subject, "Ring id")->required();

  CLI::App* graph_cmd = app.add_subcommand("graph", "Build a graph and write it as DOT or JSON");
  common(graph_cmd);
  sampling(graph_cmd);
  formats(graph_cmd);
  graph_cmd->add_option("subject", o.subject, "Ring or spec id")->required();
  auto* nil_flag = graph_cmd->add_flag("--nilpotent", o.nilpotent, "Nilpotent graph (default)");
  auto* zd_flag = graph_cmd->add_flag("--zero-divisor", o.zero_divisor, "Zero-divisor graph (rings only)");
  nil_flag->excludes(zd_flag);
  graph_cmd->add_option("--out", o.out_path, "Output file");

  CLI::App* compat_cmd = app.add_subcommand("compat", "Compatibility report of a spec");
  common(compat_cmd);
  compat_cmd->add_option("spec", o.subject, "Spec id")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
  common(verify_cmd);
  sampling(verify_cmd);
  verify_cmd->add_flag("--json", o.json, "Print the JSON report instead of the Markdown summary");
  verify_cmd->add_option("--out", o.out_path, "Write the JSON report here and the Markdown summary next to it");

  CLI::App* export_cmd = app.add_subcommand("export", "Write the graph of every ring and spec into a directory");
  common(export_cmd);
  sampling(export_cmd);
  formats(export_cmd);
  export_cmd->add_flag("--zero-divisor", o.zero_divisor, "Zero-divisor graphs of the rings instead");
  export_cmd->add_option("--out", o.out_path, "Output directory")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "cli/ConfigError: " << e.what() << "\n";
    return kExitConfigError;
  }

  try {
    if (ring_cmd->parsed()) {
      out << cmd_ring(load(o), o.subject);
    } else if (graph_cmd->parsed()) {
      const CliConfig c = load(o);
      const std::string text =
          cmd_graph(c, o.subject, o.zero_divisor ? GraphChoice::ZeroDivisor : GraphChoice::Nilpotent, format_of(o, c));
      emit(text, o.out_path, out);
    } else if (compat_cmd->parsed()) {
      out << cmd_compat(load(o), o.subject);
    } else if (verify_cmd->parsed()) {
      const CliConfig c = load(o);
      const harness::VerificationReport rep = cmd_verify(c);
      const std::string json = harness::report_json(rep, true);
      const std::string md = harness::report_markdown(rep);
      if (!c.output.path.empty()) {
        write_file(c.output.path, json);
        std::filesystem::path mdp(c.output.path);
        mdp.replace_extension(".md");
        write_file(mdp.string(), md);
      }
      out << (o.json ? json : md);
      return rep.failed() ? kExitCheckFailure : kExitOk;
    } else if (export_cmd->parsed()) {
      const CliConfig c = load(o);
      const graph::ExportFormat f = format_of(o, c);
      const std::string ext = f == graph::ExportFormat::Dot ? ".dot" : ".json";
      std::filesystem::create_directories(c.output.path);
      const GraphChoice kind = o.zero_divisor ? GraphChoice::ZeroDivisor : GraphChoice::Nilpotent;
      for (const auto& e : c.corpus) {
        std::vector<std::string> subjects{e.id};
        if (!o.zero_divisor)
          for (const auto& s : e.specs) subjects.push_back(s.spec.name);
        for (const auto& id : subjects) {
          try {
            const std::string path = (std::filesystem::path(c.output.path) / (id + ext)).string();
            write_file(path, cmd_graph(c, id, kind, f));
            out << path << "\n";
          } catch (const Error& ex) {
            if (ex.code() != ErrorCode::PreconditionUnverified) throw;
            err << "skipped " << id << ": " << ex.what() << "\n";
          }
        }
      }
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == ErrorCode::ConfigError || e.code() == ErrorCode::UnknownId ? kExitConfigError
                                                                                   : kExitCheckFailure;
  } catch (const std::exception& e) {
    err << "cli/IOError: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitOk;
}

}  // namespace nilgraph::cli
