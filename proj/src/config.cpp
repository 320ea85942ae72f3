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

#include "nilgraph/config.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <variant>

#include "json.hpp"
#include "nilgraph/error.hpp"
#include "nilgraph/morphisms.hpp"

namespace nilgraph::cli {

using harness::CorpusEntry;
using harness::SpecEntry;
using nlohmann::json;
using ring::Element;
using ring::FiniteRing;

const CorpusEntry& CliConfig::ring_entry(std::string_view id) const {
  for (const auto& e : corpus)
    if (e.id == id) return e;
  throw Error(ErrorCode::UnknownId, "no ring '" + std::string(id) + "'");
}

const SpecEntry& CliConfig::spec_entry(std::string_view id) const {
  for (const auto& e : corpus)
    for (const auto& s : e.specs)
      if (s.spec.name == id) return s;
  throw Error(ErrorCode::UnknownId, "no spec '" + std::string(id) + "'");
}

bool CliConfig::has_ring(std::string_view id) const {
  for (const auto& e : corpus)
    if (e.id == id) return true;
  return false;
}

bool CliConfig::has_spec(std::string_view id) const {
  for (const auto& e : corpus)
    for (const auto& s : e.specs)
      if (s.spec.name == id) return true;
  return false;
}

CliConfig default_config() {
  CliConfig c;
  c.corpus = harness::builtin_corpus();
  return c;
}

namespace {

[[noreturn]] void fail(const std::string& pointer, const std::string& what) {
  throw Error(ErrorCode::ConfigError, "at " + (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

std::string ptr(const std::string& base, std::string_view key) { return base + "/" + std::string(key); }
std::string ptr(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

const json& require(const json& obj, const std::string& at, std::string_view key) {
  if (!obj.is_object()) fail(at, "expected an object");
  auto it = obj.find(std::string(key));
  if (it == obj.end()) fail(at, "missing key '" + std::string(key) + "'");
  return *it;
}

std::string get_string(const json& obj, const std::string& at, std::string_view key) {
  const json& v = require(obj, at, key);
  if (!v.is_string()) fail(ptr(at, key), "expected a string");
  return v.get<std::string>();
}

std::size_t as_size(const json& v, const std::string& at) {
  if (!v.is_number_unsigned()) fail(at, "expected a non-negative integer");
  return v.get<std::size_t>();
}

std::size_t get_size(const json& obj, const std::string& at, std::string_view key) {
  return as_size(require(obj, at, key), ptr(at, key));
}

const json& get_array(const json& obj, const std::string& at, std::string_view key) {
  const json& v = require(obj, at, key);
  if (!v.is_array()) fail(ptr(at, key), "expected an array");
  return v;
}

Element as_element(const FiniteRing& r, const json& v, const std::string& at) {
  if (v.is_number_unsigned()) {
    const auto e = v.get<std::size_t>();
    if (e >= r.order()) fail(at, "element index " + std::to_string(e) + " outside " + r.label());
    return static_cast<Element>(e);
  }
  if (v.is_string()) {
    const auto e = r.find(v.get<std::string>());
    if (!e) fail(at, "no element '" + v.get<std::string>() + "' in " + r.label());
    return *e;
  }
  fail(at, "expected an element index or label");
}

std::vector<Element> as_elements(const FiniteRing& r, const json& v, const std::string& at) {
  if (!v.is_array()) fail(at, "expected an array of elements");
  std::vector<Element> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_element(r, v[i], ptr(at, i)));
  return out;
}

// Runs a library constructor and reports its failure at the config position,
// keeping the original module error text.
template <class Fn>
auto at_position(const std::string& at, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ConfigError) throw;
    fail(at, e.what());
  }
}

void check_keys(const json& obj, const std::string& at, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) fail(at, "expected an object");
  for (const auto& [k, v] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || a == k;
    if (!ok) fail(ptr(at, k), "unknown key '" + k + "'");
  }
}

struct MapDef {
  std::string ring;
  std::optional<morph::RingMap> endo;
  std::optional<morph::DerivationMap> derivation;
};

class Builder {
 public:
  explicit Builder(CliConfig& c) : c_(c) {}

  void rings(const json& arr) {
    for (std::size_t i = 0; i < arr.size(); ++i) ring(arr[i], ptr("/rings", i));
  }

  void maps(const json& arr) {
    for (std::size_t i = 0; i < arr.size(); ++i) map(arr[i], ptr("/maps", i));
  }

  void specs(const json& arr) {
    for (std::size_t i = 0; i < arr.size(); ++i) spec(arr[i], ptr("/specs", i));
  }

  void expected(const json& arr) {
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string at = ptr("/expected", i);
      const json& x = arr[i];
      check_keys(x, at, {"subject", "graph", "metric", "value", "source"});
      harness::ExpectedValue e;
      e.subject = get_string(x, at, "subject");
      e.graph = x.contains("graph") ? get_string(x, at, "graph") : "nilpotent";
      e.metric = get_string(x, at, "metric");
      const json& v = require(x, at, "value");
      e.value = v.is_string() ? v.get<std::string>() : v.dump();
      e.source = get_string(x, at, "source");
      if (e.graph != "nilpotent" && e.graph != "zero_divisor") fail(ptr(at, "graph"), "unknown graph '" + e.graph + "'");
      static const std::set<std::string> metrics{"diameter", "girth", "vertex_count", "edge_count", "connected",
                                                 "complete"};
      if (!metrics.count(e.metric)) fail(ptr(at, "metric"), "unknown metric '" + e.metric + "'");
      CorpusEntry* owner = nullptr;
      for (auto& entry : c_.corpus) {
        if (entry.id == e.subject && !owner) owner = &entry;
        for (const auto& s : entry.specs)
          if (s.spec.name == e.subject && !owner) owner = &entry;
      }
      if (!owner) fail(ptr(at, "subject"), "unknown subject '" + e.subject + "'");
      if (owner->id != e.subject && e.graph != "nilpotent")
        fail(ptr(at, "graph"), "specs only have a sampled nilpotent graph");
      owner->expected.push_back(std::move(e));
    }
  }

 private:
  CorpusEntry& entry(const std::string& id, const std::string& at) {
    for (auto& e : c_.corpus)
      if (e.id == id) return e;
    fail(at, "unknown ring '" + id + "'");
  }

  void fresh_id(const std::string& id, const std::string& at) {
    if (!ids_.insert(id).second || c_.has_ring(id) || c_.has_spec(id)) fail(at, "duplicate id '" + id + "'");
  }

  void ring(const json& x, const std::string& at) {
    check_keys(x, at, {"id", "kind", "n", "of", "base", "k", "modulus"});
    const std::string id = get_string(x, at, "id");
    fresh_id(id, ptr(at, "id"));
    c_.corpus.push_back(CorpusEntry{id, construct(x, at), {}, {}});
  }

  // A ring reference is either an existing ring id or an inline construction.
  FiniteRing ring_ref(const json& x, const std::string& at) {
    if (x.is_string()) return entry(x.get<std::string>(), at).ring;
    if (!x.is_object()) fail(at, "expected a ring id or a construction object");
    check_keys(x, at, {"kind", "n", "of", "base", "k", "modulus"});
    return construct(x, at);
  }

  FiniteRing construct(const json& x, const std::string& at) {
    const std::string kind = get_string(x, at, "kind");
    if (kind == "zmod") {
      const std::size_t n = get_size(x, at, "n");
      return at_position(ptr(at, "n"), [&] { return ring::make_zmod(n); });
    }
    if (kind == "product") {
      const json& f = get_array(x, at, "of");
      if (f.size() < 2) fail(ptr(at, "of"), "expected at least two factors");
      FiniteRing r = ring_ref(f[0], ptr(ptr(at, "of"), 0));
      for (std::size_t i = 1; i < f.size(); ++i) {
        const FiniteRing next = ring_ref(f[i], ptr(ptr(at, "of"), i));
        r = at_position(at, [&] { return ring::make_product(r, next); });
      }
      return r;
    }
    if (kind == "matrix") {
      const FiniteRing b = ring_ref(require(x, at, "base"), ptr(at, "base"));
      const std::size_t k = get_size(x, at, "k");
      return at_position(at, [&] { return ring::make_matrix_ring(b, k); });
    }
    if (kind == "quotient_poly") {
      const FiniteRing b = ring_ref(require(x, at, "base"), ptr(at, "base"));
      const auto m = as_elements(b, require(x, at, "modulus"), ptr(at, "modulus"));
      return at_position(ptr(at, "modulus"), [&] { return ring::make_quotient_poly(b, m); });
    }
    fail(ptr(at, "kind"), "unknown ring kind '" + kind + "'");
  }

  void map(const json& x, const std::string& at) {
    check_keys(x, at, {"id", "ring", "kind", "preset", "table", "sigma"});
    const std::string id = get_string(x, at, "id");
    if (maps_.count(id) || id == "identity" || id == "zero") fail(ptr(at, "id"), "duplicate map id '" + id + "'");
    MapDef def;
    def.ring = get_string(x, at, "ring");
    const FiniteRing& r = entry(def.ring, ptr(at, "ring")).ring;
    const std::string kind = get_string(x, at, "kind");
    const bool has_preset = x.contains("preset"), has_table = x.contains("table");
    if (has_preset == has_table) fail(at, "give exactly one of 'preset' and 'table'");
    if (kind == "endomorphism") {
      if (has_preset) {
        const std::string p = get_string(x, at, "preset");
        if (p == "identity") def.endo = morph::identity_map(r);
        else if (p == "frobenius") def.endo = at_position(ptr(at, "preset"), [&] { return morph::frobenius_map(r); });
        else if (p == "swap") def.endo = at_position(ptr(at, "preset"), [&] { return morph::swap_map(r); });
        else fail(ptr(at, "preset"), "unknown endomorphism preset '" + p + "'");
      } else {
        auto t = as_elements(r, x["table"], ptr(at, "table"));
        def.endo = at_position(ptr(at, "table"), [&] { return morph::validate_endo(r, std::move(t)); });
      }
    } else if (kind == "derivation") {
      const morph::RingMap sigma = x.contains("sigma") ? endo_ref(get_string(x, at, "sigma"), def.ring, ptr(at, "sigma"))
                                                       : morph::identity_map(r);
      if (has_preset) {
        const std::string p = get_string(x, at, "preset");
        if (p != "zero") fail(ptr(at, "preset"), "unknown derivation preset '" + p + "'");
        def.derivation = morph::zero_derivation(r, sigma);
      } else {
        auto t = as_elements(r, x["table"], ptr(at, "table"));
        def.derivation =
            at_position(ptr(at, "table"), [&] { return morph::validate_derivation(r, sigma, std::move(t)); });
      }
    } else {
      fail(ptr(at, "kind"), "unknown map kind '" + kind + "'");
    }
    maps_.emplace(id, std::move(def));
  }

  morph::RingMap endo_ref(const std::string& id, const std::string& ring_id, const std::string& at) {
    const FiniteRing& r = entry(ring_id, at).ring;
    if (id == "identity") return morph::identity_map(r);
    auto it = maps_.find(id);
    if (it == maps_.end()) fail(at, "undefined map '" + id + "'");
    if (!it->second.endo) fail(at, "map '" + id + "' is not an endomorphism");
    if (it->second.ring != ring_id) fail(at, "map '" + id + "' is defined on ring '" + it->second.ring + "'");
    return *it->second.endo;
  }

  morph::DerivationMap derivation_ref(const std::string& id, const std::string& ring_id, const morph::RingMap& sigma,
                                      const std::string& at) {
    const FiniteRing& r = entry(ring_id, at).ring;
    if (id == "zero") return morph::zero_derivation(r, sigma);
    auto it = maps_.find(id);
    if (it == maps_.end()) fail(at, "undefined map '" + id + "'");
    if (!it->second.derivation) fail(at, "map '" + id + "' is not a derivation");
    if (it->second.ring != ring_id) fail(at, "map '" + id + "' is defined on ring '" + it->second.ring + "'");
    if (!(it->second.derivation->sigma() == sigma))
      fail(at, "derivation '" + id + "' is twisted by a different endomorphism");
    return *it->second.derivation;
  }

  void spec(const json& x, const std::string& at) {
    check_keys(x, at,
               {"id", "ring", "vars", "sigma", "delta", "d", "lower", "degree_cap", "graph_degree", "criterion_degree"});
    const std::string id = get_string(x, at, "id");
    fresh_id(id, ptr(at, "id"));
    const std::string ring_id = get_string(x, at, "ring");
    CorpusEntry& owner = entry(ring_id, ptr(at, "ring"));
    const FiniteRing r = owner.ring;
    const std::size_t n = x.contains("vars") ? get_size(x, at, "vars") : 1;
    if (n < 1 || n > spbw::kMaxVars) fail(ptr(at, "vars"), "vars must be between 1 and " + std::to_string(spbw::kMaxVars));
    spbw::SPBWSpec s = spbw::commutative_spec(id, r, n);
    if (x.contains("sigma")) {
      const json& arr = get_array(x, at, "sigma");
      if (arr.size() != n) fail(ptr(at, "sigma"), "expected " + std::to_string(n) + " entries");
      for (std::size_t i = 0; i < n; ++i) {
        if (!arr[i].is_string()) fail(ptr(ptr(at, "sigma"), i), "expected a map id");
        s.sigma[i] = endo_ref(arr[i].get<std::string>(), ring_id, ptr(ptr(at, "sigma"), i));
      }
    }
    for (std::size_t i = 0; i < n; ++i) s.delta[i] = morph::zero_derivation(r, s.sigma[i]);
    if (x.contains("delta")) {
      const json& arr = get_array(x, at, "delta");
      if (arr.size() != n) fail(ptr(at, "delta"), "expected " + std::to_string(n) + " entries");
      for (std::size_t i = 0; i < n; ++i) {
        if (!arr[i].is_string()) fail(ptr(ptr(at, "delta"), i), "expected a map id");
        s.delta[i] = derivation_ref(arr[i].get<std::string>(), ring_id, s.sigma[i], ptr(ptr(at, "delta"), i));
      }
    }
    const std::size_t pairs = n * (n - 1) / 2;
    if (x.contains("d")) {
      const auto d = as_elements(r, x["d"], ptr(at, "d"));
      if (d.size() != pairs) fail(ptr(at, "d"), "expected " + std::to_string(pairs) + " entries");
      s.d = d;
    }
    if (x.contains("lower")) {
      const json& arr = get_array(x, at, "lower");
      if (arr.size() != pairs) fail(ptr(at, "lower"), "expected " + std::to_string(pairs) + " entries");
      for (std::size_t p = 0; p < pairs; ++p) {
        auto l = as_elements(r, arr[p], ptr(ptr(at, "lower"), p));
        if (l.size() != n + 1) fail(ptr(ptr(at, "lower"), p), "expected " + std::to_string(n + 1) + " entries");
        s.lower[p] = std::move(l);
      }
    }
    if (x.contains("degree_cap")) s.degree_cap = get_size(x, at, "degree_cap");
    SpecEntry e{s, std::nullopt, std::nullopt};
    if (x.contains("graph_degree")) e.graph_degree = get_size(x, at, "graph_degree");
    if (x.contains("criterion_degree")) e.criterion_degree = get_size(x, at, "criterion_degree");
    const spbw::SpecValidation v = spbw::validate_spec(s);
    if (!v.valid) fail(at, "spec '" + id + "' is invalid: " + Error(*v.code, v.detail).what());
    owner.specs.push_back(std::move(e));
  }

  CliConfig& c_;
  std::map<std::string, MapDef> maps_;
  std::set<std::string> ids_;
};

void sampler(const json& x, CliConfig& c) {
  const std::string at = "/sampler";
  check_keys(x, at,
             {"max_degree", "max_vertices", "criterion_degree", "criterion_samples", "exhaustive_limit",
              "power_budget", "seed"});
  auto& p = c.params;
  if (x.contains("max_degree")) p.sampler.max_degree = get_size(x, at, "max_degree");
  if (x.contains("max_vertices")) p.sampler.max_vertices = get_size(x, at, "max_vertices");
  if (x.contains("criterion_degree")) p.criterion_degree = get_size(x, at, "criterion_degree");
  if (x.contains("criterion_samples")) p.criterion_samples = get_size(x, at, "criterion_samples");
  if (x.contains("exhaustive_limit")) p.exhaustive_limit = get_size(x, at, "exhaustive_limit");
  if (x.contains("power_budget")) p.power_budget = get_size(x, at, "power_budget");
  if (x.contains("seed")) p.seed = get_size(x, at, "seed");
  if (p.sampler.max_degree < 1) fail(ptr(at, "max_degree"), "must be at least 1");
  if (p.sampler.max_vertices < 1) fail(ptr(at, "max_vertices"), "must be at least 1");
}

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

CliConfig parse_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    throw Error(ErrorCode::ConfigError, "at " + line_col(text, e.byte) + ": " + msg);
  }
  check_keys(root, "", {"include_builtin", "rings", "maps", "specs", "sampler", "output", "expected"});
  CliConfig c;
  bool builtin = true;
  if (root.contains("include_builtin")) {
    if (!root["include_builtin"].is_boolean()) fail("/include_builtin", "expected a boolean");
    builtin = root["include_builtin"].get<bool>();
  }
  if (builtin) c.corpus = harness::builtin_corpus();
  Builder b(c);
  if (root.contains("rings")) b.rings(get_array(root, "", "rings"));
  if (root.contains("maps")) b.maps(get_array(root, "", "maps"));
  if (root.contains("specs")) b.specs(get_array(root, "", "specs"));
  if (root.contains("expected")) b.expected(get_array(root, "", "expected"));
  if (root.contains("sampler")) sampler(root["sampler"], c);
  if (root.contains("output")) {
    const json& o = root["output"];
    check_keys(o, "/output", {"format", "path"});
    if (o.contains("format")) c.output.format = get_string(o, "/output", "format");
    if (o.contains("path")) c.output.path = get_string(o, "/output", "path");
    if (c.output.format != "json" && c.output.format != "dot" && c.output.format != "markdown")
      fail("/output/format", "expected json, dot or markdown");
  }
  return c;
}

CliConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace nilgraph::cli
