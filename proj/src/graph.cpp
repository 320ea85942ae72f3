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

#include "nilgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

#include "json.hpp"

#include "nilgraph/error.hpp"
#include "nilgraph/ring_analysis.hpp"

namespace nilgraph::graph {

using ring::Element;
using ring::FiniteRing;
using spbw::Extension;
using spbw::SkewPoly;

std::string_view to_string(GraphKind k) noexcept {
  switch (k) {
    case GraphKind::ZeroDivisor: return "zero_divisor";
    case GraphKind::Nilpotent: return "nilpotent";
    case GraphKind::NilpotentSampled: return "nilpotent_sampled";
  }
  return "unknown";
}

// ---------------------------------------------------------------- NilGraph

NilGraph::NilGraph(GraphKind kind, std::string subject, std::vector<std::string> labels)
    : kind_(kind),
      subject_(std::move(subject)),
      labels_(std::move(labels)),
      adj_(labels_.size() * labels_.size(), false),
      nbrs_(labels_.size()) {
  std::set<std::string_view> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate vertex label '" + l + "'");
}

std::size_t NilGraph::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw Error(ErrorCode::UnknownVertex, "no vertex '" + std::string(label) + "' in graph of " + subject_);
}

std::vector<std::pair<std::size_t, std::size_t>> NilGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edges_);
  for (std::size_t u = 0; u < nbrs_.size(); ++u)
    for (std::size_t v : nbrs_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void NilGraph::connect(std::size_t u, std::size_t v) {
  const std::size_t n = labels_.size();
  if (u >= n || v >= n) throw Error(ErrorCode::UnknownVertex, "edge endpoint out of range");
  if (u == v) throw Error(ErrorCode::InvalidArgument, "self-loop at '" + labels_[u] + "'");
  if (adj_[u * n + v]) return;
  adj_[u * n + v] = adj_[v * n + u] = true;
  nbrs_[u].insert(std::lower_bound(nbrs_[u].begin(), nbrs_[u].end(), v), v);
  nbrs_[v].insert(std::lower_bound(nbrs_[v].begin(), nbrs_[v].end(), u), u);
  ++edges_;
}

// ---------------------------------------------------------------- ring graphs

namespace {

NilGraph ring_graph(const FiniteRing& r, GraphKind kind, const ring::ElementSet& vertices,
                    auto&& adjacent) {
  const auto members = vertices.members();
  std::vector<std::string> labels;
  for (Element e : members) labels.push_back(r.element_label(e));
  NilGraph g(kind, r.label(), std::move(labels));
  g.elements = members;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (adjacent(members[i], members[j])) g.connect(i, j);
  return g;
}

}  // namespace

NilGraph build_nilpotent_graph(const FiniteRing& r) {
  const ring::ElementSets s = ring::element_sets(r);
  ring::ElementSet vertices = s.z_nil;
  vertices.erase(0);
  return ring_graph(r, GraphKind::Nilpotent, vertices, [&](Element a, Element b) {
    const bool ab = s.nil.contains(r.mul(a, b));
    // xy nilpotent iff yx nilpotent: (yx)^{k+1} = y (xy)^k x.
    if (ab != s.nil.contains(r.mul(b, a)))
      throw Error(ErrorCode::InvalidArgument, "nilpotency of products is not symmetric in " + r.label());
    return ab;
  });
}

NilGraph build_zero_divisor_graph(const FiniteRing& r) {
  const ring::ElementSets s = ring::element_sets(r);
  return ring_graph(r, GraphKind::ZeroDivisor, s.zd_star, [&](Element a, Element b) {
    return r.mul(a, b) == 0 || r.mul(b, a) == 0;
  });
}

// ---------------------------------------------------------------- sampling

std::vector<SkewPoly> forced_witnesses(const Extension& ext, std::size_t max_degree) {
  const FiniteRing& r = ext.base();
  std::vector<SkewPoly> out;
  for (Element a = 1; a < r.order(); ++a) out.push_back(ext.constant(a));
  const auto monos = spbw::monomials_up_to(ext.num_vars(), max_degree);
  for (Element a : ext.base_sets().z_nil.members()) {
    if (a == 0) continue;
    for (spbw::Monomial m : monos)
      if (!m.is_one()) out.push_back(ext.term(a, m));
  }
  return out;
}

namespace {

// Mixed-radix counter over coefficient vectors. The highest monomial is the
// most significant digit, so counting up walks polynomials in order of
// leading monomial, then leading coefficient, then lower terms.
class PolyEnumerator {
 public:
  PolyEnumerator(const Extension& ext, std::size_t max_degree)
      : ext_(ext), monos_(spbw::monomials_up_to(ext.num_vars(), max_degree)), digits_(monos_.size(), 0) {}

  std::optional<SkewPoly> next() {
    const auto q = static_cast<Element>(ext_.base().order());
    std::size_t i = 0;
    for (; i < digits_.size(); ++i) {
      if (++digits_[i] < q) break;
      digits_[i] = 0;
    }
    if (i == digits_.size()) return std::nullopt;
    std::vector<spbw::Term> t;
    for (std::size_t k = 0; k < digits_.size(); ++k)
      if (digits_[k]) t.push_back(spbw::Term{monos_[k], digits_[k]});
    return ext_.from_terms(std::move(t));
  }

 private:
  const Extension& ext_;
  std::vector<spbw::Monomial> monos_;
  std::vector<Element> digits_;
};

// Hard bound on candidates examined so that huge bases cannot stall sampling.
constexpr std::size_t kCandidateBudget = 1u << 18;

}  // namespace

NilGraph sample_spbw_graph(const Extension& ext_in, const SamplerParams& params) {
  if (params.max_degree < 1 && params.max_vertices < 1)
    throw Error(ErrorCode::InvalidArgument, "sampler needs a positive budget");
  const std::size_t cap = std::max(ext_in.spec().degree_cap, 2 * params.max_degree);
  const Extension ext = ext_in.with_degree_cap(cap);
  if (!ext.criterion_available()) (void)ext.is_nilpotent_coeff(ext.zero());  // throws with reason

  const std::vector<SkewPoly> forced = forced_witnesses(ext, params.max_degree);
  // Nilpotent constants first: in a non-reduced NI base they witness
  // membership of every polynomial.
  std::vector<SkewPoly> pool;
  for (Element a : ext.base_sets().nil.members())
    if (a != 0) pool.push_back(ext.constant(a));
  for (const SkewPoly& f : forced) pool.push_back(f);

  std::set<SkewPoly> seen;
  std::vector<SkewPoly> vertices;
  bool truncated = false;
  std::size_t examined = 0, unknown = 0;

  auto consider = [&](const SkewPoly& f) {
    if (f.is_zero() || !seen.insert(f).second) return;
    ++examined;
    bool member = false;
    for (const SkewPoly& y : pool)
      if (ext.is_nilpotent_coeff(ext.multiply(f, y))) {
        member = true;
        break;
      }
    if (!member)
      for (const SkewPoly& y : vertices)
        if (ext.is_nilpotent_coeff(ext.multiply(f, y))) {
          member = true;
          break;
        }
    if (!member) {
      ++unknown;
      return;
    }
    if (vertices.size() >= params.max_vertices) {
      truncated = true;
      return;
    }
    vertices.push_back(f);
  };

  if (params.include_witnesses)
    for (const SkewPoly& f : forced) {
      if (truncated) break;
      consider(f);
    }
  PolyEnumerator all(ext, params.max_degree);
  while (!truncated) {
    auto f = all.next();
    if (!f) break;
    if (examined >= kCandidateBudget) {
      truncated = true;
      break;
    }
    consider(*f);
  }

  std::sort(vertices.begin(), vertices.end());
  std::vector<std::string> labels;
  for (const SkewPoly& f : vertices) labels.push_back(ext.format(f));
  NilGraph g(GraphKind::NilpotentSampled, ext.spec().name, std::move(labels));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const bool ij = ext.nil_adjacent(vertices[i], vertices[j]);
      if (ij != ext.nil_adjacent(vertices[j], vertices[i]))
        throw Error(ErrorCode::InvalidArgument, "asymmetric adjacency between " + g.label(i) +
                                                    " and " + g.label(j));
      if (ij) g.connect(i, j);
    }
  g.polys = std::move(vertices);
  g.truncated = truncated;
  g.candidates_examined = examined;
  g.membership_unknown = unknown;
  return g;
}

// ---------------------------------------------------------------- metrics

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

// BFS from s, skipping the edge (skip_u, skip_v) and not expanding beyond
// depth max_depth. Returns distances and parents.
void bfs(const NilGraph& g, std::size_t s, std::vector<std::size_t>& dist,
         std::vector<std::size_t>& parent, std::size_t skip_u = kInf, std::size_t skip_v = kInf,
         std::size_t max_depth = kInf) {
  const std::size_t n = g.vertex_count();
  dist.assign(n, kInf);
  parent.assign(n, kInf);
  std::deque<std::size_t> q{s};
  dist[s] = 0;
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop_front();
    if (dist[u] >= max_depth) continue;
    for (std::size_t v : g.neighbours(u)) {
      if ((u == skip_u && v == skip_v) || (u == skip_v && v == skip_u)) continue;
      if (dist[v] != kInf) continue;
      dist[v] = dist[u] + 1;
      parent[v] = u;
      q.push_back(v);
    }
  }
}

std::vector<std::size_t> trace(const std::vector<std::size_t>& parent, std::size_t s, std::size_t t) {
  std::vector<std::size_t> path{t};
  while (path.back() != s) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::vector<std::optional<std::size_t>> bfs_distances(const NilGraph& g, std::size_t source) {
  if (source >= g.vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
  std::vector<std::size_t> dist, parent;
  bfs(g, source, dist, parent);
  std::vector<std::optional<std::size_t>> out(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i)
    if (dist[i] != kInf) out[i] = dist[i];
  return out;
}

std::optional<std::size_t> distance(const NilGraph& g, std::string_view u, std::string_view v) {
  const std::size_t a = g.index_of(u), b = g.index_of(v);
  return bfs_distances(g, a)[b];
}

std::vector<std::size_t> shortest_path(const NilGraph& g, std::size_t u, std::size_t v) {
  if (u >= g.vertex_count() || v >= g.vertex_count())
    throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
  std::vector<std::size_t> dist, parent;
  bfs(g, u, dist, parent);
  if (dist[v] == kInf) return {};
  return trace(parent, u, v);
}

std::optional<std::size_t> distance_without_edge(const NilGraph& g, std::size_t u, std::size_t v,
                                                 std::size_t max_len) {
  std::vector<std::size_t> dist, parent;
  bfs(g, u, dist, parent, u, v, max_len);
  if (dist[v] == kInf || dist[v] > max_len) return std::nullopt;
  return dist[v];
}

GraphMetrics graph_metrics(const NilGraph& g) {
  GraphMetrics m;
  const std::size_t n = g.vertex_count();
  m.complete = n >= 1 && g.edge_count() == n * (n - 1) / 2;

  // All-pairs BFS keeping the first extremal pair in index order.
  bool all_reachable = true;
  std::size_t best = 0, best_u = 0, best_v = 0;
  std::vector<std::size_t> dist, parent;
  for (std::size_t s = 0; s < n; ++s) {
    bfs(g, s, dist, parent);
    for (std::size_t t = s + 1; t < n; ++t) {
      if (dist[t] == kInf) {
        all_reachable = false;
      } else if (dist[t] > best) {
        best = dist[t];
        best_u = s;
        best_v = t;
      }
    }
  }
  m.connected = all_reachable;
  if (n < 2) {
    m.diameter_kind = DiameterKind::Undefined;
  } else if (!all_reachable) {
    m.diameter_kind = DiameterKind::Infinite;
  } else {
    m.diameter_kind = DiameterKind::Finite;
    m.diameter = best;
    m.diameter_path = shortest_path(g, best_u, best_v);
  }

  // Girth: min over edges uv of d_{G - uv}(u, v) + 1, searching only for
  // cycles shorter than the best found so far.
  std::size_t girth = kInf;
  for (const auto& [u, v] : g.edges()) {
    const std::size_t limit = girth == kInf ? kInf : girth - 2;
    if (limit == 0) break;
    bfs(g, u, dist, parent, u, v, limit);
    if (dist[v] == kInf || dist[v] + 1 >= girth) continue;
    girth = dist[v] + 1;
    m.girth_cycle = trace(parent, u, v);
    if (girth == 3) break;
  }
  if (girth != kInf) m.girth = girth;
  return m;
}

// ---------------------------------------------------------------- export

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const NilGraph& g) {
  if (g.vertex_count() == 0) return "graph { }\n";
  std::string out = "graph {\n";
  for (const auto& l : g.labels()) out += "  " + dot_quote(l) + ";\n";
  for (const auto& [u, v] : g.edges())
    out += "  " + dot_quote(g.label(u)) + " -- " + dot_quote(g.label(v)) + ";\n";
  return out + "}\n";
}

std::string to_json(const NilGraph& g, const GraphMetrics& m) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["subject"] = g.subject();
  j["kind"] = std::string(to_string(g.kind()));
  j["vertices"] = g.labels();
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({g.label(u), g.label(v)});
  j["edges"] = std::move(edges);
  ordered_json metrics;
  metrics["vertex_count"] = g.vertex_count();
  metrics["edge_count"] = g.edge_count();
  metrics["connected"] = m.connected;
  switch (m.diameter_kind) {
    case DiameterKind::Finite: metrics["diameter"] = m.diameter; break;
    case DiameterKind::Infinite: metrics["diameter"] = "inf"; break;
    case DiameterKind::Undefined: metrics["diameter"] = "undefined"; break;
  }
  if (m.girth)
    metrics["girth"] = *m.girth;
  else
    metrics["girth"] = "inf";
  metrics["complete"] = m.complete;
  j["metrics"] = std::move(metrics);
  j["truncated"] = g.truncated;
  return j.dump(2) + "\n";
}

std::string export_graph(const NilGraph& g, ExportFormat format) {
  if (format == ExportFormat::Dot) return to_dot(g);
  return to_json(g, graph_metrics(g));
}

}  // namespace nilgraph::graph
