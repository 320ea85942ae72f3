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

#include "nilgraph/harness.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <limits>
#include <random>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "nilgraph/error.hpp"
#include "nilgraph/morphisms.hpp"
#include "nilgraph/ring_analysis.hpp"

namespace nilgraph::harness {

using graph::DiameterKind;
using graph::GraphMetrics;
using graph::NilGraph;
using ring::Element;
using ring::FiniteRing;
using spbw::Extension;
using spbw::Monomial;
using spbw::SkewPoly;

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Vacuous: return "vacuous";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

// ---------------------------------------------------------------- report

void VerificationReport::merge(VerificationReport other) {
  for (auto& c : other.checks) checks.push_back(std::move(c));
  for (auto& o : other.observations) observations.push_back(std::move(o));
}

void VerificationReport::sort() {
  std::stable_sort(checks.begin(), checks.end(), [](const CheckRecord& a, const CheckRecord& b) {
    return std::tie(a.check_id, a.subject) < std::tie(b.check_id, b.subject);
  });
  std::stable_sort(observations.begin(), observations.end(),
                   [](const Observation& a, const Observation& b) {
                     return std::tie(a.subject, a.name) < std::tie(b.subject, b.name);
                   });
}

VerdictCounts VerificationReport::counts() const {
  VerdictCounts c;
  for (const auto& r : checks) {
    switch (r.verdict) {
      case Verdict::Pass: ++c.pass; break;
      case Verdict::Fail: ++c.fail; break;
      case Verdict::Vacuous: ++c.vacuous; break;
      case Verdict::Unknown: ++c.unknown; break;
    }
  }
  return c;
}

const CheckRecord* VerificationReport::find(std::string_view check_id, std::string_view subject) const {
  for (const auto& r : checks)
    if (r.check_id == check_id && r.subject == subject) return &r;
  return nullptr;
}

namespace {

// ---------------------------------------------------------------- helpers

std::string metric_text(const GraphMetrics& m) {
  std::string d = m.diameter_kind == DiameterKind::Finite   ? std::to_string(m.diameter)
                  : m.diameter_kind == DiameterKind::Infinite ? "inf"
                                                              : "undefined";
  return "connected=" + std::string(m.connected ? "yes" : "no") + ", diameter=" + d +
         ", girth=" + (m.girth ? std::to_string(*m.girth) : "inf");
}

std::string path_text(const NilGraph& g, const std::vector<std::size_t>& path, bool closed) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) out += (i ? " - " : "") + g.label(path[i]);
  if (closed && !path.empty()) out += " - " + g.label(path.front());
  return out;
}

bool all_hold(const std::vector<Hypothesis>& h) {
  return std::all_of(h.begin(), h.end(), [](const Hypothesis& x) { return x.holds; });
}

// Runs `body` unless a hypothesis fails, and times it.
template <class Fn>
CheckRecord run_check(std::string check_id, std::string subject, std::vector<Hypothesis> hyps, Fn&& body) {
  const auto start = std::chrono::steady_clock::now();
  CheckRecord rec;
  rec.check_id = std::move(check_id);
  rec.subject = std::move(subject);
  rec.hypotheses = std::move(hyps);
  if (all_hold(rec.hypotheses)) {
    body(rec);
  } else {
    rec.verdict = Verdict::Vacuous;
    for (const auto& h : rec.hypotheses)
      if (!h.holds) {
        rec.note = "hypothesis not satisfied: " + h.name;
        break;
      }
  }
  rec.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

bool two_primal(const ring::PropertyReport& p) { return p.two_primal.value_or(false); }

ring::ElementSet z_nil_star(const ring::ElementSets& s) {
  ring::ElementSet z = s.z_nil;
  z.erase(0);
  return z;
}

bool iso_z2xz2(const FiniteRing& r) {
  if (r.order() != 4) return false;
  const FiniteRing z2 = ring::make_zmod(2);
  return ring::find_isomorphism(r, ring::make_product(z2, z2)).has_value();
}

}  // namespace

// ---------------------------------------------------------------- base rings

VerificationReport verify_base_ring_theorems(const FiniteRing& r, const std::string& id) {
  VerificationReport rep;
  const ring::ElementSets sets = ring::element_sets(r);
  const ring::PropertyReport props = ring::ring_properties(r);
  const NilGraph zg = graph::build_zero_divisor_graph(r);
  const GraphMetrics zm = graph::graph_metrics(zg);
  const NilGraph ng = graph::build_nilpotent_graph(r);
  const GraphMetrics nm = graph::graph_metrics(ng);

  rep.checks.push_back(run_check("zd-graph-diameter", id, {{"|Z(R)*| >= 2", sets.zd_star.size() >= 2}},
                                 [&](CheckRecord& c) {
    const bool ok = zm.connected && zm.diameter_kind == DiameterKind::Finite && zm.diameter <= 3;
    c.verdict = ok ? Verdict::Pass : Verdict::Fail;
    c.witnesses.push_back("zero-divisor graph: " + metric_text(zm));
    if (!zm.diameter_path.empty()) c.witnesses.push_back("diameter path: " + path_text(zg, zm.diameter_path, false));
  }));

  rep.checks.push_back(run_check(
      "ni-nil-graph-bounds", id,
      {{"NI", props.ni.value_or(false)}, {"nil(R) contains a nonzero element", sets.nil.size() > 1}},
      [&](CheckRecord& c) {
        const bool diam_ok = nm.diameter_kind != DiameterKind::Infinite &&
                             (nm.diameter_kind != DiameterKind::Finite || nm.diameter <= 2);
        const bool girth_ok = !nm.girth || *nm.girth == 3;
        c.verdict = nm.connected && diam_ok && girth_ok ? Verdict::Pass : Verdict::Fail;
        c.witnesses.push_back("nilpotent graph: " + metric_text(nm));
        if (!nm.girth_cycle.empty()) c.witnesses.push_back("shortest cycle: " + path_text(ng, nm.girth_cycle, true));
      }));

  rep.checks.push_back(run_check("nil-graph-complete-iff-z2xz2", id, {}, [&](CheckRecord& c) {
    const bool iso = iso_z2xz2(r);
    c.verdict = iso == nm.complete ? Verdict::Pass : Verdict::Fail;
    c.witnesses.push_back(std::string("nilpotent graph complete: ") + (nm.complete ? "yes" : "no"));
    c.witnesses.push_back(std::string("isomorphic to Z/2 x Z/2: ") + (iso ? "yes" : "no"));
    if (!nm.complete && ng.vertex_count() >= 2) {
      for (std::size_t u = 0; u < ng.vertex_count(); ++u)
        for (std::size_t v = u + 1; v < ng.vertex_count(); ++v)
          if (!ng.adjacent(u, v)) {
            c.witnesses.push_back("non-adjacent pair (" + ng.label(u) + ", " + ng.label(v) + ")");
            return;
          }
    }
  }));

  rep.checks.push_back(run_check(
      "two-primal-nil-graph", id,
      {{"2-primal", two_primal(props)}, {"Z_N(R)* nonempty", ng.vertex_count() > 0}},
      [&](CheckRecord& c) {
        std::vector<std::string> problems;
        if (!nm.connected) problems.push_back("not connected");
        if (nm.diameter_kind == DiameterKind::Finite && nm.diameter > 3) problems.push_back("diameter above 3");
        if (nm.girth && *nm.girth > 4) problems.push_back("girth above 4");
        // The literal form "non-reduced implies girth 3" is refuted by rings
        // with |nil(R)| = 2 whose graph is a tree; the supported form is
        // girth 3 or infinite, and the literal form is kept as an observation.
        if (!props.reduced && nm.girth && *nm.girth != 3) problems.push_back("non-reduced but girth is not 3 or inf");
        if (!props.reduced) {
          Observation o;
          o.subject = id;
          o.name = "non-reduced 2-primal ring has nilpotent graph girth exactly 3";
          o.holds = nm.girth == 3u;
          o.detail = "girth " + (nm.girth ? std::to_string(*nm.girth) : std::string("inf")) + ", |nil(R)| = " +
                     std::to_string(sets.nil.size());
          rep.observations.push_back(std::move(o));
        }
        c.verdict = problems.empty() ? Verdict::Pass : Verdict::Fail;
        c.note = props.reduced ? "reduced base" : "non-reduced base";
        c.witnesses.push_back("nilpotent graph: " + metric_text(nm));
        if (!nm.girth_cycle.empty()) c.witnesses.push_back("shortest cycle: " + path_text(ng, nm.girth_cycle, true));
        for (auto& p : problems) c.witnesses.push_back(std::move(p));
      }));
  return rep;
}

VerificationReport verify_completeness_corpus(const std::vector<CorpusEntry>& corpus) {
  VerificationReport rep;
  rep.checks.push_back(run_check("nil-graph-complete-iff-z2xz2", "corpus", {}, [&](CheckRecord& c) {
    std::vector<std::string> complete, iso;
    for (const auto& e : corpus) {
      if (graph::graph_metrics(graph::build_nilpotent_graph(e.ring)).complete) complete.push_back(e.id);
      if (iso_z2xz2(e.ring)) iso.push_back(e.id);
    }
    auto join = [](const std::vector<std::string>& v) {
      std::string s;
      for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
      return "{" + s + "}";
    };
    c.witnesses.push_back("complete nilpotent graphs: " + join(complete));
    c.witnesses.push_back("rings isomorphic to Z/2 x Z/2: " + join(iso));
    if (complete != iso) {
      c.verdict = Verdict::Fail;
    } else if (iso.empty()) {
      c.verdict = Verdict::Unknown;
      c.note = "corpus has no ring isomorphic to Z/2 x Z/2";
    } else {
      c.verdict = Verdict::Pass;
    }
  }));
  return rep;
}

// ---------------------------------------------------------------- extensions

namespace {

struct PairStats {
  std::size_t pairs = 0;
  std::size_t beyond2 = 0;  ///< pairs farther than 2 or disconnected in the sample
  std::size_t beyond3 = 0;
  std::optional<std::pair<std::size_t, std::size_t>> non_adjacent;
  std::vector<std::size_t> distance_two_path;
  std::optional<std::pair<std::size_t, std::size_t>> first_beyond2, first_beyond3;
};

PairStats pair_stats(const NilGraph& g) {
  PairStats s;
  const std::size_t n = g.vertex_count();
  for (std::size_t u = 0; u < n; ++u) {
    const auto dist = graph::bfs_distances(g, u);
    for (std::size_t v = u + 1; v < n; ++v) {
      ++s.pairs;
      const auto d = dist[v];
      if (d != 1u && !s.non_adjacent) s.non_adjacent = {u, v};
      if (d == 2u && s.distance_two_path.empty()) s.distance_two_path = graph::shortest_path(g, u, v);
      if (!d || *d > 2) {
        ++s.beyond2;
        if (!s.first_beyond2) s.first_beyond2 = {u, v};
      }
      if (!d || *d > 3) {
        ++s.beyond3;
        if (!s.first_beyond3) s.first_beyond3 = {u, v};
      }
    }
  }
  return s;
}

bool poly_adjacent(const Extension& ext, const SkewPoly& f, const SkewPoly& g) {
  return ext.nil_adjacent(f, g) && ext.nil_adjacent(g, f);
}

// Checks that `cycle` is a closed walk through distinct nonzero vertices.
std::optional<std::string> validate_cycle(const Extension& ext, const std::vector<SkewPoly>& cycle) {
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (cycle[i].is_zero()) return "vertex " + std::to_string(i) + " is zero";
    for (std::size_t j = i + 1; j < cycle.size(); ++j)
      if (cycle[i] == cycle[j]) return "vertices " + ext.format(cycle[i]) + " repeat";
    const SkewPoly& next = cycle[(i + 1) % cycle.size()];
    if (!poly_adjacent(ext, cycle[i], next))
      return "edge " + ext.format(cycle[i]) + " -- " + ext.format(next) + " missing";
  }
  return std::nullopt;
}

std::string cycle_text(const Extension& ext, const std::vector<SkewPoly>& cycle) {
  std::string out;
  for (const auto& f : cycle) out += ext.format(f) + " - ";
  return out + ext.format(cycle.front());
}

// Second monomial of the prescribed cycles: x_2 when available so that the
// cycle fits in a degree-one sample, otherwise x_1^2.
Monomial second_monomial(const Extension& ext) {
  return ext.num_vars() >= 2 ? Monomial::var(1) : Monomial::var(0, 2);
}

}  // namespace

VerificationReport verify_extension_theorems(const SpecEntry& entry, const SuiteParams& params) {
  VerificationReport rep;
  const Extension ext0(entry.spec);
  graph::SamplerParams sp = params.sampler;
  if (entry.graph_degree) sp.max_degree = *entry.graph_degree;
  const Extension ext = ext0.with_degree_cap(std::max(entry.spec.degree_cap, 2 * std::max<std::size_t>(sp.max_degree, 2)));
  const std::string& id = entry.spec.name;
  const FiniteRing& r = ext.base();
  const ring::ElementSets& sets = ext.base_sets();
  const ring::PropertyReport& props = ext.base_properties();
  const ring::ElementSet zstar = z_nil_star(sets);

  const Hypothesis h_compat{"(Sigma,Delta)-compatible", ext.compat().compatible()};
  const Hypothesis h_2p{"2-primal", two_primal(props)};
  const Hypothesis h_zn{"Z_N(R)* nonempty", !zstar.empty()};
  const Hypothesis h_crit{"coefficient nilpotency criterion available", ext.criterion_available()};

  std::optional<NilGraph> sample;
  std::optional<GraphMetrics> sample_m;
  std::optional<PairStats> stats;
  auto ensure_sample = [&] {
    if (sample) return;
    sample = graph::sample_spbw_graph(ext, sp);
    sample_m = graph::graph_metrics(*sample);
    stats = pair_stats(*sample);
  };
  auto sample_note = [&](CheckRecord& c) {
    c.witnesses.push_back("sample: " + std::to_string(sample->vertex_count()) + " vertices, " +
                          std::to_string(sample->edge_count()) + " edges, degree <= " +
                          std::to_string(sp.max_degree) + (sample->truncated ? ", truncated" : ""));
  };

  const NilGraph base_graph = graph::build_nilpotent_graph(r);
  const GraphMetrics base_m = graph::graph_metrics(base_graph);

  std::optional<std::size_t> min_primes;
  try {
    min_primes = ring::minimal_primes(r).minimal_primes.size();
  } catch (const Error&) {
  }

  rep.checks.push_back(run_check(
      "ext-diameter-two-minimal-primes", id,
      {h_compat, h_2p, {"exactly two minimal primes", min_primes == 2u}, h_zn, h_crit}, [&](CheckRecord& c) {
        ensure_sample();
        sample_note(c);
        const bool lower = !stats->distance_two_path.empty();
        if (lower)
          c.witnesses.push_back("pair at distance 2: " + path_text(*sample, stats->distance_two_path, false));
        else
          c.witnesses.push_back("no sampled pair at distance exactly 2");
        if (stats->beyond2) {
          const auto [u, v] = *stats->first_beyond2;
          c.witnesses.push_back(std::to_string(stats->beyond2) + " of " + std::to_string(stats->pairs) +
                                " sampled pairs lack a path of length <= 2, e.g. (" + sample->label(u) +
                                ", " + sample->label(v) + ")");
        } else {
          c.witnesses.push_back("all " + std::to_string(stats->pairs) + " sampled pairs within distance 2");
        }
        if (!lower) c.verdict = Verdict::Fail;
        else if (stats->beyond2) c.verdict = Verdict::Unknown;
        else c.verdict = Verdict::Pass;
        c.note = c.verdict == Verdict::Unknown ? "upper bound not witnessed inside the sample" : "diameter 2";
      }));

  rep.checks.push_back(run_check("ext-diameter-bounds", id, {h_compat, h_2p, h_zn, h_crit}, [&](CheckRecord& c) {
    ensure_sample();
    sample_note(c);
    if (stats->non_adjacent) {
      const auto [u, v] = *stats->non_adjacent;
      c.witnesses.push_back("non-adjacent pair (" + sample->label(u) + ", " + sample->label(v) + ")");
    } else {
      c.witnesses.push_back("every sampled pair is adjacent");
    }
    if (stats->beyond3) {
      const auto [u, v] = *stats->first_beyond3;
      c.witnesses.push_back(std::to_string(stats->beyond3) + " of " + std::to_string(stats->pairs) +
                            " sampled pairs lack a path of length <= 3, e.g. (" + sample->label(u) + ", " +
                            sample->label(v) + ")");
    } else {
      c.witnesses.push_back("all " + std::to_string(stats->pairs) + " sampled pairs within distance 3");
    }
    if (!stats->non_adjacent) c.verdict = Verdict::Fail;
    else if (stats->beyond3) c.verdict = Verdict::Unknown;
    else c.verdict = Verdict::Pass;
    c.note = props.reduced ? "reduced base" : "non-reduced base";

    Observation o;
    o.subject = id;
    o.name = "base diameter <= sampled extension diameter";
    const auto dtext = [](const GraphMetrics& m) {
      return m.diameter_kind == DiameterKind::Finite ? std::to_string(m.diameter)
             : m.diameter_kind == DiameterKind::Infinite ? std::string("inf")
                                                          : std::string("undefined");
    };
    o.holds = base_m.diameter_kind != DiameterKind::Finite || sample_m->diameter_kind != DiameterKind::Finite ||
              base_m.diameter <= sample_m->diameter;
    o.detail = "base " + dtext(base_m) + ", sample " + dtext(*sample_m);
    rep.observations.push_back(std::move(o));
  }));

  rep.checks.push_back(run_check(
      "ext-four-cycle", id, {h_compat, {"reduced", props.reduced}, h_zn, h_crit}, [&](CheckRecord& c) {
        std::optional<std::pair<Element, Element>> ab;
        for (Element a = 1; a < r.order() && !ab; ++a)
          for (Element b = 1; b < r.order() && !ab; ++b)
            if (a != b && r.mul(a, b) == 0) ab = {a, b};
        if (!ab) {
          c.verdict = Verdict::Fail;
          c.witnesses.push_back("no nonzero a != b with ab = 0");
          return;
        }
        const auto [a, b] = *ab;
        const Monomial x1 = Monomial::var(0);
        const std::vector<SkewPoly> cycle{ext.constant(a), ext.term(b, x1), ext.term(a, x1), ext.constant(b)};
        const auto problem = validate_cycle(ext, cycle);
        c.witnesses.push_back("cycle " + cycle_text(ext, cycle));
        if (problem) c.witnesses.push_back(*problem);
        c.verdict = problem ? Verdict::Fail : Verdict::Pass;
      }));

  rep.checks.push_back(run_check(
      "ext-girth-transfer", id, {h_compat, h_2p, {"Gamma_N(R) contains a cycle", base_m.girth.has_value()}, h_crit},
      [&](CheckRecord& c) {
        ensure_sample();
        sample_note(c);
        const std::size_t gr = *base_m.girth;
        c.witnesses.push_back("base girth " + std::to_string(gr) + ": " +
                              path_text(base_graph, base_m.girth_cycle, true));
        if (sample_m->girth) c.witnesses.push_back("sampled shortest cycle: " + path_text(*sample, sample_m->girth_cycle, true));
        if (sample_m->girth && *sample_m->girth < gr) {
          c.verdict = Verdict::Fail;
        } else if (sample_m->girth == gr && gr == 3) {
          c.verdict = Verdict::Pass;
        } else {
          c.verdict = Verdict::Unknown;
          c.note = "a shorter cycle could lie outside the sample";
        }
      }));
  if (h_compat.holds && h_2p.holds && !base_m.girth) rep.checks.back().note = "acyclic base: see ext-girth-classification";

  rep.checks.push_back(run_check(
      "ext-girth-classification", id,
      {h_compat, h_2p, {"gr(Gamma_N(R)) infinite", !base_m.girth.has_value()}, h_zn, h_crit},
      [&](CheckRecord& c) {
        ensure_sample();
        sample_note(c);
        const Monomial x1 = Monomial::var(0), m2 = second_monomial(ext);
        if (!props.reduced && sets.nil.size() == 2) {
          c.note = "|nil(R)| = 2 branch: girth 3";
          const Element a = sets.nil.members()[1];
          const std::vector<SkewPoly> tri{ext.constant(a), ext.term(a, x1), ext.term(a, m2)};
          const auto problem = validate_cycle(ext, tri);
          c.witnesses.push_back("triangle " + cycle_text(ext, tri));
          if (problem) c.witnesses.push_back(*problem);
          c.verdict = problem ? Verdict::Fail : Verdict::Pass;
        } else if (props.reduced) {
          c.note = "reduced branch: girth 4";
          const auto& z = zstar.members();
          std::optional<std::pair<Element, Element>> ab;
          for (Element a : z)
            for (Element b : z)
              if (!ab && a != b && r.mul(a, b) == 0) ab = {a, b};
          if (!ab) {
            c.verdict = Verdict::Fail;
            c.witnesses.push_back("no nonzero a != b with ab = 0");
            return;
          }
          const auto [a, b] = *ab;
          const std::vector<SkewPoly> cyc{ext.constant(a), ext.term(b, x1), ext.term(a, x1), ext.constant(b)};
          const auto problem = validate_cycle(ext, cyc);
          c.witnesses.push_back("4-cycle " + cycle_text(ext, cyc));
          if (problem) c.witnesses.push_back(*problem);
          if (sample_m->girth == 3u) {
            c.witnesses.push_back("sampled triangle " + path_text(*sample, sample_m->girth_cycle, true));
            c.verdict = Verdict::Fail;
          } else {
            c.witnesses.push_back("no triangle in the sample");
            c.verdict = problem ? Verdict::Fail : Verdict::Pass;
          }
        } else {
          c.verdict = Verdict::Fail;
          c.witnesses.push_back("non-reduced with |nil(R)| = " + std::to_string(sets.nil.size()));
        }
      }));
  return rep;
}

// ---------------------------------------------------------------- criterion

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

VerificationReport verify_nilpotency_criterion(const SpecEntry& entry, const SuiteParams& params) {
  VerificationReport rep;
  const Extension ext0(entry.spec);
  const std::string& id = entry.spec.name;
  const std::size_t deg = entry.criterion_degree.value_or(params.criterion_degree);
  const Extension ext =
      ext0.with_degree_cap(std::max(entry.spec.degree_cap, std::max<std::size_t>(1, deg) * params.power_budget));
  rep.checks.push_back(run_check(
      "nilpotency-coefficient-criterion", id,
      {{"weak (Sigma,Delta)-compatible", ext.compat().weak_compatible()},
       {"NI", ext.base_properties().ni.value_or(false)}},
      [&](CheckRecord& c) {
        const auto monos = spbw::monomials_up_to(ext.num_vars(), deg);
        const std::size_t q = ext.base().order();
        std::size_t total = 1;
        bool exhaustive = true;
        for (std::size_t i = 0; i < monos.size() && exhaustive; ++i) {
          if (total > params.exhaustive_limit / q) exhaustive = false;
          total *= q;
        }
        exhaustive = exhaustive && total <= params.exhaustive_limit;

        std::size_t tested = 0, nilpotent = 0, disagreements = 0, inconclusive = 0;
        auto test = [&](const SkewPoly& f) {
          ++tested;
          const bool coeff = ext.is_nilpotent_coeff(f);
          const spbw::NilpotencyResult direct = ext.is_nilpotent_direct(f, params.power_budget);
          if (direct.status == spbw::NilStatus::CapExceeded) {
            ++inconclusive;
            return;
          }
          const bool dn = direct.status == spbw::NilStatus::Nilpotent;
          nilpotent += dn;
          if (coeff != dn) {
            if (!disagreements)
              c.witnesses.push_back("disagreement on " + ext.format(f) + ": coefficients " +
                                    (coeff ? "nilpotent" : "not nilpotent") + ", powering " +
                                    (dn ? "nilpotent" : "not nilpotent"));
            ++disagreements;
          }
        };

        std::vector<Element> digits(monos.size(), 0);
        auto poly_of = [&] {
          std::vector<spbw::Term> t;
          for (std::size_t k = 0; k < monos.size(); ++k)
            if (digits[k]) t.push_back({monos[k], digits[k]});
          return ext.from_terms(std::move(t));
        };
        if (exhaustive) {
          for (;;) {
            test(poly_of());
            std::size_t i = 0;
            for (; i < digits.size(); ++i) {
              if (++digits[i] < q) break;
              digits[i] = 0;
            }
            if (i == digits.size()) break;
          }
        } else {
          std::mt19937_64 rng(params.seed ^ fnv1a(id));
          const auto nil = ext.base_sets().nil.members();
          std::uniform_int_distribution<std::size_t> any(0, q - 1), pick_nil(0, nil.size() - 1);
          // Every fourth sample draws all coefficients from nil(R) so that
          // nilpotent polynomials are well represented.
          for (std::size_t s = 0; s < params.criterion_samples; ++s) {
            const bool nil_only = s % 4 == 3;
            for (auto& d : digits) d = static_cast<Element>(nil_only ? nil[pick_nil(rng)] : any(rng));
            test(poly_of());
          }
        }
        c.witnesses.push_back(std::string(exhaustive ? "exhaustive" : "sampled") + ": " + std::to_string(tested) +
                              " polynomials of degree <= " + std::to_string(deg) + ", " +
                              std::to_string(nilpotent) + " nilpotent, " + std::to_string(disagreements) +
                              " disagreements, power budget " + std::to_string(params.power_budget));
        if (disagreements) c.verdict = Verdict::Fail;
        else if (inconclusive) {
          c.verdict = Verdict::Unknown;
          c.note = std::to_string(inconclusive) + " polynomials exceeded the degree cap while powering";
        } else {
          c.verdict = Verdict::Pass;
        }
      }));
  return rep;
}

// ---------------------------------------------------------------- expected

std::optional<std::string> metric_value(const NilGraph& g, const GraphMetrics& m, std::string_view metric) {
  if (metric == "diameter")
    return m.diameter_kind == DiameterKind::Finite   ? std::to_string(m.diameter)
           : m.diameter_kind == DiameterKind::Infinite ? "inf"
                                                       : "undefined";
  if (metric == "girth") return m.girth ? std::to_string(*m.girth) : "inf";
  if (metric == "vertex_count") return std::to_string(g.vertex_count());
  if (metric == "edge_count") return std::to_string(g.edge_count());
  if (metric == "connected") return m.connected ? "true" : "false";
  if (metric == "complete") return m.complete ? "true" : "false";
  return std::nullopt;
}

VerificationReport verify_expected(const CorpusEntry& entry, const SuiteParams& params) {
  VerificationReport rep;
  for (const ExpectedValue& e : entry.expected) {
    rep.checks.push_back(run_check("expected/" + e.graph + "/" + e.metric, e.subject, {}, [&](CheckRecord& c) {
      std::optional<NilGraph> g;
      if (e.subject == entry.id) {
        if (e.graph == "nilpotent") g = graph::build_nilpotent_graph(entry.ring);
        else if (e.graph == "zero_divisor") g = graph::build_zero_divisor_graph(entry.ring);
      } else {
        for (const SpecEntry& s : entry.specs)
          if (s.spec.name == e.subject && e.graph == "nilpotent") {
            graph::SamplerParams sp = params.sampler;
            if (s.graph_degree) sp.max_degree = *s.graph_degree;
            g = graph::sample_spbw_graph(Extension(s.spec), sp);
          }
      }
      if (!g)
        throw Error(ErrorCode::UnknownId, "expectation names unknown subject/graph '" + e.subject + "'/'" +
                                              e.graph + "'");
      const auto actual = metric_value(*g, graph::graph_metrics(*g), e.metric);
      if (!actual) throw Error(ErrorCode::UnknownId, "unknown metric '" + e.metric + "'");
      c.verdict = *actual == e.value ? Verdict::Pass : Verdict::Fail;
      c.witnesses.push_back("expected " + e.value + ", computed " + *actual);
      c.note = "source: " + e.source;
    }));
  }
  return rep;
}

VerificationReport run_suite(const std::vector<CorpusEntry>& corpus, const SuiteParams& params) {
  VerificationReport rep;
  for (const CorpusEntry& e : corpus) {
    rep.merge(verify_base_ring_theorems(e.ring, e.id));
    rep.merge(verify_expected(e, params));
    for (const SpecEntry& s : e.specs) {
      rep.merge(verify_extension_theorems(s, params));
      rep.merge(verify_nilpotency_criterion(s, params));
    }
  }
  rep.merge(verify_completeness_corpus(corpus));
  rep.sort();
  return rep;
}

// ---------------------------------------------------------------- corpus

std::vector<CorpusEntry> builtin_corpus() {
  using ring::make_matrix_ring;
  using ring::make_product;
  using ring::make_quotient_poly;
  using ring::make_zmod;
  const Element t_squared[] = {0, 0, 1};
  const Element f4_modulus[] = {1, 1, 1};
  const FiniteRing z2 = make_zmod(2), z3 = make_zmod(3), z4 = make_zmod(4);

  std::vector<CorpusEntry> c;
  auto add = [&](std::string id, FiniteRing r) -> CorpusEntry& {
    CorpusEntry e{id, r, {}, {}};
    e.specs.push_back(SpecEntry{spbw::commutative_spec(id + "x", r, 1), std::nullopt, std::nullopt});
    c.push_back(std::move(e));
    return c.back();
  };
  auto expect = [](CorpusEntry& e, std::string subject, std::string graph, std::string metric,
                   std::string value, std::string source) {
    e.expected.push_back({std::move(subject), std::move(graph), std::move(metric), std::move(value),
                          std::move(source)});
  };

  add("Z2", z2);
  {
    CorpusEntry& e = add("Z4", z4);
    spbw::SPBWSpec bq = spbw::commutative_spec("Z4bq", z4, 2);
    bq.lower[0] = {1, 2, 2};
    e.specs.push_back(SpecEntry{bq, 1, 2});
    expect(e, "Z4", "nilpotent", "diameter", "2", "path 1 - 2 - 3 in Z/4");
    expect(e, "Z4", "nilpotent", "girth", "inf", "path 1 - 2 - 3 in Z/4");
    expect(e, "Z4", "zero_divisor", "vertex_count", "1", "only 2 is a zero divisor of Z/4");
    expect(e, "Z4x", "nilpotent", "girth", "3", "triangle 2 - 2x - 2x^2");
  }
  {
    CorpusEntry& e = add("Z5", make_zmod(5));
    spbw::SPBWSpec qp = spbw::commutative_spec("Z5qp", e.ring, 2);
    qp.d[0] = 2;
    e.specs.push_back(SpecEntry{qp, std::nullopt, std::nullopt});
    expect(e, "Z5x", "nilpotent", "vertex_count", "0", "Z/5[x] is a domain");
  }
  {
    CorpusEntry& e = add("Z6", make_zmod(6));
    expect(e, "Z6", "zero_divisor", "diameter", "2", "edges 2 - 3 and 3 - 4");
    expect(e, "Z6x", "nilpotent", "girth", "4", "reduced base, cycle 2 - 3x - 2x - 3");
    expect(e, "Z6x", "nilpotent", "diameter", "2", "two minimal primes");
  }
  {
    CorpusEntry& e = add("Z8", make_zmod(8));
    e.specs.front().criterion_degree = 3;
    spbw::SPBWSpec xy = spbw::commutative_spec("Z8xy", e.ring, 2);
    e.specs.push_back(SpecEntry{xy, std::nullopt, std::nullopt});
    expect(e, "Z8", "nilpotent", "girth", "3", "triangle 2 - 4 - 6");
    expect(e, "Z8x", "nilpotent", "girth", "3", "triangle 2 - 4 - 6");
  }
  add("Z12", make_zmod(12));
  {
    const FiniteRing p = make_product(z2, z2);
    CorpusEntry& e = add("Z2xZ2", p);
    const auto swap = morph::swap_map(p);
    e.specs.push_back(SpecEntry{spbw::ore_spec("Z2xZ2swap", p, swap, morph::zero_derivation(p, swap)),
                                std::nullopt, std::nullopt});
    expect(e, "Z2xZ2", "nilpotent", "complete", "true", "single edge (0,1) - (1,0)");
  }
  add("Z4xZ2", make_product(z4, z2));
  {
    const FiniteRing r = make_quotient_poly(z2, t_squared);
    CorpusEntry& e = add("Z2t2", r);
    const auto id = morph::identity_map(r);
    const Element t = r.find("t").value();
    std::vector<Element> ddt(r.order(), 0);
    // d/dt(c0 + c1 t) = c1.
    ddt[t] = ddt[r.add(1, t)] = 1;
    e.specs.push_back(SpecEntry{spbw::ore_spec("Z2t2ddt", r, id, morph::validate_derivation(r, id, ddt)),
                                std::nullopt, std::nullopt});
  }
  {
    const FiniteRing f4 = make_quotient_poly(z2, f4_modulus);
    CorpusEntry& e = add("F4", f4);
    const auto frob = morph::frobenius_map(f4);
    e.specs.push_back(SpecEntry{spbw::ore_spec("F4frob", f4, frob, morph::zero_derivation(f4, frob)),
                                std::nullopt, std::nullopt});
  }
  add("Z3t2", make_quotient_poly(z3, t_squared));
  {
    CorpusEntry& e = add("M2Z2", make_matrix_ring(z2, 2));
    expect(e, "M2Z2", "nilpotent", "vertex_count", "15", "nonzero nilpotents make Z_N(R) = R");
  }
  return c;
}

// ---------------------------------------------------------------- output

namespace {

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string report_json(const VerificationReport& report, bool include_timing) {
  using nlohmann::ordered_json;
  const VerdictCounts n = report.counts();
  ordered_json j;
  j["schema"] = "nilgraph.verification-report/1";
  j["summary"] = {{"status", n.fail ? "fail" : "ok"},
                  {"checks", report.checks.size()},
                  {"pass", n.pass},
                  {"fail", n.fail},
                  {"vacuous", n.vacuous},
                  {"unknown", n.unknown}};
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json hyps = ordered_json::array();
    for (const auto& h : c.hypotheses) hyps.push_back({{"name", h.name}, {"holds", h.holds}});
    checks.push_back({{"check_id", c.check_id},
                      {"subject", c.subject},
                      {"hypotheses", std::move(hyps)},
                      {"verdict", std::string(to_string(c.verdict))},
                      {"witnesses", c.witnesses},
                      {"note", c.note}});
  }
  j["checks"] = std::move(checks);
  ordered_json obs = ordered_json::array();
  for (const auto& o : report.observations)
    obs.push_back({{"subject", o.subject}, {"name", o.name}, {"holds", o.holds}, {"detail", o.detail}});
  j["observations"] = std::move(obs);
  if (include_timing) {
    ordered_json per = ordered_json::array();
    double total = 0;
    for (const auto& c : report.checks) {
      total += c.runtime_ms;
      per.push_back({{"check_id", c.check_id}, {"subject", c.subject}, {"runtime_ms", c.runtime_ms}});
    }
    j["timing"] = {{"generated_at", utc_now()}, {"total_ms", total}, {"checks", std::move(per)}};
  }
  return j.dump(2) + "\n";
}

std::string report_markdown(const VerificationReport& report) {
  const VerdictCounts n = report.counts();
  std::ostringstream out;
  out << "# nilgraph verification report\n\n";
  out << "Status: **" << (n.fail ? "FAIL" : "OK") << "** (" << n.pass << " pass, " << n.fail << " fail, "
      << n.vacuous << " vacuous, " << n.unknown << " unknown)\n\n";
  out << "| check | subject | verdict | detail |\n|---|---|---|---|\n";
  for (const auto& c : report.checks) {
    std::string detail = c.note;
    if (!c.witnesses.empty()) detail += (detail.empty() ? "" : "; ") + c.witnesses.front();
    std::string escaped;
    for (char ch : detail) {
      if (ch == '|') escaped += '\\';
      escaped += ch;
    }
    detail = std::move(escaped);
    out << "| " << c.check_id << " | " << c.subject << " | " << to_string(c.verdict) << " | " << detail << " |\n";
  }
  if (!report.observations.empty()) {
    out << "\n## Observations\n\n";
    for (const auto& o : report.observations)
      out << "- " << o.subject << ": " << o.name << ": " << (o.holds ? "holds" : "does not hold") << " ("
          << o.detail << ")\n";
  }
  return out.str();
}

}  // namespace nilgraph::harness
