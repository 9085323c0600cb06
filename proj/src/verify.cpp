#include "harary/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "harary/enumerate.hpp"
#include "harary/graph6.hpp"
#include "harary/invariants.hpp"
#include "harary/spectral.hpp"

namespace harary {

RadiusPair both_radii(const Graph& g) {
  HararyMatrix h = harary_matrix(apsp(g));
  return {spectral_radius(h).radius, full_spectrum(h).front()};
}

double conservative_margin(const Graph& larger, const Graph& smaller) {
  RadiusPair hi = both_radii(larger);
  RadiusPair lo = both_radii(smaller);
  return std::min(hi.power - lo.power, hi.jacobi - lo.jacobi);
}

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

std::string ints_str(std::span<const int> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

const char* family_token(ExtremalFamily family) {
  switch (family) {
    case ExtremalFamily::MatchingNumber: return "matching";
    case ExtremalFamily::BipartiteMatchingNumber: return "bipartite";
    case ExtremalFamily::CutEdgeCount: return "cut-edges";
  }
  return "?";
}

bool in_class(const Graph& g, const ClassSpec& spec) {
  switch (spec.family) {
    case ExtremalFamily::MatchingNumber:
      return matching_number(g).size == spec.p;
    case ExtremalFamily::BipartiteMatchingNumber:
      return is_bipartite(g).has_value() && matching_number(g).size == spec.p;
    case ExtremalFamily::CutEdgeCount:
      return static_cast<int>(cut_edges(g).size()) == spec.p;
  }
  return false;
}

// Predicted maximizer. For the cut-edge family the prediction only applies
// when the pendant-clique graph really has p bridges.
std::optional<Graph> theorem_graph_for(const ClassSpec& spec) {
  switch (spec.family) {
    case ExtremalFamily::MatchingNumber:
      if (spec.p == spec.n / 2) return generate(family::Complete{spec.n});
      return generate(family::SplitJoin{spec.p, std::vector<int>(spec.n - spec.p, 1)});
    case ExtremalFamily::BipartiteMatchingNumber:
      return generate(family::CompleteBipartite{spec.p, spec.n - spec.p});
    case ExtremalFamily::CutEdgeCount: {
      Graph g = spec.p == 0
                    ? generate(family::Complete{spec.n})
                    : generate(family::PendantClique{spec.n - spec.p, {spec.p}});
      if (static_cast<int>(cut_edges(g).size()) != spec.p) return std::nullopt;
      return g;
    }
  }
  return std::nullopt;
}

void validate_class_spec(const ClassSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("class needs n >= 2");
  switch (spec.family) {
    case ExtremalFamily::MatchingNumber:
    case ExtremalFamily::BipartiteMatchingNumber:
      if (spec.p < 1 || spec.p > spec.n / 2) {
        throw std::invalid_argument("matching number must be in 1..floor(n/2)");
      }
      break;
    case ExtremalFamily::CutEdgeCount:
      if (spec.p < 0 || spec.p > spec.n - 1) {
        throw std::invalid_argument("cut-edge count must be in 0..n-1");
      }
      break;
  }
}

}  // namespace

VerificationReport extremal_search(const ClassSpec& spec,
                                   std::span<const Graph> pool) {
  validate_class_spec(spec);

  std::vector<const Graph*> members;
  for (const Graph& g : pool) {
    if (g.vertex_count() != spec.n || !is_connected(g)) continue;
    if (in_class(g, spec)) members.push_back(&g);
  }
  if (members.empty()) {
    throw EmptyClassError(std::string("no connected graph on ") +
                          std::to_string(spec.n) + " vertices with " +
                          family_token(spec.family) + " = " +
                          std::to_string(spec.p));
  }

  std::vector<RadiusPair> radii(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    radii[i] = both_radii(*members[i]);
  }

  std::size_t top = 0;
  for (std::size_t i = 1; i < members.size(); ++i) {
    if (radii[i].power > radii[top].power) top = i;
  }

  VerificationReport report;
  report.id = family_token(spec.family);
  report.maximizer_radius = radii[top].power;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (radii[top].power - radii[i].power <= kTieWindow) {
      report.maximizers.push_back(*members[i]);
    }
  }

  report.theorem_graph = theorem_graph_for(spec);
  if (!report.theorem_graph.has_value()) {
    report.feasible = false;
    return report;
  }

  bool unique = report.maximizers.size() == 1;
  report.matches_theorem =
      unique && isomorphic(report.maximizers.front(), *report.theorem_graph);

  // Gap to the strongest class member not isomorphic to the winner.
  report.runner_up_gap = std::numeric_limits<double>::infinity();
  double best_power = -1.0;
  double best_jacobi = -1.0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i == top) continue;
    if (radii[i].power > best_power &&
        !isomorphic(*members[i], *members[top])) {
      best_power = radii[i].power;
      best_jacobi = radii[i].jacobi;
    }
  }
  if (best_power >= 0.0) {
    report.runner_up_gap =
        std::min(radii[top].power - best_power, radii[top].jacobi - best_jacobi);
  }

  if (!report.matches_theorem) {
    report.counterexample = report.maximizers.front();
  }

  MarginCase row;
  row.params = {{"family", family_token(spec.family)},
                {"n", std::to_string(spec.n)},
                {"p", std::to_string(spec.p)}};
  row.margin = report.runner_up_gap;
  report.margins.push_back(std::move(row));
  return report;
}

VerificationReport extremal_search(const ClassSpec& spec, int jobs) {
  if (spec.n < 2 || spec.n > 8) {
    throw std::invalid_argument("exhaustive search supported for 2 <= n <= 8");
  }
  std::vector<Graph> pool = enumerate_connected(spec.n, jobs);
  return extremal_search(spec, pool);
}

namespace {

void suite_cases_for_n(ExtremalFamily family, int n, std::span<const Graph> pool,
                       std::vector<VerificationReport>& reports) {
  int p_lo = family == ExtremalFamily::CutEdgeCount ? 0 : 1;
  int p_hi = family == ExtremalFamily::CutEdgeCount ? n - 1 : n / 2;
  for (int p = p_lo; p <= p_hi; ++p) {
    ClassSpec spec{family, n, p};
    try {
      reports.push_back(extremal_search(spec, pool));
    } catch (const EmptyClassError&) {
      VerificationReport infeasible;
      infeasible.id = family_token(family);
      infeasible.feasible = false;
      MarginCase row;
      row.params = {{"family", family_token(family)},
                    {"n", std::to_string(n)},
                    {"p", std::to_string(p)},
                    {"note", "empty class"}};
      row.margin = std::numeric_limits<double>::quiet_NaN();
      infeasible.margins.push_back(std::move(row));
      reports.push_back(std::move(infeasible));
    }
  }
}

}  // namespace

std::vector<VerificationReport> extremal_suite(ExtremalFamily family, int n_min,
                                               int n_max, int jobs) {
  if (n_min < 2 || n_max > 8 || n_min > n_max) {
    throw std::invalid_argument("n range must lie within 2..8");
  }
  std::vector<VerificationReport> reports;
  for (int n = n_min; n <= n_max; ++n) {
    std::vector<Graph> pool = enumerate_connected(n, jobs);
    suite_cases_for_n(family, n, pool, reports);
  }
  return reports;
}

std::vector<VerificationReport> extremal_suite(ExtremalFamily family,
                                               std::span<const Graph> pool,
                                               int n_min, int n_max) {
  if (n_min < 2 || n_min > n_max) {
    throw std::invalid_argument("bad n range");
  }
  std::vector<VerificationReport> reports;
  for (int n = n_min; n <= n_max; ++n) {
    bool any = false;
    for (const Graph& g : pool) any = any || g.vertex_count() == n;
    if (!any) continue;
    suite_cases_for_n(family, n, pool, reports);
  }
  return reports;
}

VerificationReport check_clique_shift(int s, std::span<const int> parts) {
  if (s < 1 || parts.size() < 2 || parts[0] < 2 || parts[1] < parts[0]) {
    throw std::invalid_argument(
        "clique shift needs s >= 1 and part sizes b >= a >= 2");
  }
  int total = s;
  for (int p : parts) total += p;
  if (total > 14) throw std::invalid_argument("clique shift capped at 14 vertices");

  std::vector<int> base(parts.begin(), parts.end());
  Graph g1 = generate(family::SplitJoin{s, base});

  VerificationReport report;
  report.id = "clique-shift";
  for (int step : {1, 2}) {
    if (base[0] - step < 1) break;
    std::vector<int> shifted = base;
    shifted[0] -= step;
    shifted[1] += step;
    Graph g2 = generate(family::SplitJoin{s, shifted});
    MarginCase row;
    row.params = {{"s", std::to_string(s)},
                  {"parts", ints_str(parts)},
                  {"step", std::to_string(step)}};
    row.margin = conservative_margin(g2, g1);
    report.margins.push_back(std::move(row));
    if (report.margins.back().margin <= kMarginTolerance &&
        !report.counterexample) {
      report.counterexample = g1;
    }
  }
  return report;
}

VerificationReport check_odd_clique_collapse(int s, int t, int k) {
  if (s < 1 || t < 1 || k < 3) {
    throw std::invalid_argument("collapse needs s >= 1, t >= 1, k >= 3");
  }
  int total = s + k + 2 * t;
  if (total > 14) throw std::invalid_argument("collapse capped at 14 vertices");

  Graph g = generate(family::CollapsedSplit{s, t, k});
  Graph collapsed =
      generate(family::SplitJoin{s + t, std::vector<int>(k + t, 1)});
  if (g.vertex_count() != collapsed.vertex_count()) {
    throw std::logic_error("collapse must preserve the vertex count");
  }

  VerificationReport report;
  report.id = "odd-clique-collapse";
  Params common = {{"s", std::to_string(s)},
                   {"t", std::to_string(t)},
                   {"k", std::to_string(k)}};

  MarginCase main_row;
  main_row.params = common;
  main_row.params.emplace_back("kind", "collapse");
  main_row.margin = conservative_margin(collapsed, g);
  report.margins.push_back(std::move(main_row));

  // The uncollapsed graph already beats the clique on s + 2t + 1 vertices.
  RadiusPair rho = both_radii(g);
  MarginCase bound_row;
  bound_row.params = common;
  bound_row.params.emplace_back("kind", "exceeds-clique-bound");
  bound_row.margin = std::min(rho.power, rho.jacobi) - (s + 2.0 * t);
  report.margins.push_back(std::move(bound_row));

  for (const MarginCase& row : report.margins) {
    if (row.margin <= kMarginTolerance && !report.counterexample) {
      report.counterexample = g;
    }
  }
  return report;
}

VerificationReport check_bipartite_rewire(const BipartiteRewireSpec& spec) {
  auto [a, b, c, d] = spec;
  if (a < 1 || b < 1 || c < 1 || d < 1) {
    throw std::invalid_argument("rewire needs all four part sizes >= 1");
  }
  int n = a + b + c + d;
  if (n > 14) throw std::invalid_argument("rewire capped at 14 vertices");

  // X1 = [0,a), X2 = [a,a+b), Y1 = [a+b,a+b+c), Y2 = [a+b+c,n)
  int x2 = a;
  int y1 = a + b;
  int y2 = a + b + c;
  Graph star(n);
  for (int u = 0; u < a; ++u)
    for (int v = y1; v < n; ++v) star.add_edge(u, v);
  for (int u = x2; u < y1; ++u)
    for (int v = y1; v < y2; ++v) star.add_edge(u, v);

  Graph prime = star;
  for (int u = x2; u < y1; ++u) {
    for (int v = y1; v < y2; ++v) prime.remove_edge(u, v);
    for (int v = 0; v < a; ++v) prime.add_edge(u, v);
  }
  Graph dprime = star;
  for (int v = y2; v < n; ++v) {
    for (int u = 0; u < a; ++u) dprime.remove_edge(u, v);
    for (int u = y1; u < y2; ++u) dprime.add_edge(u, v);
  }

  if (!isomorphic(prime, generate(family::CompleteBipartite{a, b + c + d})) ||
      !isomorphic(dprime, generate(family::CompleteBipartite{c, a + b + d}))) {
    throw std::logic_error("rewired graphs must be complete bipartite");
  }

  double m_prime = conservative_margin(prime, star);
  double m_dprime = conservative_margin(dprime, star);

  VerificationReport report;
  report.id = "bipartite-rewire";
  MarginCase row;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", m_prime);
  row.params = {{"a", std::to_string(a)},
                {"b", std::to_string(b)},
                {"c", std::to_string(c)},
                {"d", std::to_string(d)},
                {"margin_prime", buf}};
  std::snprintf(buf, sizeof buf, "%.17g", m_dprime);
  row.params.emplace_back("margin_double_prime", buf);
  row.params.emplace_back("branch", m_prime >= m_dprime ? "prime" : "double-prime");
  row.margin = std::max(m_prime, m_dprime);
  if (row.margin <= kMarginTolerance) report.counterexample = star;
  report.margins.push_back(std::move(row));
  return report;
}

VerificationReport check_cut_edge_contraction(const Graph& g, int u, int v) {
  Graph contracted = contract_cut_edge_with_pendant(g, u, v);
  VerificationReport report;
  report.id = "cut-edge-contraction";
  MarginCase row;
  row.params = {{"graph", encode_graph6(g)},
                {"edge", std::to_string(u) + "-" + std::to_string(v)}};
  row.margin = conservative_margin(contracted, g);
  if (row.margin <= kMarginTolerance) report.counterexample = g;
  report.margins.push_back(std::move(row));
  return report;
}

VerificationReport check_pendant_merge(int t, std::span<const int> pendants) {
  int s = static_cast<int>(pendants.size());
  if (s < 2 || s > t) {
    throw std::invalid_argument("pendant merge needs 2 <= s <= t groups");
  }
  int total = t;
  for (int r : pendants) {
    if (r < 1) throw std::invalid_argument("pendant counts must be >= 1");
    total += r;
  }
  if (total > 14) throw std::invalid_argument("pendant merge capped at 14 vertices");

  VerificationReport report;
  report.id = "pendant-merge";

  std::vector<int> current(pendants.begin(), pendants.end());
  Graph original = generate(family::PendantClique{t, current});
  Graph g_current = original;
  while (current.size() > 1) {
    std::vector<int> next;
    next.push_back(current[0] + current[1]);
    next.insert(next.end(), current.begin() + 2, current.end());
    Graph g_next = generate(family::PendantClique{t, next});
    MarginCase row;
    row.params = {{"t", std::to_string(t)},
                  {"from", ints_str(current)},
                  {"to", ints_str(next)}};
    row.margin = conservative_margin(g_next, g_current);
    if (row.margin <= kMarginTolerance && !report.counterexample) {
      report.counterexample = g_current;
    }
    report.margins.push_back(std::move(row));
    current = std::move(next);
    g_current = std::move(g_next);
  }

  MarginCase total_row;
  total_row.params = {{"t", std::to_string(t)},
                      {"from", ints_str(pendants)},
                      {"to", ints_str(current)},
                      {"kind", "total"}};
  total_row.margin = conservative_margin(g_current, original);
  if (total_row.margin <= kMarginTolerance && !report.counterexample) {
    report.counterexample = original;
  }
  report.margins.push_back(std::move(total_row));
  return report;
}

VerificationReport check_bipartite_chain(int n) {
  if (n < 4) throw std::invalid_argument("chain needs n >= 4");

  VerificationReport report;
  report.id = "bipartite-chain";
  for (int j = 1; j + 1 <= n / 2; ++j) {
    // Discriminants compared exactly: n^2 + 12 j (n - j) grows with j below
    // the midpoint.
    std::int64_t disc_lo = std::int64_t{n} * n + 12LL * j * (n - j);
    std::int64_t disc_hi = std::int64_t{n} * n + 12LL * (j + 1) * (n - j - 1);
    double lo = rho_closed_form(family::CompleteBipartite{j, n - j});
    double hi = rho_closed_form(family::CompleteBipartite{j + 1, n - j - 1});
    MarginCase row;
    row.params = {{"n", std::to_string(n)},
                  {"j", std::to_string(j)},
                  {"kind", "closed-form-step"},
                  {"discriminants_increase", disc_hi > disc_lo ? "true" : "false"}};
    row.margin = disc_hi > disc_lo ? hi - lo : -1.0;
    if (row.margin <= 0 && !report.counterexample) {
      report.counterexample = generate(family::CompleteBipartite{j, n - j});
    }
    report.margins.push_back(std::move(row));
  }
  if (n <= 12) {
    for (int j = 1; j <= n / 2; ++j) {
      Graph g = generate(family::CompleteBipartite{j, n - j});
      double iterative = spectral_radius(g).radius;
      double closed = rho_closed_form(family::CompleteBipartite{j, n - j});
      MarginCase row;
      row.params = {{"n", std::to_string(n)},
                    {"j", std::to_string(j)},
                    {"kind", "iterative-agreement"}};
      row.margin = 1e-8 - std::abs(iterative - closed);
      if (row.margin <= 0 && !report.counterexample) report.counterexample = g;
      report.margins.push_back(std::move(row));
    }
  }
  return report;
}

VerificationReport check_edge_monotonicity(int samples, int max_n,
                                           std::uint32_t seed) {
  if (samples < 1 || max_n < 4 || max_n > 16) {
    throw std::invalid_argument("edge monotonicity needs samples >= 1, 4 <= max_n <= 16");
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick_n(4, max_n);
  const double densities[] = {0.3, 0.5, 0.7};

  VerificationReport report;
  report.id = "edge-monotonicity";
  for (int i = 0; i < samples; ++i) {
    Graph g(1);
    std::vector<Edge> non_edges;
    while (true) {
      int n = pick_n(rng);
      double density = densities[rng() % 3];
      std::bernoulli_distribution flip(density);
      Graph candidate(n);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (flip(rng)) candidate.add_edge(u, v);
      if (!is_connected(candidate)) continue;
      non_edges.clear();
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (!candidate.has_edge(u, v)) non_edges.emplace_back(u, v);
      if (non_edges.empty()) continue;
      g = std::move(candidate);
      break;
    }
    auto [u, v] = non_edges[rng() % non_edges.size()];
    Graph augmented = g;
    augmented.add_edge(u, v);
    MarginCase row;
    row.params = {{"graph", encode_graph6(g)},
                  {"edge", std::to_string(u) + "-" + std::to_string(v)}};
    row.margin = conservative_margin(augmented, g);
    if (row.margin <= kMarginTolerance && !report.counterexample) {
      report.counterexample = g;
    }
    report.margins.push_back(std::move(row));
  }
  return report;
}

VerificationReport check_eigenvector_symmetry(int max_n) {
  if (max_n < 2 || max_n > 8) {
    throw std::invalid_argument("symmetry check supported for 2 <= max_n <= 8");
  }
  VerificationReport report;
  report.id = "eigenvector-symmetry";
  for (int n = 2; n <= max_n; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      SpectralResult res = spectral_radius(g);
      int pairs = 0;
      double max_dev = 0.0;
      for (int r = 0; r < n; ++r) {
        for (int s = r + 1; s < n; ++s) {
          std::uint64_t nr = g.neighbor_mask(r) & ~(std::uint64_t{1} << s);
          std::uint64_t ns = g.neighbor_mask(s) & ~(std::uint64_t{1} << r);
          if (nr != ns) continue;
          ++pairs;
          max_dev = std::max(max_dev, std::abs(res.vector[r] - res.vector[s]));
        }
      }
      if (pairs == 0) continue;
      MarginCase row;
      row.params = {{"graph", encode_graph6(g)},
                    {"pairs", std::to_string(pairs)}};
      row.margin = kSymmetryBound - max_dev;
      if (row.margin <= 0 && !report.counterexample) report.counterexample = g;
      report.margins.push_back(std::move(row));
    }
  }
  return report;
}

namespace {

void merge_rows(VerificationReport& into, VerificationReport&& from) {
  for (MarginCase& row : from.margins) into.margins.push_back(std::move(row));
  if (!into.counterexample && from.counterexample) {
    into.counterexample = std::move(from.counterexample);
  }
}

}  // namespace

VerificationReport clique_shift_grid(int max_total) {
  VerificationReport report;
  report.id = "clique-shift";
  std::vector<int> parts;
  // Leading pair (a, b) with b >= a >= 2, then a nonincreasing tail of
  // bystander parts so each multiset appears once.
  auto extend = [&](auto&& self, int s, int remaining, int max_part) -> void {
    merge_rows(report, check_clique_shift(s, parts));
    for (int e = std::min(remaining, max_part); e >= 1; --e) {
      parts.push_back(e);
      self(self, s, remaining - e, e);
      parts.pop_back();
    }
  };
  for (int s = 1; s + 4 <= max_total; ++s) {
    int budget = max_total - s;
    for (int a = 2; 2 * a <= budget; ++a) {
      for (int b = a; a + b <= budget; ++b) {
        parts = {a, b};
        extend(extend, s, budget - a - b, budget);
      }
    }
  }
  return report;
}

VerificationReport odd_clique_collapse_grid(int max_total) {
  VerificationReport report;
  report.id = "odd-clique-collapse";
  for (int t = 1; 1 + 3 + 2 * t <= max_total; ++t) {
    for (int s = 1; s + 3 + 2 * t <= max_total; ++s) {
      for (int k = 3; s + k + 2 * t <= max_total; ++k) {
        merge_rows(report, check_odd_clique_collapse(s, t, k));
      }
    }
  }
  return report;
}

VerificationReport bipartite_rewire_grid(int max_total) {
  VerificationReport report;
  report.id = "bipartite-rewire";
  for (int a = 1; a + 3 <= max_total; ++a)
    for (int b = 1; a + b + 2 <= max_total; ++b)
      for (int c = 1; a + b + c + 1 <= max_total; ++c)
        for (int d = 1; a + b + c + d <= max_total; ++d) {
          merge_rows(report, check_bipartite_rewire({a, b, c, d}));
        }
  return report;
}

VerificationReport cut_edge_contraction_grid(int max_total) {
  VerificationReport report;
  report.id = "cut-edge-contraction";
  auto bridged = [](const Graph& g1, const Graph& g2) {
    Graph g = disjoint_union(g1, g2);
    g.add_edge(0, g1.vertex_count());
    return g;
  };
  for (int q1 = 2; 2 * q1 <= max_total; ++q1) {
    for (int q2 = q1; q1 + q2 <= max_total; ++q2) {
      Graph g = bridged(generate(family::Complete{q1}),
                        generate(family::Complete{q2}));
      merge_rows(report, check_cut_edge_contraction(g, 0, q1));
    }
  }
  auto cycle = [](int len) {
    Graph g(len);
    for (int i = 0; i < len; ++i) g.add_edge(i, (i + 1) % len);
    return g;
  };
  for (int c1 = 3; 2 * c1 <= max_total; ++c1) {
    for (int c2 = c1; c1 + c2 <= max_total; ++c2) {
      Graph g = bridged(cycle(c1), cycle(c2));
      merge_rows(report, check_cut_edge_contraction(g, 0, c1));
    }
  }
  return report;
}

VerificationReport pendant_merge_grid(int max_total) {
  VerificationReport report;
  report.id = "pendant-merge";
  std::vector<int> pendants;
  auto descend = [&](auto&& self, int t, int remaining, int max_part) -> void {
    if (pendants.size() >= 2) {
      merge_rows(report, check_pendant_merge(t, pendants));
    }
    if (static_cast<int>(pendants.size()) >= t) return;
    for (int r = std::min(remaining, max_part); r >= 1; --r) {
      pendants.push_back(r);
      self(self, t, remaining - r, r);
      pendants.pop_back();
    }
  };
  for (int t = 2; t + 2 <= max_total; ++t) {
    pendants.clear();
    descend(descend, t, max_total - t, max_total);
  }
  return report;
}

}  // namespace harary
