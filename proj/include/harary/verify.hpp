#ifndef HARARY_VERIFY_HPP
#define HARARY_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "harary/graph.hpp"

namespace harary {

enum class ExtremalFamily { MatchingNumber, BipartiteMatchingNumber, CutEdgeCount };

struct ClassSpec {
  ExtremalFamily family;
  int n = 0;
  int p = 0;  // matching number or cut-edge count
};

struct EmptyClassError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One margin row: named parameters plus the margin value. Margins for
// inequalities are computed twice (power iteration and full spectrum) and
// the smaller difference is reported.
struct MarginCase {
  std::vector<std::pair<std::string, std::string>> params;
  double margin = 0.0;
};

struct VerificationReport {
  std::string id;
  std::vector<Graph> maximizers;  // all classes within the tie window
  double maximizer_radius = 0.0;
  std::optional<Graph> theorem_graph;
  bool matches_theorem = false;
  bool feasible = true;  // false when the class is empty for (n, p)
  double runner_up_gap = 0.0;  // +inf when the class has a single member
  std::vector<MarginCase> margins;
  std::optional<Graph> counterexample;
};

// Margin convention: the source inequalities are strict; numerically a
// check passes when its margin exceeds this threshold.
inline constexpr double kMarginTolerance = 1e-9;

// Tie window for maximizer uniqueness; radii closer than this are reported
// as ambiguous rather than ranked.
inline constexpr double kTieWindow = 1e-9;

// Both radius routes for one graph.
struct RadiusPair {
  double power = 0.0;
  double jacobi = 0.0;
};
RadiusPair both_radii(const Graph& g);

// min over routes of rho(larger) - rho(smaller).
double conservative_margin(const Graph& larger, const Graph& smaller);

// Scans every connected isomorphism class on spec.n vertices that satisfies
// the class invariant, returns the radius maximizer(s), compares against the
// predicted extremal graph, and reports the gap to the best non-isomorphic
// competitor. Throws EmptyClassError when no class member exists.
VerificationReport extremal_search(const ClassSpec& spec, int jobs = 1);

// Same scan over an explicit pool of connected graphs (e.g. decoded from a
// graph6 stream) instead of the built-in enumeration.
VerificationReport extremal_search(const ClassSpec& spec,
                                   std::span<const Graph> pool);

// All (n, p) cases for one family over an n range; empty classes are
// reported infeasible instead of raising.
std::vector<VerificationReport> extremal_suite(ExtremalFamily family, int n_min,
                                               int n_max, int jobs = 1);

// Same over an explicit pool of graphs.
std::vector<VerificationReport> extremal_suite(ExtremalFamily family,
                                               std::span<const Graph> pool,
                                               int n_min, int n_max);

// Shifting one vertex from a smaller clique part to a larger one raises the
// radius: K_s v (K_{a} u K_{b} u ...) vs K_s v (K_{a-1} u K_{b+1} u ...),
// for b >= a >= 2. Includes the two-vertex shift when a >= 3.
VerificationReport check_clique_shift(int s, std::span<const int> parts);

// K_s v (empty_{k-1} u K_{2t+1}) vs K_{s+t} v empty_{k+t}: the collapsed
// form has the larger radius. Also checks rho(G) > s + 2t.
VerificationReport check_odd_clique_collapse(int s, int t, int k);

struct BipartiteRewireSpec {
  int a = 1, b = 1, c = 1, d = 1;  // |X1|, |X2|, |Y1|, |Y2|
};

// Cover-split rewiring: G* has edges X1-Y plus X2-Y1; G' rewires X2 onto X1
// and G'' rewires Y2 onto Y1. At least one of the two rewirings increases
// the radius. G' and G'' are verified to be complete bipartite.
VerificationReport check_bipartite_rewire(const BipartiteRewireSpec& spec);

// Contracting a bridge (both endpoint degrees >= 2) and re-attaching a
// pendant raises the radius.
VerificationReport check_cut_edge_contraction(const Graph& g, int u, int v);

// Merging all pendant groups of a clique onto one attachment vertex raises
// the radius; every single-merge step is checked individually.
VerificationReport check_pendant_merge(int t, std::span<const int> pendants);

// rho(K_{1,n-1}) < rho(K_{2,n-2}) < ... < rho(K_{floor(n/2),ceil(n/2)}).
// Differences come from the closed form; the discriminants are compared in
// exact integer arithmetic, and radii are cross-checked iteratively for
// n <= 12.
VerificationReport check_bipartite_chain(int n);

// Adding any missing edge to a connected graph strictly raises the radius;
// sampled over random connected graphs with a fixed seed.
VerificationReport check_edge_monotonicity(int samples, int max_n,
                                           std::uint32_t seed);

// Vertices with identical neighborhoods away from each other carry equal
// principal-eigenvector entries; checked over all connected classes up to
// max_n, deviation bound 1e-8. Margin rows are (bound - deviation).
VerificationReport check_eigenvector_symmetry(int max_n);
inline constexpr double kSymmetryBound = 1e-8;

// Full parameter grids, one margin row per tuple, total vertices <= max_total.
VerificationReport clique_shift_grid(int max_total);
VerificationReport odd_clique_collapse_grid(int max_total);
VerificationReport bipartite_rewire_grid(int max_total);
VerificationReport cut_edge_contraction_grid(int max_total);
VerificationReport pendant_merge_grid(int max_total);

}  // namespace harary

#endif  // HARARY_VERIFY_HPP
