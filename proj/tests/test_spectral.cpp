#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "harary/enumerate.hpp"
#include "harary/invariants.hpp"
#include "harary/spectral.hpp"
#include "test_helpers.hpp"

using namespace harary;
using namespace test_helpers;

TEST_CASE("harary matrix entries") {
  HararyMatrix h = harary_matrix(apsp(path(3)));
  CHECK(h.at(0, 0) == 0.0);
  CHECK(h.at(0, 1) == 1.0);
  CHECK(h.at(0, 2) == 0.5);
  CHECK(h.at(1, 2) == 1.0);
  CHECK(h.at(2, 0) == 0.5);

  HararyMatrix hk = harary_matrix(apsp(complete(4)));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(hk.at(i, j) == (i == j ? 0.0 : 1.0));

  HararyMatrix hb = harary_matrix(apsp(complete_bipartite(2, 2)));
  CHECK(hb.at(0, 1) == 0.5);
  CHECK(hb.at(0, 2) == 1.0);
}

TEST_CASE("power iteration on exact cases") {
  SpectralResult k2 = spectral_radius(complete(2));
  CHECK(k2.radius == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(k2.vector[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(k2.vector[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));

  // row-regular: radius equals the common row sum
  SpectralResult c4 = spectral_radius(complete_bipartite(2, 2));
  CHECK(c4.radius == doctest::Approx(2.5).epsilon(1e-12));
  for (int n : {3, 6, 11}) {
    CHECK(spectral_radius(complete(n)).radius ==
          doctest::Approx(n - 1.0).epsilon(1e-12));
  }
  CHECK(spectral_radius(complete_bipartite(3, 3)).radius ==
        doctest::Approx(4.0).epsilon(1e-12));

  // P_3 = K_{1,2}: largest root of x^3 - (9/4)x - 1
  double expected = (1.0 + std::sqrt(33.0)) / 4.0;
  SpectralResult p3 = spectral_radius(path(3));
  CHECK(p3.radius == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("single vertex") {
  SpectralResult r = spectral_radius(Graph(1));
  CHECK(r.radius == 0.0);
  REQUIRE(r.vector.size() == 1);
  CHECK(r.vector[0] == 1.0);
  CHECK(full_spectrum(Graph(1)) == std::vector<double>{0.0});
}

TEST_CASE("full spectrum on exact cases") {
  auto k3 = full_spectrum(complete(3));
  REQUIRE(k3.size() == 3);
  CHECK(k3[0] == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(k3[1] == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(k3[2] == doctest::Approx(-1.0).epsilon(1e-10));

  auto k2 = full_spectrum(complete(2));
  CHECK(k2[0] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(k2[1] == doctest::Approx(-1.0).epsilon(1e-10));

  // roots of x^3 - (9/4)x - 1: (1 +/- sqrt(33))/4 and -1/2
  auto p3 = full_spectrum(path(3));
  CHECK(p3[0] == doctest::Approx((1.0 + std::sqrt(33.0)) / 4.0).epsilon(1e-10));
  CHECK(p3[1] == doctest::Approx(-0.5).epsilon(1e-10));
  CHECK(p3[2] == doctest::Approx((1.0 - std::sqrt(33.0)) / 4.0).epsilon(1e-10));

  auto c4 = full_spectrum(complete_bipartite(2, 2));
  CHECK(c4[0] == doctest::Approx(2.5).epsilon(1e-10));
  CHECK(c4[1] == doctest::Approx(-0.5).epsilon(1e-10));
  CHECK(c4[2] == doctest::Approx(-0.5).epsilon(1e-10));
  CHECK(c4[3] == doctest::Approx(-1.5).epsilon(1e-10));
}

TEST_CASE("closed forms") {
  CHECK(rho_closed_form(family::Complete{5}) == doctest::Approx(4.0));
  CHECK(rho_closed_form(family::Complete{1}) == doctest::Approx(0.0));
  CHECK(rho_closed_form(family::CompleteBipartite{3, 3}) == doctest::Approx(4.0));
  CHECK(rho_closed_form(family::CompleteBipartite{2, 5}) == doctest::Approx(4.5));
  CHECK(rho_closed_form(family::CompleteBipartite{1, 2}) ==
        doctest::Approx((1.0 + std::sqrt(33.0)) / 4.0));
  CHECK_THROWS_AS(rho_closed_form(family::Star{5}), std::invalid_argument);
  CHECK_THROWS_AS(rho_closed_form(family::SplitJoin{1, {2}}),
                  std::invalid_argument);
}

TEST_CASE("closed-form agreement with iteration") {
  for (int n1 = 1; n1 <= 4; ++n1) {
    for (int n2 = n1; n1 + n2 <= 9; ++n2) {
      double iter = spectral_radius(complete_bipartite(n1, n2)).radius;
      double formula = rho_closed_form(family::CompleteBipartite{n1, n2});
      CHECK(std::abs(iter - formula) <= 1e-8);
    }
  }
}

TEST_CASE("properties over all connected classes up to 5 vertices") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      HararyMatrix h = harary_matrix(apsp(g));
      SpectralResult res = spectral_radius(h);

      // residual certificate
      CHECK(res.residual <= 1e-10);

      // positive unit eigenvector
      double norm2 = 0.0;
      for (double x : res.vector) {
        CHECK(x > 0.0);
        norm2 += x * x;
      }
      CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-12));

      // row-sum bounds: mean row sum <= rho <= max row sum
      double total = 0.0;
      double max_row = 0.0;
      for (int i = 0; i < n; ++i) {
        total += h.row_sum(i);
        max_row = std::max(max_row, h.row_sum(i));
      }
      CHECK(res.radius >= total / n - 1e-12);
      CHECK(res.radius <= max_row + 1e-12);

      // the two eigenvalue routes agree; trace vanishes
      auto spectrum = full_spectrum(h);
      CHECK(std::abs(spectrum.front() - res.radius) <= 1e-8);
      double trace = 0.0;
      for (double ev : spectrum) trace += ev;
      CHECK(std::abs(trace) <= 1e-9);
    }
  }
}

TEST_CASE("adding an edge strictly raises the radius") {
  for (int n = 3; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      double before = spectral_radius(g).radius;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          Graph plus = g;
          plus.add_edge(u, v);
          CHECK(spectral_radius(plus).radius - before > 1e-9);
        }
      }
    }
  }
}

TEST_CASE("deleting a non-bridge edge strictly lowers the radius") {
  for (int n = 3; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      double before = spectral_radius(g).radius;
      auto bridges = cut_edges(g);
      for (auto e : g.edges()) {
        bool is_bridge = std::find(bridges.begin(), bridges.end(), e) != bridges.end();
        if (is_bridge) continue;
        Graph minus = g;
        minus.remove_edge(e.first, e.second);
        CHECK(before - spectral_radius(minus).radius > 1e-9);
      }
    }
  }
}

TEST_CASE("interchangeable vertices carry equal eigenvector entries") {
  // star leaves
  SpectralResult star = spectral_radius(complete_bipartite(1, 4));
  for (int v = 2; v <= 4; ++v) {
    CHECK(std::abs(star.vector[1] - star.vector[v]) <= 1e-8);
  }
  // adjacent twins in a clique
  SpectralResult clique = spectral_radius(complete(5));
  for (int v = 1; v < 5; ++v) {
    CHECK(std::abs(clique.vector[0] - clique.vector[v]) <= 1e-8);
  }
}
