#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "clak/diagcat.hpp"
#include "clak/polygon.hpp"
#include "clak/quiver.hpp"
#include "clak/repcat.hpp"

using namespace clak;

namespace {

std::vector<long long> catalan(int upto) {
  std::vector<long long> c(upto + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= upto; ++k)
    for (int i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  return c;
}

}  // namespace

TEST_SUITE("diagcat") {

TEST_CASE("geometric hom on the pentagon") {
  const Triangulation t0 = Triangulation::snake(2);
  const Diagonal d13(2, 1, 3), d14(2, 1, 4), d03(2, 0, 3);
  CHECK(hom_dim_diagonals(t0, d13, d14) == 1);
  CHECK(hom_dim_diagonals(t0, d14, d13) == 0);
  CHECK(hom_dim_diagonals(t0, d13, d13) == 1);
  CHECK(hom_dim_diagonals(t0, d13, d03) == 0);
  CHECK(hom_dim_diagonals(t0, d03, d13) == 1);
  CHECK_THROWS_AS(hom_dim_diagonals(t0, Diagonal(2, 0, 2), d13),
                  std::invalid_argument);
}

TEST_CASE("pivoting-path oracle on the pentagon") {
  const Triangulation t0 = Triangulation::snake(2);
  const Diagonal d13(2, 1, 3), d14(2, 1, 4), d03(2, 0, 3);
  CHECK(mesh_normal_form_oracle(t0, d13, d13) == 1);
  CHECK(mesh_normal_form_oracle(t0, d13, d14) == 1);
  CHECK(mesh_normal_form_oracle(t0, d14, d13) == 0);
  CHECK(mesh_normal_form_oracle(t0, d13, d03) == 0);
  CHECK(mesh_normal_form_oracle(t0, d03, d13) == 1);
}

TEST_CASE("three hom routes agree") {
  for (int n = 1; n <= 4; ++n)
    for (const Triangulation& t : enumerate_triangulations(n)) {
      const Quiver q = quiver_from_triangulation(t);
      for (const Diagonal& d : all_diagonals(n)) {
        if (t.contains(d)) continue;
        for (const Diagonal& d2 : all_diagonals(n)) {
          if (t.contains(d2)) continue;
          const int want = hom_dim_modules(q, theta(t, d), theta(t, d2));
          CHECK(hom_dim_diagonals(t, d, d2) == want);
          CHECK(mesh_normal_form_oracle(t, d, d2) == want);
        }
      }
    }
}

TEST_CASE("orbit classes and their representatives") {
  // The class of (i,j) also carries (i+j+1, n+1-j) and all translates by
  // the vertex count; the stored representative is the smallest.
  CHECK(orbit_index(2, 1, 1) == OrbitIndex{1, 1});
  CHECK(orbit_index(2, 3, 2) == OrbitIndex{1, 1});
  CHECK(orbit_index(2, 6, 1) == OrbitIndex{1, 1});
  CHECK(orbit_index(2, -4, 1) == OrbitIndex{1, 1});
  CHECK(OrbitIndex{1, 1}.str() == "(1,1)");
  CHECK_THROWS_AS(orbit_index(2, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(orbit_index(2, 0, 3), std::invalid_argument);

  CHECK(kappa_of_diagonal(Diagonal(2, 0, 2)) == OrbitIndex{0, 1});
  CHECK(kappa_of_diagonal(Diagonal(2, 0, 3)) == OrbitIndex{0, 2});
  CHECK(kappa_of_diagonal(Diagonal(2, 1, 3)) == OrbitIndex{1, 1});
  CHECK(kappa_of_diagonal(Diagonal(2, 1, 4)) == OrbitIndex{1, 2});
  CHECK(kappa_of_diagonal(Diagonal(2, 2, 4)) == OrbitIndex{2, 1});

  // Either endpoint may play the corner: lifting (a,b) to (b, a+m) reaches
  // the same class.
  for (int n = 1; n <= 5; ++n) {
    const int m = polygon_vertices(n);
    for (const Diagonal& d : all_diagonals(n)) {
      CHECK(kappa_of_diagonal(d) == orbit_index(n, d.a(), d.b() - d.a() - 1));
      CHECK(kappa_of_diagonal(d) ==
            orbit_index(n, d.b(), d.a() + m - d.b() - 1));
    }
  }
}

TEST_CASE("suspension walks through every class") {
  // Rank 2: five classes in a single suspension cycle.
  const OrbitIndex c11{1, 1};
  std::vector<OrbitIndex> chain{c11};
  for (int i = 0; i < 5; ++i) chain.push_back(shift(2, chain.back()));
  CHECK(chain == std::vector<OrbitIndex>{{1, 1}, {0, 1}, {1, 2}, {0, 2},
                                         {2, 1}, {1, 1}});
}

TEST_CASE("orbit hom dimensions at rank two") {
  CHECK(orbit_hom_dim(2, {1, 1}, {1, 1}) == 1);
  CHECK(orbit_hom_dim(2, {1, 1}, {1, 2}) == 1);
  CHECK(orbit_hom_dim(2, {1, 1}, {2, 1}) == 0);
  CHECK(orbit_hom_dim(2, {1, 1}, {0, 1}) == 0);
  CHECK(orbit_hom_dim(2, {2, 1}, {2, 2}) == 1);  // (2,2) is glide input

  CHECK(orbit_region_contains(2, 1, 1, 1, 1));
  CHECK(orbit_region_contains(2, 1, 1, 1, 2));
  CHECK(!orbit_region_contains(2, 1, 1, 2, 1));
  CHECK(orbit_region_contains(2, 1, 2, 1, 2));
  CHECK(orbit_region_contains(2, 1, 2, 2, 1));
  CHECK(!orbit_region_contains(2, 1, 2, 1, 1));
}

TEST_CASE("extensions detect crossings") {
  const Diagonal d02(2, 0, 2), d13(2, 1, 3), d03(2, 0, 3);
  CHECK(ext1(d02, d13) == 1);
  CHECK(ext1(d13, d02) == 1);
  CHECK(ext1(d02, d03) == 0);
  CHECK(ext1(d13, d13) == 0);
  CHECK_THROWS_AS(ext1(d02, Diagonal(3, 0, 2)), std::invalid_argument);

  for (int n = 1; n <= 4; ++n)
    for (const Diagonal& d : all_diagonals(n))
      for (const Diagonal& d2 : all_diagonals(n))
        CHECK(ext1(d, d2) == (crosses(d, d2) ? 1 : 0));
}

TEST_CASE("rigid maximal sets are the triangulations") {
  // Subsets of n pairwise extension-free diagonals biject with the
  // triangulations, so their census is the Catalan count.
  const auto cat = catalan(6);
  for (int n = 1; n <= 4; ++n) {
    const auto ds = all_diagonals(n);
    const int total = static_cast<int>(ds.size());
    long long found = 0;
    std::vector<int> pick;
    const auto scan = [&](auto&& self, int from) -> void {
      if (static_cast<int>(pick.size()) == n) {
        ++found;
        return;
      }
      for (int i = from; i < total; ++i) {
        bool ok = true;
        for (int j : pick) ok = ok && ext1(ds[j], ds[i]) == 0;
        if (!ok) continue;
        pick.push_back(i);
        self(self, i + 1);
        pick.pop_back();
      }
    };
    scan(scan, 0);
    CHECK(found == cat[n + 1]);
  }
}

}  // TEST_SUITE
