#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "clak/polygon.hpp"
#include "clak/quiver.hpp"
#include "clak/repcat.hpp"

using namespace clak;

namespace {

std::vector<int> add(std::vector<int> a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace

TEST_SUITE("repcat") {

TEST_CASE("crossing supports on the pentagon") {
  const Triangulation t0 = Triangulation::snake(2);
  CHECK(theta(t0, Diagonal(2, 1, 3)) == IndecModule{{0, 1}});
  CHECK(theta(t0, Diagonal(2, 0, 3)) == IndecModule{{1}});
  CHECK(theta(t0, Diagonal(2, 1, 4)) == IndecModule{{0}});
  CHECK_THROWS_AS(theta(t0, Diagonal(2, 0, 2)), std::invalid_argument);

  CHECK(IndecModule{{0, 1}}.str() == "{1,2}");
  CHECK(dimension_vector(2, IndecModule{{0, 1}}) == std::vector<int>{1, 1});
  CHECK(dimension_vector(3, IndecModule{{1}}) == std::vector<int>{0, 1, 0});
}

TEST_CASE("diagonal and support determine each other") {
  const Triangulation t0 = Triangulation::snake(2);
  CHECK(phi(t0, IndecModule{{0, 1}}) == Diagonal(2, 1, 3));
  CHECK(phi(t0, IndecModule{{0}}) == Diagonal(2, 1, 4));
  CHECK_THROWS_AS(phi(t0, IndecModule{{5}}), std::invalid_argument);

  for (int n = 1; n <= 5; ++n)
    for (const Triangulation& t : enumerate_triangulations(n))
      for (const Diagonal& d : all_diagonals(n)) {
        if (t.contains(d)) continue;
        CHECK(phi(t, theta(t, d)) == d);
      }
}

TEST_CASE("indecomposable enumeration") {
  const Quiver a2(2, {{0, 1}}, {});
  const auto ind2 = enumerate_indecomposables(a2);
  CHECK(ind2 == std::vector<IndecModule>{{{0}}, {{0, 1}}, {{1}}});

  CHECK(enumerate_indecomposables(
            quiver_from_triangulation(Triangulation::snake(3)))
            .size() == 6);

  // With an oriented 3-cycle the full vertex set is not a path, yet the
  // count still comes out to n(n+1)/2.
  const Triangulation inner(3, {Diagonal(3, 0, 2), Diagonal(3, 2, 4),
                                Diagonal(3, 0, 4)});
  const auto ind3 = enumerate_indecomposables(quiver_from_triangulation(inner));
  CHECK(ind3.size() == 6);
  CHECK(std::find(ind3.begin(), ind3.end(), IndecModule{{0, 1, 2}}) ==
        ind3.end());
}

TEST_CASE("hom dimensions on the pentagon") {
  const Quiver q = quiver_from_triangulation(Triangulation::snake(2));
  const IndecModule m1{{0}}, m2{{1}}, m12{{0, 1}};
  // Rows indexed by source, columns by target, order m1, m2, m12.
  const std::vector<IndecModule> mods{m1, m2, m12};
  const int want[3][3] = {{1, 0, 0}, {0, 1, 1}, {1, 0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(hom_dim_modules(q, mods[i], mods[j]) == want[i][j]);
}

TEST_CASE("projectives and injectives") {
  const Quiver a2(2, {{0, 1}}, {});
  CHECK(projective(a2, 0) == IndecModule{{0, 1}});
  CHECK(projective(a2, 1) == IndecModule{{1}});
  CHECK(injective(a2, 0) == IndecModule{{0}});
  CHECK(injective(a2, 1) == IndecModule{{0, 1}});
  CHECK_THROWS_AS(projective(a2, 2), std::invalid_argument);

  // Around an oriented triangle the zero relations cut every path after one
  // step.
  const Triangulation inner(3, {Diagonal(3, 0, 2), Diagonal(3, 2, 4),
                                Diagonal(3, 0, 4)});
  const Quiver q = quiver_from_triangulation(inner);
  for (int i = 0; i < 3; ++i) {
    CHECK(projective(q, i).support.size() == 2);
    CHECK(injective(q, i).support.size() == 2);
  }
}

TEST_CASE("translate by clockwise rotation") {
  const Triangulation t0 = Triangulation::snake(2);
  // Rotating (0,3) lands on (2,4), inside the triangulation: projective.
  CHECK(!ar_translate(t0, IndecModule{{1}}).has_value());
  CHECK(!ar_translate(t0, IndecModule{{0, 1}}).has_value());
  // Rotating (1,4) lands on (0,3), outside: the translate is its support.
  CHECK(ar_translate(t0, IndecModule{{0}}) == IndecModule{{1}});

  const Triangulation t3 = Triangulation::snake(3);
  CHECK(ar_translate(t3, IndecModule{{0}}) == IndecModule{{1, 2}});
}

TEST_CASE("module quiver of the pentagon") {
  const ARQuiver ar = ar_quiver(Triangulation::snake(2));
  CHECK(ar.modules ==
        std::vector<IndecModule>{{{0}}, {{0, 1}}, {{1}}});
  CHECK(ar.arrows == std::vector<std::pair<int, int>>{{1, 0}, {2, 1}});
  CHECK(ar.is_projective == std::vector<char>{0, 1, 1});
  CHECK(ar.is_injective == std::vector<char>{1, 1, 0});
  CHECK(ar.translate == std::vector<int>{2, -1, -1});
}

TEST_CASE("mesh additivity on the hexagon") {
  const Triangulation t3 = Triangulation::snake(3);
  const ARQuiver ar = ar_quiver(t3);
  CHECK(ar.modules.size() == 6);
  int translates = 0;
  for (size_t i = 0; i < ar.modules.size(); ++i) {
    if (ar.translate[i] < 0) {
      CHECK(ar.is_projective[i]);
      continue;
    }
    ++translates;
    std::vector<int> mid(3, 0);
    for (const auto& [a, b] : ar.arrows)
      if (b == static_cast<int>(i))
        mid = add(mid, dimension_vector(3, ar.modules[a]));
    CHECK(add(dimension_vector(3, ar.modules[i]),
              dimension_vector(3, ar.modules[ar.translate[i]])) == mid);
  }
  CHECK(translates == 3);  // six indecomposables, three projective
}

TEST_CASE("projectives and injectives come from rotating the triangulation") {
  for (int n = 1; n <= 5; ++n)
    for (const Triangulation& t : enumerate_triangulations(n)) {
      const Quiver q = quiver_from_triangulation(t);
      std::set<IndecModule> proj, inj;
      for (int i = 0; i < n; ++i) {
        proj.insert(projective(q, i));
        inj.insert(injective(q, i));
      }
      // A rotated member always crosses the original, so it never stays in
      // the triangulation and the rotated sets are full size.
      std::set<IndecModule> ccw, cw;
      for (const Diagonal& d : t.diagonals()) {
        ccw.insert(theta(t, rotated(d, 1)));
        cw.insert(theta(t, rotated(d, -1)));
      }
      CHECK(proj == ccw);
      CHECK(inj == cw);
    }
}

}  // TEST_SUITE
