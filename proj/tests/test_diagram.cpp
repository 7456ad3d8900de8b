#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "paper_tables.hpp"
#include "pdm/diagram.hpp"
#include "pdm/error.hpp"

using namespace pdm;

namespace {
  // Upper edge {2,3}, lower edge {1',2'}, transversal {1,3'}.
  Diagram const sample
      = Diagram::from_edges(4, {{2, 3}, {-1, -2}, {1, -3}});
}  // namespace

TEST_CASE("word_of") {
  CHECK(word_of(sample).str() == "UUDFFDUD");
  CHECK(word_of(Diagram(1, {Diagram::none, Diagram::none})).str() == "FF");
  auto jones = Diagram::from_edges(4, {{2, 3}, {-1, -2}, {1, -3}, {4, -4}});
  CHECK(word_of(jones).str() == "UUDUDDUD");  // (()())()
}

TEST_CASE("diagram_of") {
  MotzkinWord const w("UUDFFDUD");
  CHECK(w.heights() == std::vector<int>{0, 1, 2, 1, 1, 1, 0, 1, 0});
  CHECK(w.levels() == std::vector<int>{0, 1, 1, 1, 1, 0, 0, 0});
  auto d = diagram_of(w);
  CHECK(d.mate(0) == 5);
  CHECK(d.mate(1) == 2);
  CHECK(d.mate(6) == 7);
  CHECK(d == sample);
  CHECK(rank(diagram_of(MotzkinWord("FFFFFF"))) == 0);

  CHECK_THROWS_AS(MotzkinWord("DU"), ValidationError);
  CHECK_THROWS_AS(MotzkinWord("UUDF"), ValidationError);
  CHECK_THROWS_AS(MotzkinWord("UDF"), ValidationError);
  CHECK_THROWS_AS(MotzkinWord("UXDF"), ValidationError);
}

TEST_CASE("validation at construction") {
  CHECK_THROWS_AS(Diagram(2, {2, 3, 0, 1}), ValidationError);  // crossing
  CHECK_THROWS_AS(Diagram(2, {1, 2, 0, 1}), ValidationError);
  CHECK_THROWS_AS(Diagram(2, {0, Diagram::none, Diagram::none, Diagram::none}),
                  ValidationError);
  CHECK_THROWS_AS(Diagram(2, {1, 0}), ValidationError);
  CHECK_THROWS_AS(Diagram::from_edges(2, {{1, 3}}), ValidationError);
}

TEST_CASE("pair_of and diagram_of_pair") {
  auto p = pair_of(sample);
  CHECK(p.left.str() == "UUDF");
  CHECK(p.right.str() == "UDUF");
  CHECK(p.rank() == 1);

  auto projection = diagram_of_pair(SemiWord("UUDF"), SemiWord("UUDF"));
  CHECK(projection
        == Diagram::from_edges(4, {{2, 3}, {-2, -3}, {1, -1}}));
  CHECK(multiply(projection, projection).diagram == projection);
  CHECK(projection.transpose() == projection);

  CHECK_THROWS_AS(diagram_of_pair(SemiWord("UUDF"), SemiWord("UDUD")),
                  ValidationError);
  CHECK_THROWS_AS(diagram_of_pair(SemiWord("UUD"), SemiWord("UDUF")),
                  ValidationError);
  CHECK_THROWS_AS(SemiWord("UDDU"), ValidationError);
}

TEST_CASE("round trips over every diagram up to degree 5") {
  for (std::size_t n = 0; n <= 5; ++n) {
    auto const all = oracle::all_diagrams(n, false);
    CHECK(all.size() == oracle::motzkin(2 * n));
    for (auto const& d : all) {
      REQUIRE(diagram_of(word_of(d)) == d);
      auto const p = pair_of(d);
      REQUIRE(diagram_of_pair(p) == d);
      REQUIRE(pair_of(diagram_of_pair(p)) == p);
      REQUIRE(static_cast<std::size_t>(p.rank()) == rank(d));
    }
  }
}

TEST_CASE("cardinalities and rank parity") {
  for (std::size_t n = 0; n <= 8; ++n) {
    CHECK(oracle::all_diagrams(n, false).size() == tables::motzkin_size[n]);
    auto const jones = oracle::all_diagrams(n, true);
    CHECK(jones.size() == tables::jones_size[n]);
    CHECK(jones.size() == oracle::catalan(n));
    for (auto const& d : jones) {
      REQUIRE(d.is_jones());
      REQUIRE(rank(d) % 2 == n % 2);
    }
  }
}

TEST_CASE("rank") {
  for (std::size_t n = 0; n <= 6; ++n) {
    CHECK(rank(Diagram::identity(n)) == n);
  }
  CHECK(rank(sample) == 1);
  CHECK(rank(diagram_of(MotzkinWord("FFFFFFFF"))) == 0);
}

TEST_CASE("multiply") {
  SUBCASE("identity") {
    for (std::size_t n = 0; n <= 4; ++n) {
      auto const id = Diagram::identity(n);
      for (auto const& d : oracle::all_diagrams(n, false)) {
        auto const left = multiply(id, d);
        REQUIRE(left.diagram == d);
        REQUIRE(left.floating == 0);
        auto const right = multiply(d, id);
        REQUIRE(right.diagram == d);
        REQUIRE(right.floating == 0);
      }
    }
  }
  SUBCASE("hook squared leaves one loop") {
    auto const h  = Diagram::from_edges(2, {{1, 2}, {-1, -2}});
    auto const hh = multiply(h, h);
    CHECK(hh.diagram == h);
    CHECK(hh.floating == 1);
  }
  SUBCASE("lone middle vertices float") {
    auto const empty = diagram_of(MotzkinWord("FFFF"));
    CHECK(multiply(empty, empty).floating == 2);
  }
  SUBCASE("degree mismatch") {
    CHECK_THROWS_AS(multiply(Diagram::identity(2), Diagram::identity(3)),
                    ValidationError);
  }
  SUBCASE("rank never grows") {
    auto const all = oracle::all_diagrams(3, false);
    for (auto const& a : all) {
      for (auto const& b : all) {
        auto const ab = multiply(a, b).diagram;
        REQUIRE(rank(ab) <= std::min(rank(a), rank(b)));
      }
    }
  }
}

TEST_CASE("associativity and the loop cocycle on random triples") {
  std::mt19937_64 rng(20241017);
  for (std::size_t n = 1; n <= 6; ++n) {
    auto const pool = oracle::all_diagrams(n, false);
    for (int trial = 0; trial < 2000; ++trial) {
      auto const& a  = oracle::pick(pool, rng);
      auto const& b  = oracle::pick(pool, rng);
      auto const& c  = oracle::pick(pool, rng);
      auto const  ab = multiply(a, b);
      auto const  bc = multiply(b, c);
      auto const  l  = multiply(ab.diagram, c);
      auto const  r  = multiply(a, bc.diagram);
      REQUIRE(l.diagram == r.diagram);
      REQUIRE(ab.floating + l.floating == r.floating + bc.floating);
    }
  }
}

TEST_CASE("transpose is an anti-automorphism") {
  auto const all = oracle::all_diagrams(3, false);
  for (auto const& a : all) {
    REQUIRE(a.transpose().transpose() == a);
    for (auto const& b : all) {
      auto const ab = multiply(a, b);
      auto const ba = multiply(b.transpose(), a.transpose());
      REQUIRE(ba.diagram == ab.diagram.transpose());
      REQUIRE(ba.floating == ab.floating);
    }
  }
}

TEST_CASE("is_partial_jones") {
  // (()..)() and (().).()
  CHECK(is_partial_jones(diagram_of(MotzkinWord("UUDFFDUD"))));
  CHECK_FALSE(is_partial_jones(diagram_of(MotzkinWord("UUDFDFUD"))));
  for (std::size_t n = 0; n <= 4; ++n) {
    for (auto const& d : oracle::all_diagrams(n, true)) {
      REQUIRE(is_partial_jones(d));
    }
  }
  for (std::size_t n = 0; n <= 5; ++n) {
    for (auto const& d : oracle::all_diagrams(n, false)) {
      REQUIRE(is_partial_jones(d) == oracle::completable_by_parity(d));
    }
  }
}
