#include <doctest.h>

#include <random>
#include <stdexcept>

#include "fca/context_io.hpp"
#include "fca/generate.hpp"
#include "fca/lattice.hpp"
#include "fca/mining.hpp"
#include "fixtures.hpp"

using fca::Concept;
using fca::ConceptLattice;
using fca::CoverEdge;
using fca::FormalContext;

namespace {

// Reflexive-transitive closure of the cover edges, for reduction checks.
std::vector<std::vector<bool>> reachability(const ConceptLattice& lattice) {
  const std::size_t n = lattice.concepts.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
  for (const CoverEdge& e : lattice.covers) reach[e.child][e.parent] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  return reach;
}

}  // namespace

TEST_CASE("order_leq on the fixture") {
  const FormalContext ctx = fixtures::make_k1();
  const auto concepts = fca::enumerate_concepts(ctx);
  // Canonical order: 0 = top {b}, 1 = {a,b}, 2 = {b,c}, 3 = bottom {a,b,c}.
  CHECK(fca::order_leq(concepts[1], concepts[0]));
  CHECK_FALSE(fca::order_leq(concepts[0], concepts[1]));
  CHECK(fca::order_leq(concepts[1], concepts[1]));  // reflexive
  CHECK_FALSE(fca::order_leq(concepts[1], concepts[2]));
  CHECK_FALSE(fca::order_leq(concepts[2], concepts[1]));
}

TEST_CASE("build_lattice on the fixture") {
  const FormalContext ctx = fixtures::make_k1();
  const ConceptLattice lattice = fca::build_lattice(ctx, fca::enumerate_concepts(ctx));
  CHECK(lattice.top_index == 0);
  CHECK(lattice.bottom_index == 3);
  const std::vector<CoverEdge> expected{{1, 0}, {2, 0}, {3, 1}, {3, 2}};
  CHECK(lattice.covers == expected);
}

TEST_CASE("single-concept lattice has no edges and top equals bottom") {
  const FormalContext ctx = fca::parse_cxt("B\n\n2\n2\n\nu\nv\nx\ny\nXX\nXX\n");
  const ConceptLattice lattice = fca::build_lattice(ctx, fca::enumerate_concepts(ctx));
  CHECK(lattice.concepts.size() == 1);
  CHECK(lattice.covers.empty());
  CHECK(lattice.top_index == 0);
  CHECK(lattice.bottom_index == 0);
}

TEST_CASE("nested rows give a chain") {
  const FormalContext ctx = fca::parse_cxt("B\n\n3\n3\n\no1\no2\no3\na\nb\nc\nX..\nXX.\nXXX\n");
  const ConceptLattice lattice = fca::build_lattice(ctx, fca::enumerate_concepts(ctx));
  REQUIRE(lattice.concepts.size() == 3);
  const std::vector<CoverEdge> expected{{1, 0}, {2, 1}};
  CHECK(lattice.covers == expected);
}

TEST_CASE("build_lattice validates its input") {
  const FormalContext ctx = fixtures::make_k1();
  auto concepts = fca::enumerate_concepts(ctx);
  SUBCASE("duplicated concept") {
    concepts.push_back(concepts[1]);
    CHECK_THROWS_WITH_AS(fca::build_lattice(ctx, std::move(concepts)),
                         doctest::Contains("duplicated"), std::invalid_argument);
  }
  SUBCASE("missing concept") {
    concepts.erase(concepts.begin() + 1);  // drop {a,b}; the attribute concept of a
    CHECK_THROWS_WITH_AS(fca::build_lattice(ctx, std::move(concepts)),
                         doctest::Contains("incomplete"), std::invalid_argument);
  }
  SUBCASE("non-concept element") {
    concepts[1].intent = fixtures::attributes(ctx, {0});  // {a} is not closed
    CHECK_THROWS_AS(fca::build_lattice(ctx, std::move(concepts)), std::invalid_argument);
  }
  SUBCASE("empty set") {
    CHECK_THROWS_AS(fca::build_lattice(ctx, {}), std::invalid_argument);
  }
}

TEST_CASE("meet and join on the fixture") {
  const FormalContext ctx = fixtures::make_k1();
  const auto concepts = fca::enumerate_concepts(ctx);
  const auto pair = [&](std::size_t i, std::size_t j) {
    return std::vector<Concept>{concepts[i], concepts[j]};
  };

  SUBCASE("meet of incomparable concepts is the bottom") {
    CHECK(fca::meet(ctx, pair(1, 2)) == concepts[3]);
  }
  SUBCASE("join of incomparable concepts is the top") {
    CHECK(fca::join(ctx, pair(1, 2)) == concepts[0]);
  }
  SUBCASE("singletons are fixed points") {
    CHECK(fca::meet(ctx, {&concepts[2], 1}) == concepts[2]);
    CHECK(fca::join(ctx, {&concepts[2], 1}) == concepts[2]);
  }
  SUBCASE("comparable pairs collapse to the endpoint") {
    CHECK(fca::meet(ctx, pair(0, 1)) == concepts[1]);
    CHECK(fca::join(ctx, pair(3, 2)) == concepts[2]);
  }
  SUBCASE("collections larger than a pair") {
    const std::vector<Concept> three{concepts[0], concepts[1], concepts[2]};
    CHECK(fca::meet(ctx, three) == concepts[3]);
    CHECK(fca::join(ctx, three) == concepts[0]);
  }
  SUBCASE("empty collections are rejected") {
    CHECK_THROWS_AS(fca::meet(ctx, {}), std::invalid_argument);
    CHECK_THROWS_AS(fca::join(ctx, {}), std::invalid_argument);
  }
}

TEST_CASE("iceberg filtering on the fixture") {
  const auto concepts = fca::enumerate_concepts(fixtures::make_k1());
  SUBCASE("50% keeps only the top") {
    const auto kept = fca::iceberg(concepts, 50.0);
    REQUIRE(kept.size() == 1);
    CHECK(kept[0] == concepts[0]);
  }
  SUBCASE("0% keeps everything") {
    CHECK(fca::iceberg(concepts, 0.0).size() == 4);
  }
  SUBCASE("33% keeps the three non-bottom concepts") {
    const auto kept = fca::iceberg(concepts, 33.0);
    REQUIRE(kept.size() == 3);
    CHECK(kept[0] == concepts[0]);
    CHECK(kept[1] == concepts[1]);
    CHECK(kept[2] == concepts[2]);
  }
  SUBCASE("threshold must be a percentage") {
    CHECK_THROWS_AS(fca::iceberg(concepts, 101.0), std::invalid_argument);
    CHECK_THROWS_AS(fca::iceberg(concepts, -1.0), std::invalid_argument);
  }
}

TEST_CASE("cover diagram of a filtered subset") {
  // The 33% iceberg of the fixture keeps {top, {a,b}, {b,c}}: an
  // upward-closed order with a unique top but two minimal elements.
  const FormalContext ctx = fixtures::make_k1();
  const auto kept = fca::iceberg(fca::enumerate_concepts(ctx), 33.0);
  const ConceptLattice diagram = fca::build_cover_diagram(ctx, kept);
  REQUIRE(diagram.concepts.size() == 3);
  CHECK(diagram.top_index == 0);
  CHECK(diagram.bottom_index == ConceptLattice::npos);
  const std::vector<CoverEdge> expected{{1, 0}, {2, 0}};
  CHECK(diagram.covers == expected);
  // No completeness requirement, unlike build_lattice.
  CHECK_THROWS_AS(fca::build_lattice(ctx, kept), std::invalid_argument);
}

TEST_CASE("DOT export") {
  const FormalContext ctx = fixtures::make_k1();
  const ConceptLattice lattice = fca::build_lattice(ctx, fca::enumerate_concepts(ctx));
  const std::string dot = fca::export_dot(ctx, lattice);

  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("c0 [label=\"{b}\\n100.0%\"]") != std::string::npos);
  CHECK(dot.find("c1 [label=\"{a, b}\\n33.3%\"]") != std::string::npos);
  CHECK(dot.find("c1 -> c0;") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = dot.find("->", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(edges == 4);

  SUBCASE("byte identical on repeat") {
    CHECK(fca::export_dot(ctx, lattice) == dot);
  }
  SUBCASE("single node graph") {
    const FormalContext full = fca::parse_cxt("B\n\n1\n1\n\no\na\nX\n");
    const ConceptLattice single = fca::build_lattice(full, fca::enumerate_concepts(full));
    const std::string single_dot = fca::export_dot(full, single);
    CHECK(single_dot.find("c0") != std::string::npos);
    CHECK(single_dot.find("->") == std::string::npos);
  }
}

TEST_CASE("lattice laws on random contexts") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng() % 10);
    const std::size_t m = 2 + static_cast<std::size_t>(rng() % 7);
    const FormalContext ctx =
        fca::random_context(n, m, 0.2 + 0.6 * fixtures::uniform01(rng), rng());
    const auto concepts = fca::enumerate_concepts(ctx);
    const auto member = [&](const Concept& c) {
      return std::find(concepts.begin(), concepts.end(), c) != concepts.end();
    };

    for (std::size_t i = 0; i < concepts.size(); ++i) {
      for (std::size_t j = i; j < concepts.size(); ++j) {
        const std::vector<Concept> ab{concepts[i], concepts[j]};
        const std::vector<Concept> ba{concepts[j], concepts[i]};
        const Concept m1 = fca::meet(ctx, ab);
        const Concept j1 = fca::join(ctx, ab);
        // Meets and joins stay inside the concept set and commute.
        CHECK(member(m1));
        CHECK(member(j1));
        CHECK(m1 == fca::meet(ctx, ba));
        CHECK(j1 == fca::join(ctx, ba));
        // Bounds and absorption.
        CHECK(fca::order_leq(m1, concepts[i]));
        CHECK(fca::order_leq(concepts[i], j1));
        const std::vector<Concept> absorb{concepts[i], m1};
        CHECK(fca::join(ctx, absorb) == concepts[i]);
        // Support is monotone along the order.
        if (fca::order_leq(concepts[i], concepts[j]))
          CHECK(concepts[i].support_percent <= concepts[j].support_percent + 1e-12);
      }
    }

    // Iceberg output is upward closed under the order.
    const double threshold = 100.0 * fixtures::uniform01(rng);
    const auto kept = fca::iceberg(concepts, threshold);
    for (const Concept& low : kept)
      for (const Concept& high : concepts)
        if (fca::order_leq(low, high))
          CHECK(std::find(kept.begin(), kept.end(), high) != kept.end());

    // Covers are a transitive reduction: their closure reproduces the order,
    // and no cover edge is implied by two others.
    const ConceptLattice lattice = fca::build_lattice(ctx, concepts);
    REQUIRE(lattice.top_index != ConceptLattice::npos);
    REQUIRE(lattice.bottom_index != ConceptLattice::npos);
    CHECK(lattice.concepts[lattice.top_index].extent == ctx.full_objects());
    for (const Concept& c : lattice.concepts)
      CHECK(c.intent.is_subset_of(lattice.concepts[lattice.bottom_index].intent));
    const auto reach = reachability(lattice);
    for (std::size_t i = 0; i < concepts.size(); ++i)
      for (std::size_t j = 0; j < concepts.size(); ++j)
        CHECK(reach[i][j] == fca::order_leq(lattice.concepts[i], lattice.concepts[j]));
    for (const CoverEdge& e : lattice.covers)
      for (std::size_t k = 0; k < concepts.size(); ++k)
        if (k != e.child && k != e.parent) {
          const bool implied = reach[e.child][k] && reach[k][e.parent];
          CHECK_FALSE(implied);
        }
  }
}
