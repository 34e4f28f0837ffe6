#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"

using namespace dynlog;
using namespace dynlog::testing;

namespace {

// Independent oracle: the set of minimal upper bounds of a pair, by full
// enumeration. A join exists iff there is exactly one.
std::vector<int> minimal_upper_bounds(const Poset &p, int a, int b) {
  std::vector<int> ubs;
  for (int u = 0; u < p.size(); ++u)
    if (p.leq(a, u) && p.leq(b, u))
      ubs.push_back(u);
  std::vector<int> minimal;
  for (int u : ubs) {
    bool is_min = true;
    for (int v : ubs)
      if (v != u && p.leq(v, u))
        is_min = false;
    if (is_min)
      minimal.push_back(u);
  }
  return minimal;
}

} // namespace

TEST_CASE("build_poset: two-element chain") {
  Poset p = build_poset({"0", "1"}, {{"0", "1"}});
  CHECK(p.bottom == p.index_of("0"));
  CHECK(p.top == p.index_of("1"));
  CHECK(p.leq(p.index_of("0"), p.index_of("1")));
  CHECK_FALSE(p.leq(p.index_of("1"), p.index_of("0")));
}

TEST_CASE("build_poset: diamond has incomparable middle elements") {
  TruthLattice L = diamond();
  int a = L.poset.index_of("a"), b = L.poset.index_of("b");
  CHECK_FALSE(L.leq(a, b));
  CHECK_FALSE(L.leq(b, a));
  CHECK(L.meet(a, b) == L.bottom());
  CHECK(L.join(a, b) == L.top());
}

TEST_CASE("build_poset: cyclic covers rejected") {
  CHECK_THROWS_WITH_AS(build_poset({"0", "a", "b", "1"},
                                   {{"0", "a"}, {"a", "b"}, {"b", "a"}, {"a", "1"}}),
                       doctest::Contains("cycle"), error);
  try {
    build_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    FAIL("expected cycle_detected");
  } catch (const error &e) {
    CHECK(e.code() == errc::cycle_detected);
  }
}

TEST_CASE("build_poset: unbounded posets rejected") {
  try {
    build_poset({"a", "b"}, {});
    FAIL("expected no_bottom");
  } catch (const error &e) {
    CHECK(e.code() == errc::no_bottom);
  }
  try {
    // Bottom exists, two maximal elements.
    build_poset({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}});
    FAIL("expected no_top");
  } catch (const error &e) {
    CHECK(e.code() == errc::no_top);
  }
}

TEST_CASE("as_complete_lattice: pair without a join rejected") {
  // Hexagon: a,b below both c,d; {a,b} has minimal upper bounds {c,d}.
  Poset p = build_poset({"0", "a", "b", "c", "d", "1"},
                        {{"0", "a"},
                         {"0", "b"},
                         {"a", "c"},
                         {"a", "d"},
                         {"b", "c"},
                         {"b", "d"},
                         {"c", "1"},
                         {"d", "1"}});
  auto mubs = minimal_upper_bounds(p, p.index_of("a"), p.index_of("b"));
  REQUIRE(mubs.size() == 2); // the oracle confirms the missing join
  try {
    as_complete_lattice(p);
    FAIL("expected not_a_lattice");
  } catch (const error &e) {
    CHECK(e.code() == errc::not_a_lattice);
  }
}

TEST_CASE("as_complete_lattice: one-element poset rejected") {
  Poset p = build_poset({"x"}, {});
  try {
    as_complete_lattice(p);
    FAIL("expected trivial_lattice");
  } catch (const error &e) {
    CHECK(e.code() == errc::trivial_lattice);
  }
}

TEST_CASE("lattice tables agree with the minimal-upper-bound oracle") {
  for (const TruthLattice &L : {bool2(), chain3(), diamond()}) {
    for (int a = 0; a < L.size(); ++a)
      for (int b = 0; b < L.size(); ++b) {
        auto mubs = minimal_upper_bounds(L.poset, a, b);
        REQUIRE(mubs.size() == 1);
        CHECK(L.join(a, b) == mubs[0]);
      }
  }
}

TEST_CASE("meet_subset / join_subset") {
  TruthLattice L = diamond();
  int a = L.poset.index_of("a"), b = L.poset.index_of("b");
  std::vector<int> ab{a, b};
  CHECK(L.meet_subset(ab) == L.bottom());
  CHECK(L.join_subset(ab) == L.top());
  CHECK(L.meet_subset({}) == L.top());
  CHECK(L.join_subset({}) == L.bottom());

  TruthLattice C = chain3();
  std::vector<int> m1{C.poset.index_of("m"), C.poset.index_of("1")};
  CHECK(C.meet_subset(m1) == C.poset.index_of("m"));

  std::vector<int> bad{99};
  CHECK_THROWS_AS((void)L.meet_subset(bad), error);
}

TEST_CASE("meet_subset is identity on singletons and order-reversing") {
  TruthLattice L = diamond();
  for (int e = 0; e < L.size(); ++e) {
    std::vector<int> one{e};
    CHECK(L.meet_subset(one) == e);
  }
  // A within B implies meet(B) <= meet(A): all subsets of the diamond.
  for (unsigned maskA = 0; maskA < 16; ++maskA)
    for (unsigned maskB = 0; maskB < 16; ++maskB) {
      if ((maskA & maskB) != maskA)
        continue;
      std::vector<int> xsA, xsB;
      for (int e = 0; e < 4; ++e) {
        if (maskA & (1u << e))
          xsA.push_back(e);
        if (maskB & (1u << e))
          xsB.push_back(e);
      }
      CHECK(L.leq(L.meet_subset(xsB), L.meet_subset(xsA)));
    }
}

TEST_CASE("lattice laws hold on all small lattices") {
  for (const TruthLattice &L : {bool2(), chain3(), diamond()}) {
    const int n = L.size();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        CHECK(L.meet(x, y) == L.meet(y, x));
        CHECK(L.join(x, y) == L.join(y, x));
        CHECK(L.meet(x, L.join(x, y)) == x); // absorption
        CHECK(L.join(x, L.meet(x, y)) == x);
        for (int z = 0; z < n; ++z) {
          CHECK(L.meet(x, L.meet(y, z)) == L.meet(L.meet(x, y), z));
          CHECK(L.join(x, L.join(y, z)) == L.join(L.join(x, y), z));
        }
      }
  }
}

TEST_CASE("construction-time closure invariants") {
  TruthLattice L = diamond();
  const Poset &p = L.poset;
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      if (p.leq(a, b) && p.leq(b, a))
        CHECK(a == b);
      for (int c = 0; c < p.size(); ++c)
        if (p.leq(a, b) && p.leq(b, c))
          CHECK(p.leq(a, c));
    }
}

TEST_CASE("check_full_set: projections of {0,1}^S form a full family") {
  // Source: the Boolean cube over three states; h_s is the s-th projection.
  PropositionAlgebra cube = crisp_algebra(3);
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < cube.size(); ++i)
    for (int j = 0; j < cube.size(); ++j)
      if (i != j && cube.member_leq(i, j))
        covers.emplace_back(cube.members[i].name, cube.members[j].name);
  std::vector<std::string> names;
  for (const auto &m : cube.members)
    names.push_back(m.name);
  Poset source = build_poset(names, covers);

  // Map entries follow the poset's element order.
  std::vector<std::vector<int>> aligned(3, std::vector<int>(source.size()));
  for (int s = 0; s < 3; ++s)
    for (int e = 0; e < source.size(); ++e) {
      int mi = cube.member_index(source.names[e]);
      aligned[s][e] = cube.members[mi].values[s];
    }
  auto family = make_morphism_family(source, bool2(), {"s1", "s2", "s3"}, aligned);
  CHECK(check_full_set(family));

  PropositionAlgebra image = embed_pointwise(family);
  CHECK(image.size() == 8);
  // Order-reflecting embedding: image order mirrors the source order.
  for (int a = 0; a < source.size(); ++a)
    for (int b = 0; b < source.size(); ++b) {
      int ia = image.member_index(source.names[a]);
      int ib = image.member_index(source.names[b]);
      CHECK(image.member_leq(ia, ib) == source.leq(a, b));
    }
}

TEST_CASE("check_full_set: collapsing family is not full") {
  Poset source = build_poset({"0", "a", "b", "1"},
                             {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
  // Single morphism merging the incomparable a and b.
  TruthLattice two = bool2();
  std::vector<std::vector<int>> maps{{0, 1, 1, 1}};
  auto family = make_morphism_family(source, two, {"s"}, maps);
  CHECK_FALSE(check_full_set(family));
  CHECK_THROWS_AS(embed_pointwise(family), error);

  // Oracle: scan all pairs for an unreflected comparison.
  bool oracle_full = true;
  for (int a = 0; a < source.size(); ++a)
    for (int b = 0; b < source.size(); ++b)
      if (!source.leq(a, b) && maps[0][a] <= maps[0][b])
        oracle_full = false;
  CHECK_FALSE(oracle_full);
}

TEST_CASE("check_full_set: two-element chain source is always full") {
  Poset source = build_poset({"0", "1"}, {{"0", "1"}});
  auto family =
      make_morphism_family(source, chain3(), {"s1"}, {{0, 2}});
  CHECK(check_full_set(family));
}

TEST_CASE("embed_pointwise: identity embedding of a lattice") {
  TruthLattice L = chain3();
  std::vector<std::vector<int>> maps{{0, 1, 2}};
  auto family = make_morphism_family(L.poset, L, {"s1"}, maps);
  PropositionAlgebra image = embed_pointwise(family);
  CHECK(image.size() == 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(image.member_leq(a, b) == L.leq(a, b));
}
