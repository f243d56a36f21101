#include <doctest.h>

#include <random>

#include "evencycle/cycles.hpp"
#include "oracles.hpp"

using namespace evencycle;

namespace {

Graph c9_with_chord() {
  GraphBuilder b(9);
  for (int i = 0; i < 9; ++i)
    b.add_edge(i, (i + 1) % 9);
  b.add_edge(0, 4);
  return std::move(b).build();
}

} // namespace

TEST_CASE("fixed-length cycles on named graphs") {
  auto c = find_cycle_of_length(named::complete(4), 4);
  REQUIRE(c);
  CHECK(c->verts == std::vector<Vertex>{0, 1, 2, 3});

  Graph p = named::petersen();
  CHECK_FALSE(find_cycle_of_length(p, 7));
  auto c8 = find_cycle_of_length(p, 8);
  REQUIRE(c8);
  CHECK(c8->length() == 8);
  CHECK(is_cycle(p, *c8));
  CHECK_FALSE(find_cycle_of_length(p, 4));
  CHECK_THROWS_AS(find_cycle_of_length(p, 2), std::invalid_argument);
  CHECK_FALSE(find_cycle_of_length(p, 11));
}

TEST_CASE("cycle spectrum examples and the subset-DP oracle") {
  Graph p = named::petersen();
  const std::set<int> expect{5, 6, 8, 9};
  CHECK(cycle_spectrum(p, 10) == expect);
  CHECK(oracle::spectrum_dp(p) == expect);
  CHECK(cycle_spectrum(named::cycle(5), 5) == std::set<int>{5});
  CHECK(cycle_spectrum(named::complete(4), 4) == std::set<int>{3, 4});
  CHECK(cycle_spectrum(named::path(6), 6).empty());
  CHECK(cycle_spectrum(named::heawood(), 14) == oracle::spectrum_dp(named::heawood()));
}

TEST_CASE("cycle spectrum budget guard") {
  try {
    // K_{5,5}: odd lengths never show up, so the walk cannot stop early
    GraphBuilder b(10);
    for (int u = 0; u < 5; ++u)
      for (int v = 5; v < 10; ++v)
        b.add_edge(u, v);
    (void)cycle_spectrum(std::move(b).build(), 10, Budget{50});
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.guard_value == 50);
    CHECK(e.partial_count > 50);
  }
}

TEST_CASE("find_cycle_of_length agrees with both oracles on random graphs") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 300; ++t) {
    const int n = 3 + static_cast<int>(rng() % 8);
    Graph g = oracle::random_graph(n, 0.2 + 0.5 * static_cast<double>(rng() % 100) / 100.0, rng);
    auto dp = oracle::spectrum_dp(g);
    REQUIRE(cycle_spectrum(g, n) == dp);
    for (int k = 3; k <= n; ++k) {
      auto c = find_cycle_of_length(g, k);
      REQUIRE(c.has_value() == (dp.count(k) == 1));
      if (c) {
        REQUIRE(c->length() == k);
        REQUIRE(is_cycle(g, *c));
      }
    }
    REQUIRE(has_c4(g) == (dp.count(4) == 1));
  }
}

TEST_CASE("searches are deterministic") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    Graph g = oracle::random_graph(14, 0.3, rng);
    for (int k : {4, 5, 8}) {
      auto a = find_cycle_of_length(g, k);
      auto b = find_cycle_of_length(g, k);
      REQUIRE(a == b);
    }
    REQUIRE(find_induced_path(g, 6) == find_induced_path(g, 6));
    REQUIRE(enumerate_holes(g, 5) == enumerate_holes(g, 5));
  }
}

TEST_CASE("power-of-two cycles") {
  auto k4 = has_power_of_two_cycle(named::complete(4), 4);
  REQUIRE(k4);
  CHECK(k4->length() == 4);
  CHECK_FALSE(has_power_of_two_cycle(named::cycle(5), 4));
  CHECK_FALSE(has_power_of_two_cycle(named::cycle(5), 64));
  auto h = has_power_of_two_cycle(named::heawood(), 16);
  REQUIRE(h);
  CHECK(h->length() == 8);
  CHECK(is_cycle(named::heawood(), *h));
  CHECK(oracle::spectrum_dp(named::heawood()).count(8) == 1);
  CHECK_THROWS_AS(has_power_of_two_cycle(named::complete(4), 3), std::invalid_argument);
  // a 16-cycle and nothing shorter of power-of-two length
  auto c16 = has_power_of_two_cycle(named::cycle(16), 16);
  REQUIRE(c16);
  CHECK(c16->length() == 16);
  CHECK_FALSE(has_power_of_two_cycle(named::cycle(16), 15));
}

TEST_CASE("induced paths") {
  auto p = find_induced_path(named::path(10), 10);
  REQUIRE(p);
  CHECK(p->order() == 10);
  CHECK(is_induced_path(named::path(10), *p));
  CHECK_FALSE(find_induced_path(named::cycle(9), 10));
  auto q = find_induced_path(named::cycle(12), 10);
  REQUIRE(q);
  CHECK(is_induced_path(named::cycle(12), *q));
  CHECK(q->verts == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(is_p10_free(named::petersen()));
  CHECK_FALSE(is_p10_free(named::path(10)));
  CHECK(find_induced_path(Graph(1), 1)->verts == std::vector<Vertex>{0});
}

TEST_CASE("induced path search agrees with subset brute force") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng() % 8);
    Graph g = oracle::random_graph(n, 0.35, rng);
    for (int k = 1; k <= n; ++k) {
      auto p = find_induced_path(g, k);
      REQUIRE(p.has_value() == oracle::has_induced_path(g, k));
      if (p)
        REQUIRE(is_induced_path(g, *p));
    }
  }
}

TEST_CASE("validity predicates") {
  Graph c5 = named::cycle(5);
  CHECK(is_hole(c5, Cycle{{0, 1, 2, 3, 4}}));
  CHECK_FALSE(is_hole(named::complete(4), Cycle{{0, 1, 2, 3}}));
  Graph c9 = c9_with_chord();
  CHECK(is_cycle(c9, Cycle{{0, 1, 2, 3, 4, 5, 6, 7, 8}}));
  CHECK_FALSE(is_hole(c9, Cycle{{0, 1, 2, 3, 4, 5, 6, 7, 8}}));
  CHECK(is_hole(c9, Cycle{{0, 1, 2, 3, 4}}));
  CHECK_THROWS_AS(is_hole(c5, Cycle{{0, 2, 4}}), InvalidCycle);
  CHECK_FALSE(is_cycle(c5, Cycle{{0, 1, 2, 3, 4, 0}}));
  CHECK_FALSE(is_cycle(c5, Cycle{{0, 1}}));
  CHECK(is_path(c5, Path{{0, 1, 2, 3, 4}}));
  CHECK_FALSE(is_induced_path(c5, Path{{0, 1, 2, 3, 4}}));
  CHECK(is_induced_path(c5, Path{{0, 1, 2, 3}}));
}

TEST_CASE("hole enumeration examples") {
  auto holes = enumerate_holes(named::petersen(), 5);
  CHECK(holes.size() == 12);
  CHECK(oracle::count_holes(named::petersen(), 5) == 12);
  CHECK(enumerate_holes(named::complete(4), 4).empty());
  auto c7 = enumerate_holes(named::cycle(7), 7);
  REQUIRE(c7.size() == 1);
  CHECK(c7[0].verts == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6});
  for (const auto& h : holes) {
    CHECK(is_hole(named::petersen(), h));
    CHECK(h == canonical_cycle(h));
    CHECK(h.verts[0] == *std::min_element(h.verts.begin(), h.verts.end()));
    CHECK(h.verts[1] < h.verts.back());
  }
}

TEST_CASE("canonical cycle form") {
  CHECK(canonical_cycle(Cycle{{3, 1, 4, 2}}).verts == std::vector<Vertex>{1, 3, 2, 4});
  CHECK(canonical_cycle(Cycle{{2, 0, 1}}).verts == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("hole counts match subset brute force") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 150; ++t) {
    const int n = 4 + static_cast<int>(rng() % 7);
    Graph g = oracle::random_graph(n, 0.3 + 0.3 * static_cast<double>(rng() % 10) / 10.0, rng);
    for (int m = 4; m <= n; ++m) {
      auto holes = enumerate_holes(g, m);
      REQUIRE(holes.size() == oracle::count_holes(g, m));
      std::set<std::vector<Vertex>> distinct;
      for (const auto& h : holes) {
        REQUIRE(is_hole(g, h));
        distinct.insert(h.verts);
      }
      REQUIRE(distinct.size() == holes.size());
    }
  }
}

TEST_CASE("hole enumeration budget and early stop") {
  Budget b{10};
  CHECK_THROWS_AS(for_each_hole(named::petersen(), 5, [](const Cycle&) { return true; }, b),
                  BudgetExceeded);
  int seen = 0;
  Budget big;
  for_each_hole(named::petersen(), 5, [&](const Cycle&) { return ++seen < 3; }, big);
  CHECK(seen == 3);
}
