#include <doctest.h>

#include <random>

#include "evencycle/classify.hpp"
#include "oracles.hpp"

using namespace evencycle;

TEST_CASE("classify examples") {
  auto c5 = classify(named::cycle(5));
  REQUIRE(std::holds_alternative<LowDegreeVertex>(c5));
  CHECK(std::get<LowDegreeVertex>(c5).vertex == 0);
  CHECK(std::get<LowDegreeVertex>(c5).degree == 2);

  CHECK(kind_of(classify(named::complete(4))) == CertificateKind::Cycle4);

  auto p = classify(named::petersen());
  REQUIRE(std::holds_alternative<Cycle8>(p));
  CHECK(std::get<Cycle8>(p).cycle.length() == 8);
  CHECK(oracle::spectrum_dp(named::petersen()).count(8) == 1);
  CHECK_FALSE(oracle::has_induced_path(named::petersen(), 10));

  CHECK(kind_of(classify(named::heawood())) == CertificateKind::Cycle8);
  CHECK_THROWS_AS(classify(Graph(0)), UnsupportedSize);
  CHECK_THROWS_AS(find_c4_or_c8(Graph(0)), UnsupportedSize);
}

TEST_CASE("classify follows the fixed priority order") {
  // degree-2 vertex beats a C4 elsewhere
  Graph g = from_edge_list(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 0}, {5, 1}});
  CHECK(kind_of(classify(g)) == CertificateKind::LowDegreeVertex);
  CHECK(witness_vertices(classify(g)) == std::vector<Vertex>{4});
}

TEST_CASE("classify reaches the induced P10 branch") {
  // Truncated Petersen: cubic, no C4 (girth 3 via triangles only), no C8.
  Graph p = named::petersen();
  auto edges = p.edges();
  // vertex (v, k) = 3v + k, k indexes v's neighbors in ascending order
  std::vector<std::vector<Vertex>> nb(10);
  for (Vertex v = 0; v < 10; ++v)
    nb[static_cast<std::size_t>(v)] = p.neighbors(v).to_vector();
  auto slot = [&](Vertex v, Vertex w) {
    auto& l = nb[static_cast<std::size_t>(v)];
    return 3 * v + static_cast<int>(std::find(l.begin(), l.end(), w) - l.begin());
  };
  GraphBuilder b(30);
  for (Vertex v = 0; v < 10; ++v) {
    b.add_edge(3 * v, 3 * v + 1);
    b.add_edge(3 * v + 1, 3 * v + 2);
    b.add_edge(3 * v, 3 * v + 2);
  }
  for (auto [u, v] : edges)
    b.add_edge(slot(u, v), slot(v, u));
  Graph t = std::move(b).build();
  REQUIRE(min_degree(t) == 3);
  REQUIRE_FALSE(find_cycle_of_length(t, 4));
  REQUIRE_FALSE(find_cycle_of_length(t, 8));
  auto cert = classify(t);
  REQUIRE(std::holds_alternative<InducedP10>(cert));
  CHECK(verify_certificate(t, cert));
  try {
    (void)find_c4_or_c8(t);
    FAIL("expected PreconditionFailed");
  } catch (const PreconditionFailed& e) {
    CHECK(e.kind == PreconditionFailed::Kind::HasInducedP10);
    REQUIRE(e.path);
    CHECK(e.path->order() == 10);
  }
}

TEST_CASE("verify_certificate") {
  CHECK(verify_certificate(named::complete(4), Cycle4{Cycle{{0, 1, 2, 3}}}));
  CHECK_FALSE(verify_certificate(named::cycle(5), Cycle4{Cycle{{0, 1, 2, 3}}}));
  CHECK_FALSE(verify_certificate(named::cycle(5), Cycle4{Cycle{{0, 1, 2, 3, 4}}}));
  CHECK_FALSE(verify_certificate(named::petersen(), LowDegreeVertex{0, 2}));
  CHECK(verify_certificate(named::cycle(5), LowDegreeVertex{3, 2}));
  CHECK_FALSE(verify_certificate(named::cycle(5), LowDegreeVertex{3, 1}));
  CHECK_FALSE(verify_certificate(named::cycle(5), LowDegreeVertex{9, 2}));
  CHECK_FALSE(verify_certificate(named::complete(4), Cycle4{Cycle{{0, 1, 0, 1}}}));
  CHECK(verify_certificate(named::path(10), InducedP10{Path{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}}}));
  CHECK_FALSE(verify_certificate(named::cycle(10), InducedP10{Path{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}}}));
  CHECK_FALSE(verify_certificate(named::path(10), Cycle8{Cycle{{0, 1, 2, 3, 4, 5, 6, 7}}}));
}

TEST_CASE("find_c4_or_c8") {
  auto k4 = find_c4_or_c8(named::complete(4));
  CHECK(k4.length() == 4);
  auto p = find_c4_or_c8(named::petersen());
  CHECK(p.length() == 8);
  CHECK(is_cycle(named::petersen(), p));
  try {
    (void)find_c4_or_c8(named::path(10));
    FAIL("expected PreconditionFailed");
  } catch (const PreconditionFailed& e) {
    CHECK(e.kind == PreconditionFailed::Kind::LowDegree);
    CHECK(e.vertex == 0);
  }
}

TEST_CASE("classify is total and verified on random graphs") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 500; ++t) {
    const int n = 1 + static_cast<int>(rng() % 16);
    Graph g = oracle::random_graph(n, 0.1 + 0.4 * static_cast<double>(rng() % 10) / 10.0, rng);
    auto c = classify(g);
    REQUIRE(verify_certificate(g, c));
  }
}

TEST_CASE("graph filters") {
  auto f = GraphFilter::parse("min-degree=3,connected,cubic,p10-free");
  CHECK(f.min_degree == 3);
  CHECK(f.connected);
  CHECK(f.cubic);
  CHECK(f.p10_free);
  CHECK(f.describe() == "min-degree=3,connected,cubic,p10-free");
  CHECK(f.accepts(named::petersen()));
  CHECK_FALSE(f.accepts(named::cycle(5)));
  CHECK_FALSE(GraphFilter::parse("cubic").accepts(named::complete(5)));
  CHECK(GraphFilter::parse("").accepts(named::cycle(5)));
  CHECK_FALSE(GraphFilter::parse("connected").accepts(from_edge_list(2, {})));
  CHECK_THROWS_AS(GraphFilter::parse("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(GraphFilter::parse("min-degree=x"), std::invalid_argument);
  CHECK_THROWS_AS(GraphFilter::parse("min-degree=3x"), std::invalid_argument);
}

TEST_CASE("power-of-two hunt") {
  const std::vector<std::string> recs{to_graph6(named::cycle(5)), to_graph6(named::complete(4)),
                                      to_graph6(named::petersen())};
  auto r = hunt_power_of_two(recs, 16, GraphFilter::parse("min-degree=3"));
  CHECK(r.filtered_out == 1);
  CHECK(r.examined == 2);
  CHECK(r.counterexamples.empty());
  CHECK(r.bound_holds());

  // unfiltered, C5 is reported and confirmed by the spectrum
  auto all = hunt_power_of_two(recs, 16, GraphFilter{});
  REQUIRE(all.counterexamples.size() == 1);
  CHECK(all.counterexamples[0].index == 0);
  CHECK(all.counterexamples[0].reason.find("spectrum") != std::string::npos);

  auto bad = hunt_power_of_two({"D?", "C~"}, 8, GraphFilter{});
  CHECK(bad.errors == 1);
  CHECK(bad.examined == 1);
  CHECK(bad.record_errors[0].reason.starts_with("input-error"));

  CHECK_THROWS_AS(hunt_power_of_two(recs, 3, GraphFilter{}), std::invalid_argument);

  auto par = hunt_power_of_two(recs, 16, GraphFilter{}, 4);
  CHECK(par.counterexamples.size() == 1);
  CHECK(par.examined == 3);
}
