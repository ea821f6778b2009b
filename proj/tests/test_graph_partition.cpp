#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "helpers.hpp"
#include "interlace/eigen.hpp"
#include "interlace/graph.hpp"
#include "interlace/partition.hpp"

using namespace interlace;

TEST_CASE("graph factories") {
  CHECK(Graph::empty(3).edge_count() == 0);
  CHECK(Graph::complete(5).edge_count() == 10);
  CHECK(Graph::path(4).edge_count() == 3);
  CHECK(Graph::cycle(4).edge_count() == 4);
  CHECK_THROWS_AS(Graph::cycle(2), std::invalid_argument);

  const Graph k23 = Graph::complete_bipartite(2, 3);
  CHECK(k23.order() == 5);
  CHECK(k23.edge_count() == 6);
  CHECK(k23.degree(0) == 3);
  CHECK(k23.degree(4) == 2);

  const Graph q3 = Graph::hypercube(3);
  CHECK(q3.order() == 8);
  CHECK(q3.edge_count() == 12);
  CHECK(q3.is_regular());
  CHECK(q3.connected());
}

TEST_CASE("graph construction validates edges") {
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);

  // endpoints are normalized and the edge list sorted
  const Graph g(3, {{2, 1}, {1, 0}});
  CHECK(g.edges() == std::vector<Graph::Edge>{{0, 1}, {1, 2}});
  CHECK(g.has_edge(2, 1));
}

TEST_CASE("adjacency and laplacian spectra of named graphs") {
  const Spectrum star = symmetric_eigen(laplacian_matrix(Graph::complete_bipartite(1, 3)));
  CHECK(star.values[0] == Catch::Approx(4.0).margin(1e-10));
  CHECK(star.values[1] == Catch::Approx(1.0).margin(1e-10));
  CHECK(star.values[2] == Catch::Approx(1.0).margin(1e-10));
  CHECK(star.values[3] == Catch::Approx(0.0).margin(1e-10));

  const Spectrum c4 = symmetric_eigen(laplacian_matrix(Graph::cycle(4)));
  CHECK(c4.values[0] == Catch::Approx(4.0).margin(1e-10));
  CHECK(c4.values[1] == Catch::Approx(2.0).margin(1e-10));
  CHECK(c4.values[2] == Catch::Approx(2.0).margin(1e-10));
  CHECK(c4.values[3] == Catch::Approx(0.0).margin(1e-10));

  // row sums of L vanish, and the adjacency diagonal is zero
  const DenseMatrix l = laplacian_matrix(Graph::complete(4));
  for (std::size_t i = 0; i < 4; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < 4; ++j) s += l(i, j);
    CHECK(s == 0.0);
  }
  CHECK(adjacency_matrix(Graph::complete(4)).trace() == 0.0);
}

TEST_CASE("edge counting and block regularity on vertex sets") {
  const Graph g = Graph::cycle(4);
  const std::vector<std::size_t> evens = {0, 2};
  const std::vector<std::size_t> odds = {1, 3};
  CHECK(edge_count_within(g, evens) == 0);
  CHECK(edge_count_between(g, evens, odds) == 4);
  CHECK(regularity(g, evens));
  CHECK(regularity(g, evens, odds));

  const std::vector<std::size_t> mixed = {0, 1, 2};
  CHECK(edge_count_within(g, mixed) == 2);
  CHECK_FALSE(regularity(g, mixed));  // middle vertex has both neighbors inside

  CHECK_THROWS_AS(edge_count_between(g, evens, std::vector<std::size_t>{0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(edge_count_within(g, std::vector<std::size_t>{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(edge_count_within(g, std::vector<std::size_t>{}), std::invalid_argument);
}

TEST_CASE("partition classification") {
  const Graph c4 = Graph::cycle(4);
  CHECK(classify_graph_partition(c4, Partition(4, {{0, 2}, {1, 3}})) ==
        PartitionClass::equitable);
  CHECK(classify_graph_partition(c4, Partition::single_block(4)) == PartitionClass::equitable);
  CHECK(classify_graph_partition(c4, Partition::singletons(4)) == PartitionClass::equitable);

  // K4 minus the edge {0,2}: the first three vertices see vertex 3 uniformly,
  // but induce a path among themselves.
  const Graph k4e(4, {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(classify_graph_partition(k4e, Partition(4, {{0, 1, 2}, {3}})) ==
        PartitionClass::semiequitable_only);
  CHECK(classify_graph_partition(k4e, Partition(4, {{0, 2}, {1, 3}})) ==
        PartitionClass::equitable);

  const Graph p3 = Graph::path(3);
  CHECK(classify_graph_partition(p3, Partition(3, {{0, 1}, {2}})) == PartitionClass::neither);
  CHECK(classify_graph_partition(p3, Partition(3, {{0, 2}, {1}})) == PartitionClass::equitable);

  CHECK(std::string(to_string(PartitionClass::equitable)) == "equitable");
  CHECK(std::string(to_string(PartitionClass::semiequitable_only)) == "semiequitable");
  CHECK(std::string(to_string(PartitionClass::neither)) == "neither");

  CHECK_THROWS_AS(classify_graph_partition(c4, Partition::single_block(3)),
                  std::invalid_argument);
}

TEST_CASE("empty cross blocks count as semiregular") {
  // two disjoint edges: cross block has no edges, both sides induce K2
  const Graph two_k2(4, {{0, 1}, {2, 3}});
  CHECK(classify_graph_partition(two_k2, Partition(4, {{0, 1}, {2, 3}})) ==
        PartitionClass::equitable);
  CHECK(regularity(two_k2, std::vector<std::size_t>{0, 1}, std::vector<std::size_t>{2, 3}));
}

TEST_CASE("join wires all cross pairs") {
  const Graph k23 = join(Graph::empty(2), Graph::empty(3));
  CHECK(k23.edges() == Graph::complete_bipartite(2, 3).edges());

  const Graph k2 = join(Graph::empty(1), Graph::empty(1));
  CHECK(k2.edges() == std::vector<Graph::Edge>{{0, 1}});

  const Graph j = join(Graph::cycle(4), Graph::complete(2));
  CHECK(j.order() == 6);
  CHECK(j.edge_count() == 4 + 1 + 8);

  // three-way join of singletons is a triangle
  const Graph parts[] = {Graph::empty(1), Graph::empty(1), Graph::empty(1)};
  CHECK(join(std::span<const Graph>(parts, 3)).edges() == Graph::complete(3).edges());

  CHECK_THROWS_AS(join(std::span<const Graph>(parts, 1)), std::invalid_argument);
}

TEST_CASE("blow-up expands template vertices into blocks") {
  const BlowUp b = blow_up(Graph::complete(2), std::vector<std::size_t>{2, 2});
  CHECK(b.graph.edges() == Graph::complete_bipartite(2, 2).edges());
  CHECK(b.blocks == Partition(4, {{0, 1}, {2, 3}}));

  // loop flag turns a block into a clique
  const BlowUp clique = blow_up(Graph::empty(1), std::vector<std::size_t>{3},
                                std::vector<bool>{true});
  CHECK(clique.graph.edges() == Graph::complete(3).edges());

  const BlowUp plain = blow_up(Graph::empty(1), std::vector<std::size_t>{3});
  CHECK(plain.graph.edge_count() == 0);

  CHECK_THROWS_AS(blow_up(Graph::complete(2), std::vector<std::size_t>{2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(blow_up(Graph::complete(2), std::vector<std::size_t>{2, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(blow_up(Graph::complete(2), std::vector<std::size_t>{2, 2},
                          std::vector<bool>{true}),
                  std::invalid_argument);
}

TEST_CASE("partitions canonicalize on construction") {
  const Partition a(4, {{3, 1}, {0, 2}});
  const Partition b(4, {{2, 0}, {1, 3}});
  CHECK(a == b);
  CHECK(a.blocks() == std::vector<std::vector<std::size_t>>{{0, 2}, {1, 3}});
  CHECK(a.block_of(3) == 1);
  CHECK(a.block_count() == 2);

  CHECK(Partition::consecutive(std::vector<std::size_t>{2, 3}) ==
        Partition(5, {{0, 1}, {2, 3, 4}}));
  CHECK(Partition::from_assignment(std::vector<std::size_t>{5, 7, 5, 9}) ==
        Partition(4, {{0, 2}, {1}, {3}}));
  CHECK(Partition::single_block(3).block_count() == 1);
  CHECK(Partition::singletons(3).block_count() == 3);
}

TEST_CASE("partition validation reports elements 1-based") {
  CHECK_THROWS_AS(Partition(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(3, {}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(3, {{0, 1, 2}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(2, {{0, 1, 2}}), std::invalid_argument);

  CHECK_THROWS_WITH(Partition(3, {{0, 1}, {1, 2}}),
                    Catch::Matchers::ContainsSubstring("element 2"));
  CHECK_THROWS_WITH(Partition(3, {{0, 1}}), Catch::Matchers::ContainsSubstring("element 3"));
}

TEST_CASE("matrix block regularity") {
  const DenseMatrix a = adjacency_matrix(Graph::cycle(4));
  const std::vector<std::size_t> evens = {0, 2};
  const std::vector<std::size_t> odds = {1, 3};
  CHECK(block_is_regular(a, evens, odds));
  CHECK(block_is_regular(a, evens, evens));

  // index order must not matter
  const std::vector<std::size_t> odds_rev = {3, 1};
  CHECK(block_is_regular(a, evens, odds_rev));

  CHECK(block_is_regular(DenseMatrix::identity(3), std::vector<std::size_t>{0, 1, 2},
                         std::vector<std::size_t>{0, 1, 2}));
  CHECK_FALSE(block_is_regular(DenseMatrix(2, 2, {1, 1, 0, 1}), std::vector<std::size_t>{0, 1},
                               std::vector<std::size_t>{0, 1}));

  // non-integral entries fall back to tolerance comparison
  CHECK(block_is_regular(DenseMatrix(2, 2, {0.5, 0.4, 0.4, 0.5}), std::vector<std::size_t>{0, 1},
                         std::vector<std::size_t>{0, 1}));
  CHECK_FALSE(block_is_regular(DenseMatrix(2, 2, {0.5, 0.4, 0.5, 0.5}),
                               std::vector<std::size_t>{0, 1}, std::vector<std::size_t>{0, 1}));

  CHECK_THROWS_AS(block_is_regular(a, std::vector<std::size_t>{0, 4}, odds),
                  std::invalid_argument);
}

TEST_CASE("equitable product partitions of matrices") {
  const DenseMatrix a = adjacency_matrix(Graph::cycle(4));
  CHECK(is_equitable_for_matrix(a, Partition(4, {{0, 2}, {1, 3}})));
  const DenseMatrix k4e = adjacency_matrix(Graph(4, {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  CHECK_FALSE(is_equitable_for_matrix(k4e, Partition(4, {{0, 1, 2}, {3}})));

  const ProductPartition whole{Partition::single_block(2), Partition::single_block(3)};
  CHECK(is_equitable_for_matrix(DenseMatrix(2, 3, 1.0), whole));
  CHECK_THROWS_AS(is_equitable_for_matrix(DenseMatrix(2, 3, 1.0),
                                          ProductPartition{Partition::single_block(3),
                                                           Partition::single_block(3)}),
                  std::invalid_argument);
}

TEST_CASE("partition enumeration matches Bell and Stirling counts") {
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto all = enumerate_partitions(n);
    CHECK(all.size() == bell[n]);

    // single block first, singletons last, no repeats
    CHECK(all.front() == Partition::single_block(n));
    CHECK(all.back() == Partition::singletons(n));
    std::set<std::vector<std::vector<std::size_t>>> distinct;
    for (const auto& p : all) distinct.insert(p.blocks());
    CHECK(distinct.size() == all.size());
  }

  CHECK(enumerate_partitions(4, 2).size() == 7);    // S(4,2)
  CHECK(enumerate_partitions(5, 3).size() == 25);   // S(5,3)
  CHECK(enumerate_partitions(5, 1).size() == 1);
  CHECK(enumerate_partitions(5, 5).size() == 1);

  CHECK_THROWS_AS(PartitionEnumerator(11), std::invalid_argument);
  CHECK_THROWS_AS(PartitionEnumerator(4, 5), std::invalid_argument);
  PartitionEnumerator big(11, std::nullopt, true);
  CHECK(big.next() == Partition::single_block(11));
}

TEST_CASE("random graph helper respects edge probability extremes") {
  std::mt19937 rng(1);
  CHECK(testutil::random_graph(5, 0.0, rng).edge_count() == 0);
  CHECK(testutil::random_graph(5, 1.0, rng).edge_count() == 10);
  CHECK(testutil::all_graphs(3).size() == 8);
}
