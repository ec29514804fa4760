#include <catch2/catch_amalgamated.hpp>

#include "balpha/graph.hpp"

using namespace balpha;

TEST_CASE("graph6 encodes small frozen cases", "[graph]") {
  CHECK(encode_graph6(Graph::complete(3)) == "Bw");
  CHECK(encode_graph6(Graph::from_edge_list(1, {})) == "@");
  CHECK(encode_graph6(Graph::complete(2)) == "A_");
}

TEST_CASE("graph6 parses frozen cases and headers", "[graph]") {
  const Graph k3 = parse_graph6("Bw");
  CHECK(k3.vertex_count() == 3);
  CHECK(k3.edge_count() == 3);

  const Graph k3h = parse_graph6(">>graph6<<Bw");
  CHECK(k3h.edges() == k3.edges());

  const Graph one = parse_graph6("@");
  CHECK(one.vertex_count() == 1);
  CHECK(one.edge_count() == 0);
}

TEST_CASE("graph6 round-trips generators", "[graph]") {
  const Graph cases[] = {
      Graph::petersen(),          Graph::complete(7),
      Graph::complete_bipartite(3, 4), Graph::cycle(9),
      Graph::path(2),             Graph::star(11),
      Graph::complete_multipartite({2, 2, 2}),
  };
  for (const Graph& g : cases) {
    const Graph back = parse_graph6(encode_graph6(g));
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
  }
}

TEST_CASE("graph6 rejects malformed input", "[graph]") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("B"), ParseError);    // missing body
  CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);  // trailing junk
  CHECK_THROWS_AS(parse_graph6("Aw"), ParseError);   // nonzero padding bits
  CHECK_THROWS_AS(parse_graph6("B w"), ParseError);  // character out of range
  CHECK_THROWS_AS(parse_graph6("3"), ParseError);
}

TEST_CASE("edge list text round-trips and rejects malformed input", "[graph]") {
  const Graph g = Graph::complete_bipartite(2, 3);
  const Graph back = parse_edge_list_text(encode_edge_list_text(g));
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(back.edges() == g.edges());

  const Graph commented = parse_edge_list_text("# triangle\n3 3\n0 1\n1 2 # last\n0 2\n");
  CHECK(commented.edge_count() == 3);

  CHECK_THROWS_AS(parse_edge_list_text(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list_text("2 1\n0 1\n0 1\n"), ParseError);  // duplicate
  CHECK_THROWS_AS(parse_edge_list_text("3 2\n0 1\n"), ParseError);       // short
  CHECK_THROWS_AS(parse_edge_list_text("2 1\n0 1 9\n"), ParseError);     // extra token
  CHECK_THROWS_AS(parse_edge_list_text("2 1\n0 2\n"), ParseError);       // out of range
}

TEST_CASE("edge validation rejects loops and bad indices", "[graph]") {
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(0, {}), std::invalid_argument);
}

TEST_CASE("generators build the expected graphs", "[graph]") {
  const Graph k4 = Graph::complete(4);
  CHECK(k4.edge_count() == 6);
  CHECK(is_regular(k4));

  const Graph k23 = Graph::complete_bipartite(2, 3);
  CHECK(k23.vertex_count() == 5);
  CHECK(k23.edge_count() == 6);
  CHECK(is_bipartite(k23));

  const Graph c6 = Graph::cycle(6);
  CHECK(c6.edge_count() == 6);
  CHECK(is_regular(c6));
  CHECK(is_bipartite(c6));
  CHECK_FALSE(is_bipartite(Graph::cycle(5)));

  const Graph p4 = Graph::path(4);
  CHECK(p4.edge_count() == 3);
  CHECK(is_connected(p4));

  const Graph s4 = Graph::star(4);
  CHECK(s4.vertex_count() == 5);
  CHECK(s4.edge_count() == 4);
  CHECK(degree_profile(s4).max_degree == 4);
  CHECK(degree_profile(s4).min_degree == 1);

  const Graph pet = Graph::petersen();
  CHECK(pet.vertex_count() == 10);
  CHECK(pet.edge_count() == 15);
  CHECK(is_regular(pet));
  CHECK(is_connected(pet));
  CHECK_FALSE(is_bipartite(pet));

  const Graph t222 = Graph::complete_multipartite({2, 2, 2});
  CHECK(t222.vertex_count() == 6);
  CHECK(t222.edge_count() == 12);
  CHECK(is_regular(t222));
}

TEST_CASE("petersen is strongly regular (10,3,0,1)", "[graph]") {
  const Graph pet = Graph::petersen();
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      int common = 0;
      for (int v = 0; v < 10; ++v)
        if (pet.adjacent(i, v) && pet.adjacent(j, v)) ++common;
      CHECK(common == (pet.adjacent(i, j) ? 0 : 1));
    }
}

TEST_CASE("connectivity and bipartition classify components", "[graph]") {
  const Graph two_parts = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(two_parts));
  const auto sides = bipartition(two_parts);
  REQUIRE(sides.has_value());
  CHECK((*sides)[0] != (*sides)[1]);
  CHECK((*sides)[2] != (*sides)[3]);
}

TEST_CASE("line graph of a star is complete", "[graph]") {
  const Graph lg = line_graph(Graph::star(4));
  CHECK(lg.vertex_count() == 4);
  CHECK(lg.edge_count() == 6);
  CHECK_THROWS_AS(line_graph(Graph::from_edge_list(2, {})), std::invalid_argument);
}

TEST_CASE("incidence matrix satisfies both gram identities", "[graph]") {
  for (const Graph& g : {Graph::petersen(), Graph::complete_bipartite(2, 3),
                         Graph::complete(4), Graph::path(5)}) {
    const IntMatrix m = incidence_matrix(g);

    const IntMatrix edge_gram = multiply(transpose(m), m);
    const IntMatrix expect_edges =
        add(adjacency_int(line_graph(g)), scale(IntMatrix::identity(g.edge_count()), 2));
    CHECK(edge_gram == expect_edges);

    IntMatrix degrees(g.vertex_count(), g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) degrees.at(v, v) = g.degree(v);
    const IntMatrix vertex_gram = multiply(m, transpose(m));
    const IntMatrix expect_vertices = add(adjacency_int(g), degrees);
    CHECK(vertex_gram == expect_vertices);
  }
}
