#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "tgf/canonical.hpp"
#include "tgf/graph.hpp"
#include "tgf/verify.hpp"

using namespace tgf;

namespace {

Multigraph k2() { return build_family(Family::path, 1); }
Multigraph c3() { return build_family(Family::cycle, 3); }

}  // namespace

TEST_CASE("graph_stats on small graphs") {
    CHECK(graph_stats(c3()) == GraphStats{1, 2, 1});
    CHECK(graph_stats(build_family(Family::bouquet, 2)) == GraphStats{1, 0, 2});
    CHECK(graph_stats(Multigraph(2, {})) == GraphStats{2, 0, 0});
}

TEST_CASE("loops do not change the component count") {
    const Multigraph g(3, {{0, 1}, {2, 2}});
    CHECK(graph_stats(g).components == 2);
    CHECK(graph_stats(g).nullity == 1);
}

TEST_CASE("delete_edge") {
    const Multigraph a = delete_edge(k2(), 0);
    CHECK(a.vertex_count() == 2);
    CHECK(a.edge_count() == 0);
    CHECK(delete_edge(c3(), 2) == build_family(Family::path, 2));
    CHECK(delete_edge(build_family(Family::bouquet, 2), 0) == build_family(Family::bouquet, 1));
    CHECK_THROWS_AS(delete_edge(k2(), 1), InputError);
}

TEST_CASE("contract_edge") {
    const Multigraph a = contract_edge(k2(), 0);
    CHECK(a.vertex_count() == 1);
    CHECK(a.edge_count() == 0);
    const Multigraph b = contract_edge(c3(), 0);
    CHECK(b.vertex_count() == 2);
    CHECK(b.edge_count() == 2);
    CHECK(edge_class(b, 0) == EdgeClass::ordinary);
    CHECK(canonical_form(b) == canonical_form(build_family(Family::multiedge, 2)));
    CHECK(contract_edge(build_family(Family::multiedge, 2), 0) == build_family(Family::bouquet, 1));
    CHECK_THROWS_AS(contract_edge(build_family(Family::bouquet, 1), 0), InputError);
}

TEST_CASE("edge_class") {
    CHECK(edge_class(k2(), 0) == EdgeClass::bridge);
    CHECK(edge_class(build_family(Family::bouquet, 1), 0) == EdgeClass::loop);
    for (int e = 0; e < 3; ++e) CHECK(edge_class(c3(), e) == EdgeClass::ordinary);
    CHECK(to_string(EdgeClass::bridge) == "bridge");
}

TEST_CASE("incidence matrix columns") {
    const IncidenceMatrix a = incidence(k2());
    CHECK(a(0, 0) == -1);
    CHECK(a(1, 0) == 1);
    const IncidenceMatrix b = incidence(build_family(Family::bouquet, 1));
    CHECK(b(0, 0) == 0);
    const IncidenceMatrix c = incidence(build_family(Family::star, 2));
    CHECK(c(0, 0) == -1);
    CHECK(c(1, 0) == 1);
    CHECK(c(2, 0) == 0);
    CHECK(c(0, 1) == -1);
    CHECK(c(1, 1) == 0);
    CHECK(c(2, 1) == 1);
}

TEST_CASE("families") {
    const Multigraph y3 = build_family(Family::bouquet, 3);
    CHECK(y3.vertex_count() == 1);
    CHECK(y3.edge_count() == 3);
    for (const Edge& e : y3.edges()) CHECK(e.is_loop());

    const Multigraph z3 = build_family(Family::star, 3);
    CHECK(degrees(z3) == std::vector<int>{3, 1, 1, 1});

    const Multigraph x31 = build_family(Family::oriented_multiedge, 3, 1);
    CHECK(x31 == Multigraph(2, {{0, 1}, {1, 0}, {1, 0}}));

    CHECK(build_family(Family::k4, 4).edge_count() == 6);
    const Multigraph prism = build_family(Family::prism, 3);
    CHECK(prism.vertex_count() == 6);
    CHECK(degrees(prism) == std::vector<int>(6, 3));
    CHECK_THROWS_AS(build_family(Family::oriented_multiedge, 2, 3), InputError);
}

TEST_CASE("parse_family") {
    CHECK(parse_family("cycle:3") == c3());
    CHECK(parse_family("oriented-multiedge:3:1") == build_family(Family::oriented_multiedge, 3, 1));
    CHECK(parse_family("prism") == build_family(Family::prism, 3));
    CHECK(parse_family("k4") == build_family(Family::k4, 4));
    CHECK_THROWS_AS(parse_family("cycle"), InputError);
    CHECK_THROWS_AS(parse_family("cycle:x"), InputError);
    CHECK_THROWS_AS(parse_family("dodecahedron:1"), InputError);
    CHECK_THROWS_AS(parse_family("cycle:3:1"), InputError);
}

TEST_CASE("line graphs") {
    const Multigraph a = line_graph(k2());
    CHECK(a.vertex_count() == 1);
    CHECK(a.edge_count() == 0);
    CHECK(line_graph(build_family(Family::path, 2)) == k2());

    // Octahedron: 6 vertices, 12 edges, 4-regular, and two vertices adjacent
    // exactly when the K4 edges share an endpoint.
    const Multigraph k4 = build_family(Family::k4, 4);
    const Multigraph l = line_graph(k4);
    CHECK(l.vertex_count() == 6);
    CHECK(l.edge_count() == 12);
    CHECK(degrees(l) == std::vector<int>(6, 4));
    for (const Edge& e : l.edges()) {
        const Edge a1 = k4.edge(e.tail), b1 = k4.edge(e.head);
        CHECK((a1.tail == b1.tail || a1.tail == b1.head || a1.head == b1.tail || a1.head == b1.head));
    }
    CHECK_THROWS_AS(line_graph(build_family(Family::multiedge, 2)), InputError);
    CHECK_THROWS_AS(line_graph(build_family(Family::bouquet, 1)), InputError);
}

TEST_CASE("parse_graph") {
    CHECK(parse_graph("vertices 2\nedge 0 1") == k2());
    CHECK(parse_graph("vertices 1\nedge 0 0\n") == build_family(Family::bouquet, 1));
    CHECK(parse_graph("# comment\nvertices 3 # trailing\n\nedge 0 1\nedge 1 2\nedge 2 0\n") == c3());

    auto line_of = [](const char* text) {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return static_cast<int>(e.line());
        }
        return -1;
    };
    CHECK(line_of("edge 0 1") == 1);
    CHECK(line_of("vertices 2\nedge 0 2") == 2);
    CHECK(line_of("vertices 2\nvertices 3") == 2);
    CHECK(line_of("vertices 2\nedge 0 one") == 2);
    CHECK(line_of("vertices 2\n\nedge 0 1\nface 0") == 4);
    CHECK(line_of("") >= 0);
    CHECK_THROWS_AS(parse_graph("edge 0 1"), InputError);
}

TEST_CASE("serialize round-trips across the corpus") {
    for (const Multigraph& g : corpus(4, 6)) {
        const std::string text = serialize(g);
        const Multigraph h = parse_graph(text);
        CHECK(h == g);
        CHECK(serialize(h) == text);
    }
}

TEST_CASE("graph_stats agrees with DFS components on random subsets") {
    for (const Multigraph& g : corpus(4, 5)) {
        const std::uint64_t full = (std::uint64_t{1} << g.edge_count()) - 1;
        for (std::uint64_t mask = 0; mask <= full; ++mask)
            CHECK(subset_rank(g, mask) == g.vertex_count() - oracle::components(g, mask));
        const GraphStats s = graph_stats(g);
        CHECK(s.components == oracle::components(g, full));
        CHECK(s.rank + s.nullity == g.edge_count());
    }
}

TEST_CASE("canonical form is invariant under relabelling") {
    const Multigraph g(4, {{0, 1}, {1, 2}, {2, 2}, {2, 3}, {0, 1}});
    const Multigraph relabelled(4, {{3, 2}, {2, 0}, {0, 0}, {0, 1}, {2, 3}});
    CHECK(canonical_form(g) == canonical_form(relabelled));
    CHECK(canonical_form(g, true) != canonical_form(relabelled, true));
    CHECK_FALSE(canonical_form(c3()) == canonical_form(build_family(Family::path, 3)));
}

TEST_CASE("corpus sizes") {
    CHECK(corpus(0, 0).empty());
    CHECK(corpus(1, 3).size() == 4);  // Y_0 .. Y_3
    const auto graphs = corpus(4, 6);
    CHECK(graphs.size() > 100);
    std::set<CanonicalForm> forms;
    for (const auto& g : graphs) {
        CHECK(is_connected(g));
        CHECK(g.edge_count() <= 6);
        forms.insert(canonical_form(g));
    }
    CHECK(forms.size() == graphs.size());
}
