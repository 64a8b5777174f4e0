#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include <maghom/graph.hpp>

#include "oracles.hpp"

using namespace maghom;

namespace {

std::vector<std::string> walk_strings(const Graph& g, const std::vector<Walk>& walks, std::size_t steps)
{
    std::vector<std::string> out;
    for (const auto& w : walks) {
        if (w.steps() != steps) continue;
        std::string s;
        for (auto v : w.vertices) s += g.label(v);
        out.push_back(s);
    }
    return out;
}

} // namespace

TEST_CASE("edge list parsing", "[graph]")
{
    auto g = parse_edge_list("# two edges\na b\nb c  # trailing comment\n\n");
    REQUIRE(g.num_vertices() == 3);
    REQUIRE(g.num_edges() == 2);
    CHECK(g.distance("a", "c") == 2);
    CHECK(g.labels() == std::vector<std::string>{"a", "b", "c"});

    SECTION("single-token lines declare vertices")
    {
        auto one = parse_edge_list("solo\n");
        CHECK(one.num_vertices() == 1);
        CHECK(one.num_edges() == 0);
    }
}

TEST_CASE("graph validation errors name the offending element", "[graph]")
{
    CHECK_THROWS_WITH(parse_edge_list("a b\na b\n"), Catch::Matchers::ContainsSubstring("duplicate edge a-b"));
    CHECK_THROWS_WITH(parse_edge_list("a b\nb a\n"), Catch::Matchers::ContainsSubstring("duplicate edge"));
    CHECK_THROWS_WITH(parse_edge_list("a a\n"), Catch::Matchers::ContainsSubstring("self-loop at vertex 'a'"));
    CHECK_THROWS_WITH(parse_edge_list("a b\nc d\n"), Catch::Matchers::ContainsSubstring("disconnected"));
    CHECK_THROWS_WITH(parse_graph(R"({"vertices":["a","b"],"edges":[["a","z"]]})"),
                      Catch::Matchers::ContainsSubstring("unknown vertex 'z'"));
    CHECK_THROWS_WITH(parse_graph(R"({"vertices":["a","a"],"edges":[]})"),
                      Catch::Matchers::ContainsSubstring("duplicate vertex"));
    CHECK_THROWS_AS(parse_edge_list("a b c\n"), graph_error);
    CHECK_THROWS_AS(parse_graph("{not json"), graph_error);
}

TEST_CASE("structured graph format keeps declaration order", "[graph]")
{
    auto g = parse_graph(R"({"vertices":["z","y","x"],"edges":[["x","y"],["y","z"]]})");
    CHECK(g.labels() == std::vector<std::string>{"z", "y", "x"});
    CHECK(g.index_of("x") == 2);
    CHECK(g.distance("z", "x") == 2);
    auto round = parse_graph_json(graph_to_json(g));
    CHECK(round.labels() == g.labels());
    CHECK(round.edges() == g.edges());
}

TEST_CASE("generators", "[graph]")
{
    auto p3 = generate("path:3");
    CHECK(p3.num_vertices() == 3);
    CHECK(p3.num_edges() == 2);
    CHECK(p3.diameter() == 2);

    auto p5 = generate("path:5");
    CHECK(p5.distance(0, 4) == 4);

    auto sq2 = generate("sq2");
    CHECK(sq2.num_vertices() == 6);
    CHECK(sq2.num_edges() == 8);
    CHECK(sq2.distance("a", "d") == 3);

    CHECK(generate("cycle:5").num_edges() == 5);
    CHECK(generate("complete:4").num_edges() == 6);
    CHECK(generate("star:4").num_edges() == 3);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto t = generate("random-tree:8:" + std::to_string(seed));
        CHECK(t.num_vertices() == 8);
        CHECK(t.num_edges() == 7);
        CHECK(t.is_tree());
    }
    CHECK(generate("random-tree:8:3").edges() == generate("random-tree:8:3").edges());

    CHECK_THROWS_AS(generate("path:0"), graph_error);
    CHECK_THROWS_AS(generate("star:0"), graph_error);
    CHECK_THROWS_AS(generate("cycle:2"), graph_error);
    CHECK_THROWS_AS(generate("petersen"), graph_error);
    CHECK_THROWS_AS(generate("path:x"), graph_error);
    CHECK_THROWS_AS(generate("path"), graph_error);
}

TEST_CASE("sq2 edge set is consistent with the listed walks", "[graph][sq2]")
{
    auto g = sq2_graph();
    const std::vector<std::string> listed{"ababa", "abafa", "abcba", "abfba", "afafa", "afaba",
                                          "afefa", "afbfa", "abced", "abfed", "afbcd", "afecd"};
    for (const auto& w : listed) {
        VertexTuple t;
        for (char c : w) t.push_back(g.index_of(std::string(1, c)));
        INFO(w);
        CHECK(is_walk(g, t));
    }
    // Removing any edge breaks one of the listed walks, so the edge set is forced.
    for (std::size_t drop = 0; drop < g.num_edges(); ++drop) {
        std::vector<std::pair<std::string, std::string>> edges;
        for (std::size_t i = 0; i < g.num_edges(); ++i)
            if (i != drop) edges.emplace_back(g.label(g.edges()[i].first), g.label(g.edges()[i].second));
        bool all_valid = true;
        try {
            auto h = Graph::from_edges(g.labels(), edges);
            for (const auto& w : listed) {
                VertexTuple t;
                for (char c : w) t.push_back(h.index_of(std::string(1, c)));
                all_valid = all_valid && is_walk(h, t);
            }
        } catch (const graph_error&) {
            all_valid = false;
        }
        CHECK_FALSE(all_valid);
    }
}

TEST_CASE("metric axioms and BFS against Floyd-Warshall", "[graph][property]")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> pick(1, 9);
        auto g = random_connected_graph(pick(rng), rng);
        auto fw = oracle::floyd_warshall(g);
        const std::size_t n = g.num_vertices();
        for (vertex_t u = 0; u < n; ++u) {
            for (vertex_t v = 0; v < n; ++v) {
                REQUIRE(g.distance(u, v) == fw[u][v]);
                CHECK(g.distance(u, v) == g.distance(v, u));
                CHECK((g.distance(u, v) == 0) == (u == v));
                bool is_edge = std::binary_search(g.edges().begin(), g.edges().end(), std::pair<vertex_t, vertex_t>(std::minmax(u, v)));
                CHECK((g.distance(u, v) == 1) == is_edge);
                for (vertex_t w = 0; w < n; ++w) CHECK(g.distance(u, w) <= g.distance(u, v) + g.distance(v, w));
            }
        }
    }
    CHECK_THROWS_AS(sq2_graph().index_of("z"), graph_error);
}

TEST_CASE("walk enumeration on sq2", "[graph][sq2]")
{
    auto g = sq2_graph();
    auto a = g.index_of("a");
    auto d = g.index_of("d");

    auto aa = enumerate_walks(g, a, a, 4);
    auto aa4 = walk_strings(g, aa, 4);
    std::set<std::string> expected_aa{"ababa", "abafa", "abcba", "abfba", "afafa", "afaba", "afefa", "afbfa"};
    CHECK(std::set<std::string>(aa4.begin(), aa4.end()) == expected_aa);
    CHECK(aa4.size() == 8);

    auto ad4 = walk_strings(g, enumerate_walks(g, a, d, 4), 4);
    CHECK(ad4 == std::vector<std::string>{"abced", "abfed", "afbcd", "afecd"});

    CHECK(enumerate_walks(g, a, d, 2).empty());

    auto again = enumerate_walks(g, a, a, 4);
    CHECK(again == aa);
    CHECK(std::is_sorted(aa.begin(), aa.end()));
}

TEST_CASE("walk counts match adjacency powers", "[graph][property]")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<std::size_t> pick(1, 7);
        auto g = random_connected_graph(pick(rng), rng);
        for (vertex_t a = 0; a < g.num_vertices(); ++a) {
            for (vertex_t b = 0; b < g.num_vertices(); ++b) {
                for (unsigned ell = 0; ell <= 5; ++ell) {
                    auto walks = enumerate_walks(g, a, b, ell);
                    REQUIRE(walks.size() == oracle::walk_count(g, a, b, ell));
                    for (const auto& w : walks) {
                        CHECK(w.front() == a);
                        CHECK(w.back() == b);
                        CHECK(w.steps() <= ell);
                        CHECK(is_walk(g, w.vertices));
                        CHECK(tuple_length(g, w.vertices) == w.steps());
                    }
                }
            }
        }
    }
}
