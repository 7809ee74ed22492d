#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hashdrift/community.hpp"
#include "hashdrift/rng.hpp"
#include "support/betweenness_oracle.hpp"

using namespace hashdrift;

namespace {

FrozenGraph graph_of(std::initializer_list<std::pair<const char*, const char*>> edges) {
    FrozenGraph g;
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

// Two triangles joined by the bridge c-d.
FrozenGraph barbell() {
    return graph_of({{"a", "b"}, {"b", "c"}, {"a", "c"}, {"c", "d"},
                     {"d", "e"}, {"e", "f"}, {"d", "f"}});
}

FrozenGraph random_graph(SplitMix64& rng, int n, double p) {
    FrozenGraph g;
    for (int i = 0; i < n; ++i) g.add_node("n" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_double() < p) g.add_edge("n" + std::to_string(i), "n" + std::to_string(j));
    return g;
}

}  // namespace

TEST_CASE("edge betweenness on tiny graphs") {
    auto single = edge_betweenness(graph_of({{"a", "b"}}));
    CHECK(single.at({"a", "b"}) == doctest::Approx(1.0));

    auto path = edge_betweenness(graph_of({{"a", "b"}, {"b", "c"}}));
    CHECK(path.at({"a", "b"}) == doctest::Approx(2.0));
    CHECK(path.at({"b", "c"}) == doctest::Approx(2.0));

    auto triangle = edge_betweenness(graph_of({{"a", "b"}, {"b", "c"}, {"a", "c"}}));
    for (const auto& [edge, value] : triangle) CHECK(value == doctest::Approx(1.0));
}

TEST_CASE("edge betweenness splits shares across equal shortest paths") {
    // square a-b-d-c-a: opposite corners reach each other two ways
    auto square = edge_betweenness(graph_of({{"a", "b"}, {"b", "d"}, {"c", "d"}, {"a", "c"}}));
    for (const auto& [edge, value] : square) CHECK(value == doctest::Approx(2.0));
}

TEST_CASE("edge betweenness matches the brute-force oracle") {
    SplitMix64 rng(555);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng.bounded(6));  // up to 7 nodes
        FrozenGraph g = random_graph(rng, n, 0.25 + rng.next_double() * 0.5);
        auto fast = edge_betweenness(g);
        auto slow = testing::brute_force_edge_betweenness(g);
        REQUIRE(fast.size() == slow.size());
        for (const auto& [edge, value] : slow)
            REQUIRE(fast.at(edge) == doctest::Approx(value).epsilon(1e-9));
    }
}

TEST_CASE("bridge betweenness equals the product of its side sizes") {
    // trees: every edge is a bridge
    SplitMix64 rng(88);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng.bounded(10));
        FrozenGraph g;
        std::vector<std::string> tags;
        for (int i = 0; i < n; ++i) {
            std::string tag = "n" + std::to_string(i);
            if (i > 0) g.add_edge(tag, tags[rng.bounded(tags.size())]);
            else g.add_node(tag);
            tags.push_back(tag);
        }
        auto bet = edge_betweenness(g);
        for (const auto& [edge, value] : bet) {
            // side size: nodes reachable from edge.first once the edge is cut
            FrozenGraph cut = g;
            cut.edges.erase(edge);
            std::set<std::string> side{edge.first};
            std::vector<std::string> frontier{edge.first};
            while (!frontier.empty()) {
                std::string u = frontier.back();
                frontier.pop_back();
                for (const auto& [a, b] : cut.edges) {
                    if (a == u && side.insert(b).second) frontier.push_back(b);
                    if (b == u && side.insert(a).second) frontier.push_back(a);
                }
            }
            double expected = static_cast<double>(side.size()) *
                              static_cast<double>(n - side.size());
            CHECK(value == doctest::Approx(expected).epsilon(1e-9));
        }
    }
}

TEST_CASE("girvan_newman on a single edge") {
    Dendrogram d = girvan_newman(graph_of({{"a", "b"}}));
    REQUIRE(d.levels.size() == 2);
    CHECK(d.levels[0].communities == std::vector<std::set<std::string>>{{"a", "b"}});
    CHECK(d.levels[1].communities == std::vector<std::set<std::string>>{{"a"}, {"b"}});
}

TEST_CASE("girvan_newman splits the barbell at the bridge first") {
    Dendrogram d = girvan_newman(barbell());
    REQUIRE(d.levels.size() >= 2);
    CHECK(d.levels[0].communities.size() == 1);
    REQUIRE(d.levels[1].communities.size() == 2);
    CHECK(d.levels[1].communities[0] == std::set<std::string>{"a", "b", "c"});
    CHECK(d.levels[1].communities[1] == std::set<std::string>{"d", "e", "f"});
}

TEST_CASE("girvan_newman breaks betweenness ties lexicographically") {
    // path a-b-c: both edges carry betweenness 2; {a,b} removed first
    Dendrogram d = girvan_newman(graph_of({{"a", "b"}, {"b", "c"}}));
    REQUIRE(d.levels.size() == 3);
    CHECK(d.levels[1].communities == std::vector<std::set<std::string>>{{"b", "c"}, {"a"}});
}

TEST_CASE("dendrogram levels refine down to singletons") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        FrozenGraph g = random_graph(rng, 3 + static_cast<int>(rng.bounded(8)), 0.4);
        Dendrogram d = girvan_newman(g);
        REQUIRE_FALSE(d.levels.empty());
        CHECK(d.levels.back().communities.size() == g.nodes.size());  // singletons

        std::size_t previous = 0;
        for (const auto& level : d.levels) {
            // strictly increasing component counts
            CHECK(level.communities.size() > previous);
            previous = level.communities.size();

            // each level covers the node set exactly once
            std::set<std::string> covered;
            for (const auto& community : level.communities)
                for (const auto& tag : community) CHECK(covered.insert(tag).second);
            CHECK(covered == g.nodes);
        }

        // refinement: every community at level i+1 sits inside one community of level i
        for (std::size_t i = 0; i + 1 < d.levels.size(); ++i) {
            for (const auto& fine : d.levels[i + 1].communities) {
                bool contained = false;
                for (const auto& coarse : d.levels[i].communities) {
                    bool inside = true;
                    for (const auto& tag : fine) inside = inside && coarse.count(tag) > 0;
                    contained = contained || inside;
                }
                CHECK(contained);
            }
        }
    }
}

TEST_CASE("girvan_newman starts from the existing component partition") {
    FrozenGraph g = graph_of({{"a", "b"}, {"c", "d"}});
    Dendrogram d = girvan_newman(g);
    CHECK(d.levels[0].communities.size() == 2);
    CHECK(d.levels.back().communities.size() == 4);
}

TEST_CASE("modularity oracle values") {
    FrozenGraph bb = barbell();

    // one community holding everything
    Partition whole = canonical_partition({{"a", "b", "c", "d", "e", "f"}});
    CHECK(modularity(bb, whole) == doctest::Approx(0.0).epsilon(1e-12));

    // the two triangles: 2 * (3/7 - (7/14)^2) = 5/14
    Partition split = canonical_partition({{"a", "b", "c"}, {"d", "e", "f"}});
    CHECK(modularity(bb, split) == doctest::Approx(5.0 / 14.0).epsilon(1e-9));

    // single edge into singletons: -(1/2)^2 - (1/2)^2
    FrozenGraph single = graph_of({{"a", "b"}});
    Partition singletons = canonical_partition({{"a"}, {"b"}});
    CHECK(modularity(single, singletons) == doctest::Approx(-0.5).epsilon(1e-12));

    CHECK_THROWS_AS(modularity(FrozenGraph{}, Partition{}), std::invalid_argument);
    CHECK_THROWS_AS(modularity(bb, Partition{{{"a", "b"}}}), std::invalid_argument);
}

TEST_CASE("property: whole-graph modularity is zero, range respected") {
    SplitMix64 rng(404);
    for (int trial = 0; trial < 60; ++trial) {
        FrozenGraph g = random_graph(rng, 4 + static_cast<int>(rng.bounded(8)), 0.5);
        if (g.edges.empty()) continue;
        std::set<std::string> all(g.nodes.begin(), g.nodes.end());
        CHECK(modularity(g, canonical_partition({all})) == doctest::Approx(0.0).epsilon(1e-12));

        for (const auto& level : girvan_newman(g).levels) {
            double q = modularity(g, level);
            CHECK(q >= -0.5 - 1e-12);
            CHECK(q < 1.0);
        }
    }
}

TEST_CASE("best_partition picks the max-modularity level") {
    ScoredPartition best = best_partition(barbell());
    CHECK(best.modularity == doctest::Approx(5.0 / 14.0).epsilon(1e-9));
    REQUIRE(best.partition.communities.size() == 2);
    CHECK(best.partition.communities[0] == std::set<std::string>{"a", "b", "c"});

    SUBCASE("edgeless graphs fall back to singletons at Q = 0") {
        FrozenGraph g;
        g.add_node("aaa");
        g.add_node("bbb");
        ScoredPartition sp = best_partition(g);
        CHECK(sp.modularity == 0.0);
        CHECK(sp.partition.communities.size() == 2);
    }

    SUBCASE("single edge keeps the whole-graph community") {
        ScoredPartition sp = best_partition(graph_of({{"a", "b"}}));
        CHECK(sp.modularity == doctest::Approx(0.0));
        CHECK(sp.partition.communities.size() == 1);
    }
}

TEST_CASE("determinism: identical graphs give identical dendrograms") {
    SplitMix64 rng(606);
    FrozenGraph g = random_graph(rng, 10, 0.4);
    Dendrogram a = girvan_newman(g);
    Dendrogram b = girvan_newman(g);
    REQUIRE(a.levels.size() == b.levels.size());
    for (std::size_t i = 0; i < a.levels.size(); ++i)
        CHECK(a.levels[i].communities == b.levels[i].communities);

    ScoredPartition pa = best_partition(g), pb = best_partition(g);
    CHECK(pa.partition.communities == pb.partition.communities);
    CHECK(pa.modularity == pb.modularity);
}
