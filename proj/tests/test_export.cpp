#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hashdrift/export.hpp"
#include "hashdrift/timeutil.hpp"

using namespace hashdrift;

namespace {

FrozenGraph two_triangles() {
    FrozenGraph g;
    for (auto [u, v] : std::initializer_list<std::pair<const char*, const char*>>{
             {"aa1", "aa2"}, {"aa2", "aa3"}, {"aa1", "aa3"},
             {"bb1", "bb2"}, {"bb2", "bb3"}, {"bb1", "bb3"}})
        g.add_edge(u, v);
    return g;
}

Partition triangle_partition() {
    return canonical_partition({{"aa1", "aa2", "aa3"}, {"bb1", "bb2", "bb3"}});
}

}  // namespace

TEST_CASE("empty graph exports are valid minimal documents") {
    FrozenGraph g;
    Partition p;
    CHECK(export_graph(g, p, ExportFormat::Json).find("\"nodes\": []") != std::string::npos);
    CHECK(export_graph(g, p, ExportFormat::Dot).find("graph hashtags {") != std::string::npos);
    CHECK(export_graph(g, p, ExportFormat::GraphML).find("</graphml>") != std::string::npos);
}

TEST_CASE("dot export carries one edge statement per edge") {
    FrozenGraph g;
    g.add_edge("aaa", "bbb");
    Partition p = canonical_partition({{"aaa", "bbb"}});
    std::string dot = export_graph(g, p, ExportFormat::Dot);

    std::size_t count = 0, pos = 0;
    while ((pos = dot.find(" -- ", pos)) != std::string::npos) {
        ++count;
        pos += 4;
    }
    CHECK(count == 1);
    CHECK(dot.find("\"aaa\" -- \"bbb\";") != std::string::npos);
}

TEST_CASE("exports are byte-stable across calls") {
    FrozenGraph g = two_triangles();
    Partition p = triangle_partition();
    for (ExportFormat format : {ExportFormat::Json, ExportFormat::Dot, ExportFormat::GraphML})
        CHECK(export_graph(g, p, format) == export_graph(g, p, format));
}

TEST_CASE("graphml nodes carry their community index") {
    std::string xml = export_graph(two_triangles(), triangle_partition(), ExportFormat::GraphML);
    CHECK(xml.find("<node id=\"aa1\"><data key=\"community\">0</data></node>") !=
          std::string::npos);
    CHECK(xml.find("<node id=\"bb1\"><data key=\"community\">1</data></node>") !=
          std::string::npos);
    CHECK(xml.find("<edge source=\"aa1\" target=\"aa2\"/>") != std::string::npos);
}

TEST_CASE("export requires the partition to cover the graph") {
    FrozenGraph g = two_triangles();
    Partition partial = canonical_partition({{"aa1", "aa2", "aa3"}});
    CHECK_THROWS_AS(export_graph(g, partial, ExportFormat::Json), std::invalid_argument);
}

TEST_CASE("graph json round-trips through parse_graph_json") {
    FrozenGraph g = two_triangles();
    Partition p = triangle_partition();
    std::string json = export_graph(g, p, ExportFormat::Json);

    auto [g2, p2] = parse_graph_json(json);
    CHECK(g2.nodes == g.nodes);
    CHECK(g2.edges == g.edges);
    CHECK(p2.communities == p.communities);
    CHECK(export_graph(g2, p2, ExportFormat::Json) == json);

    CHECK_THROWS_AS(parse_graph_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_json("{}"), std::invalid_argument);
}

TEST_CASE("parse_export_format accepts exactly the three formats") {
    CHECK(parse_export_format("graphml") == ExportFormat::GraphML);
    CHECK(parse_export_format("dot") == ExportFormat::Dot);
    CHECK(parse_export_format("json") == ExportFormat::Json);
    CHECK_THROWS_AS(parse_export_format("svg"), std::invalid_argument);
}

TEST_CASE("snapshot json is deterministic with fixed key order") {
    Snapshot snapshot;
    snapshot.period = PeriodLabel::of(Cadence::Year, *timeutil::parse_iso8601("2018-06-01"));
    snapshot.graph = two_triangles();
    snapshot.node_count = 6;
    snapshot.edge_count = 6;
    snapshot.best = {triangle_partition(), 0.3571428571428571};
    snapshot.top_communities = snapshot.best.partition.communities;
    snapshot.top_tags = {{"aa1", 90}, {"bb1", 68}};

    std::string json = snapshot_to_json(snapshot);
    CHECK(json == snapshot_to_json(snapshot));

    // key order is documented and fixed
    CHECK(json.find("\"period\"") < json.find("\"node_count\""));
    CHECK(json.find("\"node_count\"") < json.find("\"edge_count\""));
    CHECK(json.find("\"edge_count\"") < json.find("\"modularity\""));
    CHECK(json.find("\"modularity\"") < json.find("\"top_communities\""));
    CHECK(json.find("\"top_communities\"") < json.find("\"top_tags\""));

    // modularity capped at 6 decimals
    CHECK(json.find("0.357143") != std::string::npos);

    SUBCASE("community sizes serialize in partition order") {
        std::size_t first = json.find("\"size\": 3");
        REQUIRE(first != std::string::npos);
        CHECK(json.find("\"size\": 3", first + 1) != std::string::npos);
    }

    SUBCASE("empty snapshot serializes empty lists") {
        Snapshot empty;
        empty.period = snapshot.period;
        std::string doc = snapshot_to_json(empty);
        CHECK(doc.find("\"top_communities\": []") != std::string::npos);
        CHECK(doc.find("\"top_tags\": []") != std::string::npos);
    }
}

TEST_CASE("report json has fixed keys") {
    RunReport report{10, 8, 2, 1};
    std::string json = report_to_json(report);
    CHECK(json.find("\"lines_read\": 10") != std::string::npos);
    CHECK(json.find("\"posts_processed\": 8") != std::string::npos);
    CHECK(json.find("\"skipped\": 2") != std::string::npos);
    CHECK(json.find("\"snapshots_emitted\": 1") != std::string::npos);
}
