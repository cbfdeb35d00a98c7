#include <doctest.h>

#include "planepart/json_io.hpp"
#include "planepart/render.hpp"
#include "test_support.hpp"

using namespace planepart;
using planepart::test::pp;

TEST_CASE("plane partition json roundtrip") {
    const auto p = pp({{2, 1}, {1}});
    const Json j = to_json(p);
    CHECK(j.dump() == R"({"rows":[[2,1],[1]]})");
    CHECK(plane_partition_from_json(j) == p);
    CHECK(plane_partition_from_json(Json::parse(R"({"rows":[]})")).empty());
    CHECK_THROWS_AS(plane_partition_from_json(Json::parse(R"({"rows":[[1,2]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(plane_partition_from_json(Json::parse(R"({"cols":[]})")),
                    std::invalid_argument);
}

TEST_CASE("partition json") {
    CHECK(to_json(Partition({3, 1})).dump() == R"({"parts":[3,1]})");
    CHECK(partition_from_json(Json::parse(R"({"parts":[3,1]})")) == Partition({3, 1}));
}

TEST_CASE("analysis report json shape") {
    const Json j = to_json(analyze(pp({{1, 1}, {1, 1}})));
    CHECK(j["k"] == 1);
    REQUIRE(j["components"].size() == 1);
    const Json& comp = j["components"][0];
    CHECK(comp["value"] == 1);
    CHECK(comp["cells"].size() == 4);
    CHECK(comp["cells"][0] == Json::array({1, 1}));
    REQUIRE(comp["border_components"].size() == 2);
    CHECK(comp["border_components"][0]["level"] == 2);
}

TEST_CASE("tableau and matrix json roundtrip") {
    const std::vector<std::vector<MarkedValue>> rows{{marked(2), unmarked(1)}};
    const MarkedShiftedTableau t{rows};
    const Json j = to_json(t);
    CHECK(j["shape"] == Json::array({2}));
    CHECK(marked_tableau_from_json(j) == t);

    MarkedMatrix m(2, 2);
    m.set(1, 2, marked(2));
    const Json jm = to_json(m);
    CHECK(jm.dump() == R"({"rows":[[0,{"v":2,"m":true}],[0,0]]})");
    CHECK(matrix_from_json(jm) == m);
}

TEST_CASE("series json dump") {
    const auto series = rhs_theorem_b(1, 1, 2);
    const Json j = to_json(series, "t");
    CHECK(j["var"] == "s");
    CHECK(j["trunc"] == 2);
    REQUIRE(j["coeffs"].size() == 3);
    CHECK(j["coeffs"][1]["coeffs"] == Json::array({"1", "-1"}));
}

TEST_CASE("verification report json") {
    const auto report = verify("theorem-b", 1, 1, 3);
    const Json j = to_json(report);
    CHECK(j["identity"] == "theorem-b");
    CHECK(j["ok"] == true);
    CHECK(j["qtmax"].is_null());
    CHECK(j["degrees"].size() == 4);
    for (const auto& d : j["degrees"]) CHECK(d["match"] == true);
}

TEST_CASE("renderings are deterministic and well formed") {
    const auto p = pp({{1, 1}, {1, 1}});
    const auto analysis = analyze(p);
    const std::string ascii = render_ascii(p, analysis);
    CHECK(ascii == render_ascii(p, analysis));
    CHECK(ascii.find("k=1") != std::string::npos);

    const std::string svg = render_svg(p, analysis);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("h2") != std::string::npos);  // the level-2 cell label

    CHECK(render_ascii(PlanePartition(), analyze(PlanePartition())).find("k=0") !=
          std::string::npos);
}
