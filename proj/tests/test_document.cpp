#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "glcoh/document.hpp"

using namespace glcoh;

TEST_CASE("cmd_sym document") {
    auto doc = cmd_sym(Partition({2}), 2, 1, PathChoice::orbit);
    CHECK(doc.kind == "sym");
    CHECK(doc.series.sparse() ==
          std::vector<std::pair<int, Int>>{{0, 2}, {2, 2}, {4, 2}});
    CHECK_FALSE(doc.agree.has_value());

    auto both = cmd_sym(Partition({2}), 3, 1, PathChoice::both);
    REQUIRE(both.agree.has_value());
    CHECK(*both.agree);
    CHECK(both.series == *both.series_sandwich);
}

TEST_CASE("cmd_gamma document") {
    auto doc = cmd_gamma(2, 1);
    CHECK(doc.series.sparse() == std::vector<std::pair<int, Int>>{
                                     {0, 1}, {2, 3}, {4, 1}, {6, 1}});
    CHECK(doc.series.top_degree() == 6);
    CHECK(doc.series.euler_characteristic() == 6);
}

TEST_CASE("json output is deterministic and structured") {
    auto doc1 = cmd_sym(Partition({2}), 2, 1, PathChoice::orbit);
    auto doc2 = cmd_sym(Partition({2}), 2, 1, PathChoice::orbit);
    doc2.elapsed_ms = doc1.elapsed_ms + 5;  // timing must not leak into JSON
    CHECK(to_json(doc1) == to_json(doc2));

    auto j = nlohmann::json::parse(to_json(doc1));
    CHECK(j["params"]["kind"] == "sym");
    CHECK(j["params"]["mu"] == nlohmann::json::array({2}));
    CHECK(j["params"]["p"] == 2);
    CHECK(j["series"] ==
          nlohmann::json::array({{0, 2}, {2, 2}, {4, 2}}));
    CHECK(j["euler_char"] == 6);
    CHECK(j["top_degree"] == 4);
    CHECK(!j.contains("elapsed_ms"));
    CHECK(!j["meta"].contains("elapsed_ms"));
}

TEST_CASE("csv round trip is lossless") {
    auto doc = cmd_gamma(2, 1);
    std::istringstream in(to_csv(doc));
    std::string line;
    std::getline(in, line);
    CHECK(line == "degree,dimension");
    std::vector<std::pair<int, Int>> parsed;
    while (std::getline(in, line)) {
        auto comma = line.find(',');
        parsed.emplace_back(std::stoi(line.substr(0, comma)),
                            Int(line.substr(comma + 1)));
    }
    CHECK(parsed == doc.series.sparse());
}

TEST_CASE("pretty output mentions the essentials") {
    auto doc = cmd_gamma(2, 1);
    std::string text = to_pretty(doc);
    CHECK(text.find("gamma") != std::string::npos);
    CHECK(text.find("euler characteristic: 6") != std::string::npos);
    CHECK(text.find("top degree: 6") != std::string::npos);
}

TEST_CASE("cmd_tensor and cmd_ext") {
    auto t = cmd_tensor(2, 2, 1);
    CHECK(t.series.value_at_one() == 8);

    SkewTuple box({Partition({1})});
    auto e = cmd_ext(box, box, 3, 1);
    CHECK(e.series.sparse() ==
          std::vector<std::pair<int, Int>>{{0, 1}, {2, 1}, {4, 1}});
}
