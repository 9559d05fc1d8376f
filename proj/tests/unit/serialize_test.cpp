#include <doctest.h>

#include "spextree/serialize.hpp"
#include "spextree/tree.hpp"

using namespace spextree;
using nlohmann::json;

TEST_CASE("prediction JSON shape") {
    json doc = document("prediction", to_json(classify(path_graph(7), 60)));
    CHECK(doc["schema"] == "spextree/1");
    const json& p = doc["prediction"];
    CHECK(p["kind"] == "exact-unique");
    CHECK(p["theorem"] == "spider-classification");
    CHECK(p["graphs"][0]["family"] == "S");
    CHECK(p["graphs"][0]["n"] == 60);
    CHECK(p["graphs"][0]["k"] == 2);
    CHECK(p["graphs"][0]["p"] == 1);
    CHECK(p["lower"].contains("variant"));
    CHECK(p["lower"].contains("exact"));
    CHECK(p["lower"]["variant"].get<double>() < p["lower"]["exact"].get<double>());
    CHECK(p["upper"].is_number());
    CHECK(p["warnings"].is_array());
}

TEST_CASE("K descriptors serialize sides") {
    json g = to_json(GraphDescriptor::K(2, 28));
    CHECK(g["family"] == "K");
    CHECK(g["a"] == 2);
    CHECK(g["b"] == 28);
}

TEST_CASE("profile JSON carries the ambiguity flag") {
    json p = to_json(profile(path_graph(6)));
    CHECK(p["ambiguous_orientation"] == true);
    CHECK(p["q"] == 2);
    CHECK(p["spider"]["legs"] == json::array({3, 2}));
}

TEST_CASE("verification output is deterministic") {
    auto a = verify_prediction(path_graph(4), {5, 6, 20});
    auto b = verify_prediction(path_graph(4), {5, 6, 20});
    CHECK(to_json(a).dump() == to_json(b).dump());
    CHECK(to_csv(a) == to_csv(b));
    std::string csv = to_csv(a);
    CHECK(csv.rfind("n,predicted_rho,oracle_rho,outcome\n", 0) == 0);
    CHECK(csv.find("5,2.000000000000,2.000000000000,tie") != std::string::npos);
}
