#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "quasichar.h"

using Json = nlohmann::json;

namespace {

std::string fixture(const std::string& name) {
    const char* env = std::getenv("QCH_FIXTURES");
    std::string path = std::string(env && *env ? env : "fixtures") + "/" + name + ".json";
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Handle {
    qch_arrangement* value = nullptr;
    ~Handle() { qch_arrangement_free(value); }
};

struct Owned {
    char* value = nullptr;
    ~Owned() { qch_string_free(value); }
};

}  // namespace

TEST_CASE("parse and canonical serialization round-trip on every fixture") {
    for (const char* name : {"zsqrtm5", "braid3", "e1e2", "single2", "empty2", "section4",
                             "axes_scaled", "parallel_pair", "sqrt2", "golden5", "gauss", "golden_pair"}) {
        CAPTURE(name);
        Handle h;
        REQUIRE(qch_arrangement_parse(fixture(name).c_str(), &h.value) == QCH_OK);
        Owned out;
        REQUIRE(qch_arrangement_canonical_json(h.value, &out.value) == QCH_OK);
        Handle h2;
        REQUIRE(qch_arrangement_parse(out.value, &h2.value) == QCH_OK);
        Owned out2;
        REQUIRE(qch_arrangement_canonical_json(h2.value, &out2.value) == QCH_OK);
        CHECK(std::string(out.value) == out2.value);
    }
    Handle h;
    REQUIRE(qch_arrangement_parse(fixture("zsqrtm5").c_str(), &h.value) == QCH_OK);
    Owned out;
    REQUIRE(qch_arrangement_canonical_json(h.value, &out.value) == QCH_OK);
    Json doc = Json::parse(out.value);
    CHECK(doc["name"] == "zsqrtm5");
    CHECK(doc["rank"] == 2);
}

TEST_CASE("parse failures set the error message and status") {
    qch_arrangement* raw = nullptr;
    CHECK(qch_arrangement_parse("{not json", &raw) == QCH_INVALID_INPUT);
    CHECK(raw == nullptr);
    CHECK(std::string(qch_last_error()).size() > 0);
    CHECK(qch_arrangement_parse("{\"ring\":{\"type\":\"Z\"},\"vectors\":[[0,0]]}", &raw) ==
          QCH_INVALID_INPUT);
    CHECK(qch_arrangement_parse(nullptr, &raw) == QCH_INVALID_INPUT);
}

TEST_CASE("documents carry the pinned constituents") {
    Handle h;
    REQUIRE(qch_arrangement_parse(fixture("zsqrtm5").c_str(), &h.value) == QCH_OK);
    Owned out;
    REQUIRE(qch_coboundary(h.value, nullptr, &out.value) == QCH_OK);
    Json doc = Json::parse(out.value);
    CHECK(doc["period"]["norm"] == "6");
    REQUIRE(doc["constituents"].size() == 4);
    std::vector<std::string> texts;
    for (const auto& [key, value] : doc["constituents"].items())
        texts.push_back(value["text"].get<std::string>());
    CHECK(std::find(texts.begin(), texts.end(), "t^2 - 4*t + 4*t*x") != texts.end());
    CHECK(std::find(texts.begin(), texts.end(), "t^2 - t + t*x") != texts.end());
}

TEST_CASE("layers dot output") {
    Handle h;
    REQUIRE(qch_arrangement_parse(fixture("braid3").c_str(), &h.value) == QCH_OK);
    Owned dot;
    REQUIRE(qch_layers_dot(h.value, nullptr, &dot.value) == QCH_OK);
    CHECK(std::string(dot.value).find("digraph layers") == 0);
}

TEST_CASE("eval and codes entry points") {
    Handle h;
    REQUIRE(qch_arrangement_parse(fixture("section4").c_str(), &h.value) == QCH_OK);
    Owned eval_out;
    REQUIRE(qch_eval(h.value, "6", nullptr, &eval_out.value) == QCH_OK);
    Json eval_doc = Json::parse(eval_out.value);
    CHECK(eval_doc["brute_force_matches"] == true);

    Owned codes_out;
    REQUIRE(qch_codes(h.value, "4", "dual", nullptr, &codes_out.value) == QCH_OK);
    Json codes_doc = Json::parse(codes_out.value);
    CHECK(codes_doc["dual_size"] == "2");

    Owned bad;
    CHECK(qch_codes(h.value, "4", "nonsense", nullptr, &bad.value) == QCH_INVALID_INPUT);
}

TEST_CASE("resource limits surface as QCH_RESOURCE_LIMIT") {
    Handle h;
    REQUIRE(qch_arrangement_parse(fixture("braid3").c_str(), &h.value) == QCH_OK);
    qch_limits limits;
    qch_limits_default(&limits);
    limits.max_vectors = 1;
    Owned out;
    CHECK(qch_charpoly(h.value, &limits, &out.value) == QCH_RESOURCE_LIMIT);
}

TEST_CASE("verify returns OK on a good fixture and the document reports counts") {
    Handle h;
    REQUIRE(qch_arrangement_parse(fixture("e1e2").c_str(), &h.value) == QCH_OK);
    Owned out;
    REQUIRE(qch_verify(h.value, 8, nullptr, &out.value) == QCH_OK);
    Json doc = Json::parse(out.value);
    CHECK(doc["failed"] == 0);
    CHECK(doc["passed"].get<int>() > 5);
}

TEST_CASE("section4 entry point") {
    Owned out;
    REQUIRE(qch_section4(nullptr, &out.value) == QCH_OK);
    Json doc = Json::parse(out.value);
    CHECK(doc["ok"] == true);
    CHECK(doc["rows"].size() == 11);
}
