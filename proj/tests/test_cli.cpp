#include "cli.hpp"

#include "doctest.h"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using cremona::cli::run;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content)
{
    const auto path = std::filesystem::temp_directory_path() / ("cremona_cli_" + name + ".json");
    std::ofstream(path) << content;
    return path.string();
}

void check_round_trip(const std::string& text)
{
    const Json doc = Json::parse(text);
    CHECK(doc.dump(2) + "\n" == text);
}

} // namespace

TEST_CASE("bound")
{
    auto r = invoke({"bound", "--p", "3", "--t", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("rank bound    3") != std::string::npos);

    r = invoke({"bound", "--p", "3", "--t", "1", "--format", "json"});
    CHECK(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["command"] == "bound");
    CHECK(doc["results"]["rank_bound"] == 3);
    CHECK(doc["results"]["attained_by"] == "Fermat cubic surface, rank 3");
    check_round_trip(r.out);

    r = invoke({"bound", "--p", "7", "--q", "2", "--d", "4", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["results"]["t"] == 3);
    CHECK(Json::parse(r.out)["results"]["torus_bound"] == 2);
}

TEST_CASE("exit codes")
{
    CHECK(invoke({"bound", "--p", "7", "--t", "4"}).code == 2);
    CHECK(invoke({"bound", "--p", "3", "--q", "9"}).code == 2);
    CHECK(invoke({"bound", "--p", "8", "--t", "1"}).code == 2);
    CHECK(invoke({"bound", "--t", "1"}).code == 1);
    CHECK(invoke({"bound", "--p", "5", "--t", "1", "--q", "4"}).code == 1);
    CHECK(invoke({"frobnicate"}).code == 1);
    CHECK(invoke({}).code == 1);
    CHECK(invoke({"cyclotomic", "--n", "0"}).code == 2);
    CHECK(invoke({"lemma", "--primes", "2,x"}).code == 1);
    CHECK(invoke({"lemma", "--primes", "2,4"}).code == 2);
    CHECK(invoke({"sharpness", "--t", "5", "--d", "3"}).code == 2);
    CHECK(invoke({"weyl-audit", "--format", "xml"}).code == 1);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("verification failures exit 3 and name the invariant")
{
    const auto r = invoke({"weyl-audit", "--p", "2", "--format", "json"});
    CHECK(r.code == 3);
    const Json doc = Json::parse(r.out);
    CHECK(doc["pass"] == false);
    CHECK(doc["results"]["failures"].size() >= 1);
    CHECK(doc["results"]["failures"].back().get<std::string>().find("multiplicity of -1 mod 2") !=
          std::string::npos);
}

TEST_CASE("cyclotomic")
{
    auto r = invoke({"cyclotomic", "--n", "12"});
    CHECK(r.code == 0);
    CHECK(r.out.find("X^4 - X^2 + 1") != std::string::npos);

    r = invoke({"cyclotomic", "--n", "20", "--p", "5", "--format", "json"});
    CHECK(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["results"]["degree"] == 8);
    bool saw_t4 = false;
    for (const auto& row : doc["results"]["reduction"]["order_t_multiplicities"])
        if (row["t"] == 4) {
            CHECK(row["multiplicity"] == 4);
            saw_t4 = true;
        }
    CHECK(saw_t4);
    check_round_trip(r.out);
}

TEST_CASE("lemma")
{
    auto r = invoke({"lemma", "--max-n", "60", "--primes", "2,3,5,7,11"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);

    r = invoke({"lemma", "--max-n", "20", "--primes", "13", "--format", "json"});
    CHECK(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["pass"] == true);
    CHECK(doc["results"]["counterexamples"].empty());
    check_round_trip(r.out);
}

TEST_CASE("weyl-audit")
{
    auto r = invoke({"weyl-audit"});
    CHECK(r.code == 0);
    CHECK(r.out.find("max multiplicity of -1: 2") != std::string::npos);

    r = invoke({"weyl-audit", "--format", "json"});
    const Json doc = Json::parse(r.out);
    CHECK(doc["pass"] == true);
    CHECK(doc["results"]["elements"].size() == 24);
    CHECK(doc["results"]["max_minus_one_multiplicity"] == 2);
    check_round_trip(r.out);
}

TEST_CASE("torus-rank from a file")
{
    const auto path = write_temp("phi4", R"({"dimension": 2, "sigma": [[0, -1], [1, 0]], "chi_order": 4})");
    auto r = invoke({"torus-rank", "--file", path, "--p", "5", "--format", "json"});
    CHECK(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["results"]["eigenspace_rank"] == 1);
    CHECK(doc["results"]["upper_bound"] == 1);
    CHECK(doc["results"]["eps"] == 3);
    check_round_trip(r.out);

    // --t overrides chi_order; t = 4 does not divide 6.
    CHECK(invoke({"torus-rank", "--file", path, "--p", "7"}).code == 2);
    CHECK(invoke({"torus-rank", "--file", path, "--p", "7", "--t", "2"}).code == 0);

    const auto unipotent = write_temp("unipotent", R"({"sigma": [[1, 1], [0, 1]], "chi_order": 1})");
    CHECK(invoke({"torus-rank", "--file", unipotent, "--p", "5"}).code == 2);
    CHECK(invoke({"torus-rank", "--file", "/nonexistent/torus.json", "--p", "5"}).code == 1);
}

TEST_CASE("oracle from a file and as a sweep")
{
    const auto path = write_temp("weil", R"({"q": 2, "sigma": [[0, 1], [1, 0]]})");
    auto r = invoke({"oracle", "--file", path, "--format", "json"});
    CHECK(r.code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["results"]["invariants"] == Json::array({1, 3}));
    CHECK(doc["results"]["group_order"] == 3);
    check_round_trip(r.out);

    CHECK(invoke({"oracle", "--file", path, "--p", "2"}).code == 2);

    r = invoke({"oracle", "--seed", "0", "--format", "json"});
    CHECK(r.code == 0);
    doc = Json::parse(r.out);
    CHECK(doc["results"]["tori"] == 200);
    CHECK(doc["results"]["violations"].empty());
    CHECK(r.out == invoke({"oracle", "--seed", "0", "--format", "json"}).out);
    check_round_trip(r.out);
}

TEST_CASE("sharpness")
{
    auto r = invoke({"sharpness", "--format", "json"});
    CHECK(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["pass"] == true);
    CHECK(doc["results"]["rows"].size() == 27);
    check_round_trip(r.out);

    r = invoke({"sharpness", "--t", "4", "--d", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("torus document schema")
{
    using cremona::cli::parse_torus_document;
    using cremona::cli::UsageError;
    CHECK(parse_torus_document(R"({"sigma": [[1]]})").sigma.dimension() == 1);
    CHECK(parse_torus_document(R"({"q": 9, "sigma": [[-1]]})").q == 9u);
    CHECK_THROWS_AS(parse_torus_document(R"({"sigma": [[1]], "extra": 1})"), UsageError);
    CHECK_THROWS_AS(parse_torus_document(R"({"sigma": [[1, 0]]})"), UsageError);
    CHECK_THROWS_AS(parse_torus_document(R"({"sigma": [[1, 0], [0]]})"), UsageError);
    CHECK_THROWS_AS(parse_torus_document(R"({"dimension": 2, "sigma": [[1]]})"), UsageError);
    CHECK_THROWS_AS(parse_torus_document(R"({"sigma": [[1.5]]})"), UsageError);
    CHECK_THROWS_AS(parse_torus_document(R"({"chi_order": 2})"), UsageError);
    CHECK_THROWS_AS(parse_torus_document(R"({"sigma": [[1]], "q": 0})"), UsageError);
    CHECK_THROWS_AS(parse_torus_document("[1, 2]"), UsageError);
    CHECK_THROWS_AS(parse_torus_document("{"), UsageError);
}
