#include <doctest.h>

#include <sstream>

#include <ellgw/cli.hpp>
#include <ellgw/serialization.hpp>

using namespace ellgw;

namespace
{

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "ellgw");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("compute_both_pipelines_agree")
{
    const Run r = run({"compute", "--insertions", "0", "--q-order", "4", "--pipeline", "both"});
    CHECK(r.code == exit_ok);
    const Json j = Json::parse(r.out);
    REQUIRE(j["records"].size() == 2);
    CHECK(j["records"][0]["pipeline"] == "fock");
    CHECK(j["records"][1]["pipeline"] == "graph");
    const QSeries expected(4, {make_rational(-1, 24), Rational(1), Rational(3), Rational(4), Rational(7)});
    for (const auto &rec : j["records"]) {
        CHECK(rec["genus"] == 1);
        CHECK(qseries_from_json(rec["series"]) == expected);
    }
    CHECK(j["verdict"]["equal"] == true);
    CHECK(j["verdict"]["mismatches"].empty());
}

TEST_CASE("compute_odd_insertion_has_null_genus")
{
    const Run r = run({"compute", "--insertions", "1"});
    CHECK(r.code == exit_ok);
    const Json j = Json::parse(r.out);
    const Json &rec = j["records"][0];
    CHECK(rec["genus"].is_null());
    CHECK(rec["q_order"] == 10);
    CHECK(qseries_from_json(rec["series"]).is_zero());
}

TEST_CASE("compute_table_format")
{
    const Run r = run({"compute", "--insertions", "0,0", "--pipeline", "fock", "--format", "table", "--q-order", "3"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("coefficient") != std::string::npos);
    CHECK(r.out.find("genus: 1") != std::string::npos);
    // One row per coefficient, right-aligned to a common width.
    std::istringstream in(r.out);
    std::string line;
    std::vector<std::string> rows;
    bool in_table = false;
    while (std::getline(in, line)) {
        if (line.find("coefficient") != std::string::npos) {
            in_table = true;
            rows.push_back(line);
            continue;
        }
        if (in_table) {
            if (line.empty() || line.find_first_not_of(' ') == std::string::npos) {
                break;
            }
            if (line.find_first_not_of(" -/0123456789") != std::string::npos) {
                break;
            }
            rows.push_back(line);
        }
    }
    REQUIRE(rows.size() == 5);
    for (const auto &row : rows) {
        CHECK(row.size() == rows[0].size());
    }
}

TEST_CASE("compare_is_compute_with_both")
{
    const Run a = run({"compare", "--insertions", "0,2", "--q-order", "5"});
    const Run b = run({"compute", "--insertions", "0,2", "--q-order", "5", "--pipeline", "both"});
    CHECK(a.code == exit_ok);
    CHECK(a.out == b.out);
}

TEST_CASE("output_is_byte_stable")
{
    const std::vector<std::string> args{"compute", "--insertions", "2,1,1", "--q-order", "5", "--pipeline", "both"};
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == exit_ok);
    CHECK(a.out == b.out);
}

TEST_CASE("flow_bound_flag")
{
    const Run a = run({"compute", "--insertions", "0,0", "--q-order", "5", "--pipeline", "graph"});
    const Run b = run({"compute", "--insertions", "0,0", "--q-order", "5", "--pipeline", "graph", "--flow-bound", "10"});
    CHECK(b.code == exit_ok);
    CHECK(a.out == b.out);
    // A bound that is too small makes the pipelines disagree, reported as a mismatch.
    const Run c = run({"compute", "--insertions", "0,0", "--q-order", "5", "--pipeline", "both", "--flow-bound", "1"});
    CHECK(c.code == exit_mismatch);
    CHECK(Json::parse(c.out)["verdict"]["equal"] == false);
}

TEST_CASE("vertex_command")
{
    Run r = run({"vertex", "0"});
    CHECK(r.code == exit_ok);
    Json j = Json::parse(r.out);
    CHECK(j["k"] == 0);
    CHECK(j["vertex"].dump() == R"([{"indices":[0,0],"coeff":"1/2"}])");

    r = run({"vertex", "1"});
    CHECK(Json::parse(r.out)["vertex"].dump() == R"([{"indices":[0,0,0],"coeff":"1/6"}])");

    r = run({"vertex", "2"});
    j = Json::parse(r.out);
    CHECK(j["vertex"].size() == 2);
    REQUIRE(j["genus_split"].size() == 2);
    CHECK(j["genus_split"][0]["genus"] == 0);
    CHECK(j["genus_split"][1]["poly"].dump() == R"([{"indices":[1,1],"coeff":"-1/24"}])");

    CHECK(run({"vertex", "-1"}).code == exit_ok);
    CHECK(run({"vertex", "-2"}).code == exit_invalid);
    CHECK(run({"vertex"}).code == exit_invalid);
}

TEST_CASE("check_suites")
{
    for (const char *suite : {"propagator", "selfloop", "kernel", "commutator"}) {
        const Run r = run({"check", suite});
        CHECK(r.code == exit_ok);
        const Json j = Json::parse(r.out);
        CHECK(j["pass"] == true);
        CHECK(j["results"].size() == 1);
    }
    const Run all = run({"check", "all"});
    CHECK(all.code == exit_ok);
    CHECK(Json::parse(all.out)["results"].size() == 4);
    CHECK(run({"check", "nonsense"}).code == exit_invalid);
}

TEST_CASE("recognize_command")
{
    Run r = run({"recognize", "--insertions", "2", "--q-order", "10"});
    CHECK(r.code == exit_ok);
    Json j = Json::parse(r.out);
    CHECK(j["recognized"] == true);
    CHECK(j["quasi_modular"]["weight"] == 4);

    r = run({"recognize", "--insertions", "2", "--q-order", "10", "--weight", "6"});
    CHECK(r.code == exit_mismatch);
    j = Json::parse(r.out);
    CHECK(j["recognized"] == false);
    CHECK(j["failure"].contains("q_power"));

    CHECK(run({"recognize", "--insertions", "2", "--q-order", "4"}).code == exit_invalid);
}

TEST_CASE("invalid_input_exits_with_two")
{
    CHECK(run({"compute"}).code == exit_invalid);
    CHECK(run({"compute", "--insertions", "0,-1"}).code == exit_invalid);
    CHECK(run({"compute", "--insertions", "a"}).code == exit_invalid);
    CHECK(run({"compute", "--insertions", "0", "--q-order", "-1"}).code == exit_invalid);
    CHECK(run({"compute", "--insertions", "0", "--pipeline", "other"}).code == exit_invalid);
    CHECK(run({"compute", "--insertions", "0", "--bogus"}).code == exit_invalid);
    CHECK(run({"compute", "--insertions", "2", "--lambda-order", "1"}).code == exit_invalid);
    CHECK(run({"frobnicate"}).code == exit_invalid);
    CHECK(run({}).code == exit_invalid);
    const Run bad = run({"compute", "--insertions", "0,-1"});
    CHECK(bad.out.empty());
    CHECK(!bad.err.empty());
}

TEST_CASE("help_exits_cleanly")
{
    CHECK(run({"--help"}).code == exit_ok);
    CHECK(run({"compute", "--help"}).code == exit_ok);
}
