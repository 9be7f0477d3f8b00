#include <doctest.h>

#include <random>

#include <ellgw/serialization.hpp>

#include "oracles.hpp"

using namespace ellgw;

TEST_CASE("rational_json_is_a_string")
{
    CHECK(to_json(make_rational(-7, 5760)).dump() == "\"-7/5760\"");
    CHECK(to_json(Rational(3)).dump() == "\"3\"");
    CHECK(rational_from_json(Json("5/10")) == make_rational(1, 2));
    CHECK_THROWS_AS(rational_from_json(Json(0.5)), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(Json("x")), std::invalid_argument);
}

TEST_CASE("qseries_json_format")
{
    const QSeries s(2, {make_rational(-1, 24), Rational(1), Rational(3)});
    CHECK(to_json(s).dump() == R"({"order":2,"coeffs":["-1/24","1","3"]})");
}

TEST_CASE("qseries_round_trip")
{
    std::mt19937 rng(41);
    for (int order = 0; order <= 12; ++order) {
        const QSeries s = oracle::random_series(rng, order, false);
        CHECK(qseries_from_json(Json::parse(to_json(s).dump())) == s);
    }
}

TEST_CASE("qseries_malformed")
{
    CHECK_THROWS_AS(qseries_from_json(Json::parse(R"({"order":2,"coeffs":["1","2"]})")), std::invalid_argument);
    CHECK_THROWS_AS(qseries_from_json(Json::parse(R"({"coeffs":["1"]})")), std::invalid_argument);
    CHECK_THROWS_AS(qseries_from_json(Json::parse(R"({"order":0,"coeffs":[1]})")), std::invalid_argument);
    CHECK_THROWS_AS(qseries_from_json(Json::parse(R"([1,2])")), std::invalid_argument);
    CHECK_THROWS_AS(qseries_from_json(Json::parse(R"({"order":-1,"coeffs":[]})")), std::invalid_argument);
}

TEST_CASE("diffpoly_json_format_and_round_trip")
{
    const DiffPoly p = DiffPoly(JetMonomial({0, 0, 0, 0}), make_rational(1, 24))
                       + DiffPoly(JetMonomial({1, 1}), make_rational(-1, 24));
    const Json j = to_json(p);
    REQUIRE(j.is_array());
    CHECK(j.size() == 2);
    for (const auto &t : j) {
        CHECK(t.contains("indices"));
        CHECK(t.contains("coeff"));
    }
    CHECK(diffpoly_from_json(Json::parse(j.dump())) == p);
    CHECK(to_json(DiffPoly()).dump() == "[]");

    std::mt19937 rng(42);
    for (int d = 1; d <= 8; ++d) {
        const DiffPoly r = oracle::random_poly(rng, d, 5);
        CHECK(diffpoly_from_json(to_json(r)) == r);
    }
}

TEST_CASE("diffpoly_malformed")
{
    CHECK_THROWS_AS(diffpoly_from_json(Json::parse(R"({"indices":[0]})")), std::invalid_argument);
    CHECK_THROWS_AS(diffpoly_from_json(Json::parse(R"([{"indices":[0]}])")), std::invalid_argument);
    CHECK_THROWS_AS(diffpoly_from_json(Json::parse(R"([{"indices":["a"],"coeff":"1"}])")), std::invalid_argument);
    CHECK_THROWS_AS(diffpoly_from_json(Json::parse(R"([{"indices":[-1],"coeff":"1"}])")), std::invalid_argument);
}

TEST_CASE("quasimodular_json_format_and_round_trip")
{
    QuasiModularRep r{4, {}};
    r.terms[{2, 0, 0}] = make_rational(1, 1152);
    r.terms[{0, 1, 0}] = make_rational(1, 2880);
    const Json j = to_json(r);
    CHECK(j["weight"] == 4);
    CHECK(j["terms"].size() == 2);
    CHECK(j["terms"][0].dump() == R"({"e2":0,"e4":1,"e6":0,"coeff":"1/2880"})");
    CHECK(quasimodular_from_json(Json::parse(j.dump())) == r);
}

TEST_CASE("quasimodular_malformed")
{
    CHECK_THROWS_AS(quasimodular_from_json(Json::parse(R"({"weight":4,"terms":[{"e2":1,"e4":0,"e6":0,"coeff":"1"}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(quasimodular_from_json(Json::parse(R"({"weight":2,"terms":[{"e2":1,"coeff":"1"}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(quasimodular_from_json(Json::parse(R"({"weight":"2","terms":[]})")), std::invalid_argument);
    CHECK_THROWS_AS(quasimodular_from_json(Json::parse(R"({"terms":[]})")), std::invalid_argument);
}

TEST_CASE("invariant_record_json")
{
    InvariantRecord rec;
    rec.insertions = {0};
    rec.genus = 1;
    rec.pipeline = Pipeline::graph;
    rec.q_order = 1;
    rec.series = QSeries(1, {make_rational(-1, 24), Rational(1)});
    CHECK(to_json(rec).dump()
          == R"({"insertions":[0],"genus":1,"pipeline":"graph","q_order":1,"series":{"order":1,"coeffs":["-1/24","1"]}})");

    rec.insertions = {1};
    rec.genus.reset();
    rec.pipeline = Pipeline::fock;
    rec.series = QSeries(1);
    const Json j = to_json(rec);
    CHECK(j["genus"].is_null());
    CHECK(j["pipeline"] == "fock");

    rec.quasi_modular = QuasiModularRep{2, {{{1, 0, 0}, make_rational(-1, 24)}}};
    CHECK(to_json(rec).contains("quasi_modular"));
}
