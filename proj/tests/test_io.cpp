#include "helpers.hpp"
#include "json_io.hpp"

#include <doctest.h>

using namespace testing;
using liealg::io::json;

TEST_SUITE("json-io") {

TEST_CASE("algebra round trip is bit exact") {
    std::string text = R"({"dim":3,"brackets":[{"i":1,"j":3,"coeffs":["-1/2","0","0"]},{"i":2,"j":3,"coeffs":["1","3/7","0"]}]})";
    StructureTensor t = io::algebra_from_json(io::parse_text(text));
    CHECK(t.coeff(2, 0, 0) == Q(1, 2));
    CHECK(io::algebra_to_json(t).dump() == text);
}

TEST_CASE("writer normalizes to lowest terms and ascending pairs") {
    StructureTensor t = tensor(3, {{3, 1, {{1, 2}}}, {2, 1, {{3, 1}}}});
    CHECK(io::algebra_to_json(t).dump() ==
          R"({"dim":3,"brackets":[{"i":1,"j":2,"coeffs":["0","0","-1"]},{"i":1,"j":3,"coeffs":["-2","0","0"]}]})");
    CHECK(io::to_json(Scalar(Rational(6, 4))) == "3/2");
    CHECK(io::to_json(Scalar::sqrt_of(Rational(2))).dump() == R"({"a":"0","b":"1","d":2})");
}

TEST_CASE("schema violations") {
    auto bad = [](const char* s) { CHECK_THROWS_AS(io::algebra_from_json(io::parse_text(s)), io::InputError); };
    bad(R"({"brackets":[]})");
    bad(R"({"dim":2,"brackets":[{"i":2,"j":1,"coeffs":["1","0"]}]})");
    bad(R"({"dim":2,"brackets":[{"i":1,"j":2,"coeffs":["1"]}]})");
    bad(R"({"dim":2,"brackets":[{"i":1,"j":2,"coeffs":["1","x"]}]})");
    bad(R"({"dim":2,"brackets":[{"i":1,"j":2,"coeffs":["1","0"]},{"i":1,"j":2,"coeffs":["1","0"]}]})");
    CHECK_THROWS_AS(io::parse_text("{"), io::InputError);
    CHECK_THROWS_AS(io::matrix_from_json(io::parse_text(R"([["1","2"],["3"]])")), io::InputError);
}

TEST_CASE("scalars and labels") {
    CHECK(io::scalar_from_json(io::parse_text(R"({"a":"1","b":"1/2","d":3})")) == Scalar(Rational(1), Rational(1, 2), 3));
    CHECK(io::scalar_from_json(io::parse_text("5")) == Scalar(5));
    ClassLabel l = ClassLabel::g3_2_1(Q(-1, 3), 2);
    json j = io::label_to_json(l);
    CHECK(j["family"] == "G3_2_1");
    CHECK(j["params"]["lambda_inv"] == "-3");
    CHECK(j["abelian_ext"] == 2);
    ClassLabel back = io::label_from_json(j["family"], j["params"], j["abelian_ext"]);
    CHECK(back.same_class(l));
    CHECK(back.lambda == l.lambda);
    ClassLabel e = ClassLabel::g3_2_3(Rational(2));
    e.orientation = -1;
    json je = io::label_to_json(e);
    CHECK(je["params"]["phi"].get<double>() == doctest::Approx(3 * std::acos(-1.0) / 4));
    CHECK_THROWS_AS(io::label_from_json("G4_2_3", io::parse_text(R"({"lambda":{"a":"0","b":"1","d":2}})"), 0), io::InputError);
    CHECK_THROWS_AS(io::label_from_json("nope", json::object(), 0), io::InputError);
}

}
