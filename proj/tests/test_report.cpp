#include <doctest.h>

#include "hyponorm/matrices.hpp"
#include "hyponorm/report.hpp"
#include "hyponorm/symbolic.hpp"

using namespace hyponorm;

TEST_SUITE("report") {

TEST_CASE("matrices serialize as p/q strings") {
    const FactorableGenerators g(WeightSequence::linear(2, 1));
    const auto q = finite_section(g, MatrixKind::Q, 1);
    const auto j = to_json(q);
    REQUIRE(j.is_array());
    CHECK(j[0][0] == "7/72");
    CHECK(j[1][0] == "-11/270");
    CHECK(j[1][1] == "83/405");
    CHECK(to_json(ExactMatrix::identity(2))[0][0] == "1/1");
    CHECK(matrix_from_json(j) == q);

    const auto m = finite_section(g, MatrixKind::M, 6);
    CHECK(matrix_from_json(to_json(m)) == m);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1/2"],["1/3","1/4"]])")), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["x"]])")), std::invalid_argument);
}

TEST_CASE("polynomials and rational functions") {
    const Polynomial p({1, Rational(-1, 2), 3});
    const auto j = to_json(p);
    CHECK(j.dump() == R"(["1/1","-1/2","3/1"])");
    CHECK(polynomial_from_json(j) == p);
    const auto f = to_json(symbolic_tridiagonal(LinearFamily{2, 1}).z);
    CHECK(f["variable"] == "n");
    CHECK(f["numerator"].dump() == R"(["3/1","4/1","1/1"])");
    CHECK(f["denominator"].dump() == R"(["4/1","4/1","1/1"])");
}

TEST_CASE("certification JSON is deterministic") {
    const FactorableGenerators g(WeightSequence::linear(2, 1));
    CertifyOptions opts;
    opts.bounds = true;
    opts.cross_check_minors = true;
    const auto a = to_json(certify(g, 40, opts), false, true).dump(2);
    CertifyOptions serial = opts;
    serial.execution = Execution::serial;
    const auto b = to_json(certify(g, 40, serial), false, true).dump(2);
    CHECK(a == b);

    const auto j = Json::parse(a);
    CHECK(j["verdict"] == "CertifiedPositive");
    CHECK(j["N"] == 40);
    CHECK(j["deltas"].size() == 41);
    CHECK(j["deltas"][0] == "197/720");
    CHECK_FALSE(j.contains("timings_ms"));
    CHECK(to_json(certify(g, 5), true).contains("timings_ms"));
}

}
