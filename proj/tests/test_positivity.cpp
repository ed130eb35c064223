#include <doctest.h>

#include "hyponorm/errors.hpp"
#include "hyponorm/matrices.hpp"
#include "hyponorm/positivity.hpp"
#include "oracles.hpp"

using namespace hyponorm;

namespace {

const FactorableGenerators& odd() {
    static const FactorableGenerators g(WeightSequence::linear(2, 1));
    return g;
}

TridiagonalForm reduce(const FactorableGenerators& g, std::size_t N, Execution exec = Execution::parallel) {
    return tridiagonalize(finite_section(g, MatrixKind::Q, N, exec), elimination_multipliers(g, N), exec);
}

}  // namespace

TEST_SUITE("positivity") {

TEST_CASE("elimination multipliers") {
    CHECK(elimination_multiplier(odd(), 0) == Rational(3, 4));
    CHECK(elimination_multiplier(odd(), 1) == Rational(8, 9));
    for (std::size_t n = 0; n <= 50; ++n) {
        REQUIRE(elimination_multiplier_generic(odd(), n) == odd_weights::z(n));
    }
    // constant weights: off-diagonal interrupter entries vanish, so no ratio
    const FactorableGenerators flat(WeightSequence::linear(0, 1));
    CHECK_THROWS_AS(elimination_multiplier(flat, 0), DegenerateFactorError);
}

TEST_CASE("tridiagonal form for N = 1") {
    const auto t = reduce(odd(), 1);
    REQUIRE(t.d.size() == 2);
    CHECK(t.d[0] == Rational(197, 720));
    CHECK(t.d[1] == Rational(83, 405));
    REQUIRE(t.s.size() == 1);
    CHECK(t.s[0] == Rational(-7, 36));
    const auto q = finite_section(odd(), MatrixKind::Q, 1);
    const Rational det_q = q(0, 0) * q(1, 1) - q(0, 1) * q(0, 1);
    CHECK(t.d[0] * t.d[1] - t.s[0] * t.s[0] == Rational(2663, 145800));
    CHECK(det_q == Rational(2663, 145800));
}

TEST_CASE("tridiagonal entries match the closed forms") {
    const auto t4 = reduce(odd(), 4);
    for (std::size_t n = 0; n < 4; ++n) CHECK(t4.d[n] == odd_weights::d(n));
    CHECK(t4.d[4] == q_closed_2n1(4, 4));
    CHECK(odd_weights::d(0) == Rational(197, 720));
    CHECK(odd_weights::d(1) == Rational(13488) / 34020);
    CHECK(odd_weights::s(0) == Rational(-7, 36));
    CHECK(odd_weights::final_diagonal(1) == Rational(83, 405));

    const auto t = reduce(odd(), 51);
    for (std::size_t n = 0; n <= 50; ++n) {
        REQUIRE(t.d[n] == odd_weights::d(n));
        REQUIRE(t.s[n] == odd_weights::s(n));
    }
    CHECK(t.d[51] == odd_weights::final_diagonal(51));
}

TEST_CASE("reduced matrix is exactly tridiagonal") {
    const std::size_t N = 20;
    const auto q = finite_section(odd(), MatrixKind::Q, N);
    const auto y = congruence(q, elimination_multipliers(odd(), N), Execution::serial);
    for (std::size_t i = 0; i <= N; ++i) {
        for (std::size_t j = 0; j <= N; ++j) {
            if ((i > j ? i - j : j - i) > 1) REQUIRE(sgn(y(i, j)) == 0);
        }
    }
    CHECK(y.check_symmetric());
    CHECK(reduce(odd(), N, Execution::serial).d == reduce(odd(), N, Execution::parallel).d);
}

TEST_CASE("wrong multipliers raise a structure error") {
    const auto q = finite_section(odd(), MatrixKind::Q, 4);
    std::vector<Rational> z(4, Rational(1, 2));
    try {
        tridiagonalize(q, z);
        FAIL("expected StructureError");
    } catch (const StructureError& e) {
        CHECK((e.row() > e.col() ? e.row() - e.col() : e.col() - e.row()) > 1);
    }
    ExactMatrix asym(2, 2);
    asym(0, 1) = 1;
    CHECK_THROWS_AS(tridiagonalize(asym, {Rational(0)}), PreconditionError);
}

TEST_CASE("delta recursion") {
    const auto d = delta_sequence(reduce(odd(), 1));
    REQUIRE(d.deltas.size() == 2);
    CHECK(d.deltas[0] == Rational(197, 720));
    CHECK(d.deltas[1] == Rational(83, 405) - Rational(245, 1773));
    CHECK(d.all_positive);

    const auto decoupled = delta_sequence(TridiagonalForm{{1, 1}, {0}});
    CHECK(decoupled.deltas == std::vector<Rational>{1, 1});
    CHECK(decoupled.all_positive);
    CHECK_FALSE(decoupled.inconclusive_at);

    const auto singular = delta_sequence(TridiagonalForm{{1, 1}, {1}});
    CHECK(singular.deltas == std::vector<Rational>{1, 0});
    CHECK_FALSE(singular.all_positive);
    CHECK(singular.inconclusive_at == 1);

    const auto stops = delta_sequence(TridiagonalForm{{0, 1, 1}, {1, 1}});
    CHECK(stops.deltas.size() == 1);
    CHECK(stops.inconclusive_at == 0);
}

TEST_CASE("leading minors of Q") {
    const auto q1 = finite_section(odd(), MatrixKind::Q, 1);
    CHECK(leading_minors(q1) == std::vector<Rational>{Rational(7, 72), Rational(2663, 145800)});
}

TEST_CASE("determinant preservation for three families") {
    for (const auto& seq : {WeightSequence::linear(2, 1), WeightSequence::linear(1, 1), WeightSequence::linear(3, 1)}) {
        const FactorableGenerators g(seq);
        for (std::size_t N = 0; N <= 15; ++N) {
            const auto q = finite_section(g, MatrixKind::Q, N);
            const auto minors = leading_minors(q);
            const auto deltas = delta_sequence(reduce(g, N));
            REQUIRE(deltas.product() == minors.back());
            if (N <= 5) REQUIRE(minors.back() == oracle::leading_determinant(q, N + 1));
        }
    }
}

TEST_CASE("delta bounds") {
    CHECK(odd_weights::interior_delta_bound(0) == Rational(10, 37));
    CHECK(odd_weights::interior_delta_bound(1) == Rational(14, 61));
    CHECK(odd_weights::final_delta_bound(1) == Rational(7587) / 116640);
    CHECK(Rational(197, 720) > Rational(10, 37));

    const auto d1 = delta_sequence(reduce(odd(), 1));
    const auto b1 = check_delta_bounds(d1, 1);
    CHECK(b1.interior_checked == 1);
    CHECK(b1.interior_failures.empty());
    CHECK(b1.final_holds);

    const std::size_t N = 200;
    const auto d = delta_sequence(reduce(odd(), N));
    const auto b = check_delta_bounds(d, N);
    CHECK(b.interior_checked == N);
    CHECK(b.interior_failures.empty());
    CHECK(b.final_holds);
    CHECK(b.all_hold());

    // a sequence that sits below the bound is reported, not hidden
    DeltaSequence low;
    low.deltas = {Rational(1, 4), Rational(1, 100)};
    const auto bad = check_delta_bounds(low, 1);
    REQUIRE(bad.interior_failures.size() == 1);
    CHECK(bad.interior_failures[0].n == 0);
    CHECK_FALSE(bad.final_holds);
}

TEST_CASE("certify odd weights") {
    const auto r0 = certify(odd(), 0);
    CHECK(r0.verdict == Verdict::CertifiedPositive);
    CHECK(r0.determinant == Rational(7, 72));

    CertifyOptions opts;
    opts.bounds = true;
    opts.cross_check_minors = true;
    const auto r = certify(odd(), 100, opts);
    CHECK(r.verdict == Verdict::CertifiedPositive);
    CHECK(r.route == "tridiagonal");
    CHECK(sgn(r.min_delta) > 0);
    CHECK(sgn(r.determinant) > 0);
    REQUIRE(r.bounds);
    CHECK(r.bounds->all_hold());
    CHECK(r.cross_check.ran);
    CHECK(r.cross_check.all_minors_positive);
    CHECK(r.cross_check.determinant_matches);
    CHECK(exit_code(r.verdict) == 0);
}

TEST_CASE("certify other families") {
    const FactorableGenerators shifted(WeightSequence::linear(1, 1));
    const auto r = certify(shifted, 50);
    CHECK(r.verdict == Verdict::CertifiedPositive);
    CHECK(r.route == "tridiagonal");
    CHECK_FALSE(r.bounds);

    const FactorableGenerators three(WeightSequence::linear(3, 1));
    CHECK(certify(three, 30).verdict == Verdict::CertifiedPositive);

    // constant weights degenerate the multipliers; elimination fallback runs
    const FactorableGenerators flat(WeightSequence::linear(0, 1));
    const auto f = certify(flat, 10);
    CHECK(f.route == "elimination");
    CHECK(f.cross_check.ran);
    CHECK(f.verdict == Verdict::CertifiedPositive);
}

TEST_CASE("certify refuses violated hypotheses") {
    const FactorableGenerators bad(WeightSequence::table({1, Rational(1, 100), Rational(1, 100), Rational(1, 100)}));
    const auto r = certify(bad, 1);
    CHECK(r.refused);
    CHECK(r.verdict == Verdict::Inconclusive);
    CHECK(exit_code(r.verdict) == 2);

    CertifyOptions opts;
    opts.override_hypotheses = true;
    const auto o = certify(bad, 1, opts);
    CHECK_FALSE(o.refused);
    CHECK_FALSE(o.route.empty());
}

TEST_CASE("certified reports are internally consistent") {
    for (const auto& seq : {WeightSequence::linear(2, 1), WeightSequence::linear(1, 1), WeightSequence::linear(3, 2),
                            WeightSequence::linear(Rational(1, 2), 1), WeightSequence::linear(5, 1)}) {
        const FactorableGenerators g(seq);
        for (std::size_t N : {0u, 3u, 12u}) {
            CertifyOptions opts;
            opts.cross_check_minors = true;
            const auto r = certify(g, N, opts);
            if (r.verdict == Verdict::CertifiedPositive) {
                REQUIRE(sgn(r.determinant) > 0);
                REQUIRE(sgn(r.min_delta) > 0);
                REQUIRE(r.cross_check.all_minors_positive);
            }
        }
    }
}

}
