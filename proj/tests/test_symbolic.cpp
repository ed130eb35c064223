#include <doctest.h>

#include <random>

#include "hyponorm/errors.hpp"
#include "hyponorm/matrices.hpp"
#include "hyponorm/positivity.hpp"
#include "hyponorm/sturm.hpp"
#include "hyponorm/symbolic.hpp"

using namespace hyponorm;

namespace {

Rational idx(std::size_t n) { return Rational(Integer(static_cast<unsigned long>(n))); }

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("arithmetic and evaluation") {
    const Polynomial n1({1, 1});
    CHECK(n1 * n1 == Polynomial({1, 2, 1}));
    const Polynomial qnum({7, 66, 104, 60, 12});
    CHECK(qnum(1) == 249);
    const Polynomial p({1, 0, 1});
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK_THROWS_AS(Polynomial({1, 1}, "m") + Polynomial({1, 1}, "n"), std::invalid_argument);
    // constants adapt to the other operand's variable
    CHECK((Polynomial::constant(3, "x") * Polynomial({0, 1}, "m")).variable() == "m");
}

TEST_CASE("division, gcd, shift") {
    const Polynomial a = Polynomial({1, 1}) * Polynomial({2, 1}) * Polynomial({-3, 1});
    const Polynomial b = Polynomial({1, 1}) * Polynomial({5, 1});
    const auto g = gcd(a, b);
    CHECK(g == Polynomial({1, 1}));
    const auto [q, r] = divmod(a, Polynomial({2, 1}));
    CHECK(r.is_zero());
    CHECK(q * Polynomial({2, 1}) == a);
    CHECK(Polynomial({0, 0, 1}).shifted(1) == Polynomial({1, 2, 1}));
    CHECK(compose(Polynomial({0, 0, 1}), Polynomial({1, 1})) == Polynomial({1, 2, 1}));
    CHECK_THROWS_AS(divmod(a, Polynomial()), std::domain_error);
}

TEST_CASE("random divmod identity") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> ac(1 + trial % 7), bc(1 + trial % 4);
        for (auto& c : ac) c = coeff(rng);
        for (auto& c : bc) c = coeff(rng);
        bc.back() = 1 + (trial % 3);
        const Polynomial a(ac), b(bc);
        const auto [q, r] = divmod(a, b);
        REQUIRE(q * b + r == a);
        REQUIRE(r.degree() < b.degree());
        for (int x = -3; x <= 3; ++x) REQUIRE(a.shifted(2)(x) == a(x + 2));
    }
}

TEST_CASE("primitive part") {
    const auto [p, k] = Polynomial({Rational(1, 2), Rational(-3, 4)}).primitive_part();
    CHECK(p == Polynomial({-2, 3}));
    CHECK(k == Rational(-1, 4));
}

TEST_CASE("rational functions are canonical") {
    const RationalFunction f(Polynomial({2, 2}), Polynomial({4, 6, 2}));  // 2(n+1)/(2(n+1)(n+2))
    CHECK(f.numerator() == Polynomial({1}));
    CHECK(f.denominator() == Polynomial({2, 1}));
    const RationalFunction again(f.numerator(), f.denominator());
    CHECK(again == f);
    CHECK(f(0) == Rational(1, 2));
    CHECK_THROWS_AS(f(-2), std::domain_error);
    CHECK(((f + f) - f) == f);
    CHECK((f / f) == RationalFunction::constant(1));
    CHECK_THROWS_AS(RationalFunction(Polynomial({1}), Polynomial()), std::domain_error);
}

TEST_CASE("Sturm root counting") {
    const Polynomial p = Polynomial({-1, 1}) * Polynomial({-2, 1}) * Polynomial({-5, 1});
    const SturmChain chain(p);
    CHECK(chain.count_roots(0, 10) == 3);
    CHECK(chain.count_roots(Rational(3, 2), 10) == 2);
    CHECK(chain.count_roots_above(3) == 1);
    const SturmChain none(Polynomial({1, 0, 1}));
    CHECK(none.count_roots(-100, 100) == 0);
    // double root counted once
    const SturmChain dbl(Polynomial({-3, 1}) * Polynomial({-3, 1}));
    CHECK(dbl.count_roots(0, 10) == 1);
}

}

TEST_SUITE("symbolic") {

TEST_CASE("power sums") {
    const auto odd = power_sum(LinearFamily{2, 1});
    CHECK(odd == Polynomial({1, Rational(11, 3), 4, Rational(4, 3)}, "j"));
    CHECK(odd(1) == 10);
    const auto shifted = power_sum(LinearFamily{1, 1});
    for (int j = 0; j < 10; ++j) CHECK(shifted(j) == Rational((j + 1) * (j + 2) * (2 * j + 3)) / 6);
    CHECK(power_sum(LinearFamily{0, 1}) == Polynomial({1, 1}, "j"));

    for (const auto& w : {LinearFamily{2, 1}, LinearFamily{1, 1}, LinearFamily{3, 1}, LinearFamily{Rational(2, 3), 5}}) {
        const auto ps = power_sum(w);
        Rational direct = 0;
        for (std::size_t j = 0; j <= 100; ++j) {
            const Rational c = w.alpha * idx(j) + w.beta;
            direct += c * c;
            REQUIRE(ps(idx(j)) == direct);
        }
    }
}

TEST_CASE("symbolic Q for odd weights") {
    const auto q = symbolic_q(LinearFamily{2, 1});
    const RationalFunction expected_diag(
        Polynomial({7, 66, 104, 60, 12}),
        Polynomial::constant(3) * Polynomial({2, 1}) * Polynomial({2, 1}) * Polynomial({2, 1}) * Polynomial({1, 2}) *
            Polynomial({3, 2}));
    CHECK(q.diagonal == expected_diag);
    CHECK(q.diagonal.numerator().degree() == 4);
    CHECK(q.diagonal.denominator().degree() == 5);

    const RationalFunction expected_row =
        Rational(-1, 3) * RationalFunction(Polynomial({11, 16, 6}, "m"), Polynomial({2, 1}, "m") * Polynomial({2, 1}, "m") *
                                                                             Polynomial({1, 2}, "m") * Polynomial({3, 2}, "m"));
    CHECK(q.offdiag_row == expected_row);
    CHECK(q.offdiag_col == RationalFunction(Polynomial({1, 1}), Polynomial({2, 1})));
    CHECK(q.offdiag_row(1) * q.offdiag_col(0) == Rational(-11, 270));
}

TEST_CASE("symbolic and numeric entries agree") {
    for (const auto& w : {LinearFamily{2, 1}, LinearFamily{1, 1}, LinearFamily{3, 1}}) {
        const FactorableGenerators g(WeightSequence::linear(w.alpha, w.beta));
        const auto q = symbolic_q(w);
        const auto t = symbolic_tridiagonal(w);
        for (std::size_t n = 0; n <= 50; ++n) {
            REQUIRE(q.diagonal(idx(n)) == q_entry(g, n, n));
            REQUIRE(t.z(idx(n)) == elimination_multiplier(g, n));
            for (std::size_t m = n + 1; m <= 50; m += 7) REQUIRE(q.offdiag_row(idx(m)) * q.offdiag_col(idx(n)) == q_entry(g, m, n));
        }
        const std::size_t N = 51;
        const auto red = tridiagonalize(finite_section(g, MatrixKind::Q, N), elimination_multipliers(g, N));
        for (std::size_t n = 0; n < N; ++n) {
            REQUIRE(t.d(idx(n)) == red.d[n]);
            REQUIRE(t.s(idx(n)) == red.s[n]);
        }
    }
}

TEST_CASE("symbolic tridiagonal for odd weights") {
    const auto t = symbolic_tridiagonal(LinearFamily{2, 1});
    CHECK(t.z == RationalFunction(Polynomial({3, 4, 1}), Polynomial({4, 4, 1})));
    CHECK(t.s(0) == Rational(-7, 36));
    CHECK(t.d(1) == Rational(1124, 2835));
    CHECK(t.d.numerator().degree() == 7);
    for (std::size_t n = 0; n <= 30; ++n) {
        REQUIRE(t.d(idx(n)) == odd_weights::d(n));
        REQUIRE(t.s(idx(n)) == odd_weights::s(n));
    }
}

TEST_CASE("canonicalization is idempotent") {
    const auto t = symbolic_tridiagonal(LinearFamily{3, 1});
    for (const auto& f : {t.z, t.d, t.s}) {
        const RationalFunction again(f.numerator(), f.denominator());
        CHECK(again.numerator().coefficients() == f.numerator().coefficients());
        CHECK(again.denominator().coefficients() == f.denominator().coefficients());
        CHECK(f.denominator().leading() == 1);
        CHECK(gcd(f.numerator(), f.denominator()).degree() == 0);
    }
}

TEST_CASE("constant weights have no off-diagonal structure") {
    CHECK_THROWS_AS(symbolic_q(LinearFamily{0, 1}), StructureError);
    const auto deg = degree_report(LinearFamily{0, 1});
    CHECK(deg.q_diag_num_degree >= 0);
}

TEST_CASE("induction certificate for odd weights") {
    const auto cert = induction_certificate(LinearFamily{2, 1}, odd_weights_interior_bound());
    CHECK(cert.denominator_sign_definite);
    CHECK(cert.nonneg_for_n_ge_1);
    CHECK(cert.nonneg_for_n_ge_0);
    CHECK(cert.base_case_holds);
    CHECK(cert.method.find("coefficient test") != std::string::npos);
    const auto reference = reference_induction_polynomial();
    CHECK(reference(1) == 5393412);
    const auto k = positive_proportionality(cert.certificate, reference);
    REQUIRE(k);
    CHECK(*k == 1);
    CHECK(cert.certificate(1) == *k * 5393412);
    CHECK(cert.certificate == reference);
}

TEST_CASE("certificate never disagrees with the numerics") {
    const auto cert = induction_certificate(LinearFamily{2, 1}, odd_weights_interior_bound());
    REQUIRE(cert.nonneg_for_n_ge_1);
    const FactorableGenerators g(WeightSequence::linear(2, 1));
    const std::size_t N = 120;
    const auto deltas =
        delta_sequence(tridiagonalize(finite_section(g, MatrixKind::Q, N), elimination_multipliers(g, N)));
    for (std::size_t n = 0; n < N; ++n) REQUIRE(deltas.deltas[n] > odd_weights::interior_delta_bound(n));
    for (std::size_t n = 1; n < 60; ++n) REQUIRE(cert.step_expression(idx(n)) >= 0);
}

TEST_CASE("certificate guards") {
    // L_0 undefined: denominator n
    const RationalFunction bad(Polynomial({1}), Polynomial({0, 1}));
    CHECK_THROWS_AS(induction_certificate(LinearFamily{2, 1}, bad), PreconditionError);
    CHECK_THROWS_AS(induction_certificate(LinearFamily{2, 1}, RationalFunction::constant(0)), PreconditionError);

    // a bound that is too strong must not certify
    const RationalFunction greedy = RationalFunction::constant(1);
    const auto c = induction_certificate(LinearFamily{2, 1}, greedy);
    CHECK_FALSE(c.nonneg_for_n_ge_1);
    CHECK_FALSE(c.base_case_holds);
}

TEST_CASE("nonnegativity test falls back to Sturm") {
    // p(n+1) = n^2 - n + 1 fails the coefficient test
    const Polynomial p({3, -3, 1});
    const auto r = nonnegative_from_one(p);
    CHECK(r.holds);
    CHECK(r.method.find("Sturm") != std::string::npos);
    const auto neg = nonnegative_from_one(Polynomial({-6, 1}));
    CHECK_FALSE(neg.holds);
    CHECK_FALSE(nonnegative_from_one(Polynomial()).holds);
}

TEST_CASE("degree reports") {
    const auto odd = degree_report(LinearFamily{2, 1});
    CHECK(odd.q_diag_num_degree == 4);
    CHECK(odd.q_diag_den_degree == 5);
    const auto three = degree_report(LinearFamily{3, 1});
    CHECK(three.q_diag_num_degree == 6);
    CHECK(three.q_diag_den_degree == 7);
    const auto shifted = degree_report(LinearFamily{1, 1});
    CHECK(shifted.q_diag_num_degree == 2);
    CHECK(shifted.q_diag_den_degree == 3);
}

}
