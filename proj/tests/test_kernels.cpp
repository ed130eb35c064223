#include <doctest.h>

#include <random>

#include "hyponorm/kernels.hpp"
#include "hyponorm/matrices.hpp"
#include "../src/kernels_detail.hpp"
#include "oracles.hpp"

using namespace hyponorm;

namespace {

ExactMatrix random_symmetric(std::mt19937& rng, std::size_t n, int spread) {
    std::uniform_int_distribution<int> num(-spread, spread);
    std::uniform_int_distribution<int> den(1, spread);
    ExactMatrix m(n, n, true);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Rational v(num(rng), den(rng));
            v.canonicalize();
            m(i, j) = v;
            m(j, i) = v;
        }
    }
    return m;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("section builders agree") {
    const FactorableGenerators g(WeightSequence::linear(3, 1));
    for (auto kind : {MatrixKind::M, MatrixKind::B, MatrixKind::P_closed, MatrixKind::P_oracle, MatrixKind::Q}) {
        const auto s = finite_section(g, kind, 40, Execution::serial);
        const auto p = finite_section(g, kind, 40, Execution::parallel);
        CHECK(s == p);
        CHECK(s.symmetric() == p.symmetric());
    }
}

TEST_CASE("congruence: literal passes equal the entrywise formula") {
    std::mt19937 rng(20261014);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 9);
        const auto q = random_symmetric(rng, n, 9);
        std::vector<Rational> z;
        std::uniform_int_distribution<int> zd(-5, 5);
        for (std::size_t k = 0; k + 1 < n; ++k) z.emplace_back(zd(rng), 3);
        for (auto& v : z) v.canonicalize();
        const auto ys = kernels::congruence_serial(q, z);
        const auto yp = kernels::congruence_parallel(q, z);
        REQUIRE(ys == yp);
        REQUIRE(ys.check_symmetric());
        // unit-triangular congruence preserves the determinant
        if (n <= 7) REQUIRE(oracle::leading_determinant(ys, n) == oracle::leading_determinant(q, n));
    }
}

TEST_CASE("leading minors match cofactor expansion") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 7);
        const auto q = random_symmetric(rng, n, 6);
        const auto s = kernels::leading_minors_serial(q);
        const auto p = kernels::leading_minors_parallel(q);
        REQUIRE(s == p);
        for (std::size_t k = 0; k < n; ++k) REQUIRE(s[k] == oracle::leading_determinant(q, k + 1));
    }
}

TEST_CASE("modular minors equal Bareiss") {
    std::mt19937 rng(314);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 12);
        const auto q = random_symmetric(rng, n, 1000);
        REQUIRE(kernels::leading_minors_serial(q) == kernels::leading_minors_bareiss(q));
    }
    // not symmetric: plain row scaling
    ExactMatrix m(3, 3);
    m(0, 0) = Rational(2, 3);
    m(0, 1) = 5;
    m(1, 0) = Rational(-1, 7);
    m(1, 1) = Rational(1, 2);
    m(2, 2) = 9;
    m(2, 0) = Rational(4, 5);
    CHECK(kernels::leading_minors_parallel(m) == kernels::leading_minors_bareiss(m));
    for (std::size_t k = 0; k < 3; ++k) CHECK(kernels::leading_minors_serial(m)[k] == oracle::leading_determinant(m, k + 1));

    const FactorableGenerators g(WeightSequence::linear(2, 1));
    const auto q = finite_section(g, MatrixKind::Q, 30);
    CHECK(leading_minors(q, Execution::parallel) == kernels::leading_minors_bareiss(q));
}

TEST_CASE("a minor divisible by a working prime") {
    const Integer p = Integer(static_cast<unsigned long>(kernels::detail::crt_primes(0, 1)[0]));
    ExactMatrix m(2, 2, true);
    m(0, 0) = Rational(p);
    m(0, 1) = m(1, 0) = 1;
    m(1, 1) = 1;
    const auto minors = leading_minors(m, Execution::serial);
    CHECK(minors[0] == Rational(p));
    CHECK(minors[1] == Rational(p - 1));
    CHECK(leading_minors(m, Execution::parallel) == minors);
}

TEST_CASE("leading minors survive a zero pivot") {
    ExactMatrix m(3, 3, true);
    m(0, 1) = m(1, 0) = 1;
    m(1, 1) = 2;
    m(2, 2) = 5;
    m(0, 2) = m(2, 0) = Rational(1, 2);
    const auto minors = leading_minors(m, Execution::serial);
    CHECK(minors[0] == 0);
    CHECK(minors[1] == -1);
    CHECK(minors[2] == oracle::leading_determinant(m, 3));
    CHECK(leading_minors(m, Execution::parallel) == minors);

    // singular leading block in the middle
    ExactMatrix s(4, 4, true);
    s(0, 0) = s(0, 1) = s(1, 0) = s(1, 1) = 1;
    s(2, 2) = 3;
    s(1, 3) = s(3, 1) = 2;
    s(3, 3) = Rational(1, 3);
    const auto sm = leading_minors(s, Execution::serial);
    CHECK(sm[1] == 0);
    for (std::size_t k = 0; k < 4; ++k) CHECK(sm[k] == oracle::leading_determinant(s, k + 1));
    CHECK(sm == kernels::leading_minors_bareiss(s));
}

TEST_CASE("identity minors") {
    const auto minors = leading_minors(ExactMatrix::identity(3));
    CHECK(minors == std::vector<Rational>{1, 1, 1});
}

TEST_CASE("elimination pivots are ratios of minors") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 6);
        const auto q = random_symmetric(rng, n, 8);
        const auto piv = kernels::elimination_pivots_serial(q);
        REQUIRE(piv == kernels::elimination_pivots_parallel(q));
        const auto minors = leading_minors(q);
        Rational prev = 1;
        for (std::size_t k = 0; k < piv.size(); ++k) {
            REQUIRE(piv[k] * prev == minors[k]);
            prev = minors[k];
        }
    }
    ExactMatrix singular(2, 2, true);
    singular(0, 0) = singular(0, 1) = singular(1, 0) = singular(1, 1) = 0;
    CHECK(kernels::elimination_pivots_serial(singular).size() == 1);
}

}
