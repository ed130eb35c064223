#include <stdexcept>

#include "hyponorm/kernels.hpp"
#include "kernels_detail.hpp"

namespace hyponorm::kernels {

namespace detail {

ScaledIntegerMatrix scale_to_integers(const ExactMatrix& q) {
    ScaledIntegerMatrix m;
    m.n = q.rows();
    m.entries.resize(m.n * m.n);
    m.row_scale.resize(m.n);
    if (q.check_symmetric()) {
        // d_i d_j q_ij must be integral for j <= i; d_j is already fixed
        std::vector<Integer> d(m.n);
        Rational t;
        for (std::size_t i = 0; i < m.n; ++i) {
            Integer di = q(i, i).get_den();
            for (std::size_t j = 0; j < i; ++j) {
                t = q(i, j) * d[j];
                mpz_lcm(di.get_mpz_t(), di.get_mpz_t(), t.get_den_mpz_t());
            }
            d[i] = di;
        }
        for (std::size_t i = 0; i < m.n; ++i) {
            m.row_scale[i] = d[i] * d[i];
            for (std::size_t j = 0; j < m.n; ++j) {
                t = q(i, j) * d[i] * d[j];
                m.at(i, j) = t.get_num();
            }
        }
        return m;
    }
    for (std::size_t i = 0; i < m.n; ++i) {
        Integer scale = 1;
        for (std::size_t j = 0; j < m.n; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q(i, j).get_den_mpz_t());
        m.row_scale[i] = scale;
        for (std::size_t j = 0; j < m.n; ++j) {
            m.at(i, j) = q(i, j).get_num() * (scale / q(i, j).get_den());
        }
    }
    return m;
}

Integer pivoted_determinant(const ScaledIntegerMatrix& m, std::size_t k) {
    std::vector<Integer> a(k * k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i * k + j] = m.entries[i * m.n + j];
    }
    Integer prev = 1;
    int sign_flip = 1;
    for (std::size_t p = 0; p + 1 < k; ++p) {
        if (a[p * k + p] == 0) {
            std::size_t swap_row = p + 1;
            while (swap_row < k && a[swap_row * k + p] == 0) ++swap_row;
            if (swap_row == k) return 0;
            for (std::size_t j = 0; j < k; ++j) std::swap(a[p * k + j], a[swap_row * k + j]);
            sign_flip = -sign_flip;
        }
        for (std::size_t i = p + 1; i < k; ++i) {
            for (std::size_t j = p + 1; j < k; ++j) {
                Integer t = a[p * k + p] * a[i * k + j] - a[i * k + p] * a[p * k + j];
                mpz_divexact(a[i * k + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[p * k + p];
    }
    return k == 0 ? Integer(1) : Integer(sign_flip * a[k * k - 1]);
}

Rational unscale_minor(const ScaledIntegerMatrix& m, const Integer& scaled, std::size_t k) {
    Integer scale = 1;
    for (std::size_t i = 0; i <= k; ++i) scale *= m.row_scale[i];
    Rational r(scaled, scale);
    r.canonicalize();
    return r;
}

void finish_minors_with_pivoting(const ScaledIntegerMatrix& original, std::size_t from,
                                 std::vector<Rational>& minors) {
    for (std::size_t k = from; k < original.n; ++k) {
        minors[k] = unscale_minor(original, pivoted_determinant(original, k + 1), k);
    }
}

}  // namespace detail

ExactMatrix build_section_serial(std::size_t n, const EntryFunction& f, bool symmetric) {
    ExactMatrix out(n, n, symmetric);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = symmetric ? i : 0; j < n; ++j) {
            out(i, j) = f(i, j);
            if (symmetric) out(j, i) = out(i, j);
        }
    }
    return out;
}

ExactMatrix congruence_serial(const ExactMatrix& q, std::span<const Rational> z) {
    const std::size_t n = q.rows();
    if (n == 0) return q;
    if (z.size() + 1 != n) throw std::invalid_argument("congruence needs one multiplier per column but the last");
    ExactMatrix y = q;
    // column pass; col n+1 is still untouched when col n is updated
    for (std::size_t col = 0; col + 1 < n; ++col) {
        for (std::size_t row = 0; row < n; ++row) y(row, col) -= z[col] * y(row, col + 1);
    }
    for (std::size_t row = 0; row + 1 < n; ++row) {
        for (std::size_t col = 0; col < n; ++col) y(row, col) -= z[row] * y(row + 1, col);
    }
    y.set_symmetric(q.symmetric());
    return y;
}

std::vector<Rational> leading_minors_serial(const ExactMatrix& q) {
    return detail::modular_minors(detail::scale_to_integers(q), [](const auto& m, const auto& primes) {
        std::vector<std::vector<std::uint64_t>> images;
        for (const auto p : primes) images.push_back(detail::minor_residues(m, p));
        return images;
    });
}

std::vector<Rational> leading_minors_bareiss(const ExactMatrix& q) {
    const std::size_t n = q.rows();
    std::vector<Rational> minors(n);
    if (n == 0) return minors;
    const auto original = detail::scale_to_integers(q);
    auto m = original;
    Integer prev = 1;
    minors[0] = detail::unscale_minor(m, m.at(0, 0), 0);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            detail::finish_minors_with_pivoting(original, k + 1, minors);
            return minors;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m.at(k, k);
        minors[k + 1] = detail::unscale_minor(m, m.at(k + 1, k + 1), k + 1);
    }
    return minors;
}

std::vector<Rational> elimination_pivots_serial(const ExactMatrix& q) {
    const std::size_t n = q.rows();
    ExactMatrix a = q;
    std::vector<Rational> pivots;
    for (std::size_t k = 0; k < n; ++k) {
        pivots.push_back(a(k, k));
        if (sign(a(k, k)) == 0) break;
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational factor = a(i, k) / a(k, k);
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
        }
    }
    return pivots;
}

}  // namespace hyponorm::kernels
