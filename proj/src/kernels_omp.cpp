#include <stdexcept>

#include "hyponorm/kernels.hpp"
#include "kernels_detail.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hyponorm::kernels {

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

ExactMatrix build_section_parallel(std::size_t n, const EntryFunction& f, bool symmetric) {
    ExactMatrix out(n, n, symmetric);
    const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t si = 0; si < rows; ++si) {
        const auto i = static_cast<std::size_t>(si);
        for (std::size_t j = symmetric ? i : 0; j < n; ++j) out(i, j) = f(i, j);
    }
    if (symmetric) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t si = 0; si < rows; ++si) {
            const auto i = static_cast<std::size_t>(si);
            for (std::size_t j = 0; j < i; ++j) out(i, j) = out(j, i);
        }
    }
    return out;
}

ExactMatrix congruence_parallel(const ExactMatrix& q, std::span<const Rational> z) {
    const std::size_t n = q.rows();
    if (n == 0) return q;
    if (z.size() + 1 != n) throw std::invalid_argument("congruence needs one multiplier per column but the last");

    // Y_ij = Q_ij - z_j Q_{i,j+1} - z_i Q_{i+1,j} + z_i z_j Q_{i+1,j+1}, with z_{n-1} = 0
    ExactMatrix y(n, n, q.symmetric());
    const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t si = 0; si < rows; ++si) {
        const auto i = static_cast<std::size_t>(si);
        const bool row_shift = i + 1 < n;
        for (std::size_t j = 0; j < n; ++j) {
            const bool col_shift = j + 1 < n;
            Rational v = q(i, j);
            if (col_shift) v -= z[j] * q(i, j + 1);
            if (row_shift) {
                Rational lower = q(i + 1, j);
                if (col_shift) lower -= z[j] * q(i + 1, j + 1);
                v -= z[i] * lower;
            }
            y(i, j) = std::move(v);
        }
    }
    return y;
}

std::vector<Rational> leading_minors_parallel(const ExactMatrix& q) {
    return detail::modular_minors(detail::scale_to_integers(q), [](const auto& m, const auto& primes) {
        std::vector<std::vector<std::uint64_t>> images(primes.size());
        const auto count = static_cast<std::ptrdiff_t>(primes.size());
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t t = 0; t < count; ++t) {
            images[static_cast<std::size_t>(t)] = detail::minor_residues(m, primes[static_cast<std::size_t>(t)]);
        }
        return images;
    });
}

std::vector<Rational> elimination_pivots_parallel(const ExactMatrix& q) {
    const std::size_t n = q.rows();
    ExactMatrix a = q;
    std::vector<Rational> pivots;
    for (std::size_t k = 0; k < n; ++k) {
        pivots.push_back(a(k, k));
        if (sign(a(k, k)) == 0) break;
        const auto last = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t si = static_cast<std::ptrdiff_t>(k) + 1; si < last; ++si) {
            const auto i = static_cast<std::size_t>(si);
            const Rational factor = a(i, k) / a(k, k);
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
        }
    }
    return pivots;
}

}  // namespace hyponorm::kernels
