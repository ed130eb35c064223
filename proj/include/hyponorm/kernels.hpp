#pragma once

// Data-parallel kernels over exact matrices. Every kernel has a serial
// reference version that follows the textbook loop order; the parallel
// versions are OpenMP and must agree with them exactly.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hyponorm/exact_matrix.hpp"
#include "hyponorm/rational.hpp"

namespace hyponorm {

enum class Execution { serial, parallel };

namespace kernels {

using EntryFunction = std::function<Rational(std::size_t, std::size_t)>;

/// n x n matrix with entries f(i, j). When `symmetric`, only j >= i is
/// evaluated and mirrored.
ExactMatrix build_section_serial(std::size_t n, const EntryFunction& f, bool symmetric);
ExactMatrix build_section_parallel(std::size_t n, const EntryFunction& f, bool symmetric);

/// C^T Q C with C = I - sum_n z_n e_{n+1} e_n^T, i.e. col_n -= z_n col_{n+1}
/// for n = 0..N-1 followed by row_m -= z_m row_{m+1}. Requires z.size() == n - 1.
/// The serial version performs the two passes literally; the parallel version
/// evaluates each entry of the congruence directly.
ExactMatrix congruence_serial(const ExactMatrix& q, std::span<const Rational> z);
ExactMatrix congruence_parallel(const ExactMatrix& q, std::span<const Rational> z);

/// All leading principal minors, exactly. The matrix is scaled to integers,
/// reduced modulo enough 62-bit primes to beat the Hadamard bound, and each
/// minor is recovered by Chinese remaindering. The parallel version spreads
/// the primes over threads.
std::vector<Rational> leading_minors_serial(const ExactMatrix& q);
std::vector<Rational> leading_minors_parallel(const ExactMatrix& q);

/// Same result by fraction-free (Bareiss) elimination; slow, kept as a reference.
std::vector<Rational> leading_minors_bareiss(const ExactMatrix& q);

/// Pivots of Gaussian elimination without pivoting: pivot_k equals
/// minor_k / minor_{k-1}. Stops after the first zero pivot (inclusive).
std::vector<Rational> elimination_pivots_serial(const ExactMatrix& q);
std::vector<Rational> elimination_pivots_parallel(const ExactMatrix& q);

int max_threads();

}  // namespace kernels

inline ExactMatrix build_section(std::size_t n, const kernels::EntryFunction& f, bool symmetric,
                                 Execution exec) {
    return exec == Execution::serial ? kernels::build_section_serial(n, f, symmetric)
                                     : kernels::build_section_parallel(n, f, symmetric);
}

inline ExactMatrix congruence(const ExactMatrix& q, std::span<const Rational> z, Execution exec) {
    return exec == Execution::serial ? kernels::congruence_serial(q, z) : kernels::congruence_parallel(q, z);
}

inline std::vector<Rational> leading_minors(const ExactMatrix& q, Execution exec = Execution::parallel) {
    return exec == Execution::serial ? kernels::leading_minors_serial(q) : kernels::leading_minors_parallel(q);
}

inline std::vector<Rational> elimination_pivots(const ExactMatrix& q, Execution exec) {
    return exec == Execution::serial ? kernels::elimination_pivots_serial(q)
                                     : kernels::elimination_pivots_parallel(q);
}

}  // namespace hyponorm
