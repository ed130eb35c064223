#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "hyponorm/exact_matrix.hpp"
#include "hyponorm/rational.hpp"

namespace hyponorm::kernels::detail {

/// Integer image of a rational matrix with minor_k(integer) equal to
/// minor_k(rational) * prod_{i<=k} row_scale[i]. Symmetric input gets D Q D
/// (row_scale = d_i^2), anything else plain row scaling by lcm of denominators.
struct ScaledIntegerMatrix {
    std::size_t n = 0;
    std::vector<Integer> entries;  // row-major
    std::vector<Integer> row_scale;

    Integer& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
};

ScaledIntegerMatrix scale_to_integers(const ExactMatrix& q);

/// Determinant of the leading k x k block by Bareiss with row exchanges.
Integer pivoted_determinant(const ScaledIntegerMatrix& m, std::size_t k);

/// minor_k(Q) given the leading (k+1)-block determinant of the scaled matrix.
Rational unscale_minor(const ScaledIntegerMatrix& m, const Integer& scaled, std::size_t k);

/// Completes minors[from..n-1] after a zero Bareiss pivot.
void finish_minors_with_pivoting(const ScaledIntegerMatrix& original, std::size_t from,
                                 std::vector<Rational>& minors);

/// Cumulative bit bound: |minor_k| < 2^bits[k] (Hadamard on full rows).
std::vector<std::size_t> hadamard_bits(const ScaledIntegerMatrix& m);

/// Primes above 2^62, in increasing order; deterministic across calls.
std::vector<std::uint64_t> crt_primes(std::size_t first, std::size_t count);

/// Leading minors mod p by elimination without pivoting. Stops at the first
/// zero pivot, whose (zero) minor is included.
std::vector<std::uint64_t> minor_residues(const ScaledIntegerMatrix& m, std::uint64_t p);

using ImageBatch = std::function<std::vector<std::vector<std::uint64_t>>(const ScaledIntegerMatrix&,
                                                                         const std::vector<std::uint64_t>&)>;

/// Leading minors by Chinese remaindering of minor_residues images. A minor
/// that comes out exactly zero hands the rest to finish_minors_with_pivoting.
std::vector<Rational> modular_minors(const ScaledIntegerMatrix& m, const ImageBatch& images_for);

}  // namespace hyponorm::kernels::detail
