#pragma once

// Exact entries and finite sections of the weighted mean matrix M, the
// auxiliary matrix B, the interrupter P = B^T B and Q = I - P.

#include <cstddef>
#include <string>
#include <string_view>

#include "hyponorm/exact_matrix.hpp"
#include "hyponorm/kernels.hpp"
#include "hyponorm/rational.hpp"
#include "hyponorm/weights.hpp"

namespace hyponorm {

enum class MatrixKind { M, B, P_closed, P_oracle, Q };

MatrixKind parse_matrix_kind(std::string_view name);
std::string to_string(MatrixKind kind);

/// a_i c_j for j <= i, else 0.
Rational m_entry(const FactorableGenerators& g, std::size_t i, std::size_t j);

///   c_i (1/c_j - (1/c_{j+1}) a_{j+1}/a_j)   i <= j
///   -a_{j+1}/a_j                            i == j + 1
///   0                                       i >  j + 1
Rational b_entry(const FactorableGenerators& g, std::size_t i, std::size_t j);

/// Closed form of (B^T B)_{ij}, using the memoized sums of c_k^2.
Rational p_entry_closed(const FactorableGenerators& g, std::size_t i, std::size_t j);

/// (B^T B)_{ij} as the finite sum over the common support rows 0..min(i,j)+1.
Rational p_entry_oracle(const FactorableGenerators& g, std::size_t i, std::size_t j);

// The off-diagonal closed form is a product F(i) G(j) for i > j.
Rational p_offdiag_row_factor(const FactorableGenerators& g, std::size_t i);
Rational p_offdiag_col_factor(const FactorableGenerators& g, std::size_t j);

/// delta_ij - p_entry_closed(i, j).
Rational q_entry(const FactorableGenerators& g, std::size_t i, std::size_t j);

/// Closed form of q_{mn} specialized to w_n = 2n + 1.
Rational q_closed_2n1(std::size_t m, std::size_t n);

/// (N+1) x (N+1) top-left section. P and Q sections carry the symmetric flag.
ExactMatrix finite_section(const FactorableGenerators& g, MatrixKind kind, std::size_t N,
                           Execution exec = Execution::parallel);

/// Largest generator index an entry (i, j) of `kind` may touch.
std::size_t generator_reach(MatrixKind kind, std::size_t N);

}  // namespace hyponorm
