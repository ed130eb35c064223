#include "hyponorm/matrices.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyponorm/errors.hpp"

namespace hyponorm {

namespace {

Rational quotient(const Rational& num, const Rational& den, const char* where) {
    if (sign(den) == 0) throw DomainError(std::string("division by zero in ") + where + " (a zero weight c_j?)");
    return num / den;
}

Rational index_value(std::size_t n) { return Rational(Integer(static_cast<unsigned long>(n))); }

}  // namespace

MatrixKind parse_matrix_kind(std::string_view name) {
    if (name == "M") return MatrixKind::M;
    if (name == "B") return MatrixKind::B;
    if (name == "P" || name == "P_closed") return MatrixKind::P_closed;
    if (name == "P_oracle") return MatrixKind::P_oracle;
    if (name == "Q") return MatrixKind::Q;
    throw std::invalid_argument("unknown matrix kind '" + std::string(name) + "' (M, B, P_closed, P_oracle, Q)");
}

std::string to_string(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::M: return "M";
        case MatrixKind::B: return "B";
        case MatrixKind::P_closed: return "P_closed";
        case MatrixKind::P_oracle: return "P_oracle";
        case MatrixKind::Q: return "Q";
    }
    return "?";
}

Rational m_entry(const FactorableGenerators& g, std::size_t i, std::size_t j) {
    if (j > i) return 0;
    return g.a(i) * g.c(j);
}

Rational b_entry(const FactorableGenerators& g, std::size_t i, std::size_t j) {
    if (i > j + 1) return 0;
    const Rational ratio = g.a(j + 1) / g.a(j);
    if (i == j + 1) return -ratio;
    const Rational inner = quotient(1, g.c(j), "b_entry") - quotient(ratio, g.c(j + 1), "b_entry");
    return g.c(i) * inner;
}

Rational p_offdiag_row_factor(const FactorableGenerators& g, std::size_t i) {
    const auto& ci = g.c(i);
    const auto& ci1 = g.c(i + 1);
    const auto& ai = g.a(i);
    const auto& ai1 = g.a(i + 1);
    return quotient(ci * ai1 - ci1 * ai, ci * ci1 * ai, "p_offdiag_row_factor");
}

Rational p_offdiag_col_factor(const FactorableGenerators& g, std::size_t j) {
    const auto& cj = g.c(j);
    const auto& cj1 = g.c(j + 1);
    const auto& aj = g.a(j);
    const auto& aj1 = g.a(j + 1);
    return quotient(cj * g.square_sum(j + 1) * aj1 - cj1 * g.square_sum(j) * aj, cj * cj1 * aj,
                    "p_offdiag_col_factor");
}

Rational p_entry_closed(const FactorableGenerators& g, std::size_t i, std::size_t j) {
    if (i == j) {
        const auto& cj = g.c(j);
        const auto& cj1 = g.c(j + 1);
        const auto& aj = g.a(j);
        const auto& aj1 = g.a(j + 1);
        const Rational cross = cj1 * aj - cj * aj1;
        const Rational num = cj * cj * cj1 * cj1 * aj1 * aj1 + g.square_sum(j) * cross * cross;
        return quotient(num, cj * cj * cj1 * cj1 * aj * aj, "p_entry_closed");
    }
    // i < j mirrors i > j with the roles of the indices exchanged
    const std::size_t hi = std::max(i, j);
    const std::size_t lo = std::min(i, j);
    const auto& ch = g.c(hi);
    const auto& ch1 = g.c(hi + 1);
    const auto& cl = g.c(lo);
    const auto& cl1 = g.c(lo + 1);
    const auto& ah = g.a(hi);
    const auto& al = g.a(lo);
    const Rational left = ch * g.a(hi + 1) - ch1 * ah;
    const Rational right = cl * g.square_sum(lo + 1) * g.a(lo + 1) - cl1 * g.square_sum(lo) * al;
    return quotient(left * right, ch * ch1 * cl * cl1 * ah * al, "p_entry_closed");
}

Rational p_entry_oracle(const FactorableGenerators& g, std::size_t i, std::size_t j) {
    Rational sum = 0;
    const std::size_t last = std::min(i, j) + 1;
    for (std::size_t k = 0; k <= last; ++k) sum += b_entry(g, k, i) * b_entry(g, k, j);
    return sum;
}

Rational q_entry(const FactorableGenerators& g, std::size_t i, std::size_t j) {
    return (i == j ? Rational(1) : Rational(0)) - p_entry_closed(g, i, j);
}

Rational q_closed_2n1(std::size_t m, std::size_t n) {
    if (m == n) {
        const Rational x = index_value(n);
        const Rational num = 12 * x * x * x * x + 60 * x * x * x + 104 * x * x + 66 * x + 7;
        const Rational den = 3 * (x + 2) * (x + 2) * (x + 2) * (2 * x + 1) * (2 * x + 3);
        return num / den;
    }
    const Rational hi = index_value(std::max(m, n));
    const Rational lo = index_value(std::min(m, n));
    const Rational row = (6 * hi * hi + 16 * hi + 11) / ((hi + 2) * (hi + 2) * (2 * hi + 1) * (2 * hi + 3));
    const Rational col = (lo + 1) / (lo + 2);
    return -Rational(1, 3) * row * col;
}

std::size_t generator_reach(MatrixKind kind, std::size_t N) {
    return kind == MatrixKind::M ? N : N + 1;
}

ExactMatrix finite_section(const FactorableGenerators& g, MatrixKind kind, std::size_t N, Execution exec) {
    g.prepare(generator_reach(kind, N));
    const std::size_t n = N + 1;
    kernels::EntryFunction f;
    bool symmetric = false;
    switch (kind) {
        case MatrixKind::M:
            f = [&g](std::size_t i, std::size_t j) { return m_entry(g, i, j); };
            break;
        case MatrixKind::B:
            f = [&g](std::size_t i, std::size_t j) { return b_entry(g, i, j); };
            break;
        case MatrixKind::P_closed:
            f = [&g](std::size_t i, std::size_t j) { return p_entry_closed(g, i, j); };
            symmetric = true;
            break;
        case MatrixKind::P_oracle:
            // evaluated on both triangles so the oracle's own symmetry is exercised
            f = [&g](std::size_t i, std::size_t j) { return p_entry_oracle(g, i, j); };
            break;
        case MatrixKind::Q:
            f = [&g](std::size_t i, std::size_t j) { return q_entry(g, i, j); };
            symmetric = true;
            break;
    }
    ExactMatrix out = build_section(n, f, symmetric, exec);
    if (kind == MatrixKind::P_oracle) out.set_symmetric(out.check_symmetric());
    return out;
}

}  // namespace hyponorm
