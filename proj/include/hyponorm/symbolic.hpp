#pragma once

// Closed forms in n for linear weights w_n = alpha n + beta: entries of Q,
// the tridiagonal reduction, and the polynomial certificate for the
// induction step delta_{n-1} > L_{n-1}  =>  delta_n > L_n.

#include <optional>
#include <string>

#include "hyponorm/polynomial.hpp"
#include "hyponorm/rational_function.hpp"
#include "hyponorm/weights.hpp"

namespace hyponorm {

/// sum_{k=0}^{j} (alpha k + beta)^2 as a polynomial in `variable`.
Polynomial power_sum(const LinearFamily& w, const std::string& variable = "j");

/// W_i = sum_{k=0}^{i} (alpha k + beta).
Polynomial partial_sum_polynomial(const LinearFamily& w, const std::string& variable = "i");

/// q_nn, and q_mn = row(m) * col(n) for m > n. `col` is normalized to monic
/// numerator and denominator; the scalar lives in `row`.
struct SymbolicQ {
    RationalFunction diagonal;        // in n
    RationalFunction offdiag_row;     // in m
    RationalFunction offdiag_col;     // in n
};

/// Throws StructureError when the off-diagonal factor vanishes identically.
SymbolicQ symbolic_q(const LinearFamily& w);

struct SymbolicTridiagonal {
    RationalFunction z;
    RationalFunction d;
    RationalFunction s;
};

SymbolicTridiagonal symbolic_tridiagonal(const LinearFamily& w);

/// (4n+10)/(4n^2+20n+37).
RationalFunction odd_weights_interior_bound();

struct InductionCertificate {
    /// E(n) = d_n - s_{n-1}^2 / L_{n-1} - L_n, canonical.
    RationalFunction step_expression;
    /// Primitive integer numerator of E times the sign of its denominator.
    Polynomial certificate;
    /// E's numerator equals certificate * this positive constant.
    Rational numerator_scale;
    bool denominator_sign_definite = false;
    bool nonneg_for_n_ge_1 = false;
    /// Every coefficient of the certificate itself is nonnegative.
    bool nonneg_for_n_ge_0 = false;
    /// d_0 > L_0.
    bool base_case_holds = false;
    std::string method;
};

/// Throws PreconditionError when L's denominator vanishes at 0.
InductionCertificate induction_certificate(const LinearFamily& w, const RationalFunction& bound);

/// Known degree-10 polynomial for the odd-weight induction step.
Polynomial reference_induction_polynomial();

/// k > 0 with candidate == k * reference, if one exists.
std::optional<Rational> positive_proportionality(const Polynomial& candidate, const Polynomial& reference);

struct DegreeReport {
    int q_diag_num_degree = 0;
    int q_diag_den_degree = 0;
};

DegreeReport degree_report(const LinearFamily& w);

/// Nonnegativity of p on [1, inf): coefficient test on p(n+1), then Sturm.
struct NonnegativityResult {
    bool holds = false;
    std::string method;
};
NonnegativityResult nonnegative_from_one(const Polynomial& p);

}  // namespace hyponorm
