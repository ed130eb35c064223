#include "hyponorm/symbolic.hpp"

#include "hyponorm/errors.hpp"
#include "hyponorm/sturm.hpp"

namespace hyponorm {

namespace {

RationalFunction rf(const Polynomial& p) { return RationalFunction(p); }

struct LinearGenerators {
    RationalFunction c;
    RationalFunction c_next;
    RationalFunction a;
    RationalFunction a_next;
    RationalFunction squares;
    RationalFunction squares_next;
};

LinearGenerators linear_generators(const LinearFamily& w) {
    const Polynomial c({w.beta, w.alpha}, "n");
    const Polynomial W = partial_sum_polynomial(w, "n");
    const Polynomial S = power_sum(w, "n");
    const RationalFunction a(Polynomial::constant(1, "n"), W);
    return {rf(c), rf(c.shifted(1)), a, a.shifted(1), rf(S), rf(S.shifted(1))};
}

bool all_coefficients_nonnegative(const Polynomial& p) {
    if (p.is_zero()) return false;
    bool any_positive = false;
    for (const auto& c : p.coefficients()) {
        if (sign(c) < 0) return false;
        if (sign(c) > 0) any_positive = true;
    }
    return any_positive;
}

RationalFunction q_diagonal(const LinearGenerators& g) {
    const RationalFunction cross = g.c_next * g.a - g.c * g.a_next;
    const RationalFunction p_diag =
        (g.c * g.c * g.c_next * g.c_next * g.a_next * g.a_next + g.squares * cross * cross) /
        (g.c * g.c * g.c_next * g.c_next * g.a * g.a);
    return RationalFunction::constant(1) - p_diag;
}

}  // namespace

Polynomial power_sum(const LinearFamily& w, const std::string& variable) {
    // sum k = (j^2 + j)/2, sum k^2 = (2j^3 + 3j^2 + j)/6, sum 1 = j + 1
    const Polynomial sum_k({0, Rational(1, 2), Rational(1, 2)}, variable);
    const Polynomial sum_k2({0, Rational(1, 6), Rational(1, 2), Rational(1, 3)}, variable);
    const Polynomial sum_1({1, 1}, variable);
    return w.alpha * w.alpha * sum_k2 + 2 * w.alpha * w.beta * sum_k + w.beta * w.beta * sum_1;
}

Polynomial partial_sum_polynomial(const LinearFamily& w, const std::string& variable) {
    const Polynomial sum_k({0, Rational(1, 2), Rational(1, 2)}, variable);
    const Polynomial sum_1({1, 1}, variable);
    return w.alpha * sum_k + w.beta * sum_1;
}

SymbolicQ symbolic_q(const LinearFamily& w) {
    const auto g = linear_generators(w);
    const RationalFunction scale = g.c * g.c_next * g.a;
    const RationalFunction row = (g.c * g.a_next - g.c_next * g.a) / scale;
    const RationalFunction col = (g.c * g.squares_next * g.a_next - g.c_next * g.squares * g.a) / scale;
    if (row.is_zero() || col.is_zero()) {
        throw StructureError("off-diagonal entries of Q vanish identically; no product structure to eliminate");
    }

    // q_mn = -row(m) col(n); move col's leading numerator coefficient into row
    const Rational lead = col.numerator().leading();
    SymbolicQ out;
    out.diagonal = q_diagonal(g);
    out.offdiag_col = (1 / lead) * col;
    out.offdiag_row = (-lead * row).renamed("m");
    return out;
}

SymbolicTridiagonal symbolic_tridiagonal(const LinearFamily& w) {
    const SymbolicQ q = symbolic_q(w);
    const RationalFunction row_n = q.offdiag_row.renamed("n");
    const RationalFunction diag_next = q.diagonal.shifted(1);
    // q_{n+1,n}
    const RationalFunction sub = row_n.shifted(1) * q.offdiag_col;

    SymbolicTridiagonal out;
    out.z = q.offdiag_col / q.offdiag_col.shifted(1);
    out.d = q.diagonal - Rational(2) * (out.z * sub) + out.z * out.z * diag_next;
    out.s = sub - out.z * diag_next;
    return out;
}

RationalFunction odd_weights_interior_bound() {
    return RationalFunction(Polynomial({10, 4}, "n"), Polynomial({37, 20, 4}, "n"));
}

NonnegativityResult nonnegative_from_one(const Polynomial& p) {
    if (p.is_zero()) return {false, "zero polynomial"};
    if (all_coefficients_nonnegative(p.shifted(1))) {
        return {true, "coefficient test: every coefficient of p(n+1) is nonnegative"};
    }
    const SturmChain chain(p);
    const Rational one = 1;
    const std::size_t roots = chain.count_roots_above(one) + (sign(p(one)) == 0 ? 1 : 0);
    if (roots == 0 && sign(p(one)) > 0) {
        return {true, "Sturm chain: no real roots on [1, inf) and p(1) > 0"};
    }
    return {false, "Sturm chain: " + std::to_string(roots) +
                       " distinct real roots on [1, inf) or p(1) <= 0; nonnegativity not certified"};
}

InductionCertificate induction_certificate(const LinearFamily& w, const RationalFunction& bound) {
    if (sign(bound.denominator()(0)) == 0) throw PreconditionError("bound L_n is undefined at n = 0");
    const RationalFunction bound_prev = bound.shifted(-1);
    if (bound_prev.is_zero()) throw PreconditionError("bound L_n vanishes identically");

    const auto tri = symbolic_tridiagonal(w);
    const RationalFunction s_prev = tri.s.shifted(-1);

    InductionCertificate out;
    out.step_expression = tri.d - s_prev * s_prev / bound_prev - bound;
    out.base_case_holds = tri.d(0) > bound(0);

    const Polynomial& den = out.step_expression.denominator();
    int den_sign = 0;
    std::string den_method;
    if (all_coefficients_nonnegative(den.shifted(1)) && sign(den(1)) > 0) {
        den_sign = 1;
        den_method = "denominator(n+1) has nonnegative coefficients and positive constant term";
    } else if (all_coefficients_nonnegative(-den.shifted(1)) && sign(den(1)) < 0) {
        den_sign = -1;
        den_method = "denominator(n+1) has nonpositive coefficients and negative constant term";
    } else {
        const SturmChain chain(den);
        if (chain.count_roots_above(1) == 0 && sign(den(1)) != 0) {
            den_sign = sign(den(1));
            den_method = "denominator has no real roots on [1, inf) (Sturm)";
        }
    }

    if (den_sign == 0) {
        out.certificate = out.step_expression.numerator();
        out.numerator_scale = 1;
        out.method = "Inconclusive: sign of the denominator on n >= 1 is not decided";
        return out;
    }
    out.denominator_sign_definite = true;

    const Polynomial signed_num = Rational(den_sign) * out.step_expression.numerator();
    const auto [primitive, factor] = signed_num.primitive_part();
    const Rational magnitude = abs(factor);
    out.certificate = sign(factor) < 0 ? -primitive : primitive;
    out.numerator_scale = Rational(den_sign) * magnitude;

    const auto nonneg = nonnegative_from_one(out.certificate);
    out.nonneg_for_n_ge_1 = nonneg.holds;
    out.nonneg_for_n_ge_0 = all_coefficients_nonnegative(out.certificate);
    out.method = den_method + "; " + nonneg.method + "; numerator = certificate * " + out.numerator_scale.get_str();
    return out;
}

Polynomial reference_induction_polynomial() {
    return Polynomial({178, 35022, 285132, 927504, 1531563, 1447767, 824294, 282288, 54624, 4944, 96}, "n");
}

std::optional<Rational> positive_proportionality(const Polynomial& candidate, const Polynomial& reference) {
    if (candidate.degree() != reference.degree() || reference.is_zero()) return std::nullopt;
    const Rational k = candidate.leading() / reference.leading();
    if (sign(k) <= 0) return std::nullopt;
    for (std::size_t i = 0; i < reference.coefficients().size(); ++i) {
        if (candidate.coefficient(i) != k * reference.coefficient(i)) return std::nullopt;
    }
    return k;
}

DegreeReport degree_report(const LinearFamily& w) {
    // the diagonal exists even when the off-diagonal part degenerates
    const auto diag = q_diagonal(linear_generators(w));
    return {diag.numerator().degree(), diag.denominator().degree()};
}

}  // namespace hyponorm
