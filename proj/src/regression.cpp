#include "hyponorm/regression.hpp"

#include <sstream>

#include "hyponorm/matrices.hpp"
#include "hyponorm/positivity.hpp"
#include "hyponorm/symbolic.hpp"

namespace hyponorm {

namespace {

std::vector<FactorableGenerators> linear_families() {
    std::vector<FactorableGenerators> out;
    out.emplace_back(WeightSequence::linear(2, 1));
    out.emplace_back(WeightSequence::linear(1, 1));
    out.emplace_back(WeightSequence::linear(3, 1));
    return out;
}

RegressionCheck oracle_equivalence(const RegressionConfig& cfg) {
    RegressionCheck check{"interrupter_oracle_equivalence", false, {}};
    std::ostringstream detail;
    check.passed = true;
    for (const auto& g : linear_families()) {
        const auto closed = finite_section(g, MatrixKind::P_closed, cfg.oracle_N, cfg.execution);
        const auto oracle = finite_section(g, MatrixKind::P_oracle, cfg.oracle_N, cfg.execution);
        const bool same = closed == oracle;
        check.passed = check.passed && same;
        detail << weights_spec(g.weights()) << (same ? " equal; " : " DIFFER; ");
    }
    detail << "0 <= i,j <= " << cfg.oracle_N;
    check.detail = detail.str();
    return check;
}

RegressionCheck q_closed_form(const RegressionConfig& cfg) {
    RegressionCheck check{"q_closed_form_2n1", false, {}};
    const FactorableGenerators g(WeightSequence::linear(2, 1));
    const auto q = finite_section(g, MatrixKind::Q, cfg.closed_form_N, cfg.execution);
    std::size_t mismatches = 0;
    for (std::size_t m = 0; m <= cfg.closed_form_N; ++m) {
        for (std::size_t n = 0; n <= cfg.closed_form_N; ++n) {
            if (q(m, n) != q_closed_2n1(m, n)) ++mismatches;
        }
    }
    check.passed = mismatches == 0 && q.check_symmetric();
    check.detail = std::to_string(mismatches) + " mismatches for 0 <= m,n <= " + std::to_string(cfg.closed_form_N);
    return check;
}

RegressionCheck tridiagonal_closed_forms(const RegressionConfig& cfg) {
    RegressionCheck check{"tridiagonal_closed_forms_2n1", false, {}};
    const FactorableGenerators g(WeightSequence::linear(2, 1));
    // one extra row so that d_n for n <= N are all interior entries
    const std::size_t N = cfg.closed_form_N + 1;
    const auto q = finite_section(g, MatrixKind::Q, N, cfg.execution);
    const auto z = elimination_multipliers(g, N);
    std::size_t bad = 0;
    for (std::size_t n = 0; n < N; ++n) {
        if (z[n] != odd_weights::z(n) || elimination_multiplier_generic(g, n) != z[n]) ++bad;
    }
    const auto t = tridiagonalize(q, z, cfg.execution);
    for (std::size_t n = 0; n < N; ++n) {
        if (t.d[n] != odd_weights::d(n) || t.s[n] != odd_weights::s(n)) ++bad;
    }
    const bool last_ok = t.d[N] == odd_weights::final_diagonal(N) && t.d[N] == q_closed_2n1(N, N);

    const auto q1 = finite_section(g, MatrixKind::Q, 1, cfg.execution);
    const auto t1 = tridiagonalize(q1, elimination_multipliers(g, 1), cfg.execution);
    const Rational det_direct = q1(0, 0) * q1(1, 1) - q1(0, 1) * q1(1, 0);
    const Rational det_reduced = t1.d[0] * t1.d[1] - t1.s[0] * t1.s[0];
    const bool det_ok = det_direct == det_reduced && det_direct == Rational(2663, 145800) &&
                        t1.d[1] == odd_weights::final_diagonal(1);

    check.passed = bad == 0 && last_ok && det_ok;
    check.detail = std::to_string(bad) + " mismatches in z, d, s for n < " + std::to_string(N) +
                   "; final diagonal " + (last_ok ? "ok" : "WRONG") + "; det Q_1 = " + to_string(det_direct) +
                   " via both routes " + (det_ok ? "ok" : "WRONG");
    return check;
}

RegressionCheck delta_bounds(const RegressionConfig& cfg) {
    RegressionCheck check{"delta_bounds_2n1", false, {}};
    const FactorableGenerators g(WeightSequence::linear(2, 1));
    const std::size_t N = cfg.bounds_N;
    const auto q = finite_section(g, MatrixKind::Q, N, cfg.execution);
    const auto deltas = delta_sequence(tridiagonalize(q, elimination_multipliers(g, N), cfg.execution));
    const auto interior = check_delta_bounds(deltas, N);

    std::ostringstream detail;
    bool finals_ok = true;
    for (std::size_t k : {std::size_t{1}, std::size_t{2}, std::size_t{5}, std::size_t{10}, std::size_t{50}}) {
        const auto qk = finite_section(g, MatrixKind::Q, k, cfg.execution);
        const auto dk = delta_sequence(tridiagonalize(qk, elimination_multipliers(g, k), cfg.execution));
        const auto bk = check_delta_bounds(dk, k);
        finals_ok = finals_ok && bk.final_holds;
        detail << "final N=" << k << (bk.final_holds ? " ok; " : " FAILS; ");
    }
    const bool base_ok = deltas.deltas[0] == Rational(197, 720) && deltas.deltas[0] > Rational(10, 37);
    check.passed = interior.interior_failures.empty() && interior.interior_checked == N && finals_ok && base_ok &&
                   deltas.all_positive;
    detail << interior.interior_checked << " interior bounds checked, " << interior.interior_failures.size()
           << " failures; base delta_0 = 197/720 > 10/37 " << (base_ok ? "ok" : "WRONG");
    check.detail = detail.str();
    return check;
}

RegressionCheck determinant_crosscheck(const RegressionConfig& cfg) {
    RegressionCheck check{"determinant_crosscheck", false, {}};
    std::size_t bad = 0;
    std::size_t total = 0;
    for (const auto& g : linear_families()) {
        for (std::size_t N = 0; N <= cfg.determinant_N; ++N) {
            const auto q = finite_section(g, MatrixKind::Q, N, cfg.execution);
            const auto deltas = delta_sequence(tridiagonalize(q, elimination_multipliers(g, N), cfg.execution));
            const auto minors = leading_minors(q, cfg.execution);
            ++total;
            if (deltas.product() != minors.back()) ++bad;
        }
    }
    check.passed = bad == 0;
    check.detail = std::to_string(total - bad) + "/" + std::to_string(total) +
                   " sections with det Q_N == prod delta_n == Bareiss minor";
    return check;
}

RegressionCheck certificate_check() {
    RegressionCheck check{"induction_certificate_2n1", false, {}};
    const LinearFamily w{2, 1};
    const auto cert = induction_certificate(w, odd_weights_interior_bound());
    const auto reference = reference_induction_polynomial();
    const auto k = positive_proportionality(cert.certificate, reference);
    const bool eval_ok = k && cert.certificate(1) == *k * Rational(5393412) && reference(1) == 5393412;
    check.passed = cert.nonneg_for_n_ge_1 && cert.base_case_holds && cert.denominator_sign_definite && k && eval_ok;
    check.detail = "nonneg for n >= 1: " + std::string(cert.nonneg_for_n_ge_1 ? "yes" : "no") +
                   "; all coefficients nonnegative (n >= 0): " + (cert.nonneg_for_n_ge_0 ? "yes" : "no") +
                   "; proportional to reference: " + (k ? "yes, constant " + to_string(*k) : std::string("no")) +
                   "; certificate(1) = " + to_string(cert.certificate(1));
    return check;
}

RegressionCheck degrees_check() {
    RegressionCheck check{"q_diagonal_degrees", false, {}};
    const auto odd = degree_report(LinearFamily{2, 1});
    const auto three = degree_report(LinearFamily{3, 1});
    check.passed = odd.q_diag_num_degree == 4 && odd.q_diag_den_degree == 5 && three.q_diag_num_degree == 6 &&
                   three.q_diag_den_degree == 7;
    check.detail = "2n+1: (" + std::to_string(odd.q_diag_num_degree) + ", " + std::to_string(odd.q_diag_den_degree) +
                   "); 3n+1: (" + std::to_string(three.q_diag_num_degree) + ", " +
                   std::to_string(three.q_diag_den_degree) + ")";
    return check;
}

}  // namespace

std::vector<RegressionCheck> run_regression_bundle(const RegressionConfig& config) {
    std::vector<RegressionCheck> out;
    out.push_back(oracle_equivalence(config));
    out.push_back(q_closed_form(config));
    out.push_back(tridiagonal_closed_forms(config));
    out.push_back(delta_bounds(config));
    out.push_back(determinant_crosscheck(config));
    out.push_back(certificate_check());
    out.push_back(degrees_check());
    return out;
}

Json to_json(const std::vector<RegressionCheck>& checks) {
    Json out;
    bool all = true;
    Json list = Json::array();
    for (const auto& c : checks) {
        all = all && c.passed;
        list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    out["all_passed"] = all;
    out["checks"] = std::move(list);
    return out;
}

}  // namespace hyponorm
