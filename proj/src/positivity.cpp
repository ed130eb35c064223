#include "hyponorm/positivity.hpp"

#include <algorithm>

#include "hyponorm/errors.hpp"
#include "hyponorm/matrices.hpp"

namespace hyponorm {

namespace {

Rational index_value(std::size_t n) { return Rational(Integer(static_cast<unsigned long>(n))); }

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

DeltaSequence sequence_from_pivots(std::vector<Rational> pivots) {
    DeltaSequence out;
    out.deltas = std::move(pivots);
    for (std::size_t k = 0; k < out.deltas.size(); ++k) {
        if (sign(out.deltas[k]) == 0) out.inconclusive_at = k;
    }
    out.all_positive = std::all_of(out.deltas.begin(), out.deltas.end(), [](const Rational& v) { return sign(v) > 0; });
    return out;
}

}  // namespace

ExactMatrix TridiagonalForm::to_matrix() const {
    const std::size_t n = d.size();
    ExactMatrix m(n, n, true);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = d[i];
        if (i + 1 < n) {
            m(i + 1, i) = s[i];
            m(i, i + 1) = s[i];
        }
    }
    return m;
}

std::optional<std::size_t> DeltaSequence::first_nonpositive() const {
    for (std::size_t k = 0; k < deltas.size(); ++k) {
        if (sign(deltas[k]) <= 0) return k;
    }
    return std::nullopt;
}

Rational DeltaSequence::product() const {
    Rational p = 1;
    for (const auto& v : deltas) p *= v;
    return p;
}

Rational elimination_multiplier_generic(const FactorableGenerators& g, std::size_t n) {
    const Rational next = p_offdiag_col_factor(g, n + 1);
    if (sign(next) == 0) {
        throw DegenerateFactorError("off-diagonal column factor vanishes at " + std::to_string(n + 1), n + 1);
    }
    return p_offdiag_col_factor(g, n) / next;
}

Rational elimination_multiplier(const FactorableGenerators& g, std::size_t n) {
    if (g.weights().is_odd_integers()) return odd_weights::z(n);
    return elimination_multiplier_generic(g, n);
}

std::vector<Rational> elimination_multipliers(const FactorableGenerators& g, std::size_t N) {
    if (N > 0) g.prepare(N + 1);
    std::vector<Rational> z;
    z.reserve(N);
    for (std::size_t n = 0; n < N; ++n) z.push_back(elimination_multiplier(g, n));
    return z;
}

TridiagonalForm tridiagonalize(const ExactMatrix& q, const std::vector<Rational>& z, Execution exec) {
    if (q.rows() != q.cols()) throw PreconditionError("tridiagonalize needs a square matrix");
    if (!q.check_symmetric()) throw PreconditionError("tridiagonalize needs a symmetric matrix");
    const std::size_t n = q.rows();
    const ExactMatrix y = congruence(q, z, exec);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t gap = i > j ? i - j : j - i;
            if (gap > 1 && sign(y(i, j)) != 0) {
                throw StructureError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                         ") outside the tridiagonal band is " + y(i, j).get_str(),
                                     i, j);
            }
            if (gap == 1 && y(i, j) != y(j, i)) {
                throw StructureError("reduced matrix is not symmetric at (" + std::to_string(i) + "," +
                                         std::to_string(j) + ")",
                                     i, j);
            }
        }
    }

    TridiagonalForm t;
    t.d.reserve(n);
    for (std::size_t i = 0; i < n; ++i) t.d.push_back(y(i, i));
    for (std::size_t i = 0; i + 1 < n; ++i) t.s.push_back(y(i + 1, i));
    return t;
}

DeltaSequence delta_sequence(const TridiagonalForm& t) {
    DeltaSequence out;
    if (t.d.empty()) return out;
    if (t.s.size() + 1 != t.d.size()) throw PreconditionError("tridiagonal form needs |s| = |d| - 1");
    out.deltas.reserve(t.d.size());
    out.deltas.push_back(t.d[0]);
    for (std::size_t n = 1; n < t.d.size(); ++n) {
        const Rational& prev = out.deltas.back();
        if (sign(prev) == 0) {
            out.inconclusive_at = n - 1;
            break;
        }
        out.deltas.push_back(t.d[n] - t.s[n - 1] * t.s[n - 1] / prev);
    }
    if (!out.inconclusive_at && sign(out.deltas.back()) == 0) out.inconclusive_at = out.deltas.size() - 1;
    out.all_positive = !out.inconclusive_at &&
                       std::all_of(out.deltas.begin(), out.deltas.end(), [](const Rational& v) { return sign(v) > 0; });
    return out;
}

namespace odd_weights {

Rational z(std::size_t n) {
    const Rational x = index_value(n);
    return (x + 1) * (x + 3) / ((x + 2) * (x + 2));
}

Rational d(std::size_t n) {
    const Rational x = index_value(n);
    const Rational num = ((((((16 * x + 200) * x + 1024) * x + 2768) * x + 4226) * x + 3576) * x + 1481) * x + 197;
    const Rational x2 = (x + 2) * (x + 2);
    const Rational den = x2 * x2 * (x + 3) * (2 * x + 1) * (2 * x + 3) * (2 * x + 5);
    return num / den;
}

Rational s(std::size_t n) {
    const Rational x = index_value(n);
    return -(x + 1) * (2 * x * x + 8 * x + 7) / ((x + 2) * (x + 2) * (x + 3) * (2 * x + 3));
}

Rational final_diagonal(std::size_t N) {
    // equals q_NN; the linear term is 66N
    const Rational x = index_value(N);
    const Rational num = 12 * x * x * x * x + 60 * x * x * x + 104 * x * x + 66 * x + 7;
    return num / (3 * (x + 2) * (x + 2) * (x + 2) * (2 * x + 1) * (2 * x + 3));
}

Rational interior_delta_bound(std::size_t n) {
    const Rational x = index_value(n);
    return (4 * x + 10) / (4 * x * x + 20 * x + 37);
}

Rational final_delta_bound(std::size_t N) {
    const Rational x = index_value(N);
    const Rational num =
        (((((((24 * x + 140) * x + 432) * x + 1160) * x + 2234) * x + 2297) * x + 1070) * x + 216) * x + 14;
    const Rational x1 = (x + 1) * (x + 1);
    const Rational den = 6 * x1 * x1 * (x + 2) * (x + 2) * (x + 2) * (2 * x + 1) * (2 * x + 1) * (2 * x + 3);
    return num / den;
}

}  // namespace odd_weights

BoundReport check_delta_bounds(const DeltaSequence& deltas, std::size_t N) {
    BoundReport report;
    const std::size_t available = deltas.deltas.size();
    for (std::size_t n = 0; n < N && n < available; ++n) {
        const Rational bound = odd_weights::interior_delta_bound(n);
        ++report.interior_checked;
        if (!(deltas.deltas[n] > bound)) report.interior_failures.push_back({n, deltas.deltas[n], bound});
    }
    for (std::size_t n = available; n < N; ++n) {
        // recursion stopped early; missing deltas count as failures
        report.interior_failures.push_back({n, Rational(0), odd_weights::interior_delta_bound(n)});
    }
    report.final_checked = true;
    report.final_bound = odd_weights::final_delta_bound(N);
    if (N < available) {
        report.final_delta = deltas.deltas[N];
        report.final_holds = report.final_delta >= report.final_bound;
    }
    return report;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::CertifiedPositive: return "CertifiedPositive";
        case Verdict::NotPositive: return "NotPositive";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::CertifiedPositive: return 0;
        case Verdict::NotPositive: return 1;
        case Verdict::Inconclusive: return 2;
    }
    return 2;
}

CertificationReport certify(const FactorableGenerators& g, std::size_t N, const CertifyOptions& options) {
    const auto start = Clock::now();
    CertificationReport r;
    r.family = g.weights().description();
    r.weights = weights_spec(g.weights());
    r.N = N;

    // entries of Q_N read generators through index N+1
    r.hypothesis = check_hypotheses(g, N + 1);
    if (!r.hypothesis.all_passed() && !options.override_hypotheses) {
        r.refused = true;
        r.verdict = Verdict::Inconclusive;
        for (const auto& c : r.hypothesis.checks) {
            if (!c.passed) {
                r.conclusion = "refused: hypothesis " + c.name + " fails at n = " + std::to_string(*c.first_violation);
                break;
            }
        }
        r.timings.total_ms = elapsed_ms(start);
        return r;
    }

    ExactMatrix q;
    try {
        auto t0 = Clock::now();
        q = finite_section(g, MatrixKind::Q, N, options.execution);
        r.timings.build_ms = elapsed_ms(t0);
    } catch (const DomainError& e) {
        r.verdict = Verdict::Inconclusive;
        r.conclusion = std::string("cannot build Q_N: ") + e.what();
        r.timings.total_ms = elapsed_ms(start);
        return r;
    }

    auto t1 = Clock::now();
    DeltaSequence deltas;
    bool fallback = false;
    try {
        const auto z = elimination_multipliers(g, N);
        const auto t = tridiagonalize(q, z, options.execution);
        deltas = delta_sequence(t);
        r.route = "tridiagonal";
        r.route_note = g.weights().is_odd_integers() ? "closed-form multipliers z_n = (n+1)(n+3)/(n+2)^2"
                                                     : "multipliers z_n = G(n)/G(n+1)";
    } catch (const DegenerateFactorError& e) {
        fallback = true;
        r.route_note = e.what();
    } catch (const StructureError& e) {
        fallback = true;
        r.route_note = e.what();
    }
    if (fallback) {
        r.route = "elimination";
        deltas = sequence_from_pivots(elimination_pivots(q, options.execution));
    }
    r.timings.reduce_ms = elapsed_ms(t1);

    r.deltas = deltas.deltas;
    r.first_nonpositive = deltas.first_nonpositive();
    if (!deltas.deltas.empty()) r.min_delta = *std::min_element(deltas.deltas.begin(), deltas.deltas.end());
    const bool complete = deltas.deltas.size() == N + 1 && !(deltas.inconclusive_at && *deltas.inconclusive_at < N);
    r.determinant = deltas.product();

    if (options.bounds && g.weights().is_odd_integers() && r.route == "tridiagonal") {
        r.bounds = check_delta_bounds(deltas, N);
    }

    // pivots alone cannot give det Q_N once the recursion stops on a zero
    const bool need_minors = options.cross_check_minors || fallback || !complete;
    if (need_minors) {
        auto t2 = Clock::now();
        const auto minors = leading_minors(q, options.execution);
        r.timings.minors_ms = elapsed_ms(t2);
        r.cross_check.ran = true;
        for (std::size_t k = 0; k < minors.size(); ++k) {
            if (sign(minors[k]) <= 0) {
                r.cross_check.first_nonpositive_minor = k;
                break;
            }
        }
        r.cross_check.all_minors_positive = !r.cross_check.first_nonpositive_minor;
        if (!complete) r.determinant = minors.back();
        r.cross_check.determinant_matches = minors.back() == r.determinant;
    }

    const std::string section = "Q_" + std::to_string(N) + " (" + std::to_string(N + 1) + "x" +
                                std::to_string(N + 1) + " finite section)";
    if (r.first_nonpositive) {
        const auto k = *r.first_nonpositive;
        if (sign(deltas.deltas[k]) < 0) {
            r.verdict = Verdict::NotPositive;
            r.conclusion = section + " is not positive semidefinite: pivot " + std::to_string(k) + " is negative";
        } else {
            r.verdict = Verdict::Inconclusive;
            r.conclusion = section + " has a vanishing leading minor at " + std::to_string(k) +
                           "; positive definiteness fails but semidefiniteness is undecided";
        }
    } else if (r.cross_check.ran && !(r.cross_check.all_minors_positive && r.cross_check.determinant_matches)) {
        r.verdict = Verdict::Inconclusive;
        r.conclusion = section + ": pivot route and leading minors disagree";
    } else {
        r.verdict = Verdict::CertifiedPositive;
        r.conclusion = section + " is positive definite (exact); no claim is made beyond this section";
    }
    r.timings.total_ms = elapsed_ms(start);
    return r;
}

}  // namespace hyponorm
