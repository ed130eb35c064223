#pragma once

// Exact positive definiteness certification of Q_N: congruence reduction to a
// symmetric tridiagonal matrix, the pivot recursion
//   delta_0 = d_0,  delta_n = d_n - s_{n-1}^2 / delta_{n-1},
// and the explicit lower bounds on delta_n for w_n = 2n + 1.

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyponorm/exact_matrix.hpp"
#include "hyponorm/kernels.hpp"
#include "hyponorm/rational.hpp"
#include "hyponorm/weights.hpp"

namespace hyponorm {

/// Symmetric tridiagonal matrix with diagonal d (N+1) and off-diagonal s (N).
struct TridiagonalForm {
    std::vector<Rational> d;
    std::vector<Rational> s;

    std::size_t N() const noexcept { return d.empty() ? 0 : d.size() - 1; }
    ExactMatrix to_matrix() const;
};

struct DeltaSequence {
    std::vector<Rational> deltas;
    bool all_positive = false;
    /// Index of a vanishing delta; the recursion stops there.
    std::optional<std::size_t> inconclusive_at;

    std::optional<std::size_t> first_nonpositive() const;
    /// Product of the computed deltas.
    Rational product() const;
};

/// z_n. For w = 2n+1 the closed form (n+1)(n+3)/(n+2)^2; otherwise G(n)/G(n+1)
/// with G the column factor of the off-diagonal interrupter entries.
/// Throws DegenerateFactorError when G(n+1) == 0.
Rational elimination_multiplier(const FactorableGenerators& g, std::size_t n);

/// The generic G(n)/G(n+1) route, regardless of family.
Rational elimination_multiplier_generic(const FactorableGenerators& g, std::size_t n);

/// z_0 .. z_{N-1}.
std::vector<Rational> elimination_multipliers(const FactorableGenerators& g, std::size_t N);

/// Applies the column pass then the row pass. Throws StructureError naming the
/// first entry outside the band (or an asymmetric pair).
TridiagonalForm tridiagonalize(const ExactMatrix& q, const std::vector<Rational>& z,
                               Execution exec = Execution::parallel);

DeltaSequence delta_sequence(const TridiagonalForm& t);

// Closed forms for the 2n+1 family.
namespace odd_weights {
Rational z(std::size_t n);
Rational d(std::size_t n);
Rational s(std::size_t n);
/// Last diagonal entry of Y_N, identical to q_NN.
Rational final_diagonal(std::size_t N);
/// (4n+10)/(4n^2+20n+37).
Rational interior_delta_bound(std::size_t n);
/// Degree-8-numerator lower bound on delta_N.
Rational final_delta_bound(std::size_t N);
}  // namespace odd_weights

struct BoundFailure {
    std::size_t n;
    Rational delta;
    Rational bound;
};

struct BoundReport {
    std::size_t interior_checked = 0;
    std::vector<BoundFailure> interior_failures;
    bool final_checked = false;
    bool final_holds = false;
    Rational final_delta;
    Rational final_bound;

    bool all_hold() const { return interior_failures.empty() && (!final_checked || final_holds); }
};

/// delta_n > interior bound for n <= N-1, delta_N >= final bound.
BoundReport check_delta_bounds(const DeltaSequence& deltas, std::size_t N);

enum class Verdict { CertifiedPositive, NotPositive, Inconclusive };

std::string to_string(Verdict v);
int exit_code(Verdict v);

struct CertifyOptions {
    bool cross_check_minors = false;
    bool bounds = false;
    bool override_hypotheses = false;
    Execution execution = Execution::parallel;
};

struct CrossCheck {
    bool ran = false;
    bool all_minors_positive = false;
    bool determinant_matches = false;
    std::optional<std::size_t> first_nonpositive_minor;
};

struct Timings {
    double build_ms = 0;
    double reduce_ms = 0;
    double minors_ms = 0;
    double total_ms = 0;
};

struct CertificationReport {
    std::string family;
    std::string weights;
    std::size_t N = 0;
    HypothesisReport hypothesis;
    bool refused = false;
    /// "tridiagonal" (closed or generic z), or "elimination" (fallback pivots).
    std::string route;
    std::string route_note;
    Rational determinant;
    Rational min_delta;
    std::optional<std::size_t> first_nonpositive;
    std::vector<Rational> deltas;
    std::optional<BoundReport> bounds;
    CrossCheck cross_check;
    Verdict verdict = Verdict::Inconclusive;
    std::string conclusion;
    Timings timings;
};

CertificationReport certify(const FactorableGenerators& g, std::size_t N, const CertifyOptions& options = {});

}  // namespace hyponorm
