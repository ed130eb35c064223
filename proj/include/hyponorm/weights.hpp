#pragma once

// Weight sequences w_n and the factorable generators of the associated
// weighted mean matrix: W_i = sum_{j<=i} w_j, a_i = 1/W_i, c_j = w_j.

#include <cstddef>
#include <deque>
#include <limits>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hyponorm/rational.hpp"

namespace hyponorm {

/// w_n = alpha * n + beta.
struct LinearFamily {
    Rational alpha;
    Rational beta;

    bool operator==(const LinearFamily&) const = default;
};

struct ExplicitTable {
    std::vector<Rational> values;
};

class WeightSequence {
  public:
    using Family = std::variant<LinearFamily, ExplicitTable>;

    /// Requires alpha >= 0 and beta > 0.
    static WeightSequence linear(Rational alpha, Rational beta);
    /// Requires a non-empty table, w_0 > 0 and every entry >= 0.
    static WeightSequence table(std::vector<Rational> values);

    /// w_n. Throws RangeError past the end of a table.
    Rational weight(std::size_t n) const;

    /// Number of defined terms; nullopt for closed-form families.
    std::optional<std::size_t> length() const;

    const Family& family() const noexcept { return family_; }
    const std::string& description() const noexcept { return description_; }
    const LinearFamily* as_linear() const noexcept { return std::get_if<LinearFamily>(&family_); }

    /// True for w_n = 2n + 1, the family with the specialized closed forms.
    bool is_odd_integers() const;

  private:
    WeightSequence(Family family, std::string description);

    Family family_;
    std::string description_;
};

/// Parses `linear:ALPHA,BETA` or `table:v0,v1,...`; rationals as `p/q` or
/// integers. Throws std::invalid_argument or DomainError.
WeightSequence parse_weights(std::string_view spec);

/// Canonical textual form, e.g. "linear:2/1,1/1".
std::string weights_spec(const WeightSequence& seq);

struct Generators {
    Rational a;
    Rational c;
};

/// Memoized generator sequences. Safe for concurrent readers; the cache grows
/// under an exclusive lock and entries never move once created.
class FactorableGenerators {
  public:
    explicit FactorableGenerators(WeightSequence weights);

    FactorableGenerators(const FactorableGenerators& other);
    FactorableGenerators& operator=(const FactorableGenerators&) = delete;

    const WeightSequence& weights() const noexcept { return weights_; }

    /// W_i.
    const Rational& partial_sum(std::size_t i) const { return entry(i).partial_sum; }
    /// sum_{k<=j} c_k^2.
    const Rational& square_sum(std::size_t j) const { return entry(j).square_sum; }
    const Rational& a(std::size_t i) const { return entry(i).a; }
    const Rational& c(std::size_t j) const { return entry(j).c; }

    Generators generators(std::size_t i) const;

    /// Largest admissible index (table length - 1, or SIZE_MAX).
    std::size_t max_index() const noexcept { return max_index_; }

    /// Fills the cache through index n so later reads never take the writer path.
    void prepare(std::size_t n) const;

  private:
    struct Entry {
        Rational c;
        Rational partial_sum;
        Rational a;
        Rational square_sum;
    };

    const Entry& entry(std::size_t i) const;
    void extend_locked(std::size_t n) const;

    WeightSequence weights_;
    std::size_t max_index_;
    mutable std::shared_mutex mutex_;
    mutable std::deque<Entry> cache_;
};

struct HypothesisCheck {
    std::string name;
    bool passed = true;
    std::optional<std::size_t> first_violation;
};

/// Finite-prefix status of the hypotheses on {a_n} and {a_n / c_n}.
struct HypothesisReport {
    std::vector<HypothesisCheck> checks;
    std::size_t prefix_length = 0;
    /// Always "not decidable from a finite prefix" plus any analytic fact known.
    std::string convergence_note;
    /// Hypotheses this artifact never checks (boundedness on l^2).
    std::vector<std::string> unchecked;

    bool all_passed() const;
};

/// Checks a_n > 0, c_n > 0 for n = 0..N and strict decrease of a_n and a_n/c_n
/// over consecutive pairs in 0..N. Requires N >= 1.
HypothesisReport check_hypotheses(const FactorableGenerators& g, std::size_t N);

}  // namespace hyponorm
