#include "hyponorm/weights.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

#include "hyponorm/errors.hpp"

namespace hyponorm {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

WeightSequence::WeightSequence(Family family, std::string description)
    : family_(std::move(family)), description_(std::move(description)) {}

WeightSequence WeightSequence::linear(Rational alpha, Rational beta) {
    if (sign(alpha) < 0) throw DomainError("linear weights require alpha >= 0");
    if (sign(beta) <= 0) throw DomainError("linear weights require beta > 0");
    std::string desc = "w_n = " + alpha.get_str() + "n + " + beta.get_str();
    return WeightSequence(LinearFamily{std::move(alpha), std::move(beta)}, std::move(desc));
}

WeightSequence WeightSequence::table(std::vector<Rational> values) {
    if (values.empty()) throw DomainError("weight table is empty");
    if (sign(values.front()) <= 0) throw DomainError("weight table requires w_0 > 0");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (sign(values[i]) < 0) {
            throw DomainError("negative weight w_" + std::to_string(i) + " = " + values[i].get_str());
        }
    }
    std::string desc = "table of " + std::to_string(values.size()) + " weights";
    return WeightSequence(ExplicitTable{std::move(values)}, std::move(desc));
}

Rational WeightSequence::weight(std::size_t n) const {
    if (const auto* lin = std::get_if<LinearFamily>(&family_)) {
        return lin->alpha * Rational(Integer(std::to_string(n))) + lin->beta;
    }
    const auto& tab = std::get<ExplicitTable>(family_);
    if (n >= tab.values.size()) {
        throw RangeError("weight index " + std::to_string(n) + " outside table of length " +
                         std::to_string(tab.values.size()));
    }
    return tab.values[n];
}

std::optional<std::size_t> WeightSequence::length() const {
    if (const auto* tab = std::get_if<ExplicitTable>(&family_)) return tab->values.size();
    return std::nullopt;
}

bool WeightSequence::is_odd_integers() const {
    const auto* lin = as_linear();
    return lin != nullptr && lin->alpha == 2 && lin->beta == 1;
}

WeightSequence parse_weights(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("weights must be 'linear:A,B' or 'table:v0,v1,...'");
    }
    const auto kind = spec.substr(0, colon);
    const auto body = spec.substr(colon + 1);
    std::vector<Rational> values;
    for (auto part : split(body, ',')) values.push_back(parse_rational(part));

    if (kind == "linear") {
        if (values.size() != 2) throw std::invalid_argument("linear weights take exactly two values ALPHA,BETA");
        return WeightSequence::linear(values[0], values[1]);
    }
    if (kind == "table") return WeightSequence::table(std::move(values));
    throw std::invalid_argument("unknown weight family '" + std::string(kind) + "'");
}

std::string weights_spec(const WeightSequence& seq) {
    std::ostringstream out;
    if (const auto* lin = seq.as_linear()) {
        out << "linear:" << to_string(lin->alpha) << "," << to_string(lin->beta);
        return out.str();
    }
    out << "table:";
    const auto& values = std::get<ExplicitTable>(seq.family()).values;
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << to_string(values[i]);
    return out.str();
}

FactorableGenerators::FactorableGenerators(WeightSequence weights)
    : weights_(std::move(weights)),
      max_index_(weights_.length() ? *weights_.length() - 1 : std::numeric_limits<std::size_t>::max()) {}

FactorableGenerators::FactorableGenerators(const FactorableGenerators& other)
    : weights_(other.weights_), max_index_(other.max_index_) {
    std::shared_lock lock(other.mutex_);
    cache_ = other.cache_;
}

Generators FactorableGenerators::generators(std::size_t i) const {
    const auto& e = entry(i);
    return {e.a, e.c};
}

void FactorableGenerators::prepare(std::size_t n) const {
    if (n > max_index_) {
        throw RangeError("generator index " + std::to_string(n) + " exceeds available weights (max " +
                         std::to_string(max_index_) + ")");
    }
    std::unique_lock lock(mutex_);
    extend_locked(n);
}

const FactorableGenerators::Entry& FactorableGenerators::entry(std::size_t i) const {
    {
        std::shared_lock lock(mutex_);
        if (i < cache_.size()) return cache_[i];
    }
    prepare(i);
    std::shared_lock lock(mutex_);
    return cache_[i];
}

void FactorableGenerators::extend_locked(std::size_t n) const {
    while (cache_.size() <= n) {
        const std::size_t k = cache_.size();
        Entry e;
        e.c = weights_.weight(k);
        e.partial_sum = e.c;
        e.square_sum = e.c * e.c;
        if (k > 0) {
            e.partial_sum += cache_.back().partial_sum;
            e.square_sum += cache_.back().square_sum;
        }
        e.a = 1 / e.partial_sum;
        cache_.push_back(std::move(e));
    }
}

bool HypothesisReport::all_passed() const {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

HypothesisReport check_hypotheses(const FactorableGenerators& g, std::size_t N) {
    if (N < 1) throw PreconditionError("check_hypotheses requires N >= 1");
    g.prepare(N);

    HypothesisCheck a_pos{"a_positive", true, std::nullopt};
    HypothesisCheck c_pos{"c_positive", true, std::nullopt};
    HypothesisCheck a_dec{"a_decreasing", true, std::nullopt};
    HypothesisCheck ratio_dec{"a_over_c_decreasing", true, std::nullopt};

    auto fail = [](HypothesisCheck& check, std::size_t n) {
        if (check.passed) {
            check.passed = false;
            check.first_violation = n;
        }
    };

    for (std::size_t n = 0; n <= N; ++n) {
        if (sign(g.a(n)) <= 0) fail(a_pos, n);
        if (sign(g.c(n)) <= 0) fail(c_pos, n);
    }
    for (std::size_t n = 0; n < N; ++n) {
        if (!(g.a(n + 1) < g.a(n))) fail(a_dec, n);
        // a/c is only defined where c > 0
        if (sign(g.c(n)) > 0 && sign(g.c(n + 1)) > 0) {
            if (!(g.a(n + 1) / g.c(n + 1) < g.a(n) / g.c(n))) fail(ratio_dec, n);
        } else {
            fail(ratio_dec, n);
        }
    }

    HypothesisReport report;
    report.checks = {a_pos, c_pos, a_dec, ratio_dec};
    report.prefix_length = N + 1;
    report.convergence_note = "convergence of a_n and a_n/c_n to 0 is not decidable from a finite prefix";
    if (g.weights().as_linear()) {
        report.convergence_note +=
            "; for linear weights it holds analytically (W_n >= beta (n+1) and c_n >= beta > 0)";
    }
    report.unchecked = {"M bounded on l2", "B bounded on l2"};
    return report;
}

}  // namespace hyponorm
