#include "hyponorm/report.hpp"

#include <stdexcept>

namespace hyponorm {

namespace {

Json rational_array(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

Json optional_index(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const ExactMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ExactMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix JSON must be an array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? j.front().size() : 0;
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw std::invalid_argument("ragged matrix JSON");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = parse_rational(j[i][k].get<std::string>());
    }
    m.set_symmetric(m.check_symmetric());
    return m;
}

Json to_json(const Polynomial& p) { return rational_array(p.coefficients()); }

Polynomial polynomial_from_json(const Json& j, const std::string& variable) {
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(parse_rational(c.get<std::string>()));
    return Polynomial(std::move(coeffs), variable);
}

Json to_json(const RationalFunction& f) {
    Json out;
    out["variable"] = f.variable();
    out["numerator"] = to_json(f.numerator());
    out["denominator"] = to_json(f.denominator());
    out["text"] = f.to_string();
    return out;
}

Json to_json(const HypothesisReport& h) {
    Json out;
    out["prefix_length"] = h.prefix_length;
    out["all_passed"] = h.all_passed();
    Json checks = Json::array();
    for (const auto& c : h.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"first_violation", optional_index(c.first_violation)}});
    }
    out["checks"] = std::move(checks);
    out["convergence"] = h.convergence_note;
    out["unchecked"] = h.unchecked;
    return out;
}

Json to_json(const BoundReport& b) {
    Json out;
    out["interior_checked"] = b.interior_checked;
    Json failures = Json::array();
    for (const auto& f : b.interior_failures) {
        failures.push_back({{"n", f.n}, {"delta", to_string(f.delta)}, {"bound", to_string(f.bound)}});
    }
    out["interior_failures"] = std::move(failures);
    out["final_checked"] = b.final_checked;
    out["final_holds"] = b.final_holds;
    out["final_bound"] = to_string(b.final_bound);
    out["all_hold"] = b.all_hold();
    return out;
}

Json to_json(const CertificationReport& r, bool include_timings, bool include_deltas) {
    Json out;
    out["family"] = r.family;
    out["weights"] = r.weights;
    out["N"] = r.N;
    out["verdict"] = to_string(r.verdict);
    out["determinant"] = to_string(r.determinant);
    out["min_delta"] = to_string(r.min_delta);
    out["first_nonpositive_index"] = optional_index(r.first_nonpositive);

    Json bound_failures = Json::array();
    if (r.bounds) {
        for (const auto& f : r.bounds->interior_failures) bound_failures.push_back({{"n", f.n}, {"kind", "interior"}});
        if (r.bounds->final_checked && !r.bounds->final_holds) bound_failures.push_back({{"n", r.N}, {"kind", "final"}});
    }
    out["bound_failures"] = std::move(bound_failures);
    out["hypothesis"] = to_json(r.hypothesis);
    out["refused"] = r.refused;
    out["route"] = r.route;
    out["route_note"] = r.route_note;
    out["bounds"] = r.bounds ? to_json(*r.bounds) : Json(nullptr);
    out["cross_check"] = {{"ran", r.cross_check.ran},
                          {"all_minors_positive", r.cross_check.all_minors_positive},
                          {"determinant_matches", r.cross_check.determinant_matches},
                          {"first_nonpositive_minor", optional_index(r.cross_check.first_nonpositive_minor)}};
    out["conclusion"] = r.conclusion;
    if (include_deltas) out["deltas"] = rational_array(r.deltas);
    if (include_timings) {
        out["timings_ms"] = {{"build", r.timings.build_ms},
                             {"reduce", r.timings.reduce_ms},
                             {"minors", r.timings.minors_ms},
                             {"total", r.timings.total_ms}};
    }
    return out;
}

}  // namespace hyponorm
