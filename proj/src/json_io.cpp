/* Copyright 2026 The liemap Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "liemap/json_io.hpp"

namespace liemap {

namespace {

Json vector_json(const std::vector<Scalar>& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(scalar_json(s));
    return out;
}

Json invariants_json(const std::optional<InvariantPair>& inv) {
    if (!inv) return nullptr;
    return Json{{"f1", scalar_json(inv->f1)},
                {"f2", scalar_json(inv->f2)},
                {"deg_f1", inv->deg_f1},
                {"deg_f2", inv->deg_f2},
                {"theta", Json::array({scalar_json(inv->theta_num()), scalar_json(inv->theta_den())})}};
}

Json hit_json(const CentralHit& h) {
    return Json{{"element", h.element}, {"preimage", h.preimage}};
}

}  // namespace

Json scalar_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j, const Field& field) {
    if (j.is_number_integer()) return field.from_int(j.get<long long>());
    if (j.is_string()) return field.parse_scalar(j.get<std::string>());
    throw Error(ErrorCode::ParseError, "scalar must be an integer or a string, got " + j.dump());
}

Json element_json(const ChevalleyAlgebra& alg, const AlgElement& x) {
    alg.require_member(x);
    return Json{{"basis", "chevalley"}, {"algebra", alg.label()}, {"coeffs", vector_json(x.coeffs)}};
}

AlgElement element_from_json(const ChevalleyAlgebra& alg, const Json& j) {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "element must be a JSON object");
    const std::string basis = j.value("basis", "chevalley");
    if (basis == "matrix") {
        ChevalleyRealization real(alg);
        return real.from_matrix(matrix_from_json(j, alg.field(), &real.realization()).value);
    }
    if (basis != "chevalley") throw Error(ErrorCode::ParseError, "unknown basis '" + basis + "'");
    const Json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != alg.dim())
        throw Error(ErrorCode::ShapeMismatch,
                    "expected " + std::to_string(alg.dim()) + " coefficients for " + alg.label());
    Vector v;
    for (const auto& c : coeffs) v.push_back(scalar_from_json(c, alg.field()));
    return alg.element(std::move(v));
}

Json matrix_json(const MatrixElement& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.value.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.value.cols(); ++c) row.push_back(scalar_json(m.value(r, c)));
        rows.push_back(std::move(row));
    }
    return Json{{"basis", "matrix"}, {"realization", m.realization.name()}, {"rows", std::move(rows)}};
}

MatrixElement matrix_from_json(const Json& j, const Field& field, const Realization* expected) {
    const Json& rows = j.at("rows");
    if (!rows.is_array() || rows.empty()) throw Error(ErrorCode::ShapeMismatch, "rows must be a nonempty array");
    const std::size_t n = rows.size();
    Matrix m(field, n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!rows[r].is_array() || rows[r].size() != n) throw Error(ErrorCode::ShapeMismatch, "matrix must be square");
        for (std::size_t c = 0; c < n; ++c) m(r, c) = scalar_from_json(rows[r][c], field);
    }
    Realization real = expected ? *expected : Realization::sl(n);
    if (j.contains("realization")) real = Realization::parse(j.at("realization").get<std::string>());
    if (expected && !(real == *expected))
        throw Error(ErrorCode::ShapeMismatch, "expected realization " + expected->name() + ", got " + real.name());
    return make_matrix_element(real, std::move(m));
}

Json root_system_json(const RootSystem& rs) {
    Json roots = Json::array();
    for (std::size_t k = 0; k < rs.roots().size(); ++k) {
        const Root& r = rs.roots()[k];
        roots.push_back(Json{{"index", k}, {"coords", r.coords}, {"height", r.height()}, {"long", rs.is_long(r)}});
    }
    return Json{{"type", rs.label()},
                {"rank", rs.rank()},
                {"num_positive", rs.num_positive()},
                {"cartan", rs.cartan_matrix()},
                {"roots", std::move(roots)}};
}

Json algebra_json(const ChevalleyAlgebra& alg, bool with_structure) {
    Json basis = Json::array();
    for (std::size_t k = 0; k < alg.dim(); ++k) basis.push_back(alg.basis_label(k));
    Json out{{"algebra", alg.label()},
             {"type", alg.root_system().label()},
             {"field", alg.field().name()},
             {"dim", alg.dim()},
             {"basis", std::move(basis)},
             {"antisymmetry_violations", antisymmetry_violations(alg)},
             {"jacobi_violations", jacobi_violations(alg)}};
    if (with_structure) {
        Json table = Json::array();
        for (std::size_t i = 0; i < alg.dim(); ++i)
            for (std::size_t j = i + 1; j < alg.dim(); ++j) {
                const auto& terms = alg.structure(i, j);
                if (terms.empty()) continue;
                Json t = Json::array();
                for (const auto& s : terms) t.push_back(Json{{"index", s.index}, {"coeff", s.coeff}});
                table.push_back(Json{{"i", i}, {"j", j}, {"terms", std::move(t)}});
            }
        out["structure"] = std::move(table);
    }
    return out;
}

Json identity_json(const IdentityVerdict& v, const LiePoly& p, const Field& field) {
    Json out{{"polynomial", p.to_string()},
             {"field", field.name()},
             {"result", identity_result_name(v.result)},
             {"mode", v.mode},
             {"method", v.method},
             {"degree", v.degree},
             {"min_degree", v.min_degree}};
    if (v.mode == "randomized") {
        out["trials"] = v.trials;
        out["grid"] = v.grid;
        out["failure_bound"] = v.failure_bound.get_str();
    } else {
        out["symbolic_terms"] = v.symbolic_terms;
    }
    if (v.witness) {
        Json w = Json::array();
        for (const auto& x : *v.witness) w.push_back(vector_json(x.coeffs));
        out["witness"] = Json{{"basis", "chevalley"}, {"algebra", "A1/" + field.name()}, {"assignment", std::move(w)}};
        out["witness_value"] = vector_json(v.witness_value->coeffs);
    }
    return out;
}

Json dominance_json(const DominanceReport& r) {
    return Json{{"result", dominance_result_name(r.result)},
                {"d1", matrix_json(r.d1)},
                {"d2", matrix_json(r.d2)},
                {"d1_zero", r.d1_zero},
                {"d2_zero", r.d2_zero},
                {"inv1", invariants_json(r.inv1)},
                {"inv2", invariants_json(r.inv2)}};
}

Json witness_search_json(const WitnessSearchResult& r, std::uint64_t seed, std::uint64_t budget) {
    Json out{{"found", r.found}, {"attempts", r.attempts}, {"seed", seed}, {"budget", budget}};
    if (r.found) {
        Json first = Json::array(), second = Json::array();
        for (const auto& m : r.first) first.push_back(matrix_json(m));
        for (const auto& m : r.second) second.push_back(matrix_json(m));
        out["first"] = std::move(first);
        out["second"] = std::move(second);
        out["report"] = dominance_json(*r.report);
    }
    return out;
}

Json engel_json(const ChevalleyAlgebra& alg, const EngelSpec& spec, const AlgElement& target, const EngelSolution& s,
                std::uint64_t seed) {
    Json coeffs = Json::array();
    for (const auto& a : spec.a) coeffs.push_back(a.get_str());
    Json factors = Json::array();
    for (const auto& f : s.trace.conjugator) factors.push_back(Json{{"root", f.root}, {"t", scalar_json(f.t)}});
    return Json{{"algebra", alg.label()},
                {"engel_coeffs", std::move(coeffs)},
                {"target", element_json(alg, target)},
                {"x", element_json(alg, s.x)},
                {"y", element_json(alg, s.y)},
                {"value", element_json(alg, s.value)},
                {"certificate", s.certificate},
                {"seed", seed},
                {"trace",
                 Json{{"avoid", vector_json(s.trace.avoid)},
                      {"h", vector_json(s.trace.h.coeffs)},
                      {"size_bound_met", s.trace.size_bound_met},
                      {"gauss_method", s.trace.gauss_method},
                      {"conjugator", std::move(factors)},
                      {"u", vector_json(s.trace.u.coeffs)}}}};
}

Json scan_json(const ChevalleyAlgebra& alg, const ImageReport& r) {
    Json hits = Json::array();
    for (const auto& h : r.central_hits) hits.push_back(hit_json(h));
    Json missed = Json::array();
    for (auto e : r.missed) missed.push_back(Json{{"index", e}, {"coeffs", vector_json(element_at(alg, e).coeffs)}});
    return Json{{"algebra", r.algebra},
                {"polynomial", r.polynomial},
                {"field", r.field},
                {"mode", r.mode == ScanMode::Exhaustive ? "exhaustive" : "sampled"},
                {"seed", r.seed},
                {"evaluated", r.evaluated},
                {"domain_size", r.domain_size},
                {"codomain_size", r.codomain_size},
                {"attained", r.attained},
                {"zero_attained", r.zero_attained},
                {"central_nonzero_total", r.central_nonzero_total},
                {"central_nonzero_attained", r.central_nonzero_attained},
                {"noncentral_total", r.noncentral_total},
                {"noncentral_attained", r.noncentral_attained},
                {"contains_all_noncentral", r.contains_all_noncentral},
                {"central_hits", std::move(hits)},
                {"missed", std::move(missed)}};
}

Json probe_json(const ProbeReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json hits = Json::array();
        for (const auto& h : row.hits) hits.push_back(hit_json(h));
        rows.push_back(Json{{"m", row.m}, {"hit_count", row.hits.size()}, {"hits", std::move(hits)}});
    }
    return Json{{"algebra", r.algebra},
                {"m_from", r.m_from},
                {"m_to", r.m_to},
                {"evaluated_pairs", r.evaluated_pairs},
                {"center_elements", r.center_elements},
                {"rows", std::move(rows)},
                {"m0", r.m0 ? Json(*r.m0) : Json(nullptr)}};
}

Json error_json(const Error& e) {
    return Json{{"error", Json{{"code", error_code_name(e.code())}, {"message", e.what()}}}};
}

}  // namespace liemap
