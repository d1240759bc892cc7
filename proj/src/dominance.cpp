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

#include "liemap/maps.hpp"
#include "liemap/rng.hpp"

namespace liemap {

const char* dominance_result_name(DominanceResult r) noexcept {
    switch (r) {
        case DominanceResult::Confirmed: return "confirmed";
        case DominanceResult::NotSeparated: return "not_separated";
        case DominanceResult::Undefined: return "undefined";
    }
    return "?";
}

namespace {

void require_realization(const std::vector<MatrixElement>& args, const Realization& r) {
    for (const auto& a : args) {
        if (!(a.realization == r)) throw Error(ErrorCode::ShapeMismatch, "arguments mix realizations");
        make_matrix_element(r, a.value);  // validates shape
    }
}

}  // namespace

DominanceReport dominance_witness_check(const LiePoly& p, const std::vector<MatrixElement>& first,
                                        const std::vector<MatrixElement>& second) {
    if (first.empty() || second.empty()) throw Error(ErrorCode::InvalidArgument, "empty assignment");
    const Realization r = first.front().realization;
    if (r.kind == RealizationKind::SL && r.n != 3)
        throw Error(ErrorCode::Unsupported, "theta witnesses are defined for sl3 and so5");
    require_realization(first, r);
    require_realization(second, r);
    if (first.size() < static_cast<std::size_t>(p.arity()) || second.size() < static_cast<std::size_t>(p.arity()))
        throw Error(ErrorCode::ShapeMismatch, "assignment shorter than the polynomial arity");
    const MatrixLieAlgebra alg(r, first.front().value.field());
    DominanceReport rep;
    rep.d1 = evaluate(p, first, alg);
    rep.d2 = evaluate(p, second, alg);
    rep.d1_zero = rep.d1.is_zero();
    rep.d2_zero = rep.d2.is_zero();
    if (!rep.d1_zero) rep.inv1 = char_invariants(rep.d1);
    if (!rep.d2_zero) rep.inv2 = char_invariants(rep.d2);
    if (rep.d1_zero || rep.d2_zero) {
        rep.result = DominanceResult::Undefined;
        return rep;
    }
    switch (theta_compare(*rep.inv1, *rep.inv2)) {
        case Separation::Separated: rep.result = DominanceResult::Confirmed; break;
        case Separation::Equal: rep.result = DominanceResult::NotSeparated; break;
        case Separation::Undefined: rep.result = DominanceResult::Undefined; break;
    }
    return rep;
}

WitnessSearchResult dominance_witness_search(const LiePoly& p, const Realization& r, const Field& field,
                                             const WitnessSearchOptions& options) {
    if (r.kind == RealizationKind::SL && r.n != 3)
        throw Error(ErrorCode::Unsupported, "theta witnesses are defined for sl3 and so5");
    const MatrixLieAlgebra alg(r, field);
    const std::size_t arity = static_cast<std::size_t>(std::max(p.arity(), 1));
    Rng rng(options.seed);
    WitnessSearchResult out;
    std::optional<std::vector<MatrixElement>> anchor;
    std::optional<InvariantPair> anchor_inv;
    for (std::uint64_t k = 0; k < options.budget; ++k) {
        // Entries in [-10, 10] for the first half of the budget, [-100, 100] afterwards.
        const long long range = k < options.budget / 2 ? 10 : 100;
        std::vector<MatrixElement> args;
        for (std::size_t v = 0; v < arity; ++v) {
            std::vector<long long> coords(r.dim());
            for (auto& c : coords) c = rng.between(-range, range);
            args.push_back(alg.from_coords(coords));
        }
        out.attempts = k + 1;
        MatrixElement value = evaluate(p, args, alg);
        if (value.is_zero()) continue;
        InvariantPair inv = char_invariants(value);
        if (inv.theta_num().is_zero() && inv.theta_den().is_zero()) continue;
        if (!anchor) {
            anchor = std::move(args);
            anchor_inv = inv;
            continue;
        }
        if (theta_compare(*anchor_inv, inv) == Separation::Separated) {
            out.found = true;
            out.first = *anchor;
            out.second = std::move(args);
            out.report = dominance_witness_check(p, out.first, out.second);
            if (out.report->result != DominanceResult::Confirmed)
                throw Error(ErrorCode::InternalFailure, "search witness failed its own check");
            return out;
        }
    }
    return out;
}

}  // namespace liemap
