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

#include <cstdio>
#include <set>

#include "liemap/maps.hpp"

namespace liemap {

namespace {

Scalar horner(const std::vector<Scalar>& poly, const Scalar& t) {
    Scalar acc = t.field().zero();
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    return out;
}

}  // namespace

std::vector<Scalar> roots_in_field(const std::vector<mpq_class>& poly, const Field& field) {
    std::vector<Scalar> coeffs;
    for (const auto& c : poly) coeffs.push_back(field.from_rational(c));
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    if (coeffs.empty()) throw Error(ErrorCode::ZeroPolynomial, "every element is a root of the zero polynomial");
    std::vector<Scalar> roots;
    if (field.is_finite()) {
        for (std::uint64_t k = 0; k < field.modulus(); ++k) {
            Scalar t = field.element(k);
            if (horner(coeffs, t).is_zero()) roots.push_back(t);
        }
        return roots;
    }
    // Integer-scale, split off the power of t, then test p/q with p | a_low and q | a_high.
    mpz_class scale = 1;
    for (const auto& c : poly) scale = lcm(scale, c.get_den());
    std::vector<mpz_class> ints;
    for (const auto& c : poly) ints.push_back(mpz_class(c * scale));
    while (!ints.empty() && ints.back() == 0) ints.pop_back();
    std::size_t low = 0;
    while (ints[low] == 0) ++low;
    if (low > 0) roots.push_back(field.zero());
    if (low + 1 < ints.size()) {
        std::set<mpq_class> seen;
        for (const auto& p : divisors(ints[low]))
            for (const auto& q : divisors(ints.back()))
                for (int sign : {1, -1}) {
                    mpq_class cand(sign * p, q);
                    cand.canonicalize();
                    if (!seen.insert(cand).second) continue;
                    Scalar t = field.from_rational(cand);
                    if (horner(coeffs, t).is_zero()) roots.push_back(t);
                }
    }
    return roots;
}

std::string element_hash(const AlgElement& x) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        h ^= 0xff;
        h *= 0x100000001b3ULL;
    };
    for (const auto& c : x.coeffs) feed(c.to_string());
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

EngelSolution engel_solve(const ChevalleyAlgebra& alg, const EngelSpec& spec, const AlgElement& target,
                          const GaussOptions& options) {
    alg.require_member(target);
    const Field& field = alg.field();
    if (in_exceptional_list(alg.root_system(), field))
        throw Error(ErrorCode::CharacteristicRejected, alg.label() + " is in the exceptional list");
    if (spec.a.empty() || field.from_rational(spec.a.back()).is_zero())
        throw Error(ErrorCode::InvalidArgument, "leading Engel coefficient vanishes in " + field.name());
    auto [poly, checked] = make_engel(spec.a);

    EngelSolution sol;
    sol.trace.avoid = roots_in_field(spec.f(), field);
    sol.trace.size_bound_met = regular_size_bound_met(alg, sol.trace.avoid);
    sol.trace.h = find_regular(alg, sol.trace.avoid);

    auto certify = [&](EngelSolution& s) {
        s.value = evaluate(poly, std::vector<AlgElement>{s.x, s.y}, alg);
        if (!(s.value == target)) throw Error(ErrorCode::InternalFailure, "Engel solution failed re-evaluation");
        s.certificate = element_hash(s.value);
    };

    if (target.is_zero()) {
        sol.x = alg.zero();
        sol.y = alg.zero();
        sol.trace.gauss_method = "zero_target";
        sol.trace.u = alg.zero();
        certify(sol);
        return sol;
    }
    if (alg.is_central(target))
        throw Error(ErrorCode::CentralElement, "nonzero central targets are not attempted");

    GaussResult gauss = conjugate_into_U(alg, target, options);
    sol.trace.gauss_method = gauss.method;
    sol.trace.conjugator = gauss.g.factors();
    sol.trace.u = gauss.u;

    // P(e_beta, h) = f(beta(h)) e_beta, so X = sum u_beta f(beta(h))^-1 e_beta gives P(X, h) = u.
    std::vector<Scalar> f;
    for (const auto& c : spec.f()) f.push_back(field.from_rational(c));
    AlgElement x = alg.zero();
    const std::size_t nroots = alg.root_system().roots().size();
    for (std::size_t b = 0; b < nroots; ++b) {
        const Scalar& c = gauss.u.coeffs[alg.e_index(b)];
        if (c.is_zero()) continue;
        Scalar fv = horner(f, alg.root_value(b, sol.trace.h));
        x.coeffs[alg.e_index(b)] = c / fv;
    }
    const Automorphism g_inv = gauss.g.inverse();
    sol.x = apply_automorphism(g_inv, x);
    sol.y = apply_automorphism(g_inv, sol.trace.h);
    certify(sol);
    return sol;
}

}  // namespace liemap
