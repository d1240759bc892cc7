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

#include <doctest.h>

#include <map>
#include <set>

#include "liemap/maps.hpp"
#include "liemap/rng.hpp"
#include "oracles.hpp"

using namespace liemap;

namespace {

std::vector<AlgElement> all_elements(const ChevalleyAlgebra& alg) {
    std::vector<AlgElement> out;
    const std::uint64_t p = alg.field().modulus();
    std::uint64_t count = 1;
    for (std::size_t k = 0; k < alg.dim(); ++k) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
        Vector v;
        std::uint64_t r = n;
        for (std::size_t k = 0; k < alg.dim(); ++k, r /= p) v.push_back(alg.field().element(r % p));
        out.push_back(alg.element(std::move(v)));
    }
    return out;
}

std::string key(const AlgElement& x) {
    std::string s;
    for (const auto& c : x.coeffs) s += c.to_string() + ",";
    return s;
}

// Image of a 2-variable polynomial by direct evaluation over every pair.
std::set<std::string> slow_image(const ChevalleyAlgebra& alg, const LiePoly& p) {
    const auto elems = all_elements(alg);
    std::set<std::string> out;
    for (const auto& x : elems)
        for (const auto& y : elems) out.insert(key(evaluate(p, std::vector<AlgElement>{x, y}, alg)));
    return out;
}

}  // namespace

TEST_CASE("identity: degree < 5 polynomials are rejected with witnesses") {
    for (const char* s : {"[[X,Y],Y]", "[[[X,Y],Y],Y]", "[X,Y]", "[[X,Y],[X,Z]] + [[[X,Y],Y],Y]"}) {
        const LiePoly p = parse_poly(s);
        const auto v = is_identity_sl2(p, Field::rationals());
        CHECK(v.result == IdentityResult::NotIdentity);
        REQUIRE(v.witness);
        const auto sl2 = ChevalleyAlgebra::build(RootType::A, 1, Field::rationals());
        std::vector<AlgElement> args;
        for (const auto& w : *v.witness) args.push_back(sl2.element(w.coeffs));
        CHECK_FALSE(evaluate(p, args, sl2).is_zero());
    }
}

TEST_CASE("identity: named identities and a degree-5 non-identity") {
    const Field q = Field::rationals();
    CHECK(is_identity_sl2(parse_poly("[[[Y,Z],[T,X]],X] + [[[Y,X],[Z,X]],T]"), q).result == IdentityResult::Identity);
    CHECK(is_identity_sl2(parse_poly("[[[[Z,Y],Y],X],Y] - [[[[Z,Y],X],Y],Y]"), q).result == IdentityResult::Identity);
    const auto v = is_identity_sl2(parse_poly("[[[[Z,Y],Y],X],Y] + [[[[Z,Y],X],Y],Y]"), q);
    CHECK(v.result == IdentityResult::NotIdentity);
    CHECK(v.witness);
    CHECK(is_identity_sl2(parse_poly("[X,X]"), q).method == "zero_polynomial");
    CHECK_THROWS_AS(is_identity_sl2(parse_poly("[X,Y]"), Field::prime(2)), Error);
}

TEST_CASE("identity: randomized mode bound and verdicts") {
    IdentityOptions o;
    o.mode = IdentityMode::Randomized;
    const auto v = is_identity_sl2(parse_poly("[[[Y,Z],[T,X]],X] + [[[Y,X],[Z,X]],T]"), Field::rationals(), o);
    CHECK(v.result == IdentityResult::ProbablyIdentity);
    CHECK(v.failure_bound <= mpq_class(mpz_class(1), mpz_class(1) << 40));
    // (5 / 2^20)^t <= 2^-40 first holds at t = 3.
    CHECK(v.trials == 3);
    const auto w = is_identity_sl2(parse_poly("[[[[Z,Y],Y],X],Y] + [[[[Z,Y],X],Y],Y]"), Field::rationals(), o);
    CHECK(w.result == IdentityResult::NotIdentity);
}

TEST_CASE("roots of f") {
    const Field q = Field::rationals();
    // f = -t + t^2 = t (t - 1)
    auto r = roots_in_field({0, -1, 1}, q);
    CHECK(r.size() == 2);
    // 6t^2 - 5t + 1 = (2t - 1)(3t - 1)
    r = roots_in_field({1, -5, 6}, q);
    std::set<std::string> names;
    for (const auto& x : r) names.insert(x.to_string());
    CHECK(names == std::set<std::string>{"1/2", "1/3"});
    // t^2 + 1 over F5 has roots 2, 3; over F7 none.
    CHECK(roots_in_field({1, 0, 1}, Field::prime(5)).size() == 2);
    CHECK(roots_in_field({1, 0, 1}, Field::prime(7)).empty());
}

TEST_CASE("Engel solver certificates") {
    for (auto [t, r, fs] : {std::tuple{RootType::A, 2, "F5"}, {RootType::B, 2, "Q"}, {RootType::G, 2, "F13"}, {RootType::A, 3, "Q"}}) {
        const auto alg = ChevalleyAlgebra::build(t, r, Field::parse(fs));
        Rng rng(99);
        for (int m = 1; m <= 3; ++m) {
            std::vector<mpq_class> a(static_cast<std::size_t>(m), 0);
            a.back() = 1;
            const auto [poly, spec] = make_engel(a);
            for (int trial = 0; trial < 10; ++trial) {
                Vector v;
                for (std::size_t k = 0; k < alg.dim(); ++k)
                    v.push_back(alg.field().is_finite() ? alg.field().element(rng.below(alg.field().modulus()))
                                                        : alg.field().from_int(rng.between(-4, 4)));
                const AlgElement target = alg.element(std::move(v));
                if (alg.is_central(target) && !target.is_zero()) continue;
                const auto sol = engel_solve(alg, spec, target);
                CHECK(evaluate(poly, std::vector<AlgElement>{sol.x, sol.y}, alg) == target);
                CHECK(sol.certificate == element_hash(target));
            }
        }
    }
}

TEST_CASE("Engel solver rejections") {
    const auto sl3 = ChevalleyAlgebra::build(RootType::A, 2, Field::prime(3));
    const auto spec = make_engel({0, 1}).second;
    CHECK_THROWS_AS(engel_solve(sl3, spec, sl3.center()[0]), Error);
    const auto sl3q = ChevalleyAlgebra::build(RootType::A, 2, Field::prime(5));
    CHECK_THROWS_AS(engel_solve(sl3q, make_engel({5}).second, sl3q.basis(3)), Error);
    const auto zero = engel_solve(sl3q, spec, sl3q.zero());
    CHECK(zero.value.is_zero());
}

TEST_CASE("image scan agrees with direct evaluation on sl(2, F3)") {
    const auto sl2 = ChevalleyAlgebra::build(RootType::A, 1, Field::prime(3));
    for (const char* s : {"[[X,Y],Y]", "[[[X,Y],X],[[X,Y],Y]]", "[X,Y] + 2*[[X,Y],Y]"}) {
        const LiePoly p = parse_poly(s);
        const auto want = slow_image(sl2, p);
        const ImageReport rep = image_scan(sl2, p);
        CHECK(rep.attained == want.size());
        for (std::uint64_t e = 0; e < rep.codomain_size; ++e) {
            CHECK(rep.attained_element(e) == (want.count(key(element_at(sl2, e))) == 1));
            if (!rep.attained_element(e)) continue;
            const auto pre = preimage_of(rep, sl2, e);
            const auto value = evaluate(p, std::vector<AlgElement>{element_at(sl2, pre[0]), element_at(sl2, pre[1])}, sl2);
            CHECK(element_index(value) == e);
        }
    }
}

TEST_CASE("scan results do not depend on the worker count") {
    const auto sl2 = ChevalleyAlgebra::build(RootType::A, 1, Field::prime(5));
    const LiePoly p = parse_poly("[[X,Y],Y]");
    ScanOptions one, many;
    many.workers = 7;
    CHECK(image_scan(sl2, p, one).preimage_key == image_scan(sl2, p, many).preimage_key);
    ScanOptions s1, s2;
    s1.mode = s2.mode = ScanMode::Sampled;
    s1.samples = s2.samples = 2000;
    s2.workers = 3;
    const auto a = image_scan(sl2, p, s1), b = image_scan(sl2, p, s2);
    CHECK(a.preimage_key == b.preimage_key);
    for (std::uint64_t e = 0; e < a.codomain_size; ++e)
        if (a.attained_element(e)) {
            const auto pre = preimage_of(a, sl2, e);
            CHECK(element_index(evaluate(p, std::vector<AlgElement>{element_at(sl2, pre[0]), element_at(sl2, pre[1])}, sl2)) == e);
        }
    ScanOptions tight;
    tight.budget = 100;
    CHECK_THROWS_AS(image_scan(sl2, p, tight), Error);
}

TEST_CASE("scan reports central values on sl(3, F3)") {
    const auto sl3 = ChevalleyAlgebra::build(RootType::A, 2, Field::prime(3));
    ScanOptions o;
    o.mode = ScanMode::Sampled;
    o.samples = 20000;
    const auto rep = image_scan(sl3, engel_word(1), o);
    CHECK(rep.central_nonzero_total == 2);
    for (const auto& h : rep.central_hits) {
        const auto v = evaluate(engel_word(1), std::vector<AlgElement>{element_at(sl3, h.preimage[0]), element_at(sl3, h.preimage[1])}, sl3);
        CHECK(element_index(v) == h.element);
        CHECK(sl3.is_central(v));
    }
}

TEST_CASE("Engel solvability matches the exhaustive scan on sl(2, F3)") {
    const auto sl2 = ChevalleyAlgebra::build(RootType::A, 1, Field::prime(3));
    const auto [poly, spec] = make_engel({0, 1});
    const auto rep = image_scan(sl2, poly);
    for (std::uint64_t e = 0; e < rep.codomain_size; ++e) {
        const AlgElement target = element_at(sl2, e);
        bool solved = false;
        try {
            solved = engel_solve(sl2, spec, target).value == target;
        } catch (const Error&) {
        }
        if (solved) CHECK(rep.attained_element(e));
        if (!sl2.is_central(target)) CHECK(solved);
    }
}

TEST_CASE("central probe: hits re-evaluate and m0 agrees with an image-rank oracle") {
    const auto sl3 = ChevalleyAlgebra::build(RootType::A, 2, Field::prime(3));
    ScanOptions o;
    o.workers = 4;
    const ProbeReport rep = central_image_probe(sl3, 1, 4, o);
    for (const auto& row : rep.rows)
        for (const auto& h : row.hits) {
            const auto v = evaluate(engel_word(row.m), std::vector<AlgElement>{element_at(sl3, h.preimage[0]), element_at(sl3, h.preimage[1])}, sl3);
            CHECK(element_index(v) == h.element);
        }
    // Oracle on 3x3 matrices: E_m(X, Y) = (-ad Y)^m X, so a nonzero central value exists iff the
    // identity matrix lies in the image of (ad Y)^m for some Y. The images shrink with m.
    const long long p = 3;
    std::vector<oracle::Mat> basis;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j) {
                oracle::Mat m = oracle::zeros(3, 3);
                m[i][j] = 1;
                basis.push_back(m);
            }
    for (std::size_t i = 0; i < 2; ++i) {
        oracle::Mat m = oracle::zeros(3, 3);
        m[i][i] = 1;
        m[i + 1][i + 1] = p - 1;
        basis.push_back(m);
    }
    auto coords = [&](const oracle::Mat& m) {
        std::vector<long long> c;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (i != j) c.push_back(m[i][j]);
        c.push_back(m[0][0]);
        c.push_back(oracle::mod(m[0][0] + m[1][1], p));
        return c;
    };
    const auto ident = coords({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    std::map<int, bool> oracle_hit;
    std::uint64_t total = 1;
    for (int k = 0; k < 8; ++k) total *= 3;
    for (std::uint64_t n = 0; n < total; ++n) {
        oracle::Mat y = oracle::zeros(3, 3);
        std::uint64_t r = n;
        for (const auto& b : basis) {
            const long long c = static_cast<long long>(r % 3);
            r /= 3;
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) y[i][j] = oracle::mod(y[i][j] + c * b[i][j], p);
        }
        oracle::Mat ad = oracle::zeros(8, 8);
        for (std::size_t k = 0; k < 8; ++k) {
            const auto col = coords(oracle::commutator(y, basis[k], p));
            for (std::size_t i = 0; i < 8; ++i) ad[i][k] = col[i];
        }
        oracle::Mat power = ad;
        for (int m = 1; m <= 4; ++m) {
            oracle::Mat aug = power;
            for (std::size_t i = 0; i < 8; ++i) aug[i].push_back(ident[i]);
            if (oracle::rank_mod(aug, p) == oracle::rank_mod(power, p)) oracle_hit[m] = true;
            power = oracle::mul(power, ad, p);
        }
    }
    for (const auto& row : rep.rows) CHECK((!row.hits.empty()) == oracle_hit[row.m]);
    REQUIRE(rep.m0);
    CHECK(*rep.m0 == 3);
    CHECK_THROWS_AS(central_image_probe(ChevalleyAlgebra::build(RootType::A, 1, Field::prime(5)), 1, 3), Error);
    CHECK(central_image_probe(sl3, 5, 4).rows.empty());
}

TEST_CASE("example48 closed forms") {
    const auto sl2 = ChevalleyAlgebra::build(RootType::A, 1, Field::rationals());
    const Field& q = sl2.field();
    auto s = [&](long long v) { return q.from_int(v); };
    CHECK(example48_closed_form(sl2, s(1), s(0), s(0), s(1)).is_zero());
    CHECK(example48_closed_form(sl2, s(3), s(2), s(0), s(0)).is_zero());
    const AlgElement printed = example48_closed_form(sl2, s(1), s(1), s(1), s(1));
    CHECK(printed.coeffs == Vector{s(12), s(24), s(24)});
    const LiePoly p = parse_poly(example48_polynomial());
    Rng rng(48);
    for (int trial = 0; trial < 100; ++trial) {
        const Scalar a = s(rng.between(-9, 9)), b = s(rng.between(-9, 9)), c = s(rng.between(-9, 9)), d = s(rng.between(-9, 9));
        const AlgElement x = sl2.add(sl2.scale(a, sl2.basis(1)), sl2.scale(b, sl2.basis(2)));
        const AlgElement y = sl2.add(sl2.scale(c, sl2.basis(2)), sl2.scale(d, sl2.basis(0)));
        CHECK(evaluate(p, std::vector<AlgElement>{x, y}, sl2) == example48_closed_form_corrected(sl2, a, b, c, d));
    }
    CHECK(example48_closed_form_corrected(sl2, s(1), s(1), s(1), s(1)).coeffs == Vector{s(12), s(-24), s(24)});
    const auto f2 = ChevalleyAlgebra::build(RootType::A, 1, Field::prime(3));
    CHECK_NOTHROW(example48_closed_form(f2, f2.field().one(), f2.field().one(), f2.field().one(), f2.field().one()));
}

TEST_CASE("example48 invariance under shears") {
    const auto sl2 = ChevalleyAlgebra::build(RootType::A, 1, Field::prime(7));
    const LiePoly p = parse_poly(example48_polynomial());
    Rng rng(7);
    auto rnd = [&] {
        Vector v;
        for (int k = 0; k < 3; ++k) v.push_back(sl2.field().element(rng.below(7)));
        return sl2.element(std::move(v));
    };
    for (int trial = 0; trial < 100; ++trial) {
        const AlgElement x = rnd(), y = rnd();
        const Scalar m = sl2.field().element(rng.below(7));
        const AlgElement base = evaluate(p, std::vector<AlgElement>{x, y}, sl2);
        CHECK(evaluate(p, std::vector<AlgElement>{sl2.add(x, sl2.scale(m, y)), y}, sl2) == base);
        CHECK(evaluate(p, std::vector<AlgElement>{x, sl2.add(y, sl2.scale(m, x))}, sl2) == base);
    }
}

TEST_CASE("dominance witness checks") {
    const Field q = Field::rationals();
    const MatrixLieAlgebra sl3(Realization::sl(3), q);
    const LiePoly x = parse_poly("X");
    // diag(1, -1, 0) and diag(1, 1, -2): theta = (-1 : 0) and (-27 : 4)
    const auto a = sl3.from_coords({0, 0, 0, 0, 0, 0, 1, 0}), b = sl3.from_coords({0, 0, 0, 0, 0, 0, 1, 2});
    CHECK(dominance_witness_check(x, {a}, {sl3.scale(q.from_int(5), a)}).result == DominanceResult::NotSeparated);
    CHECK(dominance_witness_check(x, {a}, {b}).result == DominanceResult::Confirmed);
    const auto z = dominance_witness_check(x, {sl3.zero()}, {b});
    CHECK(z.result == DominanceResult::Undefined);
    CHECK(z.d1_zero);
    const LiePoly p = parse_poly("[X,Y]");
    WitnessSearchOptions o;
    o.budget = 200;
    const auto found = dominance_witness_search(p, Realization::sl(3), q, o);
    REQUIRE(found.found);
    CHECK(dominance_witness_check(p, found.first, found.second).result == DominanceResult::Confirmed);
}

TEST_CASE("Engel solvability matches the exhaustive scan on sl(3, F3)") {
    const auto sl3 = ChevalleyAlgebra::build(RootType::A, 2, Field::prime(3));
    const auto [poly, spec] = make_engel({0, 1});
    ScanOptions o;
    o.workers = 4;
    const auto rep = image_scan(sl3, poly, o);
    const Scalar avoid[] = {sl3.field().zero()};
    REQUIRE(regular_size_bound_met(sl3, avoid));
    std::size_t solved = 0;
    for (std::uint64_t e = 0; e < rep.codomain_size; ++e) {
        const AlgElement target = element_at(sl3, e);
        if (sl3.is_central(target) && !target.is_zero()) {
            CHECK_THROWS_AS(engel_solve(sl3, spec, target), Error);
            continue;
        }
        const auto sol = engel_solve(sl3, spec, target);
        CHECK(sol.value == target);
        CHECK(rep.attained_element(e));
        ++solved;
    }
    CHECK(solved == rep.noncentral_total + 1);
    CHECK(rep.contains_all_noncentral);
}
