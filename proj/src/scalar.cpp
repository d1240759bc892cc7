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

#include "liemap/scalar.hpp"

#include <cctype>
#include <functional>

namespace liemap {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "invalid_argument";
        case ErrorCode::ParseError: return "parse_error";
        case ErrorCode::NotPrime: return "not_prime";
        case ErrorCode::DivisionByZero: return "division_by_zero";
        case ErrorCode::FieldMismatch: return "field_mismatch";
        case ErrorCode::ShapeMismatch: return "shape_mismatch";
        case ErrorCode::Unsupported: return "unsupported";
        case ErrorCode::CharacteristicRejected: return "characteristic_rejected";
        case ErrorCode::FieldTooSmall: return "field_too_small";
        case ErrorCode::CentralElement: return "central_element";
        case ErrorCode::ZeroPolynomial: return "zero_polynomial";
        case ErrorCode::BudgetExceeded: return "budget_exceeded";
        case ErrorCode::NotFound: return "not_found";
        case ErrorCode::InternalFailure: return "internal_failure";
    }
    return "unknown";
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p >= (1ULL << 31))
        throw Error(ErrorCode::Unsupported, "modulus " + std::to_string(p) + " exceeds 2^31");
    if (!is_prime(p))
        throw Error(ErrorCode::NotPrime, "modulus " + std::to_string(p) + " is not prime");
    return Field(Kind::PrimeField, p);
}

Field Field::parse(std::string_view spec) {
    while (!spec.empty() && std::isspace(static_cast<unsigned char>(spec.front()))) spec.remove_prefix(1);
    while (!spec.empty() && std::isspace(static_cast<unsigned char>(spec.back()))) spec.remove_suffix(1);
    if (spec == "Q") return rationals();
    std::string_view digits;
    if (spec.starts_with("Fp:"))
        digits = spec.substr(3);
    else if (spec.starts_with("F"))
        digits = spec.substr(1);
    else
        throw Error(ErrorCode::ParseError, "unrecognized field spec '" + std::string(spec) + "'");
    if (digits.empty() || digits.size() > 12)
        throw Error(ErrorCode::ParseError, "unrecognized field spec '" + std::string(spec) + "'");
    std::uint64_t p = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw Error(ErrorCode::ParseError, "unrecognized field spec '" + std::string(spec) + "'");
        p = p * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return prime(p);
}

std::string Field::name() const {
    if (is_rationals()) return "Q";
    return "F" + std::to_string(modulus_);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long value) const {
    if (is_rationals()) return Scalar(mpq_class(mpz_class(static_cast<long>(value))));
    long long m = static_cast<long long>(modulus_);
    long long r = value % m;
    if (r < 0) r += m;
    return Scalar::residue(static_cast<std::uint64_t>(r), modulus_);
}

Scalar Field::from_integer(const mpz_class& value) const {
    if (is_rationals()) return Scalar(mpq_class(value));
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(modulus_));
    return Scalar::residue(r.get_ui(), modulus_);
}

Scalar Field::from_rational(const mpq_class& value) const {
    if (is_rationals()) return Scalar(value);
    Scalar num = from_integer(value.get_num());
    Scalar den = from_integer(value.get_den());
    if (den.is_zero())
        throw Error(ErrorCode::DivisionByZero,
                    "denominator of " + value.get_str() + " vanishes in " + name());
    return num / den;
}

Scalar Field::parse_scalar(std::string_view text) const {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
    s = s.substr(start);
    mpq_class q;
    bool ok = !s.empty();
    for (std::size_t i = 0; ok && i < s.size(); ++i) {
        char c = s[i];
        ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' || (c == '-' && i == 0) ||
             (c == '+' && i == 0);
    }
    if (ok && s[0] == '+') s = s.substr(1);
    if (ok && (s.find('/') != s.rfind('/') || s.back() == '/' || s.front() == '/')) ok = false;
    if (ok && q.set_str(s, 10) != 0) ok = false;
    if (!ok) throw Error(ErrorCode::ParseError, "malformed scalar '" + std::string(text) + "'");
    if (q.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
    q.canonicalize();
    return from_rational(q);
}

Scalar Field::element(std::uint64_t index) const {
    if (is_rationals()) return Scalar(mpq_class(mpz_class(static_cast<unsigned long>(index))));
    return Scalar::residue(index % modulus_, modulus_);
}

Field Scalar::field() const {
    if (is_rational()) return Field::rationals();
    return Field(Field::Kind::PrimeField, std::get<Residue>(value_).modulus);
}

bool Scalar::is_zero() const noexcept {
    if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
    return std::get<Residue>(value_).value == 0;
}

bool Scalar::is_one() const noexcept {
    if (auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
    return std::get<Residue>(value_).value == 1;
}

const mpq_class& Scalar::rational() const {
    if (!is_rational()) throw Error(ErrorCode::FieldMismatch, "scalar is not rational");
    return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue_value() const {
    if (is_rational()) throw Error(ErrorCode::FieldMismatch, "scalar is not a residue");
    return std::get<Residue>(value_).value;
}

void Scalar::check_same_field(const Scalar& other) const {
    if (value_.index() != other.value_.index() ||
        (!is_rational() &&
         std::get<Residue>(value_).modulus != std::get<Residue>(other.value_).modulus))
        throw Error(ErrorCode::FieldMismatch,
                    "arithmetic between " + field().name() + " and " + other.field().name());
}

Scalar& Scalar::operator+=(const Scalar& other) {
    check_same_field(other);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        *q += std::get<mpq_class>(other.value_);
    } else {
        auto& r = std::get<Residue>(value_);
        std::uint64_t v = std::uint64_t{r.value} + std::get<Residue>(other.value_).value;
        if (v >= r.modulus) v -= r.modulus;
        r.value = static_cast<std::uint32_t>(v);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
    check_same_field(other);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        *q -= std::get<mpq_class>(other.value_);
    } else {
        auto& r = std::get<Residue>(value_);
        std::uint64_t v = std::uint64_t{r.value} + r.modulus - std::get<Residue>(other.value_).value;
        if (v >= r.modulus) v -= r.modulus;
        r.value = static_cast<std::uint32_t>(v);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
    check_same_field(other);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        *q *= std::get<mpq_class>(other.value_);
    } else {
        auto& r = std::get<Residue>(value_);
        r.value = static_cast<std::uint32_t>(
            (std::uint64_t{r.value} * std::get<Residue>(other.value_).value) % r.modulus);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= invert(other); }

Scalar Scalar::operator-() const {
    if (auto* q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(-*q));
    const auto& r = std::get<Residue>(value_);
    return Scalar(Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus});
}

bool operator==(const Scalar& a, const Scalar& b) {
    a.check_same_field(b);
    if (a.is_rational()) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
    return std::get<Scalar::Residue>(a.value_).value == std::get<Scalar::Residue>(b.value_).value;
}

std::string Scalar::to_string() const {
    if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
    return std::to_string(std::get<Residue>(value_).value);
}

std::size_t Scalar::hash() const noexcept {
    if (auto* q = std::get_if<mpq_class>(&value_)) return std::hash<std::string>{}(q->get_str());
    return std::hash<std::uint64_t>{}(std::get<Residue>(value_).value);
}

Scalar invert(const Scalar& x) {
    if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    if (x.is_rational()) return Scalar(mpq_class(1) / x.rational());
    // Fermat: x^(p-2).
    std::uint64_t p = x.field().modulus();
    return pow(x, static_cast<unsigned>(p - 2));
}

Scalar pow(Scalar base, unsigned exponent) {
    Scalar result = base.field().one();
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, field.zero()); }

bool is_zero(const Vector& v) noexcept {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

}  // namespace liemap
