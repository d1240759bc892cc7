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
// Exact field arithmetic over Q and prime fields F_p.

#ifndef LIEMAP_SCALAR_HPP
#define LIEMAP_SCALAR_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace liemap {

enum class ErrorCode {
    InvalidArgument,
    ParseError,
    NotPrime,
    DivisionByZero,
    FieldMismatch,
    ShapeMismatch,
    Unsupported,
    CharacteristicRejected,
    FieldTooSmall,
    CentralElement,
    ZeroPolynomial,
    BudgetExceeded,
    NotFound,
    InternalFailure,
};

const char* error_code_name(ErrorCode code) noexcept;

// Every library failure is reported through this exception type.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class Scalar;

/* Descriptor of the ground field: either Q or F_p for a prime p < 2^31.
 * Values are cheap to copy and compare. */
class Field {
public:
    enum class Kind { Rationals, PrimeField };

    Field() = default;  // Q

    static Field rationals() { return Field{}; }
    static Field prime(std::uint64_t p);

    // Accepts "Q", "F5", "Fp:5" (case-sensitive prefix, surrounding whitespace ignored).
    static Field parse(std::string_view spec);

    Kind kind() const noexcept { return kind_; }
    bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
    bool is_finite() const noexcept { return kind_ == Kind::PrimeField; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    std::uint64_t characteristic() const noexcept { return modulus_; }
    std::optional<std::uint64_t> size() const noexcept {
        if (is_finite()) return modulus_;
        return std::nullopt;
    }
    std::string name() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long value) const;
    Scalar from_integer(const mpz_class& value) const;
    // Denominators must be invertible in the field.
    Scalar from_rational(const mpq_class& value) const;
    // Textual encoding: "n", "-n", "n/d".
    Scalar parse_scalar(std::string_view text) const;
    // For F_p: the element with canonical residue `index`; for Q: the integer `index`.
    Scalar element(std::uint64_t index) const;

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
    }

private:
    friend class Scalar;
    Field(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    Kind kind_ = Kind::Rationals;
    std::uint64_t modulus_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

/* An exact element of Q or F_p.
 *
 * Rationals are kept in lowest terms with positive denominator (GMP canonical form);
 * residues are kept in [0, p). Arithmetic between elements of different fields throws
 * ErrorCode::FieldMismatch. */
class Scalar {
public:
    Scalar() : value_(mpq_class(0)) {}
    explicit Scalar(const mpq_class& q) : value_(q) { std::get<mpq_class>(value_).canonicalize(); }
    static Scalar residue(std::uint64_t value, std::uint64_t modulus) {
        return Scalar(Residue{static_cast<std::uint32_t>(value % modulus),
                              static_cast<std::uint32_t>(modulus)});
    }

    Field field() const;
    bool is_rational() const noexcept { return std::holds_alternative<mpq_class>(value_); }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    const mpq_class& rational() const;
    std::uint64_t residue_value() const;

    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator/=(const Scalar& other);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string to_string() const;
    std::size_t hash() const noexcept;

private:
    struct Residue {
        std::uint32_t value;
        std::uint32_t modulus;
    };
    explicit Scalar(Residue r) : value_(r) {}
    void check_same_field(const Scalar& other) const;

    std::variant<mpq_class, Residue> value_;
};

// Multiplicative inverse; throws ErrorCode::DivisionByZero on zero.
Scalar invert(const Scalar& x);
Scalar pow(Scalar base, unsigned exponent);

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& field, std::size_t n);
bool is_zero(const Vector& v) noexcept;

}  // namespace liemap

#endif  // LIEMAP_SCALAR_HPP
