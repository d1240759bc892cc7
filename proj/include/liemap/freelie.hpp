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
// Free Lie polynomials: syntax tree, parser, printer, Lyndon normal form, evaluation.
//
// Grammar (whitespace ignored):
//   poly  := ['+'|'-'] term (('+'|'-') term)*
//   term  := [coef '*'] atom
//   atom  := var | '[' poly ',' poly ']' | '(' poly ')'
//   var   := 'X' digits | 'X' | 'Y' | 'Z' | 'T'
//   coef  := digits ['/' digits]
// Aliases: X = X1, Y = X2, Z = X3, T = X4.

#ifndef LIEMAP_FREELIE_HPP
#define LIEMAP_FREELIE_HPP

#include <gmpxx.h>

#include <concepts>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liemap/scalar.hpp"

namespace liemap {

class LiePoly {
public:
    enum class Kind { Var, Bracket, Sum };

    struct Node;
    using NodePtr = std::shared_ptr<const Node>;
    struct Node {
        Kind kind = Kind::Sum;
        int var = 0;  // 1-based, Var only
        NodePtr left, right;
        std::vector<std::pair<mpq_class, NodePtr>> terms;  // Sum only
    };

    LiePoly() : root_(std::make_shared<Node>()) {}  // zero

    static LiePoly var(int index);
    static LiePoly bracket(const LiePoly& a, const LiePoly& b);
    static LiePoly sum(std::vector<std::pair<mpq_class, LiePoly>> terms);

    friend LiePoly operator+(const LiePoly& a, const LiePoly& b);
    friend LiePoly operator-(const LiePoly& a, const LiePoly& b);
    friend LiePoly operator*(const mpq_class& c, const LiePoly& a);

    const Node& root() const noexcept { return *root_; }
    // Largest variable index occurring (0 for constants-free zero).
    int arity() const;
    // Total degree of the longest monomial in the tree (not normalized).
    int tree_degree() const;
    std::string to_string() const;

private:
    explicit LiePoly(NodePtr root) : root_(std::move(root)) {}
    NodePtr root_;
};

// Throws ParseError with the byte offset of the failure in the message and in offset().
class ParseFailure : public Error {
public:
    ParseFailure(std::size_t offset, const std::string& what)
        : Error(ErrorCode::ParseError, what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

LiePoly parse_poly(std::string_view text);

// Words over letters 1..d; Lyndon form maps Lyndon words to coefficients.
using Word = std::vector<int>;

struct WordOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

using AssocPoly = std::map<Word, mpq_class, WordOrder>;
using LyndonForm = std::map<Word, mpq_class, WordOrder>;

bool is_lyndon(const Word& w);
// Expansion in the free associative algebra, [a,b] = ab - ba.
AssocPoly expand(const LiePoly& p);
// Standard bracketing of a Lyndon word: w = uv with v the longest proper Lyndon suffix.
LiePoly standard_bracketing(const Word& lyndon);
LyndonForm normal_form(const LiePoly& p);
LiePoly from_normal_form(const LyndonForm& form);
std::string word_to_string(const Word& w);

std::vector<mpq_class> linear_part(const LiePoly& p);
// Throws ZeroPolynomial on the zero polynomial.
int min_monomial_degree(const LiePoly& p);
int max_monomial_degree(const LiePoly& p);

struct EngelSpec {
    std::vector<mpq_class> a;  // a_1..a_m
    int m() const noexcept { return static_cast<int>(a.size()); }
    int degree() const noexcept { return m() + 1; }
    // f(t) = sum_i (-1)^i a_i t^i, coefficients of t^0..t^m.
    std::vector<mpq_class> f() const;
    bool is_plain() const;  // (0, ..., 0, 1)
};

// E_i(X, Y) = [...[X, Y], Y], ..., Y] with i brackets.
LiePoly engel_word(int i);
std::pair<LiePoly, EngelSpec> make_engel(std::vector<mpq_class> coeffs);

// The target of evaluate: Element values with zero/add/scale/bracket.
template <class A>
concept LieTarget = requires(const A& alg, const typename A::Element& x, const mpq_class& q) {
    { alg.zero() } -> std::convertible_to<typename A::Element>;
    { alg.add(x, x) } -> std::convertible_to<typename A::Element>;
    { alg.scale(q, x) } -> std::convertible_to<typename A::Element>;
    { alg.bracket(x, x) } -> std::convertible_to<typename A::Element>;
};

namespace detail {

template <LieTarget A>
typename A::Element evaluate_node(const LiePoly::Node& node, std::span<const typename A::Element> values, const A& alg) {
    switch (node.kind) {
        case LiePoly::Kind::Var: return values[static_cast<std::size_t>(node.var - 1)];
        case LiePoly::Kind::Bracket:
            return alg.bracket(evaluate_node(*node.left, values, alg), evaluate_node(*node.right, values, alg));
        case LiePoly::Kind::Sum: break;
    }
    typename A::Element acc = alg.zero();
    for (const auto& [c, child] : node.terms) {
        if (c == 0) continue;
        auto v = evaluate_node(*child, values, alg);
        acc = alg.add(acc, c == 1 ? v : alg.scale(c, v));
    }
    return acc;
}

}  // namespace detail

template <LieTarget A>
typename A::Element evaluate(const LiePoly& p, std::span<const typename A::Element> values, const A& alg) {
    if (values.size() < static_cast<std::size_t>(p.arity()))
        throw Error(ErrorCode::ShapeMismatch, "polynomial needs " + std::to_string(p.arity()) + " arguments, got " +
                                                  std::to_string(values.size()));
    return detail::evaluate_node(p.root(), values, alg);
}

template <LieTarget A>
typename A::Element evaluate(const LiePoly& p, const std::vector<typename A::Element>& values, const A& alg) {
    return evaluate(p, std::span<const typename A::Element>(values), alg);
}

}  // namespace liemap

#endif  // LIEMAP_FREELIE_HPP
