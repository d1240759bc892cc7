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

#include "liemap/freelie.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace liemap {

LiePoly LiePoly::var(int index) {
    if (index < 1) throw Error(ErrorCode::InvalidArgument, "variable indices start at 1");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    n->var = index;
    return LiePoly(n);
}

LiePoly LiePoly::bracket(const LiePoly& a, const LiePoly& b) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bracket;
    n->left = a.root_;
    n->right = b.root_;
    return LiePoly(n);
}

LiePoly LiePoly::sum(std::vector<std::pair<mpq_class, LiePoly>> terms) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Sum;
    for (auto& [c, p] : terms) n->terms.emplace_back(c, p.root_);
    return LiePoly(n);
}

LiePoly operator+(const LiePoly& a, const LiePoly& b) { return LiePoly::sum({{1, a}, {1, b}}); }
LiePoly operator-(const LiePoly& a, const LiePoly& b) { return LiePoly::sum({{1, a}, {-1, b}}); }
LiePoly operator*(const mpq_class& c, const LiePoly& a) { return LiePoly::sum({{c, a}}); }

namespace {

int node_arity(const LiePoly::Node& n) {
    switch (n.kind) {
        case LiePoly::Kind::Var: return n.var;
        case LiePoly::Kind::Bracket: return std::max(node_arity(*n.left), node_arity(*n.right));
        case LiePoly::Kind::Sum: break;
    }
    int a = 0;
    for (const auto& t : n.terms) a = std::max(a, node_arity(*t.second));
    return a;
}

int node_degree(const LiePoly::Node& n) {
    switch (n.kind) {
        case LiePoly::Kind::Var: return 1;
        case LiePoly::Kind::Bracket: return node_degree(*n.left) + node_degree(*n.right);
        case LiePoly::Kind::Sum: break;
    }
    int d = 0;
    for (const auto& t : n.terms) d = std::max(d, node_degree(*t.second));
    return d;
}

void print_node(const LiePoly::Node& n, std::ostringstream& os);

void print_atom(const LiePoly::Node& n, std::ostringstream& os) {
    if (n.kind == LiePoly::Kind::Sum) {
        os << '(';
        print_node(n, os);
        os << ')';
    } else {
        print_node(n, os);
    }
}

void print_node(const LiePoly::Node& n, std::ostringstream& os) {
    switch (n.kind) {
        case LiePoly::Kind::Var: os << 'X' << n.var; return;
        case LiePoly::Kind::Bracket:
            os << '[';
            print_node(*n.left, os);
            os << ',';
            print_node(*n.right, os);
            os << ']';
            return;
        case LiePoly::Kind::Sum: break;
    }
    if (n.terms.empty()) {
        os << "0*X1";
        return;
    }
    bool first = true;
    for (const auto& [c, child] : n.terms) {
        const bool negative = sgn(c) < 0;
        mpq_class mag = abs(c);
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        if (mag != 1) os << mag.get_str() << '*';
        print_atom(*child, os);
        first = false;
    }
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    LiePoly parse() {
        LiePoly p = poly();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseFailure(pos_, pos_ >= text_.size() && what.empty() ? "unexpected end of input" : what);
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        skip();
        if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
        if (text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string digits() {
        std::string out;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) out += text_[pos_++];
        return out;
    }

    LiePoly poly() {
        std::vector<std::pair<mpq_class, LiePoly>> terms;
        mpq_class sign = 1;
        if (peek('+')) {
            ++pos_;
        } else if (peek('-')) {
            ++pos_;
            sign = -1;
        }
        terms.push_back(term(sign));
        while (true) {
            if (peek('+')) {
                ++pos_;
                terms.push_back(term(1));
            } else if (peek('-')) {
                ++pos_;
                terms.push_back(term(-1));
            } else {
                break;
            }
        }
        if (terms.size() == 1 && terms[0].first == 1) return terms[0].second;
        return LiePoly::sum(std::move(terms));
    }

    std::pair<mpq_class, LiePoly> term(const mpq_class& sign) {
        skip();
        mpq_class coef = 1;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            std::string num = digits();
            std::string den = "1";
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                den = digits();
                if (den.empty()) fail("expected denominator digits");
            }
            coef = mpq_class(mpz_class(num), mpz_class(den));
            if (coef.get_den() == 0) fail("zero denominator");
            coef.canonicalize();
            expect('*');
        }
        return {sign * coef, atom()};
    }

    LiePoly atom() {
        skip();
        if (pos_ >= text_.size()) fail("");
        const char c = text_[pos_];
        if (c == '[') {
            ++pos_;
            LiePoly a = poly();
            expect(',');
            LiePoly b = poly();
            expect(']');
            return LiePoly::bracket(a, b);
        }
        if (c == '(') {
            ++pos_;
            LiePoly a = poly();
            expect(')');
            return a;
        }
        const std::size_t start = pos_;
        if (c == 'X') {
            ++pos_;
            std::string d = digits();
            if (d.empty()) return LiePoly::var(1);
            if (d.size() > 6) {
                pos_ = start;
                fail("variable index too large");
            }
            const int idx = std::stoi(d);
            if (idx == 0) {
                pos_ = start;
                fail("variable index 0");
            }
            return LiePoly::var(idx);
        }
        if (c == 'Y' || c == 'Z' || c == 'T') {
            ++pos_;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("only X takes a numeric index");
            return LiePoly::var(c == 'Y' ? 2 : c == 'Z' ? 3 : 4);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

AssocPoly multiply(const AssocPoly& a, const AssocPoly& b) {
    AssocPoly out;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            out[w] += cu * cv;
        }
    return out;
}

void add_into(AssocPoly& acc, const AssocPoly& x, const mpq_class& c) {
    for (const auto& [w, v] : x) {
        auto& slot = acc[w];
        slot += c * v;
        if (slot == 0) acc.erase(w);
    }
}

AssocPoly expand_node(const LiePoly::Node& n) {
    switch (n.kind) {
        case LiePoly::Kind::Var: return AssocPoly{{Word{n.var}, mpq_class(1)}};
        case LiePoly::Kind::Bracket: {
            AssocPoly a = expand_node(*n.left);
            AssocPoly b = expand_node(*n.right);
            AssocPoly out = multiply(a, b);
            add_into(out, multiply(b, a), -1);
            std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
            return out;
        }
        case LiePoly::Kind::Sum: break;
    }
    AssocPoly out;
    for (const auto& [c, child] : n.terms)
        if (c != 0) add_into(out, expand_node(*child), c);
    return out;
}

}  // namespace

int LiePoly::arity() const { return node_arity(*root_); }
int LiePoly::tree_degree() const { return node_degree(*root_); }

std::string LiePoly::to_string() const {
    std::ostringstream os;
    print_node(*root_, os);
    return os.str();
}

LiePoly parse_poly(std::string_view text) { return Parser(text).parse(); }

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    for (std::size_t k = 1; k < w.size(); ++k)
        if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<std::ptrdiff_t>(k), w.end()))
            return false;
    return true;
}

AssocPoly expand(const LiePoly& p) { return expand_node(p.root()); }

LiePoly standard_bracketing(const Word& w) {
    if (!is_lyndon(w)) throw Error(ErrorCode::InvalidArgument, "standard bracketing of a non-Lyndon word");
    if (w.size() == 1) return LiePoly::var(w[0]);
    for (std::size_t k = 1; k < w.size(); ++k) {
        Word v(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
        if (is_lyndon(v)) {
            Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
            return LiePoly::bracket(standard_bracketing(u), standard_bracketing(v));
        }
    }
    throw Error(ErrorCode::InternalFailure, "Lyndon word without a Lyndon suffix");
}

LyndonForm normal_form(const LiePoly& p) {
    // The least word of a Lie polynomial is Lyndon, and it is the least word of its own standard
    // bracketing; peel those off until nothing is left.
    AssocPoly rest = expand(p);
    LyndonForm out;
    std::map<Word, AssocPoly, WordOrder> cache;
    while (!rest.empty()) {
        const Word w = rest.begin()->first;
        const mpq_class c = rest.begin()->second;
        if (!is_lyndon(w)) throw Error(ErrorCode::InternalFailure, "expansion is not a Lie element (" + word_to_string(w) + ")");
        auto it = cache.find(w);
        if (it == cache.end()) it = cache.emplace(w, expand(standard_bracketing(w))).first;
        add_into(rest, it->second, -c);
        if (rest.count(w)) throw Error(ErrorCode::InternalFailure, "leading word did not cancel");
        out[w] = c;
    }
    return out;
}

LiePoly from_normal_form(const LyndonForm& form) {
    std::vector<std::pair<mpq_class, LiePoly>> terms;
    for (const auto& [w, c] : form) terms.emplace_back(c, standard_bracketing(w));
    return LiePoly::sum(std::move(terms));
}

std::string word_to_string(const Word& w) {
    std::string s;
    for (int x : w) s += "X" + std::to_string(x);
    return s;
}

std::vector<mpq_class> linear_part(const LiePoly& p) {
    std::vector<mpq_class> out(static_cast<std::size_t>(p.arity()), 0);
    for (const auto& [w, c] : normal_form(p))
        if (w.size() == 1) out[static_cast<std::size_t>(w[0] - 1)] = c;
    return out;
}

int min_monomial_degree(const LiePoly& p) {
    auto form = normal_form(p);
    if (form.empty()) throw Error(ErrorCode::ZeroPolynomial, "the polynomial is zero in the free Lie algebra");
    return static_cast<int>(form.begin()->first.size());
}

int max_monomial_degree(const LiePoly& p) {
    auto form = normal_form(p);
    if (form.empty()) throw Error(ErrorCode::ZeroPolynomial, "the polynomial is zero in the free Lie algebra");
    return static_cast<int>(form.rbegin()->first.size());
}

std::vector<mpq_class> EngelSpec::f() const {
    std::vector<mpq_class> out(a.size() + 1, 0);
    for (std::size_t i = 1; i <= a.size(); ++i) out[i] = (i % 2 ? -1 : 1) * a[i - 1];
    return out;
}

bool EngelSpec::is_plain() const {
    if (a.empty() || a.back() != 1) return false;
    return std::all_of(a.begin(), a.end() - 1, [](const mpq_class& x) { return x == 0; });
}

LiePoly engel_word(int i) {
    if (i < 1) throw Error(ErrorCode::InvalidArgument, "Engel words start at E_1");
    LiePoly p = LiePoly::var(1);
    for (int k = 0; k < i; ++k) p = LiePoly::bracket(p, LiePoly::var(2));
    return p;
}

std::pair<LiePoly, EngelSpec> make_engel(std::vector<mpq_class> coeffs) {
    if (coeffs.empty()) throw Error(ErrorCode::InvalidArgument, "Engel coefficients are empty");
    if (coeffs.back() == 0) throw Error(ErrorCode::InvalidArgument, "leading Engel coefficient a_m must be nonzero");
    EngelSpec spec{coeffs};
    if (spec.is_plain()) return {engel_word(spec.m()), spec};
    std::vector<std::pair<mpq_class, LiePoly>> terms;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) terms.emplace_back(coeffs[i], engel_word(static_cast<int>(i + 1)));
    return {LiePoly::sum(std::move(terms)), spec};
}

}  // namespace liemap
