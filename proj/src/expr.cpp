/*
   Copyright 2026 The weylkit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "weylkit/expr.hpp"

#include <cctype>

namespace weylkit {

namespace {

class Parser {
   public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr run() {
        Expr e = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

   private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static Expr node(Expr::Kind k, std::size_t pos) {
        Expr out;
        out.kind = k;
        out.position = pos;
        return out;
    }

    static std::shared_ptr<const Expr> share(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

    static Expr binary(Expr::Kind k, std::size_t pos, Expr a, Expr b) {
        Expr out = node(k, pos);
        out.lhs = share(std::move(a));
        out.rhs = share(std::move(b));
        return out;
    }

    std::string digits() {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return std::string(text_.substr(start, pos_ - start));
    }

    Expr expr() {
        Expr out = term();
        while (true) {
            skip();
            std::size_t at = pos_;
            if (accept('+'))
                out = binary(Expr::Kind::Add, at, std::move(out), term());
            else if (accept('-'))
                out = binary(Expr::Kind::Sub, at, std::move(out), term());
            else
                return out;
        }
    }

    Expr term() {
        Expr out = unary();
        while (true) {
            skip();
            std::size_t at = pos_;
            if (!accept('*')) return out;
            out = binary(Expr::Kind::Mul, at, std::move(out), unary());
        }
    }

    Expr unary() {
        skip();
        std::size_t at = pos_;
        if (accept('-')) {
            Expr out = node(Expr::Kind::Neg, at);
            out.lhs = share(unary());
            return out;
        }
        return power();
    }

    Expr power() {
        Expr base = atom();
        skip();
        std::size_t at = pos_;
        if (!accept('^')) return base;
        skip();
        if (accept('-')) throw Error(ErrorCode::NegativeExponent, "negative exponent at position " + std::to_string(at));
        std::size_t digits_at = pos_;
        std::string ds = digits();
        mpz_class value(ds);
        if (value > mpz_class(static_cast<unsigned long>(UINT32_MAX))) {
            pos_ = digits_at;
            fail("exponent too large");
        }
        Expr out = node(Expr::Kind::Pow, at);
        out.exponent = value.get_ui();
        out.lhs = share(std::move(base));
        return out;
    }

    Expr atom() {
        skip();
        std::size_t at = pos_;
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Expr inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num(digits());
            mpz_class den = 1;
            if (accept('/')) {
                den = mpz_class(digits());
                if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator at position " + std::to_string(at));
            }
            mpq_class q(num, den);
            q.canonicalize();
            Expr out = node(Expr::Kind::Number, at);
            out.number = q;
            return out;
        }
        if (c == 'x' || c == 'd' || c == 'u' || c == 'v') {
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("generator '" + std::string(1, c) + "' needs an index");
            std::string ds = digits();
            mpz_class idx(ds);
            if (idx > 1000000) fail("generator index too large");
            Expr out = node(Expr::Kind::Generator, at);
            out.generator = c;
            out.index = idx.get_ui();
            return out;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void check_index(const Expr& e, std::size_t n) {
    if (e.index == 0 || e.index > n)
        throw Error(ErrorCode::IndexOutOfRange, std::string(1, e.generator) + std::to_string(e.index) +
                                                    " at position " + std::to_string(e.position) + " is outside 1.." +
                                                    std::to_string(n));
}

// Shared fold over the syntax tree; Leaf maps numbers and generators.
template <class T, class Leaf, class Mul, class Pow>
T fold(const Expr& e, const Leaf& leaf, const Mul& mul_fn, const Pow& pow_fn) {
    switch (e.kind) {
        case Expr::Kind::Number:
        case Expr::Kind::Generator:
            return leaf(e);
        case Expr::Kind::Add:
            return fold<T>(*e.lhs, leaf, mul_fn, pow_fn) + fold<T>(*e.rhs, leaf, mul_fn, pow_fn);
        case Expr::Kind::Sub:
            return fold<T>(*e.lhs, leaf, mul_fn, pow_fn) - fold<T>(*e.rhs, leaf, mul_fn, pow_fn);
        case Expr::Kind::Mul:
            return mul_fn(fold<T>(*e.lhs, leaf, mul_fn, pow_fn), fold<T>(*e.rhs, leaf, mul_fn, pow_fn));
        case Expr::Kind::Neg:
            return -fold<T>(*e.lhs, leaf, mul_fn, pow_fn);
        case Expr::Kind::Pow:
            return pow_fn(fold<T>(*e.lhs, leaf, mul_fn, pow_fn), e.exponent);
    }
    throw Error(ErrorCode::Internal, "bad expression node");
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).run(); }

WeylElement elaborate_weyl(const Expr& e, const AlgebraSignature& sig) {
    auto leaf = [&](const Expr& node) {
        if (node.kind == Expr::Kind::Number) return WeylElement::constant(sig, Coeff(sig.ring, node.number));
        check_index(node, sig.n);
        const std::size_t i = node.index - 1;
        switch (node.generator) {
            case 'x': return WeylElement::x(sig, i);
            case 'd': return WeylElement::d(sig, i);
            default: break;
        }
        const auto p = sig.ring.characteristic();
        if (p == 0)
            throw Error(ErrorCode::InvalidArgument, std::string(1, node.generator) + std::to_string(node.index) +
                                                        " names a center coordinate and needs characteristic p");
        Monomial m(2 * sig.n, 0);
        m[(node.generator == 'u' ? 0 : sig.n) + i] = static_cast<std::uint32_t>(p);
        return WeylElement::term(sig, std::move(m), Coeff::one(sig.ring));
    };
    return fold<WeylElement>(
        e, leaf, [](const WeylElement& a, const WeylElement& b) { return mul(a, b); },
        [](const WeylElement& a, std::uint64_t k) { return pow(a, k); });
}

Polynomial elaborate_center(const Expr& e, Ring ring, std::size_t n) {
    auto leaf = [&](const Expr& node) {
        if (node.kind == Expr::Kind::Number) return Polynomial::constant(ring, 2 * n, Coeff(ring, node.number));
        if (node.generator == 'x' || node.generator == 'd')
            throw Error(ErrorCode::InvalidArgument, std::string(1, node.generator) + std::to_string(node.index) +
                                                        " is not a center coordinate; use u" +
                                                        std::to_string(node.index) + " or v" +
                                                        std::to_string(node.index));
        check_index(node, n);
        return Polynomial::variable(ring, 2 * n, (node.generator == 'u' ? 0 : n) + node.index - 1);
    };
    return fold<Polynomial>(
        e, leaf, [](const Polynomial& a, const Polynomial& b) { return a * b; },
        [](const Polynomial& a, std::uint64_t k) { return pow(a, k); });
}

WeylElement parse_weyl(std::string_view text, const AlgebraSignature& sig) {
    return elaborate_weyl(parse_expr(text), sig);
}

Polynomial parse_center(std::string_view text, Ring ring, std::size_t n) {
    return elaborate_center(parse_expr(text), ring, n);
}

}  // namespace weylkit
