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

#ifndef WEYLKIT_EXPR_HPP
#define WEYLKIT_EXPR_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "weylkit/poly.hpp"
#include "weylkit/weyl.hpp"

namespace weylkit {

// Surface syntax:
//   expr  := term (('+' | '-') term)*
//   term  := unary ('*' unary)*          left-assoc, order preserved
//   unary := '-' unary | power
//   power := atom ('^' INT)?
//   atom  := INT ('/' INT)? | GEN | '(' expr ')'
//   GEN   := ('x' | 'd' | 'u' | 'v') INT  1-based index
struct Expr {
    enum class Kind { Number, Generator, Add, Sub, Mul, Neg, Pow };

    Kind kind;
    std::size_t position;
    mpq_class number;
    char generator = 0;
    std::size_t index = 0;  // 1-based
    std::uint64_t exponent = 0;
    std::shared_ptr<const Expr> lhs;
    std::shared_ptr<const Expr> rhs;
};

Expr parse_expr(std::string_view text);

// xK -> x_K, dK -> d_K; over GF(p) also uK -> x_K^p, vK -> d_K^p.
WeylElement elaborate_weyl(const Expr& e, const AlgebraSignature& sig);

// uK, vK as the 2n center coordinates; xK and dK are rejected.
Polynomial elaborate_center(const Expr& e, Ring ring, std::size_t n);

WeylElement parse_weyl(std::string_view text, const AlgebraSignature& sig);
Polynomial parse_center(std::string_view text, Ring ring, std::size_t n);

}  // namespace weylkit

#endif
