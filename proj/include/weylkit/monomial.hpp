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

#ifndef WEYLKIT_MONOMIAL_HPP
#define WEYLKIT_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "weylkit/coeff.hpp"

namespace weylkit {

// Dense exponent vector. For Weyl monomials x^alpha d^beta the layout is
// (alpha_1..alpha_n, beta_1..beta_n); for the center ring it is
// (u_1..u_n, v_1..v_n).
using Exponents = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Exponents& e) noexcept;

// Canonical term order: larger total degree first, ties broken by
// lexicographically larger exponent vector first.
struct DegLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const noexcept;
};

struct ExponentsHash {
    std::size_t operator()(const Exponents& e) const noexcept;
};

// Render a sum of terms as `3*x1^2*d1 - (1/2)*d2 + 1`. Terms must arrive in
// display order. names[i] is the symbol for exponent slot i.
std::string render_terms(const std::vector<std::pair<const Exponents*, const Coeff*>>& terms,
                         const std::vector<std::string>& names);

// x1..xn, d1..dn
std::vector<std::string> weyl_names(std::size_t n);
// u1..un, v1..vn
std::vector<std::string> center_names(std::size_t n);

}  // namespace weylkit

#endif
