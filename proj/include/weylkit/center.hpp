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

#ifndef WEYLKIT_CENTER_HPP
#define WEYLKIT_CENTER_HPP

#include <map>
#include <span>
#include <vector>

#include "weylkit/poly.hpp"
#include "weylkit/weyl.hpp"

namespace weylkit {

// Center of A_n(GF(p)): C = k[x_1^p, ..., x_n^p, d_1^p, ..., d_n^p], identified
// with k[u_1..u_n, v_1..v_n].

// True iff f commutes with every x_i and d_i. Also checks that the answer
// agrees with "every exponent in the support is divisible by p".
bool is_central(const WeylElement& f);

bool has_p_divisible_support(const WeylElement& f);

// Exponents divided by p; throws NotCentral.
CommutativePoly to_center_coords(const WeylElement& f);
WeylElement from_center_coords(const CommutativePoly& c, const AlgebraSignature& sig);

class CenterElement {
   public:
    static CenterElement from_element(WeylElement f);
    static CenterElement from_coords(const CommutativePoly& c, const AlgebraSignature& sig);

    const WeylElement& element() const noexcept { return element_; }
    const CommutativePoly& coords() const noexcept { return coords_; }

    friend bool operator==(const CenterElement& a, const CenterElement& b) { return a.element_ == b.element_; }

   private:
    CenterElement(WeylElement e, CommutativePoly c) : element_(std::move(e)), coords_(std::move(c)) {}
    WeylElement element_;
    CommutativePoly coords_;
};

// s_1(a, b), ..., s_{p-1}(a, b) where i s_i is the coefficient of t^(i-1) in
// ad(t a + b)^(p-1)(a), t a central indeterminate.
std::vector<WeylElement> jacobson_s_terms(const WeylElement& a, const WeylElement& b);

// (a + b)^p = a^p + b^p + sum_i s_i(a, b)
WeylElement jacobson_pth_power(const WeylElement& a, const WeylElement& b);

// {f, g} = reduce([lift f, lift g] / p) computed in A_n(ZZ) with canonical
// lifts. Throws NonDivisibleCommutator if some coefficient is not divisible
// by p.
CenterElement poisson_from_lift(const CenterElement& f, const CenterElement& g);

// f = sum c_{alpha,beta} X^alpha D^beta with 0 <= alpha, beta <= p-1 and
// c_{alpha,beta} central.
struct CBasisExpansion {
    std::vector<WeylElement> images_x;
    std::vector<WeylElement> images_d;
    std::map<Exponents, CenterElement, DegLexGreater> coefficients;  // key (alpha, beta)

    WeylElement reconstruct() const;
};

// Extracts the coefficients top cell first: ad(D)^alpha ad(X)^beta applied to
// the remainder isolates (-1)^|beta| alpha! beta! c_{alpha,beta}.
// Throws BadImages when the images violate the Weyl relations and
// NotExpressible when an isolated coefficient is not central or a remainder
// survives.
CBasisExpansion express_in_c_basis(const WeylElement& f, std::span<const WeylElement> images_x,
                                   std::span<const WeylElement> images_d);

}  // namespace weylkit

#endif
