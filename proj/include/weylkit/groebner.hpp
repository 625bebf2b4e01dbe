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

#ifndef WEYLKIT_GROEBNER_HPP
#define WEYLKIT_GROEBNER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weylkit/groebner_engine.hpp"
#include "weylkit/poly.hpp"

namespace weylkit {

GPoly<Coeff> to_gpoly(const Polynomial& f, const MonomialOrder& order);
Polynomial from_gpoly(const GPoly<Coeff>& f, Ring ring, std::size_t nvars);

// Finitely generated ideal of k[z_1..z_N] with a lazily computed reduced
// Groebner basis per monomial order (the last one is cached).
class Ideal {
   public:
    Ideal(Ring ring, std::size_t nvars, std::vector<Polynomial> generators);

    const Ring& ring() const noexcept { return ring_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const std::vector<Polynomial>& generators() const noexcept { return generators_; }

    const std::vector<Polynomial>& groebner_basis(const MonomialOrder& order = MonomialOrder::grevlex()) const;
    bool has_cached_basis(const MonomialOrder& order) const noexcept {
        return cache_order_.has_value() && *cache_order_ == order;
    }

    bool contains(const Polynomial& f) const;
    bool is_unit() const;

    std::string to_string() const;

   private:
    Ring ring_;
    std::size_t nvars_;
    std::vector<Polynomial> generators_;
    mutable std::optional<MonomialOrder> cache_order_;
    mutable std::vector<Polynomial> cache_;
};

// The ideal generated by the reduced Groebner basis of I (basis cached).
Ideal groebner_basis(const Ideal& I, const MonomialOrder& order);

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& order);

// Buchberger's criterion: all S-polynomials reduce to zero.
bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis, const MonomialOrder& order);

bool ideal_member(const Polynomial& f, const Ideal& I);

// Mutual containment.
bool ideal_equal(const Ideal& I, const Ideal& J);

// I cap J by eliminating t from t*I + (1 - t)*J.
Ideal ideal_intersect(const Ideal& I, const Ideal& J);

// True when no nonzero polynomial relation holds among gens.
bool algebraically_independent(const std::vector<Polynomial>& gens);

struct FlatnessVerdict {
    bool violation;
    std::optional<Polynomial> witness;  // in IB cap JB but not in (I cap J)B
    Ideal abstract_intersection;        // I cap J in the subring coordinates
    Ideal extended_intersection;        // IB cap JB
    Ideal pushed_intersection;          // (I cap J)B
};

// Matsumura's test for A = k[g_1..g_m] -> B = k[z_1..z_N]: IB cap JB must equal
// (I cap J)B when the map is flat. I and J live in k[a_1..a_m].
FlatnessVerdict flatness_probe(const std::vector<Polynomial>& subring_gens, const std::vector<Polynomial>& i_gens,
                               const std::vector<Polynomial>& j_gens);

// Polynomial inverse by elimination on (W_i - m_i(U)); throws NotInvertible.
PolyMap invert_poly_map(const PolyMap& m);

// Element of the rational function field k(s_1..s_N) kept as num/den with
// gcd(num, den) = 1 and a monic denominator.
class FracCoeff {
   public:
    FracCoeff(Polynomial num, Polynomial den);
    static FracCoeff from_polynomial(const Polynomial& p);

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    FracCoeff zero_like() const;
    FracCoeff one_like() const;

    FracCoeff operator-() const;
    friend FracCoeff operator+(const FracCoeff& a, const FracCoeff& b);
    friend FracCoeff operator-(const FracCoeff& a, const FracCoeff& b);
    friend FracCoeff operator*(const FracCoeff& a, const FracCoeff& b);
    friend FracCoeff operator/(const FracCoeff& a, const FracCoeff& b);
    friend bool operator==(const FracCoeff&, const FracCoeff&) = default;

    std::string to_string() const;

   private:
    Polynomial num_;
    Polynomial den_;
};

// [k(z) : k(m_1, ..., m_N)] as the dimension of
// k(s)[Z] / (m_1(Z) - s_1, ..., m_N(Z) - s_N). Counts inseparable degree.
// Throws NotGenericallyFinite when that quotient is not finite dimensional.
std::uint64_t extension_degree(const PolyMap& m);

}  // namespace weylkit

#endif
