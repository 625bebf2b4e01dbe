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

#ifndef WEYLKIT_COEFF_HPP
#define WEYLKIT_COEFF_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "weylkit/error.hpp"

namespace weylkit {

enum class RingKind { Integers, Rationals, PrimeField };

// ZZ, QQ or GF(p). The modulus of a prime field is checked for primality once,
// at construction.
class Ring {
   public:
    static Ring integers() noexcept { return Ring(RingKind::Integers, 0); }
    static Ring rationals() noexcept { return Ring(RingKind::Rationals, 0); }
    static Ring prime_field(std::uint64_t p);
    // 0 selects QQ, anything else GF(characteristic).
    static Ring from_characteristic(std::uint64_t characteristic);

    RingKind kind() const noexcept { return kind_; }
    std::uint32_t modulus() const noexcept { return p_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    bool is_field() const noexcept { return kind_ != RingKind::Integers; }
    bool is_prime_field() const noexcept { return kind_ == RingKind::PrimeField; }
    std::string name() const;

    friend bool operator==(const Ring&, const Ring&) = default;

   private:
    Ring(RingKind kind, std::uint32_t p) noexcept : kind_(kind), p_(p) {}
    RingKind kind_;
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

// An exact scalar. Integers and rationals live in an mpq_class (always in
// lowest terms, denominator positive; denominator 1 over ZZ); residues are
// least non-negative representatives in [0, p).
class Coeff {
   public:
    explicit Coeff(Ring ring) : ring_(ring), value_(zero_value(ring)) {}
    Coeff(Ring ring, long value);
    Coeff(Ring ring, const mpz_class& value);
    // Throws NonUnitDivision over ZZ for a non-integer, BadPrimeDenominator over
    // GF(p) when p divides the denominator.
    Coeff(Ring ring, const mpq_class& value);

    static Coeff zero(Ring ring) { return Coeff(ring); }
    static Coeff one(Ring ring) { return Coeff(ring, 1L); }

    const Ring& ring() const noexcept { return ring_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    // Only meaningful for the matching ring kind.
    std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
    const mpq_class& rational() const { return std::get<mpq_class>(value_); }

    // Integer or rational value; for residues the symmetric representative in
    // (-p/2, p/2], which is what the renderers print.
    mpq_class signed_value() const;
    bool is_negative_for_display() const;

    Coeff operator-() const;
    Coeff& operator+=(const Coeff& rhs);
    Coeff& operator-=(const Coeff& rhs);
    Coeff& operator*=(const Coeff& rhs);
    Coeff& operator/=(const Coeff& rhs);
    friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
    friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
    friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
    friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }

    Coeff inverse() const;
    Coeff pow(std::uint64_t e) const;

    // Exact quotient over ZZ when b divides a; field division otherwise.
    Coeff exact_div(const Coeff& b) const;

    Coeff zero_like() const { return Coeff(ring_); }
    Coeff one_like() const { return Coeff(ring_, 1L); }

    friend bool operator==(const Coeff& a, const Coeff& b) { return a.ring_ == b.ring_ && a.value_ == b.value_; }

    std::string to_string() const;

   private:
    static std::variant<std::uint64_t, mpq_class> zero_value(Ring ring);
    void require_same_ring(const Coeff& rhs) const;

    Ring ring_;
    std::variant<std::uint64_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Coeff& c);

// Representative in [0, p) as an element of ZZ.
Coeff canonical_lift(const Coeff& a);

// Ring homomorphism ZZ -> GF(p) or the partial one QQ -> GF(p).
Coeff reduce_mod_p(const Coeff& a, std::uint32_t p);

// Map an integer into any ring (used for the combinatorial Weyl coefficients).
Coeff from_integer(Ring ring, const mpz_class& value);

}  // namespace weylkit

#endif
