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

#include "weylkit/coeff.hpp"

#include <ostream>

namespace weylkit {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Ring Ring::prime_field(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31))
        throw Error(ErrorCode::InvalidArgument, "prime modulus must be below 2^31, got " + std::to_string(p));
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    return Ring(RingKind::PrimeField, static_cast<std::uint32_t>(p));
}

Ring Ring::from_characteristic(std::uint64_t characteristic) {
    return characteristic == 0 ? rationals() : prime_field(characteristic);
}

std::string Ring::name() const {
    switch (kind_) {
        case RingKind::Integers: return "ZZ";
        case RingKind::Rationals: return "QQ";
        case RingKind::PrimeField: return "GF(" + std::to_string(p_) + ")";
    }
    return "?";
}

namespace {

std::uint64_t mod_of(const mpz_class& v, std::uint32_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return r.get_ui();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

std::variant<std::uint64_t, mpq_class> Coeff::zero_value(Ring ring) {
    if (ring.is_prime_field()) return std::uint64_t{0};
    return mpq_class(0);
}

Coeff::Coeff(Ring ring, long value) : ring_(ring), value_(zero_value(ring)) {
    if (ring.is_prime_field()) {
        long p = static_cast<long>(ring.modulus());
        long r = value % p;
        if (r < 0) r += p;
        value_ = static_cast<std::uint64_t>(r);
    } else {
        value_ = mpq_class(value);
    }
}

Coeff::Coeff(Ring ring, const mpz_class& value) : ring_(ring), value_(zero_value(ring)) {
    if (ring.is_prime_field())
        value_ = mod_of(value, ring.modulus());
    else
        value_ = mpq_class(value);
}

Coeff::Coeff(Ring ring, const mpq_class& value) : ring_(ring), value_(zero_value(ring)) {
    switch (ring.kind()) {
        case RingKind::Integers:
            if (value.get_den() != 1)
                throw Error(ErrorCode::NonUnitDivision, value.get_str() + " is not an integer");
            value_ = value;
            break;
        case RingKind::Rationals: value_ = value; break;
        case RingKind::PrimeField: {
            std::uint32_t p = ring.modulus();
            std::uint64_t den = mod_of(value.get_den(), p);
            if (den == 0)
                throw Error(ErrorCode::BadPrimeDenominator,
                            "denominator of " + value.get_str() + " is divisible by " + std::to_string(p));
            std::uint64_t num = mod_of(value.get_num(), p);
            value_ = num * inv_mod(den, p) % p;
            break;
        }
    }
}

bool Coeff::is_zero() const noexcept {
    if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Coeff::is_one() const noexcept {
    if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
    return std::get<mpq_class>(value_) == 1;
}

mpq_class Coeff::signed_value() const {
    if (auto r = std::get_if<std::uint64_t>(&value_)) {
        std::uint64_t p = ring_.modulus();
        if (*r > p / 2) return mpq_class(-static_cast<long>(p - *r));
        return mpq_class(static_cast<long>(*r));
    }
    return std::get<mpq_class>(value_);
}

bool Coeff::is_negative_for_display() const { return sgn(signed_value()) < 0; }

void Coeff::require_same_ring(const Coeff& rhs) const {
    if (!(ring_ == rhs.ring_))
        throw Error(ErrorCode::RingMismatch, "coefficient rings differ: " + ring_.name() + " vs " + rhs.ring_.name());
}

Coeff Coeff::operator-() const {
    Coeff out(*this);
    if (auto r = std::get_if<std::uint64_t>(&out.value_)) {
        if (*r != 0) *r = ring_.modulus() - *r;
    } else {
        auto& q = std::get<mpq_class>(out.value_);
        q = -q;
    }
    return out;
}

Coeff& Coeff::operator+=(const Coeff& rhs) {
    require_same_ring(rhs);
    if (auto r = std::get_if<std::uint64_t>(&value_)) {
        *r += std::get<std::uint64_t>(rhs.value_);
        if (*r >= ring_.modulus()) *r -= ring_.modulus();
    } else {
        std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

Coeff& Coeff::operator-=(const Coeff& rhs) {
    require_same_ring(rhs);
    if (auto r = std::get_if<std::uint64_t>(&value_)) {
        std::uint64_t b = std::get<std::uint64_t>(rhs.value_);
        *r = *r >= b ? *r - b : *r + ring_.modulus() - b;
    } else {
        std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

Coeff& Coeff::operator*=(const Coeff& rhs) {
    require_same_ring(rhs);
    if (auto r = std::get_if<std::uint64_t>(&value_)) {
        *r = *r * std::get<std::uint64_t>(rhs.value_) % ring_.modulus();
    } else {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

Coeff& Coeff::operator/=(const Coeff& rhs) {
    require_same_ring(rhs);
    if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero in " + ring_.name());
    switch (ring_.kind()) {
        case RingKind::Integers: {
            const auto& b = std::get<mpq_class>(rhs.value_);
            if (b != 1 && b != -1)
                throw Error(ErrorCode::NonUnitDivision, "division by non-unit " + b.get_str() + " in ZZ");
            std::get<mpq_class>(value_) *= b;
            break;
        }
        case RingKind::Rationals: std::get<mpq_class>(value_) /= std::get<mpq_class>(rhs.value_); break;
        case RingKind::PrimeField: {
            auto& r = std::get<std::uint64_t>(value_);
            r = r * inv_mod(std::get<std::uint64_t>(rhs.value_), ring_.modulus()) % ring_.modulus();
            break;
        }
    }
    return *this;
}

Coeff Coeff::inverse() const { return one_like() / *this; }

Coeff Coeff::pow(std::uint64_t e) const {
    Coeff result = one_like();
    Coeff base = *this;
    while (e != 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return result;
}

Coeff Coeff::exact_div(const Coeff& b) const {
    if (ring_.kind() != RingKind::Integers) return *this / b;
    require_same_ring(b);
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero in ZZ");
    const mpz_class& num = rational().get_num();
    const mpz_class& den = b.rational().get_num();
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw Error(ErrorCode::NonUnitDivision, den.get_str() + " does not divide " + num.get_str());
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return Coeff(ring_, q);
}

std::string Coeff::to_string() const {
    if (auto r = std::get_if<std::uint64_t>(&value_)) return std::to_string(*r);
    return std::get<mpq_class>(value_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Coeff& c) { return os << c.to_string(); }

Coeff canonical_lift(const Coeff& a) {
    if (!a.ring().is_prime_field())
        throw Error(ErrorCode::InvalidArgument, "canonical_lift expects a prime-field coefficient");
    return Coeff(Ring::integers(), mpz_class(static_cast<unsigned long>(a.residue())));
}

Coeff reduce_mod_p(const Coeff& a, std::uint32_t p) {
    Ring target = Ring::prime_field(p);
    if (a.ring().is_prime_field()) {
        if (a.ring().modulus() != p) throw Error(ErrorCode::RingMismatch, "cannot reduce " + a.ring().name() + " mod " + std::to_string(p));
        return a;
    }
    return Coeff(target, a.rational());
}

Coeff from_integer(Ring ring, const mpz_class& value) { return Coeff(ring, value); }

}  // namespace weylkit
