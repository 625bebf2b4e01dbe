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

#include <doctest.h>

#include "weylkit/coeff.hpp"
#include "weylkit/error.hpp"

using namespace weylkit;

TEST_CASE("rings") {
    CHECK(Ring::integers().name() == "ZZ");
    CHECK(Ring::rationals().name() == "QQ");
    CHECK(Ring::prime_field(7).name() == "GF(7)");
    CHECK(Ring::from_characteristic(0) == Ring::rationals());
    CHECK(Ring::prime_field(5).characteristic() == 5);
    CHECK(Ring::prime_field(5).is_field());
    CHECK_FALSE(Ring::integers().is_field());
    try {
        (void)Ring::prime_field(9);
        FAIL("9 accepted as a prime");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPrime);
    }
    CHECK(is_prime(2));
    CHECK(is_prime(2147483629));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("GF(7) arithmetic agrees with integer arithmetic mod 7 on every pair") {
    const Ring f = Ring::prime_field(7);
    for (long a = 0; a < 7; ++a)
        for (long b = 0; b < 7; ++b) {
            Coeff ca(f, a), cb(f, b);
            CHECK((ca + cb).residue() == static_cast<std::uint64_t>((a + b) % 7));
            CHECK((ca - cb).residue() == static_cast<std::uint64_t>(((a - b) % 7 + 7) % 7));
            CHECK((ca * cb).residue() == static_cast<std::uint64_t>((a * b) % 7));
            if (b != 0) CHECK(((ca / cb) * cb) == ca);
        }
    CHECK(Coeff(f, -1L).residue() == 6);
    CHECK(Coeff(f, 3L).pow(6).is_one());
}

TEST_CASE("lift and reduce are inverse on GF(7)") {
    const Ring f = Ring::prime_field(7);
    for (long a = 0; a < 7; ++a) {
        Coeff c(f, a);
        Coeff z = canonical_lift(c);
        CHECK(z.ring() == Ring::integers());
        CHECK(z.rational() >= 0);
        CHECK(z.rational() < 7);
        CHECK(reduce_mod_p(z, 7) == c);
    }
}

TEST_CASE("reduction of rationals") {
    const Ring q = Ring::rationals();
    CHECK(reduce_mod_p(Coeff(q, mpq_class(1, 2)), 5).residue() == 3);
    CHECK(reduce_mod_p(Coeff(q, mpq_class(-2, 3)), 7).residue() == 4);
    try {
        (void)reduce_mod_p(Coeff(q, mpq_class(1, 5)), 5);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadPrimeDenominator);
    }
}

TEST_CASE("division errors") {
    const Ring z = Ring::integers();
    CHECK((Coeff(z, 6L) / Coeff(z, -1L)) == Coeff(z, -6L));
    try {
        (void)(Coeff(z, 6L) / Coeff(z, 4L));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonUnitDivision);
    }
    CHECK(Coeff(z, 6L).exact_div(Coeff(z, 3L)) == Coeff(z, 2L));
    try {
        (void)(Coeff(Ring::rationals(), 1L) / Coeff(Ring::rationals(), 0L));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DivisionByZero);
    }
    try {
        (void)(Coeff(z, 1L) + Coeff(Ring::rationals(), 1L));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::RingMismatch);
    }
}

TEST_CASE("display uses the symmetric representative") {
    const Ring f = Ring::prime_field(5);
    CHECK(Coeff(f, 4L).signed_value() == -1);
    CHECK(Coeff(f, 2L).signed_value() == 2);
    CHECK(Coeff(f, 3L).signed_value() == -2);
    CHECK(Coeff(Ring::rationals(), mpq_class(-3, 4)).to_string() == "-3/4");
}
