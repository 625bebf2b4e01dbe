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

#include "support.hpp"
#include "weylkit/poly.hpp"

using namespace weylkit;
using namespace wk_test;

namespace {

Polynomial P(const char* text, Ring ring = Ring::rationals(), std::size_t n = 1) { return parse_center(text, ring, n); }

}  // namespace

TEST_CASE("arithmetic and printing") {
    Polynomial f = P("(u1 + v1)^2");
    CHECK(f.to_string() == "u1^2 + 2*u1*v1 + v1^2");
    CHECK((f - f).is_zero());
    CHECK(f.degree() == 2);
    CHECK(f.degree_in(1) == 2);
    CHECK(P("u1 - u1").to_string() == "0");
}

TEST_CASE("derivative follows the power rule term by term") {
    std::mt19937_64 rng(11);
    const Ring q = Ring::rationals();
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial f = random_poly(q, 4, rng, 5, 4);
        for (std::size_t var = 0; var < 4; ++var) {
            Polynomial expected(q, 4);
            for (const auto& [e, c] : f.terms()) {
                if (e[var] == 0) continue;
                Exponents g = e;
                --g[var];
                expected.add_term(g, c * Coeff(q, static_cast<long>(e[var])));
            }
            CHECK(derivative(f, var) == expected);
        }
    }
}

TEST_CASE("Poisson bracket identities") {
    const Ring f5 = Ring::prime_field(5);
    CHECK(poisson(P("u1", f5), P("v1", f5)) == P("1", f5));
    CHECK(poisson(P("u1", f5, 2), P("v2", f5, 2)).is_zero());
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 15; ++trial) {
        Polynomial a = random_poly(f5, 4, rng, 3, 3), b = random_poly(f5, 4, rng, 3, 3),
                   c = random_poly(f5, 4, rng, 3, 3);
        CHECK(poisson(a, b) == -poisson(b, a));
        CHECK(poisson(a, b * c) == poisson(a, b) * c + b * poisson(a, c));
        CHECK((poisson(a, poisson(b, c)) + poisson(b, poisson(c, a)) + poisson(c, poisson(a, b))).is_zero());
    }
}

TEST_CASE("gcd recovers a planted common factor") {
    std::mt19937_64 rng(19);
    for (std::uint64_t ch : {0ULL, 5ULL}) {
        const Ring r = Ring::from_characteristic(ch);
        Polynomial f = P("u1^2*v1 + 3*u1 + 1", r), g = P("v1 + 2", r), h = P("u1 - v1^2", r);
        CHECK(gcd(f * g, f * h) == make_monic(f));
        CHECK(gcd(g, h).is_constant());
        for (int trial = 0; trial < 5; ++trial) {
            Polynomial a = random_poly(r, 2, rng, 3, 2);
            if (a.is_zero()) continue;
            Polynomial common = gcd(a * f, a * g);
            CHECK(divide_exact(a * f, common) * common == a * f);
            CHECK(divide_exact(a * g, common) * common == a * g);
        }
    }
    try {
        (void)divide_exact(P("u1^2 + 1"), P("u1"));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonUnitDivision);
    }
}

TEST_CASE("maps compose and substitute") {
    const Ring q = Ring::rationals();
    PolyMap m(q, 2, {P("u1"), P("v1 + u1^2")});
    PolyMap inv(q, 2, {P("u1"), P("v1 - u1^2")});
    CHECK(compose(m, inv) == PolyMap::identity(q, 2));
    CHECK(compose(inv, m) == PolyMap::identity(q, 2));
    CHECK(m.apply(P("u1*v1")) == P("u1*v1 + u1^3"));
    CHECK(m.degree() == 2);
}

TEST_CASE("determinants") {
    const Ring q = Ring::rationals();
    // constant 5x5 matrix, det by permutation expansion
    std::vector<std::vector<long>> a{{2, 0, 1, 3, 1}, {1, 1, 0, 2, 0}, {0, 3, 1, 1, 2}, {4, 1, 2, 0, 1}, {1, 2, 0, 1, 3}};
    SquareMatrixPoly m(q, 2, 5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) m.at(i, j) = Polynomial::scalar(q, 2, a[i][j]);
    std::vector<std::size_t> perm{0, 1, 2, 3, 4};
    long expected = 0;
    do {
        long sign = 1;
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = i + 1; j < 5; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        long prod = sign;
        for (std::size_t i = 0; i < 5; ++i) prod *= a[i][perm[i]];
        expected += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(det(m) == Polynomial::scalar(q, 2, expected));

    SquareMatrixPoly s(q, 2, 2);
    s.at(0, 0) = P("u1");
    s.at(0, 1) = P("v1");
    s.at(1, 0) = P("v1");
    s.at(1, 1) = P("u1");
    CHECK(det(s) == P("u1^2 - v1^2"));
}

TEST_CASE("symplectic certificates") {
    const Ring f3 = Ring::prime_field(3);
    PolyMap good(f3, 2, {P("u1", f3), P("v1 + u1^2", f3)});
    auto c = is_symplectic(good);
    CHECK(c.symplectic);
    CHECK(c.jacobian_det == Polynomial::scalar(f3, 2, 1));
    CHECK(c.brackets == SquareMatrixPoly::symplectic_form(f3, 1));

    PolyMap bad(f3, 2, {P("u1", f3), P("u1^2*v1^3", f3)});
    auto b = is_symplectic(bad);
    CHECK_FALSE(b.symplectic);
    CHECK(b.jacobian_det.is_zero());

    PolyMap flip(f3, 2, {P("v1", f3), P("u1", f3)});
    auto fl = is_symplectic(flip);
    CHECK_FALSE(fl.symplectic);
    CHECK(fl.jacobian_det == Polynomial::scalar(f3, 2, -1));
}
