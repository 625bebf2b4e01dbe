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
#include "weylkit/groebner.hpp"

using namespace weylkit;
using namespace wk_test;

namespace {

Polynomial P(const char* text, Ring ring = Ring::rationals(), std::size_t n = 1) { return parse_center(text, ring, n); }

}  // namespace

TEST_CASE("reduced bases of random ideals satisfy Buchberger's criterion") {
    std::mt19937_64 rng(4242);
    const std::vector<MonomialOrder> orders{MonomialOrder::lex(), MonomialOrder::grevlex(),
                                            MonomialOrder::elimination(1), MonomialOrder::elimination(2)};
    for (std::uint64_t ch : {0ULL, 7ULL}) {
        const Ring r = Ring::from_characteristic(ch);
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<Polynomial> gens;
            for (int k = 0; k < 3; ++k) gens.push_back(random_poly(r, 3, rng, 3, 2));
            Ideal I(r, 3, gens);
            for (const auto& order : orders) {
                const auto& G = I.groebner_basis(order);
                CHECK(satisfies_buchberger_criterion(G, order));
                for (const auto& g : gens) CHECK(normal_form(g, G, order).is_zero());
            }
        }
    }
}

TEST_CASE("lex basis of a small system") {
    const Ring q = Ring::rationals();
    Ideal I(q, 2, {P("u1^2 + v1^2 - 1"), P("u1 - v1")});
    const auto& G = I.groebner_basis(MonomialOrder::lex());
    REQUIRE(G.size() == 2);
    CHECK(ideal_equal(Ideal(q, 2, G), Ideal(q, 2, {P("u1 - v1"), P("v1^2 - 1/2")})));
    CHECK(I.contains(P("2*u1^2 - 1")));
    CHECK_FALSE(I.contains(P("u1")));
}

TEST_CASE("intersections") {
    const Ring q = Ring::rationals();
    Ideal u(q, 2, {P("u1")}), v(q, 2, {P("v1")});
    CHECK(ideal_equal(ideal_intersect(u, v), Ideal(q, 2, {P("u1*v1")})));

    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 5; ++trial) {
        Ideal I(q, 2, {random_poly(q, 2, rng, 2, 2), random_poly(q, 2, rng, 2, 2)});
        Ideal J(q, 2, {random_poly(q, 2, rng, 2, 2)});
        Ideal K = ideal_intersect(I, J);
        for (const auto& g : K.generators()) {
            CHECK(ideal_member(g, I));
            CHECK(ideal_member(g, J));
        }
        // IJ is inside the intersection
        for (const auto& a : I.generators())
            for (const auto& b : J.generators()) CHECK(ideal_member(a * b, K));
    }
    Ideal a(q, 2, {P("u1^2"), P("u1*v1")}), b(q, 2, {P("v1^2")});
    CHECK(ideal_equal(ideal_intersect(a, b), Ideal(q, 2, {P("u1*v1^2"), P("u1^2*v1^2")})));
}

TEST_CASE("algebraic independence") {
    CHECK(algebraically_independent({P("u1"), P("u1*v1")}));
    CHECK_FALSE(algebraically_independent({P("u1"), P("u1^2")}));
    CHECK_FALSE(algebraically_independent({P("u1 + v1"), P("u1^2 + 2*u1*v1 + v1^2 + 1")}));
}

TEST_CASE("flatness probe reproduces the non-flat center map") {
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
        const Ring f = Ring::prime_field(p);
        Polynomial u = P("u1", f), v = P("v1", f);
        std::vector<Polynomial> gens{u, pow(u, p - 1) * pow(v, p)};
        Polynomial a1 = Polynomial::variable(f, 2, 0), a2 = Polynomial::variable(f, 2, 1);
        auto verdict = flatness_probe(gens, {pow(a1, p - 1)}, {a2});
        CHECK(verdict.violation);
        REQUIRE(verdict.witness.has_value());
        CHECK(*verdict.witness == gens[1]);
        CHECK(ideal_equal(verdict.abstract_intersection, Ideal(f, 2, {pow(a1, p - 1) * a2})));
        CHECK(ideal_equal(verdict.pushed_intersection, Ideal(f, 2, {pow(u, 2 * (p - 1)) * pow(v, p)})));
    }
    const Ring f3 = Ring::prime_field(3);
    auto id = flatness_probe({P("u1", f3), P("v1", f3)}, {P("u1", f3)}, {P("v1", f3)});
    CHECK_FALSE(id.violation);
    try {
        (void)flatness_probe({P("u1", f3), P("u1^2", f3)}, {P("u1", f3)}, {P("v1", f3)});
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DependentSubringGenerators);
    }
}

TEST_CASE("polynomial map inversion") {
    const Ring q = Ring::rationals();
    PolyMap m(q, 2, {P("u1 + v1^3"), P("v1")});
    PolyMap inv = invert_poly_map(m);
    CHECK(inv == PolyMap(q, 2, {P("u1 - v1^3"), P("v1")}));
    PolyMap tri(q, 4, {P("u1", q, 2), P("u2 + u1^2", q, 2), P("v1 + u2*v2", q, 2), P("v2", q, 2)});
    PolyMap tinv = invert_poly_map(tri);
    CHECK(compose(tri, tinv) == PolyMap::identity(q, 4));
    try {
        (void)invert_poly_map(PolyMap(q, 2, {P("u1"), P("u1*v1")}));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotInvertible);
    }
}

TEST_CASE("extension degrees") {
    const Ring q = Ring::rationals();
    CHECK(extension_degree(PolyMap::identity(q, 2)) == 1);
    CHECK(extension_degree(PolyMap(q, 2, {P("u1^2"), P("v1")})) == 2);
    CHECK(extension_degree(PolyMap(q, 2, {P("u1^2"), P("v1^3")})) == 6);
    CHECK(extension_degree(PolyMap(q, 2, {P("u1"), P("u1*v1")})) == 1);
    CHECK(extension_degree(PolyMap(q, 2, {P("u1 + v1"), P("u1*v1")})) == 2);
    for (std::uint64_t p : {2ULL, 3ULL}) {
        const Ring f = Ring::prime_field(p);
        Polynomial u = P("u1", f), v = P("v1", f);
        CHECK(extension_degree(PolyMap(f, 2, {u, pow(u, p - 1) * pow(v, p)})) == p);
    }
    try {
        (void)extension_degree(PolyMap(q, 2, {P("u1"), P("u1^2")}));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotGenericallyFinite);
    }
}

TEST_CASE("rational function coefficients") {
    FracCoeff a(P("u1^2 - 1"), P("u1 - 1"));
    CHECK(a.numerator() == P("u1 + 1"));
    CHECK(a.denominator() == P("1"));
    FracCoeff b(P("1"), P("2*u1"));
    CHECK((b * FracCoeff::from_polynomial(P("u1"))) == FracCoeff(P("1"), P("2")));
    CHECK((b - b).is_zero());
    CHECK((a / a) == a.one_like());
}
