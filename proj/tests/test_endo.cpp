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
#include "weylkit/endo.hpp"

using namespace weylkit;
using namespace wk_test;

namespace {

EndoSpec flat_counterexample(std::uint64_t p) {
    return endo_from_strings(1, p, {"x1"}, {"d1 + x1^" + std::to_string(p - 1) + "*d1^" + std::to_string(p)});
}

ErrorCode code_of(const auto& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("validation") {
    CHECK_NOTHROW(endo_from_strings(1, 0, {"x1"}, {"d1 + x1^2"}));
    CHECK_NOTHROW(flat_counterexample(3));
    try {
        (void)endo_from_strings(1, 0, {"x1"}, {"x1"});
        FAIL("no error");
    } catch (const RelationViolationError& e) {
        CHECK(e.code() == ErrorCode::RelationViolation);
        CHECK(e.violation().kind == RelationViolation::Kind::DX);
        CHECK(e.violation().i == 0);
        CHECK(e.violation().j == 0);
    }
    CHECK(code_of([] { (void)endo_from_strings(1, 0, {"x1"}, {"2*d1"}); }) == ErrorCode::RelationViolation);
    CHECK(code_of([] { (void)endo_from_strings(2, 0, {"x1", "x2"}, {"d1 + d2", "d2"}); }) ==
          ErrorCode::RelationViolation);
}

TEST_CASE("degree") {
    CHECK(degree(EndoSpec::identity(AlgebraSignature(2, Ring::rationals()))) == 1);
    CHECK(degree(endo_from_strings(1, 0, {"x1"}, {"d1 + x1^2"})) == 2);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) CHECK(degree(flat_counterexample(p)) == 2 * p - 1);
}

TEST_CASE("reduction mod p") {
    EndoSpec half = endo_from_strings(1, 0, {"x1"}, {"d1 + (1/2)*x1^2"});
    CHECK(reduce_endo(half, 5) == endo_from_strings(1, 5, {"x1"}, {"d1 + 3*x1^2"}));
    CHECK(code_of([&] { (void)reduce_endo(half, 2); }) == ErrorCode::BadPrime);
    CHECK(code_of([&] { (void)reduce_endo(half, 4); }) == ErrorCode::NotPrime);
    AlgebraSignature q(1, Ring::rationals());
    CHECK(reduce_endo(EndoSpec::identity(q), 7) == EndoSpec::identity(AlgebraSignature(1, Ring::prime_field(7))));
}

TEST_CASE("composition convention and reduction commute") {
    EndoSpec s = endo_from_strings(1, 0, {"x1"}, {"d1 + x1^2"});
    EndoSpec t = endo_from_strings(1, 0, {"x1 + d1^2"}, {"d1"});
    // (s o t)(x) = s(x + d^2) = x + (d + x^2)^2
    CHECK(compose(s, t).images_x()[0] == parse_weyl("x1 + (d1 + x1^2)^2", s.signature()));
    auto lib = automorphism_library();
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 10; ++trial) {
        const auto& a = lib[rng() % 9];
        const auto& b = lib[rng() % 9];
        for (std::uint64_t p : {5ULL, 7ULL})
            CHECK(reduce_endo(compose(a.forward, b.forward), p) ==
                  compose(reduce_endo(a.forward, p), reduce_endo(b.forward, p)));
    }
}

TEST_CASE("center maps") {
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
        auto rep = center_map(flat_counterexample(p));
        const Ring f = rep.map.ring();
        Polynomial u = Polynomial::variable(f, 2, 0), v = Polynomial::variable(f, 2, 1);
        CHECK(rep.map[0] == u);
        CHECK(rep.map[1] == pow(u, p - 1) * pow(v, p));
        CHECK_FALSE(rep.symplectic);
    }
    auto id = center_map(EndoSpec::identity(AlgebraSignature(2, Ring::prime_field(3))));
    CHECK(id.map == PolyMap::identity(Ring::prime_field(3), 4));
    CHECK(id.symplectic);
    CHECK(id.jacobian_det == Polynomial::scalar(Ring::prime_field(3), 4, 1));
    EndoSpec s = endo_from_strings(1, 0, {"x1"}, {"d1 + x1^2"});
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
        auto rep = center_map(reduce_endo(s, p));
        CHECK(rep.symplectic);
        const Ring f = Ring::prime_field(p);
        CHECK((rep.jacobian_det == Polynomial::scalar(f, 2, 1) || rep.jacobian_det == Polynomial::scalar(f, 2, -1)));
    }
}

TEST_CASE("flatness report") {
    for (std::uint64_t p : {2ULL, 3ULL}) {
        auto verdicts = flatness_report(flat_counterexample(p));
        REQUIRE_FALSE(verdicts.empty());
        CHECK(verdicts[0].violation);
        REQUIRE(verdicts[0].witness.has_value());
        CHECK(*verdicts[0].witness == parse_center("u1^" + std::to_string(p - 1) + "*v1^" + std::to_string(p), Ring::prime_field(p), 1));
    }
    for (const auto& v : flatness_report(EndoSpec::identity(AlgebraSignature(1, Ring::prime_field(5)))))
        CHECK_FALSE(v.violation);
    for (const auto& v : flatness_report(endo_from_strings(1, 5, {"x1"}, {"d1 + x1^2"}))) CHECK_FALSE(v.violation);
}

TEST_CASE("inversion in characteristic p") {
    EndoSpec s = endo_from_strings(1, 5, {"x1"}, {"d1 + x1^2"});
    EndoSpec inv = invert_char_p(s);
    CHECK(inv == endo_from_strings(1, 5, {"x1"}, {"d1 - x1^2"}));
    CHECK(code_of([] { (void)invert_char_p(flat_counterexample(3)); }) == ErrorCode::NotAnAutomorphism);
    AlgebraSignature f7(2, Ring::prime_field(7));
    CHECK(invert_char_p(EndoSpec::identity(f7)) == EndoSpec::identity(f7));
    for (const auto& a : automorphism_library())
        if (a.forward.n() == 1) CHECK(invert_char_p(reduce_endo(a.forward, 7)) == reduce_endo(a.inverse, 7));
}

TEST_CASE("birationality degree") {
    CHECK(birationality_degree(EndoSpec::identity(AlgebraSignature(1, Ring::prime_field(3)))) == 1);
    CHECK(birationality_degree(flat_counterexample(2)) == 2);
    CHECK(birationality_degree(flat_counterexample(3)) == 3);
    CHECK(birationality_degree(reduce_endo(endo_from_strings(1, 0, {"x1"}, {"d1 + x1^2"}), 5), true) == 1);
}

TEST_CASE("inverse system") {
    AlgebraSignature q(1, Ring::rationals());
    InverseSystem id = assemble_inverse_system(EndoSpec::identity(q), 1);
    CHECK(id.unknowns.size() == 2 * filtration_dim(1, 1).get_ui());
    auto sol = id.encode(EndoSpec::identity(q));
    REQUIRE(sol.has_value());
    CHECK(id.is_solution(*sol));

    EndoSpec s = endo_from_strings(1, 0, {"x1"}, {"d1 + x1^2"});
    InverseSystem sys = assemble_inverse_system(s);
    CHECK(sys.bound == 2);
    CHECK(sys.unknowns.size() == 2 * filtration_dim(1, 2).get_ui());
    auto good = sys.encode(endo_from_strings(1, 0, {"x1"}, {"d1 - x1^2"}));
    REQUIRE(good.has_value());
    CHECK(sys.is_solution(*good));
    auto wrong = sys.encode(endo_from_strings(1, 0, {"x1"}, {"d1 + x1^2"}));
    REQUIRE(wrong.has_value());
    CHECK_FALSE(sys.is_solution(*wrong));

    AlgebraSignature q2(2, Ring::rationals());
    InverseSystem two = assemble_inverse_system(EndoSpec::identity(q2), 2);
    CHECK(two.unknowns.size() == 4 * filtration_dim(2, 2).get_ui());
    CHECK(two.is_solution(*two.encode(EndoSpec::identity(q2))));
}

TEST_CASE("rational reconstruction") {
    const mpz_class m = 5 * 7 * 11 * 13;
    mpz_class two_inv;
    mpz_class two = 2;
    mpz_invert(two_inv.get_mpz_t(), two.get_mpz_t(), m.get_mpz_t());
    CHECK(rational_reconstruct(two_inv, m) == mpq_class(1, 2));
    CHECK(rational_reconstruct(m - 3, m) == mpq_class(-3));
    CHECK(rational_reconstruct(0, m) == mpq_class(0));
    // 1/7 cannot be found modulo 5
    CHECK_FALSE(rational_reconstruct(3, 5).has_value());
}

TEST_CASE("inversion over QQ by CRT") {
    EndoSpec half = endo_from_strings(1, 0, {"x1"}, {"d1 + (1/2)*x1^2"});
    auto r = invert_char0_via_crt(half, {5, 7, 11, 13});
    CHECK(r.inverse == endo_from_strings(1, 0, {"x1"}, {"d1 - (1/2)*x1^2"}));
    CHECK(r.primes_used == std::vector<std::uint64_t>{5, 7, 11, 13});

    EndoSpec scale = endo_from_strings(1, 0, {"2*x1"}, {"(1/2)*d1"});
    CHECK(invert_char0_via_crt(scale, {2, 5, 7, 11}).inverse == endo_from_strings(1, 0, {"(1/2)*x1"}, {"2*d1"}));

    EndoSpec seventh = endo_from_strings(1, 0, {"x1"}, {"d1 + (1/7)*x1^2"});
    CHECK(code_of([&] { (void)invert_char0_via_crt(seventh, {5}); }) == ErrorCode::Inconclusive);
    CHECK(code_of([&] { (void)invert_char0_via_crt(seventh, {7}); }) == ErrorCode::Inconclusive);
    CHECK(code_of([&] { (void)invert_char0_via_crt(seventh, {6}); }) == ErrorCode::NotPrime);
}
