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

#include <fstream>
#include <sstream>

#include "support.hpp"
#include "weylkit/spec_io.hpp"

using namespace weylkit;
using namespace wk_test;

namespace {

ErrorCode code_of(const auto& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::Internal;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("precedence and associativity") {
    AlgebraSignature q(1, Ring::rationals());
    CHECK(parse_weyl("1 + 2*3^2", q) == WeylElement::scalar(q, 19));
    CHECK(parse_weyl("-x1^2", q) == -pow(WeylElement::x(q, 0), 2));
    CHECK(parse_weyl("2 - 3 - 4", q) == WeylElement::scalar(q, -5));
    CHECK(parse_weyl("--x1", q) == WeylElement::x(q, 0));
    CHECK(parse_weyl(" d1 *  x1 ", q) == parse_weyl("x1*d1+1", q));
    CHECK(parse_weyl("(1/2)*x1 + 3/4", q).to_string() == "(1/2)*x1 + 3/4");
    CHECK(parse_weyl("4/6", q) == WeylElement::constant(q, Coeff(q.ring, mpq_class(2, 3))));
    CHECK(parse_weyl("x1^0", q) == WeylElement::scalar(q, 1));
}

TEST_CASE("parse errors carry positions") {
    AlgebraSignature q(1, Ring::rationals());
    try {
        (void)parse_weyl("x1 + * d1", q);
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
    try {
        (void)parse_weyl("x1 + ", q);
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
    CHECK(code_of([&] { (void)parse_weyl("(x1", q); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { (void)parse_weyl("x", q); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { (void)parse_weyl("x1 y1", q); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { (void)parse_weyl("x1/2", q); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { (void)parse_weyl("x2", q); }) == ErrorCode::IndexOutOfRange);
    CHECK(code_of([&] { (void)parse_weyl("x0", q); }) == ErrorCode::IndexOutOfRange);
    CHECK(code_of([&] { (void)parse_weyl("x1^-2", q); }) == ErrorCode::NegativeExponent);
    CHECK(code_of([&] { (void)parse_weyl("1/0", q); }) == ErrorCode::DivisionByZero);
    CHECK(code_of([&] { (void)parse_weyl("u1", q); }) == ErrorCode::InvalidArgument);
    AlgebraSignature f5(1, Ring::prime_field(5));
    CHECK(code_of([&] { (void)parse_weyl("1/5", f5); }) == ErrorCode::BadPrimeDenominator);
    CHECK(parse_weyl("1/2", f5) == WeylElement::scalar(f5, 3));
}

TEST_CASE("center coordinates in expressions") {
    AlgebraSignature f3(1, Ring::prime_field(3));
    CHECK(parse_weyl("u1*v1", f3) == parse_weyl("x1^3*d1^3", f3));
    Polynomial c = parse_center("u1^2*v1^3", Ring::prime_field(3), 1);
    CHECK(c.to_string() == "u1^2*v1^3");
    CHECK(code_of([] { (void)parse_center("x1", Ring::prime_field(3), 1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("parse(print(e)) == e on random normal forms") {
    std::mt19937_64 rng(123456);
    int checked = 0;
    for (std::uint64_t ch : {0ULL, 5ULL})
        for (std::size_t n : {1U, 2U})
            for (int trial = 0; trial < 50; ++trial) {
                AlgebraSignature sig(n, Ring::from_characteristic(ch));
                WeylElement e = random_element(sig, rng, 6, 4, 9, ch == 0);
                std::string text = e.to_string();
                CHECK_MESSAGE(parse_weyl(text, sig) == e, text);
                CHECK(parse_weyl(text, sig).to_string() == text);
                ++checked;
            }
    CHECK(checked == 200);
}

TEST_CASE("endomorphism JSON") {
    EndoSpec e = endo_from_json(R"({"n": 1, "char": 0, "images": {"x1": "x1", "d1": "d1 + (1/2)*x1^2"}})");
    CHECK(e.images_d()[0].to_string() == "(1/2)*x1^2 + d1");
    std::string out = endo_to_json(e);
    CHECK(endo_from_json(out) == e);
    CHECK(out.find("\"format\": 1") != std::string::npos);

    EndoSpec flat = endo_from_json(slurp(WEYLKIT_FIXTURES "/flatcex_p3.json"));
    CHECK(flat.ring() == Ring::prime_field(3));
    CHECK(degree(flat) == 5);

    CHECK(code_of([] { (void)endo_from_json("{"); }) == ErrorCode::InvalidSpec);
    CHECK(code_of([] { (void)endo_from_json(R"({"format": 2, "n": 1, "char": 0, "images": {}})"); }) ==
          ErrorCode::InvalidSpec);
    CHECK(code_of([] { (void)endo_from_json(R"({"n": 1, "char": 0, "images": {"x1": "x1"}})"); }) ==
          ErrorCode::InvalidSpec);
    CHECK(code_of([] {
              (void)endo_from_json(R"({"n": 1, "char": 0, "images": {"x1": "x1", "d1": "d1", "x2": "x1"}})");
          }) == ErrorCode::InvalidSpec);
    CHECK(code_of([] { (void)endo_from_json(R"({"n": 1, "char": 4, "images": {"x1": "x1", "d1": "d1"}})"); }) ==
          ErrorCode::NotPrime);
    CHECK(code_of([] { (void)endo_from_json(R"({"n": 1, "char": 0, "images": {"x1": "x1", "d1": "x1"}})"); }) ==
          ErrorCode::RelationViolation);
    CHECK(code_of([] { (void)endo_from_json(R"({"n": 1, "char": 0, "images": {"x1": "x1", "d1": "d1 +"}})"); }) ==
          ErrorCode::ParseError);
}
