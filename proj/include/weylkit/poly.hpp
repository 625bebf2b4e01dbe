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

#ifndef WEYLKIT_POLY_HPP
#define WEYLKIT_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "weylkit/coeff.hpp"
#include "weylkit/monomial.hpp"

namespace weylkit {

// Sparse commutative polynomial in nvars variables. The center ring of A_n
// in characteristic p uses nvars = 2n with variables (u_1..u_n, v_1..v_n),
// u_i standing for x_i^p and v_i for d_i^p.
class Polynomial {
   public:
    using TermMap = std::map<Exponents, Coeff, DegLexGreater>;

    Polynomial(Ring ring, std::size_t nvars) : ring_(ring), nvars_(nvars) {}

    static Polynomial constant(Ring ring, std::size_t nvars, const Coeff& c);
    static Polynomial scalar(Ring ring, std::size_t nvars, long c);
    static Polynomial variable(Ring ring, std::size_t nvars, std::size_t i);
    static Polynomial term(Ring ring, Exponents e, const Coeff& c);

    const Ring& ring() const noexcept { return ring_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    std::size_t size() const noexcept { return terms_.size(); }

    Coeff coefficient(const Exponents& e) const;
    void add_term(const Exponents& e, const Coeff& c);

    // Total degree; 0 for constants and for zero.
    std::uint64_t degree() const noexcept;
    std::uint32_t degree_in(std::size_t var) const noexcept;
    bool involves(std::size_t var) const noexcept { return degree_in(var) != 0; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Coeff& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Coeff& c) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.ring_ == b.ring_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    // Default names: u1..un, v1..vn when nvars is even, z1..zN otherwise.
    std::string to_string() const;
    std::string to_string(const std::vector<std::string>& names) const;

   private:
    Ring ring_;
    std::size_t nvars_;
    TermMap terms_;
};

// The center ring of A_n: 2n variables.
using CommutativePoly = Polynomial;

Polynomial pow(const Polynomial& f, std::uint64_t e);
Polynomial derivative(const Polynomial& f, std::size_t var);

// f(values[0], ..., values[nvars-1]); all values share a ring and a variable count.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> values);

// Re-embed into a ring with more (or permuted) variables: slot i of f goes to slot placement[i].
Polynomial embed(const Polynomial& f, std::size_t nvars, std::span<const std::size_t> placement);

// {f, g} = sum_i (df/du_i dg/dv_i - df/dv_i dg/du_i) on 2n variables.
Polynomial poisson(const Polynomial& f, const Polynomial& g);

// Exact quotient; throws NonUnitDivision when b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

// Monic gcd over QQ or GF(p) (recursive primitive remainder sequences).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Scale so that the leading coefficient (canonical order) is 1.
Polynomial make_monic(const Polynomial& f);

// Ring endomorphism of k[z_1..z_N] given by z_i -> components[i].
class PolyMap {
   public:
    PolyMap(Ring ring, std::size_t nvars, std::vector<Polynomial> components);

    static PolyMap identity(Ring ring, std::size_t nvars);

    const Ring& ring() const noexcept { return ring_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const std::vector<Polynomial>& components() const noexcept { return components_; }
    const Polynomial& operator[](std::size_t i) const { return components_[i]; }

    Polynomial apply(const Polynomial& f) const { return substitute(f, components_); }
    std::uint64_t degree() const noexcept;

    friend bool operator==(const PolyMap&, const PolyMap&) = default;

   private:
    Ring ring_;
    std::size_t nvars_;
    std::vector<Polynomial> components_;
};

// Point-map composition outer o inner: z_i -> outer_i(inner_1, ..., inner_N).
PolyMap compose(const PolyMap& outer, const PolyMap& inner);

class SquareMatrixPoly {
   public:
    SquareMatrixPoly(Ring ring, std::size_t nvars, std::size_t dim);

    static SquareMatrixPoly identity(Ring ring, std::size_t nvars, std::size_t dim);
    // (0, I_n; -I_n, 0)
    static SquareMatrixPoly symplectic_form(Ring ring, std::size_t n);

    std::size_t dim() const noexcept { return dim_; }
    const Ring& ring() const noexcept { return ring_; }
    std::size_t nvars() const noexcept { return nvars_; }
    Polynomial& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const Polynomial& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    SquareMatrixPoly transpose() const;
    friend SquareMatrixPoly operator*(const SquareMatrixPoly& a, const SquareMatrixPoly& b);
    friend bool operator==(const SquareMatrixPoly&, const SquareMatrixPoly&) = default;

    std::string to_string() const;

   private:
    Ring ring_;
    std::size_t nvars_;
    std::size_t dim_;
    std::vector<Polynomial> entries_;
};

// entry (i, j) = d m_i / d z_j
SquareMatrixPoly jacobian(const PolyMap& m);

// Cofactor expansion up to 4x4, fraction-free (Bareiss) elimination above.
Polynomial det(const SquareMatrixPoly& m);

// entry (i, j) = {m_i, m_j}
SquareMatrixPoly bracket_matrix(const PolyMap& m);

struct SymplecticCertificate {
    bool symplectic;
    SquareMatrixPoly brackets;
    Polynomial jacobian_det;
};

// Symplectic iff bracket_matrix(m) == H. A symplectic map whose Jacobian
// determinant is not +-1 raises Internal.
SymplecticCertificate is_symplectic(const PolyMap& m);

}  // namespace weylkit

#endif
