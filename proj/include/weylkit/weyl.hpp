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

#ifndef WEYLKIT_WEYL_HPP
#define WEYLKIT_WEYL_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weylkit/coeff.hpp"
#include "weylkit/monomial.hpp"

namespace weylkit {

// A_n(R): n pairs (x_i, d_i) over the coefficient ring R.
struct AlgebraSignature {
    std::size_t n;
    Ring ring;

    AlgebraSignature(std::size_t pairs, Ring r);
    friend bool operator==(const AlgebraSignature&, const AlgebraSignature&) = default;
};

// x^alpha d^beta, stored as (alpha_1..alpha_n, beta_1..beta_n).
using Monomial = Exponents;

Monomial make_monomial(std::span<const std::uint32_t> alpha, std::span<const std::uint32_t> beta);

// An element of A_n(R) in normal form: a finite sum of c * x^alpha d^beta with
// every x to the left of every d. Zero coefficients are never stored.
class WeylElement {
   public:
    using TermMap = std::map<Monomial, Coeff, DegLexGreater>;

    explicit WeylElement(AlgebraSignature sig) : sig_(std::move(sig)) {}

    static WeylElement constant(const AlgebraSignature& sig, const Coeff& c);
    static WeylElement scalar(const AlgebraSignature& sig, long c);
    static WeylElement x(const AlgebraSignature& sig, std::size_t i);  // 0-based
    static WeylElement d(const AlgebraSignature& sig, std::size_t i);  // 0-based
    static WeylElement term(const AlgebraSignature& sig, Monomial m, const Coeff& c);

    const AlgebraSignature& signature() const noexcept { return sig_; }
    const Ring& ring() const noexcept { return sig_.ring; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Coeff coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const Coeff& c);

    // Bernstein degree max |alpha|+|beta|; nullopt for zero.
    std::optional<std::uint64_t> degree() const;

    WeylElement operator-() const;
    WeylElement& operator+=(const WeylElement& rhs);
    WeylElement& operator-=(const WeylElement& rhs);
    WeylElement& operator*=(const Coeff& c);
    friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
    friend WeylElement operator*(WeylElement a, const Coeff& c) { return a *= c; }
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.sig_ == b.sig_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

   private:
    friend WeylElement mul(const WeylElement&, const WeylElement&);
    AlgebraSignature sig_;
    TermMap terms_;
};

// Normal form of f*g. Each pair of basis monomials is reordered index by
// index with d^m x^n = sum_k k! C(m,k) C(n,k) x^(n-k) d^(m-k); the integer
// factors are formed in ZZ before being mapped into the coefficient ring.
WeylElement mul(const WeylElement& f, const WeylElement& g);

WeylElement commutator(const WeylElement& f, const WeylElement& g);

// ad(d)^k (f) = [d, [d, ... [d, f]]]
WeylElement ad_power(const WeylElement& d, std::uint64_t k, const WeylElement& f);

// Binary powering with mul.
WeylElement pow(const WeylElement& f, std::uint64_t e);

// Substitution x_i -> images_x[i], d_i -> images_d[i], monomials expanded as
// X_1^a1 ... X_n^an D_1^b1 ... D_n^bn.
WeylElement apply_endo(std::span<const WeylElement> images_x, std::span<const WeylElement> images_d,
                       const WeylElement& f);

std::optional<std::uint64_t> bernstein_degree(const WeylElement& f);

// Number of monomials of Bernstein degree <= j in A_n: C(j + 2n, 2n).
mpz_class filtration_dim(std::size_t n, std::uint64_t j);

// k! C(m,k) C(n,k) for k = 0..min(m,n), as integers.
std::vector<mpz_class> reorder_coefficients(std::uint64_t m, std::uint64_t n);

// A violated defining relation among candidate generator images.
struct RelationViolation {
    enum class Kind { XX, DD, DX };  // [X_i,X_j] = 0, [D_i,D_j] = 0, [D_i,X_j] = delta_ij
    Kind kind;
    std::size_t i;
    std::size_t j;
    WeylElement residual;  // commutator minus its required value

    std::string describe() const;
};

// First violated relation among [X_i,X_j] = 0, [D_i,D_j] = 0, [D_i,X_j] = delta_ij.
std::optional<RelationViolation> find_relation_violation(std::span<const WeylElement> images_x,
                                                         std::span<const WeylElement> images_d);

// Coefficientwise image in another ring, e.g. reduction mod p or the
// canonical lift back to ZZ.
template <class Fn>
WeylElement map_coefficients(const WeylElement& f, Ring target, Fn&& fn) {
    WeylElement out(AlgebraSignature(f.signature().n, target));
    for (const auto& [m, c] : f.terms()) out.add_term(m, fn(c));
    return out;
}

}  // namespace weylkit

#endif
