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

#ifndef WEYLKIT_ENDO_HPP
#define WEYLKIT_ENDO_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weylkit/center.hpp"
#include "weylkit/groebner.hpp"
#include "weylkit/poly.hpp"
#include "weylkit/weyl.hpp"

namespace weylkit {

// Endomorphism of A_n(R) given by X_i = phi(x_i), D_i = phi(d_i).
class EndoSpec {
   public:
    // Throws RelationViolation (ErrorCode::RelationViolation) when the
    // images do not satisfy the Weyl relations.
    EndoSpec(AlgebraSignature sig, std::vector<WeylElement> images_x, std::vector<WeylElement> images_d);

    static EndoSpec identity(const AlgebraSignature& sig);

    const AlgebraSignature& signature() const noexcept { return sig_; }
    const Ring& ring() const noexcept { return sig_.ring; }
    std::size_t n() const noexcept { return sig_.n; }
    const std::vector<WeylElement>& images_x() const noexcept { return images_x_; }
    const std::vector<WeylElement>& images_d() const noexcept { return images_d_; }

    WeylElement apply(const WeylElement& f) const { return apply_endo(images_x_, images_d_, f); }

    friend bool operator==(const EndoSpec&, const EndoSpec&) = default;

   private:
    AlgebraSignature sig_;
    std::vector<WeylElement> images_x_;
    std::vector<WeylElement> images_d_;
};

class RelationViolationError : public Error {
   public:
    explicit RelationViolationError(RelationViolation v)
        : Error(ErrorCode::RelationViolation, v.describe()), violation_(std::move(v)) {}
    const RelationViolation& violation() const noexcept { return violation_; }

   private:
    RelationViolation violation_;
};

std::optional<RelationViolation> validate(std::span<const WeylElement> images_x, std::span<const WeylElement> images_d);

// max Bernstein degree of the 2n images
std::uint64_t degree(const EndoSpec& e);

// Throws NotPrime, BadPrime (p divides a denominator) or InvalidArgument
// (source not over ZZ or QQ).
EndoSpec reduce_endo(const EndoSpec& e, std::uint64_t p);

bool is_good_prime(const EndoSpec& e, std::uint64_t p);

// (e1 o e2)(f) = e1(e2(f)): e1 is applied to e2's images.
EndoSpec compose(const EndoSpec& e1, const EndoSpec& e2);

struct CenterMapReport {
    PolyMap map;  // u_i -> coords(X_i^p), v_i -> coords(D_i^p)
    Polynomial jacobian_det;
    bool symplectic;
    SquareMatrixPoly brackets;
    std::vector<WeylElement> pth_powers;  // X_1^p..X_n^p, D_1^p..D_n^p, each certified central
};

// Throws CentralityFailure if some X_i^p or D_i^p is not central.
CenterMapReport center_map(const EndoSpec& e);

// X^p by repeated multiplication with the (usually sparse) base.
WeylElement pth_power(const WeylElement& f);

struct IdealPair {
    std::vector<Polynomial> i_gens;  // in the coordinates a_1..a_2n of the image subring
    std::vector<Polynomial> j_gens;
};

// (a_1^(p-1)), (a_{n+1}) followed by (a_i), (a_{n+i}) for each i.
std::vector<IdealPair> default_flatness_probes(const EndoSpec& e);

// Runs the Matsumura probe on the center map for each pair. Throws
// InvalidArgument when the center map is not injective.
std::vector<FlatnessVerdict> flatness_report(const EndoSpec& e, const std::vector<IdealPair>& probes);
std::vector<FlatnessVerdict> flatness_report(const EndoSpec& e);

// Inverse of an automorphism over GF(p); throws NotAnAutomorphism when the
// center map has no polynomial inverse.
EndoSpec invert_char_p(const EndoSpec& e);

// [Frac C : Frac phi(C)] for n = 1. `from_char0` turns on the deg(e)^(2n)
// bound check.
std::uint64_t birationality_degree(const EndoSpec& e, bool from_char0 = false);

// Unknowns lambda^i_{ab}, mu^i_{ab} (coefficients of the candidate inverse
// images q_i of x_i and p_i of d_i) for |a| + |b| <= bound, and the
// coefficient equations of
//   [p_i, p_j] = 0, [q_i, q_j] = 0, [p_i, q_j] = delta_ij,
//   x_i = sum lambda^i_{ab} X^a D^b, d_i = sum mu^i_{ab} X^a D^b.
struct InverseSystem {
    std::size_t n;
    std::uint64_t bound;
    std::vector<Monomial> monomials;       // the x^a d^b with |a| + |b| <= bound
    std::vector<std::string> unknowns;     // lambda1_..., then mu1_...
    std::vector<Polynomial> equations;     // in k[unknowns], each must vanish

    std::size_t unknown_index(bool is_mu, std::size_t i, std::size_t monomial) const;

    // Coefficient vector of a candidate inverse; nullopt if it has a term
    // outside the bound.
    std::optional<std::vector<Coeff>> encode(const EndoSpec& candidate) const;
    bool is_solution(const std::vector<Coeff>& values) const;
};

// bound defaults to deg(e)^(2n-1)
InverseSystem assemble_inverse_system(const EndoSpec& e, std::optional<std::uint64_t> bound = std::nullopt);

struct CrtInversion {
    EndoSpec inverse;
    std::vector<std::uint64_t> primes_used;
    std::vector<std::uint64_t> primes_skipped;  // divide a denominator
    mpz_class modulus;
};

// Inverts modulo each good prime (in parallel), CRT-combines the
// coefficients, reconstructs rationals and verifies the candidate exactly.
// Throws NotAnAutomorphism naming the first prime whose reduction is not an
// automorphism, Inconclusive when reconstruction or verification fails.
CrtInversion invert_char0_via_crt(const EndoSpec& e, const std::vector<std::uint64_t>& primes);

// a/b with |a|, b <= sqrt(M/2) and a = r b mod M, if one exists.
std::optional<mpq_class> rational_reconstruct(const mpz_class& r, const mpz_class& modulus);

}  // namespace weylkit

#endif
