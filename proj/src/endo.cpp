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

#include "weylkit/endo.hpp"

#include <algorithm>
#include <exception>
#include <future>
#include <map>
#include <unordered_map>

namespace weylkit {

namespace {

void check_images(const AlgebraSignature& sig, std::span<const WeylElement> xs, std::span<const WeylElement> ds) {
    if (xs.size() != sig.n || ds.size() != sig.n)
        throw Error(ErrorCode::SignatureMismatch, "an endomorphism of A_" + std::to_string(sig.n) + " needs " +
                                                      std::to_string(sig.n) + " images of each kind");
    for (std::size_t i = 0; i < sig.n; ++i)
        if (!(xs[i].signature() == sig) || !(ds[i].signature() == sig))
            throw Error(ErrorCode::SignatureMismatch, "image " + std::to_string(i + 1) + " lives in a different algebra");
}

EndoSpec map_endo(const EndoSpec& e, Ring target, const auto& fn) {
    std::vector<WeylElement> xs, ds;
    for (const auto& f : e.images_x()) xs.push_back(map_coefficients(f, target, fn));
    for (const auto& f : e.images_d()) ds.push_back(map_coefficients(f, target, fn));
    return EndoSpec(AlgebraSignature(e.n(), target), std::move(xs), std::move(ds));
}

EndoSpec to_rationals(const EndoSpec& e) {
    if (e.ring().kind() == RingKind::Rationals) return e;
    return map_endo(e, Ring::rationals(), [](const Coeff& c) { return Coeff(Ring::rationals(), c.rational()); });
}

void require_char_p(const EndoSpec& e, const char* what) {
    if (!e.ring().is_prime_field())
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " needs an endomorphism over GF(p), got " + e.ring().name());
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

EndoSpec::EndoSpec(AlgebraSignature sig, std::vector<WeylElement> images_x, std::vector<WeylElement> images_d)
    : sig_(std::move(sig)), images_x_(std::move(images_x)), images_d_(std::move(images_d)) {
    check_images(sig_, images_x_, images_d_);
    if (auto v = validate(images_x_, images_d_)) throw RelationViolationError(std::move(*v));
}

EndoSpec EndoSpec::identity(const AlgebraSignature& sig) {
    std::vector<WeylElement> xs, ds;
    for (std::size_t i = 0; i < sig.n; ++i) {
        xs.push_back(WeylElement::x(sig, i));
        ds.push_back(WeylElement::d(sig, i));
    }
    return EndoSpec(sig, std::move(xs), std::move(ds));
}

std::optional<RelationViolation> validate(std::span<const WeylElement> images_x, std::span<const WeylElement> images_d) {
    return find_relation_violation(images_x, images_d);
}

std::uint64_t degree(const EndoSpec& e) {
    std::uint64_t d = 0;
    for (const auto* side : {&e.images_x(), &e.images_d()})
        for (const auto& f : *side) d = std::max<std::uint64_t>(d, f.degree().value_or(0));
    return d;
}

bool is_good_prime(const EndoSpec& e, std::uint64_t p) {
    if (e.ring().is_prime_field()) return false;
    const mpz_class pz = static_cast<unsigned long>(p);
    for (const auto* side : {&e.images_x(), &e.images_d()})
        for (const auto& f : *side)
            for (const auto& [m, c] : f.terms())
                if (c.rational().get_den() % pz == 0) return false;
    return true;
}

EndoSpec reduce_endo(const EndoSpec& e, std::uint64_t p) {
    if (e.ring().is_prime_field())
        throw Error(ErrorCode::InvalidArgument, "reduction needs an endomorphism over ZZ or QQ, got " + e.ring().name());
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (!is_good_prime(e, p))
        throw Error(ErrorCode::BadPrime, std::to_string(p) + " divides a coefficient denominator");
    const Ring target = Ring::prime_field(p);
    return map_endo(e, target, [p](const Coeff& c) { return reduce_mod_p(c, static_cast<std::uint32_t>(p)); });
}

EndoSpec compose(const EndoSpec& e1, const EndoSpec& e2) {
    if (!(e1.signature() == e2.signature()))
        throw Error(ErrorCode::SignatureMismatch, "cannot compose endomorphisms of different algebras");
    std::vector<WeylElement> xs, ds;
    for (const auto& f : e2.images_x()) xs.push_back(e1.apply(f));
    for (const auto& f : e2.images_d()) ds.push_back(e1.apply(f));
    return EndoSpec(e1.signature(), std::move(xs), std::move(ds));
}

WeylElement pth_power(const WeylElement& f) {
    const auto p = f.ring().characteristic();
    if (p == 0) throw Error(ErrorCode::InvalidArgument, "p-th power needs characteristic p");
    WeylElement out = f;
    for (std::uint64_t k = 1; k < p; ++k) out = mul(f, out);
    return out;
}

CenterMapReport center_map(const EndoSpec& e) {
    require_char_p(e, "the center map");
    const Ring ring = e.ring();
    const std::size_t n = e.n();
    std::vector<WeylElement> powers;
    std::vector<Polynomial> comps;
    for (const auto* side : {&e.images_x(), &e.images_d()})
        for (const auto& f : *side) {
            WeylElement fp = pth_power(f);
            if (!has_p_divisible_support(fp))
                throw Error(ErrorCode::CentralityFailure, "(" + f.to_string() + ")^p is not central");
            comps.push_back(to_center_coords(fp));
            powers.push_back(std::move(fp));
        }
    PolyMap map(ring, 2 * n, std::move(comps));
    SymplecticCertificate cert = is_symplectic(map);
    return CenterMapReport{std::move(map), std::move(cert.jacobian_det), cert.symplectic, std::move(cert.brackets),
                           std::move(powers)};
}

std::vector<IdealPair> default_flatness_probes(const EndoSpec& e) {
    require_char_p(e, "flatness probes");
    const Ring ring = e.ring();
    const std::size_t n = e.n();
    const auto p = ring.characteristic();
    auto a = [&](std::size_t k) { return Polynomial::variable(ring, 2 * n, k); };
    std::vector<IdealPair> out;
    out.push_back({{pow(a(0), p - 1)}, {a(n)}});
    for (std::size_t i = 0; i < n; ++i) out.push_back({{a(i)}, {a(n + i)}});
    return out;
}

std::vector<FlatnessVerdict> flatness_report(const EndoSpec& e, const std::vector<IdealPair>& probes) {
    CenterMapReport rep = center_map(e);
    if (!algebraically_independent(rep.map.components()))
        throw Error(ErrorCode::InvalidArgument, "the center map is not injective");
    std::vector<FlatnessVerdict> out;
    for (const auto& pr : probes) out.push_back(flatness_probe(rep.map.components(), pr.i_gens, pr.j_gens));
    return out;
}

std::vector<FlatnessVerdict> flatness_report(const EndoSpec& e) { return flatness_report(e, default_flatness_probes(e)); }

EndoSpec invert_char_p(const EndoSpec& e) {
    require_char_p(e, "inversion");
    const auto& sig = e.signature();
    const std::size_t n = e.n();
    CenterMapReport rep = center_map(e);
    std::optional<PolyMap> psi;
    try {
        psi = invert_poly_map(rep.map);
    } catch (const Error& err) {
        if (err.code() != ErrorCode::NotInvertible) throw;
        throw Error(ErrorCode::NotAnAutomorphism, "the center map has no polynomial inverse");
    }

    auto preimage = [&](const WeylElement& g) {
        CBasisExpansion ex = express_in_c_basis(g, e.images_x(), e.images_d());
        WeylElement out(sig);
        for (const auto& [cell, c] : ex.coefficients) {
            WeylElement pulled = from_center_coords(psi->apply(c.coords()), sig);
            out += mul(pulled, WeylElement::term(sig, cell, Coeff::one(sig.ring)));
        }
        return out;
    };
    std::vector<WeylElement> xs, ds;
    for (std::size_t i = 0; i < n; ++i) {
        xs.push_back(preimage(WeylElement::x(sig, i)));
        ds.push_back(preimage(WeylElement::d(sig, i)));
    }
    EndoSpec inv(sig, std::move(xs), std::move(ds));
    const EndoSpec id = EndoSpec::identity(sig);
    if (!(compose(e, inv) == id) || !(compose(inv, e) == id))
        throw Error(ErrorCode::Internal, "assembled inverse does not compose to the identity");
    if (degree(inv) > ipow(degree(e), 2 * n - 1))
        throw Error(ErrorCode::Internal, "inverse degree " + std::to_string(degree(inv)) + " exceeds deg^(2n-1)");
    return inv;
}

std::uint64_t birationality_degree(const EndoSpec& e, bool from_char0) {
    require_char_p(e, "birationality degree");
    if (e.n() != 1) throw Error(ErrorCode::InvalidArgument, "birationality degree is implemented for n = 1");
    CenterMapReport rep = center_map(e);
    std::uint64_t d = extension_degree(rep.map);
    if (from_char0 && d > ipow(degree(e), 2 * e.n()))
        throw Error(ErrorCode::Internal, "extension degree " + std::to_string(d) + " exceeds deg^(2n)");
    return d;
}

std::size_t InverseSystem::unknown_index(bool is_mu, std::size_t i, std::size_t monomial) const {
    return (is_mu ? n * monomials.size() : 0) + i * monomials.size() + monomial;
}

std::optional<std::vector<Coeff>> InverseSystem::encode(const EndoSpec& candidate) const {
    const Ring ring = candidate.ring();
    std::map<Monomial, std::size_t> index;
    for (std::size_t k = 0; k < monomials.size(); ++k) index.emplace(monomials[k], k);
    std::vector<Coeff> values(unknowns.size(), Coeff::zero(ring));
    for (int side = 0; side < 2; ++side)
        for (std::size_t i = 0; i < n; ++i) {
            const WeylElement& f = side == 0 ? candidate.images_x()[i] : candidate.images_d()[i];
            for (const auto& [m, c] : f.terms()) {
                auto it = index.find(m);
                if (it == index.end()) return std::nullopt;
                values[unknown_index(side == 1, i, it->second)] = c;
            }
        }
    return values;
}

bool InverseSystem::is_solution(const std::vector<Coeff>& values) const {
    if (values.size() != unknowns.size()) throw Error(ErrorCode::InvalidArgument, "wrong number of values");
    for (const auto& eq : equations) {
        Coeff sum = Coeff::zero(eq.ring());
        for (const auto& [e, c] : eq.terms()) {
            Coeff t = c;
            for (std::size_t k = 0; k < e.size(); ++k)
                if (e[k] != 0) t *= values[k].pow(e[k]);
            sum += t;
        }
        if (!sum.is_zero()) return false;
    }
    return true;
}

InverseSystem assemble_inverse_system(const EndoSpec& e, std::optional<std::uint64_t> bound_opt) {
    const auto& sig = e.signature();
    const Ring ring = sig.ring;
    const std::size_t n = sig.n;
    const std::uint64_t bound = bound_opt.value_or(ipow(degree(e), 2 * n - 1));

    InverseSystem sys{n, bound, {}, {}, {}};
    Monomial cur(2 * n, 0);
    while (true) {
        if (total_degree(cur) <= bound) sys.monomials.push_back(cur);
        std::size_t k = 0;
        for (; k < 2 * n; ++k) {
            if (++cur[k] <= bound) break;
            cur[k] = 0;
        }
        if (k == 2 * n) break;
    }
    std::sort(sys.monomials.begin(), sys.monomials.end(),
              [](const Monomial& a, const Monomial& b) { return DegLexGreater{}(b, a); });
    const std::size_t K = sys.monomials.size();
    for (int side = 0; side < 2; ++side)
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& m : sys.monomials) {
                std::string name = std::string(side == 0 ? "lambda" : "mu") + std::to_string(i + 1);
                for (auto v : m) name += "_" + std::to_string(v);
                sys.unknowns.push_back(std::move(name));
            }
    const std::size_t N = sys.unknowns.size();

    std::vector<WeylElement> basis;
    for (const auto& m : sys.monomials) basis.push_back(WeylElement::term(sig, m, Coeff::one(ring)));

    // [m_a, m_b] for a < b; the rest by antisymmetry
    std::vector<WeylElement> brackets(K * K, WeylElement(sig));
    for (std::size_t a = 0; a < K; ++a)
        for (std::size_t b = a + 1; b < K; ++b) {
            brackets[a * K + b] = commutator(basis[a], basis[b]);
            brackets[b * K + a] = -brackets[a * K + b];
        }

    auto unknown = [&](std::size_t u) {
        Exponents ex(N, 0);
        ex[u] = 1;
        return ex;
    };
    auto emit = [&](std::map<Monomial, Polynomial, DegLexGreater>& eqs) {
        for (auto& [m, poly] : eqs)
            if (!poly.is_zero()) sys.equations.push_back(std::move(poly));
    };
    // [A, B] - delta where A, B are the candidates starting at unknown offsets oa, ob
    auto bracket_equations = [&](std::size_t oa, std::size_t ob, bool delta) {
        std::map<Monomial, Polynomial, DegLexGreater> eqs;
        for (std::size_t a = 0; a < K; ++a)
            for (std::size_t b = 0; b < K; ++b)
                for (const auto& [m, c] : brackets[a * K + b].terms()) {
                    Exponents ex(N, 0);
                    ex[oa + a] += 1;
                    ex[ob + b] += 1;
                    eqs.try_emplace(m, ring, N).first->second.add_term(ex, c);
                }
        if (delta) eqs.try_emplace(Monomial(2 * n, 0), ring, N).first->second.add_term(Exponents(N, 0), -Coeff::one(ring));
        emit(eqs);
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            bracket_equations(sys.unknown_index(true, i, 0), sys.unknown_index(true, j, 0), false);
            bracket_equations(sys.unknown_index(false, i, 0), sys.unknown_index(false, j, 0), false);
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            bracket_equations(sys.unknown_index(true, i, 0), sys.unknown_index(false, j, 0), i == j);

    std::vector<WeylElement> images;
    for (const auto& m : basis) images.push_back(e.apply(m));
    for (int side = 0; side < 2; ++side)
        for (std::size_t i = 0; i < n; ++i) {
            std::map<Monomial, Polynomial, DegLexGreater> eqs;
            for (std::size_t a = 0; a < K; ++a)
                for (const auto& [m, c] : images[a].terms())
                    eqs.try_emplace(m, ring, N).first->second.add_term(unknown(sys.unknown_index(side == 1, i, a)), c);
            Monomial target(2 * n, 0);
            target[(side == 1 ? n : 0) + i] = 1;
            eqs.try_emplace(target, ring, N).first->second.add_term(Exponents(N, 0), -Coeff::one(ring));
            emit(eqs);
        }
    return sys;
}

std::optional<mpq_class> rational_reconstruct(const mpz_class& r, const mpz_class& modulus) {
    if (modulus <= 1) return std::nullopt;
    mpz_class bound = sqrt(modulus / 2);
    mpz_class r0 = modulus, r1 = r % modulus;
    if (r1 < 0) r1 += modulus;
    mpz_class t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    mpz_class g = gcd(r1, t1);
    if (g != 1) return std::nullopt;
    mpq_class out(r1, t1);
    out.canonicalize();
    return out;
}

CrtInversion invert_char0_via_crt(const EndoSpec& e, const std::vector<std::uint64_t>& primes) {
    if (e.ring().is_prime_field())
        throw Error(ErrorCode::InvalidArgument, "CRT inversion needs an endomorphism over ZZ or QQ");
    const EndoSpec eq = to_rationals(e);
    const auto& sig = eq.signature();
    const std::size_t n = sig.n;

    std::vector<std::uint64_t> good, skipped;
    for (auto p : primes) {
        if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
        (is_good_prime(eq, p) ? good : skipped).push_back(p);
    }
    if (good.empty()) throw Error(ErrorCode::Inconclusive, "no good prime in the budget");

    std::vector<std::future<EndoSpec>> jobs;
    for (auto p : good)
        jobs.push_back(std::async(std::launch::async, [&eq, p] { return invert_char_p(reduce_endo(eq, p)); }));
    std::vector<EndoSpec> local;
    std::optional<std::uint64_t> witness;
    std::exception_ptr other;
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        try {
            local.push_back(jobs[k].get());
        } catch (const Error& err) {
            if (err.code() == ErrorCode::NotAnAutomorphism) {
                if (!witness) witness = good[k];
            } else if (!other) {
                other = std::current_exception();
            }
        }
    }
    if (witness)
        throw Error(ErrorCode::NotAnAutomorphism,
                    "reduction mod " + std::to_string(*witness) + " is not an automorphism");
    if (other) std::rethrow_exception(other);

    mpz_class modulus = 1;
    for (auto p : good) modulus *= static_cast<unsigned long>(p);

    auto lift = [&](auto pick) {
        std::vector<WeylElement> out;
        for (std::size_t i = 0; i < n; ++i) {
            std::map<Monomial, mpz_class, DegLexGreater> acc;
            mpz_class m = 1;
            std::vector<std::map<Monomial, mpz_class, DegLexGreater>> residues;
            for (std::size_t k = 0; k < good.size(); ++k) {
                std::map<Monomial, mpz_class, DegLexGreater> res;
                for (const auto& [mono, c] : pick(local[k])[i].terms())
                    res.emplace(mono, mpz_class(static_cast<unsigned long>(c.residue())));
                residues.push_back(std::move(res));
                for (const auto& [mono, v] : residues.back()) acc.try_emplace(mono, 0);
            }
            for (std::size_t k = 0; k < good.size(); ++k) {
                const mpz_class p = static_cast<unsigned long>(good[k]);
                mpz_class minv;
                mpz_invert(minv.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
                for (auto& [mono, x] : acc) {
                    auto it = residues[k].find(mono);
                    mpz_class r = it == residues[k].end() ? mpz_class(0) : it->second;
                    mpz_class t = ((r - x) * minv) % p;
                    if (t < 0) t += p;
                    x += m * t;
                }
                m *= p;
            }
            WeylElement f(sig);
            for (const auto& [mono, x] : acc) {
                auto q = rational_reconstruct(x, modulus);
                if (!q)
                    throw Error(ErrorCode::Inconclusive,
                                "rational reconstruction failed modulo " + modulus.get_str() + "; try more primes");
                f.add_term(mono, Coeff(sig.ring, *q));
            }
            out.push_back(std::move(f));
        }
        return out;
    };
    auto xs = lift([](const EndoSpec& s) -> const std::vector<WeylElement>& { return s.images_x(); });
    auto ds = lift([](const EndoSpec& s) -> const std::vector<WeylElement>& { return s.images_d(); });

    std::optional<EndoSpec> candidate;
    try {
        candidate.emplace(sig, std::move(xs), std::move(ds));
    } catch (const Error& err) {
        if (err.code() != ErrorCode::RelationViolation) throw;
        throw Error(ErrorCode::Inconclusive, "reconstructed candidate violates the Weyl relations; try more primes");
    }
    const EndoSpec id = EndoSpec::identity(sig);
    if (!(compose(eq, *candidate) == id) || !(compose(*candidate, eq) == id))
        throw Error(ErrorCode::Inconclusive, "reconstructed candidate is not an inverse over QQ; try more primes");
    return CrtInversion{std::move(*candidate), good, skipped, modulus};
}

}  // namespace weylkit
