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

#include "weylkit/center.hpp"

#include <algorithm>

namespace weylkit {

namespace {

void require_prime_field(const Ring& ring, const char* what) {
    if (!ring.is_prime_field())
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " needs coefficients in GF(p), got " + ring.name());
}

}  // namespace

bool has_p_divisible_support(const WeylElement& f) {
    const std::uint64_t p = f.ring().characteristic();
    for (const auto& [m, c] : f.terms())
        for (auto e : m) {
            if (p == 0 ? e != 0 : e % p != 0) return false;
        }
    return true;
}

bool is_central(const WeylElement& f) {
    const auto& sig = f.signature();
    bool central = true;
    for (std::size_t i = 0; i < sig.n && central; ++i)
        central = commutator(WeylElement::x(sig, i), f).is_zero() && commutator(WeylElement::d(sig, i), f).is_zero();
    if (central != has_p_divisible_support(f))
        throw Error(ErrorCode::Internal, "centrality by commutators disagrees with the exponent test for " + f.to_string());
    return central;
}

CommutativePoly to_center_coords(const WeylElement& f) {
    require_prime_field(f.ring(), "center coordinates");
    if (!has_p_divisible_support(f)) throw Error(ErrorCode::NotCentral, f.to_string() + " is not central");
    const auto p = static_cast<std::uint32_t>(f.ring().characteristic());
    CommutativePoly out(f.ring(), 2 * f.signature().n);
    for (const auto& [m, c] : f.terms()) {
        Exponents e(m);
        for (auto& v : e) v /= p;
        out.add_term(e, c);
    }
    return out;
}

WeylElement from_center_coords(const CommutativePoly& c, const AlgebraSignature& sig) {
    require_prime_field(sig.ring, "center coordinates");
    if (c.nvars() != 2 * sig.n)
        throw Error(ErrorCode::SignatureMismatch, "center polynomial needs " + std::to_string(2 * sig.n) + " variables");
    if (!(c.ring() == sig.ring)) throw Error(ErrorCode::RingMismatch, "center polynomial ring differs from algebra ring");
    const auto p = static_cast<std::uint32_t>(sig.ring.characteristic());
    WeylElement out(sig);
    for (const auto& [e, v] : c.terms()) {
        Monomial m(e);
        for (auto& x : m) x *= p;
        out.add_term(m, v);
    }
    return out;
}

CenterElement CenterElement::from_element(WeylElement f) {
    CommutativePoly c = to_center_coords(f);
    return CenterElement(std::move(f), std::move(c));
}

CenterElement CenterElement::from_coords(const CommutativePoly& c, const AlgebraSignature& sig) {
    return CenterElement(from_center_coords(c, sig), c);
}

std::vector<WeylElement> jacobson_s_terms(const WeylElement& a, const WeylElement& b) {
    require_prime_field(a.ring(), "Jacobson's formula");
    if (!(a.signature() == b.signature())) throw Error(ErrorCode::SignatureMismatch, "operands in different algebras");
    const auto p = a.ring().characteristic();
    const auto& sig = a.signature();

    // Element of A[t] as its coefficient list in t.
    std::vector<WeylElement> cur{a};
    for (std::uint64_t step = 0; step + 1 < p; ++step) {
        std::vector<WeylElement> next(cur.size() + 1, WeylElement(sig));
        for (std::size_t j = 0; j < cur.size(); ++j) {
            if (cur[j].is_zero()) continue;
            next[j + 1] += commutator(a, cur[j]);
            next[j] += commutator(b, cur[j]);
        }
        cur = std::move(next);
    }
    std::vector<WeylElement> s;
    s.reserve(p - 1);
    for (std::uint64_t i = 1; i < p; ++i) {
        WeylElement c = i - 1 < cur.size() ? cur[i - 1] : WeylElement(sig);
        c *= Coeff(a.ring(), static_cast<long>(i)).inverse();
        s.push_back(std::move(c));
    }
    return s;
}

WeylElement jacobson_pth_power(const WeylElement& a, const WeylElement& b) {
    const auto p = a.ring().characteristic();
    require_prime_field(a.ring(), "Jacobson's formula");
    WeylElement out = pow(a, p) + pow(b, p);
    for (auto& s : jacobson_s_terms(a, b)) out += s;
    return out;
}

CenterElement poisson_from_lift(const CenterElement& f, const CenterElement& g) {
    const auto& sig = f.element().signature();
    if (!(sig == g.element().signature())) throw Error(ErrorCode::SignatureMismatch, "operands in different algebras");
    const Ring zz = Ring::integers();
    const mpz_class p = static_cast<unsigned long>(sig.ring.characteristic());
    WeylElement lf = map_coefficients(f.element(), zz, [](const Coeff& c) { return canonical_lift(c); });
    WeylElement lg = map_coefficients(g.element(), zz, [](const Coeff& c) { return canonical_lift(c); });
    WeylElement br = commutator(lf, lg);

    WeylElement out(sig);
    for (const auto& [m, c] : br.terms()) {
        mpz_class v = c.rational().get_num();
        if (v % p != 0)
            throw Error(ErrorCode::NonDivisibleCommutator,
                        "coefficient " + v.get_str() + " of the lifted commutator is not divisible by " + p.get_str());
        out.add_term(m, from_integer(sig.ring, v / p));
    }
    return CenterElement::from_element(std::move(out));
}

namespace {

WeylElement ordered_product(std::span<const WeylElement> xs, std::span<const WeylElement> ds, const Exponents& cell,
                            std::vector<std::vector<WeylElement>>& xpow, std::vector<std::vector<WeylElement>>& dpow) {
    const std::size_t n = xs.size();
    auto power = [](std::vector<WeylElement>& cache, const WeylElement& base, std::uint32_t e) -> const WeylElement& {
        while (cache.size() <= e) cache.push_back(mul(cache.back(), base));
        return cache[e];
    };
    WeylElement out = WeylElement::scalar(xs[0].signature(), 1);
    for (std::size_t i = 0; i < n; ++i)
        if (cell[i] != 0) out = mul(out, power(xpow[i], xs[i], cell[i]));
    for (std::size_t i = 0; i < n; ++i)
        if (cell[n + i] != 0) out = mul(out, power(dpow[i], ds[i], cell[n + i]));
    return out;
}

std::vector<std::vector<WeylElement>> power_tables(std::span<const WeylElement> base) {
    std::vector<std::vector<WeylElement>> out;
    for (const auto& b : base) out.push_back({WeylElement::scalar(b.signature(), 1)});
    return out;
}

}  // namespace

WeylElement CBasisExpansion::reconstruct() const {
    if (images_x.empty()) throw Error(ErrorCode::InvalidArgument, "empty expansion");
    auto xpow = power_tables(images_x);
    auto dpow = power_tables(images_d);
    WeylElement out(images_x[0].signature());
    for (const auto& [cell, c] : coefficients)
        out += mul(c.element(), ordered_product(images_x, images_d, cell, xpow, dpow));
    return out;
}

CBasisExpansion express_in_c_basis(const WeylElement& f, std::span<const WeylElement> images_x,
                                   std::span<const WeylElement> images_d) {
    const auto& sig = f.signature();
    require_prime_field(sig.ring, "C-basis expansion");
    const std::size_t n = sig.n;
    if (images_x.size() != n || images_d.size() != n)
        throw Error(ErrorCode::SignatureMismatch, "need " + std::to_string(n) + " X and D images");
    for (std::size_t i = 0; i < n; ++i)
        if (!(images_x[i].signature() == sig) || !(images_d[i].signature() == sig))
            throw Error(ErrorCode::SignatureMismatch, "images live in a different algebra");
    if (auto v = find_relation_violation(images_x, images_d)) throw Error(ErrorCode::BadImages, v->describe());

    const auto p = static_cast<std::uint32_t>(sig.ring.characteristic());
    std::vector<Exponents> cells;
    Exponents cell(2 * n, 0);
    while (true) {
        cells.push_back(cell);
        std::size_t k = 0;
        for (; k < 2 * n; ++k) {
            if (++cell[k] < p) break;
            cell[k] = 0;
        }
        if (k == 2 * n) break;
    }
    std::sort(cells.begin(), cells.end(), DegLexGreater{});

    std::vector<Coeff> factorial{Coeff::one(sig.ring)};
    for (std::uint32_t k = 1; k < p; ++k) factorial.push_back(factorial.back() * Coeff(sig.ring, static_cast<long>(k)));

    CBasisExpansion out{{images_x.begin(), images_x.end()}, {images_d.begin(), images_d.end()}, {}};
    auto xpow = power_tables(images_x);
    auto dpow = power_tables(images_d);
    WeylElement rest = f;
    for (const auto& c : cells) {
        if (rest.is_zero()) break;
        WeylElement cur = rest;
        Coeff scale = Coeff::one(sig.ring);
        for (std::size_t i = 0; i < n && !cur.is_zero(); ++i) {
            cur = ad_power(images_x[i], c[n + i], cur);
            scale *= factorial[c[n + i]];
            if (c[n + i] % 2 == 1) scale = -scale;
        }
        for (std::size_t i = 0; i < n && !cur.is_zero(); ++i) {
            cur = ad_power(images_d[i], c[i], cur);
            scale *= factorial[c[i]];
        }
        if (cur.is_zero()) continue;
        cur *= scale.inverse();
        if (!has_p_divisible_support(cur))
            throw Error(ErrorCode::NotExpressible, "coefficient of cell " + std::to_string(out.coefficients.size()) +
                                                       " is not central: " + cur.to_string());
        rest -= mul(cur, ordered_product(images_x, images_d, c, xpow, dpow));
        out.coefficients.emplace(c, CenterElement::from_element(std::move(cur)));
    }
    if (!rest.is_zero())
        throw Error(ErrorCode::NotExpressible, "remainder " + rest.to_string() + " left after exhausting the basis");
    return out;
}

}  // namespace weylkit
