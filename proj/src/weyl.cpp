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

#include "weylkit/weyl.hpp"

#include <algorithm>
#include <unordered_map>

namespace weylkit {

AlgebraSignature::AlgebraSignature(std::size_t pairs, Ring r) : n(pairs), ring(r) {
    if (pairs == 0) throw Error(ErrorCode::InvalidArgument, "a Weyl algebra needs at least one pair of generators");
}

Monomial make_monomial(std::span<const std::uint32_t> alpha, std::span<const std::uint32_t> beta) {
    if (alpha.size() != beta.size())
        throw Error(ErrorCode::InvalidArgument, "alpha and beta must have the same length");
    Monomial m(alpha.begin(), alpha.end());
    m.insert(m.end(), beta.begin(), beta.end());
    return m;
}

WeylElement WeylElement::constant(const AlgebraSignature& sig, const Coeff& c) {
    return term(sig, Monomial(2 * sig.n, 0), c);
}

WeylElement WeylElement::scalar(const AlgebraSignature& sig, long c) { return constant(sig, Coeff(sig.ring, c)); }

WeylElement WeylElement::x(const AlgebraSignature& sig, std::size_t i) {
    if (i >= sig.n) throw Error(ErrorCode::IndexOutOfRange, "x" + std::to_string(i + 1) + " outside A_" + std::to_string(sig.n));
    Monomial m(2 * sig.n, 0);
    m[i] = 1;
    return term(sig, std::move(m), Coeff::one(sig.ring));
}

WeylElement WeylElement::d(const AlgebraSignature& sig, std::size_t i) {
    if (i >= sig.n) throw Error(ErrorCode::IndexOutOfRange, "d" + std::to_string(i + 1) + " outside A_" + std::to_string(sig.n));
    Monomial m(2 * sig.n, 0);
    m[sig.n + i] = 1;
    return term(sig, std::move(m), Coeff::one(sig.ring));
}

WeylElement WeylElement::term(const AlgebraSignature& sig, Monomial m, const Coeff& c) {
    if (m.size() != 2 * sig.n) throw Error(ErrorCode::SignatureMismatch, "monomial length does not match signature");
    WeylElement out(sig);
    out.add_term(m, c);
    return out;
}

Coeff WeylElement::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff::zero(sig_.ring) : it->second;
}

void WeylElement::add_term(const Monomial& m, const Coeff& c) {
    if (c.is_zero()) return;
    if (!(c.ring() == sig_.ring)) throw Error(ErrorCode::RingMismatch, "coefficient ring differs from algebra ring");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<std::uint64_t> WeylElement::degree() const {
    if (terms_.empty()) return std::nullopt;
    return total_degree(terms_.begin()->first);
}

WeylElement WeylElement::operator-() const {
    WeylElement out(sig_);
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
    return out;
}

namespace {

void require_same_signature(const AlgebraSignature& a, const AlgebraSignature& b) {
    if (!(a == b))
        throw Error(ErrorCode::SignatureMismatch, "operands live in A_" + std::to_string(a.n) + "(" + a.ring.name() +
                                                      ") and A_" + std::to_string(b.n) + "(" + b.ring.name() + ")");
}

}  // namespace

WeylElement& WeylElement::operator+=(const WeylElement& rhs) {
    require_same_signature(sig_, rhs.sig_);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& rhs) {
    require_same_signature(sig_, rhs.sig_);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

WeylElement& WeylElement::operator*=(const Coeff& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    // Over GF(p) the scalar is a unit, over ZZ/QQ there are no zero divisors.
    return *this;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) { return mul(a, b); }

std::string WeylElement::to_string() const {
    std::vector<std::pair<const Exponents*, const Coeff*>> view;
    view.reserve(terms_.size());
    for (const auto& [m, c] : terms_) view.emplace_back(&m, &c);
    return render_terms(view, weyl_names(sig_.n));
}

std::vector<mpz_class> reorder_coefficients(std::uint64_t m, std::uint64_t n) {
    std::uint64_t top = std::min(m, n);
    std::vector<mpz_class> out;
    out.reserve(top + 1);
    mpz_class t = 1;
    out.push_back(t);
    for (std::uint64_t k = 1; k <= top; ++k) {
        // t_k = t_{k-1} (m-k+1)(n-k+1) / k, exact in ZZ.
        t *= static_cast<unsigned long>(m - k + 1);
        t *= static_cast<unsigned long>(n - k + 1);
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
        out.push_back(t);
    }
    return out;
}

namespace {

class ReorderCache {
   public:
    explicit ReorderCache(Ring ring) : ring_(ring) {}

    const std::vector<Coeff>& get(std::uint32_t m, std::uint32_t n) {
        std::uint64_t key = (std::uint64_t{m} << 32) | n;
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        std::vector<Coeff> values;
        for (const auto& z : reorder_coefficients(m, n)) values.push_back(from_integer(ring_, z));
        return cache_.emplace(key, std::move(values)).first->second;
    }

   private:
    Ring ring_;
    std::unordered_map<std::uint64_t, std::vector<Coeff>> cache_;
};

using Accumulator = std::unordered_map<Monomial, Coeff, ExponentsHash>;

// Expand (c_a x^a1 d^b1) * (c_b x^a2 d^b2) into acc.
void multiply_monomials(const Monomial& left, const Monomial& right, const Coeff& scale, std::size_t n,
                        ReorderCache& cache, Accumulator& acc) {
    // Per index i the factor d_i^{b1_i} x_i^{a2_i} contributes k_i = 0..min.
    std::vector<const std::vector<Coeff>*> factors(n);
    for (std::size_t i = 0; i < n; ++i) factors[i] = &cache.get(left[n + i], right[i]);

    Monomial base(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        base[i] = left[i] + right[i];
        base[n + i] = left[n + i] + right[n + i];
    }

    std::vector<std::size_t> k(n, 0);
    Monomial current = base;
    while (true) {
        Coeff c = scale;
        bool zero = false;
        for (std::size_t i = 0; i < n && !zero; ++i) {
            const Coeff& f = (*factors[i])[k[i]];
            if (f.is_zero())
                zero = true;
            else if (k[i] != 0)
                c *= f;
        }
        if (!zero && !c.is_zero()) {
            for (std::size_t i = 0; i < n; ++i) {
                current[i] = base[i] - static_cast<std::uint32_t>(k[i]);
                current[n + i] = base[n + i] - static_cast<std::uint32_t>(k[i]);
            }
            auto [it, inserted] = acc.try_emplace(current, c);
            if (!inserted) it->second += c;
        }
        // odometer over k
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (k[i] + 1 < factors[i]->size()) {
                ++k[i];
                break;
            }
            k[i] = 0;
        }
        if (i == n) break;
    }
}

}  // namespace

WeylElement mul(const WeylElement& f, const WeylElement& g) {
    require_same_signature(f.signature(), g.signature());
    const std::size_t n = f.signature().n;
    WeylElement out(f.signature());
    if (f.is_zero() || g.is_zero()) return out;

    ReorderCache cache(f.ring());
    Accumulator acc;
    acc.reserve(f.size() * g.size());
    for (const auto& [ma, ca] : f.terms())
        for (const auto& [mb, cb] : g.terms()) multiply_monomials(ma, mb, ca * cb, n, cache, acc);

    for (auto& [m, c] : acc)
        if (!c.is_zero()) out.terms_.emplace(m, std::move(c));
    return out;
}

WeylElement commutator(const WeylElement& f, const WeylElement& g) { return mul(f, g) - mul(g, f); }

WeylElement ad_power(const WeylElement& d, std::uint64_t k, const WeylElement& f) {
    require_same_signature(d.signature(), f.signature());
    WeylElement out = f;
    for (std::uint64_t i = 0; i < k && !out.is_zero(); ++i) out = commutator(d, out);
    return out;
}

WeylElement pow(const WeylElement& f, std::uint64_t e) {
    WeylElement result = WeylElement::scalar(f.signature(), 1);
    WeylElement base = f;
    while (e != 0) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e != 0) base = mul(base, base);
    }
    return result;
}

WeylElement apply_endo(std::span<const WeylElement> images_x, std::span<const WeylElement> images_d,
                       const WeylElement& f) {
    const std::size_t n = f.signature().n;
    if (images_x.size() != n || images_d.size() != n)
        throw Error(ErrorCode::SignatureMismatch, "endomorphism needs exactly n images of x and of d");
    const AlgebraSignature& target = images_x[0].signature();
    for (std::size_t i = 0; i < n; ++i) {
        require_same_signature(target, images_x[i].signature());
        require_same_signature(target, images_d[i].signature());
    }
    if (!(target.ring == f.ring())) throw Error(ErrorCode::RingMismatch, "images and argument use different rings");

    // powers[slot][k] = image(slot)^k, grown on demand
    std::vector<std::vector<WeylElement>> powers(2 * n);
    auto power_of = [&](std::size_t slot, std::uint32_t k) -> const WeylElement& {
        auto& table = powers[slot];
        const WeylElement& gen = slot < n ? images_x[slot] : images_d[slot - n];
        if (table.empty()) table.push_back(WeylElement::scalar(target, 1));
        while (table.size() <= k) table.push_back(mul(table.back(), gen));
        return table[k];
    };

    WeylElement out(target);
    for (const auto& [m, c] : f.terms()) {
        WeylElement prod = WeylElement::constant(target, c);
        for (std::size_t slot = 0; slot < 2 * n; ++slot)
            if (m[slot] != 0) prod = mul(prod, power_of(slot, m[slot]));
        out += prod;
    }
    return out;
}

std::optional<std::uint64_t> bernstein_degree(const WeylElement& f) { return f.degree(); }

mpz_class filtration_dim(std::size_t n, std::uint64_t j) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(j + 2 * n), static_cast<unsigned long>(2 * n));
    return out;
}

std::string RelationViolation::describe() const {
    std::string a = std::to_string(i + 1), b = std::to_string(j + 1);
    std::string rel;
    switch (kind) {
        case Kind::XX: rel = "[X" + a + ", X" + b + "] = 0"; break;
        case Kind::DD: rel = "[D" + a + ", D" + b + "] = 0"; break;
        case Kind::DX: rel = "[D" + a + ", X" + b + "] = " + (i == j ? "1" : "0"); break;
    }
    return rel + " fails, residual " + residual.to_string();
}

std::optional<RelationViolation> find_relation_violation(std::span<const WeylElement> images_x,
                                                         std::span<const WeylElement> images_d) {
    const std::size_t n = images_x.size();
    if (images_d.size() != n) throw Error(ErrorCode::SignatureMismatch, "need as many D images as X images");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            WeylElement r = commutator(images_x[i], images_x[j]);
            if (!r.is_zero()) return RelationViolation{RelationViolation::Kind::XX, i, j, r};
            r = commutator(images_d[i], images_d[j]);
            if (!r.is_zero()) return RelationViolation{RelationViolation::Kind::DD, i, j, r};
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            WeylElement r = commutator(images_d[i], images_x[j]);
            if (i == j) r -= WeylElement::scalar(r.signature(), 1);
            if (!r.is_zero()) return RelationViolation{RelationViolation::Kind::DX, i, j, r};
        }
    return std::nullopt;
}

}  // namespace weylkit
