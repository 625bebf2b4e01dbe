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

#ifndef WEYLKIT_TESTS_SUPPORT_HPP
#define WEYLKIT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "weylkit/endo.hpp"
#include "weylkit/expr.hpp"
#include "weylkit/weyl.hpp"

namespace wk_test {

using namespace weylkit;

inline mpz_class factorial(std::uint64_t k) {
    mpz_class r = 1;
    for (std::uint64_t i = 2; i <= k; ++i) r *= static_cast<unsigned long>(i);
    return r;
}

inline mpz_class binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

// Multiplication by word rewriting: a product of generators is normalised
// one adjacent swap at a time, d_i x_i -> x_i d_i + 1, every other
// out-of-order pair simply commuting. Shares nothing with the library's
// closed-form reordering.
class WordOracle {
   public:
    explicit WordOracle(const AlgebraSignature& sig) : sig_(sig) {}

    WeylElement mul(const WeylElement& a, const WeylElement& b) const {
        std::map<std::vector<std::uint32_t>, mpq_class> words;
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms()) {
                std::vector<std::uint32_t> w = word(ma);
                auto wb = word(mb);
                w.insert(w.end(), wb.begin(), wb.end());
                words[w] += value(ca) * value(cb);
            }
        return normalise(std::move(words));
    }

   private:
    std::vector<std::uint32_t> word(const Monomial& m) const {
        std::vector<std::uint32_t> w;
        for (std::uint32_t g = 0; g < 2 * sig_.n; ++g)
            for (std::uint32_t k = 0; k < m[g]; ++k) w.push_back(g);
        return w;
    }

    static mpq_class value(const Coeff& c) {
        return c.ring().is_prime_field() ? mpq_class(static_cast<unsigned long>(c.residue())) : c.rational();
    }

    WeylElement normalise(std::map<std::vector<std::uint32_t>, mpq_class> words) const {
        const std::uint32_t n = static_cast<std::uint32_t>(sig_.n);
        WeylElement out(sig_);
        while (!words.empty()) {
            auto node = words.extract(words.begin());
            std::vector<std::uint32_t> w = node.key();
            mpq_class c = node.mapped();
            if (c == 0) continue;
            auto it = std::adjacent_find(w.begin(), w.end(), [](auto l, auto r) { return l > r; });
            if (it == w.end()) {
                Monomial m(2 * n, 0);
                for (auto g : w) ++m[g];
                out.add_term(m, Coeff(sig_.ring, c));
                continue;
            }
            std::uint32_t l = *it, r = *(it + 1);
            std::size_t pos = static_cast<std::size_t>(it - w.begin());
            if (l >= n && r == l - n) {
                std::vector<std::uint32_t> shorter(w);
                shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(pos),
                              shorter.begin() + static_cast<std::ptrdiff_t>(pos + 2));
                words[shorter] += c;
            }
            std::swap(w[pos], w[pos + 1]);
            words[w] += c;
        }
        return out;
    }

    AlgebraSignature sig_;
};

inline WeylElement random_element(const AlgebraSignature& sig, std::mt19937_64& rng, int max_terms, int max_exp,
                                  int coeff_range = 5, bool allow_fractions = false) {
    std::uniform_int_distribution<int> terms(1, max_terms), ex(0, max_exp), co(-coeff_range, coeff_range),
        den(1, 3);
    WeylElement f(sig);
    int k = terms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m(2 * sig.n);
        for (auto& e : m) e = static_cast<std::uint32_t>(ex(rng));
        mpq_class q(co(rng), allow_fractions ? den(rng) : 1);
        q.canonicalize();
        if (sig.ring.is_prime_field() && q.get_den() % static_cast<unsigned long>(sig.ring.characteristic()) == 0)
            continue;
        f.add_term(m, Coeff(sig.ring, q));
    }
    return f;
}

inline Polynomial random_poly(Ring ring, std::size_t nvars, std::mt19937_64& rng, int max_terms, int max_exp) {
    std::uniform_int_distribution<int> terms(1, max_terms), ex(0, max_exp), co(-4, 4);
    Polynomial f(ring, nvars);
    int k = terms(rng);
    for (int t = 0; t < k; ++t) {
        Exponents e(nvars);
        for (auto& v : e) v = static_cast<std::uint32_t>(ex(rng));
        f.add_term(e, Coeff(ring, static_cast<long>(co(rng))));
    }
    return f;
}

inline EndoSpec endo_from_strings(std::size_t n, std::uint64_t characteristic, const std::vector<std::string>& xs,
                                  const std::vector<std::string>& ds) {
    AlgebraSignature sig(n, Ring::from_characteristic(characteristic));
    std::vector<WeylElement> ix, id;
    for (const auto& s : xs) ix.push_back(parse_weyl(s, sig));
    for (const auto& s : ds) id.push_back(parse_weyl(s, sig));
    return EndoSpec(sig, std::move(ix), std::move(id));
}

// Library of char-0 automorphisms built from shears (x, d + q(x)),
// (x + r(d), d) and linear symplectic maps, with hand-computed inverses.
struct KnownAutomorphism {
    std::string name;
    EndoSpec forward;
    EndoSpec inverse;
};

inline std::vector<KnownAutomorphism> automorphism_library() {
    std::vector<KnownAutomorphism> lib;
    auto add = [&](std::string name, std::size_t n, std::vector<std::string> fx, std::vector<std::string> fd,
                   std::vector<std::string> gx, std::vector<std::string> gd) {
        lib.push_back({std::move(name), endo_from_strings(n, 0, fx, fd), endo_from_strings(n, 0, gx, gd)});
    };
    // elementary pieces in A_1
    const EndoSpec s1 = endo_from_strings(1, 0, {"x1"}, {"d1 + x1^2"});
    const EndoSpec s1i = endo_from_strings(1, 0, {"x1"}, {"d1 - x1^2"});
    const EndoSpec t1 = endo_from_strings(1, 0, {"x1 + d1^2"}, {"d1"});
    const EndoSpec t1i = endo_from_strings(1, 0, {"x1 - d1^2"}, {"d1"});
    const EndoSpec half = endo_from_strings(1, 0, {"x1"}, {"d1 + (1/2)*x1^2"});
    const EndoSpec halfi = endo_from_strings(1, 0, {"x1"}, {"d1 - (1/2)*x1^2"});
    const EndoSpec lin = endo_from_strings(1, 0, {"2*x1 + d1"}, {"x1 + d1"});
    const EndoSpec lini = endo_from_strings(1, 0, {"x1 - d1"}, {"-x1 + 2*d1"});
    const EndoSpec cub = endo_from_strings(1, 0, {"x1 + (1/3)*d1^3"}, {"d1"});
    const EndoSpec cubi = endo_from_strings(1, 0, {"x1 - (1/3)*d1^3"}, {"d1"});

    auto both = [&](std::string name, const EndoSpec& a, const EndoSpec& ai, const EndoSpec& b, const EndoSpec& bi) {
        lib.push_back({std::move(name), compose(a, b), compose(bi, ai)});
    };
    lib.push_back({"shear", s1, s1i});
    lib.push_back({"half-shear", half, halfi});
    lib.push_back({"linear", lin, lini});
    both("shear*tshear", s1, s1i, t1, t1i);
    both("tshear*shear", t1, t1i, s1, s1i);
    both("linear*half", lin, lini, half, halfi);
    both("cubic*shear", cub, cubi, s1, s1i);
    both("half*linear", half, halfi, lin, lini);
    add("scaling", 1, {"2*x1"}, {"(1/2)*d1"}, {"(1/2)*x1"}, {"2*d1"});
    // A_2
    add("coupled", 2, {"x1", "x2"}, {"d1 + x2", "d2 + x1 + x2^2"}, {"x1", "x2"}, {"d1 - x2", "d2 - x1 - x2^2"});
    add("swap*shear", 2, {"x2", "x1"}, {"d2 + x2^2", "d1"}, {"x2", "x1"}, {"d2", "d1 - x1^2"});
    const KnownAutomorphism c = lib[lib.size() - 2], w = lib.back();
    lib.push_back({"coupled*swap", compose(c.forward, w.forward), compose(w.inverse, c.inverse)});
    return lib;
}

}  // namespace wk_test

#endif
