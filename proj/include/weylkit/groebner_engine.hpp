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

#ifndef WEYLKIT_GROEBNER_ENGINE_HPP
#define WEYLKIT_GROEBNER_ENGINE_HPP

// Buchberger's algorithm over an arbitrary exact field type F. F must provide
// + - * / unary-, ==, is_zero(), one_like() and zero_like().

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "weylkit/monomial.hpp"

namespace weylkit {

enum class OrderKind { Lex, Grevlex, Block };

// Lex, graded reverse lex, or the elimination order that compares the first
// `split` variables by grevlex and breaks ties by grevlex on the rest.
class MonomialOrder {
   public:
    static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, 0); }
    static MonomialOrder grevlex() { return MonomialOrder(OrderKind::Grevlex, 0); }
    static MonomialOrder elimination(std::size_t split) { return MonomialOrder(OrderKind::Block, split); }

    OrderKind kind() const noexcept { return kind_; }
    std::size_t split() const noexcept { return split_; }

    // <0, 0, >0 as a is smaller, equal, larger than b
    int compare(const Exponents& a, const Exponents& b) const noexcept;
    bool greater(const Exponents& a, const Exponents& b) const noexcept { return compare(a, b) > 0; }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

   private:
    MonomialOrder(OrderKind kind, std::size_t split) : kind_(kind), split_(split) {}
    OrderKind kind_;
    std::size_t split_;
};

inline int grevlex_compare(const Exponents& a, const Exponents& b, std::size_t lo, std::size_t hi) noexcept {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
}

inline int MonomialOrder::compare(const Exponents& a, const Exponents& b) const noexcept {
    switch (kind_) {
        case OrderKind::Lex:
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
            return 0;
        case OrderKind::Grevlex: return grevlex_compare(a, b, 0, a.size());
        case OrderKind::Block: {
            int c = grevlex_compare(a, b, 0, split_);
            return c != 0 ? c : grevlex_compare(a, b, split_, a.size());
        }
    }
    return 0;
}

template <class F>
struct GTerm {
    Exponents e;
    F c;
};

// Polynomial as a vector of terms sorted strictly decreasing in the order.
template <class F>
using GPoly = std::vector<GTerm<F>>;

inline bool exponent_divides(const Exponents& a, const Exponents& b) noexcept {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exponents exponent_lcm(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

inline bool exponent_coprime(const Exponents& a, const Exponents& b) noexcept {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

template <class F>
class Buchberger {
   public:
    explicit Buchberger(MonomialOrder order) : order_(order) {}

    const MonomialOrder& order() const noexcept { return order_; }

    void sort(GPoly<F>& f) const {
        std::sort(f.begin(), f.end(), [&](const GTerm<F>& a, const GTerm<F>& b) { return order_.greater(a.e, b.e); });
    }

    // f - c * z^shift * g
    GPoly<F> sub_scaled(const GPoly<F>& f, const F& c, const Exponents& shift, const GPoly<F>& g) const {
        GPoly<F> out;
        out.reserve(f.size() + g.size());
        std::size_t i = 0, j = 0;
        Exponents e(shift.size());
        auto shifted = [&](std::size_t k) {
            for (std::size_t v = 0; v < e.size(); ++v) e[v] = g[k].e[v] + shift[v];
        };
        if (j < g.size()) shifted(j);
        while (i < f.size() || j < g.size()) {
            int cmp;
            if (i == f.size())
                cmp = -1;
            else if (j == g.size())
                cmp = 1;
            else
                cmp = order_.compare(f[i].e, e);
            if (cmp > 0) {
                out.push_back(f[i++]);
            } else if (cmp < 0) {
                out.push_back({e, -(c * g[j].c)});
                if (++j < g.size()) shifted(j);
            } else {
                F v = f[i].c - c * g[j].c;
                if (!v.is_zero()) out.push_back({e, std::move(v)});
                ++i;
                if (++j < g.size()) shifted(j);
            }
        }
        return out;
    }

    void make_monic(GPoly<F>& f) const {
        if (f.empty()) return;
        F lead = f.front().c;
        for (auto& t : f) t.c = t.c / lead;
    }

    // Fully reduced normal form of f modulo G.
    GPoly<F> normal_form(GPoly<F> f, const std::vector<GPoly<F>>& basis) const {
        GPoly<F> rem;
        Exponents shift;
        while (!f.empty()) {
            const GPoly<F>* divisor = nullptr;
            for (const auto& g : basis)
                if (!g.empty() && exponent_divides(g.front().e, f.front().e)) {
                    divisor = &g;
                    break;
                }
            if (divisor == nullptr) {
                rem.push_back(std::move(f.front()));
                f.erase(f.begin());
                continue;
            }
            shift.assign(f.front().e.size(), 0);
            for (std::size_t v = 0; v < shift.size(); ++v) shift[v] = f.front().e[v] - divisor->front().e[v];
            F c = f.front().c / divisor->front().c;
            f = sub_scaled(f, c, shift, *divisor);
        }
        return rem;
    }

    GPoly<F> s_polynomial(const GPoly<F>& f, const GPoly<F>& g) const {
        Exponents l = exponent_lcm(f.front().e, g.front().e);
        Exponents sf(l.size()), sg(l.size());
        for (std::size_t v = 0; v < l.size(); ++v) {
            sf[v] = l[v] - f.front().e[v];
            sg[v] = l[v] - g.front().e[v];
        }
        // (l / lt f) f / lc f - (l / lt g) g / lc g
        GPoly<F> zero;
        GPoly<F> left = sub_scaled(zero, -(f.front().c.one_like() / f.front().c), sf, f);
        return sub_scaled(left, g.front().c.one_like() / g.front().c, sg, g);
    }

    // Reduced Groebner basis, monic, sorted by decreasing leading monomial.
    std::vector<GPoly<F>> basis(std::vector<GPoly<F>> gens) const {
        std::vector<GPoly<F>> G;
        for (auto& g : gens) {
            if (g.empty()) continue;
            sort(g);
            make_monic(g);
            G.push_back(std::move(g));
        }
        std::set<std::pair<std::size_t, std::size_t>> pending;
        for (std::size_t j = 0; j < G.size(); ++j)
            for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);

        while (!pending.empty()) {
            // normal selection: smallest lcm, ties by insertion indices
            auto best = pending.begin();
            Exponents best_lcm = exponent_lcm(G[best->first].front().e, G[best->second].front().e);
            for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
                Exponents l = exponent_lcm(G[it->first].front().e, G[it->second].front().e);
                if (order_.compare(l, best_lcm) < 0) {
                    best = it;
                    best_lcm = std::move(l);
                }
            }
            auto [i, j] = *best;
            pending.erase(best);

            if (exponent_coprime(G[i].front().e, G[j].front().e)) continue;
            if (chain_criterion(G, pending, i, j, best_lcm)) continue;

            GPoly<F> h = normal_form(s_polynomial(G[i], G[j]), G);
            if (h.empty()) continue;
            make_monic(h);
            std::size_t k = G.size();
            G.push_back(std::move(h));
            for (std::size_t a = 0; a < k; ++a) pending.emplace(a, k);
        }
        return reduce_basis(std::move(G));
    }

    // Every S-polynomial reduces to zero.
    bool is_groebner_basis(const std::vector<GPoly<F>>& G) const {
        for (std::size_t j = 0; j < G.size(); ++j)
            for (std::size_t i = 0; i < j; ++i)
                if (!normal_form(s_polynomial(G[i], G[j]), G).empty()) return false;
        return true;
    }

   private:
    static bool chain_criterion(const std::vector<GPoly<F>>& G, const std::set<std::pair<std::size_t, std::size_t>>& pending,
                                std::size_t i, std::size_t j, const Exponents& l) {
        auto is_pending = [&](std::size_t a, std::size_t b) {
            return pending.count({std::min(a, b), std::max(a, b)}) != 0;
        };
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (k == i || k == j) continue;
            if (!exponent_divides(G[k].front().e, l)) continue;
            if (!is_pending(i, k) && !is_pending(j, k)) return true;
        }
        return false;
    }

    std::vector<GPoly<F>> reduce_basis(std::vector<GPoly<F>> G) const {
        // drop elements whose leading monomial is divisible by another's
        std::vector<GPoly<F>> minimal;
        for (std::size_t a = 0; a < G.size(); ++a) {
            bool redundant = false;
            for (std::size_t b = 0; b < G.size() && !redundant; ++b) {
                if (a == b) continue;
                const auto& ea = G[a].front().e;
                const auto& eb = G[b].front().e;
                if (exponent_divides(eb, ea) && (eb != ea || b < a)) redundant = true;
            }
            if (!redundant) minimal.push_back(G[a]);
        }
        std::vector<GPoly<F>> reduced;
        for (std::size_t a = 0; a < minimal.size(); ++a) {
            std::vector<GPoly<F>> others;
            for (std::size_t b = 0; b < minimal.size(); ++b)
                if (b != a) others.push_back(minimal[b]);
            GPoly<F> tail(minimal[a].begin() + 1, minimal[a].end());
            GPoly<F> r = normal_form(std::move(tail), others);
            r.insert(r.begin(), minimal[a].front());
            make_monic(r);
            reduced.push_back(std::move(r));
        }
        std::sort(reduced.begin(), reduced.end(),
                  [&](const GPoly<F>& a, const GPoly<F>& b) { return order_.greater(a.front().e, b.front().e); });
        return reduced;
    }

    MonomialOrder order_;
};

}  // namespace weylkit

#endif
