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

#include "weylkit/groebner.hpp"

#include <functional>

namespace weylkit {

GPoly<Coeff> to_gpoly(const Polynomial& f, const MonomialOrder& order) {
    GPoly<Coeff> out;
    out.reserve(f.size());
    for (const auto& [e, c] : f.terms()) out.push_back({e, c});
    Buchberger<Coeff>(order).sort(out);
    return out;
}

Polynomial from_gpoly(const GPoly<Coeff>& f, Ring ring, std::size_t nvars) {
    Polynomial out(ring, nvars);
    for (const auto& t : f) out.add_term(t.e, t.c);
    return out;
}

namespace {

void require_field(const Ring& ring) {
    if (!ring.is_field()) throw Error(ErrorCode::InvalidArgument, "Groebner computations need field coefficients");
}

}  // namespace

Ideal::Ideal(Ring ring, std::size_t nvars, std::vector<Polynomial> generators)
    : ring_(ring), nvars_(nvars) {
    require_field(ring);
    for (auto& g : generators) {
        if (!(g.ring() == ring) || g.nvars() != nvars)
            throw Error(ErrorCode::SignatureMismatch, "ideal generator has the wrong ring or variable count");
        if (!g.is_zero()) generators_.push_back(std::move(g));
    }
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& order) const {
    if (has_cached_basis(order)) return cache_;
    Buchberger<Coeff> engine(order);
    std::vector<GPoly<Coeff>> gens;
    for (const auto& g : generators_) gens.push_back(to_gpoly(g, order));
    cache_.clear();
    for (const auto& g : engine.basis(std::move(gens))) cache_.push_back(from_gpoly(g, ring_, nvars_));
    cache_order_ = order;
    return cache_;
}

bool Ideal::contains(const Polynomial& f) const { return ideal_member(f, *this); }

bool Ideal::is_unit() const {
    const auto& gb = groebner_basis(cache_order_.value_or(MonomialOrder::grevlex()));
    return gb.size() == 1 && gb.front().is_constant();
}

std::string Ideal::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i) out += ", ";
        out += generators_[i].to_string();
    }
    return out + ")";
}

Ideal groebner_basis(const Ideal& I, const MonomialOrder& order) {
    Ideal out(I.ring(), I.nvars(), I.groebner_basis(order));
    out.groebner_basis(order);
    return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& order) {
    Buchberger<Coeff> engine(order);
    std::vector<GPoly<Coeff>> G;
    for (const auto& g : basis) G.push_back(to_gpoly(g, order));
    return from_gpoly(engine.normal_form(to_gpoly(f, order), G), f.ring(), f.nvars());
}

bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis, const MonomialOrder& order) {
    Buchberger<Coeff> engine(order);
    std::vector<GPoly<Coeff>> G;
    for (const auto& g : basis) G.push_back(to_gpoly(g, order));
    return engine.is_groebner_basis(G);
}

bool ideal_member(const Polynomial& f, const Ideal& I) {
    if (!(f.ring() == I.ring()) || f.nvars() != I.nvars())
        throw Error(ErrorCode::SignatureMismatch, "polynomial and ideal live in different rings");
    if (f.is_zero()) return true;
    MonomialOrder order = MonomialOrder::grevlex();
    return normal_form(f, I.groebner_basis(order), order).is_zero();
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    for (const auto& g : I.generators())
        if (!ideal_member(g, J)) return false;
    for (const auto& g : J.generators())
        if (!ideal_member(g, I)) return false;
    return true;
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
    if (!(I.ring() == J.ring()) || I.nvars() != J.nvars())
        throw Error(ErrorCode::SignatureMismatch, "ideals live in different rings");
    const Ring ring = I.ring();
    const std::size_t n = I.nvars();
    if (I.generators().empty() || J.generators().empty()) return Ideal(ring, n, {});

    // t occupies slot 0 of k[t, z_1..z_N]
    std::vector<std::size_t> placement(n);
    for (std::size_t i = 0; i < n; ++i) placement[i] = i + 1;
    Polynomial t = Polynomial::variable(ring, n + 1, 0);
    Polynomial one_minus_t = Polynomial::scalar(ring, n + 1, 1) - t;

    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(t * embed(g, n + 1, placement));
    for (const auto& g : J.generators()) gens.push_back(one_minus_t * embed(g, n + 1, placement));

    Ideal big(ring, n + 1, std::move(gens));
    std::vector<Polynomial> kept;
    for (const auto& g : big.groebner_basis(MonomialOrder::elimination(1))) {
        if (g.involves(0)) continue;
        Polynomial projected(ring, n);
        for (const auto& [e, c] : g.terms()) projected.add_term(Exponents(e.begin() + 1, e.end()), c);
        kept.push_back(std::move(projected));
    }
    return Ideal(ring, n, std::move(kept));
}

bool algebraically_independent(const std::vector<Polynomial>& gens) {
    if (gens.empty()) return true;
    const Ring ring = gens[0].ring();
    const std::size_t n = gens[0].nvars();
    const std::size_t m = gens.size();
    // k[z_1..z_N, a_1..a_m], z eliminated first
    std::vector<std::size_t> placement(n);
    for (std::size_t i = 0; i < n; ++i) placement[i] = i;
    std::vector<Polynomial> rel;
    for (std::size_t i = 0; i < m; ++i)
        rel.push_back(Polynomial::variable(ring, n + m, n + i) - embed(gens[i], n + m, placement));
    Ideal graph(ring, n + m, std::move(rel));
    for (const auto& g : graph.groebner_basis(MonomialOrder::elimination(n))) {
        bool uses_z = false;
        for (std::size_t i = 0; i < n && !uses_z; ++i) uses_z = g.involves(i);
        if (!uses_z) return false;
    }
    return true;
}

FlatnessVerdict flatness_probe(const std::vector<Polynomial>& subring_gens, const std::vector<Polynomial>& i_gens,
                               const std::vector<Polynomial>& j_gens) {
    if (subring_gens.empty()) throw Error(ErrorCode::InvalidArgument, "flatness probe needs subring generators");
    const Ring ring = subring_gens[0].ring();
    const std::size_t n = subring_gens[0].nvars();
    const std::size_t m = subring_gens.size();
    if (!algebraically_independent(subring_gens))
        throw Error(ErrorCode::DependentSubringGenerators,
                    "subring generators satisfy a polynomial relation; the abstract presentation would be wrong");

    Ideal I(ring, m, i_gens), J(ring, m, j_gens);
    Ideal abstract = ideal_intersect(I, J);

    auto push = [&](const std::vector<Polynomial>& gens) {
        std::vector<Polynomial> out;
        for (const auto& g : gens) out.push_back(substitute(g, subring_gens));
        return Ideal(ring, n, std::move(out));
    };
    Ideal IB = push(I.generators()), JB = push(J.generators());
    Ideal pushed = push(abstract.generators());
    Ideal extended = ideal_intersect(IB, JB);

    for (const auto& g : pushed.generators())
        if (!ideal_member(g, extended))
            throw Error(ErrorCode::Internal, "(I cap J)B is not contained in IB cap JB");

    FlatnessVerdict verdict{false, std::nullopt, abstract, extended, pushed};
    for (const auto& h : extended.generators())
        if (!ideal_member(h, pushed)) {
            verdict.violation = true;
            verdict.witness = h;
            break;
        }
    return verdict;
}

PolyMap invert_poly_map(const PolyMap& m) {
    require_field(m.ring());
    const Ring ring = m.ring();
    const std::size_t n = m.nvars();
    if (m.components().size() != n) throw Error(ErrorCode::NotInvertible, "map is not square");

    // k[U_1..U_N, W_1..W_N], U eliminated first
    std::vector<std::size_t> placement(n);
    for (std::size_t i = 0; i < n; ++i) placement[i] = i;
    std::vector<Polynomial> graph;
    for (std::size_t i = 0; i < n; ++i)
        graph.push_back(Polynomial::variable(ring, 2 * n, n + i) - embed(m[i], 2 * n, placement));
    Ideal G(ring, 2 * n, std::move(graph));
    const auto& basis = G.groebner_basis(MonomialOrder::elimination(n));

    std::vector<Polynomial> inverse(n, Polynomial(ring, n));
    std::vector<bool> found(n, false);
    for (const auto& g : basis) {
        // looking for c*U_i + tail(W)
        std::optional<std::size_t> var;
        Coeff lead = Coeff::zero(ring);
        bool shape_ok = true;
        Polynomial tail(ring, n);
        for (const auto& [e, c] : g.terms()) {
            std::uint64_t u_deg = total_degree(Exponents(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n)));
            if (u_deg == 0) {
                tail.add_term(Exponents(e.begin() + static_cast<std::ptrdiff_t>(n), e.end()), c);
            } else if (u_deg == 1 && total_degree(e) == 1 && !var) {
                for (std::size_t i = 0; i < n; ++i)
                    if (e[i] == 1) var = i;
                lead = c;
            } else {
                shape_ok = false;
            }
        }
        if (!shape_ok || !var || found[*var]) continue;
        inverse[*var] = tail * (-lead.inverse());
        found[*var] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!found[i]) throw Error(ErrorCode::NotInvertible, "no polynomial inverse exists");

    PolyMap psi(ring, n, std::move(inverse));
    PolyMap id = PolyMap::identity(ring, n);
    if (!(compose(m, psi) == id) || !(compose(psi, m) == id))
        throw Error(ErrorCode::NotInvertible, "elimination candidate does not compose to the identity");
    return psi;
}

FracCoeff::FracCoeff(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial::scalar(den_.ring(), den_.nvars(), 1);
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
    }
    Coeff lead = den_.terms().begin()->second;
    if (!lead.is_one()) {
        Coeff inv = lead.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

FracCoeff FracCoeff::from_polynomial(const Polynomial& p) {
    return FracCoeff(p, Polynomial::scalar(p.ring(), p.nvars(), 1));
}

FracCoeff FracCoeff::zero_like() const { return from_polynomial(Polynomial(num_.ring(), num_.nvars())); }
FracCoeff FracCoeff::one_like() const { return from_polynomial(Polynomial::scalar(num_.ring(), num_.nvars(), 1)); }

FracCoeff FracCoeff::operator-() const {
    FracCoeff out = *this;
    out.num_ = -out.num_;
    return out;
}

FracCoeff operator+(const FracCoeff& a, const FracCoeff& b) {
    if (a.den_ == b.den_) return FracCoeff(a.num_ + b.num_, a.den_);
    return FracCoeff(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

FracCoeff operator-(const FracCoeff& a, const FracCoeff& b) { return a + (-b); }

FracCoeff operator*(const FracCoeff& a, const FracCoeff& b) {
    if (a.is_zero() || b.is_zero()) return a.zero_like();
    return FracCoeff(a.num_ * b.num_, a.den_ * b.den_);
}

FracCoeff operator/(const FracCoeff& a, const FracCoeff& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero rational function");
    return FracCoeff(a.num_ * b.den_, a.den_ * b.num_);
}

std::string FracCoeff::to_string() const {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= num_.nvars(); ++i) names.push_back("s" + std::to_string(i));
    if (den_.is_constant()) return num_.to_string(names);
    return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

std::uint64_t extension_degree(const PolyMap& m) {
    require_field(m.ring());
    const Ring ring = m.ring();
    const std::size_t n = m.nvars();
    if (m.components().size() != n) throw Error(ErrorCode::NotGenericallyFinite, "map is not square");

    MonomialOrder order = MonomialOrder::grevlex();
    Buchberger<FracCoeff> engine(order);
    auto lift = [&](const Coeff& c) { return FracCoeff::from_polynomial(Polynomial::constant(ring, n, c)); };

    std::vector<GPoly<FracCoeff>> gens;
    for (std::size_t i = 0; i < n; ++i) {
        GPoly<FracCoeff> g;
        for (const auto& [e, c] : m[i].terms()) g.push_back({e, lift(c)});
        // - s_i as a constant term of the fibre equation
        Exponents zero(n, 0);
        FracCoeff s = FracCoeff::from_polynomial(Polynomial::variable(ring, n, i));
        auto it = std::find_if(g.begin(), g.end(), [&](const GTerm<FracCoeff>& t) { return t.e == zero; });
        if (it == g.end())
            g.push_back({zero, -s});
        else {
            it->c = it->c - s;
            if (it->c.is_zero()) g.erase(it);
        }
        engine.sort(g);
        gens.push_back(std::move(g));
    }
    auto basis = engine.basis(std::move(gens));
    if (basis.empty()) throw Error(ErrorCode::NotGenericallyFinite, "fibre ideal is zero");
    for (const auto& g : basis)
        if (total_degree(g.front().e) == 0) throw Error(ErrorCode::NotGenericallyFinite, "generic fibre is empty; map is not dominant");

    // zero-dimensional iff every variable has a pure power among the leading monomials
    std::vector<std::uint32_t> bound(n, 0);
    for (const auto& g : basis) {
        const Exponents& e = g.front().e;
        std::size_t nonzero = 0, var = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] != 0) {
                ++nonzero;
                var = i;
            }
        if (nonzero == 1 && (bound[var] == 0 || e[var] < bound[var])) bound[var] = e[var];
    }
    for (std::size_t i = 0; i < n; ++i)
        if (bound[i] == 0) throw Error(ErrorCode::NotGenericallyFinite, "generic fibre is positive dimensional");

    // count standard monomials inside the box
    std::uint64_t count = 0;
    Exponents e(n, 0);
    while (true) {
        bool standard = true;
        for (const auto& g : basis)
            if (exponent_divides(g.front().e, e)) {
                standard = false;
                break;
            }
        if (standard) ++count;
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (e[i] + 1 < bound[i]) {
                ++e[i];
                break;
            }
            e[i] = 0;
        }
        if (i == n) break;
    }
    return count;
}

}  // namespace weylkit
