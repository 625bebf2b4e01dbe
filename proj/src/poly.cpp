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

#include "weylkit/poly.hpp"

#include <algorithm>
#include <unordered_map>

namespace weylkit {

namespace {

void require_compatible(const Polynomial& a, const Polynomial& b) {
    if (!(a.ring() == b.ring()))
        throw Error(ErrorCode::RingMismatch, "polynomial rings differ: " + a.ring().name() + " vs " + b.ring().name());
    if (a.nvars() != b.nvars())
        throw Error(ErrorCode::SignatureMismatch, "polynomials have " + std::to_string(a.nvars()) + " and " +
                                                      std::to_string(b.nvars()) + " variables");
}

}  // namespace

Polynomial Polynomial::constant(Ring ring, std::size_t nvars, const Coeff& c) {
    Polynomial out(ring, nvars);
    out.add_term(Exponents(nvars, 0), c);
    return out;
}

Polynomial Polynomial::scalar(Ring ring, std::size_t nvars, long c) { return constant(ring, nvars, Coeff(ring, c)); }

Polynomial Polynomial::variable(Ring ring, std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
    Exponents e(nvars, 0);
    e[i] = 1;
    return term(ring, std::move(e), Coeff::one(ring));
}

Polynomial Polynomial::term(Ring ring, Exponents e, const Coeff& c) {
    Polynomial out(ring, e.size());
    out.add_term(e, c);
    return out;
}

bool Polynomial::is_constant() const noexcept { return terms_.empty() || total_degree(terms_.begin()->first) == 0; }

Coeff Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff::zero(ring_) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Coeff& c) {
    if (c.is_zero()) return;
    if (e.size() != nvars_) throw Error(ErrorCode::SignatureMismatch, "exponent vector length mismatch");
    if (!(c.ring() == ring_)) throw Error(ErrorCode::RingMismatch, "coefficient ring differs from polynomial ring");
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::uint64_t Polynomial::degree() const noexcept {
    return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
}

std::uint32_t Polynomial::degree_in(std::size_t var) const noexcept {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ring_, nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    require_compatible(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    require_compatible(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Coeff& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_compatible(a, b);
    std::unordered_map<Exponents, Coeff, ExponentsHash> acc;
    Exponents prod(a.nvars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = ea[i] + eb[i];
            Coeff c = ca * cb;
            auto [it, inserted] = acc.try_emplace(prod, c);
            if (!inserted) it->second += c;
        }
    Polynomial out(a.ring(), a.nvars());
    for (auto& [e, c] : acc) out.add_term(e, c);
    return out;
}

std::string Polynomial::to_string() const {
    if (nvars_ % 2 == 0 && nvars_ > 0) return to_string(center_names(nvars_ / 2));
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= nvars_; ++i) names.push_back("z" + std::to_string(i));
    return to_string(names);
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    std::vector<std::pair<const Exponents*, const Coeff*>> view;
    for (const auto& [e, c] : terms_) view.emplace_back(&e, &c);
    return render_terms(view, names);
}

Polynomial pow(const Polynomial& f, std::uint64_t e) {
    Polynomial result = Polynomial::scalar(f.ring(), f.nvars(), 1);
    Polynomial base = f;
    while (e != 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return result;
}

Polynomial derivative(const Polynomial& f, std::size_t var) {
    if (var >= f.nvars()) throw Error(ErrorCode::IndexOutOfRange, "derivative variable out of range");
    Polynomial out(f.ring(), f.nvars());
    for (const auto& [e, c] : f.terms()) {
        if (e[var] == 0) continue;
        Exponents d = e;
        --d[var];
        // w^k -> k w^(k-1); in characteristic p the factor k kills p-th powers
        out.add_term(d, c * Coeff(f.ring(), static_cast<long>(e[var])));
    }
    return out;
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> values) {
    if (values.size() != f.nvars())
        throw Error(ErrorCode::SignatureMismatch, "substitution needs one value per variable");
    if (values.empty()) return f;
    const Ring ring = values[0].ring();
    const std::size_t nv = values[0].nvars();
    for (const auto& v : values) {
        if (!(v.ring() == ring) || v.nvars() != nv)
            throw Error(ErrorCode::SignatureMismatch, "substituted values must share ring and variable count");
    }
    if (!(ring == f.ring())) throw Error(ErrorCode::RingMismatch, "substitution changes the coefficient ring");

    std::vector<std::vector<Polynomial>> powers(values.size());
    auto power_of = [&](std::size_t i, std::uint32_t k) -> const Polynomial& {
        auto& table = powers[i];
        if (table.empty()) table.push_back(Polynomial::scalar(ring, nv, 1));
        while (table.size() <= k) table.push_back(table.back() * values[i]);
        return table[k];
    };

    Polynomial out(ring, nv);
    for (const auto& [e, c] : f.terms()) {
        Polynomial t = Polynomial::constant(ring, nv, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t = t * power_of(i, e[i]);
        out += t;
    }
    return out;
}

Polynomial embed(const Polynomial& f, std::size_t nvars, std::span<const std::size_t> placement) {
    if (placement.size() != f.nvars()) throw Error(ErrorCode::InvalidArgument, "placement size mismatch");
    Polynomial out(f.ring(), nvars);
    for (const auto& [e, c] : f.terms()) {
        Exponents t(nvars, 0);
        for (std::size_t i = 0; i < e.size(); ++i) t[placement[i]] += e[i];
        out.add_term(t, c);
    }
    return out;
}

Polynomial poisson(const Polynomial& f, const Polynomial& g) {
    require_compatible(f, g);
    if (f.nvars() % 2 != 0) throw Error(ErrorCode::SignatureMismatch, "Poisson bracket needs 2n variables");
    const std::size_t n = f.nvars() / 2;
    Polynomial out(f.ring(), f.nvars());
    for (std::size_t i = 0; i < n; ++i) {
        out += derivative(f, i) * derivative(g, n + i);
        out -= derivative(f, n + i) * derivative(g, i);
    }
    return out;
}

namespace {

bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
    require_compatible(a, b);
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    Polynomial q(a.ring(), a.nvars());
    Polynomial r = a;
    const auto& [lead_e, lead_c] = *b.terms().begin();
    while (!r.is_zero()) {
        const auto& [re, rc] = *r.terms().begin();
        if (!divides(lead_e, re))
            throw Error(ErrorCode::NonUnitDivision, b.to_string() + " does not divide " + a.to_string());
        Exponents qe(re.size());
        for (std::size_t i = 0; i < qe.size(); ++i) qe[i] = re[i] - lead_e[i];
        Polynomial t = Polynomial::term(a.ring(), qe, rc.exact_div(lead_c));
        q += t;
        r -= t * b;
    }
    return q;
}

Polynomial make_monic(const Polynomial& f) {
    if (f.is_zero()) return f;
    return f * f.terms().begin()->second.inverse();
}

namespace {

// Coefficients of f viewed in k[others][var], indexed by power of var.
std::vector<Polynomial> coefficients_in(const Polynomial& f, std::size_t var) {
    std::vector<Polynomial> out(f.degree_in(var) + 1, Polynomial(f.ring(), f.nvars()));
    for (const auto& [e, c] : f.terms()) {
        Exponents rest = e;
        rest[var] = 0;
        out[e[var]].add_term(rest, c);
    }
    return out;
}

Polynomial var_power(const Polynomial& like, std::size_t var, std::uint32_t k) {
    Exponents e(like.nvars(), 0);
    e[var] = k;
    return Polynomial::term(like.ring(), e, Coeff::one(like.ring()));
}

Polynomial content_in(const Polynomial& f, std::size_t var) {
    Polynomial g(f.ring(), f.nvars());
    for (const auto& c : coefficients_in(f, var)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? make_monic(c) : gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

// lc(b)^(deg a - deg b + 1) * a mod b, in var.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
    const std::uint32_t db = b.degree_in(var);
    const Polynomial lb = coefficients_in(b, var).back();
    Polynomial r = a;
    std::uint32_t da = a.degree_in(var);
    std::int64_t steps = static_cast<std::int64_t>(da) - db + 1;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        std::uint32_t dr = r.degree_in(var);
        Polynomial lr = coefficients_in(r, var).back();
        r = lb * r - lr * var_power(r, var, dr - db) * b;
        --steps;
    }
    for (; steps > 0; --steps) r = lb * r;
    return r;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    require_compatible(a, b);
    if (!a.ring().is_field()) throw Error(ErrorCode::InvalidArgument, "gcd is implemented over fields only");
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.is_constant() || b.is_constant()) return Polynomial::scalar(a.ring(), a.nvars(), 1);

    std::size_t var = a.nvars();
    for (std::size_t i = a.nvars(); i-- > 0;)
        if (a.involves(i) || b.involves(i)) {
            var = i;
            break;
        }
    if (!a.involves(var)) return gcd(a, content_in(b, var));
    if (!b.involves(var)) return gcd(content_in(a, var), b);

    Polynomial ca = content_in(a, var), cb = content_in(b, var);
    Polynomial content = gcd(ca, cb);
    Polynomial p = divide_exact(a, ca), q = divide_exact(b, cb);
    if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
    Polynomial primitive_gcd = Polynomial::scalar(a.ring(), a.nvars(), 1);
    while (true) {
        Polynomial r = pseudo_remainder(p, q, var);
        if (r.is_zero()) {
            primitive_gcd = divide_exact(q, content_in(q, var));
            break;
        }
        if (!r.involves(var)) break;
        p = std::move(q);
        q = divide_exact(r, content_in(r, var));
    }
    return make_monic(primitive_gcd * content);
}

PolyMap::PolyMap(Ring ring, std::size_t nvars, std::vector<Polynomial> components)
    : ring_(ring), nvars_(nvars), components_(std::move(components)) {
    for (const auto& c : components_)
        if (!(c.ring() == ring_) || c.nvars() != nvars_)
            throw Error(ErrorCode::SignatureMismatch, "map component has the wrong ring or variable count");
}

PolyMap PolyMap::identity(Ring ring, std::size_t nvars) {
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < nvars; ++i) comps.push_back(Polynomial::variable(ring, nvars, i));
    return PolyMap(ring, nvars, std::move(comps));
}

std::uint64_t PolyMap::degree() const noexcept {
    std::uint64_t d = 0;
    for (const auto& c : components_) d = std::max(d, c.degree());
    return d;
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner) {
    if (outer.nvars() != inner.components().size())
        throw Error(ErrorCode::SignatureMismatch, "maps are not composable");
    std::vector<Polynomial> comps;
    for (const auto& c : outer.components()) comps.push_back(substitute(c, inner.components()));
    return PolyMap(inner.ring(), inner.nvars(), std::move(comps));
}

SquareMatrixPoly::SquareMatrixPoly(Ring ring, std::size_t nvars, std::size_t dim)
    : ring_(ring), nvars_(nvars), dim_(dim), entries_(dim * dim, Polynomial(ring, nvars)) {}

SquareMatrixPoly SquareMatrixPoly::identity(Ring ring, std::size_t nvars, std::size_t dim) {
    SquareMatrixPoly m(ring, nvars, dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = Polynomial::scalar(ring, nvars, 1);
    return m;
}

SquareMatrixPoly SquareMatrixPoly::symplectic_form(Ring ring, std::size_t n) {
    SquareMatrixPoly m(ring, 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, n + i) = Polynomial::scalar(ring, 2 * n, 1);
        m.at(n + i, i) = Polynomial::scalar(ring, 2 * n, -1);
    }
    return m;
}

SquareMatrixPoly SquareMatrixPoly::transpose() const {
    SquareMatrixPoly t(ring_, nvars_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) t.at(j, i) = at(i, j);
    return t;
}

SquareMatrixPoly operator*(const SquareMatrixPoly& a, const SquareMatrixPoly& b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::SignatureMismatch, "matrix dimensions differ");
    SquareMatrixPoly out(a.ring(), a.nvars(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (!a.at(i, k).is_zero() && !b.at(k, j).is_zero()) out.at(i, j) += a.at(i, k) * b.at(k, j);
    return out;
}

std::string SquareMatrixPoly::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < dim_; ++i) {
        out += "[";
        for (std::size_t j = 0; j < dim_; ++j) {
            if (j) out += ", ";
            out += at(i, j).to_string();
        }
        out += "]\n";
    }
    return out;
}

SquareMatrixPoly jacobian(const PolyMap& m) {
    const std::size_t dim = m.components().size();
    if (dim != m.nvars()) throw Error(ErrorCode::SignatureMismatch, "Jacobian needs as many components as variables");
    SquareMatrixPoly j(m.ring(), m.nvars(), dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) j.at(r, c) = derivative(m[r], c);
    return j;
}

namespace {

Polynomial cofactor_det(const SquareMatrixPoly& m, std::vector<std::size_t>& rows, std::size_t col) {
    if (col == m.dim()) return Polynomial::scalar(m.ring(), m.nvars(), 1);
    Polynomial out(m.ring(), m.nvars());
    std::size_t position = 0;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        std::size_t r = rows[k];
        const Polynomial& e = m.at(r, col);
        if (!e.is_zero()) {
            rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(k));
            Polynomial minor = cofactor_det(m, rows, col + 1);
            rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(k), r);
            if (position % 2 == 0)
                out += e * minor;
            else
                out -= e * minor;
        }
        ++position;
    }
    return out;
}

Polynomial bareiss_det(SquareMatrixPoly m) {
    const std::size_t n = m.dim();
    Polynomial prev = Polynomial::scalar(m.ring(), m.nvars(), 1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m.at(swap_row, k).is_zero()) ++swap_row;
            if (swap_row == n) return Polynomial(m.ring(), m.nvars());
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = divide_exact(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
        prev = m.at(k, k);
    }
    Polynomial d = m.at(n - 1, n - 1);
    return negate ? -d : d;
}

}  // namespace

Polynomial det(const SquareMatrixPoly& m) {
    if (m.dim() == 0) return Polynomial::scalar(m.ring(), m.nvars(), 1);
    if (m.dim() <= 4) {
        std::vector<std::size_t> rows(m.dim());
        for (std::size_t i = 0; i < m.dim(); ++i) rows[i] = i;
        return cofactor_det(m, rows, 0);
    }
    return bareiss_det(m);
}

SquareMatrixPoly bracket_matrix(const PolyMap& m) {
    const std::size_t dim = m.components().size();
    SquareMatrixPoly h(m.ring(), m.nvars(), dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            h.at(i, j) = poisson(m[i], m[j]);
            h.at(j, i) = -h.at(i, j);
        }
    return h;
}

SymplecticCertificate is_symplectic(const PolyMap& m) {
    SquareMatrixPoly h = bracket_matrix(m);
    Polynomial d = det(jacobian(m));
    bool symplectic = h == SquareMatrixPoly::symplectic_form(m.ring(), m.nvars() / 2);
    if (symplectic) {
        Polynomial one = Polynomial::scalar(m.ring(), m.nvars(), 1);
        if (!(d == one || d == -one))
            throw Error(ErrorCode::Internal, "bracket-preserving map with Jacobian determinant " + d.to_string());
    }
    return {symplectic, std::move(h), std::move(d)};
}

}  // namespace weylkit
