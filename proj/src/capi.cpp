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

#include "weylkit/weylkit.h"

#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <new>
#include <string>

#include "weylkit/center.hpp"
#include "weylkit/endo.hpp"
#include "weylkit/expr.hpp"
#include "weylkit/spec_io.hpp"

using namespace weylkit;
using nlohmann::json;

struct wk_element {
    WeylElement value;
};

struct wk_poly {
    Polynomial value;
};

struct wk_endo {
    EndoSpec value;
};

namespace {

static_assert(static_cast<int>(ErrorCode::ParseError) + 1 == WK_E_PARSE);
static_assert(static_cast<int>(ErrorCode::Internal) + 1 == WK_E_INTERNAL);

thread_local std::string last_error;

struct NullArgument {};

wk_status to_status(ErrorCode code) { return static_cast<wk_status>(static_cast<int>(code) + 1); }

template <class F>
wk_status guard(F&& body) {
    try {
        body();
        last_error.clear();
        return WK_OK;
    } catch (const NullArgument&) {
        last_error = "null argument";
        return WK_E_NULL_ARGUMENT;
    } catch (const Error& e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return WK_E_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return WK_E_INTERNAL;
    }
}

template <class... Ts>
void need(const Ts*... ptrs) {
    if (((ptrs == nullptr) || ...)) throw NullArgument{};
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Ring ring_for(uint64_t characteristic) {
    if (characteristic != 0 && !is_prime(characteristic))
        throw Error(ErrorCode::NotPrime, std::to_string(characteristic) + " is not prime");
    return Ring::from_characteristic(characteristic);
}

WeylElement jacobson_power(const WeylElement& f) {
    if (f.size() <= 1) return pow(f, f.ring().characteristic());
    auto it = f.terms().begin();
    WeylElement a = WeylElement::term(f.signature(), it->first, it->second);
    WeylElement b = f - a;
    WeylElement out = pow(a, f.ring().characteristic()) + jacobson_power(b);
    for (auto& s : jacobson_s_terms(a, b)) out += s;
    return out;
}

json poly_list(const std::vector<Polynomial>& ps, const std::vector<std::string>& names) {
    json out = json::array();
    for (const auto& p : ps) out.push_back(p.to_string(names));
    return out;
}

json matrix_json(const SquareMatrixPoly& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).to_string());
        out.push_back(row);
    }
    return out;
}

json components_json(const PolyMap& map, std::size_t n) {
    json out = json::object();
    const auto names = center_names(n);
    for (std::size_t k = 0; k < map.components().size(); ++k) out[names[k]] = map[k].to_string();
    return out;
}

}  // namespace

extern "C" {

const char* wk_status_name(wk_status status) {
    if (status == WK_OK) return "OK";
    if (status == WK_E_NULL_ARGUMENT) return "E_NULL_ARGUMENT";
    if (status < WK_OK || status > WK_E_INTERNAL) return "E_UNKNOWN";
    return error_code_name(static_cast<ErrorCode>(static_cast<int>(status) - 1));
}

const char* wk_last_error_message(void) { return last_error.c_str(); }

void wk_string_free(char* s) { std::free(s); }

wk_status wk_element_parse(size_t n, uint64_t characteristic, const char* text, wk_element** out) {
    return guard([&] {
        need(text, out);
        AlgebraSignature sig(n, ring_for(characteristic));
        *out = new wk_element{parse_weyl(text, sig)};
    });
}

void wk_element_free(wk_element* e) { delete e; }

wk_status wk_element_render(const wk_element* e, char** out) {
    return guard([&] {
        need(e, out);
        *out = dup(e->value.to_string());
    });
}

wk_status wk_element_equal(const wk_element* a, const wk_element* b, int* out) {
    return guard([&] {
        need(a, b, out);
        *out = a->value == b->value ? 1 : 0;
    });
}

wk_status wk_element_add(const wk_element* a, const wk_element* b, wk_element** out) {
    return guard([&] {
        need(a, b, out);
        *out = new wk_element{a->value + b->value};
    });
}

wk_status wk_element_mul(const wk_element* a, const wk_element* b, wk_element** out) {
    return guard([&] {
        need(a, b, out);
        *out = new wk_element{mul(a->value, b->value)};
    });
}

wk_status wk_element_commutator(const wk_element* a, const wk_element* b, wk_element** out) {
    return guard([&] {
        need(a, b, out);
        *out = new wk_element{commutator(a->value, b->value)};
    });
}

wk_status wk_element_degree(const wk_element* e, int64_t* out) {
    return guard([&] {
        need(e, out);
        auto d = e->value.degree();
        *out = d ? static_cast<int64_t>(*d) : -1;
    });
}

wk_status wk_element_pth_power(const wk_element* e, wk_pth_method method, wk_element** out) {
    return guard([&] {
        need(e, out);
        const auto p = e->value.ring().characteristic();
        if (!e->value.ring().is_prime_field())
            throw Error(ErrorCode::InvalidArgument, "p-th powers need coefficients in GF(p)");
        switch (method) {
            case WK_PTH_BINARY:
                *out = new wk_element{pow(e->value, p)};
                return;
            case WK_PTH_JACOBSON:
                *out = new wk_element{jacobson_power(e->value)};
                return;
            case WK_PTH_BOTH: {
                WeylElement a = pow(e->value, p), b = jacobson_power(e->value);
                if (!(a == b))
                    throw Error(ErrorCode::Internal, "binary powering gives " + a.to_string() + ", Jacobson's formula " +
                                                         b.to_string());
                *out = new wk_element{std::move(a)};
                return;
            }
        }
        throw Error(ErrorCode::InvalidArgument, "unknown p-th power method");
    });
}

wk_status wk_element_is_central(const wk_element* e, int* out) {
    return guard([&] {
        need(e, out);
        *out = is_central(e->value) ? 1 : 0;
    });
}

wk_status wk_element_center_coords(const wk_element* e, wk_poly** out) {
    return guard([&] {
        need(e, out);
        *out = new wk_poly{to_center_coords(e->value)};
    });
}

wk_status wk_poly_parse(size_t n, uint64_t characteristic, const char* text, wk_poly** out) {
    return guard([&] {
        need(text, out);
        if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be positive");
        *out = new wk_poly{parse_center(text, ring_for(characteristic), n)};
    });
}

void wk_poly_free(wk_poly* p) { delete p; }

wk_status wk_poly_render(const wk_poly* p, char** out) {
    return guard([&] {
        need(p, out);
        *out = dup(p->value.to_string());
    });
}

wk_status wk_poly_equal(const wk_poly* a, const wk_poly* b, int* out) {
    return guard([&] {
        need(a, b, out);
        *out = a->value == b->value ? 1 : 0;
    });
}

wk_status wk_poisson(const wk_element* f, const wk_element* g, wk_poisson_method method, wk_poly** out) {
    return guard([&] {
        need(f, g, out);
        CenterElement cf = CenterElement::from_element(f->value);
        CenterElement cg = CenterElement::from_element(g->value);
        switch (method) {
            case WK_POISSON_FORMULA:
                *out = new wk_poly{poisson(cf.coords(), cg.coords())};
                return;
            case WK_POISSON_LIFT:
                *out = new wk_poly{poisson_from_lift(cf, cg).coords()};
                return;
            case WK_POISSON_BOTH: {
                Polynomial a = poisson(cf.coords(), cg.coords());
                Polynomial b = poisson_from_lift(cf, cg).coords();
                if (!(a == b))
                    throw Error(ErrorCode::Internal,
                                "formula bracket " + a.to_string() + " differs from lifted bracket " + b.to_string());
                *out = new wk_poly{std::move(a)};
                return;
            }
        }
        throw Error(ErrorCode::InvalidArgument, "unknown Poisson method");
    });
}

wk_status wk_endo_from_json(const char* text, wk_endo** out) {
    return guard([&] {
        need(text, out);
        *out = new wk_endo{endo_from_json(text)};
    });
}

wk_status wk_endo_to_json(const wk_endo* e, char** out) {
    return guard([&] {
        need(e, out);
        *out = dup(endo_to_json(e->value));
    });
}

void wk_endo_free(wk_endo* e) { delete e; }

wk_status wk_endo_equal(const wk_endo* a, const wk_endo* b, int* out) {
    return guard([&] {
        need(a, b, out);
        *out = a->value == b->value ? 1 : 0;
    });
}

wk_status wk_endo_degree(const wk_endo* e, uint64_t* out) {
    return guard([&] {
        need(e, out);
        *out = degree(e->value);
    });
}

wk_status wk_endo_apply(const wk_endo* e, const wk_element* f, wk_element** out) {
    return guard([&] {
        need(e, f, out);
        if (!(e->value.signature() == f->value.signature()))
            throw Error(ErrorCode::SignatureMismatch, "element and endomorphism live in different algebras");
        *out = new wk_element{e->value.apply(f->value)};
    });
}

wk_status wk_endo_reduce(const wk_endo* e, uint64_t p, wk_endo** out) {
    return guard([&] {
        need(e, out);
        *out = new wk_endo{reduce_endo(e->value, p)};
    });
}

wk_status wk_endo_compose(const wk_endo* e1, const wk_endo* e2, wk_endo** out) {
    return guard([&] {
        need(e1, e2, out);
        *out = new wk_endo{compose(e1->value, e2->value)};
    });
}

wk_status wk_endo_center_map(const wk_endo* e, char** report_json) {
    return guard([&] {
        need(e, report_json);
        CenterMapReport rep = center_map(e->value);
        json doc = {{"components", components_json(rep.map, e->value.n())},
                    {"jacobian_det", rep.jacobian_det.to_string()},
                    {"symplectic", rep.symplectic},
                    {"brackets", matrix_json(rep.brackets)}};
        *report_json = dup(doc.dump(2));
    });
}

wk_status wk_endo_jacobian(const wk_endo* e, char** report_json) {
    return guard([&] {
        need(e, report_json);
        CenterMapReport rep = center_map(e->value);
        json doc = {{"jacobian", matrix_json(jacobian(rep.map))},
                    {"det", rep.jacobian_det.to_string()},
                    {"symplectic", rep.symplectic}};
        *report_json = dup(doc.dump(2));
    });
}

wk_status wk_endo_flat_probe(const wk_endo* e, char** report_json) {
    return guard([&] {
        need(e, report_json);
        const std::size_t n = e->value.n();
        std::vector<std::string> a_names;
        for (std::size_t k = 1; k <= 2 * n; ++k) a_names.push_back("a" + std::to_string(k));
        const auto b_names = center_names(n);
        auto probes = default_flatness_probes(e->value);
        auto verdicts = flatness_report(e->value, probes);
        json list = json::array();
        bool any = false;
        for (std::size_t k = 0; k < probes.size(); ++k) {
            const auto& v = verdicts[k];
            any = any || v.violation;
            list.push_back({{"I", poly_list(probes[k].i_gens, a_names)},
                            {"J", poly_list(probes[k].j_gens, a_names)},
                            {"violation", v.violation},
                            {"witness", v.witness ? json(v.witness->to_string(b_names)) : json(nullptr)},
                            {"abstract_intersection", poly_list(v.abstract_intersection.generators(), a_names)},
                            {"extended_intersection", poly_list(v.extended_intersection.generators(), b_names)},
                            {"pushed_intersection", poly_list(v.pushed_intersection.generators(), b_names)}});
        }
        json doc = {{"probes", list}, {"verdict", any ? "NOT_FLAT" : "NO_VIOLATION"}};
        *report_json = dup(doc.dump(2));
    });
}

wk_status wk_endo_inverse_system(const wk_endo* e, int64_t bound, char** report_json) {
    return guard([&] {
        need(e, report_json);
        std::optional<std::uint64_t> b;
        if (bound >= 0) b = static_cast<std::uint64_t>(bound);
        InverseSystem sys = assemble_inverse_system(e->value, b);
        json doc = {{"bound", sys.bound},
                    {"unknown_count", sys.unknowns.size()},
                    {"unknowns", sys.unknowns},
                    {"equation_count", sys.equations.size()},
                    {"equations", poly_list(sys.equations, sys.unknowns)}};
        *report_json = dup(doc.dump(2));
    });
}

wk_status wk_endo_invert(const wk_endo* e, wk_endo** out) {
    return guard([&] {
        need(e, out);
        *out = new wk_endo{invert_char_p(e->value)};
    });
}

wk_status wk_endo_birational_degree(const wk_endo* e, uint64_t* out) {
    return guard([&] {
        need(e, out);
        *out = birationality_degree(e->value);
    });
}

wk_status wk_endo_invert_crt(const wk_endo* e, const uint64_t* primes, size_t count, wk_endo** out) {
    return guard([&] {
        need(e, out);
        if (count > 0) need(primes);
        std::vector<std::uint64_t> ps(primes, primes + count);
        *out = new wk_endo{invert_char0_via_crt(e->value, ps).inverse};
    });
}

}  // extern "C"
