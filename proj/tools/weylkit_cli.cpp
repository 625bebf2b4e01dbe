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

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "weylkit/weylkit.h"

namespace {

using nlohmann::json;

struct Failure {
    wk_status status;
    std::string message;
};

void check(wk_status s) {
    if (s != WK_OK) throw Failure{s, wk_last_error_message()};
}

struct ElementDeleter {
    void operator()(wk_element* e) const { wk_element_free(e); }
};
struct PolyDeleter {
    void operator()(wk_poly* p) const { wk_poly_free(p); }
};
struct EndoDeleter {
    void operator()(wk_endo* e) const { wk_endo_free(e); }
};
using Element = std::unique_ptr<wk_element, ElementDeleter>;
using Poly = std::unique_ptr<wk_poly, PolyDeleter>;
using Endo = std::unique_ptr<wk_endo, EndoDeleter>;

std::string take(char* s) {
    std::string out(s);
    wk_string_free(s);
    return out;
}

Element parse_element(std::size_t n, std::uint64_t ch, const std::string& text) {
    wk_element* e = nullptr;
    check(wk_element_parse(n, ch, text.c_str(), &e));
    return Element(e);
}

std::string render(const wk_element* e) {
    char* s = nullptr;
    check(wk_element_render(e, &s));
    return take(s);
}

std::string render(const wk_poly* p) {
    char* s = nullptr;
    check(wk_poly_render(p, &s));
    return take(s);
}

std::string endo_json(const wk_endo* e) {
    char* s = nullptr;
    check(wk_endo_to_json(e, &s));
    return take(s);
}

Endo load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Failure{WK_E_INVALID_SPEC, "cannot read " + path};
    std::stringstream buf;
    buf << in.rdbuf();
    wk_endo* e = nullptr;
    check(wk_endo_from_json(buf.str().c_str(), &e));
    return Endo(e);
}

json report(wk_status (*fn)(const wk_endo*, char**), const wk_endo* e) {
    char* s = nullptr;
    check(fn(e, &s));
    return json::parse(take(s));
}

int exit_code(wk_status s) {
    switch (s) {
        case WK_OK: return 0;
        case WK_E_NOT_AN_AUTOMORPHISM: return 3;
        case WK_E_INCONCLUSIVE: return 4;
        case WK_E_INTERNAL:
        case WK_E_NULL_ARGUMENT: return 1;
        default: return 2;
    }
}

struct Options {
    std::size_t n = 1;
    std::uint64_t characteristic = 0;
    std::string method;
    std::vector<std::string> exprs;
    std::string spec;
    bool as_json = false;
    std::uint64_t prime = 0;
    std::int64_t bound = -1;
    std::vector<std::uint64_t> primes{5, 7, 11, 13};
};

int run_endo(const std::string& action, const Options& o) {
    Endo e = load_spec(o.spec);
    auto print_scalar = [&](const char* key, std::uint64_t v) {
        if (o.as_json)
            std::cout << json{{key, v}}.dump() << "\n";
        else
            std::cout << v << "\n";
    };

    if (action == "check") {
        if (o.as_json)
            std::cout << json{{"valid", true}}.dump() << "\n";
        else
            std::cout << "ok\n";
        return 0;
    }
    if (action == "degree") {
        std::uint64_t d = 0;
        check(wk_endo_degree(e.get(), &d));
        print_scalar("degree", d);
        return 0;
    }
    if (action == "reduce") {
        if (o.prime == 0) throw Failure{WK_E_INVALID_ARGUMENT, "reduce needs -p P"};
        wk_endo* r = nullptr;
        check(wk_endo_reduce(e.get(), o.prime, &r));
        Endo reduced(r);
        std::cout << endo_json(reduced.get()) << "\n";
        return 0;
    }
    if (action == "center-map") {
        json rep = report(wk_endo_center_map, e.get());
        if (o.as_json) {
            std::cout << rep.dump(2) << "\n";
            return 0;
        }
        for (auto& [name, value] : rep["components"].items())
            std::cout << name << " -> " << value.get<std::string>() << "\n";
        std::cout << "det J = " << rep["jacobian_det"].get<std::string>() << "\n";
        std::cout << "symplectic = " << (rep["symplectic"].get<bool>() ? "yes" : "no") << "\n";
        return 0;
    }
    if (action == "jacobian") {
        json rep = report(wk_endo_jacobian, e.get());
        if (o.as_json) {
            std::cout << rep.dump(2) << "\n";
            return 0;
        }
        for (const auto& row : rep["jacobian"]) {
            std::string line;
            for (const auto& cell : row) line += (line.empty() ? "" : ", ") + cell.get<std::string>();
            std::cout << "[" << line << "]\n";
        }
        std::cout << "det = " << rep["det"].get<std::string>() << "\n";
        return 0;
    }
    if (action == "flat-probe") {
        json rep = report(wk_endo_flat_probe, e.get());
        const bool violated = rep["verdict"] == "NOT_FLAT";
        if (o.as_json) {
            std::cout << rep.dump(2) << "\n";
        } else if (violated) {
            for (const auto& p : rep["probes"])
                if (p["violation"].get<bool>()) {
                    std::cout << "VIOLATION witness=" << p["witness"].get<std::string>() << " verdict=NOT_FLAT\n";
                    break;
                }
        } else {
            std::cout << "NO_VIOLATION probes=" << rep["probes"].size() << "\n";
        }
        return violated ? 3 : 0;
    }
    if (action == "inverse-system") {
        char* s = nullptr;
        check(wk_endo_inverse_system(e.get(), o.bound, &s));
        json rep = json::parse(take(s));
        if (o.as_json) {
            std::cout << rep.dump(2) << "\n";
            return 0;
        }
        std::cout << "bound=" << rep["bound"] << " unknowns=" << rep["unknown_count"]
                  << " equations=" << rep["equation_count"] << "\n";
        for (const auto& eq : rep["equations"]) std::cout << eq.get<std::string>() << " = 0\n";
        return 0;
    }
    if (action == "invert" || action == "invert-crt") {
        wk_endo* r = nullptr;
        if (action == "invert")
            check(wk_endo_invert(e.get(), &r));
        else
            check(wk_endo_invert_crt(e.get(), o.primes.data(), o.primes.size(), &r));
        Endo inv(r);
        std::cout << endo_json(inv.get()) << "\n";
        return 0;
    }
    if (action == "birational-degree") {
        std::uint64_t d = 0;
        check(wk_endo_birational_degree(e.get(), &d));
        print_scalar("birational_degree", d);
        return 0;
    }
    throw Failure{WK_E_INVALID_ARGUMENT, "unknown endo action " + action};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in Weyl algebras A_n(QQ) and A_n(GF(p))"};
    app.require_subcommand(1);
    Options o;
    std::string action;

    auto common = [&](CLI::App* sub, std::size_t nexpr) {
        sub->add_option("-n", o.n, "number of generator pairs")->capture_default_str();
        sub->add_option("--char", o.characteristic, "0 for QQ, a prime p for GF(p)")->capture_default_str();
        sub->add_option("exprs", o.exprs, "expressions")->expected(static_cast<int>(nexpr))->required();
    };
    auto* normalize = app.add_subcommand("normalize", "print the normal form of an expression");
    common(normalize, 1);
    auto* comm = app.add_subcommand("commutator", "print [e1, e2]");
    common(comm, 2);
    auto* pth = app.add_subcommand("pth-power", "p-th power over GF(p)");
    common(pth, 1);
    o.method = "binary";
    pth->add_option("--method", o.method)->check(CLI::IsMember({"binary", "jacobson", "both"}))->capture_default_str();
    auto* center = app.add_subcommand("center-test", "decide centrality and print center coordinates");
    common(center, 1);
    auto* pois = app.add_subcommand("poisson", "Poisson bracket of two central elements, in u, v coordinates");
    common(pois, 2);
    pois->add_option("--method", o.method)->check(CLI::IsMember({"formula", "lift", "both"}));

    auto* endo = app.add_subcommand(
        "endo",
        "analyse an endomorphism given as JSON; composition convention (e1 o e2)(f) = e1(e2(f))");
    endo->add_option("action", action, "check|degree|center-map|jacobian|reduce|invert|birational-degree|flat-probe|"
                                       "inverse-system|invert-crt")
        ->required()
        ->check(CLI::IsMember({"check", "degree", "center-map", "jacobian", "reduce", "invert", "birational-degree",
                               "flat-probe", "inverse-system", "invert-crt"}));
    endo->add_option("--spec", o.spec, "endomorphism JSON file")->required();
    endo->add_flag("--json", o.as_json, "structured output");
    endo->add_option("-p", o.prime, "prime for reduce");
    endo->add_option("--bound", o.bound, "degree bound for inverse-system (default deg^(2n-1))");
    endo->add_option("--primes", o.primes, "primes for invert-crt")->delimiter(',')->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "E_USAGE: " << e.what() << "\n";
        return 2;
    }

    try {
        if (endo->parsed()) return run_endo(action, o);

        if (normalize->parsed()) {
            std::cout << render(parse_element(o.n, o.characteristic, o.exprs[0]).get()) << "\n";
        } else if (comm->parsed()) {
            Element a = parse_element(o.n, o.characteristic, o.exprs[0]);
            Element b = parse_element(o.n, o.characteristic, o.exprs[1]);
            wk_element* c = nullptr;
            check(wk_element_commutator(a.get(), b.get(), &c));
            std::cout << render(Element(c).get()) << "\n";
        } else if (pth->parsed()) {
            Element a = parse_element(o.n, o.characteristic, o.exprs[0]);
            wk_pth_method m = o.method == "jacobson" ? WK_PTH_JACOBSON : o.method == "both" ? WK_PTH_BOTH : WK_PTH_BINARY;
            wk_element* c = nullptr;
            check(wk_element_pth_power(a.get(), m, &c));
            std::cout << render(Element(c).get()) << "\n";
        } else if (center->parsed()) {
            Element a = parse_element(o.n, o.characteristic, o.exprs[0]);
            int central = 0;
            check(wk_element_is_central(a.get(), &central));
            if (!central) {
                std::cout << "central: no\n";
            } else {
                std::cout << "central: yes\n";
                if (o.characteristic != 0) {
                    wk_poly* c = nullptr;
                    check(wk_element_center_coords(a.get(), &c));
                    std::cout << "coords: " << render(Poly(c).get()) << "\n";
                }
            }
        } else if (pois->parsed()) {
            Element a = parse_element(o.n, o.characteristic, o.exprs[0]);
            Element b = parse_element(o.n, o.characteristic, o.exprs[1]);
            wk_poisson_method m = o.method == "lift" ? WK_POISSON_LIFT
                                  : o.method == "both" ? WK_POISSON_BOTH
                                                       : WK_POISSON_FORMULA;
            wk_poly* c = nullptr;
            check(wk_poisson(a.get(), b.get(), m, &c));
            std::cout << render(Poly(c).get()) << "\n";
        }
        return 0;
    } catch (const Failure& f) {
        std::cerr << wk_status_name(f.status) << ": " << f.message << "\n";
        return exit_code(f.status);
    }
}
