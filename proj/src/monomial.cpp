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

#include "weylkit/monomial.hpp"

#include <numeric>

namespace weylkit {

std::uint64_t total_degree(const Exponents& e) noexcept {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

bool DegLexGreater::operator()(const Exponents& a, const Exponents& b) const noexcept {
    std::uint64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return b < a;
}

std::size_t ExponentsHash::operator()(const Exponents& e) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto v : e) {
        h ^= v;
        h *= 0x100000001b3ull;
    }
    return h;
}

namespace {

std::string render_monomial(const Exponents& e, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += names[i];
        if (e[i] != 1) out += '^' + std::to_string(e[i]);
    }
    return out;
}

std::string render_magnitude(const mpq_class& q, bool standalone) {
    mpq_class a = abs(q);
    if (a.get_den() == 1) return a.get_num().get_str();
    std::string s = a.get_num().get_str() + "/" + a.get_den().get_str();
    return standalone ? s : "(" + s + ")";
}

}  // namespace

std::string render_terms(const std::vector<std::pair<const Exponents*, const Coeff*>>& terms,
                         const std::vector<std::string>& names) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [exps, coeff] : terms) {
        mpq_class value = coeff->signed_value();
        bool negative = sgn(value) < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        std::string mono = render_monomial(*exps, names);
        if (mono.empty()) {
            out += render_magnitude(value, true);
        } else if (abs(value) == 1) {
            out += mono;
        } else {
            out += render_magnitude(value, false) + "*" + mono;
        }
    }
    return out;
}

std::vector<std::string> weyl_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) names.push_back("d" + std::to_string(i));
    return names;
}

std::vector<std::string> center_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("u" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
    return names;
}

}  // namespace weylkit
