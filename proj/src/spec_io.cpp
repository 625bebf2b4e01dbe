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

#include "weylkit/spec_io.hpp"

#include <json.hpp>

#include "weylkit/expr.hpp"

namespace weylkit {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidSpec, what); }

std::uint64_t unsigned_field(const json& doc, const char* key) {
    if (!doc.contains(key)) bad(std::string("missing \"") + key + "\"");
    const json& v = doc.at(key);
    if (!v.is_number_unsigned()) bad(std::string("\"") + key + "\" must be a nonnegative integer");
    return v.get<std::uint64_t>();
}

}  // namespace

EndoSpec endo_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        bad(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) bad("top level must be an object");
    if (doc.contains("format") && (!doc["format"].is_number_integer() || doc["format"].get<long>() != 1))
        bad("unsupported \"format\" (expected 1)");

    const std::uint64_t n = unsigned_field(doc, "n");
    if (n == 0 || n > 64) bad("\"n\" must be between 1 and 64");
    const std::uint64_t ch = unsigned_field(doc, "char");
    if (ch != 0 && !is_prime(ch)) throw Error(ErrorCode::NotPrime, "\"char\" " + std::to_string(ch) + " is not prime");
    AlgebraSignature sig(n, Ring::from_characteristic(ch));

    if (!doc.contains("images") || !doc["images"].is_object()) bad("\"images\" must be an object");
    const json& images = doc["images"];
    std::vector<WeylElement> xs, ds;
    for (char kind : {'x', 'd'})
        for (std::uint64_t i = 1; i <= n; ++i) {
            std::string key = std::string(1, kind) + std::to_string(i);
            if (!images.contains(key)) bad("missing image of " + key);
            if (!images[key].is_string()) bad("image of " + key + " must be a string");
            WeylElement f = parse_weyl(images[key].get<std::string>(), sig);
            (kind == 'x' ? xs : ds).push_back(std::move(f));
        }
    if (images.size() != 2 * n) bad("\"images\" has keys other than x1..xn, d1..dn");
    return EndoSpec(sig, std::move(xs), std::move(ds));
}

std::string endo_to_json(const EndoSpec& e, int indent) {
    nlohmann::ordered_json images = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < e.n(); ++i) images["x" + std::to_string(i + 1)] = e.images_x()[i].to_string();
    for (std::size_t i = 0; i < e.n(); ++i) images["d" + std::to_string(i + 1)] = e.images_d()[i].to_string();
    nlohmann::ordered_json doc = {{"format", 1}, {"n", e.n()}, {"char", e.ring().characteristic()}, {"images", images}};
    return doc.dump(indent);
}

}  // namespace weylkit
