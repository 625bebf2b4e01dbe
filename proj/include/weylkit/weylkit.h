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

#ifndef WEYLKIT_H
#define WEYLKIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define WK_API __attribute__((visibility("default")))
#else
#define WK_API
#endif

typedef enum wk_status {
    WK_OK = 0,
    WK_E_PARSE,
    WK_E_INDEX_OUT_OF_RANGE,
    WK_E_NEGATIVE_EXPONENT,
    WK_E_RING_MISMATCH,
    WK_E_SIGNATURE_MISMATCH,
    WK_E_DIVISION_BY_ZERO,
    WK_E_NON_UNIT_DIVISION,
    WK_E_NOT_PRIME,
    WK_E_BAD_PRIME_DENOMINATOR,
    WK_E_BAD_PRIME,
    WK_E_RELATION_VIOLATION,
    WK_E_NOT_CENTRAL,
    WK_E_NON_DIVISIBLE_COMMUTATOR,
    WK_E_NOT_EXPRESSIBLE,
    WK_E_BAD_IMAGES,
    WK_E_NOT_INVERTIBLE,
    WK_E_NOT_AN_AUTOMORPHISM,
    WK_E_NOT_GENERICALLY_FINITE,
    WK_E_DEPENDENT_SUBRING_GENERATORS,
    WK_E_CENTRALITY_FAILURE,
    WK_E_INCONCLUSIVE,
    WK_E_INVALID_ARGUMENT,
    WK_E_INVALID_SPEC,
    WK_E_INTERNAL,
    WK_E_NULL_ARGUMENT
} wk_status;

typedef enum wk_pth_method { WK_PTH_BINARY = 0, WK_PTH_JACOBSON = 1, WK_PTH_BOTH = 2 } wk_pth_method;
typedef enum wk_poisson_method { WK_POISSON_FORMULA = 0, WK_POISSON_LIFT = 1, WK_POISSON_BOTH = 2 } wk_poisson_method;

/* Element of A_n(R), center polynomial in u1..un, v1..vn, endomorphism. */
typedef struct wk_element wk_element;
typedef struct wk_poly wk_poly;
typedef struct wk_endo wk_endo;

/* "E_PARSE", "E_BAD_PRIME", ...; "OK" for WK_OK. */
WK_API const char* wk_status_name(wk_status status);

/* Message of the last failure on the calling thread; empty after success. */
WK_API const char* wk_last_error_message(void);

/* Strings returned through char** out parameters are owned by the caller. */
WK_API void wk_string_free(char* s);

/* characteristic 0 selects QQ, a prime p selects GF(p). */
WK_API wk_status wk_element_parse(size_t n, uint64_t characteristic, const char* text, wk_element** out);
WK_API void wk_element_free(wk_element* e);
WK_API wk_status wk_element_render(const wk_element* e, char** out);
WK_API wk_status wk_element_equal(const wk_element* a, const wk_element* b, int* out);
WK_API wk_status wk_element_add(const wk_element* a, const wk_element* b, wk_element** out);
WK_API wk_status wk_element_mul(const wk_element* a, const wk_element* b, wk_element** out);
WK_API wk_status wk_element_commutator(const wk_element* a, const wk_element* b, wk_element** out);
WK_API wk_status wk_element_degree(const wk_element* e, int64_t* out); /* -1 for zero */

/* Jacobson splits off the leading term and recurses on the rest; BOTH
   fails with WK_E_INTERNAL if the two methods disagree. */
WK_API wk_status wk_element_pth_power(const wk_element* e, wk_pth_method method, wk_element** out);

WK_API wk_status wk_element_is_central(const wk_element* e, int* out);
WK_API wk_status wk_element_center_coords(const wk_element* e, wk_poly** out);

WK_API wk_status wk_poly_parse(size_t n, uint64_t characteristic, const char* text, wk_poly** out);
WK_API void wk_poly_free(wk_poly* p);
WK_API wk_status wk_poly_render(const wk_poly* p, char** out);
WK_API wk_status wk_poly_equal(const wk_poly* a, const wk_poly* b, int* out);

/* Bracket of two central elements, in center coordinates. */
WK_API wk_status wk_poisson(const wk_element* f, const wk_element* g, wk_poisson_method method, wk_poly** out);

/* JSON document {"format": 1, "n": .., "char": .., "images": {"x1": .., "d1": ..}}.
   Construction validates the Weyl relations. */
WK_API wk_status wk_endo_from_json(const char* json, wk_endo** out);
WK_API wk_status wk_endo_to_json(const wk_endo* e, char** out);
WK_API void wk_endo_free(wk_endo* e);
WK_API wk_status wk_endo_equal(const wk_endo* a, const wk_endo* b, int* out);
WK_API wk_status wk_endo_degree(const wk_endo* e, uint64_t* out);
WK_API wk_status wk_endo_apply(const wk_endo* e, const wk_element* f, wk_element** out);
WK_API wk_status wk_endo_reduce(const wk_endo* e, uint64_t p, wk_endo** out);
/* (e1 o e2)(f) = e1(e2(f)) */
WK_API wk_status wk_endo_compose(const wk_endo* e1, const wk_endo* e2, wk_endo** out);

/* The analysis reports below are JSON documents. */
WK_API wk_status wk_endo_center_map(const wk_endo* e, char** report_json);
WK_API wk_status wk_endo_jacobian(const wk_endo* e, char** report_json);
WK_API wk_status wk_endo_flat_probe(const wk_endo* e, char** report_json);
/* bound < 0 selects deg^(2n-1) */
WK_API wk_status wk_endo_inverse_system(const wk_endo* e, int64_t bound, char** report_json);

WK_API wk_status wk_endo_invert(const wk_endo* e, wk_endo** out);
WK_API wk_status wk_endo_birational_degree(const wk_endo* e, uint64_t* out);
WK_API wk_status wk_endo_invert_crt(const wk_endo* e, const uint64_t* primes, size_t count, wk_endo** out);

#ifdef __cplusplus
}
#endif

#endif
