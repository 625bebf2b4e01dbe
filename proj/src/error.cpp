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

#include "weylkit/error.hpp"

namespace weylkit {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ParseError: return "E_PARSE";
        case ErrorCode::IndexOutOfRange: return "E_INDEX_OUT_OF_RANGE";
        case ErrorCode::NegativeExponent: return "E_NEGATIVE_EXPONENT";
        case ErrorCode::RingMismatch: return "E_RING_MISMATCH";
        case ErrorCode::SignatureMismatch: return "E_SIGNATURE_MISMATCH";
        case ErrorCode::DivisionByZero: return "E_DIVISION_BY_ZERO";
        case ErrorCode::NonUnitDivision: return "E_NON_UNIT_DIVISION";
        case ErrorCode::NotPrime: return "E_NOT_PRIME";
        case ErrorCode::BadPrimeDenominator: return "E_BAD_PRIME_DENOMINATOR";
        case ErrorCode::BadPrime: return "E_BAD_PRIME";
        case ErrorCode::RelationViolation: return "E_RELATION_VIOLATION";
        case ErrorCode::NotCentral: return "E_NOT_CENTRAL";
        case ErrorCode::NonDivisibleCommutator: return "E_NON_DIVISIBLE_COMMUTATOR";
        case ErrorCode::NotExpressible: return "E_NOT_EXPRESSIBLE";
        case ErrorCode::BadImages: return "E_BAD_IMAGES";
        case ErrorCode::NotInvertible: return "E_NOT_INVERTIBLE";
        case ErrorCode::NotAnAutomorphism: return "E_NOT_AN_AUTOMORPHISM";
        case ErrorCode::NotGenericallyFinite: return "E_NOT_GENERICALLY_FINITE";
        case ErrorCode::DependentSubringGenerators: return "E_DEPENDENT_SUBRING_GENERATORS";
        case ErrorCode::CentralityFailure: return "E_CENTRALITY_FAILURE";
        case ErrorCode::Inconclusive: return "E_INCONCLUSIVE";
        case ErrorCode::InvalidArgument: return "E_INVALID_ARGUMENT";
        case ErrorCode::InvalidSpec: return "E_INVALID_SPEC";
        case ErrorCode::Internal: return "E_INTERNAL";
    }
    return "E_INTERNAL";
}

}  // namespace weylkit
