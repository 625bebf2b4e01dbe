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

#ifndef WEYLKIT_ERROR_HPP
#define WEYLKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace weylkit {

// Every failure the library can report. The C API maps these one to one
// onto wk_status values, and the CLI onto its `E_*:` prefixes.
enum class ErrorCode {
    ParseError,
    IndexOutOfRange,
    NegativeExponent,
    RingMismatch,
    SignatureMismatch,
    DivisionByZero,
    NonUnitDivision,
    NotPrime,
    BadPrimeDenominator,
    BadPrime,
    RelationViolation,
    NotCentral,
    NonDivisibleCommutator,
    NotExpressible,
    BadImages,
    NotInvertible,
    NotAnAutomorphism,
    NotGenericallyFinite,
    DependentSubringGenerators,
    CentralityFailure,
    Inconclusive,
    InvalidArgument,
    InvalidSpec,
    Internal,
};

// Machine-parsable prefix without the trailing colon, e.g. "E_BAD_PRIME".
const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

// Error carrying the source offset of a parse failure.
class ParseError : public Error {
   public:
    ParseError(std::size_t position, const std::string& what)
        : Error(ErrorCode::ParseError, what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

}  // namespace weylkit

#endif
