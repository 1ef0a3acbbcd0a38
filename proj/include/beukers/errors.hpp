// Copyright (c) 2026 beukers contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace beukers {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Gamma (or other meromorphic) function evaluated at a pole.
struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

/// Input outside the mathematical domain of the operation.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Non-terminating series with non-positive parametric excess.
struct DivergentError : Error {
    explicit DivergentError(const std::string& msg) : Error(msg) {}
};

/// The two-term hypergeometric reduction requires c-d to be a non-integer.
struct ReductionInapplicable : Error {
    explicit ReductionInapplicable(const std::string& msg) : Error(msg) {}
};

/// Contour abscissa outside the admissible pole-separating window.
struct WindowViolation : Error {
    explicit WindowViolation(const std::string& msg) : Error(msg) {}
};

/// Quadrature or contour refinement hit its level cap without agreement.
struct NoConvergence : Error {
    explicit NoConvergence(const std::string& msg) : Error(msg) {}
};

/// Working precision too low to certify the requested result.
struct InsufficientPrecision : Error {
    explicit InsufficientPrecision(const std::string& msg) : Error(msg) {}
};

/// Division where the denominator is within tolerance of zero.
struct DivisionByNearZero : Error {
    explicit DivisionByNearZero(const std::string& msg) : Error(msg) {}
};

/// Catalog lookup with a name that is not present.
struct UnknownConstant : Error {
    explicit UnknownConstant(const std::string& msg) : Error(msg) {}
};

/// Malformed textual input (rationals, expression trees, suite files).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace beukers
