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

#include <cmath>

#include "beukers/errors.hpp"

namespace beukers {

/// Target accuracy in decimal digits plus guard digits for internal work.
/// Precision travels inside this object; there is no global precision state
/// anywhere in the library. Every operation computes at digits+guard and
/// reports results meant to be accurate to 10^(-digits).
struct PrecisionContext {
    long digits;
    long guard;

    /// Default guard: max(10, digits/10), enough to absorb the cancellation
    /// seen in reflection formulas and gamma prefactor quotients.
    explicit PrecisionContext(long digits_, long guard_ = -1)
        : digits(digits_),
          guard(guard_ >= 0 ? guard_ : (digits_ / 10 > 10 ? digits_ / 10 : 10)) {
        if (digits < 10) throw DomainError("PrecisionContext requires digits >= 10");
        if (guard < 10) throw DomainError("PrecisionContext requires guard >= 10");
    }

    long work_digits() const { return digits + guard; }

    /// Binary working precision for MPFR variables.
    long bits() const {
        return static_cast<long>(std::ceil(static_cast<double>(work_digits()) * 3.3219280948873626)) + 16;
    }

    /// Context for intermediate work at `extra` additional decimal digits.
    PrecisionContext deeper(long extra) const { return PrecisionContext(digits + extra, guard); }
};

} // namespace beukers
