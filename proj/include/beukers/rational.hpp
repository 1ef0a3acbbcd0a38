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

#include <cstdint>
#include <numeric>
#include <string>

#include "beukers/errors.hpp"

namespace beukers {

/// Exact rational p/q on 64-bit components. All integral/pole tests in the
/// library run on these, never on rounded floating values. The parameters
/// this toolkit meets are tiny (sevenths and the like), but intermediate
/// products are routed through 128-bit arithmetic and range-checked anyway.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    /// True for 0, -1, -2, ... (the gamma pole set).
    bool is_nonpositive_integer() const { return den_ == 1 && num_ <= 0; }

    Rational operator-() const { return Rational(-num_, den_, already_normal_tag{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked(i128(a.num_) * b.den_ + i128(b.num_) * a.den_),
                        checked(i128(a.den_) * b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked(i128(a.num_) * b.num_), checked(i128(a.den_) * b.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DomainError("rational division by zero");
        return Rational(checked(i128(a.num_) * b.den_), checked(i128(a.den_) * b.num_));
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    long long floor_ll() const {
        long long q = num_ / den_;
        if (num_ < 0 && num_ % den_ != 0) --q;
        return q;
    }

    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    /// Parses "p", "-p", or "p/q". Anything else is a ParseError.
    static Rational parse(const std::string& text) {
        if (text.empty()) throw ParseError("empty rational");
        auto slash = text.find('/');
        try {
            size_t used = 0;
            if (slash == std::string::npos) {
                long long n = std::stoll(text, &used);
                if (used != text.size()) throw ParseError("trailing characters in rational '" + text + "'");
                return Rational(n);
            }
            long long n = std::stoll(text.substr(0, slash), &used);
            if (used != slash) throw ParseError("bad numerator in rational '" + text + "'");
            std::string dtex = text.substr(slash + 1);
            long long d = std::stoll(dtex, &used);
            if (used != dtex.size()) throw ParseError("bad denominator in rational '" + text + "'");
            if (d == 0) throw ParseError("zero denominator in rational '" + text + "'");
            return Rational(n, d);
        } catch (const std::invalid_argument&) {
            throw ParseError("not a rational: '" + text + "'");
        } catch (const std::out_of_range&) {
            throw ParseError("rational out of range: '" + text + "'");
        }
    }

private:
    using i128 = __int128;
    struct already_normal_tag {};
    Rational(long long n, long long d, already_normal_tag) : num_(n), den_(d) {}

    static long long checked(i128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw DomainError("rational overflow");
        return static_cast<long long>(v);
    }

    void normalize() {
        if (den_ == 0) throw DomainError("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    long long num_;
    long long den_;
};

inline Rational operator+(long long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long long a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(long long a, const Rational& b) { return Rational(a) * b; }

} // namespace beukers
