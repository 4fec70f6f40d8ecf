// Copyright 2026 The hyperlu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPERLU_RATIONAL_H
#define HYPERLU_RATIONAL_H

#include <gmpxx.h>

#include <string>

namespace hyperlu {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Real and imaginary parts kept as exact rationals.
struct ComplexRational {
    Rational re;
    Rational im;

    bool is_zero() const {
        return sgn(re) == 0 && sgn(im) == 0;
    }
    bool operator==(const ComplexRational &other) const {
        return re == other.re && im == other.im;
    }
};

inline std::string to_string(const Rational &q) {
    return q.get_str();
}

}  // namespace hyperlu

#endif
