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

#ifndef HYPERLU_LINALG_H
#define HYPERLU_LINALG_H

#include <cstdint>
#include <span>
#include <vector>

#include "hyperlu/rational.h"

namespace hyperlu {

/// Exact row-reduced echelon form over the integers. Rows are added one at a
/// time; each stored row is primitive (coprime entries) with a positive pivot,
/// and every pivot column is zero in all other rows.
///
/// Arithmetic runs in checked int64 and switches to GMP integers the first
/// time an intermediate value would overflow.
class IntegerRref {
   public:
    explicit IntegerRref(int num_columns);

    int num_columns() const {
        return cols_;
    }
    int rank() const;

    /// Returns true if the row was independent of the rows seen so far.
    bool add_row(std::span<const int64_t> row);
    bool add_row(std::span<const BigInt> row);

    /// Stored rows sorted by pivot column.
    std::vector<std::vector<BigInt>> rows() const;
    std::vector<int> pivot_columns() const;

    /// Integer basis of {x : A x = 0}, itself in canonical echelon form.
    std::vector<std::vector<BigInt>> nullspace() const;

   private:
    template <typename T>
    struct Store {
        std::vector<std::vector<T>> rows;
        std::vector<int> pivots;
    };

    void promote();

    int cols_;
    bool wide_ = false;
    Store<int64_t> small_;
    Store<BigInt> big_;
};

/// Canonical echelon basis of the span of `vectors`: primitive integer rows,
/// positive leading entries, reduced echelon order.
std::vector<std::vector<BigInt>> canonical_span_basis(const std::vector<std::vector<BigInt>> &vectors, int num_columns);

/// Scales a rational vector to coprime integers with positive first nonzero entry.
std::vector<BigInt> primitive_integer_vector(std::span<const Rational> v);

}  // namespace hyperlu

#endif
