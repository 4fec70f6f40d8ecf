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

#include "hyperlu/linalg.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace hyperlu {

namespace {

struct NeedWide {};

int64_t mulsub(int64_t a, int64_t b, int64_t c, int64_t d) {
    int64_t ab, cd, out;
    if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(c, d, &cd) || __builtin_sub_overflow(ab, cd, &out)) {
        throw NeedWide{};
    }
    return out;
}

BigInt mulsub(const BigInt &a, const BigInt &b, const BigInt &c, const BigInt &d) {
    return a * b - c * d;
}

bool is_zero(int64_t a) {
    return a == 0;
}
bool is_zero(const BigInt &a) {
    return sgn(a) == 0;
}
bool is_negative(int64_t a) {
    return a < 0;
}
bool is_negative(const BigInt &a) {
    return sgn(a) < 0;
}

void make_primitive(std::vector<int64_t> &v) {
    int64_t g = 0;
    for (int64_t x : v) {
        if (x == INT64_MIN) {
            throw NeedWide{};
        }
        g = std::gcd(g, std::abs(x));
    }
    if (g > 1) {
        for (auto &x : v) {
            x /= g;
        }
    }
}

void make_primitive(std::vector<BigInt> &v) {
    BigInt g = 0;
    for (const auto &x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (g > 1) {
        for (auto &x : v) {
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        }
    }
}

template <typename T>
bool insert_row(std::vector<std::vector<T>> &rows, std::vector<int> &pivots, std::vector<T> v) {
    for (size_t k = 0; k < rows.size(); k++) {
        int c = pivots[k];
        if (is_zero(v[c])) {
            continue;
        }
        T f = v[c];
        const T &p = rows[k][c];
        for (size_t j = 0; j < v.size(); j++) {
            v[j] = mulsub(v[j], p, f, rows[k][j]);
        }
        make_primitive(v);
    }
    int lead = -1;
    for (size_t j = 0; j < v.size(); j++) {
        if (!is_zero(v[j])) {
            lead = static_cast<int>(j);
            break;
        }
    }
    if (lead < 0) {
        return false;
    }
    if (is_negative(v[lead])) {
        for (auto &x : v) {
            x = -x;
        }
    }
    // Clear the new pivot column from older rows; staged so an overflow leaves rows intact.
    std::vector<std::pair<size_t, std::vector<T>>> staged;
    for (size_t k = 0; k < rows.size(); k++) {
        if (is_zero(rows[k][lead])) {
            continue;
        }
        std::vector<T> w = rows[k];
        T f = w[lead];
        for (size_t j = 0; j < w.size(); j++) {
            w[j] = mulsub(w[j], v[lead], f, v[j]);
        }
        make_primitive(w);
        staged.emplace_back(k, std::move(w));
    }
    for (auto &[k, w] : staged) {
        rows[k] = std::move(w);
    }
    auto pos = std::lower_bound(pivots.begin(), pivots.end(), lead) - pivots.begin();
    pivots.insert(pivots.begin() + pos, lead);
    rows.insert(rows.begin() + pos, std::move(v));
    return true;
}

}  // namespace

IntegerRref::IntegerRref(int num_columns) : cols_(num_columns) {
}

int IntegerRref::rank() const {
    return static_cast<int>(wide_ ? big_.pivots.size() : small_.pivots.size());
}

void IntegerRref::promote() {
    big_.pivots = small_.pivots;
    big_.rows.clear();
    for (const auto &row : small_.rows) {
        std::vector<BigInt> wide;
        wide.reserve(row.size());
        for (int64_t x : row) {
            wide.emplace_back(static_cast<long>(x));
        }
        big_.rows.push_back(std::move(wide));
    }
    small_ = {};
    wide_ = true;
}

bool IntegerRref::add_row(std::span<const int64_t> row) {
    if (!wide_) {
        try {
            return insert_row(small_.rows, small_.pivots, std::vector<int64_t>(row.begin(), row.end()));
        } catch (const NeedWide &) {
            promote();
        }
    }
    std::vector<BigInt> wide;
    for (int64_t x : row) {
        wide.emplace_back(static_cast<long>(x));
    }
    return insert_row(big_.rows, big_.pivots, std::move(wide));
}

bool IntegerRref::add_row(std::span<const BigInt> row) {
    if (!wide_) {
        bool fits = std::all_of(row.begin(), row.end(), [](const BigInt &x) { return x.fits_slong_p(); });
        if (fits) {
            std::vector<int64_t> narrow;
            for (const auto &x : row) {
                narrow.push_back(x.get_si());
            }
            return add_row(std::span<const int64_t>(narrow));
        }
        promote();
    }
    return insert_row(big_.rows, big_.pivots, std::vector<BigInt>(row.begin(), row.end()));
}

std::vector<std::vector<BigInt>> IntegerRref::rows() const {
    if (wide_) {
        return big_.rows;
    }
    std::vector<std::vector<BigInt>> out;
    for (const auto &row : small_.rows) {
        std::vector<BigInt> wide;
        for (int64_t x : row) {
            wide.emplace_back(static_cast<long>(x));
        }
        out.push_back(std::move(wide));
    }
    return out;
}

std::vector<int> IntegerRref::pivot_columns() const {
    return wide_ ? big_.pivots : small_.pivots;
}

std::vector<std::vector<BigInt>> IntegerRref::nullspace() const {
    auto reduced = rows();
    auto pivots = pivot_columns();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) {
        is_pivot[c] = true;
    }
    std::vector<std::vector<BigInt>> basis;
    for (int f = 0; f < cols_; f++) {
        if (is_pivot[f]) {
            continue;
        }
        std::vector<Rational> x(cols_);
        x[f] = 1;
        for (size_t k = 0; k < reduced.size(); k++) {
            x[pivots[k]] = -Rational(reduced[k][f], reduced[k][pivots[k]]);
            x[pivots[k]].canonicalize();
        }
        basis.push_back(primitive_integer_vector(x));
    }
    return canonical_span_basis(basis, cols_);
}

std::vector<std::vector<BigInt>> canonical_span_basis(const std::vector<std::vector<BigInt>> &vectors, int num_columns) {
    IntegerRref rref(num_columns);
    for (const auto &v : vectors) {
        rref.add_row(std::span<const BigInt>(v));
    }
    return rref.rows();
}

std::vector<BigInt> primitive_integer_vector(std::span<const Rational> v) {
    BigInt common = 1;
    for (const auto &q : v) {
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), q.get_den_mpz_t());
    }
    std::vector<BigInt> out;
    out.reserve(v.size());
    for (const auto &q : v) {
        out.push_back(q.get_num() * (common / q.get_den()));
    }
    make_primitive(out);
    auto lead = std::find_if(out.begin(), out.end(), [](const BigInt &x) { return sgn(x) != 0; });
    if (lead != out.end() && sgn(*lead) < 0) {
        for (auto &x : out) {
            x = -x;
        }
    }
    return out;
}

}  // namespace hyperlu
