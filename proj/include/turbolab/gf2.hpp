// Copyright 2026 The turbolab Authors
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

#ifndef TURBOLAB_GF2_HPP
#define TURBOLAB_GF2_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace turbolab {

/// Maximum number of rows or columns of a BitMatrix. Every row is one machine word.
inline constexpr std::size_t kMaxBitMatrixSide = 64;

inline bool parity(std::uint64_t x) { return (std::popcount(x) & 1) != 0; }

/// Dense matrix over the two-element field, at most 64x64.
///
/// Row r is stored as a word whose bit c holds entry (r, c). Matrix-vector
/// products follow the same convention: bit c of the input vector is
/// coordinate c, bit r of the output is coordinate r.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);

    /// Parses rows written as '0'/'1' strings; throws std::invalid_argument
    /// naming the offending row.
    static BitMatrix from_strings(std::span<const std::string> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return ((data_[r] >> c) & 1) != 0; }
    void set(std::size_t r, std::size_t c, bool v);

    std::uint64_t row(std::size_t r) const { return data_[r]; }
    void set_row(std::size_t r, std::uint64_t bits);

    /// Bit r of the result is entry (r, c).
    std::uint64_t column(std::size_t c) const;

    std::uint64_t apply(std::uint64_t x) const;

    BitMatrix operator*(const BitMatrix& rhs) const;
    BitMatrix transpose() const;
    BitMatrix select_rows(std::span<const std::size_t> rows) const;

    std::size_t rank() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_invertible() const { return is_square() && rank() == rows_; }
    std::optional<BitMatrix> inverse() const;

    std::vector<std::string> to_strings() const;

    bool operator==(const BitMatrix& other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Rank of a set of vectors packed as words.
std::size_t rank_of(std::span<const std::uint64_t> vectors);

/// Every element of the span of `basis`, ordered by the binary counter over
/// basis coefficients (element i = XOR of basis[j] for bits j of i).
std::vector<std::uint64_t> span_elements(std::span<const std::uint64_t> basis);

}  // namespace turbolab

#endif
