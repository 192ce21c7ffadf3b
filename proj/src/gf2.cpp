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

#include "turbolab/gf2.hpp"

#include <stdexcept>
#include <utility>

namespace turbolab {

namespace {

std::uint64_t low_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1); }

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, 0) {
    if (rows > kMaxBitMatrixSide || cols > kMaxBitMatrixSide) {
        throw std::invalid_argument("BitMatrix side exceeds 64");
    }
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.data_[i] = std::uint64_t{1} << i;
    }
    return m;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string> rows) {
    if (rows.empty()) {
        return BitMatrix();
    }
    const std::size_t cols = rows[0].size();
    if (rows.size() > kMaxBitMatrixSide || cols > kMaxBitMatrixSide) {
        throw std::invalid_argument("matrix larger than 64x64");
    }
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::string& s = rows[r];
        if (s.size() != cols) {
            throw std::invalid_argument("matrix row " + std::to_string(r) + " has length " + std::to_string(s.size()) +
                                        ", expected " + std::to_string(cols));
        }
        for (std::size_t c = 0; c < cols; ++c) {
            if (s[c] == '1') {
                m.data_[r] |= std::uint64_t{1} << c;
            } else if (s[c] != '0') {
                throw std::invalid_argument("matrix row " + std::to_string(r) + " has invalid character '" +
                                            std::string(1, s[c]) + "' at column " + std::to_string(c));
            }
        }
    }
    return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
    if (v) {
        data_[r] |= std::uint64_t{1} << c;
    } else {
        data_[r] &= ~(std::uint64_t{1} << c);
    }
}

void BitMatrix::set_row(std::size_t r, std::uint64_t bits) { data_[r] = bits & low_mask(cols_); }

std::uint64_t BitMatrix::column(std::size_t c) const {
    std::uint64_t out = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
        out |= ((data_[r] >> c) & 1) << r;
    }
    return out;
}

std::uint64_t BitMatrix::apply(std::uint64_t x) const {
    std::uint64_t out = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
        out |= static_cast<std::uint64_t>(parity(data_[r] & x)) << r;
    }
    return out;
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw std::invalid_argument("BitMatrix product dimension mismatch");
    }
    BitMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        std::uint64_t bits = data_[r];
        while (bits != 0) {
            acc ^= rhs.data_[static_cast<std::size_t>(std::countr_zero(bits))];
            bits &= bits - 1;
        }
        out.data_[r] = acc;
    }
    return out;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix out(cols_, rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        out.data_[c] = column(c);
    }
    return out;
}

BitMatrix BitMatrix::select_rows(std::span<const std::size_t> rows) const {
    BitMatrix out(rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.data_[i] = data_.at(rows[i]);
    }
    return out;
}

std::size_t BitMatrix::rank() const { return rank_of(data_); }

std::optional<BitMatrix> BitMatrix::inverse() const {
    if (!is_square()) {
        return std::nullopt;
    }
    const std::size_t n = rows_;
    std::vector<std::uint64_t> a = data_;
    std::vector<std::uint64_t> inv = identity(n).data_;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && ((a[pivot] >> col) & 1) == 0) {
            ++pivot;
        }
        if (pivot == n) {
            return std::nullopt;
        }
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != col && ((a[r] >> col) & 1) != 0) {
                a[r] ^= a[col];
                inv[r] ^= inv[col];
            }
        }
    }
    BitMatrix out(n, n);
    out.data_ = std::move(inv);
    return out;
}

std::vector<std::string> BitMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::string s(cols_, '0');
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) {
                s[c] = '1';
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::size_t rank_of(std::span<const std::uint64_t> vectors) {
    std::vector<std::uint64_t> v(vectors.begin(), vectors.end());
    std::size_t rank = 0;
    for (int bit = 0; bit < 64 && rank < v.size(); ++bit) {
        const std::uint64_t mask = std::uint64_t{1} << bit;
        std::size_t pivot = rank;
        while (pivot < v.size() && (v[pivot] & mask) == 0) {
            ++pivot;
        }
        if (pivot == v.size()) {
            continue;
        }
        std::swap(v[pivot], v[rank]);
        for (std::size_t r = 0; r < v.size(); ++r) {
            if (r != rank && (v[r] & mask) != 0) {
                v[r] ^= v[rank];
            }
        }
        ++rank;
    }
    return rank;
}

std::vector<std::uint64_t> span_elements(std::span<const std::uint64_t> basis) {
    if (basis.size() >= 32) {
        throw std::invalid_argument("span too large to enumerate");
    }
    std::vector<std::uint64_t> out(std::size_t{1} << basis.size(), 0);
    for (std::size_t i = 1; i < out.size(); ++i) {
        const auto low = static_cast<std::size_t>(std::countr_zero(i));
        out[i] = out[i & (i - 1)] ^ basis[low];
    }
    return out;
}

}  // namespace turbolab
