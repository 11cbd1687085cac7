// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The leoauction Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef LEOAUCTION_COMMON_HPP
#define LEOAUCTION_COMMON_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace leoauction {

using GsIndex = std::size_t;
using ScIndex = std::size_t;

// Per-SC boolean, one byte each.
using Flag = unsigned char;

// Invalid scenario parameters. Mapped to exit code 2 by the CLI.
class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// A bid message that cannot be represented on the wire or refers to a
// subcarrier outside the active scenario.
class ProtocolError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// File system failures, carrying the offending path in the message.
class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Dense row-major matrix; rows are ground stations, columns subcarriers.
template <typename T>
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    const std::vector<T> &data() const noexcept { return data_; }

    bool operator==(const Matrix &) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

}  // namespace leoauction

#endif  // LEOAUCTION_COMMON_HPP
