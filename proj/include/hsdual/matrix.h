// Copyright 2026 The hsdual Authors
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

#ifndef HSDUAL_MATRIX_H
#define HSDUAL_MATRIX_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsdual {

using cplx = std::complex<double>;

/// Raised when operand shapes are incompatible or exceed the configured size
/// guard. Distinct from plain std::invalid_argument so front ends can map it to
/// its own exit code.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Default cap on the number of entries a single matrix may hold.
inline constexpr std::size_t kDefaultMaxEntries = std::size_t{1} << 20;

/// Mixed absolute/relative comparison: |x - y| <= abs + rel * max(|x|, |y|).
struct Tolerance {
    double abs = 1e-10;
    double rel = 1e-10;

    bool close(double x, double y) const;
    bool close(cplx x, cplx y) const;
};

/// Dense row-major complex matrix. Vectors are single-column matrices.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
    /// Row-by-row literal, e.g. {{1, 0}, {0, 1}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t d);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
    static ComplexMatrix column(std::span<const cplx> entries);
    static ComplexMatrix column(std::initializer_list<cplx> entries);
    static ComplexMatrix diagonal(std::span<const double> values);
    /// Standard basis vector e_k of C^d as a column.
    static ComplexMatrix unit_vector(std::size_t d, std::size_t k);
    /// Matrix unit |e_i><e_j| of shape rows x cols.
    static ComplexMatrix matrix_unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }
    bool is_square() const { return rows_ == cols_; }

    cplx &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    /// Flat access, useful for column vectors.
    cplx &operator[](std::size_t k) { return data_[k]; }
    const cplx &operator[](std::size_t k) const { return data_[k]; }

    std::span<cplx> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const cplx> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<cplx> flat() { return data_; }
    std::span<const cplx> flat() const { return data_; }

    ComplexMatrix col(std::size_t c) const;
    void set_col(std::size_t c, const ComplexMatrix &v);

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(cplx scale);

    bool operator==(const ComplexMatrix &other) const = default;

    std::string shape_str() const;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(cplx scale, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

/// Largest elementwise |a - b|. Shapes must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Elementwise closeness under `tol`.
bool all_close(const ComplexMatrix &a, const ComplexMatrix &b, Tolerance tol = {});

/// Throws DimensionError if rows * cols would exceed `max_entries`.
void check_entry_budget(std::size_t rows, std::size_t cols, std::size_t max_entries = kDefaultMaxEntries);

}  // namespace hsdual

#endif
