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
#include "hsdual/matrix.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hsdual/kernels.h"

namespace hsdual {

bool Tolerance::close(double x, double y) const {
    return std::abs(x - y) <= abs + rel * std::max(std::abs(x), std::abs(y));
}

bool Tolerance::close(cplx x, cplx y) const {
    return std::abs(x - y) <= abs + rel * std::max(std::abs(x), std::abs(y));
}

void check_entry_budget(std::size_t rows, std::size_t cols, std::size_t max_entries) {
    if (rows != 0 && cols > std::numeric_limits<std::size_t>::max() / rows) {
        throw DimensionError("matrix dimensions overflow");
    }
    if (rows * cols > max_entries) {
        throw DimensionError("matrix of " + std::to_string(rows) + "x" + std::to_string(cols) +
                             " exceeds the entry limit of " + std::to_string(max_entries));
    }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
    check_entry_budget(rows, cols);
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    check_entry_budget(rows, cols);
    if (data_.size() != rows * cols) {
        throw DimensionError("entry count " + std::to_string(data_.size()) + " does not match " +
                             shape_str());
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw DimensionError("ragged matrix literal");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t d) {
    ComplexMatrix m(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        m(k, k) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::column(std::span<const cplx> entries) {
    return ComplexMatrix(entries.size(), 1, std::vector<cplx>(entries.begin(), entries.end()));
}

ComplexMatrix ComplexMatrix::column(std::initializer_list<cplx> entries) {
    return ComplexMatrix(entries.size(), 1, std::vector<cplx>(entries));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        m(k, k) = values[k];
    }
    return m;
}

ComplexMatrix ComplexMatrix::unit_vector(std::size_t d, std::size_t k) {
    if (k >= d) {
        throw DimensionError("unit vector index out of range");
    }
    ComplexMatrix v(d, 1);
    v[k] = 1.0;
    return v;
}

ComplexMatrix ComplexMatrix::matrix_unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
    if (i >= rows || j >= cols) {
        throw DimensionError("matrix unit index out of range");
    }
    ComplexMatrix m(rows, cols);
    m(i, j) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::col(std::size_t c) const {
    if (c >= cols_) {
        throw DimensionError("column index out of range");
    }
    ComplexMatrix v(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

void ComplexMatrix::set_col(std::size_t c, const ComplexMatrix &v) {
    if (c >= cols_ || v.size() != rows_) {
        throw DimensionError("set_col: shape mismatch");
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        (*this)(r, c) = v[r];
    }
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionError("add: " + shape_str() + " vs " + other.shape_str());
    }
    kernels::active().axpy(1.0, other.data_.data(), data_.data(), data_.size());
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionError("subtract: " + shape_str() + " vs " + other.shape_str());
    }
    kernels::active().axpy(-1.0, other.data_.data(), data_.data(), data_.size());
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(cplx scale) {
    for (auto &x : data_) {
        x *= scale;
    }
    return *this;
}

std::string ComplexMatrix::shape_str() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(cplx scale, ComplexMatrix a) {
    a *= scale;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matmul: " + a.shape_str() + " * " + b.shape_str());
    }
    const auto &k = kernels::active();
    ComplexMatrix out(a.rows(), b.cols());
    // i-k-j order: each output row is a linear combination of rows of b.
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx *out_row = out.row(i).data();
        for (std::size_t p = 0; p < a.cols(); ++p) {
            const cplx coeff = a(i, p);
            if (coeff != cplx{}) {
                k.axpy(coeff, b.row(p).data(), out_row, b.cols());
            }
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("max_abs_diff: " + a.shape_str() + " vs " + b.shape_str());
    }
    double out = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        out = std::max(out, std::abs(a[k] - b[k]));
    }
    return out;
}

bool all_close(const ComplexMatrix &a, const ComplexMatrix &b, Tolerance tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!tol.close(a[k], b[k])) {
            return false;
        }
    }
    return true;
}

}  // namespace hsdual
