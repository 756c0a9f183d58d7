#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace srgint {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& q);

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transpose() const;
    /// this^T * this, computed with 64-bit accumulation.
    IntMatrix gram_of_columns() const;

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::int64_t> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Exact positive-semidefiniteness test for a symmetric integer matrix via
/// symmetric Gaussian elimination over the rationals. A zero pivot forces
/// its whole remaining row to vanish; any negative pivot refutes.
bool is_positive_semidefinite(const IntMatrix& m);

/// Exact rank by fraction-free (Bareiss) elimination with pivot search.
std::size_t exact_rank(const IntMatrix& m);

/// Exact determinant of a square matrix of big integers (Bareiss).
BigInt exact_determinant(std::vector<std::vector<BigInt>> m);

/// Row Hermite normal form of the integer row span; returns the nonzero
/// basis rows. Rows are independent and span the same Z-module.
std::vector<std::vector<BigInt>> hermite_basis(const IntMatrix& rows);

}  // namespace srgint
