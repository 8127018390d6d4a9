#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace unitgroups {

/// Dense matrix over Z with arbitrary-precision entries, row-major storage.
/// All arithmetic is exact; zero-row and zero-column shapes are valid.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const mpz_class& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    mpz_class& operator()(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }

    IntMatrix transpose() const;
    std::vector<mpz_class> column(std::size_t j) const;
    std::vector<mpz_class> row(std::size_t i) const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

    std::vector<mpz_class> apply(const std::vector<mpz_class>& v) const;
    IntMatrix power(unsigned long e) const;

    /// Columns of `a` followed by columns of `b`; row counts must agree.
    static IntMatrix concat_cols(const IntMatrix& a, const IntMatrix& b);
    /// Submatrix of whole rows [r0, r1) (all columns).
    IntMatrix row_slice(std::size_t r0, std::size_t r1) const;
    /// Submatrix of whole columns [c0, c1) (all rows).
    IntMatrix col_slice(std::size_t c0, std::size_t c1) const;
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<mpz_class>>& cols);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> entries_;
};

/// Exact determinant of a square matrix (fraction-free elimination).
mpz_class determinant(const IntMatrix& a);

} // namespace unitgroups
