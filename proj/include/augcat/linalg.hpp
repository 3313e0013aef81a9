/* Dense exact linear algebra over F_p: rank, row echelon form, kernels.
 * Matrices here stay small (one row/column per Reeb chord), so no sparse
 * machinery. */

#pragma once

#include <cstdint>
#include <vector>

#include "augcat/fp.hpp"

namespace augcat {

class FpMatrix {
public:
    FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

    static FpMatrix identity(std::size_t n, std::uint32_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t characteristic() const { return p_; }

    std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint32_t v) { data_[r * cols_ + c] = v % p_; }
    void add_at(std::size_t r, std::size_t c, Scalar v);

    FpMatrix transposed() const;
    FpMatrix operator*(const FpMatrix& other) const;
    bool is_zero() const;
    bool operator==(const FpMatrix& other) const;

private:
    std::size_t rows_, cols_;
    std::uint32_t p_;
    std::vector<std::uint32_t> data_;
};

struct RowEchelon {
    FpMatrix reduced;               // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column per nonzero row
    std::size_t rank = 0;
};

RowEchelon row_reduce(FpMatrix m);
std::size_t rank(const FpMatrix& m);

/* Basis of the right kernel, one vector (length = cols) per basis element. */
std::vector<std::vector<std::uint32_t>> kernel_basis(const FpMatrix& m);

/* Canonical representative of v modulo the row space captured by ech. */
std::vector<std::uint32_t> reduce_mod_rowspace(const RowEchelon& ech,
                                               std::vector<std::uint32_t> v);

} // namespace augcat
