#include "augcat/linalg.hpp"

namespace augcat {

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0)
{
    if (p < 2)
        throw AlgebraError("matrix characteristic must be at least 2");
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p)
{
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

void FpMatrix::add_at(std::size_t r, std::size_t c, Scalar v)
{
    if (v.characteristic() != p_)
        throw AlgebraError("matrix entry from a different field");
    data_[r * cols_ + c] = (data_[r * cols_ + c] + std::uint64_t(v.value())) % p_;
}

FpMatrix FpMatrix::transposed() const
{
    FpMatrix t(cols_, rows_, p_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.set(c, r, at(r, c));
    return t;
}

FpMatrix FpMatrix::operator*(const FpMatrix& other) const
{
    if (cols_ != other.rows_ || p_ != other.p_)
        throw AlgebraError("matrix product shape/field mismatch");
    FpMatrix out(rows_, other.cols_, p_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t a = at(r, k);
            if (!a)
                continue;
            for (std::size_t c = 0; c < other.cols_; ++c)
                out.set(r, c, (out.at(r, c) + a * other.at(k, c)) % p_);
        }
    return out;
}

bool FpMatrix::is_zero() const
{
    for (std::uint32_t v : data_)
        if (v)
            return false;
    return true;
}

bool FpMatrix::operator==(const FpMatrix& other) const
{
    return rows_ == other.rows_ && cols_ == other.cols_ && p_ == other.p_ &&
           data_ == other.data_;
}

RowEchelon row_reduce(FpMatrix m)
{
    const std::uint32_t p = m.characteristic();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col) == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != row)
            for (std::size_t c = 0; c < m.cols(); ++c) {
                std::uint32_t tmp = m.at(row, c);
                m.set(row, c, m.at(pivot, c));
                m.set(pivot, c, tmp);
            }
        std::uint64_t inv = Scalar(m.at(row, col), p).inverse().value();
        for (std::size_t c = col; c < m.cols(); ++c)
            m.set(row, c, m.at(row, c) * inv % p);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row)
                continue;
            std::uint64_t f = m.at(r, col);
            if (!f)
                continue;
            for (std::size_t c = col; c < m.cols(); ++c)
                m.set(r, c, (m.at(r, c) + (p - 1) * f % p * m.at(row, c)) % p);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots), row};
}

std::size_t rank(const FpMatrix& m)
{
    return row_reduce(m).rank;
}

std::vector<std::vector<std::uint32_t>> kernel_basis(const FpMatrix& m)
{
    const std::uint32_t p = m.characteristic();
    RowEchelon ech = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : ech.pivots)
        is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col])
            continue;
        std::vector<std::uint32_t> v(m.cols(), 0);
        v[free_col] = 1;
        for (std::size_t r = 0; r < ech.rank; ++r) {
            std::uint32_t coeff = ech.reduced.at(r, free_col);
            if (coeff)
                v[ech.pivots[r]] = (p - coeff) % p;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::uint32_t> reduce_mod_rowspace(const RowEchelon& ech,
                                               std::vector<std::uint32_t> v)
{
    const std::uint32_t p = ech.reduced.characteristic();
    if (v.size() != ech.reduced.cols())
        throw AlgebraError("vector length does not match the row space");
    for (std::size_t r = 0; r < ech.rank; ++r) {
        std::uint64_t f = v[ech.pivots[r]];
        if (!f)
            continue;
        for (std::size_t c = 0; c < v.size(); ++c)
            v[c] = (v[c] + (p - 1) * f % p * ech.reduced.at(r, c)) % p;
    }
    return v;
}

} // namespace augcat
