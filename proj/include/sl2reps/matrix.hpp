#pragma once

#include <cstddef>
#include <vector>

#include "sl2reps/cyclotomic.hpp"

namespace sl2reps {

// Dense matrix over cyclotomic numbers, row-major.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CMatrix identity(size_t n);
    static CMatrix diagonal(const std::vector<Cyclotomic>& d);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Cyclotomic& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Cyclotomic& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    CMatrix transpose() const;
    CMatrix conj() const;
    CMatrix conj_transpose() const;
    CMatrix scaled(const Cyclotomic& c) const;

    bool operator==(const CMatrix& o) const;
    bool operator!=(const CMatrix& o) const { return !(*this == o); }
    bool is_identity() const;
    bool is_zero() const;
    bool is_diagonal() const;
    bool is_symmetric() const;
    // Smallest N with every entry in Q(zeta_N).
    long common_conductor() const;

    friend CMatrix operator+(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Cyclotomic> data_;
};

// Product through cyclotomic arithmetic only (no machine-integer fast path).
CMatrix multiply_exact(const CMatrix& a, const CMatrix& b);
CMatrix kron(const CMatrix& a, const CMatrix& b);

}  // namespace sl2reps
