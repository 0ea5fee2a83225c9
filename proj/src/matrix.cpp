#include "sl2reps/matrix.hpp"

#include <stdexcept>

#include "sl2reps/field.hpp"

namespace sl2reps {

CMatrix CMatrix::identity(size_t n)
{
    CMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = Cyclotomic(1);
    return m;
}

CMatrix CMatrix::diagonal(const std::vector<Cyclotomic>& d)
{
    CMatrix m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

CMatrix CMatrix::transpose() const
{
    CMatrix m(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

CMatrix CMatrix::conj() const
{
    CMatrix m(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k].conj();
    return m;
}

CMatrix CMatrix::conj_transpose() const
{
    CMatrix m(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j).conj();
    return m;
}

CMatrix CMatrix::scaled(const Cyclotomic& c) const
{
    CMatrix m(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k)
        if (!data_[k].is_zero()) m.data_[k] = data_[k] * c;
    return m;
}

bool CMatrix::operator==(const CMatrix& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool CMatrix::is_identity() const
{
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            const Cyclotomic& x = (*this)(i, j);
            if (i == j ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}

bool CMatrix::is_zero() const
{
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool CMatrix::is_diagonal() const
{
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (i != j && !(*this)(i, j).is_zero()) return false;
    return true;
}

bool CMatrix::is_symmetric() const
{
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

long CMatrix::common_conductor() const
{
    long L = 1;
    for (const auto& x : data_) L = detail::lcm_long(L, x.conductor());
    return L;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    CMatrix m = a;
    for (size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
    return m;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    CMatrix m = a;
    for (size_t k = 0; k < m.data_.size(); ++k) m.data_[k] -= b.data_[k];
    return m;
}

CMatrix multiply_exact(const CMatrix& a, const CMatrix& b)
{
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    CMatrix m(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            const Cyclotomic& x = a(i, k);
            if (x.is_zero()) continue;
            for (size_t j = 0; j < b.cols(); ++j) {
                const Cyclotomic& y = b(k, j);
                if (!y.is_zero()) m(i, j) += x * y;
            }
        }
    return m;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b)
{
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    long L = detail::lcm_long(a.common_conductor(), b.common_conductor());
    if (L > 1 && detail::phi(L) <= 4096) {
        try {
            return (FieldMatrix::from(a, L) * FieldMatrix::from(b, L)).to_cmatrix();
        } catch (const std::overflow_error&) {
        }
    }
    return multiply_exact(a, b);
}

CMatrix kron(const CMatrix& a, const CMatrix& b)
{
    CMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (size_t k = 0; k < b.rows(); ++k)
                for (size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return m;
}

}  // namespace sl2reps
