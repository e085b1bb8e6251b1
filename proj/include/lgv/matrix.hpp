#ifndef LGV_MATRIX_HPP
#define LGV_MATRIX_HPP

#include "lgv/polynomial.hpp"
#include "lgv/rational.hpp"
#include "lgv/subsets.hpp"

#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace lgv {

/// Dense matrix of Rational, row-major. All arithmetic is exact.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(checked_size(rows, cols), Rational(0)) {}

    Matrix(std::initializer_list<std::initializer_list<Rational>> init) {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
        a_.reserve(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_));
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols_)
                throw std::invalid_argument("Matrix: ragged initializer");
            a_.insert(a_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(int r, int c) { return a_[idx(r, c)]; }
    const Rational& operator()(int r, int c) const { return a_[idx(r, c)]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix: dimension mismatch in addition");
        Matrix c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
        return c;
    }

    friend Matrix operator*(const Rational& s, const Matrix& m) {
        Matrix c = m;
        for (auto& v : c.a_) v *= s;
        return c;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("Matrix: dimension mismatch in product");
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const Rational& bkj = b(k, j);
                    if (!bkj.is_zero()) c(i, j) += aik * bkj;
                }
            }
        return c;
    }

private:
    static std::size_t checked_size(int rows, int cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
        return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    }
    std::size_t idx(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("Matrix: index out of range");
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
    }

    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

/// M^n by repeated squaring; M^0 is the identity.
inline Matrix mat_pow(const Matrix& m, long long n) {
    if (!m.is_square()) throw std::invalid_argument("mat_pow: matrix not square");
    if (n < 0) throw std::invalid_argument("mat_pow: negative exponent");
    Matrix acc = Matrix::identity(m.rows());
    Matrix sq = m;
    for (long long k = n; k > 0; k >>= 1) {
        if (k & 1) acc = acc * sq;
        if (k > 1) sq = sq * sq;
    }
    return acc;
}

/// Exact determinant by Bareiss fraction-free elimination. Denominators are
/// cleared per row first so the elimination runs over integers; the row
/// scales are divided back out at the end. det of the 0x0 matrix is 1.
inline Rational det_bareiss(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det_bareiss: matrix not square");
    const int n = m.rows();
    if (n == 0) return Rational(1);

    // row-wise lcm of denominators -> integer matrix
    std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(n),
                                       std::vector<BigInt>(static_cast<std::size_t>(n)));
    Rational scale(1); // det(int matrix) = scale * det(m)
    for (int i = 0; i < n; ++i) {
        BigInt l = 1;
        for (int j = 0; j < n; ++j)
            l = boost::multiprecision::lcm(l, m(i, j).denominator());
        for (int j = 0; j < n; ++j) {
            const Rational v = m(i, j) * Rational(l);
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v.numerator();
        }
        scale *= Rational(l);
    }

    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) { piv = i; break; }
            if (piv < 0) return Rational(0);
            std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(piv)]);
            sign = -sign;
        }
        const BigInt& pivot = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt num = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * pivot -
                             a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                                 a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = num / prev; // exact
            }
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0;
        }
        prev = pivot;
    }
    Rational det(a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)]);
    if (sign < 0) det = -det;
    return det / scale;
}

/// Monic characteristic polynomial det(xI - M) via the Faddeev-LeVerrier
/// iteration in exact arithmetic.
inline Polynomial char_poly(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly: matrix not square");
    const int n = m.rows();
    if (n == 0) throw std::invalid_argument("char_poly: empty matrix");

    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    c[static_cast<std::size_t>(n)] = Rational(1);
    Matrix mk = m;
    for (int k = 1; k <= n; ++k) {
        Rational tr(0);
        for (int i = 0; i < n; ++i) tr += mk(i, i);
        const Rational ck = -(tr / Rational(k));
        c[static_cast<std::size_t>(n - k)] = ck;
        if (k < n) {
            Matrix shifted = mk + (ck * Matrix::identity(n));
            mk = m * shifted;
        }
    }
    return Polynomial(std::move(c));
}

/// M[I,J]: restriction to rows I and columns J, preserving their order.
inline Matrix submatrix(const Matrix& m, const SubsetIndex& i, const SubsetIndex& j) {
    if (i.ambient != m.rows() || j.ambient != m.cols())
        throw std::invalid_argument("submatrix: subset ambient does not match matrix shape");
    Matrix out(i.size(), j.size());
    for (int r = 0; r < i.size(); ++r)
        for (int c = 0; c < j.size(); ++c)
            out(r, c) = m(i.elements[static_cast<std::size_t>(r)] - 1,
                          j.elements[static_cast<std::size_t>(c)] - 1);
    return out;
}

/// k-th compound matrix: entry (I,J) = det(M[I,J]), subsets in lex order.
inline Matrix compound_matrix(const Matrix& m, int k) {
    if (!m.is_square()) throw std::invalid_argument("compound_matrix: matrix not square");
    if (k < 0 || k > m.rows()) throw std::invalid_argument("compound_matrix: k out of range");
    const auto subs = k_subsets_lex(m.rows(), k);
    const int d = static_cast<int>(subs.size());
    Matrix out(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            out(r, c) = det_bareiss(submatrix(m, subs[static_cast<std::size_t>(r)],
                                              subs[static_cast<std::size_t>(c)]));
    return out;
}

/// k-th adjugate matrix: entry (I,J) = (-1)^{sigma(I)+sigma(J)} det(M[Jc,Ic]).
/// Satisfies compound_k(M) * adjugate_k(M) = det(M) * I.
inline Matrix adjugate_matrix(const Matrix& m, int k) {
    if (!m.is_square()) throw std::invalid_argument("adjugate_matrix: matrix not square");
    if (k < 0 || k > m.rows()) throw std::invalid_argument("adjugate_matrix: k out of range");
    const auto subs = k_subsets_lex(m.rows(), k);
    const int d = static_cast<int>(subs.size());
    Matrix out(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            const SubsetIndex& I = subs[static_cast<std::size_t>(r)];
            const SubsetIndex& J = subs[static_cast<std::size_t>(c)];
            Rational minor = det_bareiss(submatrix(m, J.complement(), I.complement()));
            if ((I.sigma() + J.sigma()) % 2 != 0) minor = -minor;
            out(r, c) = minor;
        }
    return out;
}

/// Substitutes M into p (matrix polynomial evaluation, Horner form).
inline Matrix eval_poly_at(const Polynomial& p, const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("eval_poly_at: matrix not square");
    Matrix acc(m.rows(), m.rows());
    for (int i = p.degree(); i >= 0; --i)
        acc = acc * m + (p.coeff(i) * Matrix::identity(m.rows()));
    return acc;
}

} // namespace lgv

#endif // LGV_MATRIX_HPP
