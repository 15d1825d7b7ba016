#pragma once

// Exact linear algebra over Z and Q on top of GMP.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace avdyn {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

class IntegerMatrix {
public:
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static IntegerMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix scalar(std::size_t n, const Integer& c);
    static IntegerMatrix diagonal(const std::vector<Integer>& d);
    static IntegerMatrix block_diagonal(const std::vector<IntegerMatrix>& blocks);
    // Standard symplectic form: g copies of [[0,1],[-1,0]] on the diagonal.
    static IntegerMatrix standard_symplectic(std::size_t g);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntegerMatrix transpose() const;
    bool is_zero() const;
    bool is_skew_symmetric() const;
    IntegerMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

    IntegerMatrix operator+(const IntegerMatrix& o) const;
    IntegerMatrix operator-(const IntegerMatrix& o) const;
    IntegerMatrix operator*(const IntegerMatrix& o) const;
    IntegerMatrix operator-() const;
    IntegerMatrix operator*(const Integer& c) const;
    IntegerVector operator*(const IntegerVector& v) const;
    RationalVector operator*(const RationalVector& v) const;

    bool operator==(const IntegerMatrix& o) const;
    bool operator!=(const IntegerMatrix& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Integer> data_;
};

class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols);
    explicit RationalMatrix(const IntegerMatrix& m);
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RationalMatrix transpose() const;
    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator*(const Rational& c) const;

    bool operator==(const RationalMatrix& o) const;
    bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

    bool is_integral() const;
    IntegerMatrix to_integer() const;  // throws ValidationError unless integral
    bool is_symmetric() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;  // mpq keeps every entry canonical
};

struct SmithDecomposition {
    IntegerMatrix U;  // unimodular, rows x rows
    IntegerMatrix D;  // U * A * V
    IntegerMatrix V;  // unimodular, cols x cols
    std::vector<Integer> elementary_divisors;  // min(rows, cols) entries, d_i | d_{i+1}, zeros last
};

// Coefficients in ascending degree; the zero polynomial has no coefficients.
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<Integer> ascending);

    const std::vector<Integer>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Integer evaluate(const Integer& x) const;

    bool operator==(const IntegerPolynomial& o) const { return coeffs_ == o.coeffs_; }
    std::string to_string() const;

private:
    std::vector<Integer> coeffs_;
};

Integer det(const IntegerMatrix& m);
Rational det(const RationalMatrix& m);
SmithDecomposition smith_normal_form(const IntegerMatrix& m);
IntegerPolynomial charpoly(const IntegerMatrix& m);
Integer pfaffian(const IntegerMatrix& s);
// Sum over k of (-1)^k tr(wedge^k m); equals det(I - m).
Integer exterior_trace_sum(const IntegerMatrix& m);

IntegerMatrix matrix_power(const IntegerMatrix& m, unsigned long exponent);
RationalMatrix inverse(const RationalMatrix& m);  // DegenerateError if singular

// Leading-principal-minor test on a symmetric rational matrix.
bool is_positive_definite(const RationalMatrix& m);

namespace detail {
Integer pfaffian_expansion(const IntegerMatrix& s);
Integer pfaffian_elimination(const IntegerMatrix& s);
} // namespace detail

// Canonical representative of x mod 1 in [0, 1).
Rational frac(const Rational& x);
RationalVector reduce_mod_one(RationalVector v);
bool is_integral(const RationalVector& v);
Integer common_denominator(const RationalVector& v);

} // namespace avdyn
