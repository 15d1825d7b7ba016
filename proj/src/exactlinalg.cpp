#include "avdyn/exactlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "avdyn/errors.hpp"

namespace avdyn {

namespace {

void require_square(const IntegerMatrix& m, const char* op)
{
    if (!m.is_square())
        throw ValidationError(std::string(op) + ": matrix is " + std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()) + ", expected square");
}

} // namespace

/*{{{ IntegerMatrix */
IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
    if (rows == 0 || cols == 0)
        throw ValidationError("matrix dimensions must be at least 1");
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntegerMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0)
{
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw ValidationError("ragged matrix literal");
        std::size_t j = 0;
        for (long v : row)
            (*this)(i, j++) = v;
        ++i;
    }
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Integer>>& rows)
{
    if (rows.empty() || rows.front().empty())
        throw ValidationError("matrix dimensions must be at least 1");
    IntegerMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw ValidationError("ragged matrix: row " + std::to_string(i) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(m.cols_));
        for (std::size_t j = 0; j < m.cols_; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) { return scalar(n, 1); }

IntegerMatrix IntegerMatrix::scalar(std::size_t n, const Integer& c)
{
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = c;
    return m;
}

IntegerMatrix IntegerMatrix::diagonal(const std::vector<Integer>& d)
{
    IntegerMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

IntegerMatrix IntegerMatrix::block_diagonal(const std::vector<IntegerMatrix>& blocks)
{
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    IntegerMatrix m(r, c);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                m(r0 + i, c0 + j) = b(i, j);
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

IntegerMatrix IntegerMatrix::standard_symplectic(std::size_t g)
{
    IntegerMatrix m(2 * g, 2 * g);
    for (std::size_t k = 0; k < g; ++k) {
        m(2 * k, 2 * k + 1) = 1;
        m(2 * k + 1, 2 * k) = -1;
    }
    return m;
}

IntegerMatrix IntegerMatrix::transpose() const
{
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

bool IntegerMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

bool IntegerMatrix::is_skew_symmetric() const
{
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if ((*this)(i, j) != -(*this)(j, i))
                return false;
    return true;
}

IntegerMatrix IntegerMatrix::submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const
{
    IntegerMatrix s(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j)
            s(i, j) = (*this)(rs[i], cs[j]);
    return s;
}

IntegerMatrix IntegerMatrix::operator+(const IntegerMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ValidationError("matrix sum: dimension mismatch");
    IntegerMatrix r(*this);
    for (std::size_t k = 0; k < data_.size(); ++k)
        r.data_[k] += o.data_[k];
    return r;
}

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ValidationError("matrix difference: dimension mismatch");
    IntegerMatrix r(*this);
    for (std::size_t k = 0; k < data_.size(); ++k)
        r.data_[k] -= o.data_[k];
    return r;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const
{
    if (cols_ != o.rows_)
        throw ValidationError("matrix product: dimension mismatch");
    IntegerMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r(i, j) += a * o(k, j);
        }
    return r;
}

IntegerMatrix IntegerMatrix::operator-() const
{
    IntegerMatrix r(*this);
    for (auto& x : r.data_)
        x = -x;
    return r;
}

IntegerMatrix IntegerMatrix::operator*(const Integer& c) const
{
    IntegerMatrix r(*this);
    for (auto& x : r.data_)
        x *= c;
    return r;
}

IntegerVector IntegerMatrix::operator*(const IntegerVector& v) const
{
    if (v.size() != cols_)
        throw ValidationError("matrix-vector product: dimension mismatch");
    IntegerVector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r[i] += (*this)(i, j) * v[j];
    return r;
}

RationalVector IntegerMatrix::operator*(const RationalVector& v) const
{
    if (v.size() != cols_)
        throw ValidationError("matrix-vector product: dimension mismatch");
    RationalVector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0)
                r[i] += Rational((*this)(i, j)) * v[j];
    return r;
}

bool IntegerMatrix::operator==(const IntegerMatrix& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string IntegerMatrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? "," : "") << (*this)(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}
/*}}}*/

/*{{{ RationalMatrix */
RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
    if (rows == 0 || cols == 0)
        throw ValidationError("matrix dimensions must be at least 1");
}

RationalMatrix::RationalMatrix(const IntegerMatrix& m) : RationalMatrix(m.rows(), m.cols())
{
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(i, j) = Rational(m(i, j));
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows)
{
    if (rows.empty() || rows.front().empty())
        throw ValidationError("matrix dimensions must be at least 1");
    RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw ValidationError("ragged matrix: row " + std::to_string(i));
        for (std::size_t j = 0; j < m.cols_; ++j) {
            m(i, j) = rows[i][j];
            m(i, j).canonicalize();
        }
    }
    return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ValidationError("matrix sum: dimension mismatch");
    RationalMatrix r(*this);
    for (std::size_t k = 0; k < data_.size(); ++k)
        r.data_[k] += o.data_[k];
    return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ValidationError("matrix difference: dimension mismatch");
    RationalMatrix r(*this);
    for (std::size_t k = 0; k < data_.size(); ++k)
        r.data_[k] -= o.data_[k];
    return r;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const
{
    if (cols_ != o.rows_)
        throw ValidationError("matrix product: dimension mismatch");
    RationalMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r(i, j) += a * o(k, j);
        }
    return r;
}

RationalMatrix RationalMatrix::operator*(const Rational& c) const
{
    RationalMatrix r(*this);
    for (auto& x : r.data_)
        x *= c;
    return r;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool RationalMatrix::is_integral() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.get_den() == 1; });
}

IntegerMatrix RationalMatrix::to_integer() const
{
    if (!is_integral())
        throw ValidationError("matrix has non-integral entries");
    IntegerMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(i, j) = (*this)(i, j).get_num();
    return m;
}

bool RationalMatrix::is_symmetric() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}
/*}}}*/

/*{{{ IntegerPolynomial */
IntegerPolynomial::IntegerPolynomial(std::vector<Integer> ascending) : coeffs_(std::move(ascending))
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Integer IntegerPolynomial::evaluate(const Integer& x) const
{
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::string IntegerPolynomial::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Integer& c = coeffs_[k];
        if (c == 0)
            continue;
        Integer a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (a != 1 || k == 0)
            os << a.get_str();
        if (k >= 1)
            os << 'x';
        if (k >= 2)
            os << '^' << k;
        first = false;
    }
    return os.str();
}
/*}}}*/

Integer det(const IntegerMatrix& m)
{
    require_square(m, "det");
    // Bareiss fraction-free elimination; every division below is exact.
    const std::size_t n = m.rows();
    IntegerMatrix a(m);
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    Integer d = a(n - 1, n - 1);
    return sign < 0 ? Integer(-d) : d;
}

Rational det(const RationalMatrix& m)
{
    if (m.rows() != m.cols())
        throw ValidationError("det: matrix not square");
    const std::size_t n = m.rows();
    RationalMatrix a(m);
    Rational d = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(p, j));
            d = -d;
        }
        d *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0)
                continue;
            Rational f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j)
                a(i, j) -= f * a(k, j);
        }
    }
    return d;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& a)
{
    const std::size_t m = a.rows(), n = a.cols();
    IntegerMatrix D(a), U = IntegerMatrix::identity(m), V = IntegerMatrix::identity(n);

    auto swap_rows = [&](std::size_t r1, std::size_t r2) {
        if (r1 == r2)
            return;
        for (std::size_t j = 0; j < n; ++j)
            std::swap(D(r1, j), D(r2, j));
        for (std::size_t j = 0; j < m; ++j)
            std::swap(U(r1, j), U(r2, j));
    };
    auto swap_cols = [&](std::size_t c1, std::size_t c2) {
        if (c1 == c2)
            return;
        for (std::size_t i = 0; i < m; ++i)
            std::swap(D(i, c1), D(i, c2));
        for (std::size_t i = 0; i < n; ++i)
            std::swap(V(i, c1), V(i, c2));
    };
    // row dst += c * row src
    auto add_row = [&](std::size_t dst, std::size_t src, const Integer& c) {
        for (std::size_t j = 0; j < n; ++j)
            D(dst, j) += c * D(src, j);
        for (std::size_t j = 0; j < m; ++j)
            U(dst, j) += c * U(src, j);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Integer& c) {
        for (std::size_t i = 0; i < m; ++i)
            D(i, dst) += c * D(i, src);
        for (std::size_t i = 0; i < n; ++i)
            V(i, dst) += c * V(i, src);
    };

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        bool exhausted = false;
        for (;;) {
            // Pivot: smallest nonzero magnitude in the trailing block.
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (D(i, j) != 0 && (pi == m || abs(D(i, j)) < abs(D(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == m) {
                exhausted = true;
                break;
            }
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D(i, t) == 0)
                    continue;
                Integer q = D(i, t) / D(t, t);
                add_row(i, t, -q);
                if (D(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0)
                    continue;
                Integer q = D(t, j) / D(t, t);
                add_col(j, t, -q);
                if (D(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // Divisibility chain: fold an offending row into the pivot row.
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t()) == 0) {
                        add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (exhausted)
            break;
        if (D(t, t) < 0)
            add_row(t, t, -2);
    }

    SmithDecomposition out{U, D, V, {}};
    out.elementary_divisors.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i)
        out.elementary_divisors.push_back(D(i, i));
    return out;
}

IntegerPolynomial charpoly(const IntegerMatrix& a)
{
    require_square(a, "charpoly");
    // Berkowitz: division-free, coefficients kept highest-degree first while iterating.
    const std::size_t n = a.rows();
    std::vector<Integer> p{1};
    for (std::size_t r = 0; r < n; ++r) {
        // Leading block A_r is r x r; border row R = a(r, 0..r-1), column C = a(0..r-1, r).
        std::vector<Integer> toeplitz(r + 2);
        toeplitz[0] = 1;
        toeplitz[1] = -a(r, r);
        std::vector<Integer> col(r);
        for (std::size_t i = 0; i < r; ++i)
            col[i] = a(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            Integer s = 0;
            for (std::size_t i = 0; i < r; ++i)
                s += a(r, i) * col[i];
            toeplitz[k + 2] = -s;
            std::vector<Integer> next(r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    next[i] += a(i, j) * col[j];
            col = std::move(next);
        }
        std::vector<Integer> q(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j)
                q[i] += toeplitz[i - j] * p[j];
        p = std::move(q);
    }
    std::reverse(p.begin(), p.end());
    return IntegerPolynomial(std::move(p));
}

namespace detail {

Integer pfaffian_expansion(const IntegerMatrix& s)
{
    const std::size_t n = s.rows();
    if (n == 0)
        return 1;
    if (n == 2)
        return s(0, 1);
    Integer acc = 0;
    std::vector<std::size_t> rest;
    for (std::size_t j = 1; j < n; ++j) {
        if (s(0, j) == 0)
            continue;
        rest.clear();
        for (std::size_t k = 1; k < n; ++k)
            if (k != j)
                rest.push_back(k);
        Integer minor = pfaffian_expansion(s.submatrix(rest, rest));
        if (j % 2 == 1)
            acc += s(0, j) * minor;
        else
            acc -= s(0, j) * minor;
    }
    return acc;
}

Integer pfaffian_elimination(const IntegerMatrix& s)
{
    // Skew congruence elimination over Q: T A T^t with det T = 1 keeps Pf.
    const std::size_t n = s.rows();
    RationalMatrix a(s);
    Rational pf = 1;
    for (std::size_t k = 0; k < n; k += 2) {
        std::size_t p = k + 1;
        while (p < n && a(k, p) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != k + 1) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k + 1, j), a(p, j));
            for (std::size_t i = 0; i < n; ++i)
                std::swap(a(i, k + 1), a(i, p));
            pf = -pf;
        }
        const Rational pivot = a(k, k + 1);
        pf *= pivot;
        for (std::size_t i = k + 2; i < n; ++i) {
            Rational c = -a(k, i) / pivot;   // zeroes a(k, i) via col_i += c col_{k+1}
            Rational d = a(k + 1, i) / pivot;  // zeroes a(k+1, i) via col_i += d col_k
            if (c != 0) {
                for (std::size_t r = 0; r < n; ++r)
                    a(r, i) += c * a(r, k + 1);
                for (std::size_t r = 0; r < n; ++r)
                    a(i, r) += c * a(k + 1, r);
            }
            if (d != 0) {
                for (std::size_t r = 0; r < n; ++r)
                    a(r, i) += d * a(r, k);
                for (std::size_t r = 0; r < n; ++r)
                    a(i, r) += d * a(k, r);
            }
        }
    }
    return pf.get_num();
}

} // namespace detail

Integer pfaffian(const IntegerMatrix& s)
{
    if (!s.is_square() || s.rows() % 2 != 0)
        throw ValidationError("pfaffian: matrix must be square of even dimension");
    if (!s.is_skew_symmetric())
        throw ValidationError("pfaffian: matrix is not skew-symmetric");
    return s.rows() <= 8 ? detail::pfaffian_expansion(s) : detail::pfaffian_elimination(s);
}

Integer exterior_trace_sum(const IntegerMatrix& m)
{
    require_square(m, "exterior_trace_sum");
    // charpoly(x) = sum_k (-1)^k tr(wedge^k m) x^{n-k}; at x = 1 the sum is exactly the alternating trace sum.
    return charpoly(m).evaluate(1);
}

IntegerMatrix matrix_power(const IntegerMatrix& m, unsigned long exponent)
{
    require_square(m, "matrix_power");
    IntegerMatrix result = IntegerMatrix::identity(m.rows());
    IntegerMatrix base(m);
    while (exponent) {
        if (exponent & 1)
            result = result * base;
        exponent >>= 1;
        if (exponent)
            base = base * base;
    }
    return result;
}

RationalMatrix inverse(const RationalMatrix& m)
{
    if (m.rows() != m.cols())
        throw ValidationError("inverse: matrix not square");
    const std::size_t n = m.rows();
    RationalMatrix a(m), inv = RationalMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0)
            ++p;
        if (p == n)
            throw DegenerateError("inverse: matrix is singular");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a(k, j), a(p, j));
            std::swap(inv(k, j), inv(p, j));
        }
        Rational piv = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0)
                continue;
            Rational f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

bool is_positive_definite(const RationalMatrix& m)
{
    if (!m.is_symmetric())
        return false;
    // Sylvester: every leading principal minor positive.
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        RationalMatrix lead(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                lead(i, j) = m(i, j);
        if (det(lead) <= 0)
            return false;
    }
    return true;
}

Rational frac(const Rational& x)
{
    if (sgn(x) >= 0 && cmp(x.get_num(), x.get_den()) < 0) {
        Rational r = x;
        r.canonicalize();
        return r;
    }
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    Rational r = x - Rational(fl);
    r.canonicalize();
    return r;
}

RationalVector reduce_mod_one(RationalVector v)
{
    for (auto& x : v) {
        if (sgn(x) < 0 || cmp(x.get_num(), x.get_den()) >= 0)
            x = frac(x);
        else
            x.canonicalize();
    }
    return v;
}

bool is_integral(const RationalVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.get_den() == 1; });
}

Integer common_denominator(const RationalVector& v)
{
    Integer l = 1;
    for (const auto& x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

} // namespace avdyn
