#include "divlat/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace divlat {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("IntMatrix: ragged initializer");
        }
        for (long long v : row) {
            data_.emplace_back(v);
        }
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

IntMatrix IntMatrix::permutation(const std::vector<std::size_t>& perm) {
    // column j is e_{perm[j]}
    IntMatrix m(perm.size(), perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) {
        m(perm[j], j) = 1;
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

Int IntMatrix::trace() const {
    Int t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        t += (*this)(i, i);
    }
    return t;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
    std::vector<Int> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        c[i] = (*this)(i, j);
    }
    return c;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
    if (x.size() != cols_) {
        throw std::invalid_argument("IntMatrix::apply: dimension mismatch");
    }
    std::vector<Int> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!x[j].is_zero()) {
                y[i] += (*this)(i, j) * x[j];
            }
        }
    }
    return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("IntMatrix: product dimension mismatch");
    }
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Int& aik = a(i, k);
            if (aik.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("IntMatrix: sum dimension mismatch");
    }
    IntMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) {
        c.data_[k] += b.data_[k];
    }
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    return a + (-b);
}

IntMatrix operator-(const IntMatrix& a) {
    IntMatrix c = a;
    for (auto& v : c.data_) {
        v = -v;
    }
    return c;
}

IntMatrix operator*(const Int& s, const IntMatrix& a) {
    IntMatrix c = a;
    for (auto& v : c.data_) {
        v *= s;
    }
    return c;
}

std::vector<std::vector<Int>> IntMatrix::to_rows() const {
    std::vector<std::vector<Int>> out(rows_, std::vector<Int>(cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out[i][j] = (*this)(i, j);
        }
    }
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) {
            os << (j ? ", " : "") << (*this)(i, j);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

Int determinant(const IntMatrix& m) {
    if (!m.is_square()) {
        throw std::invalid_argument("determinant: matrix not square");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return 1;
    }
    IntMatrix a = m;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a(p, k).is_zero()) {
                ++p;
            }
            if (p == n) {
                return 0;
            }
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(p, j));
            }
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c).is_zero()) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        for (std::size_t j = 0; j < cols; ++j) {
            std::swap(a(r, j), a(p, j));
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a(i, c).is_zero()) {
                continue;
            }
            Int f = a(i, c);
            Int g = a(r, c);
            for (std::size_t j = c; j < cols; ++j) {
                a(i, j) = a(i, j) * g - a(r, j) * f;
            }
            // keep entries small
            Int content = 0;
            for (std::size_t j = c; j < cols; ++j) {
                content = gcd(content, a(i, j));
            }
            if (content > 1) {
                for (std::size_t j = c; j < cols; ++j) {
                    a(i, j) /= content;
                }
            }
        }
        ++r;
    }
    return r;
}

IntMatrix power(const IntMatrix& m, unsigned k) {
    IntMatrix result = IntMatrix::identity(m.rows());
    IntMatrix base = m;
    while (k > 0) {
        if (k & 1u) {
            result = result * base;
        }
        k >>= 1u;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

bool is_lower_unitriangular(const IntMatrix& m) {
    if (!m.is_square()) {
        return false;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m(i, i) != 1 && m(i, i) != -1) {
            return false;
        }
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            if (!m(i, j).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

bool is_upper_unitriangular(const IntMatrix& m) {
    return is_lower_unitriangular(m.transpose());
}

IntMatrix inverse_unitriangular(const IntMatrix& m) {
    if (is_upper_unitriangular(m) && !is_lower_unitriangular(m)) {
        return inverse_unitriangular(m.transpose()).transpose();
    }
    if (!is_lower_unitriangular(m)) {
        throw std::invalid_argument("inverse_unitriangular: not triangular with unit diagonal");
    }
    // forward substitution, column by column; diagonal entries are their own inverses
    const std::size_t n = m.rows();
    IntMatrix inv(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = c; i < n; ++i) {
            Int acc = (i == c) ? Int(1) : Int(0);
            for (std::size_t k = c; k < i; ++k) {
                acc -= m(i, k) * inv(k, c);
            }
            inv(i, c) = acc * m(i, i);
        }
    }
    return inv;
}

std::vector<Int> characteristic_polynomial(const IntMatrix& m) {
    // Faddeev-LeVerrier; every division is exact over the integers.
    if (!m.is_square()) {
        throw std::invalid_argument("characteristic_polynomial: matrix not square");
    }
    const std::size_t n = m.rows();
    std::vector<Int> coeffs(n + 1);
    coeffs[0] = 1;
    IntMatrix mk = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix am = m * mk;
        Int c = -am.trace();
        if (c % Int(k) != 0) {
            throw std::logic_error("characteristic_polynomial: inexact division");
        }
        c /= Int(k);
        coeffs[k] = c;
        mk = am + c * IntMatrix::identity(n);
    }
    return coeffs;
}

std::string polynomial_to_string(const std::vector<Int>& coeffs, char var) {
    std::ostringstream os;
    const std::size_t deg = coeffs.empty() ? 0 : coeffs.size() - 1;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Int& c = coeffs[i];
        if (c.is_zero()) {
            continue;
        }
        const std::size_t power = deg - i;
        Int mag = abs(c);
        if (first) {
            if (c < 0) {
                os << '-';
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || power == 0) {
            os << mag;
        }
        if (power >= 1) {
            os << var;
        }
        if (power >= 2) {
            os << '^' << power;
        }
        first = false;
    }
    if (first) {
        os << '0';
    }
    return os.str();
}

std::optional<unsigned> multiplicative_order(const IntMatrix& m, unsigned max_power) {
    if (!m.is_square()) {
        throw std::invalid_argument("multiplicative_order: matrix not square");
    }
    const IntMatrix id = IntMatrix::identity(m.rows());
    IntMatrix p = m;
    for (unsigned k = 1; k <= max_power; ++k) {
        if (p == id) {
            return k;
        }
        p = p * m;
    }
    return std::nullopt;
}

} // namespace divlat
