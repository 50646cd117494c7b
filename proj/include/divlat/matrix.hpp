#pragma once

// Exact integer matrices for lattice computations.
//
// Entries are arbitrary-precision integers; nothing in this header touches
// floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace divlat {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix permutation(const std::vector<std::size_t>& perm);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transpose() const;
    Int trace() const;
    std::vector<Int> column(std::size_t j) const;
    std::vector<Int> apply(const std::vector<Int>& x) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a);
    friend IntMatrix operator*(const Int& s, const IntMatrix& a);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

    std::vector<std::vector<Int>> to_rows() const;
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

// Bareiss fraction-free elimination.
Int determinant(const IntMatrix& m);

// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

IntMatrix power(const IntMatrix& m, unsigned k);

// Inverse of a triangular matrix with unit (+-1) diagonal; the result is
// integral. Throws std::invalid_argument if `m` is not of that shape.
IntMatrix inverse_unitriangular(const IntMatrix& m);

bool is_lower_unitriangular(const IntMatrix& m);
bool is_upper_unitriangular(const IntMatrix& m);

// Coefficients of det(t*Id - m), highest degree first (leading 1).
std::vector<Int> characteristic_polynomial(const IntMatrix& m);

std::string polynomial_to_string(const std::vector<Int>& coeffs, char var = 't');

// Smallest k in [1, max_power] with m^k = Id.
std::optional<unsigned> multiplicative_order(const IntMatrix& m, unsigned max_power);

} // namespace divlat
