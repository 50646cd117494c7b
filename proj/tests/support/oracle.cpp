#include "oracle.hpp"

#include <stdexcept>

namespace oracle {

Mat identity(std::size_t n) {
    Mat m(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1;
    }
    return m;
}

Mat multiply(const Mat& a, const Mat& b) {
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t p = k ? b[0].size() : 0;
    Mat c(n, Vec(p, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
            for (std::size_t t = 0; t < k; ++t) {
                c[i][j] += a[i][t] * b[t][j];
            }
        }
    }
    return c;
}

long long trace(const Mat& m) {
    long long s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        s += m[i][i];
    }
    return s;
}

long long determinant(Mat m) {
    const std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = m[i][j];
        }
    }
    int sign = 1;
    __int128 prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) {
                ++r;
            }
            if (r == n) {
                return 0;
            }
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    return static_cast<long long>(sign * a[n - 1][n - 1]);
}

std::optional<unsigned> order(const Mat& m, unsigned max_power) {
    const Mat id = identity(m.size());
    Mat p = m;
    for (unsigned k = 1; k <= max_power; ++k) {
        if (p == id) {
            return k;
        }
        p = multiply(p, m);
    }
    return std::nullopt;
}

namespace {

int rank_of(const std::string& label) {
    if (label.size() < 4 || label[0] != 'V') {
        throw std::invalid_argument("bad label " + label);
    }
    switch (label[1]) {
    case '-':
        return 0;
    case '0':
        return 1;
    case '+':
        return 2;
    }
    throw std::invalid_argument("bad label " + label);
}

} // namespace

Mat intersection(const std::vector<std::string>& labels,
                 const std::vector<std::pair<std::string, std::string>>& edges) {
    const std::size_t n = labels.size();
    Mat I(n, Vec(n, 0));
    auto index = [&](const std::string& l) {
        for (std::size_t i = 0; i < n; ++i) {
            if (labels[i] == l) {
                return i;
            }
        }
        throw std::invalid_argument("unknown label " + l);
    };
    for (const auto& [a, b] : edges) {
        std::size_t hi = index(a);
        std::size_t lo = index(b);
        if (rank_of(a) < rank_of(b)) {
            std::swap(hi, lo);
        }
        I[hi][lo] += 1;
        I[lo][hi] -= 1;
    }
    return I;
}

Vec twist(const Mat& I, std::size_t k, int s, Vec x) {
    long long dot = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        dot += x[i] * I[i][k];
    }
    x[k] += s * dot;
    return x;
}

Mat monodromy_by_twists(const Mat& I, int s, bool last_first) {
    const std::size_t n = I.size();
    Mat m(n, Vec(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        Vec x(n, 0);
        x[j] = 1;
        for (std::size_t step = 0; step < n; ++step) {
            const std::size_t k = last_first ? n - 1 - step : step;
            x = twist(I, k, s, x);
        }
        for (std::size_t i = 0; i < n; ++i) {
            m[i][j] = x[i];
        }
    }
    return m;
}

long long char_poly_at(const Mat& m, long long t) {
    Mat a = m;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            a[i][j] = (i == j ? t : 0) - m[i][j];
        }
    }
    return determinant(a);
}

long long poly_at(const std::vector<long long>& coeffs, long long t) {
    long long v = 0;
    for (long long c : coeffs) {
        v = v * t + c;
    }
    return v;
}

} // namespace oracle
