#include "aleph/matrix.hpp"

namespace aleph {

Int det(const Mat<Int>& a) {
    if (a.rows() != a.cols()) throw Error("BadShape", "determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    Mat<Int> m = a;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

Mat<Int> unimodular_inverse(const Mat<Int>& a) {
    const Int d = det(a);
    if (d != 1 && d != -1) throw Error("NotUnimodular", "matrix determinant is not +-1");
    const std::size_t n = a.rows();
    // Gauss-Jordan over the rationals; entries of the inverse are integral
    // because det = +-1.
    Mat<Rat> w(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w(i, j) = Rat(a(i, j));
        w(i, n + i) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && w(p, c) == 0) ++p;
        w.swap_rows(c, p);
        Rat inv = Rat(1) / w(c, c);
        for (std::size_t j = 0; j < 2 * n; ++j) w(c, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || w(i, c) == 0) continue;
            Rat f = w(i, c);
            for (std::size_t j = 0; j < 2 * n; ++j) w(i, j) -= f * w(c, j);
        }
    }
    Mat<Int> out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = numerator(w(i, n + j));
    return out;
}

}  // namespace aleph
