#include "charfactor/matrix.hpp"

#include <utility>

namespace charfactor {

void SquareMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int c = 0; c < size_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

CyclotomicNumber determinant(SquareMatrix m) {
    const int n = m.size();
    if (n == 0) return CyclotomicNumber(1, 1);
    int sign = 1;
    CyclotomicNumber prev_inverse(1, 1);
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k).is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < n && pivot < 0; ++i)
                if (!m(i, k).is_zero()) pivot = i;
            if (pivot < 0) return CyclotomicNumber(m(0, 0).order(), 0);
            m.swap_rows(k, pivot);
            sign = -sign;
        }
        const CyclotomicNumber& p = m(k, k);
        for (int i = k + 1; i < n; ++i) {
            const CyclotomicNumber f = m(i, k);
            for (int j = k + 1; j < n; ++j) {
                m(i, j) = (p * m(i, j) - f * m(k, j)) * prev_inverse;
            }
            m(i, k) = CyclotomicNumber(p.order(), 0);
        }
        prev_inverse = p.inverse();
    }
    CyclotomicNumber det = m(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

}  // namespace charfactor
