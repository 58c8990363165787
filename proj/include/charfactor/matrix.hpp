#pragma once

#include <vector>

#include "charfactor/cyclotomic.hpp"

namespace charfactor {

/// Dense square matrix over a cyclotomic field, row-major.
class SquareMatrix {
public:
    explicit SquareMatrix(int size) : size_(size), data_(static_cast<std::size_t>(size) * size) {}

    int size() const { return size_; }
    CyclotomicNumber& operator()(int r, int c) { return data_[index(r, c)]; }
    const CyclotomicNumber& operator()(int r, int c) const { return data_[index(r, c)]; }

    void swap_rows(int a, int b);

private:
    std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * size_ + c; }

    int size_;
    std::vector<CyclotomicNumber> data_;
};

/// Fraction-free (Bareiss) elimination; each step divides exactly by the
/// previous pivot. Zero testing is exact, so any nonzero pivot will do.
CyclotomicNumber determinant(SquareMatrix m);

}  // namespace charfactor
