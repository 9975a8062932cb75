#pragma once

#include "lct/rational.hpp"

#include <cstddef>
#include <vector>

namespace lct {

// Dense rational matrix, row-major, sized at construction (entries zero).
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols);
    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatVec apply(const RatVec& x) const;  // A * x

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

std::size_t rank(const RatMatrix& a);

// Basis of { x : A x = 0 }, one vector per free column of the reduced row
// echelon form, in column order. Each vector is scaled to integer entries
// with content 1 and first nonzero entry positive, so the output is a
// canonical function of A alone.
std::vector<RatVec> nullspace(const RatMatrix& a);

}  // namespace lct
