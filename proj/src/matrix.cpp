#include "lct/matrix.hpp"

#include "lct/error.hpp"

namespace lct {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw Error("matrix dimensions must be positive");
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatVec RatMatrix::apply(const RatVec& x) const {
    if (x.size() != cols_) throw Error("matrix-vector size mismatch");
    RatVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) out[i] += at(i, j) * x[j];
    return out;
}

namespace {

struct Rref {
    RatMatrix m;
    std::vector<std::size_t> pivot_cols;
};

// Gauss-Jordan over the rationals; exact, no pivoting heuristics needed.
Rref reduced_row_echelon(RatMatrix m) {
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        const Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            const Rational f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivot_cols)};
}

// Integer entries, content one, first nonzero entry positive.
void canonicalize_kernel_vector(RatVec& v) {
    const mpz_class scale = lcm_of_denominators(v);
    mpz_class content = 0;
    for (auto& x : v) {
        x *= Rational(scale, 1);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), x.num().get_mpz_t());
        content = g;
    }
    if (content > 1)
        for (auto& x : v) x /= Rational(content, 1);
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        if (x.sign() < 0)
            for (auto& y : v) y = -y;
        break;
    }
}

}  // namespace

std::size_t rank(const RatMatrix& a) { return reduced_row_echelon(a).pivot_cols.size(); }

std::vector<RatVec> nullspace(const RatMatrix& a) {
    const Rref r = reduced_row_echelon(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

    std::vector<RatVec> basis;
    for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        RatVec v(a.cols());
        v[free_col] = 1;
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            v[r.pivot_cols[i]] = -r.m.at(i, free_col);
        canonicalize_kernel_vector(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace lct
