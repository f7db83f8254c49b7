#include "latroot/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace latroot {

Int det_bareiss(IntMatrix a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = num / prev;  // divides exactly (Bareiss)
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

Rat det_gauss(RatMatrix a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Rat det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

std::vector<Rat> solve_rational(RatMatrix a, std::vector<Rat> b) {
    const std::size_t n = a.size();
    assert(b.size() == n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) throw InvariantViolation("linalg.Singular", "singular system");
        std::swap(a[piv], a[k]);
        std::swap(b[piv], b[k]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rat f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

std::vector<Int> leading_principal_minors(const IntMatrix& a) {
    std::vector<Int> out;
    for (std::size_t k = 1; k <= a.size(); ++k) {
        IntMatrix sub(k, std::vector<Int>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = a[i][j];
        out.push_back(det_bareiss(std::move(sub)));
    }
    return out;
}

// ---------------------------------------------------------------------------

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : nrows_(rows), ncols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

bool F2Matrix::get(std::size_t r, std::size_t c) const {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
}

void F2Matrix::set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t& w = data_[r * words_ + c / 64];
    std::uint64_t m = std::uint64_t(1) << (c % 64);
    if (v)
        w |= m;
    else
        w &= ~m;
}

void F2Matrix::xor_row(std::size_t dst, std::size_t src) {
    auto* d = &data_[dst * words_];
    const auto* s = &data_[src * words_];
    for (std::size_t i = 0; i < words_; ++i) d[i] ^= s[i];
}

std::size_t F2Matrix::eliminate() {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols_ && rank < nrows_; ++c) {
        std::size_t piv = rank;
        while (piv < nrows_ && !get(piv, c)) ++piv;
        if (piv == nrows_) continue;
        if (piv != rank)
            for (std::size_t i = 0; i < words_; ++i)
                std::swap(data_[piv * words_ + i], data_[rank * words_ + i]);
        for (std::size_t r = 0; r < nrows_; ++r)
            if (r != rank && get(r, c)) xor_row(r, rank);
        ++rank;
    }
    return rank;
}

std::size_t F2Matrix::rank() const {
    F2Matrix copy = *this;
    return copy.eliminate();
}

std::vector<std::vector<std::size_t>> F2Matrix::kernel_basis() const {
    // Transpose-free kernel: eliminate and track pivot columns.
    F2Matrix m = *this;
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols_ && rank < nrows_; ++c) {
        std::size_t piv = rank;
        while (piv < m.nrows_ && !m.get(piv, c)) ++piv;
        if (piv == m.nrows_) continue;
        if (piv != rank)
            for (std::size_t i = 0; i < m.words_; ++i)
                std::swap(m.data_[piv * m.words_ + i], m.data_[rank * m.words_ + i]);
        for (std::size_t r = 0; r < m.nrows_; ++r)
            if (r != rank && m.get(r, c)) m.xor_row(r, rank);
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(ncols_, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<std::size_t>> basis;
    for (std::size_t free = 0; free < ncols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::size_t> vec{free};
        for (std::size_t r = 0; r < rank; ++r)
            if (m.get(r, free)) vec.push_back(pivot_col[r]);
        std::sort(vec.begin(), vec.end());
        basis.push_back(std::move(vec));
    }
    return basis;
}

F2RowSpace::F2RowSpace(std::size_t cols) : cols_(cols), words_((cols + 63) / 64) {}

void F2RowSpace::reduce(std::vector<std::uint64_t>& v) const {
    for (const auto& [pc, row] : pivots_) {
        if ((v[pc / 64] >> (pc % 64)) & 1u)
            for (std::size_t i = 0; i < words_; ++i) v[i] ^= row[i];
    }
}

bool F2RowSpace::insert(std::vector<std::uint64_t> v) {
    v.resize(words_, 0);
    reduce(v);
    for (std::size_t w = 0; w < words_; ++w) {
        if (v[w] == 0) continue;
        std::size_t bit = w * 64 + static_cast<std::size_t>(__builtin_ctzll(v[w]));
        pivots_.emplace_back(bit, std::move(v));
        return true;
    }
    return false;
}

bool F2RowSpace::contains(std::vector<std::uint64_t> v) const {
    v.resize(words_, 0);
    reduce(v);
    for (auto w : v)
        if (w != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------

std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    assert(r == 1);
    return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : nrows_(rows), ncols_(cols), p_(p), data_(rows * cols, 0) {}

void FpMatrix::add_at(std::size_t r, std::size_t c, std::int64_t v) {
    std::int64_t cur = data_[r * ncols_ + c];
    cur = (cur + v) % static_cast<std::int64_t>(p_);
    if (cur < 0) cur += p_;
    data_[r * ncols_ + c] = static_cast<std::uint32_t>(cur);
}

std::size_t FpMatrix::rank() const {
    FpMatrix m = *this;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols_ && rank < nrows_; ++c) {
        std::size_t piv = rank;
        while (piv < nrows_ && m.get(piv, c) == 0) ++piv;
        if (piv == nrows_) continue;
        for (std::size_t j = 0; j < ncols_; ++j)
            std::swap(m.data_[piv * ncols_ + j], m.data_[rank * ncols_ + j]);
        std::uint64_t inv = fp_inv(m.get(rank, c), p_);
        for (std::size_t j = 0; j < ncols_; ++j)
            m.data_[rank * ncols_ + j] =
                static_cast<std::uint32_t>(m.data_[rank * ncols_ + j] * inv % p_);
        for (std::size_t r = 0; r < nrows_; ++r) {
            if (r == rank) continue;
            std::uint64_t f = m.get(r, c);
            if (f == 0) continue;
            for (std::size_t j = 0; j < ncols_; ++j) {
                std::uint64_t val = m.data_[r * ncols_ + j] + (p_ - f) * m.data_[rank * ncols_ + j] % p_;
                m.data_[r * ncols_ + j] = static_cast<std::uint32_t>(val % p_);
            }
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<std::uint32_t>> FpMatrix::kernel_basis() const {
    FpMatrix m = *this;
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols_ && rank < nrows_; ++c) {
        std::size_t piv = rank;
        while (piv < nrows_ && m.get(piv, c) == 0) ++piv;
        if (piv == nrows_) continue;
        for (std::size_t j = 0; j < ncols_; ++j)
            std::swap(m.data_[piv * ncols_ + j], m.data_[rank * ncols_ + j]);
        std::uint64_t inv = fp_inv(m.get(rank, c), p_);
        for (std::size_t j = 0; j < ncols_; ++j)
            m.data_[rank * ncols_ + j] =
                static_cast<std::uint32_t>(m.data_[rank * ncols_ + j] * inv % p_);
        for (std::size_t r = 0; r < nrows_; ++r) {
            if (r == rank) continue;
            std::uint64_t f = m.get(r, c);
            if (f == 0) continue;
            for (std::size_t j = 0; j < ncols_; ++j) {
                std::uint64_t val = m.data_[r * ncols_ + j] + (p_ - f) * m.data_[rank * ncols_ + j] % p_;
                m.data_[r * ncols_ + j] = static_cast<std::uint32_t>(val % p_);
            }
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(ncols_, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free = 0; free < ncols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> vec(ncols_, 0);
        vec[free] = 1;
        for (std::size_t r = 0; r < rank; ++r) {
            std::uint32_t v = m.get(r, free);
            if (v) vec[pivot_col[r]] = p_ - v;
        }
        basis.push_back(std::move(vec));
    }
    return basis;
}

FpRowSpace::FpRowSpace(std::size_t cols, std::uint32_t p) : cols_(cols), p_(p) {}

void FpRowSpace::reduce(std::vector<std::uint32_t>& v) const {
    for (const auto& [pc, row] : pivots_) {
        std::uint64_t f = v[pc];
        if (f == 0) continue;
        for (std::size_t i = 0; i < cols_; ++i) {
            std::uint64_t val = v[i] + (p_ - static_cast<std::uint32_t>(f)) * row[i] % p_;
            v[i] = static_cast<std::uint32_t>(val % p_);
        }
    }
}

bool FpRowSpace::insert(std::vector<std::uint32_t> v) {
    v.resize(cols_, 0);
    reduce(v);
    for (std::size_t i = 0; i < cols_; ++i) {
        if (v[i] == 0) continue;
        std::uint64_t inv = fp_inv(v[i], p_);
        for (std::size_t j = 0; j < cols_; ++j)
            v[j] = static_cast<std::uint32_t>(v[j] * inv % p_);
        pivots_.emplace_back(i, std::move(v));
        return true;
    }
    return false;
}

bool FpRowSpace::contains(std::vector<std::uint32_t> v) const {
    v.resize(cols_, 0);
    reduce(v);
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace latroot
