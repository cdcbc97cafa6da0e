#pragma once

#include <orderk/ring.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orderk {

/// n x n lower Hessenberg matrix over a ring R, band-stored: entries may be
/// nonzero only for -1 <= row-col <= w (one superdiagonal, w subdiagonals).
/// Rows are stored as w+2 contiguous slots, so memory is O(n*(w+2)) no matter
/// how large n grows.
template <RingElement R>
class BandedLowerHessenberg {
public:
    BandedLowerHessenberg(int n, int lower_bandwidth)
        : n_(n), w_(lower_bandwidth),
          band_(static_cast<std::size_t>(n) * static_cast<std::size_t>(lower_bandwidth + 2)) {
        if (n < 0) throw std::invalid_argument("matrix dimension must be >= 0");
        if (lower_bandwidth < 0) throw std::invalid_argument("lower bandwidth must be >= 0");
    }

    int dim() const { return n_; }
    int lower_bandwidth() const { return w_; }

    /// Entry (row, col), 0-based; zero outside the band.
    const R& at(int row, int col) const {
        check_position(row, col);
        const int d = row - col;
        if (d < -1 || d > w_) return zero_;
        return band_[slot(row, d)];
    }

    void set(int row, int col, R value) {
        check_position(row, col);
        const int d = row - col;
        if (d < -1 || d > w_)
            throw std::out_of_range("entry (" + std::to_string(row) + "," + std::to_string(col) +
                                    ") lies outside the Hessenberg band");
        band_[slot(row, d)] = std::move(value);
    }

    std::vector<std::vector<R>> to_dense() const {
        std::vector<std::vector<R>> dense(static_cast<std::size_t>(n_),
                                          std::vector<R>(static_cast<std::size_t>(n_), R::zero()));
        for (int s = 0; s < n_; ++s)
            for (int t = std::max(0, s - w_); t < std::min(n_, s + 2); ++t)
                dense[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = at(s, t);
        return dense;
    }

    /// Rebuilds band storage from a dense matrix, rejecting anything that is
    /// not lower Hessenberg with the given bandwidth.
    static BandedLowerHessenberg from_dense(const std::vector<std::vector<R>>& dense,
                                            int lower_bandwidth) {
        const int n = static_cast<int>(dense.size());
        BandedLowerHessenberg m(n, lower_bandwidth);
        for (int s = 0; s < n; ++s) {
            if (static_cast<int>(dense[static_cast<std::size_t>(s)].size()) != n)
                throw std::invalid_argument("malformed matrix: not square");
            for (int t = 0; t < n; ++t) {
                const R& v = dense[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
                if (v == R::zero()) continue;
                const int d = s - t;
                if (d < -1 || d > lower_bandwidth)
                    throw std::invalid_argument(
                        "malformed matrix: nonzero entry outside band at (" + std::to_string(s) +
                        "," + std::to_string(t) + ")");
                m.set(s, t, v);
            }
        }
        return m;
    }

private:
    void check_position(int row, int col) const {
        if (row < 0 || row >= n_ || col < 0 || col >= n_)
            throw std::out_of_range("matrix position out of range");
    }

    std::size_t slot(int row, int d) const {
        return static_cast<std::size_t>(row) * static_cast<std::size_t>(w_ + 2) +
               static_cast<std::size_t>(d + 1);
    }

    int n_;
    int w_;
    std::vector<R> band_;
    inline static const R zero_ = R::zero();
};

namespace detail {

/// Shared expansion behind det/perm. With 1-based indices and A_m the leading
/// m x m block:
///
///   det(A_m) = a_{m,m} det(A_{m-1})
///            + sum_r (-1)^{m-r} a_{m,r} [prod_{j=r}^{m-1} a_{j,j+1}] det(A_{r-1})
///
/// and the permanent is the same sum without signs. The band limits the sum
/// to r >= m-w (all earlier a_{m,r} vanish), the superdiagonal products are
/// updated incrementally, and only the last w+2 minors are kept, giving
/// O(n*w) ring multiplications and O(w) extra space.
template <RingElement R, bool Signed>
R hessenberg_expand(const BandedLowerHessenberg<R>& m) {
    const int n = m.dim();
    const int w = m.lower_bandwidth();
    if (n == 0) return R::one();

    const int minor_span = w + 2;
    const int prod_span = w + 1;
    std::vector<R> minors(static_cast<std::size_t>(minor_span), R::zero());
    std::vector<R> prods(static_cast<std::size_t>(prod_span), R::zero());
    minors[0] = R::one();  // det/per of the empty matrix

    auto minor_at = [&](int idx) -> R& {
        return minors[static_cast<std::size_t>(idx % minor_span)];
    };
    auto prod_at = [&](int r) -> R& { return prods[static_cast<std::size_t>(r % prod_span)]; };

    for (int step = 1; step <= n; ++step) {
        if (step >= 2) {
            const R& super = m.at(step - 2, step - 1);  // a_{step-1, step}
            for (int r = std::max(1, step - w); r <= step - 2; ++r) prod_at(r) = prod_at(r) * super;
            prod_at(step - 1) = super;
        }
        R acc = m.at(step - 1, step - 1) * minor_at(step - 1);
        for (int r = std::max(1, step - w); r <= step - 1; ++r) {
            const R& border = m.at(step - 1, r - 1);  // a_{step, r}
            if (border == R::zero()) continue;
            R term = border * prod_at(r) * minor_at(r - 1);
            if (Signed && ((step - r) & 1))
                acc = acc - term;
            else
                acc = acc + term;
        }
        minor_at(step) = std::move(acc);
    }
    return minor_at(n);
}

template <RingElement R>
int checked_dense_dim(const std::vector<std::vector<R>>& a, int max_dim) {
    const int n = static_cast<int>(a.size());
    if (n > max_dim)
        throw std::invalid_argument("dense expansion capped at n <= " + std::to_string(max_dim) +
                                    ", got " + std::to_string(n));
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("malformed matrix: not square");
    return n;
}

inline bool permutation_is_odd(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) ++inversions;
    return (inversions & 1) != 0;
}

template <RingElement R, bool Signed>
R dense_permutation_sum(const std::vector<std::vector<R>>& a) {
    const int n = checked_dense_dim(a, 9);
    if (n == 0) return R::one();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    R sum = R::zero();
    do {
        R prod = R::one();
        bool vanished = false;
        for (int row = 0; row < n && !vanished; ++row) {
            const R& e = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(perm[static_cast<std::size_t>(row)])];
            if (e == R::zero())
                vanished = true;
            else
                prod = prod * e;
        }
        if (vanished) continue;
        if (Signed && permutation_is_odd(perm))
            sum = sum - prod;
        else
            sum = sum + prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

}  // namespace detail

/// Determinant via the band-truncated Hessenberg recursion; O(n*w) ring
/// multiplications.
template <RingElement R>
R det_hessenberg(const BandedLowerHessenberg<R>& m) {
    return detail::hessenberg_expand<R, true>(m);
}

/// Permanent via the unsigned variant of the same recursion.
template <RingElement R>
R perm_hessenberg(const BandedLowerHessenberg<R>& m) {
    return detail::hessenberg_expand<R, false>(m);
}

/// Determinant by signed permutation expansion over a dense matrix. Exact in
/// R; guarded to n <= 9 (factorial cost), intended as an independent oracle.
template <RingElement R>
R det_naive(const std::vector<std::vector<R>>& a) {
    return detail::dense_permutation_sum<R, true>(a);
}

/// Permanent straight from the definition per(A) = sum_sigma prod a_{i,sigma(i)};
/// n <= 9.
template <RingElement R>
R perm_naive(const std::vector<std::vector<R>>& a) {
    return detail::dense_permutation_sum<R, false>(a);
}

}  // namespace orderk
