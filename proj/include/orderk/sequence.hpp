#pragma once

#include <orderk/bigint.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace orderk {

/// Parameters of one lambda-family instance: the k sequences a^i_{k,n}
/// (1 <= i <= k) satisfying
///
///   a^i_{k,n} = lambda * a^i_{k,n-1} + a^i_{k,n-2} + ... + a^i_{k,n-k}
///
/// with initial window a^i_{k,n} = 1 if i = 1-n, else 0, for 1-k <= n <= 0.
/// lambda = 1 gives the k sequences of generalized order-k Fibonacci numbers,
/// lambda = 2 the generalized order-k Pell numbers.
struct SequenceParams {
    int k = 2;
    long long lambda = 1;
};

inline void validate(const SequenceParams& p) {
    if (p.k < 2) throw std::invalid_argument("sequence order k must be >= 2");
    if (p.lambda < 1) throw std::invalid_argument("lambda must be a positive integer");
}

namespace detail {

inline void check_index(const SequenceParams& p, int i) {
    if (i < 1 || i > p.k)
        throw std::out_of_range("sequence index i must be in [1, k], got " + std::to_string(i));
}

/// Initial-window value for index n in [1-k, 0].
inline BigInt initial_value(int i, int n) { return i == 1 - n ? BigInt::one() : BigInt::zero(); }

/// a^i_{k,n} for any integer n. The recurrence has trailing coefficient 1, so
/// it extends uniquely below the initial window as well:
///   a_{n-k} = a_n - lambda*a_{n-1} - a_{n-2} - ... - a_{n-k+1}.
/// Only the shift-identity machinery ever looks below the window.
inline BigInt sequence_value_extended(const SequenceParams& p, int i, int n) {
    validate(p);
    check_index(p, i);
    const int k = p.k;
    const BigInt lambda{p.lambda};
    if (n >= 1 - k && n <= 0) return initial_value(i, n);

    // window holds a_{m-k+1}, ..., a_m (oldest first)
    std::vector<BigInt> window(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) window[static_cast<std::size_t>(j)] = initial_value(i, j + 1 - k);

    if (n > 0) {
        for (int m = 1; m <= n; ++m) {
            BigInt next = lambda * window.back();
            for (int j = 0; j + 1 < k; ++j) next += window[static_cast<std::size_t>(j)];
            std::rotate(window.begin(), window.begin() + 1, window.end());
            window.back() = std::move(next);
        }
        return window.back();
    }

    // window holds a_m, ..., a_{m+k-1}; step m downward from 1-k
    for (int m = 1 - k; m > n; --m) {
        BigInt prev = window.back() - lambda * window[static_cast<std::size_t>(k - 2)];
        for (int j = 0; j + 2 < k; ++j) prev -= window[static_cast<std::size_t>(j)];
        std::rotate(window.rbegin(), window.rbegin() + 1, window.rend());
        window.front() = std::move(prev);
    }
    return window.front();
}

}  // namespace detail

/// a^i_{k,n}, by forward iteration over a rolling window of k values.
/// Accepts any n >= 1-k (the initial window is data, not a special case).
inline BigInt seq_value(const SequenceParams& params, int i, int n) {
    validate(params);
    detail::check_index(params, i);
    if (n < 1 - params.k)
        throw std::out_of_range("sequence index n must be >= 1-k, got " + std::to_string(n));
    return detail::sequence_value_extended(params, i, n);
}

/// All values of one sequence for 1-k <= n <= n_max, computed in one forward
/// sweep.
class SequenceWindow {
public:
    SequenceWindow(SequenceParams params, int i, int n_max)
        : params_(params), i_(i), n_min_(1 - params.k) {
        validate(params_);
        detail::check_index(params_, i_);
        if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
        const int k = params_.k;
        const BigInt lambda{params_.lambda};
        values_.reserve(static_cast<std::size_t>(n_max - n_min_ + 1));
        for (int n = n_min_; n <= 0; ++n) values_.push_back(detail::initial_value(i_, n));
        for (int n = 1; n <= n_max; ++n) {
            BigInt next = lambda * values_.back();
            for (int j = 2; j <= k; ++j) next += values_[values_.size() - static_cast<std::size_t>(j)];
            values_.push_back(std::move(next));
        }
    }

    const SequenceParams& params() const { return params_; }
    int sequence_index() const { return i_; }
    int n_min() const { return n_min_; }
    int n_max() const { return n_min_ + static_cast<int>(values_.size()) - 1; }

    const BigInt& value(int n) const {
        if (n < n_min_ || n > n_max()) throw std::out_of_range("n outside window");
        return values_[static_cast<std::size_t>(n - n_min_)];
    }

private:
    SequenceParams params_;
    int i_;
    int n_min_;
    std::vector<BigInt> values_;
};

/// Rectangular table of a^i_{k,n} for a set of sequence indices i and
/// 1-k <= n <= n_max, one column per i.
struct SequenceTable {
    SequenceParams params;
    std::vector<int> i_set;
    int n_min = 0;
    int n_max = 0;
    std::vector<std::vector<BigInt>> rows;  // rows[n - n_min][column]

    const BigInt& at(int n, int i) const {
        auto col = std::find(i_set.begin(), i_set.end(), i);
        if (col == i_set.end() || n < n_min || n > n_max)
            throw std::out_of_range("table lookup outside requested grid");
        return rows[static_cast<std::size_t>(n - n_min)]
                   [static_cast<std::size_t>(col - i_set.begin())];
    }
};

inline SequenceTable seq_table(const SequenceParams& params, const std::vector<int>& i_set,
                               int n_max) {
    validate(params);
    if (i_set.empty()) throw std::invalid_argument("at least one sequence index required");
    for (int i : i_set) detail::check_index(params, i);
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");

    SequenceTable table;
    table.params = params;
    table.i_set = i_set;
    table.n_min = 1 - params.k;
    table.n_max = n_max;

    std::vector<SequenceWindow> columns;
    columns.reserve(i_set.size());
    for (int i : i_set) columns.emplace_back(params, i, n_max);

    for (int n = table.n_min; n <= n_max; ++n) {
        std::vector<BigInt> row;
        row.reserve(i_set.size());
        for (const auto& column : columns) row.push_back(column.value(n));
        table.rows.push_back(std::move(row));
    }
    return table;
}

/// The i-th sequence expressed through the k-th one:
///
///   a^i_{k,n} = sum_{m=1}^{k-i+1} a^k_{k,n-m+1}          (2 <= i <= k)
///
/// For i = 1 the textbook sum undercounts by (lambda-1) * a^k_{k,n}; the
/// corrected telescoping (see shift_identity_residual) adds that term, which
/// vanishes in the Fibonacci case lambda = 1.
inline BigInt ith_from_kth(const SequenceParams& params, int i, int n) {
    validate(params);
    detail::check_index(params, i);
    if (n < 1) throw std::out_of_range("ith_from_kth requires n >= 1");
    SequenceWindow kth(params, params.k, n);
    BigInt sum = BigInt::zero();
    for (int m = 1; m <= params.k - i + 1; ++m) sum += kth.value(n - m + 1);
    if (i == 1) sum += BigInt{params.lambda - 1} * kth.value(n);
    return sum;
}

/// Residual of the shift identity linking consecutive sequences:
///
///   a^i_{k,n} - a^{i+1}_{k,n} - a^k_{k,n-k+i} - [i=1](lambda-1)*a^k_{k,n}
///
/// Contract: zero for every 1 <= i < k and n >= 1-k. The a^k term uses the
/// recurrence's backward extension when its index falls below the initial
/// window. Without the [i=1] correction the identity fails for lambda >= 2
/// (e.g. k=3, lambda=2: a^1_1 = 2 but a^2_1 + a^3_{-1} = 1).
inline BigInt shift_identity_residual(const SequenceParams& params, int i, int n) {
    validate(params);
    if (i < 1 || i >= params.k)
        throw std::out_of_range("shift identity requires 1 <= i < k");
    if (n < 1 - params.k)
        throw std::out_of_range("sequence index n must be >= 1-k");
    BigInt residual = seq_value(params, i, n) - seq_value(params, i + 1, n) -
                      detail::sequence_value_extended(params, params.k, n - params.k + i);
    if (i == 1) residual -= BigInt{params.lambda - 1} * seq_value(params, params.k, n);
    return residual;
}

/// Single-sequence generalized Fibonacci numbers f_{k,n}: the k-term sum
/// recurrence under boundary f_{k,1} = ... = f_{k,k-2} = 0,
/// f_{k,k-1} = f_{k,k} = 1. Related to the lambda = 1 family by
/// a^k_{k,n} = f_{k,k+n-2}.
inline BigInt miles_value(int k, int n) {
    if (k < 2) throw std::invalid_argument("order k must be >= 2");
    if (n < 1) throw std::invalid_argument("miles_value requires n >= 1");
    std::vector<BigInt> window;
    window.reserve(static_cast<std::size_t>(k));
    for (int m = 1; m <= k && m <= n; ++m)
        window.push_back(m >= k - 1 ? BigInt::one() : BigInt::zero());
    if (n <= k) return window.back();
    for (int m = k + 1; m <= n; ++m) {
        BigInt next = BigInt::zero();
        for (const auto& v : window) next += v;
        std::rotate(window.begin(), window.begin() + 1, window.end());
        window.back() = std::move(next);
    }
    return window.back();
}

}  // namespace orderk
