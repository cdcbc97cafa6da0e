#pragma once

#include <orderk/binet.hpp>
#include <orderk/families.hpp>
#include <orderk/sequence.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <tuple>
#include <vector>

namespace orderk {

struct VerifyOptions {
    int k_max = 5;
    int n_max = 20;
    std::vector<long long> lambdas = {1, 2, 3};
    double tolerance = 1e-9;
};

/// One cross-check: a single method evaluated at one grid point against the
/// exact recurrence. Exact methods must match digit for digit; closed-form
/// rows carry the relative error instead.
struct MethodCheck {
    int k = 0;
    long long lambda = 0;
    int i = 0;
    int n = 0;
    std::string method;
    std::string expected;
    std::string actual;
    double rel_err = std::numeric_limits<double>::quiet_NaN();  // NaN for exact methods
    bool pass = false;
};

struct VerifyReport {
    std::vector<MethodCheck> rows;
    bool all_pass = true;

    void add(MethodCheck row) {
        all_pass = all_pass && row.pass;
        rows.push_back(std::move(row));
    }
};

namespace detail {

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline MethodCheck exact_check(int k, long long lambda, int i, int n, std::string method,
                               const BigInt& expected, const Gaussian<BigInt>& actual) {
    MethodCheck row{k, lambda, i, n, std::move(method), expected.str(), actual.str()};
    row.pass = actual.is_real() && actual.re == expected;
    return row;
}

inline MethodCheck exact_check(int k, long long lambda, int i, int n, std::string method,
                               const BigInt& expected, const BigInt& actual) {
    MethodCheck row{k, lambda, i, n, std::move(method), expected.str(), actual.str()};
    row.pass = actual == expected;
    return row;
}

inline MethodCheck closed_form_check(int k, long long lambda, int i, int n, std::string method,
                                     const BigInt& expected, double actual, double tolerance) {
    MethodCheck row{k, lambda, i, n, std::move(method), expected.str(), format_double(actual)};
    const double exact = expected.to_double();
    row.rel_err = std::abs(actual - exact) / std::abs(exact);
    row.pass = row.rel_err <= tolerance;
    return row;
}

}  // namespace detail

/// Runs the whole theorem grid: for every (k, lambda, n) the four base family
/// matrices against a^k_{k,n+1}, for every i in [2, k] the four bordered
/// variants against a^i_{k,n}, and the closed forms wherever they are valid.
/// Rows come out sorted by (k, lambda, i, n, method).
inline VerifyReport run_verify(const VerifyOptions& opts) {
    if (opts.k_max < 2) throw std::invalid_argument("k-max must be >= 2");
    if (opts.n_max < 1) throw std::invalid_argument("n-max must be >= 1");
    if (opts.lambdas.empty()) throw std::invalid_argument("at least one lambda required");
    if (opts.tolerance < 0) throw std::invalid_argument("tolerance must be >= 0");

    VerifyReport report;
    for (int k = 2; k <= opts.k_max; ++k) {
        for (long long lambda : opts.lambdas) {
            const SequenceParams params{k, lambda};
            const SequenceWindow kth(params, k, opts.n_max + 1);

            for (int n = 1; n <= opts.n_max; ++n) {
                const BigInt& expected = kth.value(n + 1);
                report.add(detail::exact_check(k, lambda, k, n, "det-Q", expected,
                                               det_hessenberg(build_q(k, n, lambda))));
                report.add(detail::exact_check(k, lambda, k, n, "det-B", expected,
                                               det_hessenberg(build_b(k, n, lambda))));
                report.add(detail::exact_check(k, lambda, k, n, "per-H", expected,
                                               perm_hessenberg(build_h(k, n, lambda))));
                report.add(detail::exact_check(k, lambda, k, n, "per-D", expected,
                                               perm_hessenberg(build_d(k, n, lambda))));
            }

            for (int i = 2; i <= k; ++i) {
                const SequenceWindow ith(params, i, opts.n_max);
                for (int n = 1; n <= opts.n_max; ++n) {
                    const BigInt& expected = ith.value(n);
                    report.add(detail::exact_check(k, lambda, i, n, "det-Qi", expected,
                                                   det_hessenberg(build_q_bordered(k, n, lambda, i))));
                    report.add(detail::exact_check(k, lambda, i, n, "det-Bi", expected,
                                                   det_hessenberg(build_b_bordered(k, n, lambda, i))));
                    report.add(detail::exact_check(k, lambda, i, n, "per-Hi", expected,
                                                   perm_hessenberg(build_h_bordered(k, n, lambda, i))));
                    report.add(detail::exact_check(k, lambda, i, n, "per-Di", expected,
                                                   perm_hessenberg(build_d_bordered(k, n, lambda, i))));
                }
            }

            for (int n = k; n <= opts.n_max; ++n)
                report.add(detail::closed_form_check(k, lambda, k, n, "binet-k", kth.value(n + 1),
                                                     binet_kth(k, lambda, n), opts.tolerance));

            for (int i = 1; i <= k; ++i) {
                const int n_low = 2 * k - i + 1;
                if (n_low > opts.n_max) continue;
                const SequenceWindow ith(params, i, opts.n_max);
                for (int n = n_low; n <= opts.n_max; ++n)
                    report.add(detail::closed_form_check(k, lambda, i, n, "binet-i", ith.value(n),
                                                         binet_ith(k, lambda, i, n), opts.tolerance));
            }
        }
    }

    std::sort(report.rows.begin(), report.rows.end(), [](const MethodCheck& a, const MethodCheck& b) {
        return std::tie(a.k, a.lambda, a.i, a.n, a.method) <
               std::tie(b.k, b.lambda, b.i, b.n, b.method);
    });
    return report;
}

}  // namespace orderk
