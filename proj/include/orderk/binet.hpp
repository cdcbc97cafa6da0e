#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace orderk {

/// Root finding failed to converge, or a numerical consistency check
/// (Vieta sums, imaginary-part cancellation) failed afterwards.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two roots landed closer than the separation tolerance, contradicting the
/// distinct-roots property the closed forms rely on. Surfaced, never silently
/// accepted.
class CloseRootsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// p(z) = a_0 + a_1 z + ... + a_k z^k with a_0 = 1. The lambda family has
/// a_1 = -lambda and a_j = -1 for 2 <= j <= k; the reciprocals of its roots
/// drive the growth of the sequences.
struct CharacteristicPolynomial {
    std::vector<double> coeffs;  // a_0 .. a_k

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    std::complex<double> eval(std::complex<double> z) const {
        std::complex<double> acc = coeffs.back();
        for (std::size_t j = coeffs.size() - 1; j-- > 0;) acc = acc * z + coeffs[j];
        return acc;
    }

    /// p'(z) from the exact coefficients (a_1 + 2 a_2 z + ... + k a_k z^{k-1}).
    std::complex<double> eval_derivative(std::complex<double> z) const {
        const auto top = static_cast<double>(degree());
        std::complex<double> acc = top * coeffs.back();
        for (std::size_t j = coeffs.size() - 1; j-- > 1;)
            acc = acc * z + static_cast<double>(j) * coeffs[j];
        return acc;
    }
};

/// Characteristic polynomial 1 - lambda*z - z^2 - ... - z^k.
inline CharacteristicPolynomial char_poly(int k, long long lambda) {
    if (k < 2) throw std::invalid_argument("polynomial order k must be >= 2");
    if (lambda < 1) throw std::invalid_argument("lambda must be a positive integer");
    std::vector<double> coeffs(static_cast<std::size_t>(k) + 1, -1.0);
    coeffs[0] = 1.0;
    coeffs[1] = -static_cast<double>(lambda);
    return CharacteristicPolynomial{std::move(coeffs)};
}

/// All k complex roots plus the numerical evidence about them.
struct RootSet {
    std::vector<std::complex<double>> roots;  // sorted by (re, im)
    std::vector<double> residuals;            // |p(root)|, aligned with roots
    double min_separation = 0.0;
    int iterations = 0;

    double max_residual() const {
        return residuals.empty() ? 0.0 : *std::max_element(residuals.begin(), residuals.end());
    }
};

struct RootFinderOptions {
    double update_tolerance = 1e-13;
    int max_iterations = 500;
    double residual_tolerance = 1e-9;
    double separation_tolerance = 1e-8;
    /// When false, close roots are reported in the RootSet instead of thrown;
    /// used by the distinct-roots check so it can state how close they came.
    bool reject_close_roots = true;
};

namespace detail {

inline std::complex<double> pow_int(std::complex<double> base, unsigned long long e) {
    std::complex<double> acc = 1.0;
    while (e != 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

}  // namespace detail

/// Simultaneous (Weierstrass/Durand-Kerner) iteration: all roots refined at
/// once from deterministic guesses on a circle of radius 1 + max|a_j|, with a
/// fixed angular offset to break symmetry. Converged when the largest update
/// drops below update_tolerance; capped at max_iterations.
inline RootSet find_roots(const CharacteristicPolynomial& p, const RootFinderOptions& opts = {}) {
    const int k = p.degree();
    if (k < 1) throw std::invalid_argument("polynomial degree must be >= 1");
    if (p.coeffs.back() == 0.0) throw std::invalid_argument("leading coefficient must be nonzero");

    // monic version for the iteration
    std::vector<double> monic(p.coeffs.size());
    for (std::size_t j = 0; j < p.coeffs.size(); ++j) monic[j] = p.coeffs[j] / p.coeffs.back();
    auto eval_monic = [&](std::complex<double> z) {
        std::complex<double> acc = 1.0;
        for (std::size_t j = monic.size() - 1; j-- > 0;) acc = acc * z + monic[j];
        return acc;
    };

    double max_coeff = 0.0;
    for (double a : p.coeffs) max_coeff = std::max(max_coeff, std::abs(a));
    const double radius = 1.0 + max_coeff;

    std::vector<std::complex<double>> roots(static_cast<std::size_t>(k));
    for (int m = 0; m < k; ++m) {
        const double angle = 2.0 * std::numbers::pi * m / k + 0.4;
        roots[static_cast<std::size_t>(m)] = std::polar(radius, angle);
    }

    int iterations = 0;
    for (; iterations < opts.max_iterations; ++iterations) {
        double max_update = 0.0;
        for (int m = 0; m < k; ++m) {
            std::complex<double> denom = 1.0;
            for (int j = 0; j < k; ++j)
                if (j != m) denom *= roots[static_cast<std::size_t>(m)] - roots[static_cast<std::size_t>(j)];
            if (denom == std::complex<double>{}) continue;
            const std::complex<double> delta = eval_monic(roots[static_cast<std::size_t>(m)]) / denom;
            roots[static_cast<std::size_t>(m)] -= delta;
            max_update = std::max(max_update, std::abs(delta));
        }
        if (max_update < opts.update_tolerance) {
            ++iterations;
            break;
        }
    }

    RootSet result;
    result.roots = std::move(roots);
    result.iterations = iterations;
    std::sort(result.roots.begin(), result.roots.end(), [](const auto& a, const auto& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    result.residuals.reserve(result.roots.size());
    for (const auto& r : result.roots) result.residuals.push_back(std::abs(p.eval(r)));

    result.min_separation = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < result.roots.size(); ++a)
        for (std::size_t b = a + 1; b < result.roots.size(); ++b)
            result.min_separation =
                std::min(result.min_separation, std::abs(result.roots[a] - result.roots[b]));
    if (k == 1) result.min_separation = std::numeric_limits<double>::infinity();

    if (iterations >= opts.max_iterations && result.max_residual() > opts.residual_tolerance)
        throw ConvergenceError("root iteration hit " + std::to_string(opts.max_iterations) +
                               " iterations with max residual " +
                               std::to_string(result.max_residual()));

    // Vieta post-conditions, exact from the coefficients.
    std::complex<double> sum = 0.0, prod = 1.0;
    for (const auto& r : result.roots) {
        sum += r;
        prod *= r;
    }
    const double expected_sum = -monic[static_cast<std::size_t>(k - 1)];
    const double expected_prod = (k % 2 == 0 ? 1.0 : -1.0) * monic[0];
    const double vieta_tol = 1e-9 * std::max(1.0, max_coeff);
    if (std::abs(sum - expected_sum) > vieta_tol || std::abs(prod - expected_prod) > vieta_tol)
        throw ConvergenceError("root set fails Vieta consistency check");

    if (opts.reject_close_roots && result.min_separation < opts.separation_tolerance)
        throw CloseRootsError("multiple root suspected: min separation " +
                              std::to_string(result.min_separation));
    return result;
}

/// Numerical witness that p_k(z) at this lambda has no multiple roots.
struct SeparationReport {
    int k = 0;
    long long lambda = 0;
    double min_separation = 0.0;
    bool pass = false;
};

inline SeparationReport check_distinct_roots(int k, long long lambda) {
    RootFinderOptions opts;
    opts.reject_close_roots = false;
    const RootSet roots = find_roots(char_poly(k, lambda), opts);
    SeparationReport report;
    report.k = k;
    report.lambda = lambda;
    report.min_separation = roots.min_separation;
    report.pass = roots.min_separation > opts.separation_tolerance;
    return report;
}

namespace detail {

/// Asserts the conjugate-root imaginary parts cancelled and returns the real
/// part.
inline double require_small_imaginary(std::complex<double> sum) {
    if (std::abs(sum.imag()) > 1e-6 * std::max(1.0, std::abs(sum.real())))
        throw ConvergenceError("imaginary residue too large: " + std::to_string(sum.imag()));
    return sum.real();
}

/// sum_j (-1/p'(root_j)) * (1/root_j)^(n+1): the closed form for a^k_{k,n+1}.
inline std::complex<double> power_sum(const CharacteristicPolynomial& p, const RootSet& roots,
                                      int n) {
    std::complex<double> sum = 0.0;
    for (const auto& root : roots.roots)
        sum += (-1.0 / p.eval_derivative(root)) * pow_int(1.0 / root, static_cast<unsigned long long>(n) + 1);
    return sum;
}

}  // namespace detail

/// det(A_{k,n}) of the reciprocal power series, evaluated from the roots:
/// sum_j (1/p'(root_j)) * (-1/root_j)^(n+1), valid for n >= k.
inline double inselberg_det(const CharacteristicPolynomial& p, int n) {
    if (n < p.degree())
        throw std::domain_error("series determinant formula requires n >= k");
    const RootSet roots = find_roots(p);
    std::complex<double> sum = 0.0;
    for (const auto& root : roots.roots)
        sum += (1.0 / p.eval_derivative(root)) *
               detail::pow_int(-1.0 / root, static_cast<unsigned long long>(n) + 1);
    return detail::require_small_imaginary(sum);
}

/// Closed-form estimate of a^k_{k,n+1}, valid for n >= k >= 2.
inline double binet_kth(int k, long long lambda, int n) {
    const CharacteristicPolynomial p = char_poly(k, lambda);
    if (n < k) throw std::domain_error("closed form requires n >= k");
    const RootSet roots = find_roots(p);
    return detail::require_small_imaginary(detail::power_sum(p, roots, n));
}

/// Closed-form estimate of a^i_{k,n} via the sum identity
/// a^i_{k,n} = sum_{m=1}^{k-i+1} a^k_{k,n-m+1} (plus the (lambda-1)*a^k_{k,n}
/// correction for i = 1), each term evaluated by the k-th closed form.
/// Requires every shifted term inside the validity range: n-k+i-1 >= k.
inline double binet_ith(int k, long long lambda, int i, int n) {
    const CharacteristicPolynomial p = char_poly(k, lambda);
    if (i < 1 || i > k) throw std::out_of_range("sequence index i must be in [1, k]");
    if (n - k + i - 1 < k)
        throw std::domain_error("closed form for the i-th sequence requires n-k+i-1 >= k");
    const RootSet roots = find_roots(p);
    std::complex<double> sum = 0.0;
    for (int m = 1; m <= k - i + 1; ++m) sum += detail::power_sum(p, roots, n - m);
    if (i == 1) sum += static_cast<double>(lambda - 1) * detail::power_sum(p, roots, n - 1);
    return detail::require_small_imaginary(sum);
}

}  // namespace orderk
