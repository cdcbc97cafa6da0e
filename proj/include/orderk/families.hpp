#pragma once

#include <orderk/bigint.hpp>
#include <orderk/gaussian.hpp>
#include <orderk/hessenberg.hpp>
#include <orderk/sequence.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace orderk {

using IntMatrix = BandedLowerHessenberg<BigInt>;
using GaussianMatrix = BandedLowerHessenberg<Gaussian<BigInt>>;

/// The four matrix families whose determinants (Q, B) or permanents (H, D)
/// reproduce the k-th sequence of the lambda family:
///
///   det(Q_{k,n}) = det(B_{k,n}) = per(H_{k,n}) = per(D_{k,n}) = a^k_{k,n+1}
///
/// Q and H have Gaussian-integer entries (powers of i), B and D are integer.
enum class Family { Q, B, H, D };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::Q: return "Q";
        case Family::B: return "B";
        case Family::H: return "H";
        case Family::D: return "D";
    }
    throw std::invalid_argument("unknown family");
}

inline Family parse_family(const std::string& name) {
    if (name == "Q") return Family::Q;
    if (name == "B") return Family::B;
    if (name == "H") return Family::H;
    if (name == "D") return Family::D;
    throw std::invalid_argument("unknown family '" + name + "' (expected Q, B, H or D)");
}

/// One family matrix: family, order k, dimension n, weight lambda, and an
/// optional border index i selecting the bordered variant whose det/per
/// equals a^i_{k,n} instead of a^k_{k,n+1}.
struct FamilySpec {
    Family family = Family::B;
    int k = 2;
    int n = 1;
    long long lambda = 1;
    std::optional<int> border;
};

namespace detail {

inline void validate_family_params(int k, int n, long long lambda) {
    if (k < 2) throw std::invalid_argument("family order k must be >= 2");
    if (n < 1) throw std::invalid_argument("family dimension n must be >= 1");
    if (lambda < 1) throw std::invalid_argument("lambda must be a positive integer");
}

inline void validate_border(int k, int i) {
    if (i < 2 || i > k)
        throw std::invalid_argument("border index must be in [2, k], got " + std::to_string(i));
}

// Base entry rules, d = row - col in [-1, k-1], d != 0 off-diagonal.
struct QRule {
    using Ring = Gaussian<BigInt>;
    long long lambda;
    Ring diagonal() const { return Ring{BigInt{lambda}}; }
    Ring off_diagonal(int d) const { return imag_unit_power(d < 0 ? -d : d); }
    Ring border_row() const { return Gaussian<BigInt>::i(); }          // matches superdiagonal
    Ring border_col(int j) const { return imag_unit_power(j); }
};
struct BRule {
    using Ring = BigInt;
    long long lambda;
    Ring diagonal() const { return BigInt{lambda}; }
    Ring off_diagonal(int d) const { return d < 0 ? BigInt{-1} : BigInt::one(); }
    Ring border_row() const { return BigInt{-1}; }
    Ring border_col(int) const { return BigInt::one(); }
};
struct HRule {
    using Ring = Gaussian<BigInt>;
    long long lambda;
    Ring diagonal() const { return Ring{BigInt{lambda}}; }
    Ring off_diagonal(int d) const { return imag_unit_power(d); }      // i^-1 = -i above
    Ring border_row() const { return -Gaussian<BigInt>::i(); }
    Ring border_col(int j) const { return imag_unit_power(j); }
};
struct DRule {
    using Ring = BigInt;
    long long lambda;
    Ring diagonal() const { return BigInt{lambda}; }
    Ring off_diagonal(int) const { return BigInt::one(); }
    Ring border_row() const { return BigInt::one(); }
    Ring border_col(int) const { return BigInt::one(); }
};

template <typename Rule>
BandedLowerHessenberg<typename Rule::Ring> build_base(const Rule& rule, int k, int n) {
    BandedLowerHessenberg<typename Rule::Ring> m(n, k - 1);
    for (int s = 0; s < n; ++s) {
        if (s + 1 < n) m.set(s, s + 1, rule.off_diagonal(-1));
        m.set(s, s, rule.diagonal());
        for (int d = 1; d <= std::min(k - 1, s); ++d) m.set(s, s - d, rule.off_diagonal(d));
    }
    return m;
}

/// Bordered variant of final dimension n: first row (1, sigma, 0, ...), first
/// column (1, c_1, ..., c_{k-i}, 0, ...) with the (n-1)-dimensional base
/// matrix as trailing block, so that det/per directly yields a^i_{k,n}.
/// i = k degenerates to a plain unit border.
template <typename Rule>
BandedLowerHessenberg<typename Rule::Ring> build_bordered(const Rule& rule, int k, int n, int i) {
    BandedLowerHessenberg<typename Rule::Ring> m(n, k - 1);
    m.set(0, 0, Rule::Ring::one());
    if (n > 1) m.set(0, 1, rule.border_row());
    for (int s = 1; s <= std::min(k - i, n - 1); ++s) m.set(s, 0, rule.border_col(s));
    for (int s = 1; s < n; ++s) {
        if (s + 1 < n) m.set(s, s + 1, rule.off_diagonal(-1));
        m.set(s, s, rule.diagonal());
        for (int d = 1; d <= std::min(k - 1, s - 1); ++d) m.set(s, s - d, rule.off_diagonal(d));
    }
    return m;
}

}  // namespace detail

/// Q_{k,n}: lambda on the diagonal, i^|s-t| elsewhere in the band.
inline GaussianMatrix build_q(int k, int n, long long lambda) {
    detail::validate_family_params(k, n, lambda);
    return detail::build_base(detail::QRule{lambda}, k, n);
}

/// B_{k,n}: -1 superdiagonal, lambda diagonal, 1 on the k-1 subdiagonals.
inline IntMatrix build_b(int k, int n, long long lambda) {
    detail::validate_family_params(k, n, lambda);
    return detail::build_base(detail::BRule{lambda}, k, n);
}

/// H_{k,n}: lambda on the diagonal, i^(s-t) elsewhere (so -i above it).
inline GaussianMatrix build_h(int k, int n, long long lambda) {
    detail::validate_family_params(k, n, lambda);
    return detail::build_base(detail::HRule{lambda}, k, n);
}

/// D_{k,n}: lambda on the diagonal, 1 elsewhere in the band.
inline IntMatrix build_d(int k, int n, long long lambda) {
    detail::validate_family_params(k, n, lambda);
    return detail::build_base(detail::DRule{lambda}, k, n);
}

inline GaussianMatrix build_q_bordered(int k, int n, long long lambda, int i) {
    detail::validate_family_params(k, n, lambda);
    detail::validate_border(k, i);
    return detail::build_bordered(detail::QRule{lambda}, k, n, i);
}

inline IntMatrix build_b_bordered(int k, int n, long long lambda, int i) {
    detail::validate_family_params(k, n, lambda);
    detail::validate_border(k, i);
    return detail::build_bordered(detail::BRule{lambda}, k, n, i);
}

inline GaussianMatrix build_h_bordered(int k, int n, long long lambda, int i) {
    detail::validate_family_params(k, n, lambda);
    detail::validate_border(k, i);
    return detail::build_bordered(detail::HRule{lambda}, k, n, i);
}

inline IntMatrix build_d_bordered(int k, int n, long long lambda, int i) {
    detail::validate_family_params(k, n, lambda);
    detail::validate_border(k, i);
    return detail::build_bordered(detail::DRule{lambda}, k, n, i);
}

/// Banded Toeplitz matrix of the reciprocal power series of
/// p_k(z) = 1 - lambda*z - z^2 - ... - z^k: superdiagonal 1, diagonal
/// -lambda, -1 on the k-1 subdiagonals. Satisfies
/// det(A_{k,n}) = (-1)^n det(B_{k,n}), the exact link between the closed-form
/// evaluation and the determinant families.
inline IntMatrix build_series_matrix(int k, int n, long long lambda) {
    detail::validate_family_params(k, n, lambda);
    IntMatrix m(n, k - 1);
    for (int s = 0; s < n; ++s) {
        if (s + 1 < n) m.set(s, s + 1, BigInt::one());
        m.set(s, s, BigInt{-lambda});
        for (int d = 1; d <= std::min(k - 1, s); ++d) m.set(s, s - d, BigInt{-1});
    }
    return m;
}

using FamilyMatrix = std::variant<IntMatrix, GaussianMatrix>;

/// Builds any family matrix (bordered when spec.border is set).
inline FamilyMatrix build(const FamilySpec& spec) {
    if (spec.border) {
        const int i = *spec.border;
        switch (spec.family) {
            case Family::Q: return build_q_bordered(spec.k, spec.n, spec.lambda, i);
            case Family::B: return build_b_bordered(spec.k, spec.n, spec.lambda, i);
            case Family::H: return build_h_bordered(spec.k, spec.n, spec.lambda, i);
            case Family::D: return build_d_bordered(spec.k, spec.n, spec.lambda, i);
        }
    } else {
        switch (spec.family) {
            case Family::Q: return build_q(spec.k, spec.n, spec.lambda);
            case Family::B: return build_b(spec.k, spec.n, spec.lambda);
            case Family::H: return build_h(spec.k, spec.n, spec.lambda);
            case Family::D: return build_d(spec.k, spec.n, spec.lambda);
        }
    }
    throw std::invalid_argument("unknown family");
}

/// det/per of a family matrix, with the Gaussian results checked to be real.
/// Q and B are determinant families, H and D permanent families.
inline BigInt family_det(const FamilyMatrix& m) {
    if (const auto* g = std::get_if<GaussianMatrix>(&m)) return require_real(det_hessenberg(*g));
    return det_hessenberg(std::get<IntMatrix>(m));
}

inline BigInt family_perm(const FamilyMatrix& m) {
    if (const auto* g = std::get_if<GaussianMatrix>(&m)) return require_real(perm_hessenberg(*g));
    return perm_hessenberg(std::get<IntMatrix>(m));
}

/// The value the family theorems assert for this spec: a^i_{k,n} for bordered
/// matrices, a^k_{k,n+1} for base ones, evaluated by the exact recurrence.
inline BigInt family_expected_value(const FamilySpec& spec) {
    const SequenceParams params{spec.k, spec.lambda};
    if (spec.border) return seq_value(params, *spec.border, spec.n);
    return seq_value(params, spec.k, spec.n + 1);
}

}  // namespace orderk
