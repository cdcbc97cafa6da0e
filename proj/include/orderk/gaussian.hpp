#pragma once

#include <orderk/bigint.hpp>
#include <orderk/ring.hpp>

#include <ostream>
#include <stdexcept>
#include <string>

namespace orderk {

/// Gaussian integer re + im*i over an exact integer type.
///
/// The matrix families with i^|s-t| / i^(s-t) entries live in this ring; their
/// determinants and permanents are computed exactly here and only afterwards
/// checked to be real.
template <RingElement T = BigInt>
struct Gaussian {
    T re{};
    T im{};

    Gaussian() = default;
    Gaussian(T real) : re(std::move(real)) {}  // NOLINT: real embedding
    Gaussian(T real, T imag) : re(std::move(real)), im(std::move(imag)) {}

    static Gaussian zero() { return Gaussian{}; }
    static Gaussian one() { return Gaussian{T::one()}; }
    /// The imaginary unit i = sqrt(-1).
    static Gaussian i() { return Gaussian{T::zero(), T::one()}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    Gaussian operator-() const { return Gaussian{-re, -im}; }

    friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
        return Gaussian{a.re + b.re, a.im + b.im};
    }
    friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
        return Gaussian{a.re - b.re, a.im - b.im};
    }
    // (a+bi)(c+di) = (ac - bd) + (ad + bc)i
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return Gaussian{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }

    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

    /// Compact rendering: "0", "3", "-i", "2i", "1+1i", "1-2i".
    std::string str() const {
        if (im.is_zero()) return re.str();
        std::string imag = im == T{1} ? "i" : im == T{-1} ? "-i" : im.str() + "i";
        if (re.is_zero()) return imag;
        return re.str() + (im.signum() > 0 ? "+" : "") + imag;
    }

    friend std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << g.str(); }
};

/// i^e for any integer exponent; the powers cycle with period 4:
/// 1, i, -1, -i. Negative exponents follow the same cycle (i^-1 = i^3 = -i).
template <RingElement T = BigInt>
Gaussian<T> imag_unit_power(long long e) {
    switch (((e % 4) + 4) % 4) {
        case 0: return Gaussian<T>::one();
        case 1: return Gaussian<T>::i();
        case 2: return -Gaussian<T>::one();
        default: return -Gaussian<T>::i();
    }
}

/// Extracts the real part after asserting the imaginary part is exactly zero.
/// Determinants of the i^|s-t| family and permanents of the i^(s-t) family
/// are real by theorem; a nonzero imaginary part here means a broken build or
/// a broken claim, so it is surfaced rather than discarded.
template <RingElement T>
const T& require_real(const Gaussian<T>& g) {
    if (!g.is_real())
        throw std::runtime_error("expected a real value, got " + g.str());
    return g.re;
}

}  // namespace orderk
