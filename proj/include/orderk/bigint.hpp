#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <utility>

namespace orderk {

/// Exact signed integer of unbounded magnitude.
///
/// Every sequence value in this library is a BigInt; the type exposes only
/// the commutative-ring surface (+, -, unary -, *, ==, ordering) plus decimal
/// conversion. Division is deliberately absent: none of the recursions here
/// need it, and leaving it out keeps the ring contract honest.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value) : value_(value) {}  // NOLINT: implicit by design
    explicit BigInt(const std::string& decimal) : value_(decimal) {}

    static BigInt zero() { return BigInt{}; }
    static BigInt one() { return BigInt{1}; }

    bool is_zero() const { return value_.is_zero(); }
    /// -1, 0 or +1.
    int signum() const { return value_.sign(); }

    BigInt operator-() const { return BigInt(-value_); }

    BigInt& operator+=(const BigInt& rhs) { value_ += rhs.value_; return *this; }
    BigInt& operator-=(const BigInt& rhs) { value_ -= rhs.value_; return *this; }
    BigInt& operator*=(const BigInt& rhs) { value_ *= rhs.value_; return *this; }

    friend BigInt operator+(BigInt lhs, const BigInt& rhs) { lhs += rhs; return lhs; }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) { lhs -= rhs; return lhs; }
    friend BigInt operator*(BigInt lhs, const BigInt& rhs) { lhs *= rhs; return lhs; }

    friend bool operator==(const BigInt& lhs, const BigInt& rhs) { return lhs.value_ == rhs.value_; }
    friend bool operator!=(const BigInt& lhs, const BigInt& rhs) { return lhs.value_ != rhs.value_; }
    friend bool operator<(const BigInt& lhs, const BigInt& rhs) { return lhs.value_ < rhs.value_; }
    friend bool operator<=(const BigInt& lhs, const BigInt& rhs) { return lhs.value_ <= rhs.value_; }
    friend bool operator>(const BigInt& lhs, const BigInt& rhs) { return lhs.value_ > rhs.value_; }
    friend bool operator>=(const BigInt& lhs, const BigInt& rhs) { return lhs.value_ >= rhs.value_; }

    /// Exact decimal representation, '-' prefixed when negative.
    std::string str() const { return value_.str(); }

    /// Nearest double; loses precision past 2^53 but never overflows for the
    /// magnitudes this library produces.
    double to_double() const { return value_.convert_to<double>(); }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.value_; }

private:
    explicit BigInt(boost::multiprecision::cpp_int v) : value_(std::move(v)) {}

    boost::multiprecision::cpp_int value_;
};

inline BigInt abs(const BigInt& v) { return v.signum() < 0 ? -v : v; }

}  // namespace orderk
