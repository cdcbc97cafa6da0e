#pragma once

#include <concepts>

namespace orderk {

/// Contract the determinant/permanent recursions are generic over: a regular
/// value type with ring addition, negation, multiplication and the two
/// distinguished constants. Satisfied by BigInt and Gaussian<BigInt>.
template <typename R>
concept RingElement = std::regular<R> && requires(const R a, const R b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { R::zero() } -> std::convertible_to<R>;
    { R::one() } -> std::convertible_to<R>;
};

}  // namespace orderk
