#include <orderk/bigint.hpp>
#include <orderk/gaussian.hpp>
#include <orderk/ring.hpp>

#include <catch2/catch.hpp>

#include <random>
#include <string>

using orderk::BigInt;
using orderk::Gaussian;
using orderk::imag_unit_power;

static_assert(orderk::RingElement<BigInt>);
static_assert(orderk::RingElement<Gaussian<BigInt>>);

namespace {

std::string int128_to_string(__int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string digits;
    while (mag != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
        mag /= 10;
    }
    if (neg) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
}

BigInt random_bigint(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> dist(-4611686018427387904LL, 4611686018427387903LL);
    return BigInt{dist(rng)};
}

Gaussian<BigInt> random_gaussian(std::mt19937_64& rng) {
    return {random_bigint(rng), random_bigint(rng)};
}

}  // namespace

TEST_CASE("imaginary unit powers cycle with period 4") {
    CHECK(imag_unit_power(0) == Gaussian<BigInt>{1, 0});
    CHECK(imag_unit_power(1) == Gaussian<BigInt>{0, 1});
    CHECK(imag_unit_power(2) == Gaussian<BigInt>{-1, 0});
    CHECK(imag_unit_power(3) == Gaussian<BigInt>{0, -1});
    CHECK(imag_unit_power(5) == Gaussian<BigInt>{0, 1});
    for (long long e = 0; e <= 64; ++e) CHECK(imag_unit_power(e) == imag_unit_power(e % 4));
    // the cycle extends to negative exponents: i^-1 = i^3
    CHECK(imag_unit_power(-1) == imag_unit_power(3));
    CHECK(imag_unit_power(-2) == imag_unit_power(2));
}

TEST_CASE("gaussian multiplication matches schoolbook expansion") {
    const Gaussian<BigInt> i = Gaussian<BigInt>::i();
    CHECK(i * i == Gaussian<BigInt>{-1, 0});
    CHECK(Gaussian<BigInt>{2, 0} * Gaussian<BigInt>{3, 0} == Gaussian<BigInt>{6, 0});
    CHECK(Gaussian<BigInt>{1, 1} * Gaussian<BigInt>{1, -1} == Gaussian<BigInt>{2, 0});

    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto x = random_gaussian(rng);
        const auto y = random_gaussian(rng);
        const Gaussian<BigInt> expected{x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
        CHECK(x * y == expected);
    }
}

TEST_CASE("gaussian multiplication is commutative and associative") {
    std::mt19937_64 rng(1234567);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto a = random_gaussian(rng);
        const auto b = random_gaussian(rng);
        const auto c = random_gaussian(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("the real embedding is a ring homomorphism") {
    std::mt19937_64 rng(987654321);
    for (int trial = 0; trial < 500; ++trial) {
        const BigInt m = random_bigint(rng);
        const BigInt n = random_bigint(rng);
        const Gaussian<BigInt> gm{m};
        const Gaussian<BigInt> gn{n};
        CHECK(gm + gn == Gaussian<BigInt>{m + n});
        CHECK(gm * gn == Gaussian<BigInt>{m * n});
        CHECK(-gm == Gaussian<BigInt>{-m});
    }
    CHECK(Gaussian<BigInt>::one() == Gaussian<BigInt>{BigInt::one()});
}

TEST_CASE("ring axioms hold for both concrete rings") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 500; ++trial) {
        const BigInt a = random_bigint(rng);
        const BigInt b = random_bigint(rng);
        const BigInt c = random_bigint(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a + BigInt::zero() == a);
        CHECK(a + (-a) == BigInt::zero());
        CHECK(a * BigInt::one() == a);
        CHECK(a * (b + c) == a * b + a * c);

        const Gaussian<BigInt> ga{a, b};
        const Gaussian<BigInt> gb{b, c};
        const Gaussian<BigInt> gc{c, a};
        CHECK((ga + gb) + gc == ga + (gb + gc));
        CHECK(ga + (-ga) == Gaussian<BigInt>::zero());
        CHECK(ga * (gb + gc) == ga * gb + ga * gc);
        CHECK(ga * Gaussian<BigInt>::one() == ga);
    }
}

TEST_CASE("arbitrary integers match 128-bit arithmetic on word-sized inputs") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long long> dist(INT64_MIN / 2, INT64_MAX / 2);
    for (int trial = 0; trial < 2000; ++trial) {
        const long long a = dist(rng);
        const long long b = dist(rng);
        CHECK((BigInt{a} + BigInt{b}).str() ==
              int128_to_string(static_cast<__int128>(a) + b));
        CHECK((BigInt{a} - BigInt{b}).str() ==
              int128_to_string(static_cast<__int128>(a) - b));
        CHECK((BigInt{a} * BigInt{b}).str() ==
              int128_to_string(static_cast<__int128>(a) * b));
    }
}

TEST_CASE("arbitrary integers have no overflow horizon") {
    // 2^200 two ways, checked against the known decimal expansion
    BigInt two_to_200 = BigInt::one();
    for (int doubling = 0; doubling < 200; ++doubling) two_to_200 = two_to_200 * BigInt{2};
    BigInt p = BigInt::one();
    for (int j = 0; j < 25; ++j) p = p * BigInt{256};
    CHECK(two_to_200 == p);
    CHECK(two_to_200.str() == "1606938044258990275541962092341162602522202993782792835301376");
    CHECK((two_to_200 * BigInt::zero()).is_zero());
}

TEST_CASE("zero has a unique representation") {
    CHECK(BigInt{0} == BigInt::zero());
    CHECK(BigInt{5} - BigInt{5} == BigInt::zero());
    CHECK(-BigInt::zero() == BigInt::zero());
    CHECK((BigInt{5} - BigInt{5}).signum() == 0);
    CHECK(BigInt{-7}.signum() == -1);
    CHECK(BigInt{7}.signum() == 1);
}

TEST_CASE("decimal conversion round-trips") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        BigInt value = random_bigint(rng);
        for (int growth = 0; growth < 4; ++growth) value = value * random_bigint(rng);
        CHECK(BigInt{value.str()} == value);
    }
    CHECK(BigInt{"-123456789012345678901234567890"}.str() == "-123456789012345678901234567890");
}

TEST_CASE("conversion to double is faithful at small magnitudes") {
    CHECK(BigInt{1234567}.to_double() == 1234567.0);
    CHECK(BigInt{-42}.to_double() == -42.0);
    const double big = BigInt{"100000000000000000000"}.to_double();  // 1e20
    CHECK(big == Approx(1e20).epsilon(1e-15));
}
