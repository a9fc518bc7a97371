#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "primelab/arith.hpp"

using namespace primelab;

TEST_CASE("prime table basics") {
    PrimeTable t(100);
    CHECK(!t.is_prime(0));
    CHECK(!t.is_prime(1));
    CHECK(t.is_prime(2));
    CHECK(t.is_prime(97));
    CHECK(!t.is_prime(91));
    CHECK(!t.is_prime(1000));  // out of range
    auto ps = t.primes();
    CHECK(ps.front() == 2);
    CHECK(ps.back() == 97);
    CHECK(ps.size() == 25);
}

TEST_CASE("segmented sieve agrees with direct sieve") {
    // limit above the segment threshold exercises the segmented path
    PrimeTable big(10'000'019);
    CHECK(big.is_prime(10'000'019));
    CHECK(!big.is_prime(10'000'001));
    PrimeTable small(1000);
    for (int64_t n = 0; n <= 1000; ++n) CHECK(big.is_prime(n) == small.is_prime(n));
}

TEST_CASE("mobius values and multiplicativity") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(2) == -1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);
    CHECK_THROWS_AS(mobius(0), std::invalid_argument);
    for (int64_t m = 1; m <= 200; ++m)
        for (int64_t n = 1; n <= 200; ++n)
            if (std::gcd(m, n) == 1) CHECK(mobius(m * n) == mobius(m) * mobius(n));
}

TEST_CASE("totient values and multiplicativity") {
    CHECK(totient(1) == 1);
    CHECK(totient(2) == 1);
    CHECK(totient(12) == 4);
    CHECK(totient(210) == 48);
    CHECK_THROWS_AS(totient(0), std::invalid_argument);
    for (int64_t m = 1; m <= 200; ++m)
        for (int64_t n = 1; n <= 200; ++n)
            if (std::gcd(m, n) == 1) CHECK(totient(m * n) == totient(m) * totient(n));
}

TEST_CASE("divisor-sum identities up to 10^4") {
    for (int64_t n = 1; n <= 10'000; ++n) {
        int64_t mu_sum = 0, phi_sum = 0;
        for (int64_t d = 1; d * d <= n; ++d) {
            if (n % d) continue;
            mu_sum += mobius(d);
            phi_sum += totient(d);
            if (d != n / d) {
                mu_sum += mobius(n / d);
                phi_sum += totient(n / d);
            }
        }
        CHECK(mu_sum == (n == 1 ? 1 : 0));
        CHECK(phi_sum == n);
    }
}

TEST_CASE("primorial") {
    CHECK(primorial(1) == 1);  // empty product
    CHECK(primorial(2) == 2);
    CHECK(primorial(7) == 210);
    CHECK(primorial(10) == 210);
    CHECK(primorial_i64(13) == 30030);
    CHECK_THROWS_AS(primorial(0.5), std::invalid_argument);
}

TEST_CASE("primes_in_ap examples") {
    CHECK(primes_in_ap(2, 1, 9) == std::vector<int64_t>{1, 2, 3, 5, 6, 8, 9});
    CHECK(primes_in_ap(1, 1, 5) == std::vector<int64_t>{1, 2, 4});
    CHECK(primes_in_ap(6, 1, 6) == std::vector<int64_t>{1, 2, 3, 5, 6});
    CHECK_THROWS_AS(primes_in_ap(6, 3, 10), std::invalid_argument);
}

TEST_CASE("primes_in_ap(1,1,N) shifted matches the table") {
    int64_t N = 100'000;
    PrimeTable t(N + 1);
    auto in_ap = primes_in_ap(1, 1, N, t);
    std::vector<int64_t> expected;
    for (int64_t n = 1; n <= N; ++n)
        if (t.is_prime(n + 1)) expected.push_back(n);
    CHECK(in_ap == expected);
}

TEST_CASE("coprime_to_primorial") {
    CHECK(coprime_to_primorial(1, 100));
    CHECK(coprime_to_primorial(101, 100));   // 101 prime, all p <= 100 miss
    CHECK(!coprime_to_primorial(202, 100));  // 2 divides
    CHECK(coprime_to_primorial(7, 5));       // only p in {2,3,5} tested
    CHECK(!coprime_to_primorial(7, 7));
}

TEST_CASE("is_squarefree") {
    CHECK(is_squarefree(1));
    CHECK(is_squarefree(30));
    CHECK(!is_squarefree(12));
    CHECK(!is_squarefree(49));
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(1, 1) == 0);
    CHECK(mod_inverse(3, 7) == 5);
    CHECK(mod_inverse(2, 3) == 2);
    for (int64_t m = 2; m <= 50; ++m)
        for (int64_t a = 1; a < m; ++a)
            if (std::gcd(a, m) == 1) CHECK(mod_inverse(a, m) * a % m == 1);
}
