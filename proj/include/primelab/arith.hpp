#pragma once

#include <cstdint>
#include <vector>

#include "primelab/rational.hpp"

namespace primelab {

// Primality table on [0, limit], sieved at construction and immutable
// afterwards. Safe for concurrent readers.
class PrimeTable {
  public:
    explicit PrimeTable(int64_t limit);

    int64_t limit() const { return limit_; }
    bool is_prime(int64_t n) const {
        return n >= 0 && n <= limit_ && bits_[static_cast<size_t>(n)];
    }
    // Primes in [2, limit] in increasing order.
    std::vector<int64_t> primes() const;

  private:
    int64_t limit_;
    std::vector<bool> bits_;
};

// Moebius function; throws std::invalid_argument for n = 0.
int mobius(int64_t n);

// Euler totient; throws std::invalid_argument for n = 0.
int64_t totient(int64_t n);

// Product of all primes p <= y, exact. Empty product is 1.
// Throws std::invalid_argument for y < 1 and a resource error for
// absurdly large y.
Int primorial(double y);

// Checked narrowing of a primorial to int64, for wheel moduli.
int64_t primorial_i64(double y);

// { n in [1,N] : W*n + b prime }. Requires gcd(b, W) = 1 when W > 1.
std::vector<int64_t> primes_in_ap(int64_t W, int64_t b, int64_t N,
                                  const PrimeTable& table);
std::vector<int64_t> primes_in_ap(int64_t W, int64_t b, int64_t N);

// True iff no prime p <= y divides n, i.e. gcd(n, P(y)) = 1.
// Avoids forming the primorial itself.
bool coprime_to_primorial(int64_t n, double y);

bool is_squarefree(int64_t n);

// Modular inverse of a mod m, m >= 1, gcd(a, m) = 1.
int64_t mod_inverse(int64_t a, int64_t m);

}  // namespace primelab
