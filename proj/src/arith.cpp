#include "primelab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace primelab {

namespace {

constexpr int64_t kSegmentThreshold = 10'000'000;
constexpr int64_t kSegmentSize = 1 << 20;

// Smallest-prime-factor table for fast mobius/totient lookups below the
// cutoff; trial division takes over above it.
constexpr int64_t kSpfLimit = 1'000'000;

const std::vector<int32_t>& spf_table() {
    static const std::vector<int32_t> table = [] {
        std::vector<int32_t> t(kSpfLimit + 1, 0);
        for (int64_t i = 2; i <= kSpfLimit; ++i) {
            if (t[i] == 0) {
                for (int64_t j = i; j <= kSpfLimit; j += i)
                    if (t[j] == 0) t[j] = static_cast<int32_t>(i);
            }
        }
        return t;
    }();
    return table;
}

template <typename Fn>
void factorize(int64_t n, Fn&& emit) {
    // emit(p, e) for each prime power p^e || n
    if (n <= kSpfLimit) {
        const auto& spf = spf_table();
        while (n > 1) {
            int64_t p = spf[n];
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            emit(p, e);
        }
        return;
    }
    for (int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            emit(p, e);
        }
    }
    if (n > 1) emit(n, 1);
}

}  // namespace

PrimeTable::PrimeTable(int64_t limit) : limit_(limit) {
    if (limit < 0) throw std::invalid_argument("PrimeTable: negative limit");
    bits_.assign(static_cast<size_t>(limit) + 1, false);
    if (limit < 2) return;

    if (limit <= kSegmentThreshold) {
        std::vector<bool> comp(static_cast<size_t>(limit) + 1, false);
        for (int64_t i = 2; i * i <= limit; ++i)
            if (!comp[i])
                for (int64_t j = i * i; j <= limit; j += i) comp[j] = true;
        for (int64_t i = 2; i <= limit; ++i) bits_[i] = !comp[i];
        return;
    }

    // Segmented sieve: small primes up to sqrt(limit), then block sweeps.
    int64_t root = static_cast<int64_t>(std::sqrt(static_cast<double>(limit))) + 1;
    std::vector<bool> comp(static_cast<size_t>(root) + 1, false);
    std::vector<int64_t> small;
    for (int64_t i = 2; i <= root; ++i) {
        if (!comp[i]) {
            small.push_back(i);
            for (int64_t j = i * i; j <= root; j += i) comp[j] = true;
        }
    }
    std::vector<bool> seg;
    for (int64_t lo = 2; lo <= limit; lo += kSegmentSize) {
        int64_t hi = std::min(lo + kSegmentSize - 1, limit);
        seg.assign(static_cast<size_t>(hi - lo) + 1, true);
        for (int64_t p : small) {
            if (p * p > hi) break;
            int64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
            for (int64_t j = start; j <= hi; j += p) seg[j - lo] = false;
        }
        for (int64_t n = lo; n <= hi; ++n)
            if (seg[n - lo] && n >= 2) bits_[n] = true;
    }
    for (int64_t p : small) bits_[p] = true;
}

std::vector<int64_t> PrimeTable::primes() const {
    std::vector<int64_t> out;
    for (int64_t n = 2; n <= limit_; ++n)
        if (bits_[n]) out.push_back(n);
    return out;
}

int mobius(int64_t n) {
    if (n <= 0) throw std::invalid_argument("mobius: n must be >= 1");
    int sign = 1;
    bool square = false;
    factorize(n, [&](int64_t, int e) {
        if (e > 1) square = true;
        sign = -sign;
    });
    return square ? 0 : (n == 1 ? 1 : sign);
}

int64_t totient(int64_t n) {
    if (n <= 0) throw std::invalid_argument("totient: n must be >= 1");
    int64_t r = 1;
    factorize(n, [&](int64_t p, int e) {
        r *= p - 1;
        for (int i = 1; i < e; ++i) r *= p;
    });
    return r;
}

Int primorial(double y) {
    if (y < 1) throw std::invalid_argument("primorial: y must be >= 1");
    if (y > 1e7) throw std::runtime_error("primorial: y exceeds resource budget");
    if (y < 2) return 1;
    PrimeTable table(static_cast<int64_t>(y));
    Int r = 1;
    for (int64_t p : table.primes()) r *= p;
    return r;
}

int64_t primorial_i64(double y) {
    Int p = primorial(y);
    if (p > std::numeric_limits<int64_t>::max())
        throw std::overflow_error("primorial does not fit in int64");
    return p.convert_to<int64_t>();
}

std::vector<int64_t> primes_in_ap(int64_t W, int64_t b, int64_t N,
                                  const PrimeTable& table) {
    if (W < 1 || N < 1) throw std::invalid_argument("primes_in_ap: W, N >= 1");
    if (W > 1 && std::gcd(b, W) > 1)
        throw std::invalid_argument("primes_in_ap: residue b not coprime to W");
    if (table.limit() < W * N + b)
        throw std::invalid_argument("primes_in_ap: prime table too small");
    std::vector<int64_t> out;
    for (int64_t n = 1; n <= N; ++n)
        if (table.is_prime(W * n + b)) out.push_back(n);
    return out;
}

std::vector<int64_t> primes_in_ap(int64_t W, int64_t b, int64_t N) {
    PrimeTable table(W * N + std::max<int64_t>(b, 1));
    return primes_in_ap(W, b, N, table);
}

bool coprime_to_primorial(int64_t n, double y) {
    if (n == 0) return false;
    n = std::abs(n);
    if (y < 2) return true;
    int64_t ylim = static_cast<int64_t>(y);
    // any composite divisor <= ylim is preceded by one of its prime
    // factors, so a plain divisibility scan matches gcd(n, P(y)) = 1
    for (int64_t p = 2; p <= ylim; ++p)
        if (n % p == 0) return false;
    return true;
}

bool is_squarefree(int64_t n) {
    if (n <= 0) throw std::invalid_argument("is_squarefree: n must be >= 1");
    bool sf = true;
    factorize(n, [&](int64_t, int e) { if (e > 1) sf = false; });
    return sf;
}

int64_t mod_inverse(int64_t a, int64_t m) {
    if (m < 1) throw std::invalid_argument("mod_inverse: m must be >= 1");
    if (m == 1) return 0;
    int64_t r0 = m, r1 = ((a % m) + m) % m;
    int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t r2 = r0 - q * r1;
        int64_t t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: not invertible");
    return ((t0 % m) + m) % m;
}

}  // namespace primelab
