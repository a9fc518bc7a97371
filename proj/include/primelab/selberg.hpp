#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "primelab/arith.hpp"
#include "primelab/rational.hpp"

namespace primelab {

struct SieveParams {
    int64_t N = 1;   // sequence length
    double z = 2;    // sieving parameter, level D = z^2
    int64_t W = 1;   // squarefree wheel modulus
    int64_t b = 1;   // reduced residue, 1 <= b <= W

    void validate() const;
};

// Selberg weights rho_d on squarefree d | P, d < z, where P is the
// product of primes p < z with p coprime to W. All entries exact.
struct SieveWeights {
    SieveParams params;
    std::map<int64_t, Rat> support;  // d -> rho_d
    Rat J;                           // sum of 1/phi(d) over the support

    const std::vector<int64_t>& sieve_primes() const { return primes_; }
    bool divides_P(int64_t q) const;

    std::vector<int64_t> primes_;  // primes p < z, p coprime to W
};

// nu(n) = scalar * core(n), core(n) = (sum_{d | (Wn+b, P)} rho_d)^2.
// The core stays exact: sums are kept as integers over one common
// denominator; only `scalar` = (phi(W)/W) log z is a double.
struct MajorantTable {
    SieveParams params;
    SieveWeights weights;
    std::vector<Int> sum_num;  // index n in [1,N]; sum_num[0] unused
    Int den;                   // common denominator of the rho_d
    double scalar = 0;

    Rat core(int64_t n) const;       // exact (sum/den)^2
    double value(int64_t n) const;   // scalar * core(n)
    Eigen::ArrayXd values() const;   // all of [1,N]
};

// Closed-form construction: rho_d = mu(d) (d/phi(d)) J^{-1} *
// sum_{e < z/d, e | P, (e,d)=1} 1/phi(e). The y_from_weights round trip
// below is the correctness oracle.
SieveWeights build_weights(double z, int64_t W, int64_t support_budget = 2'000'000);

// y_d = mu(d) phi(d) sum_{m = 0 mod d} rho_m / m, from the definition.
// Every value must come out exactly J^{-1}.
std::map<int64_t, Rat> y_from_weights(const SieveWeights& w);

// J(q,r) = sum_{d | P, (d,q)=1} rho_{rd} / d.
Rat J_qr(const SieveWeights& w, int64_t q, int64_t r);

// T(q) = sum_{d1,d2 | P, q | [d1,d2]} rho_{d1} rho_{d2} / [d1,d2].
Rat T_q(const SieveWeights& w, int64_t q);

MajorantTable build_majorant(const SieveParams& p);

// sum over squarefree d < z with (d,m)=1 of 1/phi(d), exact.
Rat phi_harmonic_sum(double z, int64_t m);

std::string weights_to_json(const SieveWeights& w);
std::string majorant_to_json(const MajorantTable& t);

}  // namespace primelab
