#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "primelab/fourier.hpp"

namespace primelab {

struct SpectrumReport {
    double epsilon = 0;
    int64_t grid_size = 0;                    // oversample * N
    std::vector<int64_t> frequencies;         // all grid j with |fhat(j/G)| >= eps*N
    std::vector<int64_t> representatives;     // after the covering merge
};

// T_eps on the oversampled grid; grid points within two steps of each
// other merge into the strongest representative (circularly).
SpectrumReport spectrum(const DensityFunction& a, double epsilon,
                        int64_t oversample = 4);

struct BohrSet {
    double epsilon = 0;
    int64_t N = 0;
    std::vector<double> frequencies;
    std::vector<int64_t> elements;  // b in [1, floor(eps N)], ||b theta|| < eps for all theta

    double density() const {  // |B|/N, the largeness observable
        return static_cast<double>(elements.size()) / static_cast<double>(N);
    }
};

BohrSet bohr_set(const std::vector<double>& frequencies, double epsilon, int64_t N);

// a = a' + a'' on the widened window [1-L, N+L], L = floor(eps N).
// a'(n) = E_{b1,b2 in B} a(n + b1 - b2); all convolutions zero-padded,
// never cyclic.
struct Decomposition {
    DensityFunction a;
    BohrSet bohr;
    int64_t lo = 0, hi = 0;        // window bounds, inclusive
    Eigen::ArrayXd a_struct;       // a' on [lo, hi]
    Eigen::ArrayXd a_unif;         // a'' = a_ext - a' on [lo, hi]

    int64_t window() const { return hi - lo + 1; }
};

Decomposition smooth_decompose(const DensityFunction& a, const BohrSet& bohr);

struct DecompositionReport {
    double max_struct = 0;        // max_n a'(n)
    double excess = 0;            // max_n a'(n) - 1 (set-like measurement)
    double mean_shift = 0;        // |E_[1,N] a' - E_[1,N] a|
    double max_unif_hat = 0;      // max_theta |ahat''(theta)| / N
    double regularity = 0;        // weighted pair count of a' / N^2
    double kappa_ref = 0;         // same count for a itself
    double max_multiplier_error = 0;   // Fourier identity residual / N
    bool dominance = false;       // |ahat'|,|ahat''| <= |ahat| on the grid
};

DecompositionReport decomposition_report(const Decomposition& d,
                                         double beta, int64_t oversample = 4);

struct HolderGapReport {
    double true_gap = 0;        // |sum a1a2a3 - sum a1'a2'a3'| at n1+n2+n3 = target
    double bound_product = 0;   // largest of the 7 cross-term Holder products
};

HolderGapReport holder_gap(const Decomposition& d1, const Decomposition& d2,
                           const Decomposition& d3, double q, int64_t target,
                           int64_t oversample = 4);

std::string decomposition_json(const Decomposition& d, const DecompositionReport& r);
std::string decomposition_csv(const Decomposition& d);

}  // namespace primelab
