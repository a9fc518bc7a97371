#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "primelab/selberg.hpp"

namespace primelab {

// Real-valued sequence on [1,N]; values[k] holds f(k+1).
struct DensityFunction {
    int64_t N = 1;
    Eigen::ArrayXd values;
    std::string label;

    DensityFunction() = default;
    DensityFunction(int64_t n, std::string lbl = "")
        : N(n), values(Eigen::ArrayXd::Zero(n)), label(std::move(lbl)) {}

    double mean() const { return values.sum() / static_cast<double>(N); }
};

// fhat(r/N) = sum_n f(n) e(nr/N) for r in [0,N), e(x) = exp(2 pi i x).
Eigen::VectorXcd dft_fullgrid(const DensityFunction& f);

// Direct O(N) evaluation of fhat(theta).
std::complex<double> fhat_at(const DensityFunction& f, double theta);

// Transform of an arbitrary real sequence whose support starts at
// integer `first`: fhat at theta = j/G for j in [0,G).
Eigen::VectorXcd dft_grid(const Eigen::ArrayXd& seq, int64_t first, int64_t grid_size);

// Riemann-sum approximation of (int_0^1 |fhat|^q)^{1/q} on a grid of
// size oversample*N. Exact for even integer q once the grid resolves
// the trigonometric polynomial |fhat|^q.
double lq_norm(const DensityFunction& f, double q, int64_t oversample = 4);
double lq_norm_grid(const Eigen::VectorXcd& fhat, double q);

struct PseudorandomnessReport {
    double eta = 0;       // max_r |nuhat(r/N) - delta_{r,0} N| / N
    double mean_gap = 0;  // |nuhat(0)/N - 1|
};
PseudorandomnessReport pseudorandomness_eta(const DensityFunction& nu);

struct ArcClass {
    bool major = false;
    int64_t q = 0;
    int64_t a = 0;
};

struct ArcDissection {
    int64_t N = 0, Q = 0, R = 0;
    std::vector<ArcClass> classification;  // indexed by r in [0,N)
};

// Major(q,a) iff |r/N - a/q| <= 1/(qR) for some q <= Q, gcd(a,q)=1
// (a taken in [0,q), so r=0 lands in Major(1,0)); smallest such q wins.
ArcDissection arc_dissect(int64_t N, int64_t Q, int64_t R);

struct MajorArcReport {
    std::complex<double> lhs;         // sum_{n<=x} nu(n) e_q(an)
    std::complex<double> prediction;  // scalar * arc_phase * x * T(q)
    double error_term = 0;
    double bound = 0;                 // scalar * q * N^{1-delta}
    std::complex<double> arc_phase;   // the proposition's unit factor
};

MajorArcReport major_arc_compare(const MajorantTable& nu, int64_t q, int64_t a,
                                 int64_t x, double delta = 0.01);

struct MinorArcReport {
    double lhs = 0;
    double rhs = 0;  // (M + x/q + q) log(2qx)
};

// residues[m-1] is the class c_m mod m, for 1 <= m <= M.
MinorArcReport minor_arc_lemma_check(double alpha, int64_t q, int64_t a,
                                     int64_t M, int64_t x,
                                     const std::vector<int64_t>& residues);

// CSV spectrum export: r, re, im, magnitude, classification.
std::string spectrum_csv(const DensityFunction& f, const ArcDissection& arcs);
std::string pseudorandomness_json(const SieveParams& p, const PseudorandomnessReport& r);

// Zero-padded linear convolution (FFT above a size threshold).
Eigen::ArrayXd convolve(const Eigen::ArrayXd& a, const Eigen::ArrayXd& b);

}  // namespace primelab
