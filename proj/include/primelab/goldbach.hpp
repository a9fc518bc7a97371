#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "primelab/fourier.hpp"
#include "primelab/transfer.hpp"

namespace primelab {

// W-tricked ternary instance for the target M = W*N + b1 + b2 + b3.
struct TernaryInstance {
    int64_t M = 0;
    double w = 2;
    int64_t W = 2;
    std::array<int64_t, 3> b{};
    int64_t N = 0;
    std::array<int64_t, 3> Ni{};   // N1 = N2 = floor(N/2), N3 = N
    std::array<double, 3> z{};     // z_i = Ni^{0.49}
    std::array<DensityFunction, 3> a;
    std::array<MajorantTable, 3> nu;
    double delta = 0.01;
};

// Lexicographically smallest reduced triple with b1+b2+b3 = M (mod W).
std::array<int64_t, 3> choose_residues(int64_t M, int64_t W);

TernaryInstance build_instance(int64_t M, double w);

struct HypothesisReport {
    bool majorization = false;          // exact a_i <= nu_i
    std::array<double, 3> alphas{};     // means of the a_i
    double mean_condition = 0;          // (min(1,a1+a2)+a2)/2 + a3 - 1
    std::array<double, 3> eta{};        // pseudorandomness of each nu_i
    std::array<double, 3> lq_ratio{};   // |ahat_i|_q / Ni^{1-1/q}
    double kappa = 0;                   // kappa_estimate(t)
    bool regular = false;               // regularity count >= kappa N1^2 (trivially)
};

HypothesisReport hypothesis_report(const TernaryInstance& t, double q);

// Weighted (delta/50)-regularity pair count of a_1 over N1^2.
double kappa_estimate(const TernaryInstance& t);

struct TripleCount {
    double weighted = 0;     // sum over n1+n2+n3 = N of a1 a2 a3
    int64_t unweighted = 0;  // admissible integer triples
};

TripleCount triple_convolution_count(const TernaryInstance& t);

// Ordered prime triples (p1,p2,p3) with p1+p2+p3 = M, by enumeration.
int64_t direct_ternary_count(int64_t M);
int64_t direct_ternary_count(int64_t M, const PrimeTable& table);
bool has_ternary_representation(int64_t M, const PrimeTable& table);

// A witness triple (n1,n2,n3) with all a_i(n_i) > 0 and sum N, or empty.
std::vector<int64_t> find_witness(const TernaryInstance& t);

struct ExperimentConfig {
    std::vector<int64_t> Ms;
    std::vector<double> ws;
    double epsilon = 0.1;
    double q = 2.5;
    bool with_decomposition = false;
};

// One newline-delimited JSON record per (M, w) grid point; per-instance
// failures are recorded as {"M":..,"w":..,"error":..} and skipped.
void run_experiment(const ExperimentConfig& cfg,
                    const std::function<void(const std::string&)>& emit);

std::string instance_json(const TernaryInstance& t, const HypothesisReport& h,
                          const TripleCount& tc, int64_t direct_count);

}  // namespace primelab
