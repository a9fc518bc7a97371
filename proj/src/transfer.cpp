#include "primelab/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace primelab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// distance to the nearest integer
double nearest_int_dist(double x) {
    double f = x - std::floor(x);
    return std::min(f, 1.0 - f);
}

}  // namespace

SpectrumReport spectrum(const DensityFunction& a, double epsilon, int64_t oversample) {
    if (!(epsilon > 0 && epsilon < 1))
        throw std::invalid_argument("spectrum: epsilon in (0,1) required");
    SpectrumReport rep;
    rep.epsilon = epsilon;
    rep.grid_size = oversample * a.N;
    Eigen::VectorXcd F = dft_grid(a.values, 1, rep.grid_size);
    double thresh = epsilon * static_cast<double>(a.N);
    for (int64_t j = 0; j < rep.grid_size; ++j)
        if (std::abs(F[j]) >= thresh) rep.frequencies.push_back(j);
    if (rep.frequencies.empty()) return rep;

    // circular clustering: indices within two grid steps share a cluster;
    // the strongest point of each cluster is its representative
    int64_t G = rep.grid_size;
    std::vector<std::vector<int64_t>> clusters;
    for (int64_t j : rep.frequencies) {
        if (!clusters.empty() && j - clusters.back().back() <= 2)
            clusters.back().push_back(j);
        else
            clusters.push_back({j});
    }
    if (clusters.size() > 1) {
        int64_t wrap_gap = clusters.front().front() + G - clusters.back().back();
        if (wrap_gap <= 2) {
            for (int64_t j : clusters.front()) clusters.back().push_back(j);
            clusters.erase(clusters.begin());
        }
    }
    for (const auto& cl : clusters) {
        int64_t best = cl.front();
        for (int64_t j : cl)
            if (std::abs(F[j]) > std::abs(F[best])) best = j;
        rep.representatives.push_back(best);
    }
    std::sort(rep.representatives.begin(), rep.representatives.end());
    return rep;
}

BohrSet bohr_set(const std::vector<double>& frequencies, double epsilon, int64_t N) {
    if (!(epsilon > 0 && epsilon < 1))
        throw std::invalid_argument("bohr_set: epsilon in (0,1) required");
    BohrSet B;
    B.epsilon = epsilon;
    B.N = N;
    B.frequencies = frequencies;
    int64_t L = static_cast<int64_t>(std::floor(epsilon * static_cast<double>(N)));
    for (int64_t b = 1; b <= L; ++b) {
        bool ok = true;
        for (double theta : frequencies)
            if (nearest_int_dist(static_cast<double>(b) * theta) >= epsilon) {
                ok = false;
                break;
            }
        if (ok) B.elements.push_back(b);
    }
    return B;
}

Decomposition smooth_decompose(const DensityFunction& a, const BohrSet& bohr) {
    if (bohr.elements.empty())
        throw std::invalid_argument("smooth_decompose: empty Bohr set");
    Decomposition d;
    d.a = a;
    d.bohr = bohr;
    int64_t L = static_cast<int64_t>(
        std::floor(bohr.epsilon * static_cast<double>(a.N)));
    d.lo = 1 - L;
    d.hi = a.N + L;

    int64_t S = bohr.elements.back() - bohr.elements.front();
    Eigen::ArrayXd kernel = Eigen::ArrayXd::Zero(2 * S + 1);  // index t + S
    for (int64_t b1 : bohr.elements)
        for (int64_t b2 : bohr.elements) kernel[b1 - b2 + S] += 1.0;
    double B2 = static_cast<double>(bohr.elements.size()) *
                static_cast<double>(bohr.elements.size());

    // a'(n) = (1/|B|^2) sum_m a(m) k(m - n): correlate with the reversed
    // kernel; conv index k corresponds to n = 1 - S + k
    Eigen::ArrayXd krev = kernel.reverse();
    Eigen::ArrayXd h = convolve(a.values, krev);
    d.a_struct = Eigen::ArrayXd::Zero(d.window());
    for (int64_t k = 0; k < h.size(); ++k) {
        int64_t n = 1 - S + k;
        d.a_struct[n - d.lo] = h[k] / B2;
    }
    d.a_unif = -d.a_struct;
    for (int64_t n = 1; n <= a.N; ++n) d.a_unif[n - d.lo] += a.values[n - 1];
    return d;
}

DecompositionReport decomposition_report(const Decomposition& d, double beta,
                                         int64_t oversample) {
    DecompositionReport rep;
    int64_t N = d.a.N;
    double Nd = static_cast<double>(N);
    int64_t G = oversample * d.window();

    rep.max_struct = d.a_struct.maxCoeff();
    rep.excess = rep.max_struct - 1.0;
    double mean_struct = 0;
    for (int64_t n = 1; n <= N; ++n) mean_struct += d.a_struct[n - d.lo];
    rep.mean_shift = std::abs(mean_struct / Nd - d.a.mean());

    Eigen::VectorXcd Fa = dft_grid(d.a.values, 1, G);
    Eigen::VectorXcd Fs = dft_grid(d.a_struct, d.lo, G);
    Eigen::VectorXcd Fu = dft_grid(d.a_unif, d.lo, G);

    // Bohr-phase multiplier from the element list, an independent route
    // from the pair-difference kernel used in smooth_decompose
    Eigen::ArrayXd indB = Eigen::ArrayXd::Zero(
        d.bohr.elements.back() - d.bohr.elements.front() + 1);
    for (int64_t b : d.bohr.elements) indB[b - d.bohr.elements.front()] = 1.0;
    Eigen::VectorXcd FB = dft_grid(indB, d.bohr.elements.front(), G);
    double Bsz = static_cast<double>(d.bohr.elements.size());

    rep.dominance = true;
    for (int64_t j = 0; j < G; ++j) {
        double mult = std::norm(FB[j] / Bsz);
        rep.max_multiplier_error =
            std::max(rep.max_multiplier_error,
                     std::abs(Fs[j] - Fa[j] * mult) / Nd);
        rep.max_multiplier_error =
            std::max(rep.max_multiplier_error,
                     std::abs(Fu[j] - Fa[j] * (1.0 - mult)) / Nd);
        rep.max_unif_hat = std::max(rep.max_unif_hat, std::abs(Fu[j]) / Nd);
        double tol = 1e-9 * Nd;
        if (std::abs(Fs[j]) > std::abs(Fa[j]) + tol ||
            std::abs(Fu[j]) > std::abs(Fa[j]) + tol)
            rep.dominance = false;
    }

    // weighted regularity pair count (def:trans (3)) for a' and for a
    double y = 1.0 / beta;
    auto weighted_reg = [&](auto&& f) {
        double s = 0;
        for (int64_t u = 1; static_cast<double>(u) <= beta * Nd && u <= N; ++u) {
            double fu = f(u);
            if (fu == 0) continue;
            for (int64_t v = N; static_cast<double>(v) >= (1 - beta) * Nd && v >= 1; --v) {
                double fv = f(v);
                if (fv != 0 && coprime_to_primorial(v - u, y)) s += fu * fv;
            }
        }
        return s;
    };
    rep.regularity =
        weighted_reg([&](int64_t n) { return d.a_struct[n - d.lo]; }) / (Nd * Nd);
    rep.kappa_ref =
        weighted_reg([&](int64_t n) { return d.a.values[n - 1]; }) / (Nd * Nd);
    return rep;
}

HolderGapReport holder_gap(const Decomposition& d1, const Decomposition& d2,
                           const Decomposition& d3, double q, int64_t target,
                           int64_t oversample) {
    if (!(q > 2 && q < 3))
        throw std::invalid_argument("holder_gap: q in (2,3) required");
    const Decomposition* ds[3] = {&d1, &d2, &d3};

    // triple sum over n1+n2+n3 = target via two zero-padded convolutions
    auto triple = [&](const Eigen::ArrayXd& f1, int64_t lo1,
                      const Eigen::ArrayXd& f2, int64_t lo2,
                      const Eigen::ArrayXd& f3, int64_t lo3) {
        Eigen::ArrayXd c = convolve(f1, f2);
        double s = 0;
        for (int64_t k = 0; k < c.size(); ++k) {
            int64_t n3 = target - (lo1 + lo2 + k);
            int64_t idx = n3 - lo3;
            if (idx >= 0 && idx < f3.size()) s += c[k] * f3[idx];
        }
        return s;
    };

    double sum_a = triple(d1.a.values, 1, d2.a.values, 1, d3.a.values, 1);
    double sum_s = triple(d1.a_struct, d1.lo, d2.a_struct, d2.lo,
                          d3.a_struct, d3.lo);

    HolderGapReport rep;
    rep.true_gap = std::abs(sum_a - sum_s);

    // per-function grid norms, s = 0 for a', s = 1 for a''
    double lqn[3][2], supn[3][2];
    for (int i = 0; i < 3; ++i) {
        int64_t G = oversample * ds[i]->window();
        for (int s = 0; s < 2; ++s) {
            const Eigen::ArrayXd& f = s ? ds[i]->a_unif : ds[i]->a_struct;
            Eigen::VectorXcd F = dft_grid(f, ds[i]->lo, G);
            lqn[i][s] = lq_norm_grid(F, q);
            supn[i][s] = F.cwiseAbs().maxCoeff();
        }
    }

    // the 7 cross terms: bit i set means f_i = a_i''; Holder applied at
    // the uniform slot giving the smallest product
    for (int mask = 1; mask < 8; ++mask) {
        double best = std::numeric_limits<double>::infinity();
        for (int k = 0; k < 3; ++k) {
            if (!(mask & (1 << k))) continue;
            double prod = std::pow(supn[k][1], 3.0 - q) *
                          std::pow(lqn[k][1], q - 2.0);
            for (int i = 0; i < 3; ++i)
                if (i != k) prod *= lqn[i][(mask >> i) & 1];
            best = std::min(best, prod);
        }
        rep.bound_product = std::max(rep.bound_product, best);
    }
    return rep;
}

std::string decomposition_json(const Decomposition& d, const DecompositionReport& r) {
    nlohmann::ordered_json j;
    j["N"] = d.a.N;
    j["label"] = d.a.label;
    j["epsilon"] = d.bohr.epsilon;
    j["bohr_size"] = d.bohr.elements.size();
    j["bohr_density"] = d.bohr.density();
    j["max_struct"] = r.max_struct;
    j["excess"] = r.excess;
    j["mean_shift"] = r.mean_shift;
    j["max_unif_hat"] = r.max_unif_hat;
    j["regularity"] = r.regularity;
    j["kappa_ref"] = r.kappa_ref;
    j["max_multiplier_error"] = r.max_multiplier_error;
    j["dominance"] = r.dominance;
    return j.dump();
}

std::string decomposition_csv(const Decomposition& d) {
    std::ostringstream out;
    out << "n,a,a_struct,a_unif\n";
    out.precision(15);
    for (int64_t n = d.lo; n <= d.hi; ++n) {
        double av = (n >= 1 && n <= d.a.N) ? d.a.values[n - 1] : 0.0;
        out << n << ',' << av << ',' << d.a_struct[n - d.lo] << ','
            << d.a_unif[n - d.lo] << '\n';
    }
    return out.str();
}

}  // namespace primelab
