#include "primelab/goldbach.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace primelab {

std::array<int64_t, 3> choose_residues(int64_t M, int64_t W) {
    if (M % 2 == 0) throw std::invalid_argument("M must be odd");
    if (W < 2) throw std::invalid_argument("choose_residues: W must be >= 2");
    std::vector<int64_t> reduced;
    for (int64_t r = 1; r < W; ++r)
        if (std::gcd(r, W) == 1) reduced.push_back(r);
    for (int64_t b1 : reduced) {
        for (int64_t b2 : reduced) {
            int64_t b3 = ((M - b1 - b2) % W + W) % W;
            if (b3 != 0 && std::gcd(b3, W) == 1) return {b1, b2, b3};
        }
    }
    throw std::logic_error("choose_residues: no reduced triple exists");
}

TernaryInstance build_instance(int64_t M, double w) {
    TernaryInstance t;
    t.M = M;
    t.w = w;
    t.W = primorial_i64(w);
    if (t.W < 2) throw std::invalid_argument("build_instance: w must give W >= 2");
    t.b = choose_residues(M, t.W);
    int64_t bsum = t.b[0] + t.b[1] + t.b[2];
    if (M <= bsum || (M - bsum) % t.W != 0)
        throw std::invalid_argument("instance degenerate: M - b1 - b2 - b3 not a positive multiple of W");
    t.N = (M - bsum) / t.W;
    if (t.N < 6)
        throw std::invalid_argument("instance degenerate: N = (M - b1 - b2 - b3)/W below 6");
    t.Ni = {t.N / 2, t.N / 2, t.N};

    PrimeTable table(t.W * t.N + t.W);
    for (int i = 0; i < 3; ++i) {
        t.z[i] = std::pow(static_cast<double>(t.Ni[i]), 0.49);
        t.a[i] = DensityFunction(t.Ni[i], "a" + std::to_string(i + 1));
        double val = static_cast<double>(totient(t.W)) / static_cast<double>(t.W) *
                     std::log(t.z[i]);
        for (int64_t n : primes_in_ap(t.W, t.b[i], t.Ni[i], table))
            if (static_cast<double>(t.W * n + t.b[i]) >= t.z[i])
                t.a[i].values[n - 1] = val;
        t.nu[i] = build_majorant(SieveParams{t.Ni[i], t.z[i], t.W, t.b[i]});
    }
    return t;
}

double kappa_estimate(const TernaryInstance& t) {
    double beta = t.delta / 50;
    double N1 = static_cast<double>(t.Ni[0]);
    double y = 1.0 / beta;
    double s = 0;
    for (int64_t u = 1; static_cast<double>(u) <= beta * N1 && u <= t.Ni[0]; ++u) {
        double fu = t.a[0].values[u - 1];
        if (fu == 0) continue;
        for (int64_t v = t.Ni[0]; static_cast<double>(v) >= (1 - beta) * N1; --v) {
            double fv = t.a[0].values[v - 1];
            if (fv != 0 && coprime_to_primorial(v - u, y)) s += fu * fv;
        }
    }
    return s / (N1 * N1);
}

HypothesisReport hypothesis_report(const TernaryInstance& t, double q) {
    HypothesisReport rep;
    rep.majorization = true;
    for (int i = 0; i < 3; ++i) {
        // exact check: a_i > 0 forces core >= 1, i.e. |sum| >= den
        for (int64_t n = 1; n <= t.Ni[i]; ++n) {
            if (t.a[i].values[n - 1] > 0 &&
                abs(t.nu[i].sum_num[static_cast<size_t>(n)]) < t.nu[i].den)
                rep.majorization = false;
        }
        rep.alphas[i] = t.a[i].mean();
        DensityFunction nu_i(t.Ni[i], "nu" + std::to_string(i + 1));
        nu_i.values = t.nu[i].values();
        rep.eta[i] = pseudorandomness_eta(nu_i).eta;
        rep.lq_ratio[i] =
            lq_norm(t.a[i], q) /
            std::pow(static_cast<double>(t.Ni[i]), 1.0 - 1.0 / q);
    }
    rep.mean_condition =
        0.5 * (std::min(1.0, rep.alphas[0] + rep.alphas[1]) + rep.alphas[1]) +
        rep.alphas[2] - 1.0;
    rep.kappa = kappa_estimate(t);
    rep.regular = rep.kappa > 0;
    return rep;
}

TripleCount triple_convolution_count(const TernaryInstance& t) {
    TripleCount tc;
    Eigen::ArrayXd c = convolve(t.a[0].values, t.a[1].values);
    for (int64_t k = 0; k < c.size(); ++k) {
        int64_t n3 = t.N - (2 + k);  // c[k] corresponds to n1 + n2 = k + 2
        if (n3 >= 1 && n3 <= t.Ni[2]) tc.weighted += c[k] * t.a[2].values[n3 - 1];
    }
    double unit = 1;
    for (int i = 0; i < 3; ++i)
        unit *= static_cast<double>(totient(t.W)) / static_cast<double>(t.W) *
                std::log(t.z[i]);
    tc.unweighted = std::llround(tc.weighted / unit);
    return tc;
}

int64_t direct_ternary_count(int64_t M, const PrimeTable& table) {
    if (M < 7) throw std::invalid_argument("direct_ternary_count: M >= 7 required");
    int64_t count = 0;
    std::vector<int64_t> ps;
    for (int64_t p = 2; p <= M; ++p)
        if (table.is_prime(p)) ps.push_back(p);
    for (int64_t p1 : ps) {
        if (p1 >= M) break;
        for (int64_t p2 : ps) {
            int64_t p3 = M - p1 - p2;
            if (p3 < 2) break;
            if (table.is_prime(p3)) ++count;
        }
    }
    return count;
}

int64_t direct_ternary_count(int64_t M) {
    PrimeTable table(M);
    return direct_ternary_count(M, table);
}

bool has_ternary_representation(int64_t M, const PrimeTable& table) {
    auto scan_p1 = [&](int64_t p1) {
        if (p1 < 2 || p1 > M - 4 || !table.is_prime(p1)) return false;
        for (int64_t p2 = 2; 2 * p2 <= M - p1; ++p2) {
            if (!table.is_prime(p2)) continue;
            if (table.is_prime(M - p1 - p2)) return true;
        }
        return false;
    };
    // Parity: when M - p1 is even the inner scan is a Goldbach-pair
    // search and succeeds almost immediately, so try those p1 first.
    bool odd = (M % 2 != 0);
    if (!odd && scan_p1(2)) return true;
    for (int64_t p1 = 3; p1 <= M - 4; p1 += 2)
        if (scan_p1(p1)) return true;
    if (odd && scan_p1(2)) return true;
    return false;
}

std::vector<int64_t> find_witness(const TernaryInstance& t) {
    for (int64_t n1 = 1; n1 <= t.Ni[0]; ++n1) {
        if (t.a[0].values[n1 - 1] == 0) continue;
        for (int64_t n2 = 1; n2 <= t.Ni[1]; ++n2) {
            if (t.a[1].values[n2 - 1] == 0) continue;
            int64_t n3 = t.N - n1 - n2;
            if (n3 >= 1 && n3 <= t.Ni[2] && t.a[2].values[n3 - 1] > 0)
                return {n1, n2, n3};
        }
    }
    return {};
}

std::string instance_json(const TernaryInstance& t, const HypothesisReport& h,
                          const TripleCount& tc, int64_t direct_count) {
    nlohmann::ordered_json j;
    j["M"] = t.M;
    j["w"] = t.w;
    j["W"] = t.W;
    j["b"] = t.b;
    j["N"] = t.N;
    j["alphas"] = h.alphas;
    j["mean_condition"] = h.mean_condition;
    j["majorization"] = h.majorization;
    j["eta"] = h.eta;
    j["lq_ratio"] = h.lq_ratio;
    j["kappa"] = h.kappa;
    j["triple_weighted"] = tc.weighted;
    j["triple_unweighted"] = tc.unweighted;
    j["direct_count"] = direct_count;
    return j.dump();
}

void run_experiment(const ExperimentConfig& cfg,
                    const std::function<void(const std::string&)>& emit) {
    for (int64_t M : cfg.Ms) {
        for (double w : cfg.ws) {
            try {
                TernaryInstance t = build_instance(M, w);
                HypothesisReport h = hypothesis_report(t, cfg.q);
                TripleCount tc = triple_convolution_count(t);
                int64_t direct = (M <= 200'000) ? direct_ternary_count(M) : -1;
                emit(instance_json(t, h, tc, direct));
                if (cfg.with_decomposition) {
                    SpectrumReport sp = spectrum(t.a[2], cfg.epsilon);
                    std::vector<double> thetas;
                    for (int64_t j : sp.representatives)
                        thetas.push_back(static_cast<double>(j) /
                                         static_cast<double>(sp.grid_size));
                    BohrSet B = bohr_set(thetas, cfg.epsilon, t.Ni[2]);
                    Decomposition d = smooth_decompose(t.a[2], B);
                    emit(decomposition_json(
                        d, decomposition_report(d, t.delta / 50)));
                }
            } catch (const std::exception& e) {
                nlohmann::ordered_json j;
                j["M"] = M;
                j["w"] = w;
                j["error"] = e.what();
                emit(j.dump());
            }
        }
    }
}

}  // namespace primelab
