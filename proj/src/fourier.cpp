#include "primelab/fourier.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>
#include <unsupported/Eigen/FFT>

namespace primelab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// fhat(j/G) for a buffer already laid out by residue mod G.
// The forward FFT uses e(-nj/G), so conjugate for the e(+) convention.
Eigen::VectorXcd conj_fft(std::vector<std::complex<double>>& buf) {
    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> out;
    fft.fwd(out, buf);
    Eigen::VectorXcd r(out.size());
    for (size_t i = 0; i < out.size(); ++i) r[i] = std::conj(out[i]);
    return r;
}

}  // namespace

Eigen::VectorXcd dft_grid(const Eigen::ArrayXd& seq, int64_t first, int64_t grid_size) {
    std::vector<std::complex<double>> buf(static_cast<size_t>(grid_size), 0.0);
    for (int64_t k = 0; k < seq.size(); ++k) {
        int64_t n = first + k;
        int64_t idx = ((n % grid_size) + grid_size) % grid_size;
        buf[idx] += seq[k];
    }
    return conj_fft(buf);
}

Eigen::VectorXcd dft_fullgrid(const DensityFunction& f) {
    return dft_grid(f.values, 1, f.N);
}

std::complex<double> fhat_at(const DensityFunction& f, double theta) {
    std::complex<double> s = 0;
    for (int64_t n = 1; n <= f.N; ++n) {
        double ph = kTwoPi * theta * static_cast<double>(n);
        s += f.values[n - 1] * std::complex<double>(std::cos(ph), std::sin(ph));
    }
    return s;
}

double lq_norm_grid(const Eigen::VectorXcd& fhat, double q) {
    double s = 0;
    for (int64_t j = 0; j < fhat.size(); ++j)
        s += std::pow(std::abs(fhat[j]), q);
    return std::pow(s / static_cast<double>(fhat.size()), 1.0 / q);
}

double lq_norm(const DensityFunction& f, double q, int64_t oversample) {
    if (q <= 0) throw std::invalid_argument("lq_norm: q must be positive");
    if (oversample < 2) throw std::invalid_argument("lq_norm: oversample must be >= 2");
    return lq_norm_grid(dft_grid(f.values, 1, oversample * f.N), q);
}

PseudorandomnessReport pseudorandomness_eta(const DensityFunction& nu) {
    Eigen::VectorXcd F = dft_fullgrid(nu);
    PseudorandomnessReport rep;
    double N = static_cast<double>(nu.N);
    rep.mean_gap = std::abs(F[0].real() / N - 1.0);
    rep.eta = rep.mean_gap;
    for (int64_t r = 1; r < nu.N; ++r)
        rep.eta = std::max(rep.eta, std::abs(F[r]) / N);
    return rep;
}

ArcDissection arc_dissect(int64_t N, int64_t Q, int64_t R) {
    if (!(1 <= Q && Q <= R && R <= N))
        throw std::invalid_argument("arc_dissect: need 1 <= Q <= R <= N");
    ArcDissection d{N, Q, R, std::vector<ArcClass>(static_cast<size_t>(N))};
    for (int64_t r = 0; r < N; ++r) {
        double theta = static_cast<double>(r) / static_cast<double>(N);
        for (int64_t q = 1; q <= Q; ++q) {
            // nearest fraction with this denominator; a in [0,q)
            int64_t a = std::llround(theta * static_cast<double>(q));
            if (std::gcd(a, q) != 1 && !(a == 0 && q == 1)) continue;
            // |r/N - a/q| <= 1/(qR)  <=>  |rq - aN| * R <= N
            if (std::abs(r * q - a * N) * R <= N) {
                d.classification[r] = {true, q, a % q};
                break;
            }
        }
    }
    return d;
}

MajorArcReport major_arc_compare(const MajorantTable& nu, int64_t q, int64_t a,
                                 int64_t x, double delta) {
    if (q < 1 || x < 1 || x > nu.params.N)
        throw std::invalid_argument("major_arc_compare: need q >= 1, 1 <= x <= N");
    if (std::gcd(((a % q) + q) % q, q) != 1 && q > 1)
        throw std::invalid_argument("major_arc_compare: a must be coprime to q");

    MajorArcReport rep;
    double dend = nu.den.convert_to<double>();
    for (int64_t n = 1; n <= x; ++n) {
        double s = nu.sum_num[static_cast<size_t>(n)].convert_to<double>() / dend;
        double ph = kTwoPi * static_cast<double>(a) * static_cast<double>(n) /
                    static_cast<double>(q);
        rep.lhs += nu.scalar * s * s *
                   std::complex<double>(std::cos(ph), std::sin(ph));
    }

    int64_t W = nu.params.W, b = nu.params.b;
    if (q == 1) {
        rep.arc_phase = 1.0;
    } else if (std::gcd(q, W) > 1) {
        rep.arc_phase = 0.0;
    } else {
        // q | [d1,d2] | Wn+b forces n = -b W^{-1} (mod q)
        int64_t n0 = (((-b % q) + q) % q) * mod_inverse(W, q) % q;
        double ph = kTwoPi * static_cast<double>(a) * static_cast<double>(n0) /
                    static_cast<double>(q);
        rep.arc_phase = std::complex<double>(std::cos(ph), std::sin(ph));
    }

    // T(q) = 0 when q has no squarefree multiple [d1,d2] in the support,
    // i.e. whenever q does not divide P
    double tq = (rep.arc_phase == std::complex<double>(0.0) ||
                 !nu.weights.divides_P(q))
                    ? 0.0
                    : T_q(nu.weights, q).convert_to<double>();
    rep.prediction = nu.scalar * rep.arc_phase * static_cast<double>(x) * tq;
    rep.error_term = std::abs(rep.lhs - rep.prediction);
    rep.bound = nu.scalar * static_cast<double>(q) *
                std::pow(static_cast<double>(nu.params.N), 1.0 - delta);
    return rep;
}

MinorArcReport minor_arc_lemma_check(double alpha, int64_t q, int64_t a,
                                     int64_t M, int64_t x,
                                     const std::vector<int64_t>& residues) {
    if (q < 1 || std::gcd(((a % q) + q) % q, q) > 1)
        throw std::invalid_argument("minor_arc_lemma_check: need gcd(a,q)=1");
    if (std::abs(alpha - static_cast<double>(a) / static_cast<double>(q)) >
        1.0 / (static_cast<double>(q) * q) + 1e-15)
        throw std::invalid_argument(
            "minor_arc_lemma_check: |alpha - a/q| <= 1/q^2 violated");
    if (static_cast<int64_t>(residues.size()) < M)
        throw std::invalid_argument("minor_arc_lemma_check: residues undersized");

    MinorArcReport rep;
    for (int64_t m = 1; m <= M; ++m) {
        int64_t c = ((residues[static_cast<size_t>(m - 1)] % m) + m) % m;
        std::complex<double> s = 0;
        int64_t start = (c == 0) ? m : c;
        for (int64_t n = start; n <= x; n += m) {
            double ph = kTwoPi * alpha * static_cast<double>(n);
            s += std::complex<double>(std::cos(ph), std::sin(ph));
        }
        rep.lhs += std::abs(s);
    }
    rep.rhs = (static_cast<double>(M) +
               static_cast<double>(x) / static_cast<double>(q) +
               static_cast<double>(q)) *
              std::log(2.0 * static_cast<double>(q) * static_cast<double>(x));
    return rep;
}

std::string spectrum_csv(const DensityFunction& f, const ArcDissection& arcs) {
    if (arcs.N != f.N) throw std::invalid_argument("spectrum_csv: N mismatch");
    Eigen::VectorXcd F = dft_fullgrid(f);
    std::ostringstream out;
    out << "r,re,im,magnitude,classification\n";
    out.precision(15);
    for (int64_t r = 0; r < f.N; ++r) {
        const ArcClass& c = arcs.classification[static_cast<size_t>(r)];
        out << r << ',' << F[r].real() << ',' << F[r].imag() << ','
            << std::abs(F[r]) << ',';
        if (c.major)
            out << "major(" << c.q << ";" << c.a << ")";
        else
            out << "minor";
        out << '\n';
    }
    return out.str();
}

std::string pseudorandomness_json(const SieveParams& p,
                                  const PseudorandomnessReport& r) {
    nlohmann::ordered_json j;
    j["N"] = p.N;
    j["z"] = p.z;
    j["W"] = p.W;
    j["b"] = p.b;
    j["eta"] = r.eta;
    j["mean_gap"] = r.mean_gap;
    return j.dump();
}

Eigen::ArrayXd convolve(const Eigen::ArrayXd& a, const Eigen::ArrayXd& b) {
    int64_t na = a.size(), nb = b.size();
    if (na == 0 || nb == 0) return Eigen::ArrayXd();
    int64_t n = na + nb - 1;
    if (static_cast<double>(na) * static_cast<double>(nb) <= 1 << 18) {
        Eigen::ArrayXd out = Eigen::ArrayXd::Zero(n);
        for (int64_t i = 0; i < na; ++i)
            for (int64_t j = 0; j < nb; ++j) out[i + j] += a[i] * b[j];
        return out;
    }
    int64_t sz = 1;
    while (sz < n) sz <<= 1;
    std::vector<std::complex<double>> fa(static_cast<size_t>(sz), 0.0),
        fb(static_cast<size_t>(sz), 0.0);
    for (int64_t i = 0; i < na; ++i) fa[i] = a[i];
    for (int64_t i = 0; i < nb; ++i) fb[i] = b[i];
    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> Fa, Fb;
    fft.fwd(Fa, fa);
    fft.fwd(Fb, fb);
    for (int64_t i = 0; i < sz; ++i) Fa[i] *= Fb[i];
    std::vector<std::complex<double>> res;
    fft.inv(res, Fa);
    Eigen::ArrayXd out(n);
    for (int64_t i = 0; i < n; ++i) out[i] = res[i].real();
    return out;
}

}  // namespace primelab
