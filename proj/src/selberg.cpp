#include "primelab/selberg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace primelab {

namespace {

Int lcm_int(const Int& a, const Int& b) { return a / gcd(a, b) * b; }

}  // namespace

void SieveParams::validate() const {
    if (N < 1) throw std::invalid_argument("SieveParams: N must be >= 1");
    if (!(z > 1)) throw std::invalid_argument("SieveParams: z must be > 1");
    if (W < 1 || !is_squarefree(W))
        throw std::invalid_argument("SieveParams: W must be squarefree >= 1");
    if (b < 1 || b > W || (W > 1 && std::gcd(b, W) > 1))
        throw std::invalid_argument("SieveParams: b must be a reduced residue in [1,W]");
}

bool SieveWeights::divides_P(int64_t q) const {
    if (q < 1) return false;
    if (q == 1) return true;
    if (!is_squarefree(q)) return false;
    int64_t m = q;
    for (int64_t p : primes_)
        while (m % p == 0) m /= p;
    return m == 1;
}

SieveWeights build_weights(double z, int64_t W, int64_t support_budget) {
    if (!(z > 1)) throw std::invalid_argument("build_weights: z must be > 1");
    if (W < 1 || !is_squarefree(W))
        throw std::invalid_argument("build_weights: W must be squarefree >= 1");

    SieveWeights w;
    w.params = SieveParams{1, z, W, 1};

    int64_t zceil = static_cast<int64_t>(std::ceil(z));
    PrimeTable table(std::max<int64_t>(zceil, 2));
    for (int64_t p : table.primes())
        if (p < z && W % p != 0) w.primes_.push_back(p);

    // depth-first over sieve primes, pruning products >= z
    std::vector<int64_t> support;
    auto rec = [&](auto&& self, size_t i, int64_t d) -> void {
        support.push_back(d);
        if (static_cast<int64_t>(support.size()) > support_budget)
            throw std::runtime_error("build_weights: support budget exceeded");
        for (size_t j = i; j < w.primes_.size(); ++j) {
            if (static_cast<double>(d) * w.primes_[j] < z)
                self(self, j + 1, d * w.primes_[j]);
            else
                break;  // primes_ is increasing
        }
    };
    rec(rec, 0, 1);
    std::sort(support.begin(), support.end());

    for (int64_t d : support) w.J += Rat(1, totient(d));

    for (int64_t d : support) {
        Rat inner = 0;
        for (int64_t e : support)
            if (static_cast<double>(e) * d < z && std::gcd(e, d) == 1)
                inner += Rat(1, totient(e));
        w.support[d] = Rat(mobius(d) * d, totient(d)) * inner / w.J;
    }
    return w;
}

std::map<int64_t, Rat> y_from_weights(const SieveWeights& w) {
    std::map<int64_t, Rat> y;
    for (const auto& [d, _] : w.support) {
        Rat s = 0;
        for (const auto& [m, rho] : w.support)
            if (m % d == 0) s += rho / m;
        y[d] = Rat(mobius(d)) * totient(d) * s;
    }
    return y;
}

Rat J_qr(const SieveWeights& w, int64_t q, int64_t r) {
    if (!w.divides_P(q) || !w.divides_P(r))
        throw std::invalid_argument("J_qr: q and r must divide P");
    // terms with rd outside the support vanish, so it suffices to walk
    // support multiples of r
    Rat s = 0;
    for (const auto& [m, rho] : w.support) {
        if (m % r != 0) continue;
        int64_t d = m / r;
        if (std::gcd(d, q) == 1) s += rho / d;
    }
    return s;
}

Rat T_q(const SieveWeights& w, int64_t q) {
    if (!w.divides_P(q)) throw std::invalid_argument("T_q: q must divide P");
    Rat s = 0;
    for (const auto& [d1, r1] : w.support) {
        for (const auto& [d2, r2] : w.support) {
            int64_t l = d1 / std::gcd(d1, d2) * d2;
            if (l % q == 0) s += r1 * r2 / l;
        }
    }
    return s;
}

MajorantTable build_majorant(const SieveParams& p) {
    p.validate();
    MajorantTable t;
    t.params = p;
    t.weights = build_weights(p.z, p.W);
    t.scalar = static_cast<double>(totient(p.W)) / p.W * std::log(p.z);

    t.den = 1;
    for (const auto& [d, rho] : t.weights.support)
        t.den = lcm_int(t.den, Int(denominator(rho)));

    t.sum_num.assign(static_cast<size_t>(p.N) + 1, Int(0));
    for (const auto& [d, rho] : t.weights.support) {
        Int nd = Int(numerator(rho)) * (t.den / Int(denominator(rho)));
        if (d == 1) {
            for (int64_t n = 1; n <= p.N; ++n) t.sum_num[n] += nd;
            continue;
        }
        // d | Wn+b  <=>  n = -b W^{-1} (mod d); gcd(W,d) = 1 since d | P
        int64_t n0 = ((-p.b % d) + d) % d;
        n0 = (n0 * mod_inverse(p.W, d)) % d;
        int64_t start = (n0 == 0) ? d : n0;
        for (int64_t n = start; n <= p.N; n += d) t.sum_num[n] += nd;
    }
    return t;
}

Rat MajorantTable::core(int64_t n) const {
    if (n < 1 || n > params.N) throw std::out_of_range("MajorantTable::core");
    Rat s(sum_num[static_cast<size_t>(n)], den);
    return s * s;
}

double MajorantTable::value(int64_t n) const {
    if (n < 1 || n > params.N) throw std::out_of_range("MajorantTable::value");
    double s = sum_num[static_cast<size_t>(n)].convert_to<double>() /
               den.convert_to<double>();
    return scalar * s * s;
}

Eigen::ArrayXd MajorantTable::values() const {
    Eigen::ArrayXd v(params.N);
    double d = den.convert_to<double>();
    for (int64_t n = 1; n <= params.N; ++n) {
        double s = sum_num[static_cast<size_t>(n)].convert_to<double>() / d;
        v[n - 1] = scalar * s * s;
    }
    return v;
}

Rat phi_harmonic_sum(double z, int64_t m) {
    if (m < 1 || !is_squarefree(m))
        throw std::invalid_argument("phi_harmonic_sum: m must be squarefree >= 1");
    Rat s = 0;
    for (int64_t d = 1; d < z; ++d)
        if (is_squarefree(d) && std::gcd(d, m) == 1) s += Rat(1, totient(d));
    return s;
}

std::string weights_to_json(const SieveWeights& w) {
    nlohmann::ordered_json j;
    j["params"] = {{"N", w.params.N}, {"z", w.params.z},
                   {"W", w.params.W}, {"b", w.params.b}};
    j["J"] = rat_str(w.J);
    auto supp = nlohmann::ordered_json::array();
    for (const auto& [d, rho] : w.support)
        supp.push_back({d, rat_str(rho)});
    j["support"] = supp;
    return j.dump();
}

std::string majorant_to_json(const MajorantTable& t) {
    nlohmann::ordered_json j;
    j["params"] = {{"N", t.params.N}, {"z", t.params.z},
                   {"W", t.params.W}, {"b", t.params.b}};
    j["J"] = rat_str(t.weights.J);
    j["scalar"] = t.scalar;
    auto core = nlohmann::ordered_json::array();
    for (int64_t n = 1; n <= t.params.N; ++n)
        core.push_back(rat_str(t.core(n)));
    j["core"] = core;
    return j.dump();
}

}  // namespace primelab
