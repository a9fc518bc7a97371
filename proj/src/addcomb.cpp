#include "primelab/addcomb.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "primelab/fourier.hpp"

namespace primelab {

namespace {

constexpr int64_t kFftThreshold = 4096;

void check_same_universe(const IntegerSet& A1, const IntegerSet& A2) {
    if (A1.universe != A2.universe ||
        (A1.universe == IntegerSet::Universe::Cyclic && A1.bound != A2.bound))
        throw std::invalid_argument("rep_counts: universe mismatch");
}

}  // namespace

IntegerSet IntegerSet::interval_set(int64_t N, std::vector<int64_t> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    for (int64_t x : elems)
        if (x < 1 || x > N)
            throw std::invalid_argument("IntegerSet: element outside [1,N]");
    return IntegerSet{Universe::Interval, N, std::move(elems)};
}

IntegerSet IntegerSet::cyclic_set(int64_t mod, std::vector<int64_t> elems) {
    if (mod < 1) throw std::invalid_argument("IntegerSet: modulus must be >= 1");
    for (auto& x : elems) x = ((x % mod) + mod) % mod;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return IntegerSet{Universe::Cyclic, mod, std::move(elems)};
}

RepCounts rep_counts_direct(const IntegerSet& A1, const IntegerSet& A2) {
    check_same_universe(A1, A2);
    RepCounts r;
    bool cyc = A1.universe == IntegerSet::Universe::Cyclic;
    for (int64_t a : A1.elements)
        for (int64_t b : A2.elements)
            ++r[cyc ? (a + b) % A1.bound : a + b];
    return r;
}

RepCounts rep_counts(const IntegerSet& A1, const IntegerSet& A2) {
    check_same_universe(A1, A2);
    if (A1.universe == IntegerSet::Universe::Cyclic || A1.bound <= kFftThreshold ||
        A2.bound <= kFftThreshold)
        return rep_counts_direct(A1, A2);

    // interval case: linear convolution of 0/1 indicators, offset 1 each
    Eigen::ArrayXd f1 = Eigen::ArrayXd::Zero(A1.bound);
    Eigen::ArrayXd f2 = Eigen::ArrayXd::Zero(A2.bound);
    for (int64_t x : A1.elements) f1[x - 1] = 1.0;
    for (int64_t x : A2.elements) f2[x - 1] = 1.0;
    Eigen::ArrayXd c = convolve(f1, f2);
    RepCounts r;
    for (int64_t i = 0; i < c.size(); ++i) {
        int64_t cnt = std::llround(c[i]);
        if (std::abs(c[i] - static_cast<double>(cnt)) >= 0.5)
            throw std::runtime_error("rep_counts: convolution failed to round");
        if (cnt > 0) r[i + 2] = cnt;  // index i corresponds to s = i + 2
    }
    return r;
}

PopularSumReport popular_sums(const IntegerSet& A1, const IntegerSet& A2, double K) {
    if (!(K > 0)) throw std::invalid_argument("popular_sums: K must be > 0");
    PopularSumReport rep;
    rep.K = K;
    rep.counts = rep_counts(A1, A2);
    for (const auto& [s, c] : rep.counts)
        if (static_cast<double>(c) >= K) rep.D_K.push_back(s);
    return rep;
}

int64_t regularity_count(const IntegerSet& A, double beta) {
    if (A.universe != IntegerSet::Universe::Interval)
        throw std::invalid_argument("regularity_count: interval sets only");
    if (!(beta > 0 && beta < 1))
        throw std::invalid_argument("regularity_count: beta in (0,1) required");
    double N = static_cast<double>(A.bound);
    double y = 1.0 / beta;
    int64_t count = 0;
    for (int64_t u : A.elements) {
        if (static_cast<double>(u) > beta * N) break;  // elements sorted
        for (auto it = A.elements.rbegin(); it != A.elements.rend(); ++it) {
            int64_t v = *it;
            if (static_cast<double>(v) < (1 - beta) * N) break;
            if (coprime_to_primorial(v - u, y)) ++count;
        }
    }
    return count;
}

BoundCheck green_ruzsa_check(int64_t G_order, const IntegerSet& A1,
                             const IntegerSet& A2, double K) {
    if (A1.universe != IntegerSet::Universe::Cyclic || A1.bound != G_order ||
        A2.universe != IntegerSet::Universe::Cyclic || A2.bound != G_order)
        throw std::invalid_argument("green_ruzsa_check: cyclic sets mod G_order required");
    BoundCheck c;
    double root = std::sqrt(K * static_cast<double>(G_order));
    if (static_cast<double>(std::min(A1.size(), A2.size())) < root) {
        c.hypotheses_met = false;
        return c;
    }
    // largest proper subgroup of Z/d has order d / lpf(d); none for d = 1
    int64_t D = 0;
    if (G_order > 1) {
        int64_t lpf = G_order;
        for (int64_t p = 2; p * p <= G_order; ++p)
            if (G_order % p == 0) { lpf = p; break; }
        D = G_order / lpf;
    }
    c.lhs = static_cast<double>(popular_sums(A1, A2, K).D_K.size());
    c.rhs = std::min(static_cast<double>(G_order),
                     static_cast<double>(A1.size() + A2.size() - D)) -
            3.0 * root;
    c.holds = c.lhs >= c.rhs;
    return c;
}

int64_t ap_diameter(const IntegerSet& A) {
    if (A.elements.empty())
        throw std::invalid_argument("ap_diameter: empty set");
    if (A.size() == 1) return 1;
    int64_t g = 0, lo = A.elements.front();
    for (int64_t x : A.elements) g = std::gcd(g, x - lo);
    return (A.elements.back() - lo) / g;
}

BoundCheck freiman_check(const IntegerSet& A1, const IntegerSet& A2) {
    if (A1.elements.empty() || A2.elements.empty())
        throw std::invalid_argument("freiman_check: nonempty sets required");
    const IntegerSet* S1 = &A1;
    const IntegerSet* S2 = &A2;
    if (ap_diameter(*S1) > ap_diameter(*S2)) std::swap(S1, S2);
    std::set<int64_t> sums;
    for (int64_t a : S1->elements)
        for (int64_t b : S2->elements) sums.insert(a + b);
    BoundCheck c;
    c.lhs = static_cast<double>(sums.size());
    c.rhs = static_cast<double>(
        std::min(S1->size() + ap_diameter(*S2), 2 * S1->size() + S2->size() - 3));
    c.holds = c.lhs >= c.rhs;
    return c;
}

PopTheoremCheck pop_theorem_check(const IntegerSet& A1, const IntegerSet& A2,
                                  double beta, double kappa) {
    if (!(beta > 0 && beta < 1.0 / 6.0))
        throw std::invalid_argument("pop_theorem_check: beta < 1/6 required");
    if (A1.universe != IntegerSet::Universe::Interval ||
        A2.universe != IntegerSet::Universe::Interval || A1.bound != A2.bound)
        throw std::invalid_argument("pop_theorem_check: interval sets on common [1,N]");
    double N = static_cast<double>(A1.bound);
    PopTheoremCheck c;
    c.gamma = std::min(kappa * kappa / (16 * beta * beta), beta * beta / 16) *
              (1.0 - 1e-9);  // strictly below the theorem threshold
    bool sizes_ok = static_cast<double>(A1.size()) >= 4 * beta * N &&
                    static_cast<double>(A2.size()) >= 4 * beta * N;
    bool regular =
        static_cast<double>(regularity_count(A1, beta)) >= kappa * N * N;
    // the theorem needs kappa > 0: gamma, and with it the D_{gamma N}
    // threshold, degenerates otherwise
    c.hypotheses_met = sizes_ok && regular && kappa > 0;
    if (!c.hypotheses_met) return c;
    c.lhs = static_cast<double>(popular_sums(A1, A2, c.gamma * N).D_K.size());
    c.rhs = std::min(N, static_cast<double>(A1.size() + A2.size())) +
            static_cast<double>(A2.size()) - 9 * beta * N;
    c.holds = c.lhs >= c.rhs;
    return c;
}

std::string bound_check_json(const std::string& check, uint64_t seed,
                             const BoundCheck& c) {
    nlohmann::ordered_json j;
    j["check"] = check;
    j["instance_seed"] = seed;
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["holds"] = c.holds;
    j["hypotheses_met"] = c.hypotheses_met;
    return j.dump();
}

}  // namespace primelab
