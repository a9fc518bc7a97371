#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "primelab/transfer.hpp"

using namespace primelab;

namespace {

DensityFunction random_density(std::mt19937_64& rng, int64_t N, double density) {
    DensityFunction a(N);
    std::bernoulli_distribution coin(density);
    for (auto& x : a.values)
        if (coin(rng)) x = std::uniform_real_distribution<>(0.5, 2.0)(rng);
    return a;
}

Decomposition random_decomposition(std::mt19937_64& rng, int64_t N, double eps) {
    auto a = random_density(rng, N, 0.4);
    auto spec = spectrum(a, eps);
    std::vector<double> freqs;
    for (int64_t j : spec.representatives)
        freqs.push_back(static_cast<double>(j) / static_cast<double>(spec.grid_size));
    return smooth_decompose(a, bohr_set(freqs, eps, N));
}

}  // namespace

TEST_CASE("spectrum worked examples") {
    DensityFunction flat(100);
    flat.values.setConstant(0.8);
    auto s = spectrum(flat, 0.5);
    CHECK(s.representatives == std::vector<int64_t>{0});

    DensityFunction even(100);
    for (int64_t n = 2; n <= 100; n += 2) even.values[n - 1] = 1.0;
    auto s2 = spectrum(even, 0.3, 4);
    REQUIRE(s2.representatives.size() == 2);
    CHECK(s2.representatives[0] == 0);
    CHECK(s2.representatives[1] == s2.grid_size / 2);  // theta = 1/2

    CHECK(spectrum(flat, 0.9).representatives.empty());
}

TEST_CASE("bohr set worked examples") {
    auto b0 = bohr_set({0.0}, 0.1, 100);
    CHECK(b0.elements == std::vector<int64_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    CHECK(b0.density() == doctest::Approx(0.1));

    auto b1 = bohr_set({0.5}, 0.1, 100);
    CHECK(b1.elements == std::vector<int64_t>{2, 4, 6, 8, 10});

    auto b2 = bohr_set({0.5, 1.0 / 3.0}, 0.1, 600);
    std::vector<int64_t> sixes;
    for (int64_t b = 6; b <= 60; b += 6) sixes.push_back(b);
    CHECK(b2.elements == sixes);

    // empty frequency set: whole range [1, eps N]
    CHECK(bohr_set({}, 0.05, 100).elements == std::vector<int64_t>{1, 2, 3, 4, 5});
}

TEST_CASE("singleton Bohr set decomposes trivially") {
    std::mt19937_64 rng(17);
    auto a = random_density(rng, 64, 0.5);
    BohrSet b;
    b.epsilon = 0.1;
    b.N = 64;
    b.elements = {3};
    auto d = smooth_decompose(a, b);
    for (int64_t n = 1; n <= 64; ++n) {
        CHECK(d.a_struct[n - d.lo] == doctest::Approx(a.values[n - 1]).epsilon(1e-12));
        CHECK(std::abs(d.a_unif[n - d.lo]) < 1e-12);
    }
}

TEST_CASE("constant input stays constant away from the boundary") {
    DensityFunction a(100);
    a.values.setConstant(0.7);
    auto b = bohr_set({0.0}, 0.1, 100);  // B = [1,10]
    auto d = smooth_decompose(a, b);
    for (int64_t n = 10; n <= 91; ++n)
        CHECK(d.a_struct[n - d.lo] == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("empty Bohr set is rejected") {
    DensityFunction a(10);
    a.values.setOnes();
    BohrSet b;
    b.N = 10;
    CHECK_THROWS_AS(smooth_decompose(a, b), std::invalid_argument);
}

TEST_CASE("decomposition identities on random instances") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        int64_t N = 200 + static_cast<int64_t>(rng() % 200);
        auto d = random_decomposition(rng, N, 0.15);

        // a = a' + a'' on [1,N] and beyond
        for (int64_t k = 0; k < d.window(); ++k) {
            int64_t n = d.lo + k;
            double an = (n >= 1 && n <= N) ? d.a.values[n - 1] : 0.0;
            CHECK(d.a_struct[k] + d.a_unif[k] == doctest::Approx(an).epsilon(1e-12));
        }

        auto rep = decomposition_report(d, 0.1);
        CHECK(rep.max_multiplier_error <= 1e-9);  // scaled by N inside
        CHECK(rep.dominance);
        CHECK(rep.mean_shift < 1.0);  // recorded, sanity only

        // mean preservation over Z at 1e-12 relative
        double sum_a = d.a.values.sum();
        double sum_struct = d.a_struct.sum();
        CHECK(std::abs(sum_struct - sum_a) <= 1e-12 * std::max(1.0, sum_a));
    }
}

TEST_CASE("support containment of a'") {
    std::mt19937_64 rng(31);
    auto a = random_density(rng, 300, 0.3);
    auto b = bohr_set({0.25}, 0.1, 300);
    auto d = smooth_decompose(a, b);
    int64_t spread = b.elements.back() - b.elements.front();
    for (int64_t k = 0; k < d.window(); ++k) {
        int64_t n = d.lo + k;
        if (n < 1 - spread || n > 300 + spread) CHECK(std::abs(d.a_struct[k]) < 1e-12);
    }
    CHECK(d.lo >= 1 - static_cast<int64_t>(0.1 * 300) - 1);
    CHECK(d.hi <= 300 + static_cast<int64_t>(0.1 * 300) + 1);
}

TEST_CASE("flat majorant example: ahat'' vanishes on the full-period grid") {
    DensityFunction a(128);
    a.values.setOnes();
    auto spec = spectrum(a, 0.2);
    std::vector<double> freqs;
    for (int64_t j : spec.representatives)
        freqs.push_back(static_cast<double>(j) / static_cast<double>(spec.grid_size));
    auto d = smooth_decompose(a, bohr_set(freqs, 0.2, 128));
    auto rep = decomposition_report(d, 0.1);
    CHECK(rep.max_struct <= 1.0 + 1e-9);
    // ahat(r/N)=0 for r!=0 and the multiplier is 1 at theta=0
    auto unif_hat = dft_grid(d.a_unif, d.lo, 128);
    for (int64_t r = 0; r < 128; ++r) CHECK(std::abs(unif_hat[r]) <= 1e-9 * 128);
}

TEST_CASE("holder gap: vanishing uniform parts give zero gap") {
    std::mt19937_64 rng(41);
    auto a1 = random_density(rng, 100, 0.5);
    auto a2 = random_density(rng, 100, 0.5);
    auto a3 = random_density(rng, 100, 0.5);
    BohrSet b;
    b.epsilon = 0.1;
    b.N = 100;
    b.elements = {5};  // singleton: a'' = 0
    auto d1 = smooth_decompose(a1, b);
    auto d2 = smooth_decompose(a2, b);
    auto d3 = smooth_decompose(a3, b);
    auto g = holder_gap(d1, d2, d3, 2.5, 100);
    CHECK(g.true_gap <= 1e-9 * 100 * 100);
}

TEST_CASE("holder gap contract on random instances") {
    std::mt19937_64 rng(47);
    for (double q : {2.2, 2.5, 2.8}) {
        auto d1 = random_decomposition(rng, 256, 0.2);
        auto d2 = random_decomposition(rng, 256, 0.2);
        auto d3 = random_decomposition(rng, 256, 0.2);
        auto g = holder_gap(d1, d2, d3, q, 256);
        CHECK(g.true_gap <= 7.0 * g.bound_product + 1e-9);
    }
}

TEST_CASE("report serialization") {
    std::mt19937_64 rng(53);
    auto d = random_decomposition(rng, 100, 0.2);
    auto rep = decomposition_report(d, 0.1);
    auto js = decomposition_json(d, rep);
    CHECK(js.find("\"dominance\":true") != std::string::npos);
    auto csv = decomposition_csv(d);
    CHECK(csv.find("n,a,a_struct,a_unif") != std::string::npos);
}
