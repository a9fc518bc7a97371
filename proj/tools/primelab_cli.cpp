// primelab: command-line front door. One subcommand per module; JSON or
// CSV reports on stdout or -o FILE. Exit codes: 0 success, 1 validation
// error, 2 property violation (a check asserted to hold came back false).
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "primelab/addcomb.hpp"
#include "primelab/arith.hpp"
#include "primelab/fourier.hpp"
#include "primelab/goldbach.hpp"
#include "primelab/selberg.hpp"
#include "primelab/transfer.hpp"

using namespace primelab;

namespace {

// resolves -o against PRIMELAB_OUT when the path is relative
void emit(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::string path = out;
    const char* dir = std::getenv("PRIMELAB_OUT");
    if (dir && !out.empty() && out.front() != '/')
        path = std::string(dir) + "/" + out;
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open output file: " + path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

Decomposition decompose_instance(const DensityFunction& a, double eps) {
    auto spec = spectrum(a, eps);
    std::vector<double> freqs;
    for (int64_t j : spec.representatives)
        freqs.push_back(static_cast<double>(j) / static_cast<double>(spec.grid_size));
    return smooth_decompose(a, bohr_set(freqs, eps, a.N));
}

IntegerSet random_set(std::mt19937_64& rng, int64_t N, double density, bool cyclic) {
    std::vector<int64_t> elems;
    std::bernoulli_distribution coin(density);
    for (int64_t x = cyclic ? 0 : 1; x < (cyclic ? N : N + 1); ++x)
        if (coin(rng)) elems.push_back(x);
    return cyclic ? IntegerSet::cyclic_set(N, elems) : IntegerSet::interval_set(N, elems);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"primelab: Selberg majorants, arc dissection, popular sums, "
                 "transference, and ternary Goldbach instances"};
    app.require_subcommand(1);

    std::string out;
    app.add_option("-o,--output", out, "output file (default: stdout)");

    // weights --z Z --w-cutoff w
    double z = 7;
    double wcut = 2;
    auto* sw = app.add_subcommand("weights", "exact Selberg sieve weights");
    sw->add_option("--z", z, "sieving parameter z > 1")->required();
    sw->add_option("--w-cutoff", wcut, "wheel cutoff w, modulus W = P(w)");

    // majorant --N --z --W --b
    SieveParams mp{100, 10, 2, 1};
    auto* sm = app.add_subcommand("majorant", "majorant table for a progression");
    sm->add_option("--N", mp.N)->required();
    sm->add_option("--z", mp.z)->required();
    sm->add_option("--W", mp.W);
    sm->add_option("--b", mp.b);

    // fourier --N --z --W --b [--oversample]
    SieveParams fp{1000, 10, 2, 1};
    int64_t oversample = 4;
    auto* sf = app.add_subcommand("fourier", "pseudorandomness report of a majorant");
    sf->add_option("--N", fp.N)->required();
    sf->add_option("--z", fp.z)->required();
    sf->add_option("--W", fp.W);
    sf->add_option("--b", fp.b);
    sf->add_option("--oversample", oversample);

    // arcs --N --Q --R
    int64_t aN = 100, aQ = 3, aR = 20;
    auto* sa = app.add_subcommand("arcs", "major/minor arc dissection as CSV");
    sa->add_option("--N", aN)->required();
    sa->add_option("--Q", aQ)->required();
    sa->add_option("--R", aR)->required();

    // popsum --check NAME --N --seed --trials --K --beta
    std::string check = "freiman";
    int64_t pN = 50, trials = 100;
    uint64_t seed = 1;
    double K = 2, beta = 0.01;
    auto* sp = app.add_subcommand("popsum", "randomized popular-sum bound checks");
    sp->add_option("--check", check, "one of gr|freiman|pop")
        ->check(CLI::IsMember({"gr", "freiman", "pop"}));
    sp->add_option("--N", pN, "universe size (group order for gr)");
    sp->add_option("--seed", seed);
    sp->add_option("--trials", trials);
    sp->add_option("--K", K, "popularity threshold for gr");
    sp->add_option("--beta", beta, "pop theorem beta < 1/6");

    // transfer --M --w --epsilon [--q]
    int64_t tM = 10'003;
    double tw = 2, teps = 0.1, tq = 2.5;
    auto* st = app.add_subcommand("transfer", "decomposition report for a goldbach a_3");
    st->add_option("--M", tM)->required();
    st->add_option("--w", tw);
    st->add_option("--epsilon", teps);
    st->add_option("--q", tq);

    // goldbach --M --w [--q]
    int64_t gM = 21;
    double gw = 2, gq = 2.5;
    auto* sg = app.add_subcommand("goldbach", "end-to-end ternary instance record");
    sg->add_option("--M", gM)->required();
    sg->add_option("--w", gw);
    sg->add_option("--q", gq);

    // sweep --M ... --w ... [--epsilon --q --with-decomposition]
    ExperimentConfig cfg;
    auto* ss = app.add_subcommand("sweep", "instance sweep, one JSON record per line");
    ss->add_option("--M", cfg.Ms, "target values (odd)")->required();
    ss->add_option("--w", cfg.ws, "wheel cutoffs")->required();
    ss->add_option("--epsilon", cfg.epsilon);
    ss->add_option("--q", cfg.q);
    ss->add_flag("--with-decomposition", cfg.with_decomposition);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sw) {
            if (!(z > 1)) throw std::invalid_argument("z must exceed 1");
            emit(out, weights_to_json(build_weights(z, primorial_i64(wcut))));
        } else if (*sm) {
            mp.validate();
            emit(out, majorant_to_json(build_majorant(mp)));
        } else if (*sf) {
            fp.validate();
            MajorantTable t = build_majorant(fp);
            DensityFunction nu(fp.N, "nu");
            nu.values = t.values();
            emit(out, pseudorandomness_json(fp, pseudorandomness_eta(nu)));
        } else if (*sa) {
            if (!(1 <= aQ && aQ <= aR && aR <= aN))
                throw std::invalid_argument("need 1 <= Q <= R <= N");
            auto arcs = arc_dissect(aN, aQ, aR);
            std::string csv = "r,classification\n";
            for (int64_t r = 0; r < aN; ++r) {
                const auto& c = arcs.classification[r];
                csv += std::to_string(r) + ",";
                csv += c.major ? "major(" + std::to_string(c.q) + "," +
                                     std::to_string(c.a) + ")"
                               : "minor";
                csv += "\n";
            }
            emit(out, csv);
        } else if (*sp) {
            if (check == "pop" && !(beta > 0 && beta < 1.0 / 6.0))
                throw std::invalid_argument("beta < 1/6 required");
            std::mt19937_64 rng(seed);
            std::string lines;
            bool violated = false;
            for (int64_t i = 0; i < trials; ++i) {
                BoundCheck c;
                if (check == "gr") {
                    auto A1 = random_set(rng, pN, 0.5, true);
                    auto A2 = random_set(rng, pN, 0.5, true);
                    c = green_ruzsa_check(pN, A1, A2, K);
                } else if (check == "freiman") {
                    auto A1 = random_set(rng, pN, 0.33, false);
                    auto A2 = random_set(rng, pN, 0.33, false);
                    if (A1.size() == 0 || A2.size() == 0) continue;
                    c = freiman_check(A1, A2);
                } else {
                    auto A1 = random_set(rng, pN, 0.45, false);
                    auto A2 = random_set(rng, pN, 0.45, false);
                    double kappa = static_cast<double>(regularity_count(A1, beta)) /
                                   static_cast<double>(pN * pN);
                    auto p = pop_theorem_check(A1, A2, beta, kappa);
                    c = BoundCheck{p.lhs, p.rhs, p.holds, p.hypotheses_met};
                }
                lines += bound_check_json(check, seed, c) + "\n";
                if (c.hypotheses_met && !c.holds) violated = true;
            }
            emit(out, lines);
            if (violated) return 2;
        } else if (*st) {
            auto t = build_instance(tM, tw);
            auto d = decompose_instance(t.a[2], teps);
            auto rep = decomposition_report(d, tq / 100.0);
            emit(out, decomposition_json(d, rep));
            if (!rep.dominance || rep.max_multiplier_error > 1e-9) return 2;
        } else if (*sg) {
            auto t = build_instance(gM, gw);
            auto h = hypothesis_report(t, gq);
            auto tc = triple_convolution_count(t);
            emit(out, instance_json(t, h, tc, direct_ternary_count(gM)));
            if (!h.majorization) return 2;
        } else if (*ss) {
            std::string lines;
            run_experiment(cfg, [&](const std::string& s) { lines += s + "\n"; });
            emit(out, lines);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
