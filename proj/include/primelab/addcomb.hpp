#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "primelab/arith.hpp"

namespace primelab {

// A subset of either the interval [1,N] or the cyclic group Z/mod.
struct IntegerSet {
    enum class Universe { Interval, Cyclic };
    Universe universe = Universe::Interval;
    int64_t bound = 1;  // N for Interval, modulus for Cyclic
    std::vector<int64_t> elements;  // sorted, unique

    static IntegerSet interval_set(int64_t N, std::vector<int64_t> elems);
    static IntegerSet cyclic_set(int64_t mod, std::vector<int64_t> elems);
    int64_t size() const { return static_cast<int64_t>(elements.size()); }
};

using RepCounts = std::map<int64_t, int64_t>;

// r(s) = #{(a1,a2) in A1 x A2 : a1 + a2 = s}; addition in Z or Z/mod.
// Convolution path above the size threshold, direct counting below.
RepCounts rep_counts(const IntegerSet& A1, const IntegerSet& A2);
RepCounts rep_counts_direct(const IntegerSet& A1, const IntegerSet& A2);

struct PopularSumReport {
    double K = 1;
    RepCounts counts;
    std::vector<int64_t> D_K;  // { s : r(s) >= K }
};

PopularSumReport popular_sums(const IntegerSet& A1, const IntegerSet& A2, double K);

// #{(u,v) in A x A : u <= beta N, v >= (1-beta) N, (v-u, P(1/beta)) = 1}.
int64_t regularity_count(const IntegerSet& A, double beta);

struct BoundCheck {
    double lhs = 0;
    double rhs = 0;
    bool holds = false;
    bool hypotheses_met = true;
};

// Green-Ruzsa popular-sum bound in Z/G_order; skipped (hypotheses_met
// false) when min(|A1|,|A2|) < sqrt(K |G|).
BoundCheck green_ruzsa_check(int64_t G_order, const IntegerSet& A1,
                             const IntegerSet& A2, double K);

// Diameter: terms-minus-one of the shortest AP covering the set, i.e.
// (max - min) / gcd of differences; 1 for a singleton. Fixed so the
// 3k-3 bound meets intervals with equality.
int64_t ap_diameter(const IntegerSet& A);

BoundCheck freiman_check(const IntegerSet& A1, const IntegerSet& A2);

struct PopTheoremCheck {
    double gamma = 0;
    double lhs = 0;
    double rhs = 0;
    bool holds = false;
    bool hypotheses_met = false;
};

// |D_{gamma N}(A1,A2)| >= min(N,|A1|+|A2|) + |A2| - 9 beta N under the
// regularity hypothesis; gamma sits a hair below the theorem threshold.
PopTheoremCheck pop_theorem_check(const IntegerSet& A1, const IntegerSet& A2,
                                  double beta, double kappa);

std::string bound_check_json(const std::string& check, uint64_t seed,
                             const BoundCheck& c);

}  // namespace primelab
