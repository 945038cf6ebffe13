#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "logforge/bigreal.hpp"

namespace logforge {

struct SearchConfig {
    std::vector<BigInt> basis;       // the integers whose logs span the search
    int bits_b = 64;                 // coefficient bit budget
    double tol = 0.5;                // objective cap on |x . c|
    Rational scale = 1;              // bound scaling; negative: fixed d_s = -scale
    std::optional<std::vector<long>> bounds_override;
    long nmax = 2000;                // Monte Carlo sample count
    std::optional<uint64_t> seed;
    long prec_bits = 0;              // 0 -> 2 * bits_b
    int threads = 1;
    // brute force refuses lattices above 2^iteration_budget_log2 points
    int iteration_budget_log2 = 33;
    bool allow_large_n = false;      // lifts the n < 8 brute-force guard
    int calib_probes = 5;            // attempts per (k, d_s) cell during calibration

    long effective_prec() const { return prec_bits > 0 ? prec_bits : 2L * bits_b; }
};

struct FeasibleSolution {
    std::vector<long> x;   // sign-normalized: first nonzero exponent positive
    BigReal epsilon;       // |x . c|, exact at working precision
    double cost;           // binary splitting cost of the series
    int bits;              // coefficient bit size obtained
};

struct SolutionPool {
    std::vector<FeasibleSolution> solutions;

    bool empty() const { return solutions.empty(); }
    size_t size() const { return solutions.size(); }
};

struct SolutionMatrix {
    std::vector<std::vector<long>> rows;  // n x n, full rank
    std::vector<size_t> pool_indices;     // which pool entries were kept
};

struct TrapCalibration {
    long k = 0;    // power-of-ten exponent of the random trap
    long d_s = 0;  // relation-finder precision in decimal digits
};

// Diagnostics of a Monte Carlo run; purely informational.
struct McInfo {
    uint64_t seed_used = 0;
    TrapCalibration trap;
    size_t raw_candidates = 0;
    size_t distinct_candidates = 0;
    size_t feasible_candidates = 0;
};

// X_j = ceil(scale * bits_b * ln 2 / ln p_j)
std::vector<long> default_bounds(const std::vector<BigInt>& basis, int bits_b,
                                 const Rational& scale);

// Exhaustive scan of the bounded exponent lattice. Deterministic; the pool
// holds every sign-normalized x with 0 < |x . c| < tol that passes the bit
// feasibility test, sorted by epsilon (lexicographic tie-break).
SolutionPool brute_force(const SearchConfig& config);

// Randomized LLL sampling (trap calibration, 4 x 4 x nmax net, dedup, bit
// filter, epsilon sort). Empty pool is a valid outcome, not an error.
SolutionPool monte_carlo(const SearchConfig& config, McInfo* info = nullptr);

// Smallest (d_s, k) making the relation finder return something other than
// the trivial vector on a trapped query, probed a few times per cell.
TrapCalibration calibrate_trap(const std::vector<BigInt>& basis, long prec_bits,
                               const Rational& scale, int bits_b, long nmax_hint,
                               uint64_t seed, int probes = 5);

// Greedy scan in pool order keeping rows that raise the rank, until n rows.
SolutionMatrix select_full_rank(const SolutionPool& pool, size_t n);

// Shared feasibility predicate: nonzero, bit-feasible at bits_b; epsilon and
// cost computed against the supplied logs.
std::optional<FeasibleSolution> make_feasible(const std::vector<BigInt>& basis,
                                              const std::vector<BigReal>& logs,
                                              const std::vector<long>& x, int bits_b);

}  // namespace logforge
