#include "logforge/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <future>
#include <map>
#include <set>
#include <stdexcept>

#include "logforge/numerics.hpp"
#include "logforge/prng.hpp"
#include "logforge/relation.hpp"
#include "logforge/series.hpp"

namespace logforge {

namespace {

void validate_basis(const std::vector<BigInt>& basis) {
    if (basis.empty()) throw std::invalid_argument("search: empty basis");
    for (const BigInt& p : basis)
        if (p <= 1) throw std::domain_error("search: basis elements must be > 1");
}

void sign_normalize(std::vector<long>& x) {
    for (long v : x) {
        if (v > 0) return;
        if (v < 0) break;
    }
    for (long& v : x) v = -v;
}

bool all_zero(const std::vector<long>& x) {
    for (long v : x)
        if (v != 0) return false;
    return true;
}

void sort_pool(std::vector<FeasibleSolution>& sols) {
    std::sort(sols.begin(), sols.end(),
              [](const FeasibleSolution& a, const FeasibleSolution& b) {
                  int c = a.epsilon.cmp(b.epsilon);
                  if (c != 0) return c < 0;
                  return a.x < b.x;
              });
}

uint64_t wallclock_seed() {
    return static_cast<uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::system_clock::now().time_since_epoch())
            .count());
}

// starting d_s ahead of calibration: ceil(log10(bits * scale) * (n + 1)) for
// positive scale, -scale taken verbatim otherwise
long initial_ds(int bits_b, const Rational& scale, size_t n) {
    if (sgn(scale) < 0) {
        Rational m = -scale;
        BigInt q = m.get_num() / m.get_den();
        if (Rational(q) != m) q += 1;
        long v = q.get_si();
        return v > 0 ? v : 1;
    }
    double s = Rational(scale * bits_b).get_d();
    long v = s > 1.0 ? long(std::ceil(std::log10(s) * double(n + 1))) : 1;
    return v > 0 ? v : 1;
}

long ceil_rational(const Rational& q) {
    BigInt z = q.get_num() / q.get_den();
    if (Rational(z) != q && sgn(q) > 0) z += 1;
    return z.get_si();
}

struct BruteCtx {
    const SearchConfig& config;
    const std::vector<long>& bounds;
    const std::vector<BigReal>& logs;
    const BigReal& tol;
    double tol_d;
    double c_last;
};

// Depth-first scan of the canonical half-lattice (first nonzero exponent
// positive). The innermost exponent is not scanned: the window of values
// keeping |partial + x*c_n| < tol is computed directly, then each candidate
// in it is verified with exact arithmetic.
void scan_lattice(const BruteCtx& ctx, std::vector<long>& x, size_t depth, bool leading,
                  const BigReal& partial, std::vector<FeasibleSolution>& out) {
    size_t n = ctx.bounds.size();
    if (depth == n - 1) {
        double p = partial.to_double();
        long lo = long(std::floor((-ctx.tol_d - p) / ctx.c_last)) - 1;
        long hi = long(std::ceil((ctx.tol_d - p) / ctx.c_last)) + 1;
        lo = std::max(lo, leading ? 1L : -ctx.bounds[depth]);
        hi = std::min(hi, ctx.bounds[depth]);
        for (long v = lo; v <= hi; ++v) {
            x[depth] = v;
            if (auto fs = make_feasible(ctx.config.basis, ctx.logs, x, ctx.config.bits_b)) {
                if (fs->epsilon.sign() > 0 && fs->epsilon < ctx.tol)
                    out.push_back(std::move(*fs));
            }
        }
        x[depth] = 0;
        return;
    }
    long lo = leading ? 0 : -ctx.bounds[depth];
    for (long v = lo; v <= ctx.bounds[depth]; ++v) {
        x[depth] = v;
        scan_lattice(ctx, x, depth + 1, leading && v == 0,
                     partial + ctx.logs[depth].mul_int(BigInt(v)), out);
    }
    x[depth] = 0;
}

}  // namespace

std::optional<FeasibleSolution> make_feasible(const std::vector<BigInt>& basis,
                                              const std::vector<BigReal>& logs,
                                              const std::vector<long>& x, int bits_b) {
    if (all_zero(x)) return std::nullopt;
    Rational p = power_product(basis, x);
    if (p == 1) return std::nullopt;  // dependent logs, epsilon would be 0
    if (!in_log_domain(p.get_num(), p.get_den())) return std::nullopt;
    if (!bit_feasible(p, bits_b)) return std::nullopt;
    FeasibleSolution fs;
    fs.x = x;
    sign_normalize(fs.x);
    BigReal eps(logs[0].prec_bits());
    for (size_t j = 0; j < x.size(); ++j) eps += logs[j].mul_int(BigInt(fs.x[j]));
    fs.epsilon = eps.abs();
    fs.cost = bs_cost(p);
    fs.bits = coeff_bitsize(p);
    return fs;
}

std::vector<long> default_bounds(const std::vector<BigInt>& basis, int bits_b,
                                 const Rational& scale) {
    validate_basis(basis);
    if (sgn(scale) <= 0)
        throw std::invalid_argument("default_bounds: scale must be positive");
    std::vector<long> out;
    out.reserve(basis.size());
    Rational m = scale * bits_b;
    long prec = 192;
    BigReal ln2 = ln_int(2, prec);
    for (const BigInt& p : basis) {
        if (p == 2) {
            out.push_back(ceil_rational(m));
            continue;
        }
        BigReal ratio = ln2.mul_rational(m) / ln_int(p, prec);
        BigInt ceiling = -(-ratio).floor_to_int();
        out.push_back(ceiling.get_si());
    }
    return out;
}

SolutionPool brute_force(const SearchConfig& config) {
    validate_basis(config.basis);
    size_t n = config.basis.size();
    if (n >= 8 && !config.allow_large_n)
        throw std::domain_error(
            "brute_force: basis too large (n >= 8); set allow_large_n to override");
    if (config.tol <= 0) throw std::invalid_argument("brute_force: tol must be positive");
    if (config.tol >= 2.6339157938496336)  // ln(7 + 4 sqrt(3)); keeps p convergent
        throw std::invalid_argument("brute_force: tol must stay below ln(7 + 4 sqrt 3)");

    std::vector<long> bounds =
        config.bounds_override ? *config.bounds_override
                               : default_bounds(config.basis, config.bits_b, config.scale);
    if (bounds.size() != n) throw std::invalid_argument("brute_force: bounds size mismatch");
    for (long b : bounds)
        if (b < 0) throw std::invalid_argument("brute_force: bounds must be nonnegative");

    double lattice_log2 = 0;
    for (long b : bounds) lattice_log2 += std::log2(2.0 * double(b) + 1.0);
    if (lattice_log2 > double(config.iteration_budget_log2))
        throw std::domain_error(
            "brute_force: lattice exceeds the iteration budget; reduce scale or bounds");

    long prec = config.effective_prec();
    std::vector<BigReal> logs = ln_basis(config.basis, prec);
    BigReal tol = BigReal::of_double(config.tol, prec);
    BruteCtx ctx{config, bounds, logs, tol, config.tol, logs[n - 1].to_double()};

    std::vector<FeasibleSolution> sols;
    if (n == 1) {
        std::vector<long> x(1);
        for (long v = 1; v <= bounds[0]; ++v) {
            x[0] = v;
            if (auto fs = make_feasible(config.basis, logs, x, config.bits_b)) {
                if (fs->epsilon.sign() > 0 && fs->epsilon < tol) sols.push_back(std::move(*fs));
            }
        }
    } else if (config.threads > 1) {
        // split the outermost exponent range [0, X_0]; the final sort is a
        // total order, so the merged result is schedule-independent
        std::atomic<long> next(0);
        auto worker = [&]() {
            std::vector<FeasibleSolution> local;
            std::vector<long> x(n, 0);
            for (long v = next.fetch_add(1); v <= bounds[0]; v = next.fetch_add(1)) {
                x[0] = v;
                scan_lattice(ctx, x, 1, v == 0, logs[0].mul_int(BigInt(v)), local);
            }
            return local;
        };
        std::vector<std::future<std::vector<FeasibleSolution>>> futs;
        for (int w = 0; w < config.threads; ++w)
            futs.push_back(std::async(std::launch::async, worker));
        for (auto& f : futs) {
            auto part = f.get();
            sols.insert(sols.end(), std::make_move_iterator(part.begin()),
                        std::make_move_iterator(part.end()));
        }
    } else {
        std::vector<long> x(n, 0);
        scan_lattice(ctx, x, 0, true, BigReal(prec), sols);
    }

    sort_pool(sols);
    return SolutionPool{std::move(sols)};
}

TrapCalibration calibrate_trap(const std::vector<BigInt>& basis, long prec_bits,
                               const Rational& scale, int bits_b, long /*nmax_hint*/,
                               uint64_t seed, int probes) {
    validate_basis(basis);
    std::vector<BigReal> logs = ln_basis(basis, prec_bits);
    BigReal fp = machine_eps(prec_bits);
    long capacity = decimal_capacity(prec_bits);
    long ds = initial_ds(bits_b, scale, basis.size());
    SplitMix64 rng(mix_seed(seed, 0xCA11B7A7EULL));

    while (ds + 8 <= capacity) {
        for (long k = 1; k <= capacity; ++k) {
            for (int attempt = 0; attempt < probes; ++attempt) {
                BigReal w = uniform01(rng, prec_bits).mul_int(pow10_int(k)) * fp;
                RelationQuery q;
                q.reals.push_back(w);
                for (const BigReal& l : logs) q.reals.push_back(l);
                q.digits_ds = ds;
                RelationResult r = find_relation(q);
                if (r.found && !is_trivial_relation(r.coeffs))
                    return TrapCalibration{k, ds};
            }
        }
        ++ds;
    }
    throw std::domain_error(
        "calibrate_trap: no non-trivial detection within the precision budget");
}

SolutionPool monte_carlo(const SearchConfig& config, McInfo* info) {
    validate_basis(config.basis);
    size_t n = config.basis.size();
    if (config.nmax < 1) throw std::invalid_argument("monte_carlo: nmax must be >= 1");

    long prec = config.effective_prec();
    uint64_t seed = config.seed ? *config.seed : wallclock_seed();
    TrapCalibration trap = calibrate_trap(config.basis, prec, config.scale, config.bits_b,
                                          config.nmax, seed, config.calib_probes);

    std::vector<BigReal> logs = ln_basis(config.basis, prec);
    BigReal fp = machine_eps(prec);
    long capacity = decimal_capacity(prec);

    // one relation query per (sample, exponent offset, precision offset) cell
    auto run_sample = [&](long i) {
        std::vector<std::vector<long>> tails;
        for (int j = 0; j <= 3; ++j) {
            for (int l = 0; l <= 3; ++l) {
                SplitMix64 rng(
                    mix_seed(seed, (uint64_t(i) << 16) | (uint64_t(j) << 8) | uint64_t(l)));
                long ds = trap.d_s + l;
                if (ds + 8 > capacity) continue;
                BigReal w = uniform01(rng, prec).mul_int(pow10_int(trap.k + j)) * fp;
                RelationQuery q;
                q.reals.push_back(w);
                for (const BigReal& lg : logs) q.reals.push_back(lg);
                q.digits_ds = ds;
                RelationResult r = find_relation(q);
                if (!r.found || is_trivial_relation(r.coeffs)) continue;
                std::vector<long> tail(n);
                bool fits = true;
                for (size_t t = 0; t < n; ++t) {
                    if (!r.coeffs[t + 1].fits_slong_p()) { fits = false; break; }
                    tail[t] = r.coeffs[t + 1].get_si();
                }
                if (!fits || all_zero(tail)) continue;
                sign_normalize(tail);
                tails.push_back(std::move(tail));
            }
        }
        return tails;
    };

    std::vector<std::vector<long>> collected;
    if (config.threads > 1) {
        std::vector<std::future<std::vector<std::vector<long>>>> futs;
        std::atomic<long> next(0);
        for (int w = 0; w < config.threads; ++w) {
            futs.push_back(std::async(std::launch::async, [&]() {
                std::vector<std::vector<long>> local;
                for (long i = next.fetch_add(1); i < config.nmax; i = next.fetch_add(1)) {
                    auto t = run_sample(i);
                    local.insert(local.end(), t.begin(), t.end());
                }
                return local;
            }));
        }
        for (auto& f : futs) {
            auto part = f.get();
            collected.insert(collected.end(), part.begin(), part.end());
        }
    } else {
        for (long i = 0; i < config.nmax; ++i) {
            auto t = run_sample(i);
            collected.insert(collected.end(), t.begin(), t.end());
        }
    }

    size_t raw = collected.size();
    std::set<std::vector<long>> distinct(collected.begin(), collected.end());

    std::vector<FeasibleSolution> sols;
    for (const std::vector<long>& x : distinct) {
        if (auto fs = make_feasible(config.basis, logs, x, config.bits_b))
            sols.push_back(std::move(*fs));
    }
    sort_pool(sols);

    if (info) {
        info->seed_used = seed;
        info->trap = trap;
        info->raw_candidates = raw;
        info->distinct_candidates = distinct.size();
        info->feasible_candidates = sols.size();
    }
    return SolutionPool{std::move(sols)};
}

SolutionMatrix select_full_rank(const SolutionPool& pool, size_t n) {
    if (n == 0) throw std::invalid_argument("select_full_rank: n must be positive");
    SolutionMatrix out;
    // pivot column -> reduced row; incoming rows are eliminated until they
    // land on a free pivot or vanish
    std::map<size_t, std::vector<Rational>> pivots;
    for (size_t idx = 0; idx < pool.solutions.size() && out.rows.size() < n; ++idx) {
        const std::vector<long>& x = pool.solutions[idx].x;
        std::vector<Rational> row(x.size());
        for (size_t j = 0; j < x.size(); ++j) row[j] = Rational(x[j]);
        size_t pcol = row.size();
        while (true) {
            pcol = row.size();
            for (size_t j = 0; j < row.size(); ++j)
                if (sgn(row[j]) != 0) { pcol = j; break; }
            if (pcol == row.size()) break;  // dependent
            auto it = pivots.find(pcol);
            if (it == pivots.end()) break;  // independent
            Rational f = row[pcol] / it->second[pcol];
            for (size_t j = pcol; j < row.size(); ++j) row[j] -= f * it->second[j];
        }
        if (pcol == row.size()) continue;
        pivots.emplace(pcol, std::move(row));
        out.rows.push_back(x);
        out.pool_indices.push_back(idx);
    }
    if (out.rows.size() < n)
        throw std::domain_error(
            "select_full_rank: pool rank below n; raise tol, nmax, or bounds");
    return out;
}

}  // namespace logforge
