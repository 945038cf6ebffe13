#include "logforge/binsplit.hpp"

#include <atomic>
#include <cmath>
#include <future>
#include <stdexcept>

#include "logforge/numerics.hpp"

namespace logforge {

namespace {

struct SplitCtx {
    const FlintSeries& s;
    bool strip_gcd;
    std::atomic<int>* spawn_budget;
};

// Only the (T, B) pair may be stripped: B appears nowhere else in the merge
// rule, while Q is coupled to P through the prefix ratio.
void maybe_strip(SplitNode& n) {
    BigInt g = gcd(n.Tsum, n.Bprod);
    if (g > 1) { n.Tsum /= g; n.Bprod /= g; }
}

SplitNode merge(SplitNode l, SplitNode r, const SplitCtx& ctx) {
    SplitNode n;
    n.Tsum = l.Tsum * r.Bprod * r.Qprod + l.Bprod * l.Pprod * r.Tsum;
    n.Pprod = l.Pprod * r.Pprod;
    n.Qprod = l.Qprod * r.Qprod;
    n.Bprod = l.Bprod * r.Bprod;
    if (ctx.strip_gcd && mpz_sizeinbase(n.Tsum.get_mpz_t(), 2) > 8192) maybe_strip(n);
    return n;
}

SplitNode split(long lo, long hi, const SplitCtx& ctx) {
    if (hi - lo == 1) {
        SplitNode n;
        n.Pprod = ctx.s.P.eval(lo);
        n.Qprod = ctx.s.Q.eval(lo);
        n.Bprod = ctx.s.B.eval(lo);
        n.Tsum = ctx.s.A.eval(lo) * n.Qprod;
        return n;
    }
    long mid = lo + (hi - lo) / 2;
    if (ctx.spawn_budget && hi - lo > 2048) {
        int have = ctx.spawn_budget->load();
        while (have > 0 && !ctx.spawn_budget->compare_exchange_weak(have, have - 1)) {}
        if (have > 0) {
            auto right = std::async(std::launch::async, split, mid, hi, std::cref(ctx));
            SplitNode l = split(lo, mid, ctx);
            SplitNode r = right.get();
            ctx.spawn_budget->fetch_add(1);
            return merge(std::move(l), std::move(r), ctx);
        }
    }
    return merge(split(lo, mid, ctx), split(mid, hi, ctx), ctx);
}

long work_prec(long digits) {
    return long(std::ceil(double(digits) * 3.3219280948873626)) + 32;
}

}  // namespace

long term_count(const Rational& ratio_limit, long digits) {
    Rational r = abs(ratio_limit);
    if (r >= 1) throw std::domain_error("term_count: series does not converge");
    if (sgn(r) == 0) return 1;
    double log_ratio = ln_rational(r, 96).to_double();  // negative
    double n0 = double(digits) * 2.302585092994046 / -log_ratio;
    double guard = 12.0 + std::log10(n0 + 10.0);
    long n = long(std::ceil((double(digits) + guard) * 2.302585092994046 / -log_ratio)) + 4;
    return n < 1 ? 1 : n;
}

SplitNode split_range(const FlintSeries& s, long lo, long hi, const EvalOptions& opt) {
    if (hi <= lo) throw std::invalid_argument("split_range: empty range");
    std::atomic<int> budget(opt.threads > 1 ? opt.threads - 1 : 0);
    SplitCtx ctx{s, opt.strip_gcd, opt.threads > 1 ? &budget : nullptr};
    return split(lo, hi, ctx);
}

BigReal eval_series(const FlintSeries& s, long digits, const EvalOptions& opt) {
    if (digits <= 0) throw std::invalid_argument("eval_series: digits must be positive");
    long n = term_count(term_ratio_limit(s), digits);
    SplitNode node = split_range(s, 0, n, opt);
    BigInt den = node.Bprod * node.Qprod;
    if (sgn(den) == 0) throw std::domain_error("eval_series: zero denominator");
    long prec = work_prec(digits) + 32;
    BigReal t = BigReal::of_int(node.Tsum, prec);
    BigReal d = BigReal::of_int(den, prec);
    return (t / d).round_to(work_prec(digits));
}

BigReal eval_series(const YCruncherSeries& s, long digits, const EvalOptions& opt) {
    return eval_series(to_flint(s), digits, opt);
}

BigReal eval_params(const SeriesParams& s, long digits, const EvalOptions& opt) {
    return eval_series(to_flint(s), digits, opt);
}

BigReal eval_log(const BigInt& u, const BigInt& v, long digits, const EvalOptions& opt) {
    return eval_series(log_series_flint(u, v), digits, opt);
}

std::vector<BigReal> log_sequence(long n_max, long digits, const EvalOptions& opt) {
    if (n_max < 2) throw std::invalid_argument("log_sequence: n_max must be >= 2");
    if (digits <= 0) throw std::invalid_argument("log_sequence: digits must be positive");
    long inner = digits + 12;
    std::vector<BigReal> out;
    out.reserve(n_max - 1);
    BigReal acc(work_prec(inner));
    for (long n = 1; n < n_max; ++n) {
        BigReal step = eval_series(atanh_series(1, 2 * n + 1), inner, opt);
        acc = acc + step.mul_2exp(1);
        out.push_back(acc.round_to(work_prec(digits)));
    }
    return out;
}

}  // namespace logforge
