#pragma once

#include "logforge/series.hpp"

namespace logforge {

// Exact partial-sum state for a half-open term range [lo, hi):
//   sum_{n=lo}^{hi-1} A(n)/B(n) prod_{k=lo}^{n-1} P(k)/Q(k)  ==  Tsum / (Bprod * Qprod)
// Merge rule: P = Pl*Pr, Q = Ql*Qr, B = Bl*Br, T = Tl*Br*Qr + Bl*Pl*Tr.
struct SplitNode {
    BigInt Pprod, Qprod, Bprod, Tsum;
};

struct EvalOptions {
    int threads = 1;
    bool strip_gcd = false;  // gcd pass at merges; trades time for memory
};

// Terms needed for `digits` correct decimals of a series with the given
// geometric term-ratio limit.
long term_count(const Rational& ratio_limit, long digits);

SplitNode split_range(const FlintSeries& s, long lo, long hi,
                      const EvalOptions& opt = {});

BigReal eval_series(const FlintSeries& s, long digits, const EvalOptions& opt = {});
BigReal eval_series(const YCruncherSeries& s, long digits, const EvalOptions& opt = {});
BigReal eval_params(const SeriesParams& s, long digits, const EvalOptions& opt = {});

// log(u/v) by constructing and evaluating the hypergeometric series
BigReal eval_log(const BigInt& u, const BigInt& v, long digits,
                 const EvalOptions& opt = {});

// [ln 2, ln 3, ..., ln n_max] through the consecutive-logarithm step
// log(n+1) = log(n) + 2 atanh(1/(2n+1)), one series evaluation per entry.
std::vector<BigReal> log_sequence(long n_max, long digits,
                                  const EvalOptions& opt = {});

}  // namespace logforge
