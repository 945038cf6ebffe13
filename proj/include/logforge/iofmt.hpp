#pragma once

#include <array>
#include <optional>
#include <string>

#include "logforge/multival.hpp"
#include "logforge/search.hpp"

namespace logforge {

// "<len> c0 c1 ... c(len-1)", ascending coefficients, space separated.
std::string poly_string(const Poly& p);
std::array<std::string, 4> flint_strings(const FlintSeries& s);

// Per-series [[CoefP, CoefD], PolP, PolR, PolQ] blocks plus the rational
// combination rows, exact integers throughout.
std::string ycruncher_export(const MultiValuation& mv);

// LP model text: Minimize / Subject To / Bounds / Integers / End, variables
// named x<p_j>.
std::string lp_export(const std::vector<BigInt>& basis, int bits_b, double tol,
                      const Rational& scale, double epsil,
                      const std::optional<std::vector<long>>& bounds = std::nullopt,
                      long prec_bits = 128);

struct ReportMeta {
    std::string method = "brute";
    std::optional<uint64_t> seed;
    std::optional<TrapCalibration> trap;
    std::vector<long> bounds;  // empty when not applicable
};

// Human-readable search report with a machine-readable JSON footer that
// compute --from-report consumes.
std::string report(const SolutionPool& pool, const MultiValuation& mv,
                   const SearchConfig& config, const ReportMeta& meta);

std::string system_to_json(const MultiValuation& mv);

// Extracts the JSON footer from report text (or accepts bare JSON) and
// rebuilds the system it describes.
MultiValuation system_from_report(const std::string& text);

// Fixed six-significant-digit rendering used for costs and objectives.
std::string fmt6(double v);

}  // namespace logforge
