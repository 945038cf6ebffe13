#include "logforge/iofmt.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "logforge/numerics.hpp"

namespace logforge {

namespace {

const char* kJsonMarker = "=== LOGFORGE SYSTEM JSON ===";

std::string join_longs(const std::vector<long>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << "]";
    return os.str();
}

std::string join_bigints(const std::vector<BigInt>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
    os << "]";
    return os.str();
}

std::string join_doubles6(const std::vector<double>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << fmt6(v[i]);
    os << "]";
    return os.str();
}

std::string rational_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string matrix_rows(const std::vector<std::vector<long>>& m) {
    std::ostringstream os;
    for (const auto& row : m) os << join_longs(row) << "\n";
    return os.str();
}

}  // namespace

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string poly_string(const Poly& p) {
    std::vector<BigInt> c = p.c;
    if (c.empty()) c.push_back(BigInt(0));
    std::ostringstream os;
    os << c.size();
    for (const BigInt& x : c) os << " " << x.get_str();
    return os.str();
}

std::array<std::string, 4> flint_strings(const FlintSeries& s) {
    return {poly_string(s.A), poly_string(s.B), poly_string(s.P), poly_string(s.Q)};
}

std::string ycruncher_export(const MultiValuation& mv) {
    if (mv.series.empty()) throw std::invalid_argument("ycruncher_export: empty system");
    std::ostringstream os;
    for (size_t i = 0; i < mv.args.size(); ++i) {
        YCruncherSeries y = to_ycruncher(mv.args[i].u, mv.args[i].v);
        os << "S" << (i + 1) << ": [[" << y.coef_p.get_str() << ", " << y.coef_d.get_str()
           << "], " << "[";
        for (size_t j = 0; j < y.P.c.size(); ++j)
            os << (j ? ", " : "") << y.P.c[j].get_str();
        os << "], [";
        for (size_t j = 0; j < y.R.c.size(); ++j)
            os << (j ? ", " : "") << y.R.c[j].get_str();
        os << "], [";
        for (size_t j = 0; j < y.Q.c.size(); ++j)
            os << (j ? ", " : "") << y.Q.c[j].get_str();
        os << "]]\n";
    }
    for (size_t j = 0; j < mv.basis.size(); ++j) {
        os << "log(" << mv.basis[j].get_str() << ") =";
        for (size_t i = 0; i < mv.basis.size(); ++i) {
            Rational q = mv.Xinv[j][i];
            if (i == 0) {
                os << " " << rational_string(q);
            } else if (sgn(q) < 0) {
                os << " - " << rational_string(Rational(-q));
            } else {
                os << " + " << rational_string(q);
            }
            os << " S" << (i + 1);
        }
        os << "\n";
    }
    return os.str();
}

std::string lp_export(const std::vector<BigInt>& basis, int bits_b, double tol,
                      const Rational& scale, double epsil,
                      const std::optional<std::vector<long>>& bounds, long prec_bits) {
    if (basis.empty()) throw std::invalid_argument("lp_export: empty basis");
    std::vector<long> bd = bounds ? *bounds : default_bounds(basis, bits_b, scale);
    if (bd.size() != basis.size())
        throw std::invalid_argument("lp_export: bounds size mismatch");
    long digits = decimal_capacity(prec_bits);
    std::vector<BigReal> logs = ln_basis(basis, prec_bits);

    std::ostringstream obj;
    for (size_t i = 0; i < basis.size(); ++i)
        obj << " + " << logs[i].to_decimal(digits) << " x" << basis[i].get_str();

    char num[64];
    std::ostringstream os;
    os << "Minimize\n";
    os << "obj:" << obj.str() << "\n";
    os << "Subject To\n";
    std::snprintf(num, sizeof num, "%.17G", tol);
    os << "c1:" << obj.str() << " <= " << num << "\n";
    std::snprintf(num, sizeof num, "%.17G", epsil);
    os << "c2:" << obj.str() << " >= " << num << "\n";
    os << "Bounds\n";
    for (size_t i = 0; i < basis.size(); ++i)
        os << "-" << bd[i] << " <= x" << basis[i].get_str() << " <= " << bd[i] << "\n";
    os << "Integers\n";
    for (size_t i = 0; i < basis.size(); ++i)
        os << (i ? " " : "") << "x" << basis[i].get_str();
    os << "\nEnd\n";
    return os.str();
}

std::string system_to_json(const MultiValuation& mv) {
    nlohmann::json j;
    for (const BigInt& p : mv.basis) j["basis"].push_back(p.get_str());
    for (const auto& row : mv.X) j["X"].push_back(row);
    for (const auto& row : mv.Xinv) {
        nlohmann::json r;
        for (const Rational& q : row) r.push_back(rational_string(q));
        j["Xinv"].push_back(r);
    }
    for (const SeriesParams& sp : mv.params) {
        j["series"].push_back({sp.alpha.get_str(), sp.beta.get_str(), sp.gamma.get_str(),
                               sp.nu.get_str(), sp.delta.get_str()});
    }
    j["total_cost"] = mv.total_cost;
    return j.dump();
}

MultiValuation system_from_report(const std::string& text) {
    std::string payload = text;
    size_t pos = text.rfind(kJsonMarker);
    if (pos != std::string::npos) {
        size_t start = text.find('\n', pos);
        if (start == std::string::npos)
            throw std::invalid_argument("system_from_report: truncated footer");
        size_t end = text.find('\n', start + 1);
        payload = text.substr(start + 1, end == std::string::npos ? std::string::npos
                                                                  : end - start - 1);
    }
    nlohmann::json j = nlohmann::json::parse(payload);
    std::vector<BigInt> basis;
    for (const auto& s : j.at("basis")) basis.emplace_back(s.get<std::string>());
    std::vector<std::vector<long>> X;
    for (const auto& row : j.at("X")) X.push_back(row.get<std::vector<long>>());
    return build_system(basis, X);
}

std::string report(const SolutionPool& pool, const MultiValuation& mv,
                   const SearchConfig& config, const ReportMeta& meta) {
    std::ostringstream os;
    os << "------------------------------------------------------\n";
    os << "(logforge search " << join_bigints(config.basis) << ", bits = " << config.bits_b
       << ", tol = " << fmt6(config.tol) << ", scale = " << rational_string(config.scale)
       << ", nmax = " << config.nmax << ", method = " << meta.method << ")\n";
    os << "\nSEED\n" << (meta.seed ? std::to_string(*meta.seed) : "none") << "\n";
    if (meta.trap) {
        os << "\nTRAP CALIBRATION [k, ds]\n[" << meta.trap->k << ", " << meta.trap->d_s
           << "]\n";
    }
    os << "\nINTEGERS\n" << join_bigints(config.basis) << "\n";
    os << "\nPOWER BOUNDS\n" << join_longs(meta.bounds) << "\n";
    os << "\nBITS REQUIRED\n" << config.bits_b << " - bit\n";
    os << "\nBITS OBTAINED\n";
    {
        std::ostringstream bits;
        bits << "[";
        for (size_t i = 0; i < mv.bits_obtained.size(); ++i)
            bits << (i ? ", " : "") << mv.bits_obtained[i];
        bits << "]";
        os << bits.str() << " - bit\n";
    }
    os << "\nBINARY SPLITTING COSTS. SERIES, TOTAL & PER COMPUTED LOG\n";
    os << join_doubles6(mv.costs) << "\n";
    os << fmt6(mv.total_cost) << "\n";
    os << fmt6(mv.total_cost / double(mv.basis.size())) << "\n";

    os << "\nOPTIMAL OBJECTIVE FUNCTION VALUES\n";
    {
        // objective values of the selected rows; pool entries carry them, with
        // a recomputation fallback for systems built from external matrices
        std::vector<double> obj;
        std::vector<BigReal> logs;
        for (const auto& row : mv.X) {
            bool got = false;
            for (const FeasibleSolution& fs : pool.solutions) {
                if (fs.x == row) {
                    obj.push_back(fs.epsilon.to_double());
                    got = true;
                    break;
                }
            }
            if (!got) {
                if (logs.empty()) logs = ln_basis(mv.basis, 128);
                BigReal e(128);
                for (size_t j = 0; j < row.size(); ++j)
                    e += logs[j].mul_int(BigInt(row[j]));
                obj.push_back(e.abs().to_double());
            }
        }
        os << join_doubles6(obj) << "\n";
        os << "\nOPTIMAL DIFFERENCE FUNCTION VALUES\n";
        std::vector<double> gaps;
        for (size_t i = 0; i < obj.size(); ++i)
            gaps.push_back(i == 0 ? obj[0] : obj[i] - obj[i - 1]);
        os << join_doubles6(gaps) << "\n";
        double mingap = gaps.empty() ? 0 : gaps[0];
        for (double g : gaps) mingap = std::min(mingap, g);
        os << "MINIMUM GAP = [" << fmt6(mingap) << "]\n";
        os << "\nOPTIMAL RELATIVE DIFFERENCES\n";
        std::vector<double> rel;
        for (size_t i = 0; i < obj.size(); ++i)
            rel.push_back(i == 0 ? 1.0 : 1.0 - obj[i - 1] / obj[i]);
        os << join_doubles6(rel) << "\n";
    }

    os << "\nSOLUTION X = [x_ij] MATRIX\n" << matrix_rows(mv.X);
    os << "\nLINEAR COMBINATION COEFFICIENTS X^(-1)\n";
    for (const auto& row : mv.Xinv) {
        os << "[";
        for (size_t i = 0; i < row.size(); ++i)
            os << (i ? ", " : "") << rational_string(row[i]);
        os << "]\n";
    }
    os << "\nFLINT HYPERGEOMETRIC POLYNOMIALS [PolA, PolB, PolP, PolQ]\n";
    for (const FlintSeries& s : mv.series) {
        auto f = flint_strings(s);
        os << "[\"" << f[0] << "\", \"" << f[1] << "\", \"" << f[2] << "\", \"" << f[3]
           << "\"]\n";
    }
    os << "\nY-CRUNCHER HYPERGEOMETRIC POLYNOMIALS [[CoefP, CoefD], PolP, PolR, PolQ]\n"
       << ycruncher_export(mv);
    os << "\nHYPERGEOMETRIC SERIES PARAMETERS [Alpha, Beta, Gamma, Nu, Delta]\n";
    for (const SeriesParams& sp : mv.params) {
        os << "[" << sp.alpha.get_str() << ", " << sp.beta.get_str() << ", "
           << sp.gamma.get_str() << ", " << sp.nu.get_str() << ", " << sp.delta.get_str()
           << "]\n";
    }
    os << "\n" << kJsonMarker << "\n" << system_to_json(mv) << "\n";
    os << "------------------------------------------------------\n";
    return os.str();
}

}  // namespace logforge
