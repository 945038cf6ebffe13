#include "logforge/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "logforge/binsplit.hpp"
#include "logforge/iofmt.hpp"
#include "logforge/multival.hpp"
#include "logforge/numerics.hpp"
#include "logforge/search.hpp"

namespace logforge {

namespace {

int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (flag_value == 0) {
        unsigned hc = std::thread::hardware_concurrency();
        return hc > 0 ? int(hc) : 1;
    }
    if (const char* env = std::getenv("LOGFORGE_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void append_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

struct SearchArgs {
    std::string basis_text;
    int bits = 64;
    double tol = 0.5;
    std::string scale_text = "1";
    std::string bounds_text;
    std::string method = "brute";
    long nmax = 2000;
    std::optional<uint64_t> seed;
    long prec = 0;
    std::string out = "logresults.txt";
    int threads = -1;
};

struct RunOutcome {
    SolutionPool pool;
    MultiValuation mv;
    ReportMeta meta;
    bool empty = false;
};

RunOutcome run_search(const SearchArgs& a) {
    SearchConfig cfg;
    cfg.basis = parse_basis(a.basis_text);
    cfg.bits_b = a.bits;
    cfg.tol = a.tol;
    cfg.scale = parse_rational(a.scale_text);
    if (!a.bounds_text.empty()) {
        std::vector<long> b;
        std::stringstream ss(a.bounds_text);
        std::string item;
        while (std::getline(ss, item, ',')) b.push_back(std::stol(item));
        cfg.bounds_override = std::move(b);
    }
    cfg.nmax = a.nmax;
    cfg.seed = a.seed;
    cfg.prec_bits = a.prec;
    cfg.threads = resolve_threads(a.threads);

    RunOutcome rc;
    rc.meta.method = a.method;
    rc.meta.seed = a.seed;
    if (a.method == "brute") {
        if (sgn(cfg.scale) <= 0)
            throw std::invalid_argument("search: brute force needs a positive scale");
        rc.meta.bounds = cfg.bounds_override
                             ? *cfg.bounds_override
                             : default_bounds(cfg.basis, cfg.bits_b, cfg.scale);
        rc.pool = brute_force(cfg);
    } else if (a.method == "lll") {
        McInfo info;
        rc.pool = monte_carlo(cfg, &info);
        rc.meta.seed = info.seed_used;
        rc.meta.trap = info.trap;
    } else {
        throw std::invalid_argument("search: unknown method " + a.method);
    }
    if (rc.pool.empty()) {
        rc.empty = true;
        return rc;
    }
    SolutionMatrix sm = select_full_rank(rc.pool, cfg.basis.size());
    rc.mv = build_system(cfg.basis, sm.rows);
    return rc;
}

int cmd_search(const SearchArgs& a) {
    RunOutcome rc = run_search(a);
    if (rc.empty) {
        std::cerr << "empty solution pool; raise tol, nmax, or bounds\n";
        return 2;
    }
    SearchConfig cfg;
    cfg.basis = parse_basis(a.basis_text);
    cfg.bits_b = a.bits;
    cfg.tol = a.tol;
    cfg.scale = parse_rational(a.scale_text);
    cfg.nmax = a.nmax;
    std::string text = report(rc.pool, rc.mv, cfg, rc.meta);
    std::cout << text;
    if (!a.out.empty() && a.out != "-") append_file(a.out, text);
    return 0;
}

int cmd_compute_value(const MultiValuation& mv, const BigInt& target, long digits,
                      const EvalOptions& opt, bool verify) {
    std::vector<Rational> coeff = single_log(mv, target);
    long inner = digits + 12;
    std::vector<BigReal> s(mv.series.size());
    for (size_t i = 0; i < mv.series.size(); ++i)
        s[i] = eval_series(mv.series[i], inner, opt);
    BigReal acc(s.empty() ? 64 : s[0].prec_bits());
    for (size_t i = 0; i < s.size(); ++i) acc += s[i].mul_rational(coeff[i]);
    std::cout << acc.to_decimal(size_t(digits)) << "\n";
    if (verify) {
        BigReal oracle = ln_int(target, long(double(digits + 24) * 3.33));
        BigReal tolv = BigReal::of_rational(Rational(1), 64)
                           .div_int(pow10_int(size_t(digits > 20 ? digits - 20 : 1)));
        if ((acc - oracle).abs() > tolv) {
            std::cerr << "verification FAILED against the oracle\n";
            return 1;
        }
        std::cerr << "verified: last 20 digits agree with the oracle\n";
    }
    return 0;
}

}  // namespace

std::vector<BigInt> parse_basis(const std::string& text) {
    std::vector<BigInt> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        BigInt v;
        if (mpz_set_str(v.get_mpz_t(), item.c_str(), 10) != 0)
            throw std::invalid_argument("basis: not an integer: " + item);
        if (v <= 1) throw std::invalid_argument("basis: elements must be > 1");
        for (const BigInt& prev : out)
            if (prev == v) throw std::invalid_argument("basis: duplicate element " + item);
        out.push_back(std::move(v));
    }
    if (out.empty()) throw std::invalid_argument("basis: empty");
    return out;
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("not a rational: " + text);
    q.canonicalize();
    return q;
}

int cli_main(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("logforge");
    for (const std::string& s : args) argv.push_back(s.c_str());
    return cli_main(int(argv.size()), argv.data());
}

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Hypergeometric series search and evaluation for logarithms"};
    app.require_subcommand(1);

    // ---- search ----
    SearchArgs sa;
    auto* search = app.add_subcommand("search", "search multi-valuation formulas");
    search->add_option("basis", sa.basis_text, "comma-separated integers > 1")->required();
    search->add_option("--bits", sa.bits, "coefficient bit budget");
    search->add_option("--tol", sa.tol, "objective upper bound")
        ->check(CLI::PositiveNumber);
    search->add_option("--scale", sa.scale_text, "bound scale, or -ds when negative");
    search->add_option("--bounds", sa.bounds_text, "explicit bounds, comma separated");
    search->add_option("--method", sa.method, "brute | lll")
        ->check(CLI::IsMember({"brute", "lll"}));
    search->add_option("--nmax", sa.nmax, "Monte Carlo sample count");
    uint64_t seed_val = 0;
    auto* seed_opt = search->add_option("--seed", seed_val, "PRNG seed");
    search->add_option("--prec", sa.prec, "working precision bits (default 2*bits)");
    search->add_option("--out", sa.out, "report file (appended); - disables");
    search->add_option("--threads", sa.threads, "worker cap; 0 = hardware");

    // ---- compute ----
    std::string c_target, c_basis, c_from;
    long c_digits = 100;
    int c_bits = 64;
    double c_tol = 0.6;
    bool c_verify = false;
    int c_threads = -1;
    auto* compute = app.add_subcommand("compute", "compute log(target) to many digits");
    compute->add_option("target", c_target, "positive integer")->required();
    compute->add_option("--digits", c_digits, "decimal digits");
    compute->add_option("--basis", c_basis, "factor basis for a fresh search");
    compute->add_option("--from-report", c_from, "reuse a saved report's system");
    compute->add_option("--bits", c_bits, "bit budget for a fresh search");
    compute->add_option("--tol", c_tol, "tol for a fresh search");
    compute->add_flag("--verify", c_verify, "check the tail digits against the oracle");
    compute->add_option("--threads", c_threads, "worker cap; 0 = hardware");

    // ---- sequence ----
    long s_nmax = 0, s_digits = 100;
    int s_threads = -1;
    auto* sequence = app.add_subcommand("sequence", "ln 2 .. ln n via the atanh recurrence");
    sequence->add_option("n_max", s_nmax, "last integer, >= 2")->required();
    sequence->add_option("--digits", s_digits, "decimal digits");
    sequence->add_option("--threads", s_threads, "worker cap; 0 = hardware");

    // ---- export ----
    std::string e_format, e_basis, e_from, e_bounds;
    int e_bits = 64;
    double e_tol = 0.5, e_epsil = 0.5e-5;
    std::string e_scale = "1";
    auto* exp = app.add_subcommand("export", "emit FLINT/y-cruncher/LP/report text");
    exp->add_option("--format", e_format, "flint | ycruncher | lp | report")->required();
    exp->add_option("basis", e_basis, "comma-separated integers > 1");
    exp->add_option("--from-report", e_from, "saved report to export from");
    exp->add_option("--bits", e_bits, "bit budget");
    exp->add_option("--tol", e_tol, "objective bound");
    exp->add_option("--scale", e_scale, "bound scale");
    exp->add_option("--epsil", e_epsil, "objective lower bound (LP only)");
    exp->add_option("--bounds", e_bounds, "explicit bounds, comma separated");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (search->parsed()) {
            if (seed_opt->count() > 0) sa.seed = seed_val;
            return cmd_search(sa);
        }

        if (compute->parsed()) {
            BigInt target;
            if (mpz_set_str(target.get_mpz_t(), c_target.c_str(), 10) != 0 || target < 1)
                throw std::invalid_argument("compute: target must be a positive integer");
            EvalOptions opt;
            opt.threads = resolve_threads(c_threads);
            if (target == 1) {
                std::cout << BigReal(64).to_decimal(size_t(c_digits)) << "\n";
                return 0;
            }
            MultiValuation mv;
            if (!c_from.empty()) {
                mv = system_from_report(read_file(c_from));
            } else {
                std::string basis_text = c_basis;
                if (basis_text.empty()) {
                    // [2,3,5,n] style fallback: strip small factors, keep the rest
                    BigInt rest = target;
                    for (int p : {2, 3, 5})
                        while (rest % p == 0) rest /= p;
                    basis_text = "2,3,5";
                    if (rest > 1) basis_text += "," + rest.get_str();
                }
                SearchArgs a;
                a.basis_text = basis_text;
                a.bits = c_bits;
                a.tol = c_tol;
                a.out = "-";
                RunOutcome rc = run_search(a);
                if (rc.empty) {
                    std::cerr << "empty solution pool for basis " << basis_text << "\n";
                    return 2;
                }
                mv = rc.mv;
            }
            return cmd_compute_value(mv, target, c_digits, opt, c_verify);
        }

        if (sequence->parsed()) {
            EvalOptions opt;
            opt.threads = resolve_threads(s_threads);
            std::vector<BigReal> seq = log_sequence(s_nmax, s_digits, opt);
            for (size_t i = 0; i < seq.size(); ++i)
                std::cout << "log(" << (i + 2) << ") = " << seq[i].to_decimal(size_t(s_digits))
                          << "\n";
            return 0;
        }

        if (exp->parsed()) {
            if (e_format == "lp") {
                std::vector<BigInt> basis = parse_basis(e_basis);
                std::optional<std::vector<long>> bounds;
                if (!e_bounds.empty()) {
                    std::vector<long> b;
                    std::stringstream ss(e_bounds);
                    std::string item;
                    while (std::getline(ss, item, ',')) b.push_back(std::stol(item));
                    bounds = std::move(b);
                }
                std::cout << lp_export(basis, e_bits, e_tol, parse_rational(e_scale),
                                       e_epsil, bounds);
                return 0;
            }
            MultiValuation mv;
            if (!e_from.empty()) {
                mv = system_from_report(read_file(e_from));
            } else {
                SearchArgs a;
                a.basis_text = e_basis;
                a.bits = e_bits;
                a.tol = e_tol > 0 ? e_tol : 0.6;
                a.scale_text = e_scale;
                a.out = "-";
                RunOutcome rc = run_search(a);
                if (rc.empty) {
                    std::cerr << "empty solution pool\n";
                    return 2;
                }
                mv = rc.mv;
            }
            if (e_format == "flint") {
                for (const FlintSeries& s : mv.series) {
                    auto f = flint_strings(s);
                    std::cout << f[0] << "\n" << f[1] << "\n" << f[2] << "\n" << f[3]
                              << "\n\n";
                }
                return 0;
            }
            if (e_format == "ycruncher") {
                std::cout << ycruncher_export(mv);
                return 0;
            }
            if (e_format == "report") {
                SearchConfig cfg;
                cfg.basis = mv.basis;
                cfg.bits_b = e_bits;
                cfg.tol = e_tol;
                cfg.scale = parse_rational(e_scale);
                std::cout << report(SolutionPool{}, mv, cfg, ReportMeta{});
                return 0;
            }
            throw std::invalid_argument("export: unknown format " + e_format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace logforge
