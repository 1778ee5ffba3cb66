// Command-line frontend: parse ideal/algebra specs, dispatch one computation
// per invocation, emit tables, JSON, or CSV.
//
// Exit codes: 0 success, 1 input error, 2 enumeration-cap abort,
// 3 unstable fit under --require-stable.

#include <CLI11.hpp>
#include <hilbertforge/hilbertforge.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace hilbertforge;

namespace {

struct UnstableFit : std::runtime_error {
    UnstableFit() : std::runtime_error("fit did not stabilize (--require-stable)") {}
};

struct OracleMismatch : std::runtime_error {
    explicit OracleMismatch(const std::string& what)
        : std::runtime_error("oracle mismatch: " + what) {}
};

struct CommonOptions {
    std::string ideal_text;
    std::string input_path;
    std::string format = "table";
    long enum_cap = kDefaultEnumerationCap;
    int threads = 0;
    bool oracle = false;
    bool require_stable = false;
    bool modular = false;
};

void add_common(CLI::App* sub, CommonOptions& o, bool needs_ideal) {
    if (needs_ideal) {
        sub->add_option("--ideal", o.ideal_text, "Inline ideal spec: 'ring: x,y; ideal: x^2, x*y'");
        sub->add_option("--input", o.input_path, "File with the ideal spec")
            ->excludes("--ideal");
    }
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    sub->add_option("--enum-cap", o.enum_cap, "Enumeration cap")
        ->envname("HF_ENUM_CAP")
        ->capture_default_str();
    sub->add_option("--threads", o.threads, "Scan parallelism (0 = all cores)")
        ->capture_default_str();
    sub->add_flag("--oracle", o.oracle, "Cross-check against brute-force enumeration");
    sub->add_flag("--require-stable", o.require_stable, "Exit 3 when a fit is unstable");
    sub->add_flag("--modular", o.modular,
                  "Probabilistic modular rank mode (betti paths, exploration only)");
}

int thread_count(const CommonOptions& o) {
    if (o.threads > 0) return o.threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

IdealInput load_ideal(const CommonOptions& o) {
    std::string text = o.ideal_text;
    if (!o.input_path.empty()) {
        std::ifstream in(o.input_path);
        if (!in) throw std::invalid_argument("cannot open input file: " + o.input_path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    if (text.empty()) throw std::invalid_argument("no ideal given (use --ideal or --input)");
    return parse_ideal_input(text);
}

RankMode rank_mode(const CommonOptions& o) {
    if (o.modular) {
        std::cerr << "warning: probabilistic rank mode (mod " << kModularRankPrime
                  << "); results are not certified\n";
        return RankMode::modular_probabilistic;
    }
    return RankMode::exact;
}

std::string poly_to_string(const Polynomial<Rat>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        Rat c = p.coeff(d);
        if (c == 0) continue;
        if (!out.empty()) out += (c > 0 ? " + " : " - ");
        else if (c < 0) out += "-";
        Rat a = abs(c);
        bool unit = (a == 1 && d > 0);
        if (!unit) out += to_string(a);
        if (d > 0) {
            if (!unit) out += "*";
            out += "k";
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

std::string int_list(const std::vector<Int>& v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + "]";
}

void emit(const json& j, const CommonOptions& o, const std::string& table,
          const std::string& csv = "") {
    if (o.format == "json")
        std::cout << j.dump() << "\n";
    else if (o.format == "csv")
        std::cout << (csv.empty() ? table : csv);
    else
        std::cout << table;
}

// series coefficients against the brute-force monomial count
void oracle_check_series(const HilbertSeries& hs, const MonomialIdeal& I, bool quotient,
                         long cap, long tmax = 10) {
    for (long t = 0; t <= tmax; ++t) {
        Int in_ideal = I.count_monomials_of_degree(t, cap);
        Int expected = quotient ? monomial_space_dimension(I.vars(), t) - in_ideal : in_ideal;
        if (hs.hilbert_function(t) != expected)
            throw OracleMismatch("series coefficient at degree " + std::to_string(t));
    }
    std::cerr << "oracle: series coefficients match counts up to degree " << tmax << "\n";
}

// ----- subcommand payloads ------------------------------------------------

struct HilbertArgs {
    CommonOptions common;
    std::string module = "quotient";
    long power = 1;
};

void run_hilbert(const HilbertArgs& a) {
    auto in = load_ideal(a.common);
    MonomialIdeal M = in.ideal.power(a.power, a.common.enum_cap);
    bool quotient = a.module == "quotient";
    HilbertSeries hs = quotient ? quotient_series(M) : ideal_series(M);
    if (a.common.oracle) oracle_check_series(hs, M, quotient, a.common.enum_cap);
    auto h = hs.h_vector();
    std::ostringstream table;
    table << "module: " << (quotient ? "S/I" : "I") << (a.power != 1 ? "^" + std::to_string(a.power) : "")
          << "\nn: " << hs.vars() << "\nshift: " << hs.shift() << "\nnumerator: "
          << int_list(hs.numerator().coeffs()) << "\ndimension: " << hs.dimension()
          << "\nh-vector: offset " << h.offset << ", " << int_list(h.entries) << "\n";
    json j = to_json(hs);
    j["dimension"] = hs.dimension();
    j["h_vector"] = to_json(h);
    emit(j, a.common, table.str());
}

struct CoeffsArgs {
    CommonOptions common;
    std::string module = "ideal";
    long power = 1;
    int imax = 2;
};

void run_coeffs(const CoeffsArgs& a) {
    auto in = load_ideal(a.common);
    MonomialIdeal M = in.ideal.power(a.power, a.common.enum_cap);
    HilbertSeries hs = a.module == "quotient" ? quotient_series(M) : ideal_series(M);
    std::ostringstream table;
    table << "d: " << hs.dimension() << "\n";
    json polys = json::array();
    for (int i = 0; i <= a.imax; ++i) {
        auto P = hilbert_polynomial(hs, i);
        if (a.common.oracle) {
            // evaluations must reproduce the literal iterated sums of counts
            long k0 = hs.shift() + hs.numerator().degree() - (hs.dimension() + i) + 1;
            for (long k = std::max(k0, 0L); k <= std::max(k0, 0L) + 3; ++k)
                if (P.evaluate(k) != Rat(hs.hilbert_function(k, i)))
                    throw OracleMismatch("polynomial evaluation at iterate " + std::to_string(i));
        }
        polys.push_back(to_json(P));
        table << "i=" << i << ": ";
        for (size_t j = 0; j < P.e.size(); ++j) table << (j ? ", " : "") << to_string(P.e[j]);
        table << "\n";
    }
    if (a.common.oracle) std::cerr << "oracle: polynomial evaluations match iterated sums\n";
    emit(json{{"d", hs.dimension()}, {"polynomials", polys}}, a.common, table.str());
}

struct HVectorArgs {
    CommonOptions common;
    std::string module = "quotient";
    long power = 1;
};

void run_hvector(const HVectorArgs& a) {
    auto in = load_ideal(a.common);
    MonomialIdeal M = in.ideal.power(a.power, a.common.enum_cap);
    bool quotient = a.module == "quotient";
    HilbertSeries hs = quotient ? quotient_series(M) : ideal_series(M);
    if (a.common.oracle) oracle_check_series(hs, M, quotient, a.common.enum_cap);
    auto h = hs.h_vector();
    std::ostringstream table;
    table << "offset: " << h.offset << "\nh: " << int_list(h.entries) << "\n";
    emit(to_json(h), a.common, table.str());
}

struct StrandArgs {
    CommonOptions common;
    int n = 1;
    int m = 1;
    std::vector<int> p;
    long a = 0;
    long b = 0;
    long k = 0;
    bool has_k = false;
    int iterate = 0;
    bool has_i = false;
    long j = 0;
    bool has_j = false;
    long kmax = 0;
    int window = 3;

    // without an explicit --i, use the smallest iterate whose coefficient
    // range reaches j (the value does not depend on the choice)
    int effective_iterate() const {
        if (has_i || !has_j) return iterate;
        return std::max(0, static_cast<int>(j) - n + 1);
    }
};

void print_fit_table(std::ostream& os, const ScanResult& scan, const KPolynomial& fit) {
    os << "k:";
    for (long idx = 0; idx < scan.size(); ++idx) os << " " << scan.k_at(idx);
    os << "\ne:";
    for (long idx = 0; idx < scan.size(); ++idx) os << " " << to_string(scan.values[idx]);
    os << "\ndim:";
    for (long idx = 0; idx < scan.size(); ++idx) os << " " << scan.dims[idx];
    os << "\n";
    if (scan.truncated) os << "truncated: scan stopped at k = " << scan.k_max << " (cap)\n";
    if (!fit.stable) {
        os << "fit: unstable (no polynomial tail with window " << fit.window << ")\n";
        return;
    }
    os << "fit: e(k) = " << poly_to_string(fit.poly) << "  [degree " << fit.degree()
       << ", stable from k = " << fit.stable_from << ", window " << fit.window << "]\n";
    for (const auto& v : fit.verdicts)
        os << "bound " << v.bound << " = " << v.value << ": degree " << v.degree << " -> "
           << (v.pass ? "pass" : "FAIL") << "\n";
}

void finish_scan(const ScanResult& scan, KPolynomial& fit, const BoundContext& ctx,
                 const CommonOptions& common) {
    if (fit.stable) fit.verdicts = verify_degree_bounds(fit, ctx);
    if (!fit.stable && common.require_stable) throw UnstableFit();
}

void run_strand(const StrandArgs& s) {
    BigradedAlgebra A(s.n, s.m, s.p);
    BigradedShift shift{s.a, s.b};
    const int iterate = s.effective_iterate();
    if (s.kmax > 0) {  // scan over k and fit
        if (!s.has_j) throw std::invalid_argument("strand scans need --j");
        auto scan = scan_strand_coefficients(A, shift, iterate, s.j, s.kmax);
        auto fit = scan.size() >= s.window + 2 ? newton_fit(scan, s.window) : KPolynomial{};
        BoundContext ctx;
        ctx.m = s.m;
        ctx.ldim = s.n;
        ctx.iterate = iterate;
        ctx.j = s.j;
        finish_scan(scan, fit, ctx, s.common);
        if (s.common.oracle) {
            for (long k = shift.b; k <= std::min(s.kmax, shift.b + 6); ++k) {
                auto hs = strand_hilbert_series(A, shift, k);
                auto coeffs = extract_coefficients(hilbert_polynomial(hs, iterate));
                Rat series_route = (s.j < static_cast<long>(coeffs.size())) ? coeffs[s.j] : Rat(0);
                if (series_route != Rat(strand_coefficient(A, shift, k, iterate, s.j)))
                    throw OracleMismatch("strand coefficient at k = " + std::to_string(k));
            }
            std::cerr << "oracle: composition sums match the series route\n";
        }
        std::ostringstream table;
        print_fit_table(table, scan, fit);
        emit(to_json(scan, fit), s.common, table.str(), scan_to_csv(scan));
        return;
    }
    if (!s.has_k) throw std::invalid_argument("strand needs --k (one strand) or --kmax (scan)");
    auto dec = strand_decomposition(A, shift, s.k);
    auto hs = strand_hilbert_series(A, shift, s.k);
    json j = to_json(dec);
    j["series"] = to_json(hs);
    std::ostringstream table;
    table << "decomposition:";
    for (const auto& [c, mult] : dec) table << " S(-" << c << ")^" << mult;
    if (dec.empty()) table << " 0";
    table << "\n";
    if (s.has_j) {
        if (!strand_coefficient_in_range(A, iterate, s.j))
            std::cerr << "warning: j = " << s.j << " exceeds n+i-1 = " << s.n + iterate - 1
                      << "; the coefficient is 0 by convention\n";
        Int value = strand_coefficient(A, shift, s.k, iterate, s.j);
        auto [lo, hi] = strand_coefficient_bounds(A, shift, s.k, s.j);
        if (s.common.oracle) {
            auto coeffs = extract_coefficients(hilbert_polynomial(hs, iterate));
            Rat series_route = (s.j < static_cast<long>(coeffs.size())) ? coeffs[s.j] : Rat(0);
            if (series_route != Rat(value)) throw OracleMismatch("strand coefficient");
            std::cerr << "oracle: composition sum matches the series route\n";
        }
        j["coefficient"] = to_string(value);
        j["bounds"] = json::array({to_string(lo), to_string(hi)});
        table << "e(i=" << iterate << ", j=" << s.j << "): " << to_string(value) << "\n"
              << "bounds: [" << to_string(lo) << ", " << to_string(hi) << "]\n";
    }
    emit(j, s.common, table.str());
}

struct ScanPowerArgs {
    CommonOptions common;
    int iterate = 0;
    long j = 0;
    long kmax = 12;
    int window = 3;
};

void run_scan_power(const ScanPowerArgs& a) {
    auto in = load_ideal(a.common);
    const MonomialIdeal& I = in.ideal;
    auto data = power_scan_data(I, a.kmax, a.common.enum_cap, thread_count(a.common));
    auto scan = scan_from_power_data(data, a.iterate, a.j);
    if (a.common.oracle) {
        for (long k = 1; k <= std::min<long>(scan.k_max, 3); ++k) {
            auto Ik = I.power(k, a.common.enum_cap);
            auto hs = ideal_series(Ik);
            for (long t = 0; t <= 8; ++t)
                if (hs.hilbert_function(t) != Ik.count_monomials_of_degree(t, a.common.enum_cap))
                    throw OracleMismatch("series of I^" + std::to_string(k));
        }
        std::cerr << "oracle: power series match counts for small k\n";
    }
    auto fit = scan.size() >= a.window + 2 ? newton_fit(scan, a.window) : KPolynomial{};
    BoundContext ctx;
    ctx.nu = I.num_generators();
    if (I.is_equigenerated()) ctx.ell = fiber_dimension(I);
    auto stab = detect_stabilization(scan, a.window);
    if (stab.determined && !scan.dims.empty()) ctx.ldim = scan.dims.back();
    ctx.iterate = a.iterate;
    ctx.j = a.j;
    finish_scan(scan, fit, ctx, a.common);
    std::ostringstream table;
    print_fit_table(table, scan, fit);
    emit(to_json(scan, fit), a.common, table.str(), scan_to_csv(scan));
}

struct BettiArgs {
    CommonOptions common;
    long k = 1;
};

void run_betti(const BettiArgs& a) {
    auto in = load_ideal(a.common);
    auto bt = betti_table(in.ideal, a.k, a.common.enum_cap, rank_mode(a.common));
    if (a.common.oracle) {
        auto J = in.ideal.power(a.k, a.common.enum_cap);
        if (!euler_characteristic_check(bt, J))
            throw OracleMismatch("euler characteristic vs the series route");
        if (bt.row(0) != J.generator_degree_histogram())
            throw OracleMismatch("beta_0 vs the generator degree histogram");
        std::cerr << "oracle: euler characteristic and generator histogram match\n";
    }
    std::ostringstream table;
    for (const auto& [l, row] : bt.rows) {
        table << "l=" << l << ":";
        for (const auto& [t, beta] : row) table << " t=" << t << "->" << beta;
        table << "\n";
    }
    if (bt.rows.empty()) table << "(zero module)\n";
    emit(to_json(bt), a.common, table.str(), betti_to_csv(bt));
}

struct ScanBettiArgs {
    CommonOptions common;
    int l = 0;
    int iterate = 0;
    long j = 0;
    long kmax = 8;
    int window = 3;
};

void run_scan_betti(const ScanBettiArgs& a) {
    auto in = load_ideal(a.common);
    auto result = scan_betti(in.ideal, a.l, a.iterate, a.j, a.kmax, a.window, a.common.enum_cap,
                             rank_mode(a.common));
    if (a.common.oracle) {
        for (long k = 1; k <= std::min<long>(result.scan.k_max, 3); ++k) {
            auto bt = betti_table(in.ideal, k, a.common.enum_cap, rank_mode(a.common));
            if (!euler_characteristic_check(bt, in.ideal.power(k, a.common.enum_cap)))
                throw OracleMismatch("euler characteristic at k = " + std::to_string(k));
        }
        std::cerr << "oracle: euler characteristics match for small k\n";
    }
    if (!result.fit.stable && a.common.require_stable) throw UnstableFit();
    std::ostringstream table;
    print_fit_table(table, result.scan, result.fit);
    emit(to_json(result.scan, result.fit), a.common, table.str(), scan_to_csv(result.scan));
}

struct FiberArgs {
    CommonOptions common;
};

void run_fiber_dim(const FiberArgs& a) {
    auto in = load_ideal(a.common);
    long ell = fiber_dimension(in.ideal);
    if (a.common.oracle) {
        // a second route: the rank must survive transposition
        std::vector<std::vector<Int>> cols(in.ideal.vars(),
                                           std::vector<Int>(in.ideal.num_generators()));
        for (long g = 0; g < in.ideal.num_generators(); ++g)
            for (int v = 0; v < in.ideal.vars(); ++v)
                cols[v][g] = in.ideal.generators()[g][v];
        if (rank_exact(cols) != ell) throw OracleMismatch("exponent rank vs transpose");
        std::cerr << "oracle: rank agrees with the transposed computation\n";
    }
    emit(json{{"ell", ell}}, a.common, "ell: " + std::to_string(ell) + "\n");
}

struct VerifyArgs {
    CommonOptions common;
    long kmax = 3;
    long tmax = 8;
};

void run_verify(const VerifyArgs& a) {
    auto in = load_ideal(a.common);
    const MonomialIdeal& I = in.ideal;
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    };

    report("minimal generating set is idempotent",
           MonomialIdeal::make(I.vars(), I.generators()) == I);

    bool series_ok = true;
    for (long k = 1; k <= a.kmax && series_ok; ++k) {
        auto Ik = I.power(k, a.common.enum_cap);
        auto hs = ideal_series(Ik);
        auto qs = quotient_series(Ik);
        for (long t = 0; t <= a.tmax && series_ok; ++t) {
            Int cnt = Ik.count_monomials_of_degree(t, a.common.enum_cap);
            series_ok = hs.hilbert_function(t) == cnt &&
                        qs.hilbert_function(t) == monomial_space_dimension(I.vars(), t) - cnt;
        }
    }
    report("series coefficients match brute-force counts", series_ok);

    bool routes_ok = true;
    for (long k = 1; k <= a.kmax && routes_ok; ++k) {
        auto hs = ideal_series(I.power(k, a.common.enum_cap));
        auto h = hs.h_vector();
        for (int i = 0; i <= 2 && routes_ok; ++i) {
            auto coeffs = extract_coefficients(hilbert_polynomial(hs, i));
            for (size_t j = 0; j < coeffs.size() && routes_ok; ++j)
                routes_ok = coeffs[j] == Rat(e_from_h(h, static_cast<long>(j)));
        }
    }
    report("difference formula agrees with the h-vector route", routes_ok);

    bool reject_ok = true;
    {
        auto hs = ideal_series(I);
        auto table = coefficient_table(hs, 3);
        for (int i = 1; i <= 3 && reject_ok; ++i)
            for (int j = 0; j <= hs.dimension() + i - 2 && reject_ok; ++j)
                if (table.has(i, j) && table.has(i - 1, j))
                    reject_ok = table.at(i, j) == table.at(i - 1, j);
    }
    report("consecutive iterates share coefficients", reject_ok);

    bool euler_ok = true;
    if (!I.is_zero()) {
        for (long k = 1; k <= std::min(a.kmax, 3L) && euler_ok; ++k) {
            auto J = I.power(k, a.common.enum_cap);
            euler_ok = euler_characteristic_check(
                betti_table(I, k, a.common.enum_cap, rank_mode(a.common)), J);
        }
    }
    report("koszul euler characteristic matches the series", euler_ok);

    bool hist_ok = true;
    if (!I.is_zero()) {
        for (long k = 1; k <= std::min(a.kmax, 3L) && hist_ok; ++k)
            hist_ok = betti_table(I, k, a.common.enum_cap, rank_mode(a.common)).row(0) ==
                      I.power(k, a.common.enum_cap).generator_degree_histogram();
    }
    report("betti row zero equals the generator histogram", hist_ok);

    bool round_ok = true;
    {
        auto h = ideal_series(I).h_vector();
        if (h.offset == 0 && !h.entries.empty()) {
            std::vector<Int> e;
            for (long j = 0; j <= h.s(); ++j) e.push_back(e_from_h(h, j));
            round_ok = h_from_e(e) == h;
        }
    }
    report("h and e transforms round-trip", round_ok);

    if (failures > 0) throw std::runtime_error(std::to_string(failures) + " verification failures");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hilbert series, iterated Hilbert coefficients, and Koszul Betti "
                 "numbers of monomial ideals, their powers, and bigraded free strands"};
    app.require_subcommand(1);
    app.set_config("--config", "hilbertforge.toml", "Configuration file (TOML-style key=value)",
                   false);

    HilbertArgs hilbert;
    auto* sub_hilbert = app.add_subcommand("hilbert", "Hilbert series of S/I or I");
    add_common(sub_hilbert, hilbert.common, true);
    sub_hilbert->add_option("--module", hilbert.module, "Which module: quotient S/I or the ideal")
        ->check(CLI::IsMember({"quotient", "ideal"}))
        ->capture_default_str();
    sub_hilbert->add_option("--power", hilbert.power, "Replace I by I^k")->check(CLI::NonNegativeNumber);
    sub_hilbert->callback([&] { run_hilbert(hilbert); });

    CoeffsArgs coeffs;
    auto* sub_coeffs = app.add_subcommand("coeffs", "Iterated Hilbert coefficient table");
    add_common(sub_coeffs, coeffs.common, true);
    sub_coeffs->add_option("--module", coeffs.module, "Which module")
        ->check(CLI::IsMember({"quotient", "ideal"}))
        ->capture_default_str();
    sub_coeffs->add_option("--power", coeffs.power, "Replace I by I^k")->check(CLI::NonNegativeNumber);
    sub_coeffs->add_option("--imax", coeffs.imax, "Largest iterate")->capture_default_str();
    sub_coeffs->callback([&] { run_coeffs(coeffs); });

    HVectorArgs hvector;
    auto* sub_hvector = app.add_subcommand("hvector", "h-vector of S/I or I");
    add_common(sub_hvector, hvector.common, true);
    sub_hvector->add_option("--module", hvector.module, "Which module")
        ->check(CLI::IsMember({"quotient", "ideal"}))
        ->capture_default_str();
    sub_hvector->add_option("--power", hvector.power, "Replace I by I^k")->check(CLI::NonNegativeNumber);
    sub_hvector->callback([&] { run_hvector(hvector); });

    StrandArgs strand;
    auto* sub_strand = app.add_subcommand("strand", "Strand A(-a,-b)_k of a bigraded free module");
    add_common(sub_strand, strand.common, false);
    sub_strand->add_option("--n", strand.n, "Number of x variables")->required();
    sub_strand->add_option("--m", strand.m, "Number of y variables")->required();
    sub_strand->add_option("--p", strand.p, "Weights p_1..p_m (comma separated)")
        ->required()
        ->delimiter(',');
    sub_strand->add_option("--a", strand.a, "Twist in the x grading");
    sub_strand->add_option("--b", strand.b, "Twist in the y grading");
    sub_strand->add_option("--k", strand.k, "Strand index")->each([&](const std::string&) {
        strand.has_k = true;
    });
    sub_strand->add_option("--i", strand.iterate, "Iterate")->each([&](const std::string&) {
        strand.has_i = true;
    });
    sub_strand->add_option("--j", strand.j, "Coefficient index")->each([&](const std::string&) {
        strand.has_j = true;
    });
    sub_strand->add_option("--kmax", strand.kmax, "Scan strands k = 1..kmax and fit");
    sub_strand->add_option("--window", strand.window, "Confirming points for the fit")
        ->capture_default_str();
    sub_strand->callback([&] { run_strand(strand); });

    ScanPowerArgs scan_power;
    auto* sub_scan = app.add_subcommand("scan-power", "Scan e^i_j(I^k) over k and fit");
    add_common(sub_scan, scan_power.common, true);
    sub_scan->add_option("--i", scan_power.iterate, "Iterate")->capture_default_str();
    sub_scan->add_option("--j", scan_power.j, "Coefficient index")->required();
    sub_scan->add_option("--kmax", scan_power.kmax, "Largest power")->capture_default_str();
    sub_scan->add_option("--window", scan_power.window, "Confirming points for the fit")
        ->capture_default_str();
    sub_scan->callback([&] { run_scan_power(scan_power); });

    BettiArgs betti;
    auto* sub_betti = app.add_subcommand("betti", "Graded Betti numbers of I^k");
    add_common(sub_betti, betti.common, true);
    sub_betti->add_option("--k", betti.k, "Power")->capture_default_str();
    sub_betti->callback([&] { run_betti(betti); });

    ScanBettiArgs scan_b;
    auto* sub_scan_betti =
        app.add_subcommand("scan-betti", "Scan e^i_j(Tor_l(S/m, I^k)) over k and fit");
    add_common(sub_scan_betti, scan_b.common, true);
    sub_scan_betti->add_option("--l", scan_b.l, "Homological degree")->required();
    sub_scan_betti->add_option("--i", scan_b.iterate, "Iterate")->capture_default_str();
    sub_scan_betti->add_option("--j", scan_b.j, "Coefficient index")->required();
    sub_scan_betti->add_option("--kmax", scan_b.kmax, "Largest power")->capture_default_str();
    sub_scan_betti->add_option("--window", scan_b.window, "Confirming points for the fit")
        ->capture_default_str();
    sub_scan_betti->callback([&] { run_scan_betti(scan_b); });

    FiberArgs fiber;
    auto* sub_fiber = app.add_subcommand("fiber-dim", "Analytic spread of an equigenerated ideal");
    add_common(sub_fiber, fiber.common, true);
    sub_fiber->callback([&] { run_fiber_dim(fiber); });

    VerifyArgs verify;
    auto* sub_verify = app.add_subcommand("verify", "Run the oracle battery on one ideal");
    add_common(sub_verify, verify.common, true);
    sub_verify->add_option("--kmax", verify.kmax, "Largest power checked")->capture_default_str();
    sub_verify->add_option("--tmax", verify.tmax, "Largest degree checked")->capture_default_str();
    sub_verify->callback([&] { run_verify(verify); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const EnumerationCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnstableFit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
