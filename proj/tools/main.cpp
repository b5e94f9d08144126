// anzahl: exact counts, oracle verification, bound checks and identity
// verification for non-degenerate hermitian and symplectic geometries over
// finite fields.
//
// Hermitian convention: --q is the BASE parameter; the field has q^2
// elements (so --q 2 works in GF(4)). Symplectic --q is the field order and
// --dim the raw ambient dimension.

#include <CLI11.hpp>

#include <iostream>

#include "anzahl/campaign.hpp"
#include "anzahl/hermitian.hpp"
#include "anzahl/symplectic.hpp"

using namespace anzahl;

namespace {

int emit(const RunReport& report, const std::string& format) {
    if (format == "json")
        std::cout << report_to_json(report) << "\n";
    else if (format == "csv")
        std::cout << report_to_csv(report);
    else
        std::cout << report_to_plain(report);
    return report.exit_code();
}

/// "2..16" -> every prime power in [2,16]; "2,3,9" -> list; "4" -> {4}.
std::vector<long> parse_q_values(const std::string& text) {
    std::vector<long> out;
    auto push_checked = [&](long v) {
        factor_prime_power(BigInt(v));
        out.push_back(v);
    };
    auto range = text.find("..");
    if (range != std::string::npos) {
        long lo = std::stol(text.substr(0, range));
        long hi = std::stol(text.substr(range + 2));
        for (long v = lo; v <= hi; ++v)
            if (is_prime_power(BigInt(v))) out.push_back(v);
        if (out.empty()) throw Error("no prime powers in range " + text);
        return out;
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        push_checked(std::stol(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

struct CountArgs {
    std::string geometry = "hermitian";
    std::string stat;
    long q = 0;
    long n = -1, dim = -1;
    long i = 0, j = -1, k = -1;
    bool symbolic = false;
    std::string format = "plain";
};

int emit_count(const CountArgs& a, const std::string& value) {
    if (a.format == "plain") {
        std::cout << value << "\n";
        return 0;
    }
    RunReport report;
    report.command = "count";
    report.grid = {{"geometry", a.geometry}, {"stat", a.stat}};
    ReportItem it;
    it.kind = "value";
    it.statistic = a.stat;
    if (!a.symbolic) it.params.emplace_back("q", a.q);
    if (a.n >= 0) it.params.emplace_back("n", a.n);
    if (a.dim >= 0) it.params.emplace_back("dim", a.dim);
    it.params.emplace_back("i", a.i);
    if (a.j >= 0) it.params.emplace_back("j", a.j);
    if (a.k >= 0) it.params.emplace_back("k", a.k);
    it.value = value;
    report.items.push_back(std::move(it));
    return emit(report, a.format);
}

std::string count_hermitian(const CountArgs& a) {
    const long n = a.n;
    if (n < 0) throw Error("hermitian statistics need --n");
    const LaurentPoly Q = LaurentPoly::q();
    const BigInt q(a.q);
    if (a.stat == "alpha")
        return a.symbolic ? hermitian::alpha(a.i, a.j, n, Q).to_string()
                          : hermitian::alpha_count(a.i, a.j, n, q).get_str();
    if (a.stat == "beta")
        return a.symbolic ? hermitian::beta(a.i, a.j, n, a.k, Q).to_string()
                          : hermitian::beta_count(a.i, a.j, n, a.k, q).get_str();
    if (a.stat == "gamma") {
        long k = (a.k < 0) ? n - a.j : a.k;  // default: the full-span case
        return a.symbolic ? hermitian::gamma(a.i, a.j, n, k, Q).to_string()
                          : hermitian::gamma_count(a.i, a.j, n, k, q).get_str();
    }
    if (a.stat == "rho")
        return a.symbolic ? hermitian::rho_symbolic(a.j, a.k, n).to_string()
                          : to_decimal_string(hermitian::rho(a.j, a.k, n, Rational(a.q)));
    throw Error("unknown statistic " + a.stat);
}

std::string count_symplectic(const CountArgs& a) {
    const long dim = a.dim;
    if (dim < 0) throw Error("symplectic statistics need --dim");
    const LaurentPoly Q = LaurentPoly::q();
    const BigInt q(a.q);
    if (a.stat == "alpha")
        return a.symbolic ? symplectic::alpha(a.i, a.j, dim, Q).to_string()
                          : symplectic::alpha_count(a.i, a.j, dim, q).get_str();
    if (a.stat == "beta")
        return a.symbolic ? symplectic::beta(a.i, a.j, dim, a.k, Q).to_string()
                          : symplectic::beta_count(a.i, a.j, dim, a.k, q).get_str();
    if (a.stat == "gamma") {
        long k = (a.k < 0) ? dim - a.j : a.k;  // raw dims; odd i/j/k give 0
        if (a.i % 2 != 0 || a.j % 2 != 0 || k % 2 != 0) return "0";
        return a.symbolic ? symplectic::gamma(a.i / 2, a.j / 2, dim, k, Q).to_string()
                          : symplectic::gamma_count(a.i / 2, a.j / 2, dim, k, q).get_str();
    }
    if (a.stat == "rho") {
        if (a.j % 2 != 0 || a.k % 2 != 0)
            throw Error("symplectic rho needs even raw dimensions --j and --k");
        return a.symbolic
                   ? symplectic::rho_symbolic(a.j / 2, a.k / 2, dim / 2).to_string()
                   : to_decimal_string(symplectic::rho(a.j / 2, a.k / 2, dim / 2, Rational(a.q)));
    }
    throw Error("unknown statistic " + a.stat);
}

FormKind parse_geometry(const std::string& g) {
    if (g == "hermitian") return FormKind::hermitian;
    if (g == "symplectic") return FormKind::symplectic;
    throw Error("unknown geometry " + g + " (expected hermitian or symplectic)");
}

RunReport table_report(const std::string& geometry, const std::string& stat, long q0, long max_n,
                       long max_dim) {
    RunReport report;
    report.command = "table";
    report.grid = {{"geometry", geometry}, {"stat", stat}, {"q", std::to_string(q0)}};
    const BigInt q(q0);
    if (parse_geometry(geometry) == FormKind::hermitian) {
        for (long n = 2; n <= max_n; ++n) {
            for (long j = 0; j <= n; ++j)
                for (long i = 0; i <= std::min(j, n - j); ++i) {
                    ReportItem it;
                    it.kind = "value";
                    it.statistic = stat;
                    it.params = {{"q", q0}, {"n", n}, {"i", i}, {"j", j}};
                    if (stat == "alpha")
                        it.value = hermitian::alpha_count(i, j, n, q).get_str();
                    else if (stat == "gamma" && j <= n - 1)
                        it.value = hermitian::gamma_span_count(i, j, n, q).get_str();
                    else if (stat == "beta" && j + i <= n - 1)
                        it.value = hermitian::beta_count(i, j, n, n - 1, q).get_str();
                    else
                        continue;
                    report.items.push_back(std::move(it));
                }
            if (stat == "rho")
                for (long j = 0; j <= n - 1; ++j)
                    for (long k = 0; k <= n - 1 && j + k <= n; ++k) {
                        ReportItem it;
                        it.kind = "value";
                        it.statistic = "rho";
                        it.params = {{"q", q0}, {"n", n}, {"j", j}, {"k", k}};
                        it.value = to_decimal_string(hermitian::rho(j, k, n, Rational(q0)));
                        report.items.push_back(std::move(it));
                    }
        }
        return report;
    }
    for (long dim = 2; dim <= max_dim; dim += 2) {
        const long n = dim / 2;
        for (long j = 0; j <= dim; ++j)
            for (long i = j % 2; i <= j; i += 2) {
                if ((j - i) / 2 < j - n) continue;
                ReportItem it;
                it.kind = "value";
                it.statistic = stat;
                it.params = {{"q", q0}, {"dim", dim}, {"i", i}, {"j", j}};
                if (stat == "alpha")
                    it.value = symplectic::alpha_count(i, j, dim, q).get_str();
                else if (stat == "gamma" && i % 2 == 0 && j % 2 == 0 && j / 2 <= n - 1 &&
                         i / 2 <= n - j / 2)
                    it.value = symplectic::gamma_span_count(i / 2, j / 2, dim, q).get_str();
                else if (stat == "beta" && j <= dim - 2 && (j - i) / 2 >= j - (dim - 2) / 2)
                    it.value = symplectic::beta_count(i, j, dim, dim - 2, q).get_str();
                else
                    continue;
                report.items.push_back(std::move(it));
            }
        if (stat == "rho")
            for (long jh = 0; jh <= n - 1; ++jh)
                for (long kh = 0; kh <= n - 1 && jh + kh <= n; ++kh) {
                    ReportItem it;
                    it.kind = "value";
                    it.statistic = "rho";
                    it.params = {{"q", q0}, {"dim", dim}, {"j", 2 * jh}, {"k", 2 * kh}};
                    it.value = to_decimal_string(symplectic::rho(jh, kh, n, Rational(q0)));
                    report.items.push_back(std::move(it));
                }
    }
    return report;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact Anzahl computations for non-degenerate hermitian and symplectic geometries.\n"
        "Hermitian convention: --q is the base parameter, the field is GF(q^2)."};
    app.require_subcommand(1);

    CountArgs ca;
    auto* count = app.add_subcommand("count", "evaluate one statistic exactly");
    count->add_option("--geometry", ca.geometry, "hermitian | symplectic");
    count->add_option("--stat", ca.stat, "alpha | beta | gamma | rho | segre")->required();
    count->add_option("--q", ca.q, "prime power (hermitian: base parameter, field GF(q^2))");
    count->add_option("--n", ca.n, "hermitian ambient dimension / segre ambient");
    count->add_option("--dim", ca.dim, "symplectic ambient dimension (even, raw)");
    count->add_option("--i", ca.i, "singularity index (raw)");
    count->add_option("--j", ca.j, "subspace dimension (raw)");
    count->add_option("--k", ca.k, "partner dimension (raw; gamma defaults to full span)");
    count->add_flag("--symbolic", ca.symbolic, "evaluate at the indeterminate q");
    count->add_option("--format", ca.format, "plain | json | csv");

    std::string v_geometry = "symplectic", v_format = "plain";
    long v_q = 2, v_max_n = 3, v_max_dim = 6;
    OracleOptions v_opts;
    auto* verify = app.add_subcommand("verify", "sweep oracle-vs-formula comparisons");
    verify->add_option("--geometry", v_geometry, "hermitian | symplectic")->required();
    verify->add_option("--q", v_q, "prime power (hermitian: base parameter)")->required();
    verify->add_option("--max-n", v_max_n, "hermitian: largest ambient dimension");
    verify->add_option("--max-dim", v_max_dim, "symplectic: largest ambient dimension (even)");
    verify->add_option("--budget", v_opts.budget, "max enumerated objects per item");
    verify->add_option("--jobs", v_opts.jobs, "worker threads for enumeration");
    verify->add_option("--format", v_format, "plain | json | csv");

    std::string b_which = "all", b_q = "2..16", b_format = "plain";
    BoundsGrid b_grid;
    int b_jobs = 1;
    auto* boundscmd = app.add_subcommand("bounds", "check every inequality on a grid");
    boundscmd->add_option("--which", b_which,
                          "psi-min | phi-min-upper | phi-min-lower | phi-plus-lower | summand | "
                          "rho-hermitian | rho-symplectic | literature | all");
    boundscmd->add_option("--q", b_q, "prime power, list (2,3,4) or range (2..16)");
    boundscmd->add_option("--max-ab", b_grid.max_ab, "largest a and b");
    boundscmd->add_option("--max-jk", b_grid.max_jk, "largest j and k");
    boundscmd->add_option("--extra-n", b_grid.extra_n, "sweep n up to j+k+extra-n");
    boundscmd->add_option("--a", b_grid.fixed_a, "pin a");
    boundscmd->add_option("--b", b_grid.fixed_b, "pin b");
    boundscmd->add_option("--j", b_grid.fixed_j, "pin j");
    boundscmd->add_option("--k", b_grid.fixed_k, "pin k");
    boundscmd->add_option("--n", b_grid.fixed_n, "pin n");
    boundscmd->add_option("--jobs", b_jobs, "worker threads");
    boundscmd->add_option("--format", b_format, "plain | json | csv");

    std::string i_geometry = "hermitian", i_format = "plain";
    long i_max_j = 6, i_max_n = 12;
    int i_jobs = 1;
    auto* identity = app.add_subcommand("identity", "verify the recursion identities symbolically");
    identity->add_option("--geometry", i_geometry, "hermitian | symplectic")->required();
    identity->add_option("--max-j", i_max_j, "largest j (symplectic: half-index)");
    identity->add_option("--max-n", i_max_n, "largest n (symplectic: half-index)");
    identity->add_option("--jobs", i_jobs, "worker threads");
    identity->add_option("--format", i_format, "plain | json | csv");

    std::string t_geometry = "hermitian", t_stat = "alpha", t_format = "csv";
    long t_q = 2, t_max_n = 4, t_max_dim = 6;
    auto* table = app.add_subcommand("table", "tabulate one statistic over a grid");
    table->add_option("--geometry", t_geometry, "hermitian | symplectic");
    table->add_option("--stat", t_stat, "alpha | beta | gamma | rho");
    table->add_option("--q", t_q, "prime power");
    table->add_option("--max-n", t_max_n, "hermitian: largest n");
    table->add_option("--max-dim", t_max_dim, "symplectic: largest ambient dimension");
    table->add_option("--format", t_format, "plain | json | csv");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*count) {
            if (ca.stat == "segre") {
                if (ca.n < 0) throw Error("segre needs --n");
                return emit_count(ca, ca.symbolic
                                          ? segre_count(ca.n, ca.k, ca.j, LaurentPoly::q()).to_string()
                                          : segre_count(ca.n, ca.k, ca.j, BigInt(ca.q)).get_str());
            }
            if (!ca.symbolic) {
                if (ca.q <= 0) throw Error("numeric evaluation needs --q");
                factor_prime_power(BigInt(ca.q));
            }
            return emit_count(ca, (parse_geometry(ca.geometry) == FormKind::hermitian)
                                      ? count_hermitian(ca)
                                      : count_symplectic(ca));
        }
        if (*verify) {
            RunReport report = (parse_geometry(v_geometry) == FormKind::hermitian)
                                   ? verify_hermitian_campaign(v_q, v_max_n, v_opts)
                                   : verify_symplectic_campaign(v_q, v_max_dim, v_opts);
            return emit(report, v_format);
        }
        if (*boundscmd) {
            b_grid.qs = parse_q_values(b_q);
            return emit(bounds_campaign(b_which, b_grid, b_jobs), b_format);
        }
        if (*identity)
            return emit(identity_campaign(parse_geometry(i_geometry), i_max_j, i_max_n, i_jobs),
                        i_format);
        if (*table) return emit(table_report(t_geometry, t_stat, t_q, t_max_n, t_max_dim), t_format);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
