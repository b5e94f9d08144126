#include "anzahl/campaign.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>

#include "anzahl/hermitian.hpp"
#include "anzahl/identities.hpp"
#include "anzahl/kernels.hpp"
#include "anzahl/symplectic.hpp"

namespace anzahl {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

using Params = std::vector<std::pair<std::string, long>>;

/// Runs one oracle-vs-formula comparison; InstanceTooLarge becomes a skip.
template <class OracleFn, class FormulaFn>
ReportItem oracle_item(const std::string& stat, Params params, std::uint64_t estimate,
                       OracleFn&& oracle_fn, FormulaFn&& formula_fn) {
    ReportItem it;
    it.kind = "oracle";
    it.statistic = stat;
    it.params = std::move(params);
    it.enumerated = estimate;
    auto start = Clock::now();
    try {
        Rational oracle_value = oracle_fn();
        Rational formula_value = formula_fn();
        it.value = to_decimal_string(formula_value);
        it.expected = to_decimal_string(oracle_value);
        it.passed = (oracle_value == formula_value);
    } catch (const InstanceTooLarge& e) {
        it.status = "skipped";
        it.reason = e.what();
        it.enumerated = 0;
    }
    it.elapsed_ms = ms_since(start);
    return it;
}

std::uint64_t to_u64(const BigInt& v) {
    return v.fits_ulong_p() ? static_cast<std::uint64_t>(v.get_ui()) : 0;
}

}  // namespace

RunReport verify_hermitian_campaign(long base_q, long max_n, const OracleOptions& opts) {
    auto start = Clock::now();
    RunReport report;
    report.command = "verify";
    report.grid = {{"geometry", "hermitian"},
                   {"q", std::to_string(base_q)},
                   {"max-n", std::to_string(max_n)},
                   {"budget", std::to_string(opts.budget)}};
    const BigInt q(base_q);
    auto field = construct_field(base_q * base_q);

    for (long n = 2; n <= max_n; ++n) {
        Oracle oracle(Form::standard(FormKind::hermitian, n, field), opts);

        // alpha: one histogram sweep per j covers every i, including the
        // classes outside the formula domain, which must be empty.
        for (long j = 0; j <= n; ++j) {
            std::uint64_t estimate = to_u64(oracle.estimate_alpha(j));
            std::vector<BigInt> hist;
            bool skipped = false;
            ReportItem skip_item;
            try {
                hist = oracle.alpha_histogram(j);
            } catch (const InstanceTooLarge& e) {
                skipped = true;
                skip_item.status = "skipped";
                skip_item.reason = e.what();
            }
            for (long i = 0; i <= j; ++i) {
                Params ps{{"q", base_q}, {"n", n}, {"i", i}, {"j", j}};
                if (skipped) {
                    ReportItem it = skip_item;
                    it.kind = "oracle";
                    it.statistic = "alpha";
                    it.params = ps;
                    report.items.push_back(std::move(it));
                    continue;
                }
                ReportItem it;
                it.kind = "oracle";
                it.statistic = "alpha";
                it.params = ps;
                it.enumerated = estimate;
                BigInt formula =
                    (i <= std::min(j, n - j)) ? hermitian::alpha_count(i, j, n, q) : BigInt(0);
                it.value = formula.get_str();
                it.expected = hist[i].get_str();
                it.passed = (formula == hist[i]);
                report.items.push_back(std::move(it));
            }
        }

        for (long j = 0; j <= n; ++j)
            for (long i = 0; i <= std::min(j, n - j); ++i) {
                for (long k = j + i; k <= n - 1; ++k)
                    report.items.push_back(oracle_item(
                        "beta", {{"q", base_q}, {"n", n}, {"i", i}, {"j", j}, {"k", k}},
                        to_u64(oracle.estimate_beta(j, k)),
                        [&] { return Rational(oracle.beta(i, j, k)); },
                        [&] { return Rational(hermitian::beta_count(i, j, n, k, q)); }));
                if (j <= n - 1)
                    for (long k = 0; k <= n - j; ++k)
                        report.items.push_back(oracle_item(
                            "gamma", {{"q", base_q}, {"n", n}, {"i", i}, {"j", j}, {"k", k}},
                            to_u64(oracle.estimate_gamma(j, k)),
                            [&] { return Rational(oracle.gamma(i, j, k)); },
                            [&] { return Rational(hermitian::gamma_count(i, j, n, k, q)); }));
            }

        for (long j = 0; j <= n - 1; ++j)
            for (long k = 0; k <= n - 1 && j + k <= n; ++k)
                report.items.push_back(
                    oracle_item("rho", {{"q", base_q}, {"n", n}, {"j", j}, {"k", k}},
                                to_u64(oracle.estimate_rho(j, k)),
                                [&] { return oracle.rho(j, k); },
                                [&] { return hermitian::rho(j, k, n, Rational(base_q)); }));
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

RunReport verify_symplectic_campaign(long q_order, long max_dim, const OracleOptions& opts) {
    auto start = Clock::now();
    RunReport report;
    report.command = "verify";
    report.grid = {{"geometry", "symplectic"},
                   {"q", std::to_string(q_order)},
                   {"max-dim", std::to_string(max_dim)},
                   {"budget", std::to_string(opts.budget)}};
    const BigInt q(q_order);
    auto field = construct_field(q_order);

    for (long two_n = 2; two_n <= max_dim; two_n += 2) {
        const long n = two_n / 2;
        Oracle oracle(Form::standard(FormKind::symplectic, two_n, field), opts);

        for (long j = 0; j <= two_n; ++j) {
            std::uint64_t estimate = to_u64(oracle.estimate_alpha(j));
            std::vector<BigInt> hist;
            bool skipped = false;
            std::string reason;
            try {
                hist = oracle.alpha_histogram(j);
            } catch (const InstanceTooLarge& e) {
                skipped = true;
                reason = e.what();
            }
            for (long i = 0; i <= j; ++i) {
                ReportItem it;
                it.kind = "oracle";
                it.statistic = "alpha";
                it.params = {{"q", q_order}, {"dim", two_n}, {"i", i}, {"j", j}};
                if (skipped) {
                    it.status = "skipped";
                    it.reason = reason;
                    report.items.push_back(std::move(it));
                    continue;
                }
                it.enumerated = estimate;
                bool in_domain = ((j - i) % 2 == 0) && ((j - i) / 2 >= j - n);
                BigInt formula = in_domain ? symplectic::alpha_count(i, j, two_n, q) : BigInt(0);
                it.value = formula.get_str();
                it.expected = hist[i].get_str();
                it.passed = (formula == hist[i]);
                report.items.push_back(std::move(it));
            }
        }

        for (long j = 0; j <= two_n; ++j)
            for (long i = j % 2; i <= j; i += 2) {
                const long ell = (j - i) / 2;
                if (ell < j - n) continue;  // empty class, no representative
                for (long two_k = j + (j % 2); two_k <= two_n - 2; two_k += 2) {
                    if (ell < j - two_k / 2) continue;
                    report.items.push_back(oracle_item(
                        "beta", {{"q", q_order}, {"dim", two_n}, {"i", i}, {"j", j}, {"k", two_k}},
                        to_u64(oracle.estimate_beta(j, two_k)),
                        [&] { return Rational(oracle.beta(i, j, two_k)); },
                        [&] { return Rational(symplectic::beta_count(i, j, two_n, two_k, q)); }));
                }
            }

        for (long jh = 0; jh <= n; ++jh)
            for (long ih = 0; ih <= std::min(jh, n - jh); ++ih)
                for (long kh = 0; jh + kh <= n; ++kh)
                    report.items.push_back(oracle_item(
                        "gamma",
                        {{"q", q_order}, {"dim", two_n}, {"i", 2 * ih}, {"j", 2 * jh}, {"k", 2 * kh}},
                        to_u64(oracle.estimate_gamma(2 * jh, 2 * kh)),
                        [&] { return Rational(oracle.gamma(2 * ih, 2 * jh, 2 * kh)); },
                        [&] {
                            return Rational(symplectic::gamma_count(ih, jh, two_n, 2 * kh, q));
                        }));

        for (long jh = 0; jh <= n - 1; ++jh)
            for (long kh = 0; kh <= n - 1 && jh + kh <= n; ++kh)
                report.items.push_back(oracle_item(
                    "rho", {{"q", q_order}, {"dim", two_n}, {"j", 2 * jh}, {"k", 2 * kh}},
                    to_u64(oracle.estimate_rho(2 * jh, 2 * kh)),
                    [&] { return oracle.rho(2 * jh, 2 * kh); },
                    [&] { return symplectic::rho(jh, kh, n, Rational(q_order)); }));
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

namespace {

ReportItem bound_item(const BoundCheck& c) {
    ReportItem it;
    it.kind = "bound";
    it.statistic = c.bound_id;
    it.params = c.params;
    it.value = to_decimal_string(c.lhs);
    it.expected = to_decimal_string(c.rhs);
    it.passed = c.holds;
    return it;
}

ReportItem failed_item(const char* kind, const std::string& stat, const std::string& why) {
    ReportItem it;
    it.kind = kind;
    it.statistic = stat;
    it.passed = false;
    it.reason = why;
    return it;
}

std::vector<long> sweep_values(long fixed, long lo, long hi) {
    if (fixed >= 0) return {fixed};
    std::vector<long> v;
    for (long x = lo; x <= hi; ++x) v.push_back(x);
    return v;
}

}  // namespace

RunReport bounds_campaign(const std::string& which, const BoundsGrid& grid, int jobs) {
    auto start = Clock::now();
    RunReport report;
    report.command = "bounds";
    std::string qs_echo;
    for (long q0 : grid.qs) qs_echo += (qs_echo.empty() ? "" : ",") + std::to_string(q0);
    report.grid = {{"which", which},
                   {"q", qs_echo},
                   {"max-ab", std::to_string(grid.max_ab)},
                   {"max-jk", std::to_string(grid.max_jk)}};
    static const char* known[] = {"all",          "psi-min",       "phi-min-upper",
                                  "phi-min-lower", "phi-plus-lower", "summand",
                                  "rho-hermitian", "rho-symplectic", "literature"};
    if (std::find_if(std::begin(known), std::end(known),
                     [&](const char* k) { return which == k; }) == std::end(known))
        throw Error("unknown bound id: " + which);
    bool all = (which == "all");

    // Collect the work as closures so the grid sweep can fan out; each
    // closure appends only to its own slot, merged in deterministic order.
    std::vector<std::function<std::vector<ReportItem>()>> tasks;
    auto add_task = [&](std::function<std::vector<BoundCheck>()> fn, const char* what) {
        tasks.push_back([fn = std::move(fn), what]() {
            std::vector<ReportItem> items;
            try {
                for (const auto& c : fn()) items.push_back(bound_item(c));
            } catch (const Error& e) {
                items.push_back(failed_item("bound", what, e.what()));
            }
            return items;
        });
    };

    for (long q0 : grid.qs) {
        Rational q(q0);
        if (all || which == "psi-min")
            for (long a : sweep_values(grid.fixed_a, 1, grid.max_ab))
                add_task([=] { return bounds::check_psi_min_bounds(a, q); }, "psi-min");
        if (all || which == "phi-min-upper")
            for (long a : sweep_values(grid.fixed_a, 2, grid.max_ab))
                for (long b : sweep_values(grid.fixed_b, 0, grid.max_ab))
                    add_task([=] { return std::vector<BoundCheck>{
                                       bounds::check_phi_min_upper(a, b, q)}; },
                             "phi-min-upper");
        if (all || which == "phi-min-lower")
            for (long a : sweep_values(grid.fixed_a, 2, grid.max_ab))
                for (long b : sweep_values(grid.fixed_b, 0, grid.max_ab))
                    add_task([=] { return std::vector<BoundCheck>{
                                       bounds::check_phi_min_lower(a, b, q)}; },
                             "phi-min-lower");
        if (all || which == "phi-plus-lower")
            for (long a : sweep_values(grid.fixed_a, 2, grid.max_ab))
                add_task([=] { return std::vector<BoundCheck>{bounds::check_phi_plus_lower(a, q)}; },
                         "phi-plus-lower");
        if (all || which == "summand")
            for (long j : sweep_values(grid.fixed_j, 2, grid.max_jk))
                for (long k : sweep_values(grid.fixed_k, j, grid.max_jk)) {
                    if (k < j) continue;
                    for (long m = 0; m <= j - 1; ++m)
                        add_task([=] { return std::vector<BoundCheck>{
                                           bounds::check_summand_monotonicity(j, k, m, q)}; },
                                 "summand");
                }
        if (all || which == "rho-hermitian" || which == "rho-symplectic" || which == "literature")
            for (long j : sweep_values(grid.fixed_j, 1, grid.max_jk))
                for (long k : sweep_values(grid.fixed_k, 1, grid.max_jk))
                    for (long n : sweep_values(grid.fixed_n, j + k, j + k + grid.extra_n)) {
                        if (n < j + k) continue;
                        if (all || which == "rho-hermitian")
                            add_task([=] { return std::vector<BoundCheck>{
                                               bounds::check_rho_hermitian_bound(j, k, n, q)}; },
                                     "rho-hermitian");
                        if (all || which == "rho-symplectic")
                            add_task([=] { return std::vector<BoundCheck>{
                                               bounds::check_rho_symplectic_bound(j, k, n, q)}; },
                                     "rho-symplectic");
                        if (all || which == "literature") {
                            add_task([=] { return bounds::check_literature_constants(
                                               FormKind::hermitian, j, k, n, q); },
                                     "literature");
                            add_task([=] { return bounds::check_literature_constants(
                                               FormKind::symplectic, j, k, n, q); },
                                     "literature");
                        }
                    }
    }

    std::vector<std::vector<ReportItem>> results(tasks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(jobs, 1))
#endif
    for (long t = 0; t < static_cast<long>(tasks.size()); ++t) results[t] = tasks[t]();
    for (auto& r : results)
        for (auto& it : r) report.items.push_back(std::move(it));

    report.elapsed_ms = ms_since(start);
    return report;
}

RunReport identity_campaign(FormKind geometry, long max_j, long max_n, int jobs) {
    auto start = Clock::now();
    RunReport report;
    report.command = "identity";
    report.grid = {{"geometry", geometry == FormKind::hermitian ? "hermitian" : "symplectic"},
                   {"max-j", std::to_string(max_j)},
                   {"max-n", std::to_string(max_n)}};

    std::vector<std::array<long, 3>> tuples;
    for (long n = 2; n <= max_n; ++n)
        for (long j = 1; j <= std::min(max_j, n - 1); ++j)
            for (long i = 0; i <= std::min(j, n - j); ++i) tuples.push_back({i, j, n});

    std::vector<std::vector<ReportItem>> results(tuples.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(jobs, 1))
#endif
    for (long t = 0; t < static_cast<long>(tuples.size()); ++t) {
        auto [i, j, n] = tuples[t];
        std::vector<ReportItem> items;
        ReportItem rec;
        rec.kind = "identity";
        rec.statistic = "recursion";
        rec.params = {{"i", i}, {"j", j}, {"n", n}};
        try {
            IdentityResult r = (geometry == FormKind::hermitian)
                                   ? verify_hermitian_recursion(i, j, n)
                                   : verify_symplectic_recursion(i, j, n);
            rec.passed = r.holds;
            rec.value = r.holds ? "0" : r.witness.to_string();
        } catch (const Error& e) {
            rec.passed = false;
            rec.reason = e.what();
        }
        items.push_back(std::move(rec));

        ReportItem diffs;
        diffs.kind = "identity";
        diffs.statistic = "beta-differences";
        diffs.params = {{"i", i}, {"j", j}, {"n", n}};
        try {
            long checked = verify_beta_differences(geometry, i, j, n);
            diffs.passed = true;
            diffs.value = std::to_string(checked);
        } catch (const Error& e) {
            diffs.passed = false;
            diffs.reason = e.what();
        }
        items.push_back(std::move(diffs));
        results[t] = std::move(items);
    }
    for (auto& r : results)
        for (auto& it : r) report.items.push_back(std::move(it));

    report.elapsed_ms = ms_since(start);
    return report;
}

}  // namespace anzahl
