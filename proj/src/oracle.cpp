#include "anzahl/oracle.hpp"

#include "anzahl/kernels.hpp"

namespace anzahl {

Oracle::Oracle(Form form, OracleOptions options) : form_(std::move(form)), opts_(options) {
    if (!form_.non_degenerate()) throw DegenerateForm("oracle needs a non-degenerate form");
}

void Oracle::check_budget(const BigInt& estimate, const char* what) const {
    if (estimate > BigInt(static_cast<unsigned long>(opts_.budget)))
        throw InstanceTooLarge(std::string(what) + ": estimated " + estimate.get_str() +
                               " objects exceeds budget " + std::to_string(opts_.budget));
}

BigInt Oracle::estimate_alpha(long j) const {
    return gauss_count(ambient_dim(), j, BigInt(form_.field()->order()));
}

BigInt Oracle::estimate_beta(long j, long k) const {
    return gauss_count(ambient_dim(), j, BigInt(form_.field()->order())) +
           gauss_count(ambient_dim() - j, k - j, BigInt(form_.field()->order()));
}

BigInt Oracle::estimate_gamma(long j, long k) const {
    const BigInt q(form_.field()->order());
    return gauss_count(ambient_dim(), j, q) + gauss_count(ambient_dim(), k, q);
}

BigInt Oracle::estimate_rho(long j, long k) const {
    // Enumeration phase only; the pair phase is re-checked against the
    // budget once the two list sizes are known exactly.
    const BigInt q(form_.field()->order());
    return gauss_count(ambient_dim(), j, q) + gauss_count(ambient_dim(), k, q);
}

std::vector<BigInt> Oracle::alpha_histogram(long j) const {
    if (j < 0 || j > ambient_dim()) throw ParamOutOfRange("oracle alpha: 0 <= j <= n");
    check_budget(estimate_alpha(j), "oracle alpha");
    SubspaceEnumerator en(form_.field(), ambient_dim(), j);
    const std::uint64_t total = en.size_u64();
    auto hist = histogram(total, j + 1, opts_.jobs, [&](std::uint64_t idx) {
        return form_.classify(en.at(idx)).singularity_index;
    });
    std::vector<BigInt> out(hist.size());
    for (std::size_t i = 0; i < hist.size(); ++i) out[i] = BigInt(static_cast<unsigned long>(hist[i]));
    return out;
}

BigInt Oracle::alpha(long i, long j) const {
    if (i < 0 || i > j) throw ParamOutOfRange("oracle alpha: 0 <= i <= j");
    return alpha_histogram(j).at(static_cast<std::size_t>(i));
}

Subspace Oracle::representative(long i, long j, long skip) const {
    if (i < 0 || i > j || j < 0 || j > ambient_dim())
        throw ParamOutOfRange("oracle representative: 0 <= i <= j <= n");
    check_budget(estimate_alpha(j), "oracle representative");
    SubspaceEnumerator en(form_.field(), ambient_dim(), j);
    const std::uint64_t total = en.size_u64();
    long remaining = skip;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Subspace s = en.at(idx);
        if (form_.classify(s).singularity_index == i) {
            if (remaining == 0) return s;
            --remaining;
        }
    }
    throw NoSuchSubspace("no " + std::to_string(i) + "-singular " + std::to_string(j) +
                         "-space exists here");
}

BigInt Oracle::beta_from(const Subspace& pi, long k) const {
    SuperspaceEnumerator en(pi, k);
    check_budget(en.size(), "oracle beta");
    const std::uint64_t total = en.size_u64();
    std::uint64_t c = count_matching(total, opts_.jobs, [&](std::uint64_t idx) {
        return form_.classify(en.at(idx)).singularity_index == 0;
    });
    return BigInt(static_cast<unsigned long>(c));
}

BigInt Oracle::beta(long i, long j, long k) const {
    if (k < j || k > ambient_dim()) throw ParamOutOfRange("oracle beta: j <= k <= n");
    return beta_from(representative(i, j), k);
}

BigInt Oracle::gamma_from(const Subspace& pi, long k) const {
    SubspaceEnumerator en(form_.field(), ambient_dim(), k);
    check_budget(en.size(), "oracle gamma");
    const std::uint64_t total = en.size_u64();
    const long target = pi.dim() + k;
    std::uint64_t c = count_matching(total, opts_.jobs, [&](std::uint64_t idx) {
        Subspace sigma = en.at(idx);
        if (form_.classify(sigma).singularity_index != 0) return false;
        Subspace span = lattice_span(pi, sigma);
        return span.dim() == target && form_.classify(span).singularity_index == 0;
    });
    return BigInt(static_cast<unsigned long>(c));
}

BigInt Oracle::gamma(long i, long j, long k) const {
    if (k < 0 || j + k > ambient_dim()) throw ParamOutOfRange("oracle gamma: 0 <= k, j+k <= n");
    return gamma_from(representative(i, j), k);
}

std::vector<Subspace> Oracle::collect_non_singular(long j) const {
    check_budget(estimate_alpha(j), "oracle rho (list phase)");
    SubspaceEnumerator en(form_.field(), ambient_dim(), j);
    const std::uint64_t total = en.size_u64();
    std::vector<Subspace> out;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Subspace s = en.at(idx);
        if (form_.classify(s).singularity_index == 0) out.push_back(std::move(s));
    }
    return out;
}

Rational Oracle::rho(long j, long k) const {
    const long n = ambient_dim();
    if (j < 0 || k < 0 || j > n - 1 || k > n - 1 || j + k > n)
        throw ParamOutOfRange("oracle rho: 0 <= j,k <= n-1 and j+k <= n");
    std::vector<Subspace> lj = collect_non_singular(j);
    std::vector<Subspace> lk = collect_non_singular(k);
    if (lj.empty() || lk.empty())
        throw NoSuchSubspace("oracle rho: no non-singular subspace of the requested dimension");

    const BigInt pair_estimate = BigInt(static_cast<unsigned long>(lj.size())) *
                                 BigInt(static_cast<unsigned long>(lk.size()));
    check_budget(pair_estimate, "oracle rho (pair phase)");

    const std::uint64_t rows = lj.size(), cols = lk.size();
    const long target = j + k;
    std::uint64_t good = count_matching(rows * cols, opts_.jobs, [&](std::uint64_t idx) {
        const Subspace& pi = lj[static_cast<std::size_t>(idx / cols)];
        const Subspace& sigma = lk[static_cast<std::size_t>(idx % cols)];
        Subspace span = lattice_span(pi, sigma);
        return span.dim() == target && form_.classify(span).singularity_index == 0;
    });

    Rational value(BigInt(static_cast<unsigned long>(good)), pair_estimate);
    value.canonicalize();

    // Transitivity made testable: the pair count must equal gamma/alpha.
    Rational ratio(gamma_from(lj.front(), k), BigInt(static_cast<unsigned long>(lk.size())));
    ratio.canonicalize();
    if (value != ratio) throw Error("oracle rho: pair count disagrees with gamma/alpha ratio");
    return value;
}

BigInt oracle_segre(const FieldPtr& field, long n, long k, long j, const OracleOptions& opts) {
    if (j < 0 || k < 0 || j + k > n)
        throw ParamOutOfRange("oracle segre: 0 <= j, k and j+k <= n for a nonzero count");
    BigInt estimate = gauss_count(n, j, BigInt(field->order()));
    if (estimate > BigInt(static_cast<unsigned long>(opts.budget)))
        throw InstanceTooLarge("oracle segre: estimated " + estimate.get_str() +
                               " objects exceeds budget " + std::to_string(opts.budget));
    Subspace fixed = SubspaceEnumerator(field, n, k).at(0);
    SubspaceEnumerator en(field, n, j);
    const std::uint64_t total = en.size_u64();
    std::uint64_t c = count_matching(total, opts.jobs, [&](std::uint64_t idx) {
        return lattice_intersection(fixed, en.at(idx)).dim() == 0;
    });
    return BigInt(static_cast<unsigned long>(c));
}

}  // namespace anzahl
