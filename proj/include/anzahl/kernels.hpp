#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace anzahl {

// Counting kernels over an index range [0, n). Counts reduce associatively,
// so the OpenMP variants must return exactly what the serial references
// return for any predicate; tests assert that and the bench target compares
// their throughput. Predicates must not throw.

template <class Pred>
std::uint64_t count_matching_serial(std::uint64_t n, Pred&& pred) {
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < n; ++i)
        if (pred(i)) ++count;
    return count;
}

template <class Pred>
std::uint64_t count_matching(std::uint64_t n, int jobs, Pred&& pred) {
#ifdef _OPENMP
    if (jobs > 1 && n > 1) {
        std::uint64_t count = 0;
        const long long limit = static_cast<long long>(n);
#pragma omp parallel for reduction(+ : count) num_threads(jobs) schedule(static)
        for (long long i = 0; i < limit; ++i)
            if (pred(static_cast<std::uint64_t>(i))) ++count;
        return count;
    }
#endif
    (void)jobs;
    return count_matching_serial(n, pred);
}

/// Per-class tallies for a classifier mapping indices to [0, num_classes).
template <class ClassFn>
std::vector<std::uint64_t> histogram_serial(std::uint64_t n, long num_classes, ClassFn&& cls) {
    std::vector<std::uint64_t> h(static_cast<std::size_t>(num_classes), 0);
    for (std::uint64_t i = 0; i < n; ++i) ++h[static_cast<std::size_t>(cls(i))];
    return h;
}

template <class ClassFn>
std::vector<std::uint64_t> histogram(std::uint64_t n, long num_classes, int jobs, ClassFn&& cls) {
#ifdef _OPENMP
    if (jobs > 1 && n > 1) {
        std::vector<std::uint64_t> h(static_cast<std::size_t>(num_classes), 0);
        const long long limit = static_cast<long long>(n);
#pragma omp parallel num_threads(jobs)
        {
            std::vector<std::uint64_t> mine(static_cast<std::size_t>(num_classes), 0);
#pragma omp for schedule(static)
            for (long long i = 0; i < limit; ++i)
                ++mine[static_cast<std::size_t>(cls(static_cast<std::uint64_t>(i)))];
#pragma omp critical
            for (std::size_t c = 0; c < h.size(); ++c) h[c] += mine[c];
        }
        return h;
    }
#endif
    (void)jobs;
    return histogram_serial(n, num_classes, cls);
}

/// Lowest index satisfying the predicate. Serial by contract: "first" must
/// not depend on worker count.
template <class Pred>
std::optional<std::uint64_t> find_first_matching(std::uint64_t n, Pred&& pred) {
    for (std::uint64_t i = 0; i < n; ++i)
        if (pred(i)) return i;
    return std::nullopt;
}

}  // namespace anzahl
