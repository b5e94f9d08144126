// Benchmark: OpenMP counting kernels against the serial reference on real
// oracle workloads. Counts must match exactly; the table reports throughput.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "anzahl/kernels.hpp"
#include "anzahl/oracle.hpp"

using namespace anzahl;

namespace {

using Clock = std::chrono::steady_clock;

struct Workload {
    std::string name;
    std::uint64_t size;
    std::function<bool(std::uint64_t)> pred;
};

void run(const Workload& w, int max_jobs) {
    auto t0 = Clock::now();
    std::uint64_t serial = count_matching_serial(w.size, w.pred);
    double serial_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    std::printf("%-34s %10llu objects  serial %8.1f ms\n", w.name.c_str(),
                static_cast<unsigned long long>(w.size), serial_ms);
    for (int jobs = 2; jobs <= max_jobs; jobs *= 2) {
        auto t1 = Clock::now();
        std::uint64_t parallel = count_matching(w.size, jobs, w.pred);
        double par_ms = std::chrono::duration<double, std::milli>(Clock::now() - t1).count();
        if (parallel != serial) {
            std::printf("  MISMATCH at jobs=%d: %llu != %llu\n", jobs,
                        static_cast<unsigned long long>(parallel),
                        static_cast<unsigned long long>(serial));
            std::exit(1);
        }
        std::printf("  jobs=%-2d %8.1f ms  speedup %.2fx\n", jobs, par_ms,
                    par_ms > 0 ? serial_ms / par_ms : 0.0);
    }
}

}  // namespace

int main(int argc, char** argv) {
    int max_jobs = 4;
#ifdef _OPENMP
    max_jobs = std::max(2, omp_get_max_threads());
#endif
    if (argc > 1) max_jobs = std::atoi(argv[1]);

    // Non-singular 3-space census in symplectic F_3^6: 33880 classifications.
    auto f3 = construct_field(3);
    Form sp6 = Form::standard(FormKind::symplectic, 6, f3);
    SubspaceEnumerator en3(f3, 6, 3);
    Workload census{"symplectic F_3^6 classify j=3", en3.size_u64(), [&](std::uint64_t idx) {
                        return sp6.classify(en3.at(idx)).singularity_index == 0;
                    }};

    // Pair phase of rho_{2,2,4} in hermitian F_4^4: 240^2 span+classify checks.
    auto f4 = construct_field(4);
    Form he4 = Form::standard(FormKind::hermitian, 4, f4);
    SubspaceEnumerator en2(f4, 4, 2);
    std::vector<Subspace> ns;
    for (std::uint64_t i = 0; i < en2.size_u64(); ++i) {
        Subspace s = en2.at(i);
        if (he4.classify(s).singularity_index == 0) ns.push_back(std::move(s));
    }
    const std::uint64_t cols = ns.size();
    Workload pairs{"hermitian F_4^4 rho(2,2) pairs", cols * cols, [&](std::uint64_t idx) {
                       Subspace span =
                           lattice_span(ns[static_cast<std::size_t>(idx / cols)],
                                        ns[static_cast<std::size_t>(idx % cols)]);
                       return span.dim() == 4 && he4.classify(span).singularity_index == 0;
                   }};

    run(census, max_jobs);
    run(pairs, max_jobs);
    return 0;
}
