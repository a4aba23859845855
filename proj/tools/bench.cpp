// Benchmark: serial reference sweep vs the OpenMP kernel on the two
// workloads that dominate harness runtime, with a byte-identity check on the
// resulting reports.
#include <chrono>
#include <cstdio>

#include "pisys/harness.hpp"
#include "pisys/json_io.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace pisys;

namespace {

double run_once(const RootSystem& R, TypeLabel target, const EnumerationMode& mode, int threads,
                std::string& dump) {
    VerifyOptions opt;
    opt.threads = threads;
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep = verify_theorem(R, target, mode, opt);
    auto t1 = std::chrono::steady_clock::now();
    dump = canonical_dump(verify_report_to_json(rep));
    return std::chrono::duration<double>(t1 - t0).count();
}

void bench(const char* name, const RootSystem& R, TypeLabel target, const EnumerationMode& mode) {
    std::string serial_dump, parallel_dump;
    double serial = run_once(R, target, mode, 1, serial_dump);
    double parallel = run_once(R, target, mode, 0, parallel_dump);
    bool identical = serial_dump == parallel_dump;
    std::printf("%-24s serial %8.3fs   parallel %8.3fs   speedup %4.2fx   reports %s\n", name,
                serial, parallel, serial / parallel, identical ? "identical" : "DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; both paths run serially\n");
#endif

    RootSystem b5 = RootSystem::build({Family::B, 5});
    bench("B5/A3 exhaustive", b5, {Family::A, 3}, EnumerationMode::make_exhaustive());

    RootSystem e8 = RootSystem::build({Family::E, 8});
    bench("E8/A7 sampled x500", e8, {Family::A, 7}, EnumerationMode::sampled(500, 42));
    return 0;
}
