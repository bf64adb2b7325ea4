// Benchmark of the enumeration kernels: serial reference vs OpenMP.
// Counts must agree between the two modes on every case.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gkgrowth/oracle.hpp"

using namespace gkgrowth;

namespace {

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

struct Case {
    std::string name;
    Int (*run)(ExecMode);
};

Int flag_222(ExecMode m) { return flag_count_bruteforce({1, 1}, 2, 5, m); }
Int flag_331(ExecMode m) { return flag_count_bruteforce({1, 1, 1}, 2, 2, m); }
Int flag_321(ExecMode m) { return flag_count_bruteforce({2, 1}, 3, 1, m); }
Int cartan_2(ExecMode m) { return cartan_coset_bruteforce({3, 0}, 2, 4, m); }
Int cartan_3(ExecMode m) { return cartan_coset_bruteforce({1, 1, 0}, 2, 2, m); }

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel mode falls back to serial\n");
#endif
    std::printf("%-28s %12s %12s %10s %8s\n", "case", "serial [s]", "parallel [s]", "speedup",
                "count");

    std::vector<Case> cases{
        {"flags (1,1) p=2 N=5", flag_222},   {"flags (1,1,1) p=2 N=2", flag_331},
        {"flags (2,1) p=3 N=1", flag_321},   {"cartan (3,0) p=2 N=4", cartan_2},
        {"cartan (1,1,0) p=2 N=2", cartan_3}};

    bool ok = true;
    for (const auto& c : cases) {
        double t0 = now();
        Int serial = c.run(ExecMode::Serial);
        double t1 = now();
        Int parallel = c.run(ExecMode::Parallel);
        double t2 = now();
        double ts = t1 - t0, tp = t2 - t1;
        std::printf("%-28s %12.4f %12.4f %9.2fx %8s\n", c.name.c_str(), ts, tp,
                    tp > 0 ? ts / tp : 0.0, serial.get_str().c_str());
        if (serial != parallel) {
            std::printf("  MISMATCH: serial %s vs parallel %s\n", serial.get_str().c_str(),
                        parallel.get_str().c_str());
            ok = false;
        }
    }
    return ok ? 0 : 1;
}
