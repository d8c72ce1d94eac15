// Times the verification kernels on the three bundled matrices:
// bit-packed row-pair check (OpenMP and single-thread) against the serial
// byte-array reference, plus the PAF fast path and assembly cost.
//
//   bench_kernels [reps]        (default 5; best-of-reps is reported)

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "skewhad/datasets.hpp"
#include "skewhad/reference.hpp"
#include "skewhad/sign_matrix.hpp"

using namespace skewhad;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double best_of(int reps, F&& body) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        Clock::time_point t0 = Clock::now();
        body();
        std::chrono::duration<double> dt = Clock::now() - t0;
        if (dt.count() < best) best = dt.count();
    }
    return best * 1e3; // ms
}

} // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 5;
#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    std::printf("reps=%d threads=%d\n", reps, threads);
    std::printf("%-6s %6s | %10s %10s | %12s %12s %12s | %s\n", "case", "order",
                "paf_ms", "build_ms", "packed_omp", "packed_1t", "ref_serial",
                "agree");

    for (const char* id : {"109A", "145A", "247A"}) {
        const ReferenceCase& rc = *find_case(id);
        SdsQuadruple q = case_quadruple(rc);

        double paf_ms = best_of(reps, [&] {
            if (!paf_verify(q.blocks)) std::abort();
        });

        SignMatrix g;
        double build_ms = best_of(reps, [&] {
            g = goethals_seidel(
                circulant(encode(q.blocks[0])), circulant(encode(q.blocks[1])),
                circulant(encode(q.blocks[2])), circulant(encode(q.blocks[3])));
        });

        bool omp_ok = false, one_ok = false, ref_ok = false;
        double packed_omp = best_of(reps, [&] { omp_ok = verify_hadamard(g); });

        double packed_1t;
#ifdef _OPENMP
        omp_set_num_threads(1);
        packed_1t = best_of(reps, [&] { one_ok = verify_hadamard(g); });
        omp_set_num_threads(threads);
#else
        packed_1t = best_of(reps, [&] { one_ok = verify_hadamard(g); });
#endif

        ref::ByteMatrix bytes = ref::from_packed(g);
        double ref_serial = best_of(reps, [&] { ref_ok = ref::verify_hadamard(bytes); });

        bool agree = omp_ok && one_ok && ref_ok && verify_skew(g) &&
                     ref::verify_skew(bytes);
        std::printf("%-6s %6d | %10.3f %10.3f | %12.3f %12.3f %12.3f | %s\n",
                    id, g.order(), paf_ms, build_ms, packed_omp, packed_1t,
                    ref_serial, agree ? "yes" : "NO");
        if (!agree) return 1;
    }
    return 0;
}
