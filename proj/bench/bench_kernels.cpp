// Timing comparison of the OpenMP kernels against their serial references:
// NCMatrix products, represented-word assembly and safe-column scans.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qsusp/fockrep.hpp"
#include "qsusp/ktheory.hpp"

using namespace qsusp;

namespace {

double seconds(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename F>
double time_best_of(int reps, F&& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        best = std::min(best, seconds(t0));
    }
    return best;
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-34s %10.4fs %10.4fs   x%.2f\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
    const int reps = quick ? 1 : 3;
    const int matrix_n = quick ? 2 : 3;
    const int word_N = quick ? 16 : 40;

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (no OpenMP)\n");
#endif
    std::printf("%-34s %10s %10s\n", "kernel", "serial", "parallel");

    {
        const AlgebraPreset A = AlgebraPreset::odd_plane(matrix_n);
        const NCMatrix e = build_e(matrix_n, matrix_n);
        const NCMatrix e2 = mul(e, e, A);  // entries fatten, unlike the idempotent G
        NCMatrix sink(1);
        const double ts = time_best_of(reps, [&] { sink = mul_serial(e2, e2, A); });
        const double tp = time_best_of(reps, [&] { sink = mul(e2, e2, A); });
        row(("e(" + std::to_string(matrix_n) + ")^2 matrix square").c_str(), ts, tp);
        if (!(mul(e2, e2, A) == mul_serial(e2, e2, A))) {
            std::printf("kernel mismatch!\n");
            return 1;
        }
    }

    {
        const AlgebraPreset A = AlgebraPreset::even_sphere(3);
        const Word w{5, 6, 0, 1, 2};  // a3* a3 t a1* a1
        SparseOperator sink{TruncatedFock(3, word_N)};
        const double ts = time_best_of(reps, [&] { sink = represent_word_serial(w, A, 0.5, word_N); });
        const double tp = time_best_of(reps, [&] { sink = represent_word(w, A, 0.5, word_N); });
        row(("sigma_3 word assembly, N=" + std::to_string(word_N)).c_str(), ts, tp);
    }

    {
        const int rel_n = quick ? 2 : 3;
        const int N = quick ? 24 : 40;
        const AlgebraPreset A = AlgebraPreset::even_sphere(rel_n);
        RawPoly lhs, rhs;
        for (int i = 1; i <= rel_n; ++i)
            lhs.push_back({LaurentQ::q_power(2),
                           Word{static_cast<GenCode>(2 * i - 1), static_cast<GenCode>(2 * i)}});
        rhs.push_back({LaurentQ(1), Word{0}});
        rhs.push_back({LaurentQ(-1), Word{0, 0}});
        SparseOperator D = represent_raw(lhs, A, 0.5, N);
        D -= represent_raw(rhs, A, 0.5, N);
        double sink = 0.0;
        const double ts = time_best_of(reps, [&] { sink += D.max_safe_column_norm_serial(4); });
        const double tp = time_best_of(reps, [&] { sink += D.max_safe_column_norm(4); });
        row(("relation residual scan, N=" + std::to_string(N)).c_str(), ts, tp);
        if (sink > 1.0) std::printf("unexpected residual\n");
    }

    return 0;
}
