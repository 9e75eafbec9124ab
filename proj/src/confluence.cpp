#include "qsusp/confluence.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qsusp {

namespace {

// One-step contraction at position pos, then full normalization.
NCPoly reduce_from(const Word& w, std::size_t pos, const AlgebraPreset& A) {
    const RawPoly& rhs = *A.rule(w[pos], w[pos + 1]);
    RawPoly out;
    out.reserve(rhs.size());
    for (const auto& rt : rhs) {
        Word nw;
        nw.reserve(w.size() - 2 + rt.word.size());
        nw.insert(nw.end(), w.begin(), w.begin() + pos);
        nw.insert(nw.end(), rt.word.begin(), rt.word.end());
        nw.insert(nw.end(), w.begin() + pos + 2, w.end());
        out.push_back({rt.coeff, std::move(nw)});
    }
    return normalize(out, A);
}

}  // namespace

ConfluenceReport check_local_confluence(const AlgebraPreset& A) {
    const int m = A.num_codes();
    std::vector<Word> overlaps;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int z = 0; z < m; ++z)
                if (A.rule(static_cast<GenCode>(x), static_cast<GenCode>(y)) &&
                    A.rule(static_cast<GenCode>(y), static_cast<GenCode>(z)))
                    overlaps.push_back(Word{static_cast<GenCode>(x), static_cast<GenCode>(y),
                                            static_cast<GenCode>(z)});

    ConfluenceReport report;
    report.overlaps_checked = overlaps.size();

    std::vector<OverlapFailure> failures;
#pragma omp parallel
    {
        std::vector<OverlapFailure> local;
#pragma omp for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(overlaps.size()); ++i) {
            const Word& w = overlaps[static_cast<std::size_t>(i)];
            NCPoly left = reduce_from(w, 0, A);
            NCPoly right = reduce_from(w, 1, A);
            if (left != right) local.push_back({w, std::move(left), std::move(right)});
        }
#pragma omp critical
        failures.insert(failures.end(), local.begin(), local.end());
    }
    // Deterministic order regardless of thread interleaving.
    std::sort(failures.begin(), failures.end(),
              [](const OverlapFailure& a, const OverlapFailure& b) { return a.overlap < b.overlap; });
    report.failures = std::move(failures);
    return report;
}

}  // namespace qsusp
