#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ssv {

/// Worker cap: min(OMP default, SSVLAB_THREADS if set). Applied once by the
/// CLI and the test binaries; results do not depend on the value, only speed.
inline int thread_cap() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
#else
    int n = 1;
#endif
    if (const char* env = std::getenv("SSVLAB_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < n) n = cap;
    }
    return n;
}

inline void configure_threads() {
#ifdef _OPENMP
    omp_set_num_threads(thread_cap());
#endif
}

/// Sum block partials in place by pairwise halving. The combination order is
/// a function of the block count only, so results are bit-identical for any
/// thread count that produced the partials.
inline double pairwise_tree_sum(std::vector<double>& blocks) {
    if (blocks.empty()) return 0.0;
    std::size_t n = blocks.size();
    while (n > 1) {
        std::size_t half = (n + 1) / 2;
        for (std::size_t i = 0; i + half < n; ++i) blocks[i] += blocks[i + half];
        n = half;
    }
    return blocks[0];
}

/// Same tree combination for vector-valued partials (gradient blocks).
inline void pairwise_tree_sum_vectors(std::vector<std::vector<double>>& blocks) {
    if (blocks.empty()) return;
    std::size_t n = blocks.size();
    while (n > 1) {
        std::size_t half = (n + 1) / 2;
        for (std::size_t i = 0; i + half < n; ++i) {
            auto& a = blocks[i];
            const auto& b = blocks[i + half];
            for (std::size_t j = 0; j < a.size(); ++j) a[j] += b[j];
        }
        n = half;
    }
}

}  // namespace ssv
