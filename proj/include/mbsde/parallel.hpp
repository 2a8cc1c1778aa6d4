#pragma once
#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mbsde::par {

enum class Mode { serial, openmp };

/// Global execution mode. The serial mode is the reference path used by the
/// tests and the benchmark; with the fixed-batch layout below both modes
/// produce bit-identical results.
inline Mode& mode() {
#ifdef _OPENMP
    static Mode m = Mode::openmp;
#else
    static Mode m = Mode::serial;
#endif
    return m;
}

/// Worker cap for the openmp mode; 0 means the runtime default.
inline int& max_threads() {
    static int n = 0;
    return n;
}

inline std::size_t batch_count(std::size_t n, std::size_t batch) {
    return (n + batch - 1) / batch;
}

/// Default batch width for sample/path loops. Batch boundaries depend only on
/// the item count, never on the thread count, so per-batch partial results are
/// identical no matter how batches are scheduled.
inline constexpr std::size_t kBatch = 256;

/// Runs body(batch_index, begin, end) over [0,n) in fixed-size batches.
/// The caller collects per-batch partials and reduces them in batch order.
template <class F>
void for_batches(std::size_t n, std::size_t batch, F&& body) {
    if (n == 0) return;
    const std::ptrdiff_t nb = static_cast<std::ptrdiff_t>(batch_count(n, batch));
#ifdef _OPENMP
    if (mode() == Mode::openmp) {
        const int nt = max_threads() > 0 ? max_threads() : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
        for (std::ptrdiff_t b = 0; b < nb; ++b) {
            const std::size_t lo = static_cast<std::size_t>(b) * batch;
            const std::size_t hi = std::min(n, lo + batch);
            body(static_cast<std::size_t>(b), lo, hi);
        }
        return;
    }
#endif
    for (std::ptrdiff_t b = 0; b < nb; ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * batch;
        const std::size_t hi = std::min(n, lo + batch);
        body(static_cast<std::size_t>(b), lo, hi);
    }
}

/// Fixed-order sum of per-batch partials (index order, not thread order).
inline double reduce_sum(const std::vector<double>& partials) {
    double s = 0.0;
    for (double p : partials) s += p;
    return s;
}

inline double reduce_min(const std::vector<double>& partials, double init) {
    double s = init;
    for (double p : partials) s = p < s ? p : s;
    return s;
}

inline double reduce_max(const std::vector<double>& partials, double init) {
    double s = init;
    for (double p : partials) s = p > s ? p : s;
    return s;
}

} // namespace mbsde::par
