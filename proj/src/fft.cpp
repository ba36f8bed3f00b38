#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

#include "maxfock/parallel.hpp"

namespace maxfock::detail {
namespace {

struct PlanCache {
    std::mutex mutex;
    std::map<std::tuple<int, int, int>, fftw_plan> plans;
    bool threads_ready = false;

    ~PlanCache() {
        for (auto& [key, plan] : plans) fftw_destroy_plan(plan);
    }
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

fftw_plan get_plan(int n, int howmany, int sign) {
    auto& c = cache();
    std::lock_guard lock(c.mutex);
    const auto key = std::make_tuple(n, howmany, sign);
    if (auto it = c.plans.find(key); it != c.plans.end()) return it->second;

    if (!c.threads_ready) {
        fftw_init_threads();
        c.threads_ready = true;
    }
    fftw_plan_with_nthreads(thread_limit());

    const std::size_t total = static_cast<std::size_t>(n) * n * n * howmany;
    auto* scratch = fftw_alloc_complex(total);
    const int dims[3] = {n, n, n};
    // Planning with FFTW_ESTIMATE leaves the scratch contents alone.
    fftw_plan plan = fftw_plan_many_dft(3, dims, howmany, scratch, nullptr, howmany, 1, scratch, nullptr, howmany, 1,
                                        sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(scratch);
    c.plans.emplace(key, plan);
    return plan;
}

} // namespace

void fft3_inplace(std::complex<double>* data, int n, int howmany, int sign) {
    fftw_plan plan = get_plan(n, howmany, sign);
    auto* p = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plan, p, p);
}

} // namespace maxfock::detail
