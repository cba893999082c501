#include "nel/core/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>

#include "nel/core/error.hpp"

namespace nel::fft {
namespace {

class PlanCache {
public:
    ~PlanCache() {
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
    }

    fftw_plan get(const std::vector<int>& shape, int sign) {
        std::lock_guard lock(mutex_);
        auto key = std::make_pair(shape, sign);
        if (auto it = plans_.find(key); it != plans_.end()) return it->second;

        std::size_t total = std::accumulate(shape.begin(), shape.end(), std::size_t{1},
                                            [](std::size_t a, int b) { return a * static_cast<std::size_t>(b); });
        // Planning never touches user arrays: plan on scratch buffers, execute with new-array API.
        auto* in = fftw_alloc_complex(total);
        auto* out = fftw_alloc_complex(total);
        // FFTW_ESTIMATE keeps plan selection deterministic, so repeated runs are bit-identical.
        fftw_plan plan = fftw_plan_dft(static_cast<int>(shape.size()), shape.data(), in, out, sign, FFTW_ESTIMATE);
        fftw_free(in);
        fftw_free(out);
        if (plan == nullptr) throw ComputationalError("fftw: failed to create plan");
        plans_.emplace(key, plan);
        return plan;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<std::vector<int>, int>, fftw_plan> plans_;
};

struct Scratch {
    fftw_complex* in = nullptr;
    fftw_complex* out = nullptr;
    std::size_t size = 0;

    void reserve(std::size_t n) {
        if (n <= size) return;
        release();
        in = fftw_alloc_complex(n);
        out = fftw_alloc_complex(n);
        size = n;
    }
    void release() {
        fftw_free(in);
        fftw_free(out);
        in = out = nullptr;
        size = 0;
    }
    ~Scratch() { release(); }
};

PlanCache& cache() {
    static PlanCache instance;
    return instance;
}

void execute(std::span<const int> shape, std::span<const cplx> in, std::span<cplx> out, int sign) {
    std::size_t total = 1;
    for (int n : shape) total *= static_cast<std::size_t>(n);
    if (in.size() != total || out.size() != total)
        throw StructuralError("fft: buffer size does not match transform shape");
    fftw_plan plan = cache().get(std::vector<int>(shape.begin(), shape.end()), sign);
    // The plan assumes SIMD-aligned, distinct arrays. Anything else goes through aligned scratch,
    // so every call runs the same codelets.
    auto* src = reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data()));
    auto* dst = reinterpret_cast<fftw_complex*>(out.data());
    const bool aligned = fftw_alignment_of(reinterpret_cast<double*>(src)) == 0 &&
                         fftw_alignment_of(reinterpret_cast<double*>(dst)) == 0 && src != dst;
    if (aligned) {
        fftw_execute_dft(plan, src, dst);
        return;
    }
    thread_local Scratch scratch;
    scratch.reserve(total);
    std::copy(in.begin(), in.end(), reinterpret_cast<cplx*>(scratch.in));
    fftw_execute_dft(plan, scratch.in, scratch.out);
    const auto* res = reinterpret_cast<const cplx*>(scratch.out);
    std::copy(res, res + total, out.begin());
}

}  // namespace

void forward(std::span<const int> shape, std::span<const cplx> in, std::span<cplx> out) {
    execute(shape, in, out, FFTW_FORWARD);
}

void backward(std::span<const int> shape, std::span<const cplx> in, std::span<cplx> out) {
    execute(shape, in, out, FFTW_BACKWARD);
}

}  // namespace nel::fft
