#include "besov_inflate/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <memory>
#include <mutex>

namespace besov::fft {
namespace {

// One aligned in/out buffer pair + plan per transform size. Execution copies
// through the owned buffers, so callers can pass arbitrary storage.
struct PlanSet {
    std::size_t n = 0;
    double* real = nullptr;
    fftw_complex* cplx = nullptr;
    fftw_plan fwd = nullptr;
    fftw_plan inv = nullptr;
    std::mutex mtx;

    explicit PlanSet(std::size_t size) : n(size) {
        real = fftw_alloc_real(n);
        cplx = fftw_alloc_complex(n / 2 + 1);
        fwd = fftw_plan_dft_r2c_1d(static_cast<int>(n), real, cplx, FFTW_MEASURE);
        inv = fftw_plan_dft_c2r_1d(static_cast<int>(n), cplx, real, FFTW_MEASURE);
    }
    ~PlanSet() {
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(inv);
        fftw_free(real);
        fftw_free(cplx);
    }
};

PlanSet& plans_for(std::size_t n) {
    static std::mutex table_mtx;
    static std::map<std::size_t, std::unique_ptr<PlanSet>> table;
    std::lock_guard lock(table_mtx);
    auto& slot = table[n];
    if (!slot) slot = std::make_unique<PlanSet>(n);
    return *slot;
}

} // namespace

void forward(std::span<const double> in, std::span<std::complex<double>> out) {
    auto& p = plans_for(in.size());
    std::lock_guard lock(p.mtx);
    std::memcpy(p.real, in.data(), in.size() * sizeof(double));
    fftw_execute(p.fwd);
    std::memcpy(static_cast<void*>(out.data()), p.cplx,
                out.size() * sizeof(std::complex<double>));
}

void inverse(std::span<const std::complex<double>> in, std::span<double> out,
             std::size_t n) {
    auto& p = plans_for(n);
    std::lock_guard lock(p.mtx);
    std::memcpy(p.cplx, in.data(), in.size() * sizeof(std::complex<double>));
    fftw_execute(p.inv);
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = p.real[i] * scale;
}

} // namespace besov::fft
