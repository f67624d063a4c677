#include "spectral/fft.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace mkg::detail {
namespace {

// The FFTW planner is not reentrant.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

fftw_complex* as_fftw(const std::complex<double>* p) {
    // fftw_execute_dft never writes to the input of an out-of-place c2c transform.
    return reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(p));
}

}  // namespace

Fft2D::Fft2D(int size) : size_(size) {
    std::vector<std::complex<double>> a(static_cast<std::size_t>(size) * size);
    std::vector<std::complex<double>> b(a.size());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    std::lock_guard lock(planner_mutex());
    forward_ = fftw_plan_dft_2d(size, size, as_fftw(a.data()), as_fftw(b.data()), FFTW_FORWARD, flags);
    backward_ = fftw_plan_dft_2d(size, size, as_fftw(a.data()), as_fftw(b.data()), FFTW_BACKWARD, flags);
    if (!forward_ || !backward_) throw std::runtime_error("FFTW planning failed");
}

Fft2D::~Fft2D() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(backward_);
}

void Fft2D::forward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) const {
    fftw_execute_dft(forward_, as_fftw(in.data()), as_fftw(out.data()));
}

void Fft2D::backward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) const {
    fftw_execute_dft(backward_, as_fftw(in.data()), as_fftw(out.data()));
}

const Fft2D& fft_for(int size) {
    static std::mutex cache_mutex;
    static std::map<int, std::unique_ptr<Fft2D>> cache;
    std::lock_guard lock(cache_mutex);
    auto& slot = cache[size];
    if (!slot) slot = std::make_unique<Fft2D>(size);
    return *slot;
}

}  // namespace mkg::detail
