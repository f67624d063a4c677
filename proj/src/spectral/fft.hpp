#pragma once

#include <complex>
#include <span>

#include <fftw3.h>

namespace mkg::detail {

/// Unnormalized 2D complex transforms of a fixed square size. Plans are made
/// once per size and shared; execution is safe from several threads.
class Fft2D {
public:
    explicit Fft2D(int size);
    ~Fft2D();
    Fft2D(const Fft2D&) = delete;
    Fft2D& operator=(const Fft2D&) = delete;

    int size() const noexcept { return size_; }
    /// out = sum_x in(x) exp(-i k.x); in and out must not alias.
    void forward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) const;
    /// out = sum_k in(k) exp(+i k.x).
    void backward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) const;

private:
    int size_;
    fftw_plan forward_;
    fftw_plan backward_;
};

/// Cached transform for size x size arrays.
const Fft2D& fft_for(int size);

}  // namespace mkg::detail
