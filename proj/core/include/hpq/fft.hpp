#pragma once

#include <complex>
#include <vector>

namespace hpq {

using cplx = std::complex<double>;

/// In-place radix-2 FFT; size must be a power of two.
/// sign = -1: X_q = sum_m v_m e^{-2 pi i m q / M} (forward)
/// sign = +1: X_q = sum_m v_m e^{+2 pi i m q / M} (no 1/M factor)
void fft_pow2(std::vector<cplx>& v, int sign);

bool is_pow2(std::size_t n);
std::size_t next_pow2(std::size_t n);

/// Uniform-grid Fourier sum F(w) = sum_m c_m e^{i w (a_min + m da)} for
/// arbitrary real frequencies w.  `direct` is the quadrature oracle path;
/// `fast` samples a zero-padded FFT of the coefficients and interpolates the
/// (periodic, support-modulated) spectrum with an 8-point Lagrange rule.
/// Both paths evaluate the same periodized sum, so they agree at every w,
/// in or out of the principal band.
class FourierSum {
public:
    FourierSum(std::vector<cplx> coeffs, double a_min, double da);

    cplx direct(double w) const;
    cplx fast(double w) const;

    double da() const { return da_; }

private:
    std::vector<cplx> c_;
    double a_min_;
    double da_;
    // fast-path state
    std::size_t pad_;
    double center_; // modulation index (data-support center)
    std::vector<cplx> spec_; // modulated spectrum samples at theta_q = 2 pi q / pad
};

/// Lagrange interpolation of order `points` (4 = cubic, 8 default elsewhere)
/// on a uniform grid: samples v_0..v_{n-1} at integer positions, evaluated at
/// position x (index units). Returns 0 outside [0, n-1].
cplx interp_uniform(const std::vector<cplx>& v, double x, int points);

} // namespace hpq
