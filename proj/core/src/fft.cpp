#include "hpq/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hpq {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

void fft_pow2(std::vector<cplx>& v, int sign) {
    const std::size_t n = v.size();
    if (!is_pow2(n)) throw std::invalid_argument("fft_pow2: size must be a power of two");
    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(v[i], v[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const cplx wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                cplx a = v[i + k];
                cplx b = v[i + k + len / 2] * w;
                v[i + k] = a + b;
                v[i + k + len / 2] = a - b;
                w *= wl;
            }
        }
    }
}

FourierSum::FourierSum(std::vector<cplx> coeffs, double a_min, double da)
    : c_(std::move(coeffs)), a_min_(a_min), da_(da) {
    const std::size_t n = c_.size();
    pad_ = next_pow2(16 * std::max<std::size_t>(n, 1));
    center_ = 0.5 * static_cast<double>(n);
    std::vector<cplx> buf(pad_, cplx(0.0, 0.0));
    for (std::size_t m = 0; m < n; ++m) buf[m] = c_[m];
    fft_pow2(buf, +1); // S_q = sum_m c_m e^{+i m theta_q}
    const double h = 2.0 * std::numbers::pi / static_cast<double>(pad_);
    spec_.resize(pad_);
    for (std::size_t q = 0; q < pad_; ++q) {
        const double th = h * static_cast<double>(q);
        spec_[q] = buf[q] * std::polar(1.0, -center_ * th);
    }
}

cplx FourierSum::direct(double w) const {
    cplx acc(0.0, 0.0);
    for (std::size_t m = 0; m < c_.size(); ++m) {
        acc += c_[m] * std::polar(1.0, w * (a_min_ + static_cast<double>(m) * da_));
    }
    return acc;
}

cplx FourierSum::fast(double w) const {
    const double theta = w * da_;
    const double h = 2.0 * std::numbers::pi / static_cast<double>(pad_);
    const double t = theta / h;
    const long base = static_cast<long>(std::floor(t));
    constexpr int kPts = 8;
    // nodes base-3 .. base+4, periodic wrap
    double num[kPts];
    double x = t - static_cast<double>(base);
    cplx acc(0.0, 0.0);
    // Lagrange weights for nodes at offsets -3..4 relative to base
    for (int j = 0; j < kPts; ++j) {
        const int off = j - 3;
        double wj = 1.0;
        for (int k = 0; k < kPts; ++k) {
            if (k == j) continue;
            const int offk = k - 3;
            wj *= (x - static_cast<double>(offk)) / static_cast<double>(off - offk);
        }
        num[j] = wj;
    }
    const long M = static_cast<long>(pad_);
    for (int j = 0; j < kPts; ++j) {
        long q = (base + (j - 3)) % M;
        if (q < 0) q += M;
        acc += num[j] * spec_[static_cast<std::size_t>(q)];
    }
    // undo modulation and the a_min offset
    return acc * std::polar(1.0, center_ * theta + w * a_min_);
}

cplx interp_uniform(const std::vector<cplx>& v, double x, int points) {
    const long n = static_cast<long>(v.size());
    if (n == 0) return {0.0, 0.0};
    if (x < 0.0 || x > static_cast<double>(n - 1)) return {0.0, 0.0};
    const long half = points / 2;
    long base = static_cast<long>(std::floor(x)) - (half - 1);
    if (base < 0) base = 0;
    if (base + points > n) base = n - points;
    if (base < 0) { // fewer samples than stencil: fall back to linear
        const long i0 = static_cast<long>(std::floor(x));
        const long i1 = std::min(i0 + 1, n - 1);
        const double f = x - static_cast<double>(i0);
        return v[i0] * (1.0 - f) + v[i1] * f;
    }
    cplx acc(0.0, 0.0);
    for (int j = 0; j < points; ++j) {
        const double xj = static_cast<double>(base + j);
        double wj = 1.0;
        for (int k = 0; k < points; ++k) {
            if (k == j) continue;
            const double xk = static_cast<double>(base + k);
            wj *= (x - xk) / (xj - xk);
        }
        acc += wj * v[static_cast<std::size_t>(base + j)];
    }
    return acc;
}

} // namespace hpq
