#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "presurf/grid.hpp"

namespace presurf {

namespace fourier {

/// c_m = (1/n) sum_j f_j e^{-2 pi i m j / n}. Direct O(n^2) evaluation; the
/// grids in this library are small and exactness of the angles matters more
/// than speed.
inline std::vector<std::complex<double>> forward(const std::vector<double>& f) {
    const std::size_t n = f.size();
    std::vector<std::complex<double>> c(n);
    for (std::size_t m = 0; m < n; ++m) {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            const double angle =
                -2.0 * std::numbers::pi *
                static_cast<double>((m * j) % n) / static_cast<double>(n);
            acc += f[j] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        c[m] = acc / static_cast<double>(n);
    }
    return c;
}

/// Real part of sum_m c_m e^{+2 pi i m j / n}.
inline std::vector<double> inverse_real(const std::vector<std::complex<double>>& c) {
    const std::size_t n = c.size();
    std::vector<double> f(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t m = 0; m < n; ++m) {
            const double angle =
                2.0 * std::numbers::pi *
                static_cast<double>((m * j) % n) / static_cast<double>(n);
            acc += c[m] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        f[j] = acc.real();
    }
    return f;
}

/// Signed mode number of DFT bin m (bin n/2 maps to +n/2).
inline double signed_mode(std::size_t m, std::size_t n) {
    return (m <= n / 2) ? static_cast<double>(m)
                        : static_cast<double>(m) - static_cast<double>(n);
}

}  // namespace fourier

/// Complex Fourier coefficients indexed by signed mode n in [-max_mode,
/// max_mode]. Real-valued traces have conjugate-symmetric coefficients.
struct FourierCoefficients {
    int max_mode = 0;
    std::vector<std::complex<double>> c;

    FourierCoefficients() : c(1, 0.0) {}

    explicit FourierCoefficients(int max_mode_)
        : max_mode(max_mode_), c(2 * static_cast<std::size_t>(max_mode_) + 1, 0.0) {
        if (max_mode_ < 0) throw InvalidInput("FourierCoefficients: max_mode must be >= 0");
    }

    /// Pure cosine b cos(x): b/2 at n = +-1.
    static FourierCoefficients cosine(double b) {
        FourierCoefficients f(1);
        f.at(1) = 0.5 * b;
        f.at(-1) = 0.5 * b;
        return f;
    }

    std::complex<double> coeff(int n) const {
        if (n < -max_mode || n > max_mode) return {0.0, 0.0};
        return c[static_cast<std::size_t>(n + max_mode)];
    }

    std::complex<double>& at(int n) { return c[static_cast<std::size_t>(n + max_mode)]; }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : c) m = std::max(m, std::abs(v));
        return m;
    }

    bool empty() const { return max_abs() == 0.0; }

    /// Throws NonRealOutput unless c_{-n} = conj(c_n) within rel_tol of the
    /// largest coefficient.
    void require_conjugate_symmetric(double rel_tol, const std::string& what) const {
        const double scale = max_abs();
        if (scale == 0.0) return;
        for (int n = 0; n <= max_mode; ++n)
            if (std::abs(coeff(-n) - std::conj(coeff(n))) > rel_tol * scale)
                throw NonRealOutput(what + ": coefficients are not conjugate-symmetric at n = " +
                                    std::to_string(n));
    }

    /// DFT of a real trace sampled over one period (right endpoint excluded).
    /// Keeps modes |n| <= (count-1)/2; the Nyquist bin of an even count is
    /// dropped to preserve conjugate symmetry.
    static FourierCoefficients from_trace(const SampledFunction& trace) {
        const std::size_t n = trace.size();
        const auto bins = fourier::forward(trace.values);
        FourierCoefficients out(static_cast<int>((n - 1) / 2));
        for (int mode = -out.max_mode; mode <= out.max_mode; ++mode) {
            const std::size_t m =
                mode >= 0 ? static_cast<std::size_t>(mode)
                          : n - static_cast<std::size_t>(-mode);
            out.at(mode) = bins[m];
        }
        return out;
    }
};

}  // namespace presurf
