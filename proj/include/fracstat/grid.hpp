#pragma once

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <vector>

namespace fracstat {

/// Equispaced collocation grid on [0, T): t_j = j T / N. N must be even and
/// at least 8 so the Nyquist mode is unambiguous.
struct PeriodicGrid {
    double period;
    int count;

    PeriodicGrid(double T, int N);

    double spacing() const { return period / count; }
    double node(int j) const { return period * static_cast<double>(j) / count; }

    bool operator==(const PeriodicGrid&) const = default;
};

/// Real samples of a T-periodic function on a PeriodicGrid. State profiles
/// carry mg/L, control profiles 1/h; both share the same representation.
struct Profile {
    PeriodicGrid grid;
    Eigen::VectorXd values;

    Profile(const PeriodicGrid& g, Eigen::VectorXd v);
    explicit Profile(const PeriodicGrid& g);  // zero-initialized

    static Profile constant(const PeriodicGrid& g, double c);
};

using StateProfile = Profile;
using ControlProfile = Profile;

/// Mean over one period. For equispaced periodic samples the arithmetic mean
/// is the (exact) trapezoid rule and equals the zero-mode coefficient.
double periodic_mean(const Profile& p);

/// Fourier-series coefficients c_k = (1/N) sum_j f_j e^(-2 pi i j k / N),
/// k = 0..N-1 (full spectrum; c_0 is the mean, c_{N-k} = conj(c_k) for real
/// input).
std::vector<std::complex<double>> to_modes(const Profile& p);

/// Synthesis inverse of to_modes: f_j = sum_k c_k e^(+2 pi i j k / N).
/// The imaginary residue of a nominally real synthesis is discarded.
Profile from_modes(const PeriodicGrid& grid, std::span<const std::complex<double>> modes);

/// Trigonometric (band-limited) resampling onto an M-point grid with the
/// same period. Exact for band-limited input; preserves the mean. When
/// upsampling, the Nyquist coefficient is split evenly between +/- modes.
Profile resample(const Profile& p, int M);

/// Evaluates the trigonometric interpolant of a profile (and its derivative)
/// anywhere in time. The Nyquist mode is treated as a pure cosine.
class TrigInterpolant {
  public:
    explicit TrigInterpolant(const Profile& p);

    double operator()(double t) const;
    double derivative(double t) const;

    double period() const { return period_; }

  private:
    double period_;
    // One-sided coefficients k = 0..N/2 of f(t) = sum_k Re{a_k e^(i w_k t)}
    // with a_0 = mean, a_k = 2 c_k for 0 < k < N/2, a_{N/2} = Re c_{N/2}.
    std::vector<std::complex<double>> coef_;
};

}  // namespace fracstat
