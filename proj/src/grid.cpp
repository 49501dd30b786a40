#include "fracstat/grid.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <stdexcept>

namespace fracstat {

PeriodicGrid::PeriodicGrid(double T, int N) : period(T), count(N) {
    if (!(T > 0.0)) throw std::invalid_argument("PeriodicGrid: period must be positive");
    if (N < 8 || N % 2 != 0)
        throw std::invalid_argument("PeriodicGrid: point count must be even and >= 8");
}

Profile::Profile(const PeriodicGrid& g, Eigen::VectorXd v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.count)
        throw std::invalid_argument("Profile: sample count does not match grid");
}

Profile::Profile(const PeriodicGrid& g) : grid(g), values(Eigen::VectorXd::Zero(g.count)) {}

Profile Profile::constant(const PeriodicGrid& g, double c) {
    return Profile(g, Eigen::VectorXd::Constant(g.count, c));
}

double periodic_mean(const Profile& p) { return p.values.mean(); }

std::vector<std::complex<double>> to_modes(const Profile& p) {
    const int n = p.grid.count;
    std::vector<double> time(p.values.data(), p.values.data() + n);
    std::vector<std::complex<double>> modes;
    Eigen::FFT<double> fft;
    fft.fwd(modes, time);
    for (auto& c : modes) c /= static_cast<double>(n);
    return modes;
}

Profile from_modes(const PeriodicGrid& grid, std::span<const std::complex<double>> modes) {
    const int n = grid.count;
    if (static_cast<int>(modes.size()) != n)
        throw std::invalid_argument("from_modes: mode count does not match grid");
    std::vector<std::complex<double>> scaled(modes.begin(), modes.end());
    for (auto& c : scaled) c *= static_cast<double>(n);
    std::vector<std::complex<double>> time;
    Eigen::FFT<double> fft;
    fft.inv(time, scaled);
    Eigen::VectorXd out(n);
    for (int j = 0; j < n; ++j) out(j) = time[j].real();
    return Profile(grid, std::move(out));
}

Profile resample(const Profile& p, int M) {
    const int n = p.grid.count;
    if (M == n) return p;
    const PeriodicGrid target(p.grid.period, M);

    const auto src = to_modes(p);
    std::vector<std::complex<double>> dst(M, {0.0, 0.0});
    const int keep = std::min(n, M) / 2;

    dst[0] = src[0];
    for (int k = 1; k < keep; ++k) {
        dst[k] = src[k];
        dst[M - k] = src[n - k];
    }
    if (M > n) {
        // Split the source Nyquist cosine into symmetric +/- halves.
        const std::complex<double> half = 0.5 * src[n / 2].real();
        dst[n / 2] = half;
        dst[M - n / 2] = half;
    } else {
        // Fold the +/- contributions at the target Nyquist into a cosine.
        dst[M / 2] = std::complex<double>((src[M / 2] + src[n - M / 2]).real(), 0.0);
    }
    return from_modes(target, dst);
}

TrigInterpolant::TrigInterpolant(const Profile& p) : period_(p.grid.period) {
    const int n = p.grid.count;
    const auto modes = to_modes(p);
    coef_.resize(n / 2 + 1);
    coef_[0] = modes[0].real();
    for (int k = 1; k < n / 2; ++k) coef_[k] = 2.0 * modes[k];
    coef_[n / 2] = modes[n / 2].real();
}

double TrigInterpolant::operator()(double t) const {
    const double w0 = 2.0 * M_PI / period_;
    double acc = coef_[0].real();
    for (std::size_t k = 1; k < coef_.size(); ++k) {
        const double wt = w0 * static_cast<double>(k) * t;
        acc += coef_[k].real() * std::cos(wt) - coef_[k].imag() * std::sin(wt);
    }
    return acc;
}

double TrigInterpolant::derivative(double t) const {
    const double w0 = 2.0 * M_PI / period_;
    double acc = 0.0;
    for (std::size_t k = 1; k < coef_.size(); ++k) {
        const double w = w0 * static_cast<double>(k);
        const double wt = w * t;
        // d/dt Re{a e^(iwt)} = Re{i w a e^(iwt)}
        acc += -w * (coef_[k].real() * std::sin(wt) + coef_[k].imag() * std::cos(wt));
    }
    return acc;
}

}  // namespace fracstat
