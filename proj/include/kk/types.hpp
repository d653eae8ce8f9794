#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace kk {

using Complex = std::complex<double>;

/// A point s = s' + i s'' of the Laplace variable.
struct ComplexPoint {
    double s_prime = 0.0;
    double s_double_prime = 0.0;

    Complex to_complex() const { return {s_prime, s_double_prime}; }
    static ComplexPoint from_complex(Complex s) { return {s.real(), s.imag()}; }
};

/// Uniform, ordered grid of real frequencies.
struct FrequencyGrid {
    double omega_min = 0.0;
    double omega_max = 0.0;
    int n_points = 0;

    void validate() const {
        if (!(omega_min < omega_max))
            throw std::invalid_argument("grid: omega_min must be < omega_max");
        if (n_points < 16 || n_points % 2 != 0)
            throw std::invalid_argument("grid: n_points must be even and >= 16");
    }
    double spacing() const {
        return (omega_max - omega_min) / static_cast<double>(n_points - 1);
    }
    double point(int i) const { return omega_min + spacing() * i; }
};

/// Assumed decay of a spectrum beyond the sampled grid.
struct TailModel {
    enum class Kind { None, Rational };
    Kind kind = Kind::None;
    int order = 1;  // Rational(order); only order 1 is implemented

    static TailModel none() { return {Kind::None, 1}; }
    static TailModel rational(int order = 1) { return {Kind::Rational, order}; }
};

/// Complex spectrum samples on a uniform frequency grid.
struct Spectrum {
    FrequencyGrid grid;
    std::vector<Complex> values;
    TailModel tail_model;

    void validate() const;
};

}  // namespace kk
