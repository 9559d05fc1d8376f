#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "spextree/graph.hpp"

namespace spextree {

enum class SpectralMethod { power_iteration, quotient_exact, closed_form };

std::string_view to_string(SpectralMethod method);

/// A spectral radius together with how it was obtained.
///
/// `lower` and `upper` bracket the true value: for power iteration they are the
/// Collatz-Wielandt bounds of the final iterate; for the exact methods they are
/// value -/+ tolerance.
struct SpectralValue {
    double value = 0.0;
    SpectralMethod method = SpectralMethod::power_iteration;
    double tolerance = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    std::int64_t iterations = 0;
};

struct PowerIterationOptions {
    double tolerance = 1e-10;
    std::int64_t max_iterations = 1'000'000;
};

/// Largest adjacency eigenvalue by power iteration on A + I.
///
/// Each connected component is iterated separately from the all-ones vector and the
/// largest component value is returned. Iteration stops once the Collatz-Wielandt
/// interval [min (Ax)_i/x_i, max (Ax)_i/x_i] is narrower than the tolerance; the
/// reported value is the Rayleigh quotient clamped into that interval.
/// Throws ConvergenceError if the cap is reached first.
SpectralValue spectral_radius(const Graph& g, const PowerIterationOptions& options = {});
SpectralValue spectral_radius(const Graph& g, double tolerance);

/// 2x2 or 3x3 nonnegative matrix, optionally the quotient of an equitable partition.
class QuotientMatrix {
public:
    QuotientMatrix(std::vector<std::vector<double>> rows, std::vector<std::int64_t> class_sizes);

    int order() const noexcept { return static_cast<int>(rows_.size()); }
    double operator()(int i, int j) const { return rows_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)); }
    const std::vector<std::vector<double>>& rows() const noexcept { return rows_; }
    const std::vector<std::int64_t>& class_sizes() const noexcept { return class_sizes_; }
    double max_row_sum() const noexcept;

    friend bool operator==(const QuotientMatrix&, const QuotientMatrix&) = default;

private:
    std::vector<std::vector<double>> rows_;
    std::vector<std::int64_t> class_sizes_;
};

/// Equitable quotient of S_{n,k}^p with classes (clique, matched, unmatched).
/// Empty classes are dropped, so p = 0 gives [[k-1, n-k], [k, 0]].
QuotientMatrix quotient_S(int n, int k, int p);

/// Perron root: closed form for order 2, bisection on the characteristic cubic over
/// [0, max row sum] to 1e-12 for order 3.
SpectralValue quotient_spectral_radius(const QuotientMatrix& m);

double perron_root_2x2(double a, double b, double c, double d);
/// Largest real root of the characteristic polynomial of a nonnegative 3x3 matrix.
double perron_root_3x3(const std::vector<std::vector<double>>& m);

/// Upper bound rho([[d, n-n0], [n0, dprime]]) for a join H1 v H2 with |H1| = n0,
/// maximum degrees d and dprime.
SpectralValue join_degree_bound(double d, double dprime, std::int64_t n0, std::int64_t n);

struct StarJoinRadius {
    /// (q-1)/2 + sqrt(qn - (3q^2+2q-1)/4), the exact spectral radius of S_{n,q}^0.
    SpectralValue exact;
    /// (q-1)/2 + sqrt(qn - (3q^2+2q+1)/4), a widely quoted variant; strictly smaller.
    double printed = 0.0;
};

/// Closed form for rho(S_{n,q}^0). Requires n > q >= 1.
StarJoinRadius closed_form_rho_S0(std::int64_t n, std::int64_t q);

}  // namespace spextree
