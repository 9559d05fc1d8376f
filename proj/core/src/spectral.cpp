#include "spextree/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spextree/error.hpp"

namespace spextree {

namespace {

constexpr double kQuotientTolerance = 1e-12;

struct ComponentResult {
    double value;
    double lower;
    double upper;
    std::int64_t iterations;
};

// Power iteration on A + I restricted to one connected component given in CSR form.
ComponentResult iterate_component(const std::vector<int>& offsets, const std::vector<int>& targets,
                                  const PowerIterationOptions& options) {
    const std::size_t n = offsets.size() - 1;
    if (n == 1)
        return {0.0, 0.0, 0.0, 0};

    std::vector<double> x(n, 1.0);
    std::vector<double> y(n);
    // Row sums of up to max_degree terms carry relative rounding error of about
    // max_degree * eps, so the bracket cannot be resolved more finely than that.
    int max_degree = 0;
    for (std::size_t i = 0; i < n; ++i)
        max_degree = std::max(max_degree, offsets[i + 1] - offsets[i]);
    const double resolution = 8.0 * std::numeric_limits<double>::epsilon() * (max_degree + 1);
    double lower = 0.0;
    double upper = std::numeric_limits<double>::infinity();
    for (std::int64_t it = 1; it <= options.max_iterations; ++it) {
        double xx = 0.0;
        double xax = 0.0;
        lower = std::numeric_limits<double>::infinity();
        upper = -std::numeric_limits<double>::infinity();
        double peak = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double ax = 0.0;
            for (int e = offsets[i]; e < offsets[i + 1]; ++e)
                ax += x[static_cast<std::size_t>(targets[static_cast<std::size_t>(e)])];
            double ratio = ax / x[i];
            lower = std::min(lower, ratio);
            upper = std::max(upper, ratio);
            xx += x[i] * x[i];
            xax += x[i] * ax;
            y[i] = ax + x[i];
            peak = std::max(peak, y[i]);
        }
        if (upper - lower <= std::max(options.tolerance, resolution * upper)) {
            double rayleigh = std::clamp(xax / xx, lower, upper);
            return {rayleigh, lower, upper, it};
        }
        for (std::size_t i = 0; i < n; ++i)
            x[i] = y[i] / peak;
    }
    throw ConvergenceError(lower, upper, options.max_iterations);
}

double char_poly_3x3(double lambda, double c2, double c1, double c0) {
    return ((lambda - c2) * lambda + c1) * lambda - c0;
}

// Bisection for a root of an increasing function on [lo, hi].
template <typename F>
double bisect_increasing(F&& f, double lo, double hi) {
    for (int i = 0; i < 400 && hi - lo > kQuotientTolerance * 0.01; ++i) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) <= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

SpectralValue exact_value(double value, SpectralMethod method) {
    return {value, method, kQuotientTolerance, value - kQuotientTolerance,
            value + kQuotientTolerance, 0};
}

}  // namespace

std::string_view to_string(SpectralMethod method) {
    switch (method) {
    case SpectralMethod::power_iteration:
        return "power-iteration";
    case SpectralMethod::quotient_exact:
        return "quotient-exact";
    case SpectralMethod::closed_form:
        return "closed-form";
    }
    return "unknown";
}

SpectralValue spectral_radius(const Graph& g, const PowerIterationOptions& options) {
    if (!(options.tolerance > 0.0))
        throw RangeError("spectral_radius tolerance must be positive");
    if (g.order() < 1)
        throw RangeError("spectral_radius requires at least one vertex");

    const auto comp = g.components();
    const int count = *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::vector<int>> members(static_cast<std::size_t>(count));
    for (int v = 0; v < g.order(); ++v)
        members[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);

    SpectralValue best{0.0, SpectralMethod::power_iteration, options.tolerance, 0.0, 0.0, 0};
    std::vector<int> local(static_cast<std::size_t>(g.order()));
    for (const auto& verts : members) {
        if (verts.size() == 1)
            continue;
        for (std::size_t i = 0; i < verts.size(); ++i)
            local[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
        std::vector<int> offsets{0};
        std::vector<int> targets;
        for (int v : verts) {
            for (int w : g.neighbors(v))
                targets.push_back(local[static_cast<std::size_t>(w)]);
            offsets.push_back(static_cast<int>(targets.size()));
        }
        auto r = iterate_component(offsets, targets, options);
        best.iterations += r.iterations;
        best.upper = std::max(best.upper, r.upper);
        best.lower = std::max(best.lower, r.lower);
        best.value = std::max(best.value, r.value);
    }
    best.value = std::clamp(best.value, best.lower, best.upper);
    return best;
}

SpectralValue spectral_radius(const Graph& g, double tolerance) {
    PowerIterationOptions options;
    options.tolerance = tolerance;
    return spectral_radius(g, options);
}

QuotientMatrix::QuotientMatrix(std::vector<std::vector<double>> rows,
                               std::vector<std::int64_t> class_sizes)
    : rows_(std::move(rows)), class_sizes_(std::move(class_sizes)) {
    const std::size_t k = rows_.size();
    if (k != 2 && k != 3)
        throw RangeError("quotient matrix order must be 2 or 3, got " + std::to_string(k));
    for (const auto& row : rows_) {
        if (row.size() != k)
            throw RangeError("quotient matrix must be square");
        for (double x : row)
            if (!(x >= 0.0))
                throw RangeError("quotient matrix entries must be nonnegative");
    }
    if (!class_sizes_.empty()) {
        if (class_sizes_.size() != k)
            throw RangeError("one class size per quotient row is required");
        for (auto s : class_sizes_)
            if (s <= 0)
                throw RangeError("quotient class sizes must be positive");
    }
}

double QuotientMatrix::max_row_sum() const noexcept {
    double best = 0.0;
    for (const auto& row : rows_) {
        double s = 0.0;
        for (double x : row)
            s += x;
        best = std::max(best, s);
    }
    return best;
}

QuotientMatrix quotient_S(int n, int k, int p) {
    if (k <= 0 || n <= k)
        throw RangeError("quotient_S requires n > k > 0, got n=" + std::to_string(n) +
                         ", k=" + std::to_string(k));
    if (p < 0 || p > (n - k) / 2)
        throw RangeError("quotient_S requires 0 <= p <= floor((n-k)/2) = " +
                         std::to_string((n - k) / 2) + ", got p=" + std::to_string(p));
    const double kk = k;
    const double matched = 2.0 * p;
    const double rest = static_cast<double>(n - k - 2 * p);
    if (p == 0)
        return QuotientMatrix({{kk - 1, rest}, {kk, 0}}, {k, n - k});
    if (rest == 0)
        return QuotientMatrix({{kk - 1, matched}, {kk, 1}}, {k, 2 * p});
    return QuotientMatrix({{kk - 1, matched, rest}, {kk, 1, 0}, {kk, 0, 0}},
                          {k, 2 * p, n - k - 2 * p});
}

double perron_root_2x2(double a, double b, double c, double d) {
    return 0.5 * (a + d) + 0.5 * std::sqrt((a - d) * (a - d) + 4.0 * b * c);
}

double perron_root_3x3(const std::vector<std::vector<double>>& m) {
    const double c2 = m[0][0] + m[1][1] + m[2][2];
    const double c1 = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) +
                      (m[0][0] * m[2][2] - m[0][2] * m[2][0]) +
                      (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
    const double c0 = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                      m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                      m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    auto p = [&](double x) { return char_poly_3x3(x, c2, c1, c0); };

    double hi = 0.0;
    for (const auto& row : m)
        hi = std::max(hi, row[0] + row[1] + row[2]);
    while (p(hi) < 0.0)
        hi += 1.0 + hi * 1e-9;

    // p' = 3x^2 - 2 c2 x + c1. On the right of the larger critical point p increases,
    // so the largest real root is found by bisection on a monotone bracket.
    const double disc = 4.0 * c2 * c2 - 12.0 * c1;
    if (disc <= 0.0)
        return bisect_increasing(p, std::min(0.0, -1.0 - std::abs(c0)), hi);
    const double crit_hi = (2.0 * c2 + std::sqrt(disc)) / 6.0;
    const double crit_lo = (2.0 * c2 - std::sqrt(disc)) / 6.0;
    if (p(crit_hi) <= 0.0)
        return bisect_increasing(p, crit_hi, std::max(hi, crit_hi));
    double lo = crit_lo - 1.0;
    while (p(lo) > 0.0)
        lo -= 2.0 * (crit_lo - lo);
    return bisect_increasing(p, lo, crit_lo);
}

SpectralValue quotient_spectral_radius(const QuotientMatrix& m) {
    const auto& r = m.rows();
    double value = m.order() == 2 ? perron_root_2x2(r[0][0], r[0][1], r[1][0], r[1][1])
                                  : perron_root_3x3(r);
    return exact_value(value, SpectralMethod::quotient_exact);
}

SpectralValue join_degree_bound(double d, double dprime, std::int64_t n0, std::int64_t n) {
    if (n0 < 0 || n0 > n)
        throw RangeError("join_degree_bound requires 0 <= n0 <= n");
    if (d < 0 || dprime < 0)
        throw RangeError("join_degree_bound degrees must be nonnegative");
    double value = perron_root_2x2(d, static_cast<double>(n - n0), static_cast<double>(n0), dprime);
    return exact_value(value, SpectralMethod::closed_form);
}

StarJoinRadius closed_form_rho_S0(std::int64_t n, std::int64_t q) {
    if (q < 1 || n <= q)
        throw RangeError("closed_form_rho_S0 requires n > q >= 1");
    const double qq = static_cast<double>(q);
    const double nn = static_cast<double>(n);
    const double base = (qq - 1.0) / 2.0;
    StarJoinRadius out;
    out.exact = exact_value(base + std::sqrt(qq * nn - (3.0 * qq * qq + 2.0 * qq - 1.0) / 4.0),
                            SpectralMethod::closed_form);
    out.printed = base + std::sqrt(qq * nn - (3.0 * qq * qq + 2.0 * qq + 1.0) / 4.0);
    return out;
}

}  // namespace spextree
