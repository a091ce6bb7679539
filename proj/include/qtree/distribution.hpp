#ifndef QTREE_DISTRIBUTION_HPP
#define QTREE_DISTRIBUTION_HPP

#include <cstddef>
#include <vector>

namespace qtree {

enum class DistributionKind { discrete, binned };

// Empirical distribution over heuristic values: either an exact PMF over a
// sorted support, or a normalized histogram standing in for a density.
class EmpiricalDistribution {
public:
    // Groups equal values into a PMF. Throws ConfigError on empty input.
    static EmpiricalDistribution from_samples_discrete(const std::vector<double>& values);

    // Histogram over [min, max] with num_bins equal-width bins.
    static EmpiricalDistribution from_samples_binned(const std::vector<double>& values,
                                                     int num_bins);

    // Histogram with bins of the given width, edges aligned to multiples of it.
    static EmpiricalDistribution from_samples_bin_width(const std::vector<double>& values,
                                                        double bin_width);

    // Discrete PMF from explicit (value, weight) pairs; weights are normalized.
    static EmpiricalDistribution from_weighted(std::vector<double> support,
                                               std::vector<double> weights);

    DistributionKind kind() const { return kind_; }

    // Support values (discrete) or bin edges, one more than mass entries (binned).
    const std::vector<double>& support() const { return support_; }
    const std::vector<double>& mass() const { return mass_; }

    // P(X <= x). Right-continuous step function for discrete distributions,
    // piecewise linear across bins for binned ones.
    double cdf(double x) const;

    // F^{-1}(p) = inf{x : p <= F(x)} for 0 < p <= 1; binned distributions
    // interpolate linearly inside the crossing bin. Throws ConfigError for
    // p outside (0, 1].
    double quantile(double p) const;

    double min_value() const { return support_.front(); }
    double max_value() const { return support_.back(); }

private:
    EmpiricalDistribution() = default;
    void finalize();

    DistributionKind kind_ = DistributionKind::discrete;
    std::vector<double> support_;
    std::vector<double> mass_;
    std::vector<double> cumulative_;
};

// Inverse error function, |result| such that erf(result) = x. Rational
// approximation polished with two Newton steps; absolute error < 1e-9 on
// (-1, 1).
double inverse_erf(double x);

// mu + sqrt(2) sigma erfinv(2p - 1) for p in (0, 1). Throws ConfigError on
// p outside (0, 1) or sigma <= 0.
double normal_quantile(double p, double mu, double sigma);

} // namespace qtree

#endif
