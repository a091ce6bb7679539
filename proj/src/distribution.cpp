#include "qtree/distribution.hpp"

#include "qtree/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <string>

namespace qtree {

void EmpiricalDistribution::finalize() {
    double total = 0.0;
    for (double m : mass_) {
        if (m < 0.0) throw ConfigError("distribution mass entries must be nonnegative");
        total += m;
    }
    if (total <= 0.0) throw ConfigError("distribution has no mass");
    cumulative_.resize(mass_.size());
    double running = 0.0;
    for (std::size_t i = 0; i < mass_.size(); ++i) {
        mass_[i] /= total;
        running += mass_[i];
        cumulative_[i] = running;
    }
    cumulative_.back() = 1.0; // absorb rounding in the final partial sum
}

EmpiricalDistribution EmpiricalDistribution::from_samples_discrete(
    const std::vector<double>& values) {
    if (values.empty()) throw ConfigError("cannot build a distribution from no samples");
    std::map<double, double> counts;
    for (double v : values) counts[v] += 1.0;
    EmpiricalDistribution d;
    d.kind_ = DistributionKind::discrete;
    for (const auto& [value, count] : counts) {
        d.support_.push_back(value);
        d.mass_.push_back(count);
    }
    d.finalize();
    return d;
}

EmpiricalDistribution EmpiricalDistribution::from_weighted(std::vector<double> support,
                                                           std::vector<double> weights) {
    if (support.empty() || support.size() != weights.size()) {
        throw ConfigError("weighted distribution needs matching nonempty support and weights");
    }
    if (std::adjacent_find(support.begin(), support.end(),
                           [](double a, double b) { return a >= b; }) != support.end()) {
        throw ConfigError("weighted distribution support must be strictly increasing");
    }
    EmpiricalDistribution d;
    d.kind_ = DistributionKind::discrete;
    d.support_ = std::move(support);
    d.mass_ = std::move(weights);
    d.finalize();
    return d;
}

EmpiricalDistribution EmpiricalDistribution::from_samples_binned(const std::vector<double>& values,
                                                                 int num_bins) {
    if (values.empty()) throw ConfigError("cannot build a distribution from no samples");
    if (num_bins < 1) throw ConfigError("histogram needs at least one bin");
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    double lo = *lo_it;
    double hi = *hi_it;
    if (lo == hi) hi = lo + 1.0; // degenerate sample, give the bin nonzero width
    EmpiricalDistribution d;
    d.kind_ = DistributionKind::binned;
    d.support_.resize(static_cast<std::size_t>(num_bins) + 1);
    for (int i = 0; i <= num_bins; ++i) {
        d.support_[static_cast<std::size_t>(i)] =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(num_bins);
    }
    d.mass_.assign(static_cast<std::size_t>(num_bins), 0.0);
    for (double v : values) {
        auto it = std::upper_bound(d.support_.begin(), d.support_.end(), v);
        std::size_t bin =
            it == d.support_.begin() ? 0 : static_cast<std::size_t>(it - d.support_.begin()) - 1;
        if (bin >= d.mass_.size()) bin = d.mass_.size() - 1;
        d.mass_[bin] += 1.0;
    }
    d.finalize();
    return d;
}

EmpiricalDistribution EmpiricalDistribution::from_samples_bin_width(
    const std::vector<double>& values, double bin_width) {
    if (values.empty()) throw ConfigError("cannot build a distribution from no samples");
    if (bin_width <= 0.0) throw ConfigError("bin width must be positive");
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double first_edge = std::floor(*lo_it / bin_width) * bin_width;
    const int num_bins =
        std::max(1, static_cast<int>(std::ceil((*hi_it - first_edge) / bin_width - 1e-12)));
    EmpiricalDistribution d;
    d.kind_ = DistributionKind::binned;
    d.support_.resize(static_cast<std::size_t>(num_bins) + 1);
    for (int i = 0; i <= num_bins; ++i) {
        d.support_[static_cast<std::size_t>(i)] = first_edge + bin_width * static_cast<double>(i);
    }
    d.mass_.assign(static_cast<std::size_t>(num_bins), 0.0);
    for (double v : values) {
        auto it = std::upper_bound(d.support_.begin(), d.support_.end(), v);
        std::size_t bin =
            it == d.support_.begin() ? 0 : static_cast<std::size_t>(it - d.support_.begin()) - 1;
        if (bin >= d.mass_.size()) bin = d.mass_.size() - 1;
        d.mass_[bin] += 1.0;
    }
    d.finalize();
    return d;
}

double EmpiricalDistribution::cdf(double x) const {
    if (kind_ == DistributionKind::discrete) {
        auto it = std::upper_bound(support_.begin(), support_.end(), x);
        if (it == support_.begin()) return 0.0;
        return cumulative_[static_cast<std::size_t>(it - support_.begin()) - 1];
    }
    if (x <= support_.front()) return 0.0;
    if (x >= support_.back()) return 1.0;
    auto it = std::upper_bound(support_.begin(), support_.end(), x);
    const auto bin = static_cast<std::size_t>(it - support_.begin()) - 1;
    const double left = support_[bin];
    const double width = support_[bin + 1] - left;
    const double before = bin == 0 ? 0.0 : cumulative_[bin - 1];
    return before + mass_[bin] * (x - left) / width;
}

double EmpiricalDistribution::quantile(double p) const {
    if (!(p > 0.0) || p > 1.0) {
        throw ConfigError("quantile probability " + std::to_string(p) + " outside (0, 1]");
    }
    auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), p);
    const auto i = static_cast<std::size_t>(it - cumulative_.begin());
    if (kind_ == DistributionKind::discrete) return support_[i];
    const double before = i == 0 ? 0.0 : cumulative_[i - 1];
    const double left = support_[i];
    const double width = support_[i + 1] - left;
    if (mass_[i] <= 0.0) return left;
    return left + width * (p - before) / mass_[i];
}

namespace {

// Rational approximation from libit (Chappelier & Jegou), good to ~1e-7;
// two Newton steps against std::erf push it well below 1e-9.
double erfinv_seed(double x) {
    constexpr double a3 = -0.140543331, a2 = 0.914624893, a1 = -1.645349621, a0 = 0.886226899;
    constexpr double b4 = 0.012229801, b3 = -0.329097515, b2 = 1.442710462, b1 = -2.118377725,
                     b0 = 1.0;
    constexpr double c3 = 1.641345311, c2 = 3.429567803, c1 = -1.62490649, c0 = -1.970840454;
    constexpr double d2 = 1.637067800, d1 = 3.543889200, d0 = 1.0;

    const double sign = x < 0.0 ? -1.0 : 1.0;
    x = std::fabs(x);
    double r;
    if (x <= 0.7) {
        const double x2 = x * x;
        r = x * (((a3 * x2 + a2) * x2 + a1) * x2 + a0);
        r /= (((b4 * x2 + b3) * x2 + b2) * x2 + b1) * x2 + b0;
    } else {
        const double y = std::sqrt(-std::log((1.0 - x) / 2.0));
        r = (((c3 * y + c2) * y + c1) * y + c0) / ((d2 * y + d1) * y + d0);
    }
    return sign * r;
}

} // namespace

double inverse_erf(double x) {
    if (x <= -1.0 || x >= 1.0) {
        throw ConfigError("inverse_erf argument must lie strictly inside (-1, 1)");
    }
    if (x == 0.0) return 0.0;
    double y = erfinv_seed(x);
    const double two_over_sqrt_pi = 2.0 / std::sqrt(std::numbers::pi);
    for (int step = 0; step < 2; ++step) {
        const double err = std::erf(y) - x;
        y -= err / (two_over_sqrt_pi * std::exp(-y * y));
    }
    return y;
}

double normal_quantile(double p, double mu, double sigma) {
    if (!(p > 0.0 && p < 1.0)) {
        throw ConfigError("normal quantile defined for p strictly inside (0, 1)");
    }
    if (!(sigma > 0.0)) throw ConfigError("normal quantile needs sigma > 0");
    return mu + std::numbers::sqrt2 * sigma * inverse_erf(2.0 * p - 1.0);
}

} // namespace qtree
