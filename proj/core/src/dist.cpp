#include "epl/dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "epl/error.hpp"

namespace epl {

namespace {

constexpr int kGammaMaxIter = 400;
constexpr double kGammaEps = 1e-16;

void require_lambda(PoissonParam p) {
    if (!(p.lambda > 0.0))
        throw Error("poisson: lambda must be positive, got " + std::to_string(p.lambda));
}

// Regularized lower incomplete gamma P(a,x) by series expansion; valid for
// x < a + 1 where the series converges quickly.
double gamma_p_series(double a, double x) {
    if (x <= 0.0) return 0.0;
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < kGammaMaxIter; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * kGammaEps) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma Q(a,x) by modified Lentz continued
// fraction; valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double fpmin = std::numeric_limits<double>::min() / kGammaEps;
    double b = x + 1.0 - a;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kGammaMaxIter; ++i) {
        double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = b + an / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kGammaEps) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

ExponentialParam ExponentialParam::from_mean(double beta) {
    if (!(beta > 0.0)) throw Error("exponential: mean must be positive");
    return {1.0 / beta, beta};
}

ExponentialParam ExponentialParam::from_rate(double rate) {
    if (!(rate > 0.0)) throw Error("exponential: rate must be positive");
    return {rate, 1.0 / rate};
}

double poisson_pmf(int x, PoissonParam p) {
    require_lambda(p);
    if (x < 0) throw Error("poisson_pmf: x must be non-negative");
    if (x > 20) {
        double lp = -p.lambda + x * std::log(p.lambda) - std::lgamma(x + 1.0);
        return std::exp(lp);
    }
    double v = std::exp(-p.lambda);
    for (int k = 1; k <= x; ++k) v *= p.lambda / k;
    return v;
}

double poisson_tail(int x_min, PoissonParam p) {
    require_lambda(p);
    if (x_min < 0) throw Error("poisson_tail: x_min must be non-negative");
    if (x_min == 0) return 1.0;
    double term = std::exp(-p.lambda);
    double head = term;
    for (int k = 1; k < x_min; ++k) {
        term *= p.lambda / k;
        head += term;
    }
    return std::clamp(1.0 - head, 0.0, 1.0);
}

double exponential_cdf(double t, ExponentialParam p) {
    if (!(p.beta > 0.0)) throw Error("exponential_cdf: beta must be positive");
    if (t < 0.0) throw Error("exponential_cdf: t must be non-negative");
    return 1.0 - std::exp(-t / p.beta);
}

double uniform_cdf(double x, UniformInterval iv) {
    if (!(iv.a < iv.b)) throw Error("uniform_cdf: interval requires a < b");
    return std::clamp((x - iv.a) / (iv.b - iv.a), 0.0, 1.0);
}

double chi_square_sf(double x, int df) {
    if (x < 0.0) throw Error("chi_square_sf: x must be non-negative");
    if (df < 1) throw Error("chi_square_sf: df must be >= 1");
    if (x == 0.0) return 1.0;
    double a = 0.5 * df;
    double xx = 0.5 * x;
    double q = (xx < a + 1.0) ? 1.0 - gamma_p_series(a, xx) : gamma_q_cf(a, xx);
    return std::clamp(q, 0.0, 1.0);
}

double kolmogorov_sf(double d, long n) {
    if (d < 0.0 || d > 1.0) throw Error("kolmogorov_sf: d must lie in [0,1]");
    if (n < 1) throw Error("kolmogorov_sf: n must be >= 1");
    double sn = std::sqrt(static_cast<double>(n));
    double t = d * (sn + 0.12 + 0.11 / sn);
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 2000; ++k) {
        double term = std::exp(-2.0 * k * k * t * t);
        sum += sign * term;
        if (term < 1e-12) break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

int sample_poisson(PoissonParam p, Pcg32& rng) {
    require_lambda(p);
    if (p.lambda <= 10.0) {
        // Knuth multiplication: multiply uniforms until the product drops
        // below exp(-lambda).
        const double limit = std::exp(-p.lambda);
        int k = 0;
        double prod = 1.0;
        do {
            ++k;
            prod *= rng.uniform();
        } while (prod > limit);
        return k - 1;
    }
    // Cumulative inversion; adequate for the moderate rates used here.
    double u = rng.uniform();
    double term = std::exp(-p.lambda);
    double cum = term;
    int k = 0;
    const int cap = static_cast<int>(p.lambda + 12.0 * std::sqrt(p.lambda) + 60.0);
    while (u > cum && k < cap) {
        ++k;
        term *= p.lambda / k;
        cum += term;
    }
    return k;
}

}  // namespace epl
