#pragma once

#include "epl/rng.hpp"

namespace epl {

/// Poisson rate, goals per match (or per unit time). Must be positive.
struct PoissonParam {
    double lambda;
};

/// Exponential waiting-time parameters; beta is the mean gap in minutes
/// and rate its reciprocal.
struct ExponentialParam {
    double rate;
    double beta;

    static ExponentialParam from_mean(double beta);
    static ExponentialParam from_rate(double rate);
};

/// Closed interval [a,b], a < b.
struct UniformInterval {
    double a;
    double b;
};

/// P(X = x) for X ~ Poisson(lambda). Evaluated in log space for x > 20.
double poisson_pmf(int x, PoissonParam p);

/// P(X >= x_min) for X ~ Poisson(lambda).
double poisson_tail(int x_min, PoissonParam p);

/// P(X <= t) for exponential waiting time, t >= 0.
double exponential_cdf(double t, ExponentialParam p);

/// CDF of the uniform distribution on [a,b], clamped outside the interval.
double uniform_cdf(double x, UniformInterval iv);

/// Upper-tail probability P(X > x) of a chi-square variable with df degrees
/// of freedom, via the regularized incomplete gamma function (series for
/// x < df + 1, continued fraction otherwise). Absolute error <= 1e-10.
double chi_square_sf(double x, int df);

/// Asymptotic Kolmogorov tail Q(t) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 t^2)
/// at t = d (sqrt(n) + 0.12 + 0.11/sqrt(n)), the Stephens small-sample
/// transform. Series truncated once a term drops below 1e-12.
double kolmogorov_sf(double d, long n);

/// One Poisson draw. Knuth multiplication for lambda <= 10 (consumes k+1
/// uniforms to return k), cumulative inversion above that (one uniform).
int sample_poisson(PoissonParam p, Pcg32& rng);

}  // namespace epl
