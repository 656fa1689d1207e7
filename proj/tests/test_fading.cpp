#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "harqopt/fading.hpp"
#include "oracle_quadrature.hpp"

using namespace harqopt;

namespace {

// Kolmogorov-Smirnov statistic of draws against the model CDF.
double ks_statistic(std::vector<double> draws, const RateDistribution& d) {
  std::sort(draws.begin(), draws.end());
  const double n = static_cast<double>(draws.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < draws.size(); ++i) {
    const double f = rate_cdf(d, draws[i]);
    worst = std::max(worst, std::abs(f - static_cast<double>(i) / n));
    worst = std::max(worst, std::abs(static_cast<double>(i + 1) / n - f));
  }
  return worst;
}

}  // namespace

TEST_CASE("rate distribution invariants on construction") {
  CHECK_THROWS_AS(RateDistribution(FadingModel::rayleigh(), 0.0, 2.0, 1.0, 1.0), ValidationError);
  CHECK_THROWS_AS(RateDistribution(FadingModel::rayleigh(), 1.0, 2.0, 1.2, 1.0), ValidationError);
  CHECK_THROWS_AS(RateDistribution(FadingModel::rayleigh(), 1.0, 2.0, 0.0, 1.0), ValidationError);
}

TEST_CASE("rayleigh CDF closed form") {
  const RateDistribution d(FadingModel::rayleigh(), 1.0, 2.0, 1.0, 1.0);
  CHECK(rate_cdf(d, 1.0) == Catch::Approx(0.3934693402873666).epsilon(1e-12));
  CHECK(rate_cdf(d, 0.0) == 0.0);
  CHECK(rate_cdf(d, 40.0) == Catch::Approx(1.0).epsilon(1e-9));
  const RateDistribution d2(FadingModel::diversity(3), 2.0, 1.5, 0.7, 1.0);
  CHECK(rate_cdf(d2, 0.0) == 0.0);
}

TEST_CASE("rate CDF is nondecreasing") {
  for (const FadingModel& m : {FadingModel::rayleigh(), FadingModel::nakagami(0.75),
                               FadingModel::nakagami(3.2), FadingModel::diversity(4)}) {
    const RateDistribution d(m, 1.0, 2.0, 0.8, 1.0);
    double prev = 0.0;
    for (int i = 0; i <= 300; ++i) {
      const double v = rate_cdf(d, 0.05 * i);
      CHECK(v >= prev - 1e-14);
      prev = v;
    }
  }
}

TEST_CASE("nakagami CDF against independent Monte Carlo") {
  // kappa = 2: fading power ~ Gamma(2, rate 2), drawn with the standard
  // library generator rather than our sampler.
  const RateDistribution d(FadingModel::nakagami(2.0), 1.0, 2.0, 1.0, 1.0);
  std::mt19937_64 gen(20240611);
  std::gamma_distribution<double> gamma(2.0, 0.5);
  const int n = 10000000;
  int hits = 0;
  for (int i = 0; i < n; ++i)
    if (std::log2(1.0 + 2.0 * gamma(gen)) < 1.0) ++hits;
  const double mc = static_cast<double>(hits) / n;
  const double sigma = std::sqrt(mc * (1.0 - mc) / n);
  CHECK(std::abs(rate_cdf(d, 1.0) - mc) <= 3.0 * sigma);
}

TEST_CASE("rayleigh density closed form and origin") {
  const RateDistribution d(FadingModel::rayleigh(), 1.0, 2.0, 1.0, 1.0);
  CHECK(rate_pdf(d, 0.0) == Catch::Approx(std::numbers::ln2 / 2.0).epsilon(1e-12));
  CHECK(rate_pdf(RateDistribution(FadingModel::diversity(2), 1.0, 2.0, 1.0, 1.0), 0.0) == 0.0);
  CHECK(std::isinf(rate_pdf(RateDistribution(FadingModel::nakagami(0.7), 1.0, 2.0, 1.0, 1.0), 0.0)));
}

TEST_CASE("density is the derivative of the CDF") {
  for (const FadingModel& m :
       {FadingModel::rayleigh(), FadingModel::nakagami(2.3), FadingModel::diversity(3)}) {
    const RateDistribution d(m, 1.0, 2.0, 0.8, 1.0);
    for (double x = 0.01; x <= 2.0; x += 0.37) {
      const double h = 1e-5;
      const double fd = (rate_cdf(d, x + h) - rate_cdf(d, x - h)) / (2.0 * h);
      CHECK(rate_pdf(d, x) == Catch::Approx(fd).epsilon(1e-6));
      const double fdr = (relaxed_rate_cdf(d, x + h) - relaxed_rate_cdf(d, x - h)) / (2.0 * h);
      CHECK(relaxed_rate_pdf(d, x) == Catch::Approx(fdr).epsilon(1e-6));
    }
  }
}

TEST_CASE("density integrates to one") {
  for (const FadingModel& m : {FadingModel::rayleigh(), FadingModel::nakagami(1.8)}) {
    const RateDistribution d(m, 1.0, 2.0, 0.9, 1.0);
    const double mass =
        oracle::integrate([&](double x) { return rate_pdf(d, x); }, 1e-9, 30.0, 1e-12);
    CHECK(mass == Catch::Approx(rate_cdf(d, 30.0)).epsilon(1e-8));
    CHECK(mass == Catch::Approx(1.0).epsilon(1e-7));
  }
}

TEST_CASE("family reductions agree pointwise") {
  const RateDistribution ray(FadingModel::rayleigh(), 1.3, 2.4, 0.6, 1.1);
  const RateDistribution nak(FadingModel::nakagami(1.0), 1.3, 2.4, 0.6, 1.1);
  const RateDistribution div(FadingModel::diversity(1), 1.3, 2.4, 0.6, 1.1);
  const RateDistribution ric(FadingModel::rician(0.0), 1.3, 2.4, 0.6, 1.1);
  for (double x = 0.0; x <= 4.0; x += 0.23) {
    for (const RateDistribution* other : {&nak, &div, &ric}) {
      CHECK(rate_cdf(*other, x) == Catch::Approx(rate_cdf(ray, x)).margin(1e-12));
      CHECK(rate_pdf(*other, x) == Catch::Approx(rate_pdf(ray, x)).margin(1e-12));
      CHECK(relaxed_rate_pdf(*other, x) == Catch::Approx(relaxed_rate_pdf(ray, x)).margin(1e-12));
      CHECK(relaxed_rate_cdf(*other, x) == Catch::Approx(relaxed_rate_cdf(ray, x)).margin(1e-12));
    }
  }
}

TEST_CASE("power relaxation dominates, tight at the cap") {
  for (const FadingModel& m :
       {FadingModel::rayleigh(), FadingModel::nakagami(0.8), FadingModel::diversity(2)}) {
    const RateDistribution partial(m, 1.0, 2.0, 0.5, 1.0);
    const RateDistribution at_cap(m, 1.0, 2.0, 1.0, 1.0);
    for (double x = 0.05; x <= 3.0; x += 0.2) {
      CHECK(relaxed_rate_pdf(partial, x) >= rate_pdf(partial, x));
      CHECK(relaxed_rate_cdf(partial, x) >= rate_cdf(partial, x));
      // strict dominance away from the cap
      CHECK(relaxed_rate_cdf(partial, x) > rate_cdf(partial, x));
      CHECK(relaxed_rate_pdf(at_cap, x) == Catch::Approx(rate_pdf(at_cap, x)).epsilon(1e-14));
      CHECK(relaxed_rate_cdf(at_cap, x) == Catch::Approx(rate_cdf(at_cap, x)).epsilon(1e-14));
    }
  }
}

TEST_CASE("relaxed closed-form spot values") {
  const RateDistribution d(FadingModel::rayleigh(), 1.0, 2.0, 0.5, 1.0);
  CHECK(relaxed_rate_pdf(d, 1.0) ==
        Catch::Approx(2.0 * std::numbers::ln2 * std::exp(-0.5)).epsilon(1e-12));
  CHECK(relaxed_rate_cdf(d, 1.0) == Catch::Approx(2.0 * 0.3934693402873666).epsilon(1e-12));
  const RateDistribution dv(FadingModel::diversity(2), 1.0, 2.0, 1.0, 1.0);
  CHECK(relaxed_rate_cdf(dv, 1.0) == Catch::Approx(0.0902040104310499).epsilon(1e-12));
}

TEST_CASE("samplers match their distribution") {
  const int n = 1000000;
  const double critical = 1.628 / std::sqrt(static_cast<double>(n));  // 1% level
  int model_index = 0;
  for (const FadingModel& m : {FadingModel::rayleigh(), FadingModel::nakagami(2.7),
                               FadingModel::nakagami(0.8), FadingModel::diversity(3)}) {
    const RateDistribution d(m, 1.0, 2.0, 0.8, 1.0);
    StreamRng rng = make_stream(777, static_cast<std::uint64_t>(model_index++));
    std::vector<double> draws(n);
    for (double& v : draws) v = sample_rate(d, rng);
    CHECK(ks_statistic(std::move(draws), d) < critical);
  }
}

TEST_CASE("sampling edge behavior") {
  const RateDistribution d(FadingModel::rayleigh(), 1.0, 2.0, 1e-12, 1.0);
  StreamRng rng = make_stream(5, 0);
  for (int i = 0; i < 1000; ++i) CHECK(sample_rate(d, rng) < 1e-9);

  StreamRng a = make_stream(99, 3);
  StreamRng b = make_stream(99, 3);
  const RateDistribution d2(FadingModel::nakagami(1.9), 1.0, 2.0, 0.8, 1.0);
  for (int i = 0; i < 100; ++i) CHECK(sample_rate(d2, a) == sample_rate(d2, b));
}
