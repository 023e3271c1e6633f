#include <catch_amalgamated.hpp>

#include <cmath>

#include "chipnoise/quadrature.hpp"

using namespace chipnoise;
using Catch::Matchers::WithinRel;

TEST_CASE("scalar integrals", "[quadrature]") {
  const auto r = quadrature::integrate_scalar([](double x) { return std::exp(x); }, 0.0, 1.0);
  CHECK(r.converged);
  CHECK_THAT(r.value[0], WithinRel(std::exp(1.0) - 1.0, 1e-13));

  // integrable endpoint singularity
  const auto s = quadrature::integrate_scalar([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                                              {1e-9, 0.0, 4000});
  CHECK_THAT(s.value[0], WithinRel(2.0, 1e-8));
}

TEST_CASE("vector integrand with breakpoints", "[quadrature]") {
  const std::array<double, 3> breaks{-1.0, 0.0, 2.0};
  const auto r = quadrature::integrate<2>(
      [](double x) { return quadrature::Vec<2>{std::abs(x), x * x}; }, breaks, {1e-12, 0.0, 4000});
  CHECK(r.converged);
  CHECK_THAT(r.value[0], WithinRel(2.5, 1e-13));
  CHECK_THAT(r.value[1], WithinRel(3.0, 1e-13));
}

TEST_CASE("interval budget is reported", "[quadrature]") {
  const auto r = quadrature::integrate_scalar([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0,
                                              {1e-14, 0.0, 3});
  CHECK_FALSE(r.converged);
  CHECK(r.error > 0.0);
}
