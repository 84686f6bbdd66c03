#pragma once

namespace salpeter::specfun {

// Modified Bessel functions of the second kind, orders 0 and 1, for x > 0.
// Power series with the logarithmic term for x <= 2, Steed/Temme continued
// fraction above. Relative accuracy is close to machine precision; values
// underflow to 0 past x ~ 745.
double bessel_k0(double x);
double bessel_k1(double x);

// exp(x) * K_nu(x); finite for every x > 0.
double bessel_k0_scaled(double x);
double bessel_k1_scaled(double x);

// x * K1(x), with the x -> 0 limit 1 returned for x == 0.
double x_bessel_k1(double x);

}  // namespace salpeter::specfun
