#pragma once

namespace holokrein {

/// Gamma function on the real line by the Lanczos approximation (g = 7, 9 terms),
/// with reflection below 1/2. Poles (nonpositive integers) raise DomainError.
double gamma_fn(double x);

/// 1 / Gamma(x); exactly zero at the poles of Gamma.
double rgamma(double x);

}  // namespace holokrein
