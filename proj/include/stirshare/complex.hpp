#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace stirshare {

using cplx = std::complex<double>;

/// z -> value.
using ComplexFn = std::function<cplx(cplx)>;

/// (z, m) -> [g(z), g'(z), ..., g^{(m)}(z)].
using DerivativesFn = std::function<std::vector<cplx>(cplx, int)>;

/// x^k for integer k by repeated squaring; no branch choice involved.
cplx int_pow(cplx x, int k);

}  // namespace stirshare
