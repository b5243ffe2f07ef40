#ifndef PERIODLAB_QUADRATURE_HPP
#define PERIODLAB_QUADRATURE_HPP

#include "periodlab/numerics.hpp"

#include <functional>
#include <vector>

namespace periodlab {

// Integrand evaluated at x in (lo,hi); dlo = x-lo and dhi = hi-x are passed
// separately because near the endpoints they are far more accurate than
// anything recoverable from x itself.
using EndpointAwareFn = std::function<Complex(const Real& x, const Real& dlo, const Real& dhi)>;

// Double-exponential quadrature over (lo,hi); tolerates algebraic endpoint
// singularities x^e with e > -1. Levels are doubled until two successive
// results agree to 2^-bits.
Complex tanh_sinh(const EndpointAwareFn& f, const Real& lo, const Real& hi,
                  const PrecisionCtx& ctx, int max_level = 14);

struct SegmentFactor {
    Complex root;
    Rational exponent;
};

// Integral over the straight segment p -> q of prod_k (x - root_k)^{e_k} dx.
// Branches are principal at the segment midpoint and continued continuously;
// factors rooted at p or q must have exponent > -1.
Complex segment_power_integral(const Complex& p, const Complex& q,
                               const std::vector<SegmentFactor>& factors,
                               const PrecisionCtx& ctx);

// Same integrand along a polyline; the branch of every factor is carried
// continuously across junctions (offsets snap to multiples of 2*pi*i).
// Factors may be rooted only at the first or last vertex.
Complex path_power_integral(const std::vector<Complex>& vertices,
                            const std::vector<SegmentFactor>& factors,
                            const PrecisionCtx& ctx);

// Polyline realizing the commutator of square loops around q then p, based at
// the segment midpoint.
std::vector<Complex> commutator_path(const Complex& p, const Complex& q);

// The commutator loop around p then q, based at the segment midpoint with
// principal branches, realized as polygonal loops (homotopy-exact).
Complex pochhammer_commutator_integral(const Complex& p, const Complex& q,
                                       const std::vector<SegmentFactor>& factors,
                                       const PrecisionCtx& ctx);

} // namespace periodlab

#endif
