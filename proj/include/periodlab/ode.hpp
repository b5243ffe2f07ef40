#ifndef PERIODLAB_ODE_HPP
#define PERIODLAB_ODE_HPP

#include "periodlab/ratfunc.hpp"

namespace periodlab {

// Scalar linear ODE p_m y^(m) + ... + p_1 y' + p_0 y = 0, stored ascending
// (coeffs[i] multiplies y^(i)), in integer-primitive form.
struct ScalarODE {
    std::vector<Poly> coeffs;

    long order() const { return static_cast<long>(coeffs.size()) - 1; }
    const Poly& leading() const { return coeffs.back(); }
    // scale to integer coefficients with overall content 1, leading lc > 0
    ScalarODE primitive() const;
    std::string str(const std::string& var = "t") const;
    bool operator==(const ScalarODE& o) const { return coeffs == o.coeffs; }
};

// Y' = A(x) Y with A a square matrix of rational functions.
struct FirstOrderSystem {
    RatFuncMatrix A;
    std::string var = "z";

    size_t dim() const { return A.rows(); }
    // least common denominator of the entries; its roots are the poles of A
    Poly singular_locus() const;
    std::vector<Complex> singular_points(const PrecisionCtx& ctx) const;
};

// Piecewise-linear continuation path.
struct CPath {
    std::vector<Complex> vertices;

    static CPath segment(const Complex& from, const Complex& to) { return {{from, to}}; }
    // positively oriented square loop centered at `around` through base-side entry
    static CPath square_loop(const Complex& base, const Complex& around, const Real& half_side);
    Real clearance(const std::vector<Complex>& singularities) const;
};

struct MonodromyResult {
    Complex base;
    Complex around;
    std::vector<std::vector<Complex>> matrix; // basis after loop = basis * M
};

FirstOrderSystem companion_system(const ScalarODE& ode, const std::string& var = "t");

// Minimal scalar ODE annihilating y = <seed, Pi> where Pi' = A Pi, found by
// iterating u_{k+1} = u_k A + u_k' and testing for a Q(t)-linear relation.
// Throws NoRelationWithinCap.
ScalarODE system_to_scalar(const FirstOrderSystem& sys, const RFVector& seed, size_t order_cap);
ScalarODE system_to_scalar(const FirstOrderSystem& sys, size_t seed_index, size_t order_cap);

// System for G Y: A~ = (G' + G A) G^{-1}
FirstOrderSystem gauge_transform(const FirstOrderSystem& sys, const RatFuncMatrix& G);

// Substitute x = s(t): A~(t) = A(s(t)) s'(t)
FirstOrderSystem pullback(const FirstOrderSystem& sys_in_x, const Poly& substitution,
                          const std::string& new_var = "t");

// Taylor-series analytic continuation of the initial value along the path.
std::vector<Complex> continue_solution(const FirstOrderSystem& sys,
                                       const std::vector<Complex>& initial, const CPath& path,
                                       const PrecisionCtx& ctx);

// Monodromy of a fundamental basis around an isolated singularity. `basis` is
// the fundamental matrix value at `base` (columns = solutions); identity by
// default. Returns M with (basis continued along loop) = basis * M.
MonodromyResult loop_monodromy(const FirstOrderSystem& sys, const Complex& base,
                               const Complex& around, const PrecisionCtx& ctx,
                               const std::vector<std::vector<Complex>>& basis = {});

// Frobenius indicial exponents at a root of the leading coefficient (or at
// infinity via point = nullopt). Throws IrregularSingularity.
std::vector<Complex> indicial_exponents(const ScalarODE& ode, const Complex& point,
                                        const PrecisionCtx& ctx);

enum class SingularityKind { Apparent, TrueSingularity };

// Apparent iff identity loop monodromy AND distinct nonnegative integer
// exponents; throws Inconclusive when the two checks disagree.
SingularityKind apparent_singularity_test(const ScalarODE& ode, const Complex& point,
                                          const PrecisionCtx& ctx);

// 2x2 complex linear algebra helpers shared by the hypergeometric layer.
using CMatrix = std::vector<std::vector<Complex>>;
CMatrix cmat_mul(const CMatrix& a, const CMatrix& b);
CMatrix cmat_inverse(const CMatrix& a);
Real cmat_max_diff(const CMatrix& a, const CMatrix& b);
Complex cmat_det(const CMatrix& a);

CPath parse_path(const std::string& text, const PrecisionCtx& ctx);

} // namespace periodlab

#endif
