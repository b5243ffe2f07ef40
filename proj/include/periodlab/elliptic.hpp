#ifndef PERIODLAB_ELLIPTIC_HPP
#define PERIODLAB_ELLIPTIC_HPP

#include "periodlab/poly.hpp"

#include <array>
#include <optional>

namespace periodlab {

enum class CurveKind { ShortWeierstrass, Quartic };

// y^2 = x^3 + p x + q, or y^2 = x^4 + u x^2 + 1. Coefficients are kept
// exactly when the curve came from rational data.
struct EllipticCurveModel {
    CurveKind kind = CurveKind::ShortWeierstrass;
    Complex p, q, u;
    std::optional<Rational> p_rat, q_rat, u_rat;
};

EllipticCurveModel curve_cubic(const Rational& p, const Rational& q);
EllipticCurveModel curve_cubic(const Complex& p, const Complex& q);
EllipticCurveModel curve_quartic(const Rational& u);

// y^2 = x^3 - 3x + 2 - (27/4)t^2 with z = (27/16)t^2; throws SingularFiber
// at t^2 in {0, 16/27}.
std::pair<EllipticCurveModel, Rational> curve_from_t(const Rational& t);

// Same family parametrized by z: y^2 = x^3 - 3x + 2 - 4z, singular at z in
// {0, 1}.
EllipticCurveModel curve_from_z(const Rational& z);
EllipticCurveModel curve_from_z(const Complex& z);

Complex j_invariant(const EllipticCurveModel& curve, const PrecisionCtx& ctx);

struct PeriodLattice {
    Complex omega1, omega2; // tau = omega1/omega2 in the upper half-plane
    Complex tau;
};

// Periods of dx/y by branch-tracked segment quadrature between roots.
PeriodLattice periods(const EllipticCurveModel& curve, const PrecisionCtx& ctx);

// AGM fast path; requires a short-Weierstrass curve with three real roots.
PeriodLattice periods_agm(const EllipticCurveModel& curve, const PrecisionCtx& ctx);

struct TauReduction {
    Complex tau;                 // in the standard fundamental domain
    std::array<long, 4> abcd;    // tau' = (a tau + b)/(c tau + d)
    std::string word;            // as S/T letters, applied left to right
};

TauReduction tau_reduce(const Complex& tau);

// Modular j via the q-expansions of E4 and the discriminant.
Complex modular_j(const Complex& tau, const PrecisionCtx& ctx);

struct CMDecision {
    bool is_cm = false;
    BigInt A, B, C;      // A tau^2 + B tau + C = 0, primitive, A > 0
    BigInt discriminant; // B^2 - 4AC
    Real residual;
    long verified_at_bits = 0;
    Complex tau;         // the reduced tau used
};

// Integer-relation CM test on the reduced period ratio, re-verified at
// doubled precision; throws Inconclusive when the two precisions disagree.
CMDecision cm_detect(const EllipticCurveModel& curve, const BigInt& max_coeff,
                     const PrecisionCtx& ctx);

// Reduced primitive binary quadratic forms (a, b, c) of discriminant D < 0.
std::vector<std::array<long, 3>> reduced_forms(long D);

// prod over the form class group of (x - j(tau_form)), coefficients rounded
// to integers; the deviation from integrality is returned for certification.
std::pair<std::vector<BigInt>, Real> hilbert_class_polynomial(long D, const PrecisionCtx& ctx);

} // namespace periodlab

#endif
