#ifndef PERIODLAB_PIPELINE_HPP
#define PERIODLAB_PIPELINE_HPP

#include "periodlab/algebraicity.hpp"
#include "periodlab/elliptic.hpp"
#include "periodlab/hypergeom.hpp"

namespace periodlab {

enum class Codimension { One, Two, UndeterminedByTheorem };

// Pure decision table: no CM forces codimension 2; CM together with a
// recognized Schwarz value in the base field gives 1; CM alone leaves the
// question open.
Codimension codimension_decision(bool is_cm, bool schwarz_in_field);

struct Theorem1Bounds {
    long schwarz_deg = 8;
    BigInt schwarz_height{100000000};
    BigInt cm_height{1000000};
    BigInt field_height{1000000};
};

struct HodgeReport {
    std::string input_desc;
    Complex z;
    std::optional<Rational> z_exact;
    CMDecision cm;
    std::optional<Complex> schwarz_value;
    std::optional<AlgebraicityReport> schwarz_alg;
    std::optional<Cyclotomic3Result> zeta3_coords;
    bool in_qzeta3 = false;
    Codimension codimension = Codimension::UndeterminedByTheorem;
    std::optional<AlgebraicityReport> gamma_at_z, gamma_at_1mz;
    long precision_bits = 0;
};

HodgeReport theorem1_from_z_value(const Complex& z, const std::string& input_desc,
                                  const PrecisionCtx& ctx, const Theorem1Bounds& bounds = {});
HodgeReport theorem1_from_t(const Rational& t, const PrecisionCtx& ctx,
                            const Theorem1Bounds& bounds = {});
HodgeReport theorem1_from_z(const Rational& z, const PrecisionCtx& ctx,
                            const Theorem1Bounds& bounds = {});
// solves -432/(z(z-1)) = j exactly; prefers the root in (0,1), else the
// smaller |z|
HodgeReport theorem1_from_j(const Rational& j, const PrecisionCtx& ctx,
                            const Theorem1Bounds& bounds = {});

// (omega, d omega/dz) for y^2 = x^3 - 3x + 2 - 4z at rational z in (0,1):
// the real period by endpoint-singular quadrature, its derivative through the
// reduction of second-order poles against the Bezout pair of (f, f').
std::pair<Real, Real> elliptic_period_pair(const Rational& z, const PrecisionCtx& ctx);

struct BridgeReport {
    std::vector<Rational> samples;
    std::vector<Real> deviations; // against propagation from the previous sample
    Real max_deviation;
};

// Propagates the elliptic period vector through the hypergeometric system
// between consecutive samples and compares with direct quadrature.
BridgeReport lemmagamma_bridge(std::vector<Rational> z_samples, const PrecisionCtx& ctx);

struct PeriodGammaReport {
    CMDecision cm;
    Complex schwarz_value;
    Cyclotomic3Result schwarz_coords;
    Complex omega1, omega2;
    AlgebraicityReport omega1_test, omega2_test; // against Gamma(1/3)^3/pi
};

// At a CM point whose Schwarz value lies in Q(zeta3), tests both fundamental
// periods against Gamma(1/3)^3/pi; rejects other inputs.
PeriodGammaReport period_gamma_check(const Complex& z0, const PrecisionCtx& ctx);

} // namespace periodlab

#endif
