#ifndef PERIODLAB_CATALOG_HPP
#define PERIODLAB_CATALOG_HPP

#include "periodlab/ode.hpp"

#include <array>
#include <optional>

namespace periodlab {

struct FamilyODE {
    std::string label;
    ScalarODE ode;
};

// One cubic-fourfold family f = x1^3+...+x5^3 + (quadratic-and-linear part in
// x1,x2). The lower-order part is stored as the coefficients of
// x1^2, x1*x2, x2^2, x1, x2 in that order; x3..x5 never appear below the
// cubic terms, so their critical contribution is always xi = 0.
struct FamilyRecord {
    std::string name;
    std::string display;
    std::array<Rational, 5> quad{};
    Poly singular_locus;
    std::optional<RatFuncMatrix> matrix; // connection matrix, del(omega) = M omega / denom
    std::vector<FamilyODE> odes;
    std::vector<std::string> notes;

    const ScalarODE& ode(const std::string& label) const; // throws UnknownForm
    bool has_ode(const std::string& label) const;
};

struct CriticalValueSet {
    std::vector<Complex> values;
    Real max_gradient_residual;
};

struct ApparentCandidate {
    Complex point;
    std::string ode_label;
    SingularityKind verdict;
};

struct ConsistencyReport {
    std::string family;
    std::vector<Complex> criticals;
    bool criticals_in_every_leading = false;
    Real max_mismatch;                      // worst distance critical -> nearest lead root
    std::vector<ApparentCandidate> leftovers;
    bool ok = false;
};

// Algebraic-map stanza shared with the curve-family checks: a radical
// extension K(u) with u^power = value-expression, derived coordinates, and
// residual expressions expected to vanish (or, for xfail entries, not to).
struct MapCheck {
    std::string label;
    std::string expression;
    bool expect_zero = true;
};

struct MapSpec {
    std::string name;
    std::string radical_var;
    long radical_power = 2;
    std::string radical_value;
    std::string indep;
    std::vector<std::string> givens;
    std::vector<std::pair<std::string, std::string>> defs;
    std::vector<MapCheck> checks;
    std::vector<std::string> notes;
};

const std::vector<std::string>& catalog_names();
const FamilyRecord& catalog_get(const std::string& name); // throws UnknownFamily

const std::vector<std::string>& mapspec_names();
const MapSpec& mapspec_get(const std::string& name); // throws UnknownMapSpec

CriticalValueSet critical_values(const std::string& name, const PrecisionCtx& ctx);
ConsistencyReport singular_locus_consistency(const std::string& name, const PrecisionCtx& ctx);

// Canonical ASCII label for a differential form; accepts the typeset variants
// used on the command line ("∇ω0", "ω12", ...).
std::string normalize_form_label(const std::string& label);

} // namespace periodlab

#endif
