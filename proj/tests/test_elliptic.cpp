#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "periodlab/elliptic.hpp"

#include <fstream>
#include <random>
#include <sstream>

using namespace periodlab;

namespace {
const PrecisionCtx ctx = PrecisionCtx::from_digits(50);
Real tol(int digits) { return pow(Real(10), -digits); }
} // namespace

TEST_CASE("curve construction and singular fibers") {
    CHECK_THROWS_AS(curve_from_t(Rational(0)), Error);
    CHECK_THROWS_AS(curve_from_z(Rational(1)), Error);
    CHECK_THROWS_AS(curve_cubic(Rational(-3), Rational(2)), Error); // discriminant 0
    auto [model, z] = curve_from_t(Rational(1, 5));
    CHECK(z == Rational(27, 400));
    CHECK(model.q_rat == Rational(2) - Rational(4) * z);
}

TEST_CASE("j-invariant fixed points") {
    ScopedPrecision guard(ctx);
    // y^2 = x^3 + x has j = 1728; y^2 = x^3 + 1 has j = 0
    CHECK(abs(j_invariant(curve_cubic(Rational(1), Rational(0)), ctx) - Complex(1728)) < tol(40));
    CHECK(abs(j_invariant(curve_cubic(Rational(0), Rational(1)), ctx)) < tol(40));
    // the quartic x^4 + u x^2 + 1 via invariants I, J
    Complex jq = j_invariant(curve_quartic(Rational(0)), ctx);
    CHECK(abs(jq - Complex(1728)) < tol(40)); // lemniscatic curve
}

TEST_CASE("quadrature periods match the AGM on real-rooted curves, randomized") {
    ScopedPrecision guard(ctx);
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> num(1, 9);
    int done = 0;
    while (done < 4) {
        // three real roots r1+r2+r3 = 0 guaranteed by construction
        Rational r1(num(rng), 10), r2(-num(rng), 7);
        Rational r3 = -r1 - r2;
        if (r1 == r2 || r2 == r3 || r1 == r3) continue;
        Rational p = r1 * r2 + r1 * r3 + r2 * r3;
        Rational q = -r1 * r2 * r3;
        auto curve = curve_cubic(p, q);
        auto fast = periods_agm(curve, ctx);
        auto slow = periods(curve, ctx);
        CHECK(abs(fast.tau - slow.tau) < tol(40));
        CHECK(abs(fast.omega1 - slow.omega1) + abs(fast.omega2 - slow.omega2) < tol(38));
        ++done;
    }
}

TEST_CASE("period lattice feeds a consistent j through the modular function") {
    ScopedPrecision guard(ctx);
    auto curve = curve_from_z(Rational(1, 3));
    auto lat = periods(curve, ctx);
    Complex direct = j_invariant(curve, ctx);
    Complex viaq = modular_j(lat.tau, ctx);
    CHECK(abs(direct - viaq) < tol(38));
}

TEST_CASE("tau reduction lands in the fundamental domain and preserves j") {
    ScopedPrecision guard(ctx);
    std::mt19937 rng(10);
    std::uniform_int_distribution<int> num(-12, 12), den(7, 19);
    for (int i = 0; i < 6; ++i) {
        Complex tau(Rational(num(rng), den(rng)) + 3, Rational(den(rng), 13));
        auto red = tau_reduce(tau);
        CHECK(abs(red.tau.re) <= Real(1) / 2 + tol(30));
        CHECK(abs(red.tau) >= 1 - tol(30));
        CHECK(red.tau.im > 0);
        CHECK(abs(modular_j(tau, ctx) - modular_j(red.tau, ctx)) < tol(30));
    }
}

TEST_CASE("cm detection fixtures") {
    ScopedPrecision guard(ctx);
    auto cm = cm_detect(curve_from_z(Rational(1, 2)), BigInt(1000000), ctx);
    CHECK(cm.is_cm);
    CHECK(cm.discriminant == -4);
    Complex i(Real(0), Real(1));
    CHECK(abs(cm.tau - i) < tol(40));
    // j = 0: tau = zeta6, discriminant -3
    auto cm3 = cm_detect(curve_cubic(Rational(0), Rational(1)), BigInt(1000000), ctx);
    CHECK(cm3.is_cm);
    CHECK(cm3.discriminant == -3);
}

TEST_CASE("no false cm on random fibers") {
    ScopedPrecision guard(PrecisionCtx::from_digits(100));
    PrecisionCtx big = PrecisionCtx::from_digits(100);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(1, 30);
    int done = 0;
    while (done < 6) {
        Rational t(num(rng), 31);
        auto [curve, z] = curve_from_t(t);
        auto cm = cm_detect(curve, BigInt(100000), big);
        CHECK(!cm.is_cm);
        ++done;
    }
}

TEST_CASE("reduced forms and class numbers") {
    CHECK(reduced_forms(-4).size() == 1);
    CHECK(reduced_forms(-23).size() == 3);
    CHECK(reduced_forms(-15).size() == 2);
    for (const auto& f : reduced_forms(-71)) {
        CHECK(f[1] * f[1] - 4 * f[0] * f[2] == -71);
    }
    CHECK(reduced_forms(-71).size() == 7);
}

TEST_CASE("stored class polynomials match live recomputation") {
    ScopedPrecision guard(ctx);
    std::ifstream in(PERIODLAB_DATA_DIR "/cm_table.txt");
    REQUIRE(in.good());
    std::string line;
    std::vector<std::pair<long, std::vector<BigInt>>> table;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        long d, h;
        ss >> d >> h;
        std::vector<BigInt> c;
        std::string tok;
        while (ss >> tok) c.emplace_back(tok);
        REQUIRE(static_cast<long>(c.size()) == h + 1);
        table.emplace_back(d, std::move(c));
    }
    CHECK(table.size() == 30);
    for (long d : {-4, -15, -88}) {
        auto it = std::find_if(table.begin(), table.end(),
                               [&](const auto& e) { return e.first == d; });
        REQUIRE(it != table.end());
        auto [coeffs, dev] = hilbert_class_polynomial(d, ctx);
        CHECK(dev < tol(30));
        CHECK(coeffs == it->second);
    }
}
