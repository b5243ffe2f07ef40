#ifndef PERIODLAB_PRECISION_HPP
#define PERIODLAB_PRECISION_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace periodlab {

using Real = boost::multiprecision::mpfr_float;
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Error with a stable machine-readable code (see the CLI JSON schema).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Working precision plus the recomputation factor used for certified digits.
struct PrecisionCtx {
    unsigned bits = 256;
    unsigned certify_ratio = 2;

    explicit PrecisionCtx(unsigned b = 256, unsigned ratio = 2)
        : bits(b < 64 ? 64 : b), certify_ratio(ratio < 2 ? 2 : ratio) {}

    static PrecisionCtx from_digits(unsigned decimal_digits) {
        return PrecisionCtx(static_cast<unsigned>(decimal_digits * 3.3219280948874) + 32);
    }

    unsigned digits10() const { return static_cast<unsigned>(bits * 0.30102999566398) + 1; }

    PrecisionCtx doubled() const { return PrecisionCtx(bits * certify_ratio, certify_ratio); }
};

// Sets the thread default mpfr precision for the lifetime of the guard.
class ScopedPrecision {
public:
    explicit ScopedPrecision(const PrecisionCtx& ctx)
        : saved_(Real::default_precision()) {
        Real::default_precision(ctx.digits10() + 5);
    }
    ~ScopedPrecision() { Real::default_precision(saved_); }
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    unsigned saved_;
};

inline Real const_pi() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

inline Real to_real(const Rational& q) {
    Real n(numerator(q));
    Real d(denominator(q));
    return n / d;
}

// 2^-k as a Real, for tolerance thresholds.
inline Real pow2(long k) {
    Real r(1);
    mpfr_mul_2si(r.backend().data(), r.backend().data(), k, MPFR_RNDN);
    return r;
}

inline bool is_nonpositive_integer(const Rational& q) {
    return denominator(q) == 1 && numerator(q) <= 0;
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

Rational parse_rational(const std::string& s);

} // namespace periodlab

#endif
