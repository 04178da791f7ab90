#include "ccf/rational_complex.hpp"

#include <stdexcept>

namespace ccf {
namespace exact {
namespace {

// floor(a / b) for b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;  // truncates toward zero
    if (a % b != 0 && a < 0) --q;
    return q;
}

// round(a / b) for b > 0, half rounded up.
BigInt round_div(const BigInt& a, const BigInt& b) { return floor_div(2 * a + b, 2 * b); }

// Nearest Gaussian integer to a/b (componentwise rounding of a*conj(b)/|b|^2).
BigGaussian rounded_quotient(const BigGaussian& a, const BigGaussian& b) {
    const BigGaussian t = a * b.conj();
    const BigInt n = b.norm();
    return {round_div(t.re, n), round_div(t.im, n)};
}

}  // namespace

BigGaussian gauss_gcd(BigGaussian a, BigGaussian b) {
    // |a - qb| < |b| for the rounded quotient, so the loop terminates.
    while (!b.is_zero()) {
        const BigGaussian q = rounded_quotient(a, b);
        const BigGaussian r = a - q * b;
        a = b;
        b = r;
    }
    return a;
}

namespace {

// Unit i^k rotating g into the canonical half-quadrant re > 0, im >= 0.
// Exactly one of the four associates lands there for g != 0.
BigGaussian canonical_unit_for(const BigGaussian& g) {
    BigGaussian u{BigInt(1), BigInt(0)};
    BigGaussian v = g;
    const BigGaussian i{BigInt(0), BigInt(1)};
    for (int k = 0; k < 4; ++k) {
        if (v.re > 0 && v.im >= 0) return u;
        v = v * i;
        u = u * i;
    }
    // g == 0 only; caller guards.
    return {BigInt(1), BigInt(0)};
}

}  // namespace

RationalComplex::RationalComplex(BigGaussian n, BigGaussian d) {
    if (d.is_zero()) throw std::invalid_argument("RationalComplex: zero denominator");
    const BigGaussian g = gauss_gcd(n, d);
    if (!g.is_zero()) {
        // Exact division by the gcd.
        const BigInt gn = g.norm();
        BigGaussian np = n * g.conj();
        BigGaussian dp = d * g.conj();
        n = {np.re / gn, np.im / gn};
        d = {dp.re / gn, dp.im / gn};
    }
    const BigGaussian u = canonical_unit_for(d);
    num = n * u;
    den = d * u;
}

void ProjectiveRational::canonicalize() {
    if (den.is_zero()) {
        if (num.is_zero()) throw std::invalid_argument("ProjectiveRational: 0/0");
        num = {BigInt(1), BigInt(0)};
        return;
    }
    const RationalComplex r(num, den);
    num = r.num;
    den = r.den;
}

std::complex<double> to_complex(const RationalComplex& r) {
    const BigGaussian t = r.num * r.den.conj();
    const double n = static_cast<double>(r.den.norm());
    return {static_cast<double>(t.re) / n, static_cast<double>(t.im) / n};
}

ExtendedComplex to_extended(const ProjectiveRational& r) {
    if (r.is_infinity()) return ExtendedComplex::infinity();
    return ExtendedComplex(to_complex(*r.finite()));
}

}  // namespace exact

std::vector<ConvergentEntry> convergents(const DigitSeq& digits) {
    using exact::BigGaussian;
    using exact::BigInt;
    BigGaussian p_prev2{BigInt(0), BigInt(0)}, p_prev1{BigInt(1), BigInt(0)};
    BigGaussian q_prev2{BigInt(-1), BigInt(0)}, q_prev1{BigInt(0), BigInt(0)};
    std::vector<ConvergentEntry> out;
    out.reserve(digits.size());
    for (std::size_t k = 0; k < digits.size(); ++k) {
        const BigGaussian a{BigInt(digits.digit(k).re), BigInt(digits.digit(k).im)};
        BigGaussian p = a * p_prev1 - p_prev2;
        BigGaussian q = a * q_prev1 - q_prev2;
        ConvergentEntry e{p, q, std::nullopt};
        if (!q.is_zero()) e.value = exact::RationalComplex(p, q);
        out.push_back(std::move(e));
        p_prev2 = p_prev1;
        p_prev1 = p;
        q_prev2 = q_prev1;
        q_prev1 = q;
    }
    return out;
}

exact::ProjectiveRational eval_cf(const DigitSeq& digits) {
    using exact::BigGaussian;
    using exact::BigInt;
    if (digits.size() == 0) throw std::invalid_argument("eval_cf: empty digit string");
    exact::ProjectiveRational v;
    {
        const GaussianInt a = digits.digit(digits.size() - 1);
        v.num = {BigInt(a.re), BigInt(a.im)};
        v.den = {BigInt(1), BigInt(0)};
    }
    for (std::size_t k = digits.size() - 1; k-- > 0;) {
        // v <- a_k - 1/v == (a_k * num - den) / num.
        const GaussianInt ak = digits.digit(k);
        const BigGaussian a{BigInt(ak.re), BigInt(ak.im)};
        BigGaussian new_num = a * v.num - v.den;
        v.den = v.num;
        v.num = new_num;
        v.canonicalize();
    }
    return v;
}

bool norm_gap_holds(const GaussianInt& u, const GaussianInt& v, double C) {
    const double au = abs(u);
    const double av = abs(v);
    if (au == 0.0) return C == 0.0 ? (au - av > 0.0) : false;
    return au - av > C / au;
}

}  // namespace ccf
