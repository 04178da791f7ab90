#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "ccf/extended_complex.hpp"
#include "ccf/gaussian_int.hpp"

namespace ccf {

// A digit string a_0, a_1, ..., a_n of a minus continued fraction
// a_0 - 1/(a_1 - 1/(... - 1/a_n)).
struct DigitSeq {
    GaussianInt a0;
    std::vector<GaussianInt> rest;

    std::size_t size() const { return 1 + rest.size(); }
    const GaussianInt& digit(std::size_t k) const { return k == 0 ? a0 : rest[k - 1]; }
};

namespace exact {

using BigInt = boost::multiprecision::cpp_int;
using BigGaussian = BasicGaussian<BigInt>;

// Euclidean gcd in Z[i] (rounded division); result is zero only if both are.
BigGaussian gauss_gcd(BigGaussian a, BigGaussian b);

// Exact Gaussian rational num/den, den != 0, stored in canonical form:
// gcd-reduced with den rotated into the half-quadrant re > 0, im >= 0.
struct RationalComplex {
    BigGaussian num{BigInt(0), BigInt(0)};
    BigGaussian den{BigInt(1), BigInt(0)};

    RationalComplex() = default;
    RationalComplex(BigGaussian n, BigGaussian d);

    friend bool operator==(const RationalComplex&, const RationalComplex&) = default;
};

// A point of the rational Riemann sphere: den == 0 encodes infinity.
struct ProjectiveRational {
    BigGaussian num{BigInt(0), BigInt(0)};
    BigGaussian den{BigInt(1), BigInt(0)};

    bool is_infinity() const { return den.is_zero(); }
    std::optional<RationalComplex> finite() const {
        if (is_infinity()) return std::nullopt;
        return RationalComplex(num, den);
    }
    void canonicalize();

    friend bool operator==(const ProjectiveRational&, const ProjectiveRational&) = default;
};

std::complex<double> to_complex(const RationalComplex& r);
ExtendedComplex to_extended(const ProjectiveRational& r);

}  // namespace exact

// One row of the convergent recurrence p_n = a_n p_{n-1} - p_{n-2},
// q_n = a_n q_{n-1} - q_{n-2} (seeds p_{-2}=0, p_{-1}=1, q_{-2}=-1, q_{-1}=0).
// value is empty exactly when q_n == 0: the convergent is undefined there,
// but the row is still reported.
struct ConvergentEntry {
    exact::BigGaussian p, q;
    std::optional<exact::RationalComplex> value;
};

std::vector<ConvergentEntry> convergents(const DigitSeq& digits);

// Evaluates the nested expression right to left in exact arithmetic.
// Division by zero at an inner level propagates projectively (result may be
// the point at infinity). Independent oracle for convergents().
exact::ProjectiveRational eval_cf(const DigitSeq& digits);

// Whether |u| - |v| > C / |u|; brute-force oracle for the norm-gap lemma
// ("|u| > |v| > (C+1)sqrt(2) implies |u| - |v| > C/|u|").
bool norm_gap_holds(const GaussianInt& u, const GaussianInt& v, double C);

}  // namespace ccf
