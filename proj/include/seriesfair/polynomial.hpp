#pragma once

#include "seriesfair/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace seriesfair {

/// Univariate polynomial over double, coefficients stored in ascending power
/// order with trailing zeros trimmed.  Evaluation uses Horner's scheme.
class RealPolynomial {
public:
    RealPolynomial() = default;
    explicit RealPolynomial(std::vector<double> coeffs);

    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<double>& coefficients() const { return coeffs_; }

    double operator()(double x) const;

    RealPolynomial derivative() const;

private:
    std::vector<double> coeffs_;
};

/// Polynomial in two variables p and r with exact rational coefficients.
///
/// Terms are stored sparsely, keyed by (degree in p, degree in r); a zero
/// coefficient is never kept, so the zero polynomial has an empty term map
/// and equality is plain structural comparison.
class BivariatePolynomial {
public:
    using Key = std::pair<int, int>; // (degree in p, degree in r)

    BivariatePolynomial() = default;

    static BivariatePolynomial constant(const Rational& c);
    static BivariatePolynomial var_p();
    static BivariatePolynomial var_r();
    static BivariatePolynomial monomial(const Rational& c, int deg_p, int deg_r);

    bool is_zero() const { return terms_.empty(); }

    /// Highest power of p appearing, or -1 for the zero polynomial.
    int degree_p() const;

    /// Lowest power of p appearing, or 0 for the zero polynomial.
    int min_degree_p() const;

    /// Coefficient of p^deg_p r^deg_r (zero if absent).
    Rational coefficient(int deg_p, int deg_r) const;

    const std::map<Key, Rational>& terms() const { return terms_; }

    BivariatePolynomial& operator+=(const BivariatePolynomial& o);
    BivariatePolynomial& operator-=(const BivariatePolynomial& o);
    BivariatePolynomial& operator*=(const BivariatePolynomial& o);

    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
    friend BivariatePolynomial operator*(BivariatePolynomial a, const BivariatePolynomial& b) { return a *= b; }

    friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BivariatePolynomial& a, const BivariatePolynomial& b) { return !(a == b); }

    /// Partial derivative with respect to p.
    BivariatePolynomial derivative_p() const;

    /// Substitute a fixed value for r, producing a univariate polynomial in p.
    /// Each coefficient is computed exactly and rounded to double once.
    /// Throws std::domain_error if r is not finite and strictly positive.
    RealPolynomial fix_r(double r) const;

    /// Exact evaluation: rationals in, rational out.
    Rational evaluate_exact(const Rational& p, const Rational& r) const;

    /// Evaluate at double arguments.  The arguments are converted to exact
    /// rationals, the polynomial is evaluated exactly, and the result is
    /// rounded to double once at the end.
    double evaluate(double p, double r) const;

    /// Exact quotient after dividing by p^k.  Throws std::domain_error if any
    /// term has p-degree below k (i.e. p^k does not divide the polynomial).
    BivariatePolynomial divide_by_p(int k) const;

    /// Exact quotient when (p - 1) divides this polynomial, viewing it as a
    /// polynomial in p with coefficients in the rationals extended by r.
    /// Returns std::nullopt when the division leaves a remainder.
    std::optional<BivariatePolynomial> divide_by_p_minus_one() const;

    /// Canonical display form: terms grouped by descending powers of p, each
    /// group's coefficient written as a polynomial in r in descending powers,
    /// with a common sign pulled outside the parentheses when every part of
    /// the coefficient agrees.  Examples:
    ///   (2r+1)p^2-2rp^3
    ///   6r^2p^5-(9r^2+6r)p^4+(3r^2+8r+1)p^3-(2r+1)p^2
    std::string str() const;

private:
    std::map<Key, Rational> terms_;

    // Single mutation point: inserts, overwrites, or erases so that the
    // "no stored zero coefficients" invariant always holds.
    void set(int deg_p, int deg_r, const Rational& c);
};

} // namespace seriesfair
