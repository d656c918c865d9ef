#ifndef MOTZKIN_ALGEBRA_HPP
#define MOTZKIN_ALGEBRA_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "motzkin/error.hpp"

namespace motzkin {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense univariate polynomial in z with exact rational coefficients,
// lowest exponent first. The zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<long> coeffs);

    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, std::size_t exponent);
    static Poly from_integers(const std::vector<long>& coeffs);

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    // Degree of a nonzero polynomial; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    // Exponent of the lowest nonzero term; 0 for the zero polynomial.
    std::size_t valuation() const noexcept;
    Rational coeff(std::size_t i) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string to_string() const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

// Truncated power series c_0 + c_1 z + ... + c_{N-1} z^{N-1} + O(z^N).
// Binary operations truncate to the smaller order; nothing ever extends
// the order silently.
class Series {
public:
    Series() = default;
    // Zero series of the given order.
    explicit Series(std::size_t order);
    Series(std::vector<Rational> coeffs, std::size_t order);

    static Series from_poly(const Poly& p, std::size_t order);
    static Series constant(const Rational& c, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size(); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    Rational& operator[](std::size_t i) { return coeffs_.at(i); }

    // Index of the first nonzero coefficient; order() if the series is zero.
    std::size_t valuation() const noexcept;
    bool is_zero() const noexcept { return valuation() == order(); }

    Series truncated(std::size_t order) const;
    // Multiply by z^k (drops the top k coefficients, keeping the order).
    Series shifted_up(std::size_t k) const;
    // Divide by z^k; the low k coefficients must be zero. Order drops by k.
    Series shifted_down(std::size_t k) const;
    Series pow(unsigned k) const;

    // Coefficients as integers; throws IntegralityViolation otherwise.
    std::vector<Integer> integer_coeffs() const;

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Rational& c, const Series& a);
    friend bool operator==(const Series& a, const Series& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;
};

enum class RingOp { Add, Sub, Mul };

Series series_ring_op(const Series& a, const Series& b, RingOp op);
// Multiplicative inverse of a unit series. Throws NonUnit.
Series series_inv(const Series& a);
// Quotient q with q*b == a, after removing the common power of z.
// Result order is min(a.order, b.order) - valuation(b). Throws NotDivisible.
Series series_div_exact(const Series& a, const Series& b);
// Square root with constant term 1 via the coefficient recursion.
// Throws BadConstantTerm.
Series series_sqrt(const Series& a);

// num/den stored as-is; equality by cross multiplication.
struct RationalFunc {
    Poly num;
    Poly den;

    RationalFunc() : num(), den(Poly::constant(1)) {}
    RationalFunc(Poly n, Poly d);

    Series to_series(std::size_t order) const;
    friend bool operator==(const RationalFunc& a, const RationalFunc& b) {
        return a.num * b.den == b.num * a.den;
    }
    std::string to_string() const;
};

}  // namespace motzkin

#endif  // MOTZKIN_ALGEBRA_HPP
