#include "motzkin/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace motzkin {

namespace {

std::string format_terms(const std::vector<Rational>& coeffs) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Rational& c = coeffs[i];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = (mag == 1);
        if (!unit || i == 0) out << mag.get_str();
        if (i >= 1) {
            if (!unit) out << "*";
            out << "z";
            if (i >= 2) out << "^" << i;
        }
    }
    return first ? std::string("0") : out.str();
}

}  // namespace

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t exponent) {
    std::vector<Rational> v(exponent + 1);
    v[exponent] = c;
    return Poly(std::move(v));
}

Poly Poly::from_integers(const std::vector<long>& coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.emplace_back(c);
    return Poly(std::move(v));
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t Poly::valuation() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return i;
    return 0;
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Poly Poly::operator-() const {
    std::vector<Rational> v(coeffs_);
    for (auto& c : v) c = -c;
    return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(v));
}

std::string Poly::to_string() const { return format_terms(coeffs_); }

// -------------------------------------------------------------- Series

Series::Series(std::size_t order) : coeffs_(order) {}

Series::Series(std::vector<Rational> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order);
}

Series Series::from_poly(const Poly& p, std::size_t order) {
    std::vector<Rational> v(order);
    for (std::size_t i = 0; i < order && i < p.coeffs().size(); ++i) v[i] = p.coeffs()[i];
    return Series(std::move(v), order);
}

Series Series::constant(const Rational& c, std::size_t order) {
    Series s(order);
    if (order > 0) s.coeffs_[0] = c;
    return s;
}

std::size_t Series::valuation() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return i;
    return coeffs_.size();
}

Series Series::truncated(std::size_t order) const {
    if (order > coeffs_.size())
        throw MotzkinError(ErrorCode::InvalidArgument,
                           "cannot extend a series of order " + std::to_string(coeffs_.size()) +
                               " to order " + std::to_string(order));
    return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order)), order);
}

Series Series::shifted_up(std::size_t k) const {
    Series s(order());
    for (std::size_t i = 0; i + k < order(); ++i) s.coeffs_[i + k] = coeffs_[i];
    return s;
}

Series Series::shifted_down(std::size_t k) const {
    if (k > order()) throw MotzkinError(ErrorCode::NotDivisible, "shift exceeds series order");
    for (std::size_t i = 0; i < k; ++i)
        if (coeffs_[i] != 0) throw MotzkinError(ErrorCode::NotDivisible, "low coefficients are not zero");
    return Series(std::vector<Rational>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()), order() - k);
}

Series Series::pow(unsigned k) const {
    Series result = Series::constant(1, order());
    Series base = *this;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

std::vector<Integer> Series::integer_coeffs() const {
    std::vector<Integer> out;
    out.reserve(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].get_den() != 1)
            throw MotzkinError(ErrorCode::IntegralityViolation,
                               "coefficient of z^" + std::to_string(i) + " is " + coeffs_[i].get_str());
        out.push_back(coeffs_[i].get_num());
    }
    return out;
}

Series Series::operator-() const {
    Series s(*this);
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

Series operator+(const Series& a, const Series& b) { return series_ring_op(a, b, RingOp::Add); }
Series operator-(const Series& a, const Series& b) { return series_ring_op(a, b, RingOp::Sub); }
Series operator*(const Series& a, const Series& b) { return series_ring_op(a, b, RingOp::Mul); }

Series operator*(const Rational& c, const Series& a) {
    Series s(a);
    for (auto& x : s.coeffs_) x *= c;
    return s;
}

std::string Series::to_string() const {
    return format_terms(coeffs_) + " + O(z^" + std::to_string(order()) + ")";
}

// --------------------------------------------------------- operations

Series series_ring_op(const Series& a, const Series& b, RingOp op) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> v(n);
    switch (op) {
        case RingOp::Add:
            for (std::size_t i = 0; i < n; ++i) v[i] = a[i] + b[i];
            break;
        case RingOp::Sub:
            for (std::size_t i = 0; i < n; ++i) v[i] = a[i] - b[i];
            break;
        case RingOp::Mul:
            for (std::size_t i = 0; i < n; ++i) {
                if (a[i] == 0) continue;
                for (std::size_t j = 0; i + j < n; ++j) v[i + j] += a[i] * b[j];
            }
            break;
    }
    return Series(std::move(v), n);
}

Series series_inv(const Series& a) {
    const std::size_t n = a.order();
    if (n == 0) return Series(0);
    if (a[0] == 0) throw MotzkinError(ErrorCode::NonUnit, "constant term is zero");
    std::vector<Rational> b(n);
    const Rational inv0 = 1 / a[0];
    b[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= k; ++i)
            if (a[i] != 0) acc += a[i] * b[k - i];
        b[k] = -acc * inv0;
    }
    return Series(std::move(b), n);
}

Series series_div_exact(const Series& a, const Series& b) {
    const std::size_t vb = b.valuation();
    if (vb == b.order()) throw MotzkinError(ErrorCode::NotDivisible, "divisor is the zero series");
    const std::size_t n = std::min(a.order(), b.order());
    const std::size_t va = std::min(a.valuation(), n);
    if (va < vb)
        throw MotzkinError(ErrorCode::NotDivisible, "dividend valuation " + std::to_string(va) +
                                                        " < divisor valuation " + std::to_string(vb));
    const Series as = a.truncated(n).shifted_down(vb);
    const Series bs = b.truncated(n).shifted_down(vb);
    return as * series_inv(bs);
}

Series series_sqrt(const Series& a) {
    const std::size_t n = a.order();
    if (n == 0) return Series(0);
    if (a[0] != 1) throw MotzkinError(ErrorCode::BadConstantTerm, "constant term is " + a[0].get_str());
    std::vector<Rational> r(n);
    r[0] = 1;
    // a_k = sum_{i=0..k} r_i r_{k-i}  =>  2 r_k = a_k - sum_{i=1..k-1} r_i r_{k-i}
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc = a[k];
        for (std::size_t i = 1; i < k; ++i) acc -= r[i] * r[k - i];
        r[k] = acc / 2;
    }
    return Series(std::move(r), n);
}

// ------------------------------------------------------- RationalFunc

RationalFunc::RationalFunc(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw MotzkinError(ErrorCode::InvalidArgument, "rational function with zero denominator");
}

Series RationalFunc::to_series(std::size_t order) const {
    // Polynomials are exact, so expand far enough to absorb the valuation loss.
    const std::size_t extra = den.valuation();
    return series_div_exact(Series::from_poly(num, order + extra), Series::from_poly(den, order + extra))
        .truncated(order);
}

std::string RationalFunc::to_string() const { return "(" + num.to_string() + ")/(" + den.to_string() + ")"; }

}  // namespace motzkin
