#include "dilog/lucas/params.hpp"

namespace dilog {

namespace {

QuadraticElement discriminant(const QuadraticElement& P, const QuadraticElement& Q) {
    return P * P - Q * Rational(4);
}

}  // namespace

LucasParams::LucasParams(QuadraticElement P, QuadraticElement Q)
    : P_(std::move(P)), Q_(std::move(Q)) {
    if (P_.radicand() != Q_.radicand()) {
        throw std::invalid_argument("LucasParams: P and Q must share a radicand");
    }
    if (P_.sign() <= 0) throw std::invalid_argument("LucasParams: P must be positive, got " + P_.to_string());
    if (Q_.is_zero()) throw std::invalid_argument("LucasParams: Q must be nonzero");
    D_ = discriminant(P_, Q_);
    if (D_.sign() <= 0) {
        throw std::invalid_argument("LucasParams: D = P^2 - 4Q must be positive, got " + D_.to_string());
    }
}

LucasParams LucasParams::rational(const Rational& P, const Rational& Q) {
    const Rational D = P * P - Rational(4) * Q;
    // Radicand D keeps alpha and beta inside the field; a nonpositive D is
    // rejected by the constructor, so clamp only to build the element.
    const Rational radicand = D.sign() > 0 ? D : Rational(0);
    return LucasParams(QuadraticElement::embed(P, radicand), QuadraticElement::embed(Q, radicand));
}

bool LucasParams::is_rational() const { return P_.as_rational() && Q_.as_rational(); }

Rational LucasParams::P_rational() const {
    if (auto p = P_.as_rational()) return *p;
    throw LucasUnsupported("P = " + P_.to_string() + " is irrational; use the numeric path");
}

Rational LucasParams::Q_rational() const {
    if (auto q = Q_.as_rational()) return *q;
    throw LucasUnsupported("Q = " + Q_.to_string() + " is irrational; use the numeric path");
}

Rational LucasParams::D_rational() const {
    if (auto d = D_.as_rational()) return *d;
    throw LucasUnsupported("D = " + D_.to_string() + " is irrational");
}

QuadraticElement LucasParams::sqrt_D() const {
    if (auto r = exact_sqrt(D_)) return *r;
    throw LucasUnsupported("sqrt(D) for D = " + D_.to_string() + " is not in Q(sqrt(" + radicand().to_string() +
                           "))");
}

QuadraticElement LucasParams::alpha() const { return (P_ + sqrt_D()) / Rational(2); }

QuadraticElement LucasParams::beta() const { return (P_ - sqrt_D()) / Rational(2); }

std::string LucasParams::to_string() const { return "(P, Q) = (" + P_.to_string() + ", " + Q_.to_string() + ")"; }

NumericLucasParams::NumericLucasParams(Ball P, Ball Q) : P_(std::move(P)), Q_(std::move(Q)) {
    if (!P_.is_positive()) throw std::invalid_argument("NumericLucasParams: P is not certainly positive");
    if (Q_.contains_zero()) throw std::invalid_argument("NumericLucasParams: Q is not certainly nonzero");
    D_ = sqr(P_) - Q_ * Rational(4);
    if (!D_.is_positive()) throw std::invalid_argument("NumericLucasParams: D is not certainly positive");
}

NumericLucasParams NumericLucasParams::from_exact(const LucasParams& params, Bits bits) {
    return NumericLucasParams(params.P().to_real(bits), params.Q().to_real(bits));
}

Ball NumericLucasParams::alpha() const { return (P_ + sqrt(D_)) * Rational(1, 2); }

// Q / alpha avoids the cancellation in (P - sqrt(D))/2.
Ball NumericLucasParams::beta() const { return Q_ / alpha(); }

}  // namespace dilog
