#pragma once

#include <stdexcept>
#include <string>

#include "dilog/exactnum/quadratic.hpp"
#include "dilog/exactnum/rational.hpp"
#include "dilog/numeric/ball.hpp"

namespace dilog {

/// Requested an exact operation on parameters that only the numeric path
/// supports.
class LucasUnsupported : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact Lucas parameters (P, Q) with D = P^2 - 4Q.
///
/// P and Q live in one field Q(sqrt(r)). Rational parameters use r = D so
/// that alpha and beta are exact elements of the same field. Construction
/// enforces P > 0, Q != 0 and D > 0 exactly and throws std::invalid_argument
/// otherwise.
class LucasParams {
public:
    LucasParams(QuadraticElement P, QuadraticElement Q);

    static LucasParams rational(const Rational& P, const Rational& Q);

    const QuadraticElement& P() const { return P_; }
    const QuadraticElement& Q() const { return Q_; }
    const QuadraticElement& D() const { return D_; }
    const Rational& radicand() const { return P_.radicand(); }

    bool is_rational() const;
    /// Throw LucasUnsupported unless the parameter is rational.
    Rational P_rational() const;
    Rational Q_rational() const;
    Rational D_rational() const;

    /// sqrt(D) inside the field; LucasUnsupported when it is not there.
    QuadraticElement sqrt_D() const;
    /// Roots of x^2 - Px + Q, alpha > beta.
    QuadraticElement alpha() const;
    QuadraticElement beta() const;

    /// The field element with rational value q.
    QuadraticElement embed(const Rational& q) const { return QuadraticElement::embed(q, radicand()); }

    std::string to_string() const;

private:
    QuadraticElement P_;
    QuadraticElement Q_;
    QuadraticElement D_;
};

/// Real Lucas parameters carried as enclosures, for P such as 2cosh(theta).
/// Construction requires P > 0, Q != 0 and D > 0 to be certain.
class NumericLucasParams {
public:
    NumericLucasParams(Ball P, Ball Q);
    static NumericLucasParams from_exact(const LucasParams& params, Bits bits);

    const Ball& P() const { return P_; }
    const Ball& Q() const { return Q_; }
    const Ball& D() const { return D_; }
    Ball alpha() const;
    Ball beta() const;
    Bits precision() const { return P_.precision(); }

private:
    Ball P_;
    Ball Q_;
    Ball D_;
};

}  // namespace dilog
