#ifndef GONIL_POLYNOMIAL_HPP
#define GONIL_POLYNOMIAL_HPP

#include <cstddef>
#include <vector>

#include "gonil/rational.hpp"

namespace gonil {

/// Univariate polynomial over Rational, coefficients lowest degree first.
/// The representation is trimmed: the leading coefficient is nonzero unless
/// the polynomial is zero (empty coefficient list).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational& c);
    /// x^k
    static Polynomial monomial(std::size_t k, const Rational& c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// Degree of the zero polynomial is reported as 0.
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }
    Rational leading() const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Rational& s) const;
    bool operator==(const Polynomial& rhs) const = default;

    Rational eval(const Rational& x) const;
    Polynomial derivative() const;
    /// Leading coefficient scaled to 1; zero stays zero.
    Polynomial monic() const;
    /// Quotient and remainder; throws on zero divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

    /// Splits off the power of x dividing the polynomial:
    /// p = x^k * q with q(0) != 0. Returns {q, k}.
    std::pair<Polynomial, std::size_t> strip_zero_roots() const;

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// True iff gcd(p, p') is constant. Throws std::invalid_argument on the
/// zero polynomial.
bool is_squarefree(const Polynomial& p);

}  // namespace gonil

#endif
