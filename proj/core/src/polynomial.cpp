#include "gonil/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace gonil {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(std::size_t k, const Rational& c) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
}

Rational Polynomial::leading() const {
    if (coeffs_.empty()) return 0;
    return coeffs_.back();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<Rational> v(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + rhs.coeff(i);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    std::vector<Rational> v(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - rhs.coeff(i);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return Polynomial();
    std::vector<Rational> v(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& s) const {
    std::vector<Rational> v(coeffs_);
    for (auto& c : v) c *= s;
    return Polynomial(std::move(v));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return (*this) * (Rational(1) / leading());
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
    Polynomial rem = *this;
    std::vector<Rational> q;
    if (rem.degree() >= divisor.degree() && !rem.is_zero())
        q.assign(rem.degree() - divisor.degree() + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        const std::size_t shift = rem.degree() - divisor.degree();
        const Rational factor = rem.leading() / divisor.leading();
        q[shift] = factor;
        rem = rem - Polynomial::monomial(shift, factor) * divisor;
    }
    return {Polynomial(std::move(q)), rem};
}

std::pair<Polynomial, std::size_t> Polynomial::strip_zero_roots() const {
    if (is_zero()) return {Polynomial(), 0};
    std::size_t k = 0;
    while (coeffs_[k] == 0) ++k;
    return {Polynomial(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end())), k};
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        const Rational a = abs(c);
        if (i == 0 || a != 1) out << to_string(a);
        if (i > 0) out << var;
        if (i > 1) out << "^" << i;
        first = false;
    }
    return out.str();
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial f = a, g = b;
    while (!g.is_zero()) {
        Polynomial r = f.divmod(g).second;
        f = std::move(g);
        g = r.monic();  // normalization keeps coefficient growth in check
    }
    return f.monic();
}

bool is_squarefree(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("is_squarefree: zero polynomial");
    if (p.is_constant()) return true;
    return poly_gcd(p, p.derivative()).is_constant();
}

}  // namespace gonil
