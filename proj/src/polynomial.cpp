#include "mfock/polynomial.hpp"

#include <algorithm>

namespace mfock {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational Polynomial::operator()(const Rational& t) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

Polynomial Polynomial::antiderivative() const {
    if (coeffs_.empty()) return {};
    std::vector<Rational> out(coeffs_.size() + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out[k + 1] = coeffs_[k] / Rational(static_cast<long>(k + 1));
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        out[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    }
    return Polynomial(std::move(out));
}

Rational Polynomial::integrate(const Rational& lo, const Rational& hi) const {
    const Polynomial anti = antiderivative();
    return anti(hi) - anti(lo);
}

Polynomial Polynomial::translated(const Rational& u) const {
    if (u.is_zero() || coeffs_.size() <= 1) return *this;
    // Horner in (t - u).
    const Polynomial shift({-u, Rational(1)});
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * shift;
        acc += Polynomial::constant(*it);
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

}  // namespace mfock
