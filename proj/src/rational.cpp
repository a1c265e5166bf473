#include "mfock/rational.hpp"

#include <cctype>
#include <ostream>

#include "mfock/error.hpp"

namespace mfock {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const {
    if (digits < 0) digits = 0;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class num = abs(value_.get_num());
    const mpz_class& den = value_.get_den();
    mpz_class scaled = (2 * num * scale + den) / (2 * den);
    if (scaled == 0) return "0";

    std::string body = scaled.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
        while (body.back() == '0') body.pop_back();
        if (body.back() == '.') body.pop_back();
    }
    return sign() < 0 ? "-" + body : body;
}

Rational Rational::pow(int exponent) const {
    if (exponent < 0) {
        if (is_zero()) throw DomainError("zero raised to a negative power");
        return Rational(1) / pow(-exponent);
    }
    mpz_class n;
    mpz_class d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(mpq_class(n, d));
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DomainError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace mfock
