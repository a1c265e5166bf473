#include "mfock/tensor_sum.hpp"

#include <algorithm>
#include <string>

#include "mfock/error.hpp"

namespace mfock {

TensorSum::TensorSum(int arity) : arity_(arity) {
    if (arity < 0) throw DomainError("tensor sum arity must be nonnegative");
}

TensorSum TensorSum::pure(std::vector<PiecewisePolynomial> factors, const Rational& coefficient) {
    TensorSum f(static_cast<int>(factors.size()));
    f.add_term(coefficient, std::move(factors));
    return f;
}

TensorSum TensorSum::constant(const Rational& value) {
    TensorSum f(0);
    f.add_term(value, {});
    return f;
}

void TensorSum::add_term(const Rational& coefficient, std::vector<PiecewisePolynomial> factors) {
    if (static_cast<int>(factors.size()) != arity_) {
        throw DomainError("tensor term of length " + std::to_string(factors.size()) + " in sum of arity " +
                          std::to_string(arity_));
    }
    if (coefficient.is_zero()) return;
    if (std::any_of(factors.begin(), factors.end(), [](const auto& h) { return h.is_zero(); })) return;
    terms_.push_back({coefficient, std::move(factors)});
}

Rational TensorSum::scalar_value() const {
    Rational total;
    for (const auto& t : terms_) total += t.coefficient;
    return total;
}

TensorSum& TensorSum::operator+=(const TensorSum& rhs) {
    if (rhs.arity_ != arity_) throw DomainError("adding tensor sums of different arity");
    terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
    return *this;
}

TensorSum& TensorSum::operator-=(const TensorSum& rhs) {
    if (rhs.arity_ != arity_) throw DomainError("subtracting tensor sums of different arity");
    for (const auto& t : rhs.terms_) terms_.push_back({-t.coefficient, t.factors});
    return *this;
}

TensorSum& TensorSum::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coefficient *= c;
    return *this;
}

}  // namespace mfock
