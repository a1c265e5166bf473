#include "mfock/jacobi.hpp"

#include <string>

#include "mfock/error.hpp"

namespace mfock {

const Rational& NormSequence::operator[](int k) const {
    if (k < 1 || k > size()) {
        throw DepthError("norm c_" + std::to_string(k) + " beyond Jacobi depth " + std::to_string(size()));
    }
    return c_[static_cast<std::size_t>(k - 1)];
}

NormSequence NormSequence::unit(int length) {
    return NormSequence(std::vector<Rational>(static_cast<std::size_t>(length), Rational(1)));
}

JacobiData::JacobiData(std::vector<Rational> b, std::vector<Rational> a) : b_(std::move(b)), a_(std::move(a)) {
    if (b_.empty()) throw DomainError("Jacobi data needs depth >= 1");
    if (a_.size() + 1 != b_.size()) {
        throw DomainError("Jacobi data: expected " + std::to_string(b_.size() - 1) + " a-coefficients, got " +
                          std::to_string(a_.size()));
    }
    bool terminated = false;
    for (std::size_t k = 0; k < a_.size(); ++k) {
        if (a_[k].sign() < 0) throw DomainError("Jacobi data: a_" + std::to_string(k + 1) + " is negative");
        if (terminated && !a_[k].is_zero()) {
            throw DomainError("Jacobi data: a_" + std::to_string(k + 1) + " nonzero after a zero coefficient");
        }
        terminated = terminated || a_[k].is_zero();
    }
}

JacobiData JacobiData::constant(const Rational& lambda, const Rational& eta, int depth) {
    if (depth < 1) throw DomainError("Jacobi data needs depth >= 1");
    return JacobiData(std::vector<Rational>(static_cast<std::size_t>(depth), lambda),
                      std::vector<Rational>(static_cast<std::size_t>(depth - 1), eta));
}

const Rational& JacobiData::b(int k) const {
    if (k < 0 || k >= depth()) {
        throw DepthError("Jacobi coefficient b_" + std::to_string(k) + " beyond depth " + std::to_string(depth()));
    }
    return b_[static_cast<std::size_t>(k)];
}

const Rational& JacobiData::a(int k) const {
    if (k == 0) return one_;
    if (k < 0 || k >= depth()) {
        throw DepthError("Jacobi coefficient a_" + std::to_string(k) + " beyond depth " + std::to_string(depth()));
    }
    return a_[static_cast<std::size_t>(k - 1)];
}

Rational JacobiData::eval_p(int k, const Rational& s) const {
    if (k < 0 || k > depth()) {
        throw DepthError("polynomial p_" + std::to_string(k) + " beyond depth " + std::to_string(depth()));
    }
    Rational prev;  // p_{-1}
    Rational cur(1);
    for (int j = 0; j < k; ++j) {
        Rational next = (s - b(j)) * cur - (j == 0 ? Rational(0) : a(j) * prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Polynomial JacobiData::p_polynomial(int k) const {
    if (k < 0 || k > depth()) {
        throw DepthError("polynomial p_" + std::to_string(k) + " beyond depth " + std::to_string(depth()));
    }
    const Polynomial s({Rational(0), Rational(1)});
    Polynomial prev;
    Polynomial cur = Polynomial::constant(1);
    for (int j = 0; j < k; ++j) {
        Polynomial next = (s - Polynomial::constant(b(j))) * cur;
        if (j > 0) next -= a(j) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

NormSequence JacobiData::norms() const {
    std::vector<Rational> c;
    c.reserve(b_.size());
    Rational acc(1);
    for (int k = 1; k <= depth(); ++k) {
        if (k > 1) acc *= a(k - 1);
        c.push_back(acc);
    }
    return NormSequence(std::move(c));
}

Rational JacobiData::nu_moment(int m) const {
    if (m < 0 || m > 2 * depth() - 2) {
        throw DepthError("moment of order " + std::to_string(m) + " needs Jacobi depth " +
                         std::to_string(m / 2 + 1) + ", have " + std::to_string(depth()));
    }
    // (J^m)_{00} for the tridiagonal matrix with diagonal b_k, superdiagonal
    // a_{k+1} and subdiagonal 1; it has the same (0,0) powers as the symmetric
    // Jacobi matrix. Indices above m/2 cannot return to 0 in time.
    const int size = m / 2 + 1;
    std::vector<Rational> v(static_cast<std::size_t>(size));
    v[0] = Rational(1);
    for (int step = 0; step < m; ++step) {
        std::vector<Rational> w(static_cast<std::size_t>(size));
        for (int k = 0; k < size; ++k) {
            const auto& vk = v[static_cast<std::size_t>(k)];
            if (vk.is_zero()) continue;
            w[static_cast<std::size_t>(k)] += b(k) * vk;
            if (k + 1 < size) w[static_cast<std::size_t>(k + 1)] += vk;
            if (k > 0) w[static_cast<std::size_t>(k - 1)] += a(k) * vk;
        }
        v = std::move(w);
    }
    return v[0];
}

std::optional<MeixnerParameters> JacobiData::is_meixner() const {
    for (const auto& x : b_) {
        if (x != b_.front()) return std::nullopt;
    }
    for (const auto& x : a_) {
        if (x != a_.front()) return std::nullopt;
    }
    return MeixnerParameters{b_.front(), a_.empty() ? Rational(0) : a_.front()};
}

}  // namespace mfock
