#include "mfock/piecewise.hpp"

#include <algorithm>
#include <iterator>

#include "mfock/error.hpp"

namespace mfock {

namespace {

const Polynomial& zero_polynomial() {
    static const Polynomial zero;
    return zero;
}

template <typename Op>
PiecewisePolynomial combine(const PiecewisePolynomial& f, const PiecewisePolynomial& g, bool intersect, Op op) {
    std::vector<Rational> grid;
    grid.reserve(f.breakpoints().size() + g.breakpoints().size());
    std::set_union(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(),
                   g.breakpoints().end(), std::back_inserter(grid));
    if (intersect) {
        if (f.is_zero() || g.is_zero()) return {};
        const Rational lo = std::max(f.breakpoints().front(), g.breakpoints().front());
        const Rational hi = std::min(f.breakpoints().back(), g.breakpoints().back());
        if (lo >= hi) return {};
        std::erase_if(grid, [&](const Rational& x) { return x < lo || x > hi; });
    }
    if (grid.size() < 2) return {};
    std::vector<Polynomial> pieces;
    pieces.reserve(grid.size() - 1);
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        pieces.push_back(op(f.piece_at(grid[k]), g.piece_at(grid[k])));
    }
    return PiecewisePolynomial(std::move(grid), std::move(pieces));
}

}  // namespace

PiecewisePolynomial::PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (breakpoints_.empty() && !pieces_.empty()) {
        throw DomainError("piecewise polynomial: pieces given without breakpoints");
    }
    if (!breakpoints_.empty() && pieces_.size() + 1 != breakpoints_.size()) {
        throw DomainError("piecewise polynomial: need exactly one piece per interval");
    }
    if (!breakpoints_.empty() && breakpoints_.front().sign() < 0) {
        throw DomainError("piecewise polynomial: negative breakpoint " + breakpoints_.front().to_string());
    }
    for (std::size_t k = 1; k < breakpoints_.size(); ++k) {
        if (!(breakpoints_[k - 1] < breakpoints_[k])) {
            throw DomainError("piecewise polynomial: breakpoints not strictly increasing at " +
                              breakpoints_[k].to_string());
        }
    }
    canonicalize();
}

PiecewisePolynomial PiecewisePolynomial::indicator(const Rational& a, const Rational& b) {
    return on_interval(Polynomial::constant(1), a, b);
}

PiecewisePolynomial PiecewisePolynomial::on_interval(const Polynomial& p, const Rational& a, const Rational& b) {
    if (!(a < b)) return {};
    return PiecewisePolynomial({a, b}, {p});
}

void PiecewisePolynomial::canonicalize() {
    if (pieces_.empty()) {
        breakpoints_.clear();
        return;
    }
    std::vector<Rational> bps{breakpoints_.front()};
    std::vector<Polynomial> pcs{pieces_.front()};
    for (std::size_t k = 1; k < pieces_.size(); ++k) {
        if (pieces_[k] == pcs.back()) {
            continue;  // merged: drop breakpoint k
        }
        bps.push_back(breakpoints_[k]);
        pcs.push_back(std::move(pieces_[k]));
    }
    bps.push_back(breakpoints_.back());

    std::size_t first = 0;
    std::size_t last = pcs.size();
    while (first < last && pcs[first].is_zero()) ++first;
    while (last > first && pcs[last - 1].is_zero()) --last;
    if (first == last) {
        breakpoints_.clear();
        pieces_.clear();
        return;
    }
    breakpoints_.assign(std::make_move_iterator(bps.begin() + static_cast<std::ptrdiff_t>(first)),
                        std::make_move_iterator(bps.begin() + static_cast<std::ptrdiff_t>(last + 1)));
    pieces_.assign(std::make_move_iterator(pcs.begin() + static_cast<std::ptrdiff_t>(first)),
                   std::make_move_iterator(pcs.begin() + static_cast<std::ptrdiff_t>(last)));
}

int PiecewisePolynomial::max_degree() const {
    int d = -1;
    for (const auto& p : pieces_) d = std::max(d, p.degree());
    return d;
}

const Polynomial& PiecewisePolynomial::piece_at(const Rational& t) const {
    if (pieces_.empty() || t < breakpoints_.front() || t >= breakpoints_.back()) return zero_polynomial();
    const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
    return pieces_[static_cast<std::size_t>(std::distance(breakpoints_.begin(), it)) - 1];
}

Rational PiecewisePolynomial::operator()(const Rational& t) const {
    if (t.sign() < 0) throw DomainError("evaluation at negative time " + t.to_string());
    return piece_at(t)(t);
}

Rational PiecewisePolynomial::integral() const {
    Rational total;
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
        total += pieces_[k].integrate(breakpoints_[k], breakpoints_[k + 1]);
    }
    return total;
}

PiecewisePolynomial PiecewisePolynomial::tail_integral() const {
    if (pieces_.empty()) return {};
    const std::size_t m = pieces_.size();
    std::vector<Polynomial> out(m);
    Rational beyond;  // integral over [x_{k+1}, inf)
    for (std::size_t k = m; k-- > 0;) {
        const Polynomial anti = pieces_[k].antiderivative();
        // integral_t^{x_{k+1}} p = P(x_{k+1}) - P(t)
        out[k] = Polynomial::constant(beyond + anti(breakpoints_[k + 1])) - anti;
        beyond += anti(breakpoints_[k + 1]) - anti(breakpoints_[k]);
    }
    std::vector<Rational> bps = breakpoints_;
    if (bps.front().sign() > 0) {
        bps.insert(bps.begin(), Rational(0));
        out.insert(out.begin(), Polynomial::constant(beyond));
    }
    return PiecewisePolynomial(std::move(bps), std::move(out));
}

PiecewisePolynomial PiecewisePolynomial::shifted(const Rational& u) const {
    if (u.sign() < 0) throw DomainError("shift by negative amount " + u.to_string());
    if (u.is_zero() || pieces_.empty()) return *this;
    std::vector<Rational> bps;
    bps.reserve(breakpoints_.size());
    for (const auto& x : breakpoints_) bps.push_back(x + u);
    std::vector<Polynomial> pcs;
    pcs.reserve(pieces_.size());
    for (const auto& p : pieces_) pcs.push_back(p.translated(u));
    return PiecewisePolynomial(std::move(bps), std::move(pcs));
}

PiecewisePolynomial PiecewisePolynomial::derivative() const {
    if (pieces_.empty()) return {};
    std::vector<Polynomial> pcs;
    pcs.reserve(pieces_.size());
    for (const auto& p : pieces_) pcs.push_back(p.derivative());
    return PiecewisePolynomial(breakpoints_, std::move(pcs));
}

PiecewisePolynomial& PiecewisePolynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        breakpoints_.clear();
        pieces_.clear();
        return *this;
    }
    for (auto& p : pieces_) p *= c;
    return *this;
}

PiecewisePolynomial PiecewisePolynomial::operator-() const {
    PiecewisePolynomial r = *this;
    for (auto& p : r.pieces_) p = -p;
    return r;
}

PiecewisePolynomial operator+(const PiecewisePolynomial& f, const PiecewisePolynomial& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    return combine(f, g, false, [](const Polynomial& p, const Polynomial& q) { return p + q; });
}

PiecewisePolynomial operator-(const PiecewisePolynomial& f, const PiecewisePolynomial& g) {
    if (g.is_zero()) return f;
    return combine(f, g, false, [](const Polynomial& p, const Polynomial& q) { return p - q; });
}

PiecewisePolynomial operator*(const PiecewisePolynomial& f, const PiecewisePolynomial& g) {
    return combine(f, g, true, [](const Polynomial& p, const Polynomial& q) { return p * q; });
}

}  // namespace mfock
