#include "mfock/meixner.hpp"

#include <string>
#include <utility>

#include "mfock/error.hpp"

namespace mfock {

PolynomialExpansion PolynomialExpansion::monomial(const TensorSum& f) {
    PolynomialExpansion e;
    e.add(f);
    return e;
}

TensorSum PolynomialExpansion::term(int i) const {
    const auto it = terms_.find(i);
    return it == terms_.end() ? TensorSum(i) : it->second;
}

void PolynomialExpansion::add(const TensorSum& f) {
    if (f.arity() == 0) {
        constant_ += f.scalar_value();
        return;
    }
    if (f.empty()) return;
    auto [it, inserted] = terms_.try_emplace(f.arity(), f);
    if (!inserted) it->second += f;
}

PolynomialExpansion PolynomialExpansion::times_omega(const PiecewisePolynomial& h) const {
    PolynomialExpansion out;
    if (!constant_.is_zero()) out.add(TensorSum::pure({h}, constant_));
    for (const auto& [deg, f] : terms_) {
        TensorSum g(deg + 1);
        for (const auto& t : f.terms()) {
            std::vector<PiecewisePolynomial> factors{h};
            factors.insert(factors.end(), t.factors.begin(), t.factors.end());
            g.add_term(t.coefficient, std::move(factors));
        }
        out.add(g);
    }
    return out;
}

PolynomialExpansion& PolynomialExpansion::operator+=(const PolynomialExpansion& rhs) {
    constant_ += rhs.constant_;
    for (const auto& [deg, f] : rhs.terms_) add(f);
    return *this;
}

PolynomialExpansion& PolynomialExpansion::operator-=(const PolynomialExpansion& rhs) {
    constant_ -= rhs.constant_;
    for (const auto& [deg, f] : rhs.terms_) add(Rational(-1) * f);
    return *this;
}

PolynomialExpansion& PolynomialExpansion::operator*=(const Rational& c) {
    constant_ *= c;
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [deg, f] : terms_) f *= c;
    return *this;
}

TensorSum diag1(const TensorSum& f) {
    if (f.arity() < 2) throw DomainError("diag1 needs arity >= 2");
    TensorSum out(f.arity() - 1);
    for (const auto& t : f.terms()) {
        std::vector<PiecewisePolynomial> factors(t.factors.begin() + 1, t.factors.end());
        factors[0] = t.factors[0] * factors[0];
        out.add_term(t.coefficient, std::move(factors));
    }
    return out;
}

TensorSum diag2(const TensorSum& f) {
    if (f.arity() < 3) throw DomainError("diag2 needs arity >= 3");
    TensorSum out(f.arity() - 2);
    for (const auto& t : f.terms()) {
        std::vector<PiecewisePolynomial> factors(t.factors.begin() + 2, t.factors.end());
        factors[0] = t.factors[0] * t.factors[1] * factors[0];
        out.add_term(t.coefficient, std::move(factors));
    }
    return out;
}

PiecewisePolynomial tail_product(const PiecewisePolynomial& h1, const PiecewisePolynomial& h2,
                                 const PiecewisePolynomial& h3) {
    return (h1 * h2).tail_integral() * h3;
}

TensorSum tail_contract(const TensorSum& f) {
    if (f.arity() < 2) throw DomainError("tail_contract needs arity >= 2");
    TensorSum out(f.arity() - 2);
    for (const auto& t : f.terms()) {
        if (f.arity() == 2) {
            out.add_term(t.coefficient * (t.factors[0] * t.factors[1]).integral(), {});
            continue;
        }
        std::vector<PiecewisePolynomial> factors(t.factors.begin() + 2, t.factors.end());
        factors[0] = tail_product(t.factors[0], t.factors[1], factors[0]);
        out.add_term(t.coefficient, std::move(factors));
    }
    return out;
}

namespace {

/// R_{i,n} as maps on tensor sums, memoized on (i, argument) for one call.
class CoefficientOperators {
public:
    CoefficientOperators(Rational lambda, Rational eta) : lambda_(std::move(lambda)), eta_(std::move(eta)) {}

    TensorSum apply(int i, const TensorSum& f) {
        const int n = f.arity();
        if (i < 0 || i > n || f.empty()) return TensorSum(std::max(i, 0));
        auto key = std::make_pair(i, f);
        if (const auto it = memo_.find(key); it != memo_.end()) return it->second;

        TensorSum out(i);
        if (n == 1) {
            if (i == 1) out = f;
        } else if (n == 2) {
            if (i == 2) out = f;
            if (i == 1) out = Rational(-1) * lambda_ * diag1(f);
            if (i == 0) out = Rational(-1) * tail_contract(f);
        } else {
            out = identity_tensor(i, f);
            if (!lambda_.is_zero()) out -= lambda_ * apply(i, diag1(f));
            out -= apply(i, tail_contract(f));
            if (!eta_.is_zero()) out -= eta_ * apply(i, diag2(f));
        }
        memo_.emplace(std::move(key), out);
        return out;
    }

private:
    /// (1 (x) R_{i-1,n-1}) f, evaluated per pure tensor h_1 (x) rest.
    TensorSum identity_tensor(int i, const TensorSum& f) {
        TensorSum out(i);
        if (i == 0) return out;
        for (const auto& t : f.terms()) {
            const TensorSum rest =
                TensorSum::pure(std::vector<PiecewisePolynomial>(t.factors.begin() + 1, t.factors.end()));
            const TensorSum inner = apply(i - 1, rest);
            for (const auto& s : inner.terms()) {
                std::vector<PiecewisePolynomial> factors{t.factors[0]};
                factors.insert(factors.end(), s.factors.begin(), s.factors.end());
                out.add_term(t.coefficient * s.coefficient, std::move(factors));
            }
        }
        return out;
    }

    Rational lambda_;
    Rational eta_;
    std::map<std::pair<int, TensorSum>, TensorSum> memo_;
};

using Word = std::vector<PiecewisePolynomial>;

class ListRecursion {
public:
    ListRecursion(Rational lambda, Rational eta) : lambda_(std::move(lambda)), eta_(std::move(eta)) {}

    PolynomialExpansion expand(const Word& hs) {
        if (const auto it = memo_.find(hs); it != memo_.end()) return it->second;
        PolynomialExpansion out;
        const std::size_t n = hs.size();
        if (n == 1) {
            out = PolynomialExpansion::monomial(TensorSum::pure(hs));
        } else if (n == 2) {
            out = PolynomialExpansion::monomial(TensorSum::pure(hs));
            out.add(TensorSum::pure({hs[0] * hs[1]}, -lambda_));
            out.add(TensorSum::constant(-(hs[0] * hs[1]).integral()));
        } else {
            out = expand(Word(hs.begin() + 1, hs.end())).times_omega(hs[0]);

            Word merged{hs[0] * hs[1]};
            merged.insert(merged.end(), hs.begin() + 2, hs.end());
            out -= lambda_ * expand(merged);

            Word contracted{tail_product(hs[0], hs[1], hs[2])};
            contracted.insert(contracted.end(), hs.begin() + 3, hs.end());
            out -= expand(contracted);

            Word triple{hs[0] * hs[1] * hs[2]};
            triple.insert(triple.end(), hs.begin() + 3, hs.end());
            out -= eta_ * expand(triple);
        }
        memo_.emplace(hs, out);
        return out;
    }

private:
    Rational lambda_;
    Rational eta_;
    std::map<Word, PolynomialExpansion> memo_;
};

/// Chain vectors <omega,h_1>...<omega,h_n> Omega, memoized on suffixes.
class ChainCache {
public:
    explicit ChainCache(const JacobiData& nu) : nu_(nu) {}

    const FockVector& get(const Word& hs) {
        if (const auto it = memo_.find(hs); it != memo_.end()) return it->second;
        FockVector v = hs.empty() ? vacuum() : omega_apply(nu_, hs[0], get(Word(hs.begin() + 1, hs.end())));
        return memo_.emplace(hs, std::move(v)).first->second;
    }

private:
    const JacobiData& nu_;
    std::map<Word, FockVector> memo_;
};

FockVector to_fock(ChainCache& cache, const PolynomialExpansion& e) {
    FockVector out(e.constant());
    for (const auto& [deg, f] : e.terms()) {
        for (const auto& t : f.terms()) out += t.coefficient * cache.get(t.factors);
    }
    return out;
}

}  // namespace

PolynomialExpansion r_expand(const TensorSum& f, const Rational& lambda, const Rational& eta) {
    if (f.arity() < 1) throw DomainError("r_expand needs arity >= 1");
    CoefficientOperators ops(lambda, eta);
    PolynomialExpansion out;
    for (int i = 0; i <= f.arity(); ++i) out.add(ops.apply(i, f));
    return out;
}

PolynomialExpansion cor35_step(std::span<const PiecewisePolynomial> hs, const Rational& lambda,
                               const Rational& eta) {
    if (hs.empty()) throw DomainError("cor35_step needs at least one function");
    ListRecursion rec(lambda, eta);
    return rec.expand(Word(hs.begin(), hs.end()));
}

FockVector expansion_to_fock(const JacobiData& nu, const PolynomialExpansion& e) {
    ChainCache cache(nu);
    return to_fock(cache, e);
}

bool MeixnerReport::consistent() const {
    return meixner ? !first_failure().has_value() : first_failure().has_value();
}

std::optional<int> MeixnerReport::first_failure() const {
    for (const auto& d : degrees) {
        if (!d.pass) return d.degree;
    }
    return std::nullopt;
}

MeixnerReport meixner_verify(const JacobiData& nu, std::span<const PiecewisePolynomial> family, int max_degree) {
    MeixnerReport report;
    if (const auto params = nu.is_meixner()) {
        report.meixner = true;
        report.lambda = params->lambda;
        report.eta = params->eta;
    } else {
        report.lambda = nu.b(0);
        report.eta = nu.depth() > 1 ? nu.a(1) : Rational(0);
    }
    if (family.empty()) return report;

    ChainCache cache(nu);
    const int size = static_cast<int>(family.size());
    for (int n = 1; n <= max_degree; ++n) {
        DegreeReport dr;
        dr.degree = n;
        std::vector<int> idx(static_cast<std::size_t>(n), 0);
        while (true) {
            Word word;
            for (int k : idx) word.push_back(family[static_cast<std::size_t>(k)]);
            const FockVector image = to_fock(cache, r_expand(TensorSum::pure(word), report.lambda, report.eta));
            const FockVector projection(cache.get(word).component(n));
            const Rational r = fock_norm2(nu, image - projection);
            if (!r.is_zero() && dr.witness.empty()) dr.witness = idx;
            dr.residual_norm += r;

            int pos = n - 1;
            while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == size) idx[static_cast<std::size_t>(pos--)] = 0;
            if (pos < 0) break;
        }
        dr.pass = dr.residual_norm.is_zero();
        report.degrees.push_back(std::move(dr));
    }
    return report;
}

}  // namespace mfock
