#include "mfock/stratified.hpp"

#include <algorithm>
#include <string>

#include "mfock/error.hpp"

namespace mfock {

StratifiedFunction::StratifiedFunction(int degree) : degree_(degree) {
    if (degree < 1) throw DomainError("stratified function degree must be >= 1");
}

void StratifiedFunction::add_term(const Composition& key, const Rational& coefficient,
                                  std::vector<PiecewisePolynomial> factors) {
    if (key.degree() != degree_) {
        throw DomainError("stratum " + key.to_string() + " has degree " + std::to_string(key.degree()) +
                          ", expected " + std::to_string(degree_));
    }
    if (static_cast<int>(factors.size()) != key.blocks()) {
        throw DomainError("stratum " + key.to_string() + " needs " + std::to_string(key.blocks()) + " factors");
    }
    if (coefficient.is_zero()) return;
    if (std::any_of(factors.begin(), factors.end(), [](const auto& h) { return h.is_zero(); })) return;
    components_[key].push_back({coefficient, std::move(factors)});
}

std::size_t StratifiedFunction::term_count() const {
    std::size_t n = 0;
    for (const auto& [key, terms] : components_) n += terms.size();
    return n;
}

StratifiedFunction& StratifiedFunction::operator+=(const StratifiedFunction& rhs) {
    if (rhs.degree_ != degree_) throw DomainError("adding stratified functions of different degree");
    for (const auto& [key, terms] : rhs.components_) {
        auto& dst = components_[key];
        dst.insert(dst.end(), terms.begin(), terms.end());
    }
    return *this;
}

StratifiedFunction& StratifiedFunction::operator-=(const StratifiedFunction& rhs) {
    if (rhs.degree_ != degree_) throw DomainError("subtracting stratified functions of different degree");
    for (const auto& [key, terms] : rhs.components_) {
        auto& dst = components_[key];
        for (const auto& t : terms) dst.push_back({-t.coefficient, t.factors});
    }
    return *this;
}

StratifiedFunction& StratifiedFunction::operator*=(const Rational& c) {
    if (c.is_zero()) {
        components_.clear();
        return *this;
    }
    for (auto& [key, terms] : components_) {
        for (auto& t : terms) t.coefficient *= c;
    }
    return *this;
}

void StratifiedFunction::merge_duplicates() {
    for (auto it = components_.begin(); it != components_.end();) {
        auto& terms = it->second;
        std::sort(terms.begin(), terms.end(),
                  [](const RankTerm& x, const RankTerm& y) { return x.factors < y.factors; });
        std::vector<RankTerm> merged;
        for (auto& t : terms) {
            if (!merged.empty() && merged.back().factors == t.factors) {
                merged.back().coefficient += t.coefficient;
            } else {
                merged.push_back(std::move(t));
            }
        }
        std::erase_if(merged, [](const RankTerm& t) { return t.coefficient.is_zero(); });
        if (merged.empty()) {
            it = components_.erase(it);
        } else {
            terms = std::move(merged);
            ++it;
        }
    }
}

Rational simplex_integral(const std::vector<PiecewisePolynomial>& factors) {
    if (factors.empty()) throw DomainError("simplex integral needs at least one factor");
    if (factors.size() == 1) return factors.front().integral();
    PiecewisePolynomial kernel = factors.front().tail_integral();
    for (std::size_t j = 1; j + 1 < factors.size(); ++j) {
        if (kernel.is_zero()) return Rational(0);
        kernel = (factors[j] * kernel).tail_integral();
    }
    return (factors.back() * kernel).integral();
}

Rational stratum_weight(const Composition& key, const NormSequence& c) {
    Rational w(1);
    for (int l : key.parts()) w *= c[l + 1];
    return w;
}

StratifiedFunction restrict_to_simplex(const TensorSum& f) {
    StratifiedFunction out(f.arity());
    for (const auto& key : compositions(f.arity())) {
        for (const auto& term : f.terms()) {
            std::vector<PiecewisePolynomial> factors;
            factors.reserve(static_cast<std::size_t>(key.blocks()));
            std::size_t pos = 0;
            for (int j = 0; j < key.blocks(); ++j) {
                PiecewisePolynomial block = term.factors[pos++];
                for (int r = 1; r < key.block_size(j); ++r) block = block * term.factors[pos++];
                factors.push_back(std::move(block));
            }
            out.add_term(key, term.coefficient, std::move(factors));
        }
    }
    return out;
}

StratifiedFunction monotone_product(const StratifiedFunction& f, const StratifiedFunction& g) {
    StratifiedFunction out(f.degree() + g.degree());
    for (const auto& [fkey, fterms] : f.components()) {
        for (const auto& [gkey, gterms] : g.components()) {
            // Split between blocks: the block lists concatenate.
            std::vector<int> joined = fkey.parts();
            joined.insert(joined.end(), gkey.parts().begin(), gkey.parts().end());
            // Split inside a block: f's last block and g's first block fuse.
            std::vector<int> fused(fkey.parts().begin(), fkey.parts().end() - 1);
            fused.push_back(fkey.parts().back() + gkey.parts().front() + 1);
            fused.insert(fused.end(), gkey.parts().begin() + 1, gkey.parts().end());
            const Composition joined_key(std::move(joined));
            const Composition fused_key(std::move(fused));

            for (const auto& ft : fterms) {
                for (const auto& gt : gterms) {
                    const Rational coeff = ft.coefficient * gt.coefficient;
                    std::vector<PiecewisePolynomial> cat = ft.factors;
                    cat.insert(cat.end(), gt.factors.begin(), gt.factors.end());
                    out.add_term(joined_key, coeff, std::move(cat));

                    std::vector<PiecewisePolynomial> merged(ft.factors.begin(), ft.factors.end() - 1);
                    merged.push_back(ft.factors.back() * gt.factors.front());
                    merged.insert(merged.end(), gt.factors.begin() + 1, gt.factors.end());
                    out.add_term(fused_key, coeff, std::move(merged));
                }
            }
        }
    }
    return out;
}

namespace {

Rational pair_integral(const RankTerm& x, const RankTerm& y) {
    std::vector<PiecewisePolynomial> prod;
    prod.reserve(x.factors.size());
    for (std::size_t j = 0; j < x.factors.size(); ++j) {
        prod.push_back(x.factors[j] * y.factors[j]);
        if (prod.back().is_zero()) return Rational(0);
    }
    return x.coefficient * y.coefficient * simplex_integral(prod);
}

template <typename Weight>
Rational weighted_inner(const StratifiedFunction& f, const StratifiedFunction& g, Weight weight) {
    if (f.degree() != g.degree()) {
        throw DomainError("inner product of degrees " + std::to_string(f.degree()) + " and " +
                          std::to_string(g.degree()));
    }
    Rational total;
    for (const auto& [key, fterms] : f.components()) {
        const auto it = g.components().find(key);
        if (it == g.components().end()) continue;
        const Rational w = weight(key);
        if (w.is_zero()) continue;
        Rational sum;
        for (const auto& x : fterms) {
            for (const auto& y : it->second) sum += pair_integral(x, y);
        }
        total += w * sum;
    }
    return total;
}

template <typename Weight>
Rational weighted_norm2(const StratifiedFunction& f, Weight weight) {
    Rational total;
    for (const auto& [key, terms] : f.components()) {
        const Rational w = weight(key);
        if (w.is_zero()) continue;
        Rational diag;
        Rational off;
        for (std::size_t a = 0; a < terms.size(); ++a) {
            diag += pair_integral(terms[a], terms[a]);
            for (std::size_t b = a + 1; b < terms.size(); ++b) off += pair_integral(terms[a], terms[b]);
        }
        total += w * (diag + Rational(2) * off);
    }
    return total;
}

}  // namespace

Rational inner_product(const StratifiedFunction& f, const StratifiedFunction& g, const NormSequence& c) {
    return weighted_inner(f, g, [&](const Composition& key) { return stratum_weight(key, c); });
}

Rational lebesgue_inner(const StratifiedFunction& f, const StratifiedFunction& g) {
    return weighted_inner(f, g, [](const Composition&) { return Rational(1); });
}

Rational norm2(const StratifiedFunction& f, const NormSequence& c) {
    return weighted_norm2(f, [&](const Composition& key) { return stratum_weight(key, c); });
}

bool strat_is_zero(const StratifiedFunction& f) {
    StratifiedFunction reduced = f;
    reduced.merge_duplicates();
    return weighted_norm2(reduced, [](const Composition&) { return Rational(1); }).is_zero();
}

}  // namespace mfock
