#include "mfock/fock.hpp"

#include <functional>

#include "mfock/error.hpp"

namespace mfock {

FockVector::FockVector(StratifiedFunction component) { add(component); }

StratifiedFunction FockVector::component(int n) const {
    const auto it = graded_.find(n);
    return it == graded_.end() ? StratifiedFunction(n) : it->second;
}

int FockVector::max_degree() const { return graded_.empty() ? 0 : graded_.rbegin()->first; }

std::size_t FockVector::term_count() const {
    std::size_t n = 0;
    for (const auto& [deg, f] : graded_) n += f.term_count();
    return n;
}

void FockVector::add(const StratifiedFunction& f) {
    if (f.empty()) return;
    auto [it, inserted] = graded_.try_emplace(f.degree(), f);
    if (!inserted) it->second += f;
}

void FockVector::truncate_above(int n) { graded_.erase(graded_.upper_bound(n), graded_.end()); }

FockVector& FockVector::operator+=(const FockVector& rhs) {
    scalar_ += rhs.scalar_;
    for (const auto& [deg, f] : rhs.graded_) add(f);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& rhs) {
    scalar_ -= rhs.scalar_;
    for (const auto& [deg, f] : rhs.graded_) add(Rational(-1) * f);
    return *this;
}

FockVector& FockVector::operator*=(const Rational& c) {
    scalar_ *= c;
    if (c.is_zero()) {
        graded_.clear();
        return *this;
    }
    for (auto& [deg, f] : graded_) f *= c;
    return *this;
}

namespace {

std::vector<int> tail_parts(const Composition& key) {
    return {key.parts().begin() + 1, key.parts().end()};
}

/// Multiplies the top-block factor of every term by h, scaling stratum (l_1, ...) by weight(l_1).
FockVector scale_top_block(const PiecewisePolynomial& h, const FockVector& v,
                           const std::function<Rational(int)>& weight) {
    FockVector out;
    for (const auto& [deg, f] : v.graded()) {
        StratifiedFunction g(deg);
        for (const auto& [key, terms] : f.components()) {
            const Rational w = weight(key.part(0));
            if (w.is_zero()) continue;
            for (const auto& t : terms) {
                std::vector<PiecewisePolynomial> factors = t.factors;
                factors[0] = h * factors[0];
                g.add_term(key, w * t.coefficient, std::move(factors));
            }
        }
        out.add(g);
    }
    return out;
}

/// Tail-integral contraction (first kind) and, when diagonal_weight is set, the
/// diagonal evaluation f(t_1, t_1, t_2, ...) weighted by diagonal_weight(l_1).
FockVector annihilate_impl(const PiecewisePolynomial& h, const FockVector& v, bool tail,
                           const std::function<Rational(int)>* diagonal_weight) {
    FockVector out;
    for (const auto& [deg, f] : v.graded()) {
        if (deg == 1) {
            if (!tail) continue;
            Rational s;
            for (const auto& [key, terms] : f.components()) {
                for (const auto& t : terms) s += t.coefficient * (h * t.factors[0]).integral();
            }
            out.set_scalar(out.scalar() + s);
            continue;
        }
        StratifiedFunction g(deg - 1);
        for (const auto& [key, terms] : f.components()) {
            const int top = key.part(0);
            if (top == 0) {
                if (!tail) continue;
                const Composition out_key(tail_parts(key));
                for (const auto& t : terms) {
                    const PiecewisePolynomial kernel = (h * t.factors[0]).tail_integral();
                    if (kernel.is_zero()) continue;
                    std::vector<PiecewisePolynomial> factors(t.factors.begin() + 1, t.factors.end());
                    factors[0] = kernel * factors[0];
                    g.add_term(out_key, t.coefficient, std::move(factors));
                }
            } else if (diagonal_weight != nullptr) {
                const Rational w = (*diagonal_weight)(top);
                if (w.is_zero()) continue;
                std::vector<int> parts = key.parts();
                parts[0] -= 1;
                const Composition out_key(std::move(parts));
                for (const auto& t : terms) {
                    std::vector<PiecewisePolynomial> factors = t.factors;
                    factors[0] = h * factors[0];
                    g.add_term(out_key, w * t.coefficient, std::move(factors));
                }
            }
        }
        out.add(g);
    }
    return out;
}

}  // namespace

FockVector create(const PiecewisePolynomial& h, const FockVector& v) {
    FockVector out;
    if (!v.scalar().is_zero()) {
        StratifiedFunction g(1);
        g.add_term(Composition({0}), v.scalar(), {h});
        out.add(g);
    }
    for (const auto& [deg, f] : v.graded()) {
        StratifiedFunction g(deg + 1);
        for (const auto& [key, terms] : f.components()) {
            std::vector<int> fresh{0};
            fresh.insert(fresh.end(), key.parts().begin(), key.parts().end());
            std::vector<int> merged = key.parts();
            merged[0] += 1;
            const Composition fresh_key(std::move(fresh));
            const Composition merged_key(std::move(merged));
            for (const auto& t : terms) {
                std::vector<PiecewisePolynomial> above{h};
                above.insert(above.end(), t.factors.begin(), t.factors.end());
                g.add_term(fresh_key, t.coefficient, std::move(above));

                std::vector<PiecewisePolynomial> same = t.factors;
                same[0] = h * same[0];
                g.add_term(merged_key, t.coefficient, std::move(same));
            }
        }
        out.add(g);
    }
    return out;
}

FockVector neutral_general(const JacobiData& nu, const PiecewisePolynomial& h, const FockVector& v) {
    return scale_top_block(h, v, [&](int l) { return nu.b(l); });
}

FockVector annihilate_general(const JacobiData& nu, const PiecewisePolynomial& h, const FockVector& v) {
    const std::function<Rational(int)> weight = [&](int l) { return nu.a(l); };
    return annihilate_impl(h, v, true, &weight);
}

FockVector neutral_meixner(const PiecewisePolynomial& h, const FockVector& v) {
    return scale_top_block(h, v, [](int) { return Rational(1); });
}

FockVector annihilate1(const PiecewisePolynomial& h, const FockVector& v) {
    return annihilate_impl(h, v, true, nullptr);
}

FockVector annihilate2(const PiecewisePolynomial& h, const FockVector& v) {
    const std::function<Rational(int)> weight = [](int) { return Rational(1); };
    return annihilate_impl(h, v, false, &weight);
}

FockVector omega_apply(const JacobiData& nu, const PiecewisePolynomial& h, const FockVector& v) {
    FockVector out = create(h, v);
    out += neutral_general(nu, h, v);
    out += annihilate_general(nu, h, v);
    return out;
}

FockVector chain_vector(const JacobiData& nu, std::span<const PiecewisePolynomial> hs) {
    FockVector v = vacuum();
    for (auto it = hs.rbegin(); it != hs.rend(); ++it) v = omega_apply(nu, *it, v);
    return v;
}

Rational fock_inner(const JacobiData& nu, const FockVector& f, const FockVector& g) {
    const NormSequence c = nu.norms();
    Rational total = f.scalar() * g.scalar();
    for (const auto& [deg, fn] : f.graded()) {
        const auto it = g.graded().find(deg);
        if (it != g.graded().end()) total += inner_product(fn, it->second, c);
    }
    return total;
}

Rational fock_norm2(const JacobiData& nu, const FockVector& f) {
    const NormSequence c = nu.norms();
    Rational total = f.scalar() * f.scalar();
    for (const auto& [deg, fn] : f.graded()) {
        StratifiedFunction reduced = fn;
        reduced.merge_duplicates();
        total += norm2(reduced, c);
    }
    return total;
}

bool fock_is_zero(const FockVector& f) {
    if (!f.scalar().is_zero()) return false;
    for (const auto& [deg, fn] : f.graded()) {
        if (!strat_is_zero(fn)) return false;
    }
    return true;
}

Rational moment(const JacobiData& nu, std::span<const PiecewisePolynomial> hs) {
    FockVector v = vacuum();
    for (std::size_t remaining = hs.size(); remaining-- > 0;) {
        v = omega_apply(nu, hs[remaining], v);
        v.truncate_above(static_cast<int>(remaining));
    }
    return v.scalar();
}

StratifiedFunction orthogonal_projection(const JacobiData& nu, std::span<const PiecewisePolynomial> hs) {
    if (hs.empty()) throw DomainError("orthogonal projection needs at least one function");
    return chain_vector(nu, hs).component(static_cast<int>(hs.size()));
}

StratifiedFunction projection_formula(std::span<const PiecewisePolynomial> hs) {
    if (hs.empty()) throw DomainError("projection formula needs at least one function");
    return restrict_to_simplex(TensorSum::pure({hs.begin(), hs.end()}));
}

}  // namespace mfock
