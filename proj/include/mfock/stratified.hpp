#pragma once

/// @file stratified.hpp
/// @brief Elements of L^2(T_n, m_n) stored stratum by stratum.
///
/// On the stratum labelled (l_1, ..., l_i) a point of T_n is determined by its
/// i distinct block values tau_1 > ... > tau_i. A StratifiedFunction stores, for
/// every composition, a rank sum  sum_a alpha_a g^a_1(tau_1) ... g^a_i(tau_i)
/// on the strict simplex. No canonical form is kept for rank sums; equality is
/// decided by the zero-norm test strat_is_zero.

#include <map>
#include <vector>

#include "mfock/composition.hpp"
#include "mfock/jacobi.hpp"
#include "mfock/piecewise.hpp"
#include "mfock/rational.hpp"
#include "mfock/tensor_sum.hpp"

namespace mfock {

struct RankTerm {
    Rational coefficient;
    std::vector<PiecewisePolynomial> factors;

    friend bool operator==(const RankTerm&, const RankTerm&) = default;
};

class StratifiedFunction {
public:
    using Components = std::map<Composition, std::vector<RankTerm>>;

    /// Throws DomainError for degree < 1.
    explicit StratifiedFunction(int degree);

    /// Appends coefficient * factors[0](tau_1) ... on the given stratum. Dropped
    /// when the coefficient or a factor is zero. Throws DomainError on a degree
    /// mismatch or when factors.size() != key.blocks().
    void add_term(const Composition& key, const Rational& coefficient, std::vector<PiecewisePolynomial> factors);

    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] const Components& components() const { return components_; }
    /// True when no term is stored (structural; see strat_is_zero for the L^2 test).
    [[nodiscard]] bool empty() const { return components_.empty(); }
    [[nodiscard]] std::size_t term_count() const;

    StratifiedFunction& operator+=(const StratifiedFunction& rhs);
    StratifiedFunction& operator-=(const StratifiedFunction& rhs);
    StratifiedFunction& operator*=(const Rational& c);
    friend StratifiedFunction operator+(StratifiedFunction lhs, const StratifiedFunction& rhs) { return lhs += rhs; }
    friend StratifiedFunction operator-(StratifiedFunction lhs, const StratifiedFunction& rhs) { return lhs -= rhs; }
    friend StratifiedFunction operator*(const Rational& c, StratifiedFunction f) { return f *= c; }

    /// Merges terms with identical factor tuples (exact; changes only the representation).
    void merge_duplicates();

private:
    int degree_;
    Components components_;
};

/// Integral of h_1(t_1) ... h_i(t_i) over {t_1 > ... > t_i > 0}, by nested
/// tail integrals K_1 = T h_1, K_j = T(h_j K_{j-1}), result = integral of h_i K_{i-1}.
Rational simplex_integral(const std::vector<PiecewisePolynomial>& factors);

/// Product weight c_{l_1+1} ... c_{l_i+1} of the stratum. Throws DepthError.
Rational stratum_weight(const Composition& key, const NormSequence& c);

/// Restriction of a tensor sum of arity n >= 1 to T_n: on each stratum the
/// factors inside a block are multiplied pointwise.
StratifiedFunction restrict_to_simplex(const TensorSum& f);

/// (f |> g)(t_1..t_{m+n}) = f(t_1..t_m) g(t_{m+1}..t_{m+n}). A block of the
/// product straddling position m contributes its value to both sides.
StratifiedFunction monotone_product(const StratifiedFunction& f, const StratifiedFunction& g);

/// Inner product in L^2(T_n, m_n); c supplies the norms of nu. Throws
/// DomainError on degree mismatch, DepthError if c is too short.
Rational inner_product(const StratifiedFunction& f, const StratifiedFunction& g, const NormSequence& c);

/// Inner product with unit weight on every stratum.
Rational lebesgue_inner(const StratifiedFunction& f, const StratifiedFunction& g);

/// Squared norm; exploits symmetry of the term pairs.
Rational norm2(const StratifiedFunction& f, const NormSequence& c);

/// True iff f vanishes Lebesgue-a.e. on every stratum (independent of nu).
bool strat_is_zero(const StratifiedFunction& f);

}  // namespace mfock
