#include "mfock/check/suite.hpp"

#include <algorithm>
#include <sstream>

#include "mfock/check/generators.hpp"
#include "mfock/check/oracles.hpp"
#include "mfock/composition.hpp"
#include "mfock/error.hpp"
#include "mfock/fock.hpp"
#include "mfock/meixner.hpp"
#include "mfock/stratified.hpp"

namespace mfock::check {

namespace {

using Family = std::vector<PiecewisePolynomial>;

CheckResult pass(std::string name, std::string detail) { return {std::move(name), true, std::move(detail), nullptr}; }

CheckResult fail(std::string name, std::string detail, Json witness) {
    return {std::move(name), false, std::move(detail), std::move(witness)};
}

Family pick(const Family& family, const std::vector<int>& word) {
    Family out;
    for (int k : word) out.push_back(family[static_cast<std::size_t>(k)]);
    return out;
}

Json encode_list(const Family& fs) {
    Json out = Json::array();
    for (const auto& f : fs) out.push_back(encode(f));
    return out;
}

Family values_of(const std::map<std::string, PiecewisePolynomial>& named) {
    Family out;
    for (const auto& [name, f] : named) out.push_back(f);
    return out;
}

std::map<std::string, PiecewisePolynomial> functions_of(const SuiteConfig& config) {
    return config.functions.empty() ? default_functions() : config.functions;
}

/// Chain vectors of words over a fixed family, memoized on suffixes.
class Chains {
public:
    Chains(const JacobiData& nu, const Family& family) : nu_(nu), family_(family) {}

    const FockVector& get(const std::vector<int>& word) {
        if (const auto it = memo_.find(word); it != memo_.end()) return it->second;
        FockVector v = word.empty() ? vacuum()
                                    : omega_apply(nu_, family_[static_cast<std::size_t>(word[0])],
                                                  get(std::vector<int>(word.begin() + 1, word.end())));
        return memo_.emplace(word, std::move(v)).first->second;
    }

private:
    const JacobiData& nu_;
    const Family& family_;
    std::map<std::vector<int>, FockVector> memo_;
};

Json word_json(const std::vector<int>& word) { return Json(word); }

int usable_degree(const JacobiData& nu, int requested) { return std::max(1, std::min(requested, nu.depth())); }

}  // namespace

std::map<std::string, PiecewisePolynomial> default_functions() {
    return {{"g", PiecewisePolynomial::on_interval(Polynomial{Rational(0), Rational(1)}, Rational(0), Rational(2))},
            {"h", PiecewisePolynomial::indicator(Rational(0), Rational(1))},
            {"k", PiecewisePolynomial::indicator(Rational(1), Rational(3))}};
}

std::vector<std::vector<int>> all_words(int family_size, int max_degree) {
    std::vector<std::vector<int>> out;
    if (family_size <= 0) return out;
    for (int n = 1; n <= max_degree; ++n) {
        std::vector<int> idx(static_cast<std::size_t>(n), 0);
        while (true) {
            out.push_back(idx);
            int pos = n - 1;
            while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == family_size) idx[static_cast<std::size_t>(pos--)] = 0;
            if (pos < 0) break;
        }
    }
    return out;
}

CheckResult check_piecewise_algebra(const SuiteConfig& config) {
    const std::string name = "piecewise algebra";
    Generator gen(config.seed);
    Family pool = values_of(functions_of(config));
    for (int k = 0; k < config.random_cases; ++k) pool.push_back(gen.piecewise(4, 2));
    pool.emplace_back();

    for (std::size_t k = 0; k < pool.size(); ++k) {
        const PiecewisePolynomial& f = pool[k];
        const PiecewisePolynomial& g = pool[(k + 1) % pool.size()];
        const PiecewisePolynomial& h = pool[(k + 2) % pool.size()];
        const PiecewisePolynomial tf = f.tail_integral();
        auto bad = [&](const std::string& what) {
            return fail(name, what, Json{{"f", encode(f)}, {"g", encode(g)}, {"h", encode(h)}});
        };
        if (tf.derivative() != -f) return bad("derivative of tail integral differs from -f");
        if (tf(Rational(0)) != f.integral()) return bad("tail integral at 0 differs from the integral");
        if (f * g != g * f || (f * g) * h != f * (g * h)) return bad("product not commutative/associative");
        if (f + g != g + f || (f + g) + h != f + (g + h) || !(f - f).is_zero()) return bad("sum not an abelian group");
        const Rational u = Rational(gen.integer(0, 12), gen.integer(1, 4));
        if (f.shifted(u).integral() != f.integral()) return bad("shift changed the integral");
        for (const Rational& t : evaluation_grid({f, g}, 8)) {
            if ((f + g)(t) != f(t) + g(t) || (f * g)(t) != f(t) * g(t)) return bad("pointwise mismatch");
        }
        if (!f.is_zero()) {
            // Refine one piece at a random interior point and append a zero piece.
            std::vector<Rational> bps = f.breakpoints();
            std::vector<Polynomial> pieces = f.pieces();
            const std::size_t j = static_cast<std::size_t>(gen.integer(0, static_cast<int>(pieces.size()) - 1));
            const Rational mid = (bps[j] + bps[j + 1]) * Rational(1, 2);
            bps.insert(bps.begin() + static_cast<long>(j) + 1, mid);
            pieces.insert(pieces.begin() + static_cast<long>(j), pieces[j]);
            bps.push_back(bps.back() + Rational(1));
            pieces.emplace_back();
            if (PiecewisePolynomial(bps, pieces) != f) return bad("refined representation not canonicalized");
        }
    }
    return pass(name, std::to_string(pool.size()) + " functions");
}

CheckResult check_orthogonality(const SuiteConfig& config) {
    const std::string name = "orthogonality of p_k";
    const JacobiData& nu = config.nu;
    const NormSequence c = nu.norms();
    const int top = nu.depth() - 1;
    int pairs = 0;
    for (int j = 0; j <= top; ++j) {
        for (int k = 0; k <= j; ++k) {
            const Rational e = nu_expectation(nu, nu.p_polynomial(j) * nu.p_polynomial(k));
            const Rational want = j == k ? c[k + 1] : Rational(0);
            if (e != want) {
                return fail(name, "E[p_j p_k] = " + e.to_string() + ", expected " + want.to_string(),
                            Json{{"j", j}, {"k", k}});
            }
            ++pairs;
        }
        for (int s = -2; s <= 2; ++s) {
            if (nu.eval_p(j, Rational(s)) != nu.p_polynomial(j)(Rational(s))) {
                return fail(name, "eval_p disagrees with the expanded polynomial", Json{{"k", j}, {"s", s}});
            }
        }
    }
    return pass(name, std::to_string(pairs) + " pairs");
}

CheckResult check_composition_counts(int max_n) {
    const std::string name = "composition counts";
    for (int n = 1; n <= max_n; ++n) {
        const std::vector<Composition> cs = compositions(n);
        if (static_cast<long>(cs.size()) != (1L << (n - 1))) {
            return fail(name, "wrong count for n = " + std::to_string(n), Json{{"n", n}, {"count", cs.size()}});
        }
        for (std::size_t k = 0; k < cs.size(); ++k) {
            if (cs[k].degree() != n || (k > 0 && !(cs[k - 1] < cs[k]))) {
                return fail(name, "bad degree or order", Json{{"n", n}, {"composition", cs[k].parts()}});
            }
        }
    }
    return pass(name, "n <= " + std::to_string(max_n));
}

CheckResult check_simplex_oracle(std::uint64_t seed, int cases) {
    const std::string name = "simplex integral vs box oracle";
    Generator gen(seed);
    for (int k = 0; k < cases; ++k) {
        const int arity = 1 + k % 3;
        Family fs;
        for (int j = 0; j < arity; ++j) fs.push_back(k % 2 == 0 ? gen.step_function(6) : gen.piecewise(4, 2));
        const Rational nested = simplex_integral(fs);
        const Rational boxes = box_simplex_integral(fs);
        if (nested != boxes) {
            return fail(name, "nested " + nested.to_string() + " vs boxes " + boxes.to_string(),
                        Json{{"factors", encode_list(fs)}});
        }
    }
    return pass(name, std::to_string(cases) + " inputs");
}

CheckResult check_monotone_product(const SuiteConfig& config) {
    const std::string name = "monotone product";
    Generator gen(config.seed + 1);
    for (int k = 0; k < config.random_cases; ++k) {
        const int m = gen.integer(1, 2);
        const int n = gen.integer(1, 2);
        Family hs;
        Family gs;
        for (int j = 0; j < m; ++j) hs.push_back(gen.step_function(4));
        for (int j = 0; j < n; ++j) gs.push_back(gen.step_function(4));
        Family joined = hs;
        joined.insert(joined.end(), gs.begin(), gs.end());
        const StratifiedFunction lhs = restrict_to_simplex(TensorSum::pure(joined));
        const StratifiedFunction rhs =
            monotone_product(restrict_to_simplex(TensorSum::pure(hs)), restrict_to_simplex(TensorSum::pure(gs)));
        if (!strat_is_zero(lhs - rhs)) {
            return fail(name, "restriction not multiplicative", Json{{"f", encode_list(hs)}, {"g", encode_list(gs)}});
        }
        const StratifiedFunction f = gen.stratified(gen.integer(1, 2));
        const StratifiedFunction g = gen.stratified(gen.integer(1, 2));
        const StratifiedFunction h = gen.stratified(1);
        if (!strat_is_zero(monotone_product(monotone_product(f, g), h) - monotone_product(f, monotone_product(g, h)))) {
            return fail(name, "not associative", Json{{"f", encode(f)}, {"g", encode(g)}, {"h", encode(h)}});
        }
    }
    return pass(name, std::to_string(config.random_cases) + " cases");
}

CheckResult check_gram_positivity(const SuiteConfig& config) {
    const std::string name = "inner product positivity and bilinearity";
    Generator gen(config.seed + 2);
    const NormSequence c = config.nu.norms();
    const int top = usable_degree(config.nu, 3);
    for (int k = 0; k < config.random_cases; ++k) {
        const int n = gen.integer(1, top);
        const StratifiedFunction f = gen.stratified(n, 3);
        const StratifiedFunction g = gen.stratified(n, 2);
        const StratifiedFunction h = gen.stratified(n, 2);
        const Rational r = gen.rational(3, 3);
        const Json w{{"f", encode(f)}, {"g", encode(g)}, {"h", encode(h)}};
        if (inner_product(f, f, c).sign() < 0 || norm2(f, c) != inner_product(f, f, c)) {
            return fail(name, "negative or inconsistent norm", w);
        }
        if (inner_product(f, g, c) != inner_product(g, f, c)) return fail(name, "not symmetric", w);
        if (inner_product(f + r * g, h, c) != inner_product(f, h, c) + r * inner_product(g, h, c)) {
            return fail(name, "not bilinear", w);
        }
        if ((lebesgue_inner(f, f).is_zero()) != strat_is_zero(f)) return fail(name, "zero test inconsistent", w);
    }
    return pass(name, std::to_string(config.random_cases) + " cases");
}

CheckResult check_adjointness(const JacobiData& nu, std::uint64_t seed, int cases, int max_degree) {
    const std::string name = "adjointness";
    Generator gen(seed);
    const int top = std::max(1, std::min(max_degree, nu.depth() - 1));
    for (int k = 0; k < cases; ++k) {
        const PiecewisePolynomial h = gen.piecewise(3, 1);
        const FockVector f = gen.fock(top);
        const FockVector g = gen.fock(top + 1);
        const Json w{{"h", encode(h)}, {"F", encode(f)}, {"G", encode(g)}};
        if (fock_inner(nu, create(h, f), g) != fock_inner(nu, f, annihilate_general(nu, h, g))) {
            return fail(name, "<A+(h)F, G> != <F, B-(h)G>", w);
        }
        if (fock_inner(nu, neutral_general(nu, h, f), g) != fock_inner(nu, f, neutral_general(nu, h, g))) {
            return fail(name, "B0(h) not symmetric", w);
        }
        const FockVector f2 = gen.fock(top);
        if (fock_inner(nu, omega_apply(nu, h, f2), g) != fock_inner(nu, f2, omega_apply(nu, h, g))) {
            return fail(name, "<omega,h> not symmetric", w);
        }
    }
    return pass(name, std::to_string(cases) + " cases, degrees <= " + std::to_string(top + 1));
}

CheckResult check_grading(const SuiteConfig& config) {
    const std::string name = "grading";
    Generator gen(config.seed + 3);
    const int top = usable_degree(config.nu, 4) - 1;
    auto degrees = [](const FockVector& v) {
        std::vector<int> out;
        if (!v.scalar().is_zero()) out.push_back(0);
        for (const auto& [deg, f] : v.graded()) out.push_back(deg);
        return out;
    };
    for (int k = 0; k < config.random_cases; ++k) {
        const int n = gen.integer(1, std::max(1, top));
        const PiecewisePolynomial h = gen.piecewise(3, 1);
        const FockVector v(gen.stratified(n));
        for (const int d : degrees(create(h, v))) {
            if (d != n + 1) return fail(name, "create left degree n+1", Json{{"degree", n}});
        }
        for (const int d : degrees(neutral_general(config.nu, h, v))) {
            if (d != n) return fail(name, "neutral changed the degree", Json{{"degree", n}});
        }
        for (const int d : degrees(annihilate_general(config.nu, h, v))) {
            if (d != n - 1) return fail(name, "annihilation left degree n-1", Json{{"degree", n}});
        }
    }
    const FockVector nothing = neutral_general(config.nu, PiecewisePolynomial::indicator(0, 1), vacuum()) +
                               annihilate_general(config.nu, PiecewisePolynomial::indicator(0, 1), vacuum());
    if (!nothing.scalar().is_zero() || !nothing.graded().empty()) {
        return fail(name, "neutral or annihilation does not vanish on the vacuum", nullptr);
    }
    return pass(name, std::to_string(config.random_cases) + " cases");
}

CheckResult check_moment_oracle(const SuiteConfig& config) {
    const std::string name = "moments vs closed form";
    const auto named = functions_of(config);
    const Family family = values_of(named);
    const auto words = all_words(static_cast<int>(family.size()), std::min(4, usable_degree(config.nu, 4)));
    for (const auto& w : words) {
        const Family hs = pick(family, w);
        const Rational got = moment(config.nu, hs);
        const Rational want = closed_form_moment(config.nu, hs);
        if (got != want) {
            return fail(name, "moment " + got.to_string() + " vs oracle " + want.to_string(), word_json(w));
        }
    }
    Generator gen(config.seed + 4);
    for (int k = 0; k < config.random_cases; ++k) {
        Family hs;
        const int n = gen.integer(1, std::min(4, usable_degree(config.nu, 4)));
        for (int j = 0; j < n; ++j) hs.push_back(gen.piecewise(4, 1));
        if (moment(config.nu, hs) != closed_form_moment(config.nu, hs)) {
            return fail(name, "random word disagrees with the oracle", Json{{"word", encode_list(hs)}});
        }
    }
    return pass(name, std::to_string(words.size() + static_cast<std::size_t>(config.random_cases)) + " words");
}

CheckResult check_projection_paths(const SuiteConfig& config) {
    const std::string name = "orthogonal projection = projection formula";
    const Family family = values_of(functions_of(config));
    Chains chains(config.nu, family);
    const auto words = all_words(static_cast<int>(family.size()), usable_degree(config.nu, config.max_degree));
    for (const auto& w : words) {
        const Family hs = pick(family, w);
        const StratifiedFunction chain = chains.get(w).component(static_cast<int>(w.size()));
        if (!strat_is_zero(chain - projection_formula(hs))) return fail(name, "paths differ", word_json(w));
    }
    return pass(name, std::to_string(words.size()) + " words");
}

CheckResult check_norm_identity(const JacobiData& nu, const Family& family, int max_degree) {
    const std::string name = "norm identity";
    const NormSequence c = nu.norms();
    Chains chains(nu, family);
    const auto words = all_words(static_cast<int>(family.size()), std::min(max_degree, nu.depth()));
    std::size_t pairs = 0;
    for (const auto& u : words) {
        const Family hs = pick(family, u);
        const int n = static_cast<int>(u.size());
        const StratifiedFunction pu = projection_formula(hs);
        const StratifiedFunction cu = chains.get(u).component(n);
        for (const auto& v : words) {
            if (v.size() != u.size() || v < u) continue;
            const StratifiedFunction pv = projection_formula(pick(family, v));
            const Rational lhs = inner_product(pu, pv, c);
            const Rational rhs = fock_inner(nu, FockVector(cu), FockVector(chains.get(v).component(n)));
            if (lhs != rhs) {
                return fail(name, "m_n inner product " + lhs.to_string() + " vs Fock " + rhs.to_string(),
                            Json{{"u", u}, {"v", v}});
            }
            ++pairs;
        }
        // <X_u Omega, X_v Omega> is the moment of the reversed word followed by v.
        for (const auto& v : words) {
            if (u.size() + v.size() > 6 || v.size() > u.size()) continue;
            std::vector<int> joined(u.rbegin(), u.rend());
            joined.insert(joined.end(), v.begin(), v.end());
            if (static_cast<int>(joined.size()) > 2 * nu.depth()) continue;
            const Rational lhs = fock_inner(nu, chains.get(u), chains.get(v));
            const Rational rhs = moment(nu, pick(family, joined));
            if (lhs != rhs) {
                return fail(name, "Fock inner product " + lhs.to_string() + " vs moment " + rhs.to_string(),
                            Json{{"u", u}, {"v", v}});
            }
            ++pairs;
        }
    }
    return pass(name, std::to_string(pairs) + " pairs");
}

CheckResult check_monotone_independence(const JacobiData& nu) {
    const std::string name = "monotone independence";
    // Intervals [0,1) < [1,2) < [2,3); each carries the indicator and a linear ramp.
    std::vector<Family> gens;
    for (int j = 0; j < 3; ++j) {
        const Rational lo(j);
        const Rational hi(j + 1);
        gens.push_back({PiecewisePolynomial::indicator(lo, hi),
                        PiecewisePolynomial::on_interval(Polynomial{-lo, Rational(1)}, lo, hi)});
    }
    // Algebra elements: <omega, chi>, <omega, ramp><omega, chi>, <omega, ramp>^2.
    auto elements = [&](int j) {
        const Family& g = gens[static_cast<std::size_t>(j)];
        return std::vector<Family>{{g[0]}, {g[1], g[0]}, {g[1], g[1]}};
    };
    auto apply = [&](const Family& word, FockVector v) {
        for (auto it = word.rbegin(); it != word.rend(); ++it) v = omega_apply(nu, *it, v);
        return v;
    };
    auto concat = [](std::initializer_list<const Family*> parts) {
        Family out;
        for (const Family* p : parts) out.insert(out.end(), p->begin(), p->end());
        return out;
    };

    // Spanning family: vacuum and chain vectors of length <= 2 over the indicators.
    std::vector<FockVector> span{vacuum()};
    for (int x = 0; x < 3; ++x) {
        span.push_back(apply({gens[x][0]}, vacuum()));
        for (int y = 0; y < 3; ++y) span.push_back(apply({gens[x][0], gens[y][0]}, vacuum()));
    }

    std::size_t identities = 0;
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < j; ++i) {
            for (int k = 0; k < j; ++k) {
                for (const Family& a : elements(i)) {
                    for (const Family& b : elements(j)) {
                        const Rational tb = moment(nu, b);
                        for (const Family& cc : elements(k)) {
                            const Family abc = concat({&a, &b, &cc});
                            const Family ac = concat({&a, &cc});
                            for (const FockVector& v : span) {
                                const int deg = v.max_degree() + static_cast<int>(abc.size());
                                if (deg > nu.depth()) continue;
                                const FockVector diff = apply(abc, v) - tb * apply(ac, v);
                                if (!fock_norm2(nu, diff).is_zero()) {
                                    return fail(name, "ABC != tau(B) AC",
                                                Json{{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"A", encode_list(a)},
                                                     {"B", encode_list(b)}, {"C", encode_list(cc)}});
                                }
                                ++identities;
                            }
                        }
                    }
                }
            }
        }
    }

    // tau(A_1 ... A_m B C_1 ... C_n) = product of tau when i_1 > ... > i_m > j < k_1 < ... < k_n.
    std::size_t factorizations = 0;
    for (int len = 1; len <= 4; ++len) {
        std::vector<int> pattern(static_cast<std::size_t>(len), 0);
        while (true) {
            const auto valley = std::min_element(pattern.begin(), pattern.end()) - pattern.begin();
            bool admissible = true;
            for (long p = 0; p < len - 1; ++p) {
                const bool up = pattern[p] < pattern[p + 1];
                const bool down = pattern[p] > pattern[p + 1];
                if ((p < valley && !down) || (p >= valley && !up)) admissible = false;
            }
            if (admissible) {
                // Every choice of element per position.
                std::vector<int> choice(static_cast<std::size_t>(len), 0);
                while (true) {
                    Family word;
                    Rational product(1);
                    for (int p = 0; p < len; ++p) {
                        const Family e = elements(pattern[p])[static_cast<std::size_t>(choice[p])];
                        word.insert(word.end(), e.begin(), e.end());
                        product *= moment(nu, e);
                    }
                    if (static_cast<int>(word.size()) <= 2 * nu.depth()) {
                        const Rational whole = moment(nu, word);
                        if (whole != product) {
                            Json pj = Json::array();
                            for (int x : pattern) pj.push_back(x + 1);
                            return fail(name, "moment " + whole.to_string() + " != product " + product.to_string(),
                                        Json{{"pattern", pj}, {"choice", choice}});
                        }
                        ++factorizations;
                    }
                    int pos = len - 1;
                    while (pos >= 0 && ++choice[pos] == 3) choice[pos--] = 0;
                    if (pos < 0) break;
                }
            }
            int pos = len - 1;
            while (pos >= 0 && ++pattern[pos] == 3) pattern[pos--] = 0;
            if (pos < 0) break;
        }
    }
    return pass(name, std::to_string(identities) + " operator identities, " + std::to_string(factorizations) +
                          " factorizations");
}

CheckResult check_shift_stationarity(const JacobiData& nu, const Family& family, int max_degree,
                                     const std::vector<Rational>& shifts) {
    const std::string name = "shift stationarity";
    const auto words = all_words(static_cast<int>(family.size()), std::min(max_degree, 2 * nu.depth()));
    for (const auto& w : words) {
        const Family hs = pick(family, w);
        const Rational base = moment(nu, hs);
        for (const Rational& u : shifts) {
            Family moved;
            for (const auto& h : hs) moved.push_back(h.shifted(u));
            if (moment(nu, moved) != base) {
                return fail(name, "moment changed under shift by " + u.to_string(),
                            Json{{"word", w}, {"shift", encode(u)}});
            }
        }
    }
    return pass(name, std::to_string(words.size()) + " words x " + std::to_string(shifts.size()) + " shifts");
}

CheckResult check_meixner(const SuiteConfig& config) {
    const std::string name = "meixner characterization";
    const Family family = values_of(functions_of(config));
    const MeixnerReport report = meixner_verify(config.nu, family, usable_degree(config.nu, config.max_degree));
    std::ostringstream detail;
    if (report.meixner) {
        detail << "constant data (" << report.lambda << ", " << report.eta << "): ";
        if (report.consistent()) {
            detail << "all degrees pass";
            return pass(name, detail.str());
        }
        detail << "residual at degree " << *report.first_failure();
        return fail(name, detail.str(), encode(report));
    }
    if (report.consistent()) {
        const int d = *report.first_failure();
        const DegreeReport& dr = report.degrees[static_cast<std::size_t>(d - 1)];
        detail << "non-constant data: expected residual found at degree " << d << ", norm "
               << dr.residual_norm;
        CheckResult r = pass(name, detail.str());
        r.witness = encode(report);
        return r;
    }
    detail << "non-constant data: no residual up to degree " << report.degrees.size();
    return fail(name, detail.str(), encode(report));
}

CheckResult check_recursions_agree(const SuiteConfig& config) {
    const std::string name = "recursions agree";
    const Family family = values_of(functions_of(config));
    const Rational lambda = config.nu.b(0);
    const Rational eta = config.nu.depth() > 1 ? config.nu.a(1) : Rational(0);
    const auto words = all_words(static_cast<int>(family.size()), std::min(usable_degree(config.nu, config.max_degree), 4));
    for (const auto& w : words) {
        const Family hs = pick(family, w);
        const TensorSum f = TensorSum::pure(hs);
        const PolynomialExpansion r = r_expand(f, lambda, eta);
        if (r.term(static_cast<int>(hs.size())) != f) return fail(name, "top coefficient is not f", word_json(w));
        const PolynomialExpansion s = cor35_step(hs, lambda, eta);
        if (!fock_norm2(config.nu, expansion_to_fock(config.nu, r - s)).is_zero()) {
            return fail(name, "list recursion and coefficient operators differ", word_json(w));
        }
    }
    return pass(name, std::to_string(words.size()) + " words");
}

CheckResult check_off_simplex(const SuiteConfig& config) {
    const std::string name = "monomials supported off the simplex";
    const JacobiData& nu = config.nu;
    const PiecewisePolynomial d1 = PiecewisePolynomial::indicator(0, 1);
    const PiecewisePolynomial d2 = PiecewisePolynomial::indicator(1, 2);
    const PiecewisePolynomial d3 = PiecewisePolynomial::indicator(2, 3);
    const std::vector<Family> cases{{d1, d2}, {d1, d1, d2}, {d1, d2, d3}, {d1, d2, d2}};
    for (const Family& hs : cases) {
        const int n = static_cast<int>(hs.size());
        if (n > nu.depth()) continue;
        if (!strat_is_zero(restrict_to_simplex(TensorSum::pure(hs)))) {
            return fail(name, "restriction is not zero", Json{{"word", encode_list(hs)}});
        }
        const FockVector v = chain_vector(nu, hs);
        if (!strat_is_zero(v.component(n))) {
            return fail(name, "chain vector has a degree-n component", Json{{"word", encode_list(hs)}});
        }
    }
    return pass(name, std::to_string(cases.size()) + " words");
}

CheckResult check_disjoint_projection(const JacobiData& nu) {
    const std::string name = "projection of disjoint ordered pair";
    const Family hs{PiecewisePolynomial::indicator(0, 1), PiecewisePolynomial::indicator(2, 3)};
    const StratifiedFunction p = orthogonal_projection(nu, hs);
    if (!strat_is_zero(p) || !norm2(p, nu.norms()).is_zero()) {
        return fail(name, "degree-2 projection is not zero", Json{{"projection", encode(p)}});
    }
    if (!fock_is_zero(create(hs[0], FockVector(restrict_to_simplex(TensorSum::pure({hs[1]})))))) {
        return fail(name, "creation above a later function is not zero", nullptr);
    }
    return pass(name, "zero projection");
}

std::vector<CheckResult> run_suite(const SuiteConfig& config) {
    const Family family = values_of(functions_of(config));
    const int degree = usable_degree(config.nu, config.max_degree);
    std::vector<CheckResult> out;
    out.push_back(check_piecewise_algebra(config));
    out.push_back(check_orthogonality(config));
    out.push_back(check_composition_counts(10));
    out.push_back(check_simplex_oracle(config.seed, config.random_cases));
    out.push_back(check_monotone_product(config));
    out.push_back(check_gram_positivity(config));
    out.push_back(check_adjointness(config.nu, config.seed + 5, config.random_cases, degree));
    out.push_back(check_grading(config));
    out.push_back(check_moment_oracle(config));
    out.push_back(check_projection_paths(config));
    out.push_back(check_norm_identity(config.nu, family, std::min(degree, 3)));
    out.push_back(check_monotone_independence(config.nu));
    out.push_back(check_shift_stationarity(config.nu, family, degree,
                                           {Rational(1, 2), Rational(3), Rational(10)}));
    if (config.meixner) out.push_back(check_meixner(config));
    out.push_back(check_recursions_agree(config));
    out.push_back(check_off_simplex(config));
    out.push_back(check_disjoint_projection(config.nu));
    return out;
}

}  // namespace mfock::check
