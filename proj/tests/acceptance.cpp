// Acceptance gate: one PASS/FAIL line per criterion, exact comparisons only.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mfock/check/generators.hpp"
#include "mfock/check/oracles.hpp"
#include "mfock/check/suite.hpp"
#include "mfock/error.hpp"
#include "mfock/fock.hpp"
#include "mfock/meixner.hpp"

using namespace mfock;
using namespace mfock::check;

namespace {

using Family = std::vector<PiecewisePolynomial>;

struct Outcome {
    bool passed = false;
    std::string detail;
};

const PiecewisePolynomial kH = PiecewisePolynomial::indicator(0, 1);

Outcome from(const CheckResult& r) {
    Outcome o{r.passed, r.name + ": " + r.detail};
    if (!r.passed && !r.witness.is_null()) o.detail += " witness " + r.witness.dump();
    return o;
}

Outcome all_of(const std::vector<CheckResult>& rs) {
    Outcome o{true, ""};
    for (const auto& r : rs) {
        if (!r.passed) return from(r);
        if (!o.detail.empty()) o.detail += "; ";
        o.detail += r.name + ": " + r.detail;
    }
    return o;
}

Outcome criterion_moments() {
    const Family w{kH, kH, kH, kH};
    const JacobiData base = JacobiData::constant(0, 1, 4);
    const std::vector<Rational> want{0, 1, 0, Rational(5, 2)};
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto word = std::span(w).first(n);
        if (moment(base, word) != want[n - 1] || closed_form_moment(base, word) != want[n - 1]) {
            return {false, "tau_" + std::to_string(n) + " = " + moment(base, word).to_string()};
        }
    }
    int sweeps = 0;
    for (int lambda : {0, 1, -2}) {
        for (int eta : {0, 1, 3}) {
            const JacobiData nu = JacobiData::constant(lambda, eta, 4);
            const Rational t3 = moment(nu, std::span(w).first(3));
            const Rational t4 = moment(nu, w);
            const Rational want4 = Rational(lambda * lambda + eta) + Rational(3, 2);
            if (t3 != Rational(lambda) || t4 != want4 || closed_form_moment(nu, std::span(w).first(3)) != t3 ||
                closed_form_moment(nu, w) != t4) {
                return {false, "sweep (" + std::to_string(lambda) + ", " + std::to_string(eta) + "): tau_3 = " +
                                   t3.to_string() + ", tau_4 = " + t4.to_string()};
            }
            ++sweeps;
        }
    }
    return {true, "tau = 0, 1, 0, 5/2; " + std::to_string(sweeps) + " parameter sweeps match the closed form"};
}

Outcome criterion_norm_identity() {
    Generator gen(2024);
    for (int fam = 0; fam < 50; ++fam) {
        const JacobiData nu = gen.jacobi(8);
        const Family family{gen.step_function(6), gen.step_function(6)};
        const CheckResult r = check_norm_identity(nu, family, 4);
        if (!r.passed) return {false, "family " + std::to_string(fam) + ": " + r.detail + " " + r.witness.dump()};
    }
    return {true, "50 families, n <= 4, random Jacobi data"};
}

Family four_functions() {
    return {kH, PiecewisePolynomial::on_interval(Polynomial{0, 1}, 0, 2), PiecewisePolynomial::indicator(1, 3),
            PiecewisePolynomial({0, Rational(1, 2), Rational(3, 2)}, {Polynomial{2}, Polynomial{-1, 1}})};
}

Outcome criterion_projection_paths() {
    SuiteConfig config;
    config.nu = JacobiData({0, 1, -1, 2, 0, 0}, {1, 2, Rational(1, 2), 3, 1});
    const Family fs = four_functions();
    const char* names[] = {"a", "b", "c", "d"};
    for (std::size_t k = 0; k < fs.size(); ++k) config.functions.emplace(names[k], fs[k]);
    config.max_degree = 5;
    return from(check_projection_paths(config));
}

Outcome criterion_expansions() {
    const Family family{kH, PiecewisePolynomial::on_interval(Polynomial{0, 1}, 0, 2)};
    std::size_t words = 0;
    for (const auto& [lambda, eta] : {std::pair{0, 1}, std::pair{2, 1}, std::pair{1, 0}}) {
        const JacobiData nu = JacobiData::constant(lambda, eta, 6);
        const MeixnerReport report = meixner_verify(nu, family, 5);
        if (!report.meixner || report.first_failure()) {
            return {false, "r_expand residual for (" + std::to_string(lambda) + ", " + std::to_string(eta) +
                               ") at degree " + std::to_string(report.first_failure().value_or(0))};
        }
        for (const auto& w : all_words(static_cast<int>(family.size()), 5)) {
            Family hs;
            for (int k : w) hs.push_back(family[static_cast<std::size_t>(k)]);
            const FockVector image = expansion_to_fock(nu, cor35_step(hs, lambda, eta));
            const FockVector projection(orthogonal_projection(nu, hs));
            if (!fock_norm2(nu, image - projection).is_zero()) {
                return {false, "list recursion residual for (" + std::to_string(lambda) + ", " +
                                   std::to_string(eta) + ")"};
            }
            ++words;
        }
    }
    return {true, std::to_string(words) + " words per recursion, n <= 5, three parameter pairs"};
}

Outcome criterion_negative_witness() {
    const JacobiData nu({0, 1, 0, 0, 0, 0}, {1, 1, 1, 1, 1});
    const Family hs{kH, kH, kH};
    const PolynomialExpansion e = r_expand(TensorSum::pure(hs), nu.b(0), nu.a(1));
    const FockVector image = expansion_to_fock(nu, e);
    FockVector lower(image.scalar());
    for (const auto& [deg, f] : image.graded()) {
        if (deg < 3) lower.add(f);
    }
    const FockVector residual = image - FockVector(orthogonal_projection(nu, hs));
    const Rational lower_norm = fock_norm2(nu, lower);
    const Rational residual_norm = fock_norm2(nu, residual);
    std::ostringstream detail;
    detail << "residual norm " << residual_norm << " (" << residual_norm.to_decimal(6) << "), below degree 3: "
           << lower_norm;
    return {!residual_norm.is_zero() && residual_norm == lower_norm, detail.str()};
}

Outcome criterion_adjointness() {
    Generator gen(77);
    std::vector<CheckResult> rs;
    rs.push_back(check_adjointness(gen.jacobi(8), 606, 50, 4));
    rs.push_back(check_adjointness(JacobiData::constant(Rational(1, 2), 2, 8), 607, 50, 4));
    return all_of(rs);
}

Outcome criterion_monotone_independence() {
    Generator gen(5);
    return all_of({check_monotone_independence(JacobiData::constant(0, 1, 10)),
                   check_monotone_independence(gen.jacobi(10))});
}

Outcome criterion_stationarity() {
    const std::vector<Rational> shifts{Rational(1, 2), Rational(3), Rational(10)};
    Family family;
    for (const auto& [name, f] : default_functions()) family.push_back(f);
    Generator gen(8);
    return all_of({check_shift_stationarity(JacobiData::constant(0, 1, 6), family, 4, shifts),
                   check_shift_stationarity(gen.jacobi(6), family, 4, shifts)});
}

Outcome criterion_combinatorics() { return all_of({check_composition_counts(10), check_simplex_oracle(9, 20)}); }

Outcome criterion_degenerate() {
    SuiteConfig config;
    config.nu = JacobiData::constant(2, 0, 8);
    config.max_degree = 4;
    const NormSequence c = config.nu.norms();
    for (int k = 2; k <= c.size(); ++k) {
        if (!c[k].is_zero()) return {false, "c_" + std::to_string(k) + " != 0"};
    }
    std::vector<CheckResult> rs = run_suite(config);
    rs.push_back(check_disjoint_projection(JacobiData::constant(0, 1, 4)));
    Outcome o = all_of(rs);
    if (o.passed) o.detail = std::to_string(rs.size()) + " checks on the point mass plus the disjoint-pair projection";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::tuple<int, std::string, std::function<Outcome()>, double>> criteria{
        {1, "moments and parameter sweeps", criterion_moments, 1.0},
        {2, "norm identity on seeded families", criterion_norm_identity, 60.0},
        {3, "projection cross-path up to degree 5", criterion_projection_paths, 60.0},
        {4, "polynomial expansions equal pure projections", criterion_expansions, 0.0},
        {5, "negative witness for non-constant data", criterion_negative_witness, 0.0},
        {6, "adjointness and self-adjointness", criterion_adjointness, 0.0},
        {7, "monotone independence", criterion_monotone_independence, 0.0},
        {8, "shift stationarity", criterion_stationarity, 0.0},
        {9, "compositions and simplex oracle", criterion_combinatorics, 0.0},
        {10, "degenerate point mass and disjoint pair", criterion_degenerate, 0.0},
    };
    int failures = 0;
    for (const auto& [id, title, run, budget] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (budget > 0 && seconds >= budget) {
            o.passed = false;
            o.detail += "; runtime over budget";
        }
        std::ostringstream time;
        time.precision(3);
        time << std::fixed << seconds;
        std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << id << " (" << title << "): " << o.detail << " ["
                  << time.str() << " s]" << std::endl;
        if (!o.passed) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
