#include "mfock/check/oracles.hpp"

#include <algorithm>

#include "mfock/error.hpp"

namespace mfock::check {

namespace {

Rational integral_of_product(std::initializer_list<const PiecewisePolynomial*> fs) {
    PiecewisePolynomial p = **fs.begin();
    for (auto it = fs.begin() + 1; it != fs.end(); ++it) p = p * **it;
    return p.integral();
}

std::vector<Rational> common_grid(const std::vector<PiecewisePolynomial>& fs) {
    std::vector<Rational> grid;
    for (const auto& f : fs) grid.insert(grid.end(), f.breakpoints().begin(), f.breakpoints().end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

/// Integral over y > s_1 > ... > s_k > x of q_1(s_1)...q_k(s_k).
Rational ordered_cell_integral(const std::vector<const Polynomial*>& qs, const Rational& x, const Rational& y) {
    Polynomial inner = Polynomial::constant(Rational(1));
    for (auto it = qs.rbegin(); it != qs.rend(); ++it) {
        const Polynomial g = (**it * inner).antiderivative();
        inner = g - Polynomial::constant(g(x));
    }
    return inner(y);
}

}  // namespace

Rational closed_form_moment(const JacobiData& nu, std::span<const PiecewisePolynomial> hs) {
    switch (hs.size()) {
        case 1:
            return Rational(0);
        case 2:
            return integral_of_product({&hs[0], &hs[1]});
        case 3:
            return nu.b(0) * integral_of_product({&hs[0], &hs[1], &hs[2]});
        case 4: {
            const Rational all = integral_of_product({&hs[0], &hs[1], &hs[2], &hs[3]});
            const PiecewisePolynomial inner = (hs[1] * hs[2]).tail_integral();
            const Rational nested = integral_of_product({&hs[0], &hs[3], &inner});
            const Rational a1 = nu.depth() > 1 ? nu.a(1) : Rational(0);
            return nu.b(0) * nu.b(0) * all + nested + a1 * all +
                   integral_of_product({&hs[0], &hs[1]}) * integral_of_product({&hs[2], &hs[3]});
        }
        default:
            throw DomainError("closed-form moments cover words of length 1 to 4");
    }
}

Rational box_simplex_integral(const std::vector<PiecewisePolynomial>& factors) {
    const int i = static_cast<int>(factors.size());
    if (i < 1 || i > 3) throw DomainError("box oracle covers arity 1 to 3");
    const std::vector<Rational> grid = common_grid(factors);
    const int cells = static_cast<int>(grid.size()) - 1;
    if (cells < 1) return Rational(0);

    Rational total;
    std::vector<int> idx(static_cast<std::size_t>(i), cells - 1);
    // Enumerate non-increasing cell tuples c_1 >= c_2 >= ... >= c_i.
    while (true) {
        Rational box(1);
        int start = 0;
        while (start < i && !box.is_zero()) {
            int end = start;
            while (end + 1 < i && idx[end + 1] == idx[start]) ++end;
            const int c = idx[start];
            std::vector<const Polynomial*> qs;
            for (int j = start; j <= end; ++j) qs.push_back(&factors[j].piece_at(grid[c]));
            box *= ordered_cell_integral(qs, grid[c], grid[c + 1]);
            start = end + 1;
        }
        total += box;

        int pos = i - 1;
        while (pos >= 0 && idx[pos] == 0) --pos;
        if (pos < 0) break;
        --idx[pos];
        for (int j = pos + 1; j < i; ++j) idx[j] = idx[pos];
    }
    return total;
}

std::vector<Rational> evaluation_grid(const std::vector<PiecewisePolynomial>& fs, int steps) {
    std::vector<Rational> pts = common_grid(fs);
    Rational hi(1);
    if (!pts.empty() && pts.back() > hi) hi = pts.back();
    for (int k = 0; k <= steps; ++k) pts.push_back(hi * Rational(k, steps));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    for (std::size_t k = 0; k + 1 < n; ++k) pts.push_back((pts[k] + pts[k + 1]) * Rational(1, 2));
    pts.push_back(hi + Rational(1));
    std::sort(pts.begin(), pts.end());
    return pts;
}

Rational nu_expectation(const JacobiData& nu, const Polynomial& p) {
    Rational total;
    for (int k = 0; k <= p.degree(); ++k) total += p.coefficient(k) * nu.nu_moment(k);
    return total;
}

}  // namespace mfock::check
