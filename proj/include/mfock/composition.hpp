#pragma once

/// @file composition.hpp
/// @brief Labels of the diagonal strata of the ordered simplex.
///
/// The composition (l_1, ..., l_i) of degree n = i + l_1 + ... + l_i labels the
/// stratum of {t_1 >= ... >= t_n} on which the coordinates form i blocks of
/// equal values with sizes l_1 + 1, ..., l_i + 1, strictly decreasing from
/// block to block.

#include <compare>
#include <string>
#include <vector>

namespace mfock {

class Composition {
public:
    /// Throws DomainError for an empty list or a negative part.
    explicit Composition(std::vector<int> parts);

    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    /// Number of blocks i.
    [[nodiscard]] int blocks() const { return static_cast<int>(parts_.size()); }
    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] int part(int j) const { return parts_[static_cast<std::size_t>(j)]; }
    [[nodiscard]] int block_size(int j) const { return part(j) + 1; }

    /// "(l1,l2,...)"
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Composition& lhs, const Composition& rhs) { return lhs.parts_ == rhs.parts_; }
    /// Ascending block count, then lexicographic in the parts.
    friend std::strong_ordering operator<=>(const Composition& lhs, const Composition& rhs);

private:
    std::vector<int> parts_;
    int degree_ = 0;
};

/// All 2^{n-1} compositions of degree n in ascending order. Throws DomainError for n < 1.
std::vector<Composition> compositions(int n);

}  // namespace mfock
