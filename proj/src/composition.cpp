#include "mfock/composition.hpp"

#include <algorithm>

#include "mfock/error.hpp"

namespace mfock {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw DomainError("composition needs at least one block");
    for (int l : parts_) {
        if (l < 0) throw DomainError("composition part must be nonnegative");
        degree_ += l + 1;
    }
}

std::string Composition::to_string() const {
    std::string s = "(";
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        if (j > 0) s += ",";
        s += std::to_string(parts_[j]);
    }
    return s + ")";
}

std::strong_ordering operator<=>(const Composition& lhs, const Composition& rhs) {
    if (auto c = lhs.parts_.size() <=> rhs.parts_.size(); c != 0) return c;
    // Within a block count, larger leading parts first.
    return rhs.parts_ <=> lhs.parts_;
}

std::vector<Composition> compositions(int n) {
    if (n < 1) throw DomainError("compositions: degree must be >= 1");
    if (n > 30) throw DomainError("compositions: degree too large to enumerate");
    // Each of the n-1 gaps between consecutive coordinates is either inside a
    // block or a block boundary.
    std::vector<Composition> out;
    out.reserve(std::size_t{1} << (n - 1));
    for (unsigned mask = 0; mask < (1U << (n - 1)); ++mask) {
        std::vector<int> parts;
        int run = 0;
        for (int gap = 0; gap < n - 1; ++gap) {
            if ((mask >> gap) & 1U) {
                parts.push_back(run);
                run = 0;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.emplace_back(std::move(parts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mfock
