#pragma once

#include <optional>
#include <span>
#include <vector>

#include "shodlab/dyck_path.hpp"

namespace shodlab {

/// Default cap for enumerate_avoiders (permutation length).
inline constexpr int kDefaultMaxPermutationLength = 11;

/// A permutation of {1..n} in one-line notation, n >= 1.
class Permutation {
public:
    /// Throws InvalidPermutation unless `values` is a bijection of {1..n}.
    explicit Permutation(std::vector<int> values);

    static Permutation identity(int n);
    /// n (n-1) ... 1
    static Permutation decreasing(int n);

    int size() const noexcept { return static_cast<int>(values_.size()); }
    std::span<const int> values() const noexcept { return values_; }
    /// 1-based access, matching one-line notation.
    int at(int position) const { return values_[static_cast<std::size_t>(position) - 1]; }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> values_;
};

/// pi = m_1 w_1 m_2 w_2 ... m_s w_s, split at the left-to-right minima.
struct LtrDecomposition {
    std::vector<int> minima;               // m_1 > m_2 > ... > m_s = 1
    std::vector<std::vector<int>> words;   // w_1 .. w_s, possibly empty
    int m0;                                // n + 1

    int blocks() const noexcept { return static_cast<int>(minima.size()); }
};

/// Lexicographically smallest 1-based index tuple whose values are
/// order-isomorphic to `pattern`, or nullopt if `pi` avoids it.
std::optional<std::vector<int>> contains_pattern(const Permutation& pi, const Permutation& pattern);

inline bool avoids(const Permutation& pi, const Permutation& pattern) {
    return !contains_pattern(pi, pattern).has_value();
}

bool avoids_all(const Permutation& pi, std::span<const Permutation> patterns);

LtrDecomposition ltr_decompose(const Permutation& pi);

/// Reassemble m_1 w_1 ... m_s w_s.
Permutation reassemble(const LtrDecomposition& decomposition);

/// Krattenthaler bijection. With m_0 = n + 1 the step word is the
/// concatenation over i = 1..s of U^{m_{i-1} - m_i} D^{|w_i| + 1}.
/// Throws Not132Avoiding.
DyckPath phi(const Permutation& pi);

/// Inverse of phi: split the word into maximal blocks U^{a_i} D^{b_i}, set
/// m_i = m_{i-1} - a_i and fill w_i with the b_i - 1 smallest unused values
/// above m_i. Requires semilength >= 1 (throws DomainError otherwise).
Permutation phi_inverse(const DyckPath& path);

/// Permutations of {1..n} avoiding every pattern, in lexicographic order.
/// Throws CapExceeded for n above the cap.
std::vector<Permutation> enumerate_avoiders(int n, std::span<const Permutation> patterns,
                                            int cap = kDefaultMaxPermutationLength);

}  // namespace shodlab
