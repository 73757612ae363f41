#include "shodlab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "shodlab/errors.hpp"

namespace shodlab {

namespace {

std::string join(std::span<const int> values) {
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) out += ' ';
        out += std::to_string(values[k]);
    }
    return out;
}

// For each pattern position d, the earlier positions holding the nearest
// smaller and nearest larger value (-1 if none). A candidate entry fits at d
// iff it lies strictly between the entries matched at those two positions;
// that single comparison pair preserves the full relative order.
struct PatternNeighbours {
    std::vector<int> below;
    std::vector<int> above;
};

PatternNeighbours neighbours(std::span<const int> pat) {
    const std::size_t k = pat.size();
    PatternNeighbours nb{std::vector<int>(k, -1), std::vector<int>(k, -1)};
    for (std::size_t d = 0; d < k; ++d) {
        for (std::size_t e = 0; e < d; ++e) {
            const int ve = pat[e];
            if (ve < pat[d] && (nb.below[d] < 0 || ve > pat[static_cast<std::size_t>(nb.below[d])]))
                nb.below[d] = static_cast<int>(e);
            if (ve > pat[d] && (nb.above[d] < 0 || ve < pat[static_cast<std::size_t>(nb.above[d])]))
                nb.above[d] = static_cast<int>(e);
        }
    }
    return nb;
}

bool search(std::span<const int> text, const PatternNeighbours& nb, std::vector<int>& chosen,
            int start) {
    const int n = static_cast<int>(text.size());
    const int k = static_cast<int>(nb.below.size());
    const int depth = static_cast<int>(chosen.size());
    if (depth == k) return true;
    const int below = nb.below[static_cast<std::size_t>(depth)];
    const int above = nb.above[static_cast<std::size_t>(depth)];
    const int lo = below < 0 ? 0 : text[static_cast<std::size_t>(chosen[static_cast<std::size_t>(below)])];
    const int hi = above < 0 ? n + 1 : text[static_cast<std::size_t>(chosen[static_cast<std::size_t>(above)])];

    for (int p = start; p <= n - (k - depth); ++p) {
        const int v = text[static_cast<std::size_t>(p)];
        if (v <= lo || v >= hi) continue;
        chosen.push_back(p);
        if (search(text, nb, chosen, p + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    const int n = static_cast<int>(values_.size());
    if (n == 0) throw InvalidPermutation("permutation must have at least one entry");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : values_) {
        if (v < 1 || v > n) {
            throw InvalidPermutation("entry " + std::to_string(v) + " is outside 1.." +
                                     std::to_string(n));
        }
        if (seen[static_cast<std::size_t>(v)])
            throw InvalidPermutation("entry " + std::to_string(v) + " repeats");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> values(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(values.begin(), values.end(), 1);
    return Permutation(std::move(values));
}

Permutation Permutation::decreasing(int n) {
    std::vector<int> values(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(values.rbegin(), values.rend(), 1);
    return Permutation(std::move(values));
}

std::optional<std::vector<int>> contains_pattern(const Permutation& pi, const Permutation& pattern) {
    if (pattern.size() > pi.size()) return std::nullopt;
    const PatternNeighbours nb = neighbours(pattern.values());
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(pattern.size()));
    if (!search(pi.values(), nb, chosen, 0)) return std::nullopt;
    for (int& index : chosen) ++index;
    return chosen;
}

bool avoids_all(const Permutation& pi, std::span<const Permutation> patterns) {
    return std::none_of(patterns.begin(), patterns.end(),
                        [&](const Permutation& pat) { return contains_pattern(pi, pat).has_value(); });
}

LtrDecomposition ltr_decompose(const Permutation& pi) {
    LtrDecomposition dec{{}, {}, pi.size() + 1};
    for (int v : pi.values()) {
        if (dec.minima.empty() || v < dec.minima.back()) {
            dec.minima.push_back(v);
            dec.words.emplace_back();
        } else {
            dec.words.back().push_back(v);
        }
    }
    return dec;
}

Permutation reassemble(const LtrDecomposition& decomposition) {
    std::vector<int> values;
    for (std::size_t i = 0; i < decomposition.minima.size(); ++i) {
        values.push_back(decomposition.minima[i]);
        values.insert(values.end(), decomposition.words[i].begin(), decomposition.words[i].end());
    }
    return Permutation(std::move(values));
}

DyckPath phi(const Permutation& pi) {
    static const Permutation p132({1, 3, 2});
    if (auto witness = contains_pattern(pi, p132)) {
        throw Not132Avoiding(*witness, "permutation " + join(pi.values()) +
                                           " contains 132 at positions " + join(*witness));
    }
    const LtrDecomposition dec = ltr_decompose(pi);
    std::string steps;
    steps.reserve(2 * static_cast<std::size_t>(pi.size()));
    int previous = dec.m0;
    for (std::size_t i = 0; i < dec.minima.size(); ++i) {
        steps.append(static_cast<std::size_t>(previous - dec.minima[i]), 'U');
        steps.append(dec.words[i].size() + 1, 'D');
        previous = dec.minima[i];
    }
    return DyckPath::from_step_word(steps);
}

Permutation phi_inverse(const DyckPath& path) {
    const int n = path.semilength();
    if (n < 1) throw DomainError("phi_inverse needs a path of semilength at least 1");
    const std::string& steps = path.steps();
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(n));

    int minimum = n + 1;
    std::size_t pos = 0;
    while (pos < steps.size()) {
        int ups = 0;
        int downs = 0;
        while (pos < steps.size() && steps[pos] == 'U') ++ups, ++pos;
        while (pos < steps.size() && steps[pos] == 'D') ++downs, ++pos;
        minimum -= ups;
        used[static_cast<std::size_t>(minimum)] = true;
        values.push_back(minimum);
        int wanted = downs - 1;
        for (int v = minimum + 1; wanted > 0; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            values.push_back(v);
            --wanted;
        }
    }
    return Permutation(std::move(values));
}

std::vector<Permutation> enumerate_avoiders(int n, std::span<const Permutation> patterns, int cap) {
    if (n < 1) throw DomainError("permutation length must be at least 1");
    if (n > cap) {
        throw CapExceeded("permutation length " + std::to_string(n) + " exceeds the cap of " +
                          std::to_string(cap));
    }
    std::vector<Permutation> out;
    const bool has_132 = std::any_of(patterns.begin(), patterns.end(), [](const Permutation& p) {
        return p == Permutation({1, 3, 2});
    });
    if (has_132) {
        for_each_path(
            n,
            [&](const DyckPath& path) {
                Permutation pi = phi_inverse(path);
                if (avoids_all(pi, patterns)) out.push_back(std::move(pi));
            },
            n);
        std::sort(out.begin(), out.end());
        return out;
    }
    std::vector<int> values(static_cast<std::size_t>(n));
    std::iota(values.begin(), values.end(), 1);
    do {
        Permutation pi(values);
        if (avoids_all(pi, patterns)) out.push_back(std::move(pi));
    } while (std::next_permutation(values.begin(), values.end()));
    return out;
}

}  // namespace shodlab
