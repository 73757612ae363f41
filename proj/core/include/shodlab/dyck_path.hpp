#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace shodlab {

/// Default enumeration cap for Dyck paths (semilength).
inline constexpr int kDefaultMaxSemilength = 14;

/// A Dyck path of semilength m, equivalently a linear Nakayama algebra with
/// m + 1 simples. Stores both the step word over {U, D} and the area
/// sequence [c_0, ..., c_m] (the Kupisch series); each determines the other.
///
/// Columns are indexed 0..m left to right along the step word. The i-th
/// down-step (0-based) closes column i and
///     c_i = 1 + #U before that down-step - i,      c_m = 1.
///
/// Instances are immutable and always valid.
class DyckPath {
public:
    /// The empty path (semilength 0, area [1]).
    DyckPath();

    static DyckPath from_area_sequence(std::span<const int> area);
    static DyckPath from_step_word(std::string_view word);

    int semilength() const noexcept { return static_cast<int>(area_.size()) - 1; }
    /// Number of simple modules of the associated algebra.
    int simples() const noexcept { return static_cast<int>(area_.size()); }

    const std::string& steps() const noexcept { return steps_; }
    std::span<const int> area() const noexcept { return area_; }
    /// c_i; i must lie in [0, m].
    int c(int column) const { return area_[static_cast<std::size_t>(column)]; }

    friend bool operator==(const DyckPath& a, const DyckPath& b) { return a.steps_ == b.steps_; }
    friend auto operator<=>(const DyckPath& a, const DyckPath& b) { return a.steps_ <=> b.steps_; }

private:
    DyckPath(std::string steps, std::vector<int> area)
        : steps_(std::move(steps)), area_(std::move(area)) {}

    std::string steps_;
    std::vector<int> area_;
};

/// Reverse the step word and swap U and D.
DyckPath mirror(const DyckPath& path);

struct ValleyPoint {
    int column;
    int height;

    friend bool operator==(const ValleyPoint&, const ValleyPoint&) = default;
};

/// Peaks and valleys of a path.
///
/// A column i is a peak iff i == 0 or c_i >= c_{i-1}. The valley between two
/// consecutive peak columns p < q sits at (q, c_p - (q - p)).
///
/// For exactly three peaks p1 < p2 < p3:
///     d_succ = p3 - p2                              (column gap to the later peak)
///     d_pred = c_{p2} - c_{p1} + (p2 - p1)          (height of p2 above the earlier valley)
struct PeakProfile {
    std::vector<int> peak_columns;
    std::vector<ValleyPoint> valley_points;
    std::optional<int> d_succ;
    std::optional<int> d_pred;

    int peak_count() const noexcept { return static_cast<int>(peak_columns.size()); }
};

/// Requires semilength >= 1; the empty path yields an empty profile.
PeakProfile peak_profile(const DyckPath& path);

/// Number of peaks without building the full profile.
int peak_count(const DyckPath& path);

/// Streams every Dyck path of one semilength in lexicographic step-word order
/// (U < D). Throws CapExceeded if the semilength is above the cap.
class PathEnumerator {
public:
    explicit PathEnumerator(int semilength, int cap = kDefaultMaxSemilength);

    /// Next path, or nullopt when the stream is exhausted.
    std::optional<DyckPath> next();

    /// Advance past the next path without materialising it; false at the end.
    bool skip();

private:
    bool advance();

    int semilength_;
    std::string word_;
    bool started_ = false;
    bool done_ = false;
};

/// Eager form of PathEnumerator.
std::vector<DyckPath> enumerate_paths(int semilength, int cap = kDefaultMaxSemilength);

template <typename Fn>
void for_each_path(int semilength, Fn&& fn, int cap = kDefaultMaxSemilength) {
    PathEnumerator paths(semilength, cap);
    while (auto path = paths.next()) fn(*path);
}

}  // namespace shodlab
