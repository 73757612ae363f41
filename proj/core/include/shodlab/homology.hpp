#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "shodlab/dyck_path.hpp"

namespace shodlab {

/// An indecomposable module of the Nakayama algebra of a path: the gridpoint
/// (column, length) with 1 <= length <= c_column. It has composition factors
/// column, column + 1, ..., column + length - 1.
struct ModulePoint {
    int column;
    int length;

    friend auto operator<=>(const ModulePoint&, const ModulePoint&) = default;
};

/// Result of syzygy/cosyzygy; nullopt stands for the zero module.
using MaybeModule = std::optional<ModulePoint>;

enum class ResolutionKind { Projective, Injective };

struct ModuleStatus {
    bool projective;
    bool injective;

    friend bool operator==(const ModuleStatus&, const ModuleStatus&) = default;
};

/// Minimal projective or injective resolution of a module.
///
/// `terms` holds the covers (resp. envelopes) of the module and of every
/// non-final syzygy; `syzygies` holds Omega^1..Omega^k (resp. Sigma^1..Sigma^k).
/// The final syzygy is itself projective (resp. injective) and is not repeated
/// in `terms`. A projective (injective) module has terms = {itself} and no
/// syzygies.
struct Resolution {
    ResolutionKind kind;
    std::vector<ModulePoint> terms;
    std::vector<ModulePoint> syzygies;

    int length() const noexcept { return static_cast<int>(syzygies.size()); }
};

bool contains(const DyckPath& path, ModulePoint point) noexcept;

/// All module points of the path in lexicographic (column, length) order.
std::vector<ModulePoint> module_points(const DyckPath& path);

/// Projective iff length == c_column; injective iff column == 0 or
/// c_{column-1} <= length. Throws NoSuchModule for points outside the grid.
ModuleStatus module_status(const DyckPath& path, ModulePoint point);

ModulePoint projective_cover(const DyckPath& path, ModulePoint point);

/// The injective point with the same socle: (a, column + length - a) where
/// a is the least column with a + c_a >= column + length.
ModulePoint injective_envelope(const DyckPath& path, ModulePoint point);

/// Omega(i, j) = (i + j, c_i - j), or zero for projective points.
MaybeModule syzygy(const DyckPath& path, ModulePoint point);

/// Sigma(i, j) = (a, i - a) with a from injective_envelope, or zero for
/// injective points.
MaybeModule cosyzygy(const DyckPath& path, ModulePoint point);

Resolution resolution(const DyckPath& path, ModulePoint point, ResolutionKind kind);

/// Projective or injective dimension by direct iteration.
int homdim(const DyckPath& path, ModulePoint point, ResolutionKind kind);

/// Global dimension. Computes the maximum over both kinds and throws
/// std::logic_error if they disagree.
int gldim(const DyckPath& path);

/// Image of a module point under mirror(): the interval [i, i+j-1] of
/// {0..m} maps to its reversal.
ModulePoint mirror_point(const DyckPath& path, ModulePoint point) noexcept;

/// Per-path table of pdim and idim for every module point, filled by dynamic
/// programming over columns (syzygy moves right, cosyzygy moves left). Gives
/// the same values as homdim().
class HomologyTable {
public:
    explicit HomologyTable(const DyckPath& path);

    int pdim(ModulePoint point) const { return pdim_[index(point)]; }
    int idim(ModulePoint point) const { return idim_[index(point)]; }
    int max_pdim() const noexcept { return max_pdim_; }
    int max_idim() const noexcept { return max_idim_; }

    /// Lexicographically smallest point with pdim > max_pdim and
    /// idim > max_idim, if any.
    std::optional<ModulePoint> first_violation(int max_pdim, int max_idim) const;

private:
    std::size_t index(ModulePoint point) const {
        return static_cast<std::size_t>(offset_[static_cast<std::size_t>(point.column)] +
                                        point.length - 1);
    }

    // offset_[i] = number of points in columns < i; offset_[m + 1] = total
    std::vector<int> offset_;
    std::vector<int> pdim_;
    std::vector<int> idim_;
    int max_pdim_ = 0;
    int max_idim_ = 0;
};

}  // namespace shodlab
