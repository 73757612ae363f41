#pragma once

#include <optional>
#include <string_view>

#include "shodlab/dyck_path.hpp"
#include "shodlab/homology.hpp"

namespace shodlab {

enum class ShodClass { NotShod, Tilted, StrictShod };

/// "tilted", "strict_shod" or "not_shod".
std::string_view to_string(ShodClass cls) noexcept;

inline bool is_shod(ShodClass cls) noexcept { return cls != ShodClass::NotShod; }

/// Classification outcome. `witness` is present exactly for NotShod and names
/// a module with pdim >= 2 and idim >= 2.
struct Verdict {
    ShodClass cls;
    int gldim;
    std::optional<ModulePoint> witness;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Scans every module point. NotShod carries the lexicographically smallest
/// violating point; otherwise Tilted when gldim <= 2 and StrictShod when
/// gldim == 3.
Verdict classify_homological(const DyckPath& path);

/// Same verdict from the peak shape alone:
///   <= 2 peaks                              -> Tilted
///   3 peaks with d_succ == 1 or d_pred == 1 -> StrictShod
///   3 peaks otherwise                       -> NotShod, witness (p2 + 1, c_{p2} - 2)
///   >= 4 peaks                              -> NotShod, witness by scan
/// gldim is always taken from the homology module.
Verdict classify_geometric(const DyckPath& path);

/// (n, m)-shod: every module has pdim <= n or idim <= m. `strong` also
/// requires gldim <= n + m.
bool nm_shod(const DyckPath& path, int max_pdim, int max_idim, bool strong);

/// Same as nm_shod, reusing a precomputed table.
bool nm_shod(const HomologyTable& table, int max_pdim, int max_idim, bool strong);

}  // namespace shodlab
