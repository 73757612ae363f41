// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "shodlab/census.hpp"
#include "shodlab/classify.hpp"
#include "shodlab/homology.hpp"
#include "shodlab/permutation.hpp"

using namespace shodlab;

namespace {

constexpr auto kProj = ResolutionKind::Projective;
constexpr auto kInj = ResolutionKind::Injective;

/// Empty on success, otherwise a description of the first failure.
using Outcome = std::optional<std::string>;

std::string area_text(const DyckPath& p) {
    std::string out = "[";
    for (std::size_t k = 0; k < p.area().size(); ++k) out += (k ? "," : "") + std::to_string(p.area()[k]);
    return out + "]";
}

Outcome corollary() {
    for (int m = 1; m <= 12; ++m) {
        const int n = m + 1;
        std::int64_t strict = 0;
        for (int k = 1; k <= n - 3; ++k) strict += static_cast<std::int64_t>(k) * k;
        std::int64_t tilted = 1;
        for (int k = 1; k <= n - 2; ++k) tilted += k;
        const std::int64_t cubic = static_cast<std::int64_t>(n) * n * n - 6LL * n * n + 14LL * n - 9;
        if (cubic % 3 != 0) return "cubic not divisible by 3 at n=" + std::to_string(n);

        const CensusRow row = class_counts(m);
        const auto s = static_cast<std::int64_t>(row.strict);
        const auto t = static_cast<std::int64_t>(row.tilted);
        const auto total = static_cast<std::int64_t>(row.shod);
        if (s != strict || t != tilted || total != cubic / 3 || total != s + t) {
            return "n=" + std::to_string(n) + ": strict " + std::to_string(s) + "/" + std::to_string(strict) +
                   ", tilted " + std::to_string(t) + "/" + std::to_string(tilted) + ", shod " +
                   std::to_string(total) + "/" + std::to_string(cubic / 3);
        }
    }
    return std::nullopt;
}

Outcome theorems() {
    const VerifyReport report = verify_theorems(12);
    for (const CheckResult& check : report.checks) {
        if (check.id != "E1" && check.id != "E2" && check.id != "E3") continue;
        if (check.counterexample)
            return check.id + " counterexample at m=" + std::to_string(check.counterexample->semilength) + ": " +
                   check.counterexample->detail;
    }
    Outcome failure;
    for (int m = 1; m <= 12 && !failure; ++m) {
        for_each_path(m, [&](const DyckPath& p) {
            if (failure || peak_count(p) < 4) return;
            if (classify_homological(p).cls != ShodClass::NotShod)
                failure = area_text(p) + " has at least four peaks but is shod";
        });
    }
    return failure;
}

int ltr_minima(std::span<const int> v) {
    int count = 0;
    int low = static_cast<int>(v.size()) + 1;
    for (int x : v) {
        if (x < low) {
            low = x;
            ++count;
        }
    }
    return count;
}

Outcome bijection() {
    const Permutation p132({1, 3, 2});
    Outcome failure;
    std::uint64_t paths_at_10 = 0;
    for (int m = 1; m <= 10 && !failure; ++m) {
        for_each_path(m, [&](const DyckPath& path) {
            if (failure) return;
            if (m == 10) ++paths_at_10;
            const Permutation pi = phi_inverse(path);
            if (!avoids(pi, p132) || phi(pi) != path) failure = "phi(phi_inverse(D)) != D for " + area_text(path);
            else if (ltr_minima(pi.values()) != peak_count(path)) failure = "minima != peaks for " + area_text(path);
        });
    }
    if (failure) return failure;

    std::uint64_t avoiders_at_10 = 0;
    for (int n = 1; n <= 10; ++n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        do {
            const Permutation pi(v);
            if (!avoids(pi, p132)) continue;
            if (n == 10) ++avoiders_at_10;
            const DyckPath path = phi(pi);
            if (phi_inverse(path) != pi) return "phi_inverse(phi(pi)) != pi at n=" + std::to_string(n);
            if (peak_count(path) != ltr_minima(v)) return "peaks != minima at n=" + std::to_string(n);
        } while (std::next_permutation(v.begin(), v.end()));
    }
    if (paths_at_10 != 16796 || avoiders_at_10 != 16796)
        return "expected 16796 objects, got " + std::to_string(paths_at_10) + " paths and " +
               std::to_string(avoiders_at_10) + " avoiders";
    return std::nullopt;
}

Outcome worked_examples() {
    const DyckPath tilted = DyckPath::from_area_sequence(std::vector<int>{4, 3, 3, 2, 1});
    if (classify_homological(tilted).cls != ShodClass::Tilted || peak_count(tilted) != 2)
        return "[4,3,3,2,1] is not tilted with 2 peaks";

    const DyckPath nonshod = DyckPath::from_area_sequence(std::vector<int>{2, 3, 2, 2, 1});
    const Verdict v = classify_homological(nonshod);
    if (v.cls != ShodClass::NotShod || !v.witness) return "[2,3,2,2,1] is not classified not shod";
    if (homdim(nonshod, *v.witness, kProj) != 2 || homdim(nonshod, *v.witness, kInj) != 2)
        return "[2,3,2,2,1] witness does not have pdim = idim = 2";

    const LtrDecomposition d = ltr_decompose(Permutation({4, 2, 3, 5, 1}));
    if (d.minima != std::vector<int>{4, 2, 1} || d.words.size() != 3 || d.words[1] != std::vector<int>{3, 5})
        return "42351 does not decompose into minima (4,2,1) with w_2 = (3,5)";

    const DyckPath stairs = DyckPath::from_area_sequence(std::vector<int>{3, 2, 1});
    int proj = 0;
    int inj = 0;
    std::vector<ModulePoint> both;
    for (const ModulePoint& q : module_points(stairs)) {
        const ModuleStatus s = module_status(stairs, q);
        proj += s.projective;
        inj += s.injective;
        if (s.projective && s.injective) both.push_back(q);
    }
    std::vector<ModulePoint> peaks;
    for (int col : peak_profile(stairs).peak_columns) peaks.push_back({col, stairs.c(col)});
    if (proj != 3 || inj != 3 || both != peaks) return "[3,2,1] projective/injective points do not match";
    return std::nullopt;
}

Outcome homological_suite() {
    Outcome failure;
    for (int m = 0; m <= 10 && !failure; ++m) {
        for_each_path(m, [&](const DyckPath& p) {
            if (failure) return;
            const HomologyTable table(p);
            const Verdict v = classify_homological(p);
            const int gl = gldim(p);
            if (table.max_pdim() != table.max_idim() || table.max_pdim() != gl)
                failure = "max pdim, max idim and gldim differ for " + area_text(p);
            else if (is_shod(v.cls) && gl > 3)
                failure = "shod with gldim > 3: " + area_text(p);
            else if (v.cls == ShodClass::StrictShod && gl != 3)
                failure = "strict shod without gldim 3: " + area_text(p);
            if (failure) return;

            const DyckPath mirrored = mirror(p);
            for (const ModulePoint& q : module_points(p)) {
                const ModulePoint r = mirror_point(p, q);
                if (homdim(p, q, kProj) != homdim(mirrored, r, kInj) ||
                    homdim(p, q, kInj) != homdim(mirrored, r, kProj)) {
                    failure = "mirror duality fails for " + area_text(p);
                    return;
                }
            }

            if (m > 8) return;
            const oracle::IntervalModel model({p.area().begin(), p.area().end()});
            for (const auto& module : model.modules()) {
                const auto [col, len] = oracle::IntervalModel::point(module);
                const ModulePoint q{col, len};
                const auto omega = model.omega(module);
                const auto sigma = model.sigma(module);
                const auto o = syzygy(p, q);
                const auto s = cosyzygy(p, q);
                const bool omega_ok = o.has_value() == omega.has_value() &&
                                      (!o || std::pair{o->column, o->length} == oracle::IntervalModel::point(*omega));
                const bool sigma_ok = s.has_value() == sigma.has_value() &&
                                      (!s || std::pair{s->column, s->length} == oracle::IntervalModel::point(*sigma));
                if (!omega_ok || !sigma_ok) {
                    failure = "interval model disagrees at " + area_text(p);
                    return;
                }
            }
        });
    }
    return failure;
}

Outcome nm_checks() {
    Outcome failure;
    for (int m = 1; m <= 10 && !failure; ++m) {
        for_each_path(m, [&](const DyckPath& p) {
            if (failure) return;
            const Verdict v = classify_homological(p);
            if (nm_shod(p, 1, 1, false) != is_shod(v.cls)) failure = "(1,1)-shod != shod for " + area_text(p);
            else if (nm_shod(p, 1, 1, true) != (v.cls == ShodClass::Tilted))
                failure = "strong (1,1)-shod != tilted for " + area_text(p);
            for (int a = 0; a <= 2 && !failure; ++a)
                for (int b = 0; b <= 2 && !failure; ++b)
                    if (nm_shod(p, a, b, false) && v.gldim > a + b + 1)
                        failure = "(" + std::to_string(a) + "," + std::to_string(b) + ")-shod with gldim " +
                                  std::to_string(v.gldim) + ": " + area_text(p);
        });
    }
    return failure;
}

Outcome catalan_totals() {
    const std::vector<std::uint64_t> listed{1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    const auto catalan = oracle::catalan_table(10);
    for (int m = 1; m <= 10; ++m) {
        const auto count = enumerate_paths(m).size();
        const auto expected = catalan[static_cast<std::size_t>(m)];
        if (expected != listed[static_cast<std::size_t>(m - 1)])
            return "recurrence gives " + std::to_string(expected) + " at m=" + std::to_string(m);
        if (count != expected)
            return "m=" + std::to_string(m) + ": " + std::to_string(count) + " paths, expected " +
                   std::to_string(expected);
    }
    return std::nullopt;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"closed-form census counts, n = 2..13", corollary},
        {"classification equivalences, m <= 12", theorems},
        {"bijection integrity, m, n <= 10", bijection},
        {"worked examples", worked_examples},
        {"homological invariants, m <= 10", homological_suite},
        {"(n,m)-shod sanity, m <= 10", nm_checks},
        {"Catalan totals, m = 1..10", catalan_totals},
    };

    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[k].run();
        } catch (const std::exception& e) {
            outcome = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %zu %s (%.2f s)%s%s\n", outcome ? "FAIL" : "PASS", k + 1, criteria[k].name, seconds,
                    outcome ? ": " : "", outcome ? outcome->c_str() : "");
        failed += outcome.has_value();
    }
    return failed == 0 ? 0 : 1;
}
