#include "shodlab/census.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <exception>
#include <stdexcept>
#include <thread>

#include "shodlab/errors.hpp"
#include "shodlab/permutation.hpp"

namespace shodlab {

namespace {

// Runs fn(state, index, path) over every path of semilength m. Worker w owns
// the indices congruent to w modulo the worker count and keeps its own state;
// the caller reduces the returned states, so the result is independent of
// scheduling.
template <typename State, typename Fn>
std::vector<State> map_paths(int m, int threads, int cap, const Fn& fn) {
    const int workers = std::max(threads, 1);
    std::vector<State> states(static_cast<std::size_t>(workers));

    auto run = [&](int worker) {
        PathEnumerator paths(m, cap);
        State& state = states[static_cast<std::size_t>(worker)];
        for (std::uint64_t index = 0;; ++index) {
            if (index % static_cast<std::uint64_t>(workers) != static_cast<std::uint64_t>(worker)) {
                if (!paths.skip()) break;
                continue;
            }
            auto path = paths.next();
            if (!path) break;
            fn(state, index, *path);
        }
    };

    if (workers == 1) {
        run(0);
        return states;
    }
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    run(w);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        }
    }
    for (auto& error : errors)
        if (error) std::rethrow_exception(error);
    return states;
}

struct ClassTally {
    std::uint64_t total = 0;
    std::uint64_t tilted = 0;
    std::uint64_t strict = 0;

    void add(ShodClass cls) {
        ++total;
        if (cls == ShodClass::Tilted) ++tilted;
        if (cls == ShodClass::StrictShod) ++strict;
    }
    void merge(const ClassTally& other) {
        total += other.total;
        tilted += other.tilted;
        strict += other.strict;
    }
};

CensusRow make_row(int m, const ClassTally& tally) {
    const Formulas f = formulas(m + 1);
    CensusRow row{m,
                  m + 1,
                  tally.total,
                  tally.tilted + tally.strict,
                  tally.tilted,
                  tally.strict,
                  f.f_tilted,
                  f.f_strict,
                  f.f_total,
                  false};
    row.agree = static_cast<std::int64_t>(row.tilted) == f.f_tilted &&
                static_cast<std::int64_t>(row.strict) == f.f_strict &&
                static_cast<std::int64_t>(row.shod) == f.f_total;
    return row;
}

void require_semilength(int m, int cap) {
    if (m < 1) throw DomainError("census semilength must be at least 1");
    if (m > cap) {
        throw CapExceeded("semilength " + std::to_string(m) + " exceeds the cap of " +
                          std::to_string(cap));
    }
}

}  // namespace

Formulas formulas(int n) {
    if (n < 2) throw DomainError("formulas need at least 2 simples, got n = " + std::to_string(n));
    Formulas f{0, 1, 0};
    for (std::int64_t k = 1; k <= n - 3; ++k) f.f_strict += k * k;
    for (std::int64_t k = 1; k <= n - 2; ++k) f.f_tilted += k;
    const std::int64_t N = n;
    const std::int64_t numerator = N * N * N - 6 * N * N + 14 * N - 9;
    if (numerator % 3 != 0) throw std::logic_error("shod total is not an integer at n = " + std::to_string(n));
    f.f_total = numerator / 3;
    if (f.f_total != f.f_tilted + f.f_strict)
        throw std::logic_error("shod total != tilted + strict at n = " + std::to_string(n));
    return f;
}

CensusRow class_counts(int m, const CensusOptions& options) {
    require_semilength(m, options.cap);
    auto tallies = map_paths<ClassTally>(m, options.threads, options.cap,
                                         [](ClassTally& tally, std::uint64_t, const DyckPath& path) {
                                             tally.add(classify_homological(path).cls);
                                         });
    ClassTally total;
    for (const auto& t : tallies) total.merge(t);
    return make_row(m, total);
}

std::vector<CensusRow> census_rows(int max_semilength, const CensusOptions& options) {
    require_semilength(max_semilength, options.cap);
    std::vector<CensusRow> rows;
    for (int m = 1; m <= max_semilength; ++m) rows.push_back(class_counts(m, options));
    return rows;
}

std::vector<NmCount> nm_census(int max_pdim, int max_idim, bool strong, int max_semilength,
                               const CensusOptions& options) {
    require_semilength(max_semilength, options.cap);
    if (max_pdim < 0 || max_idim < 0) throw DomainError("(n, m)-shod bounds must be non-negative");
    std::vector<NmCount> out;
    for (int m = 1; m <= max_semilength; ++m) {
        auto counts = map_paths<std::uint64_t>(
            m, options.threads, options.cap, [&](std::uint64_t& count, std::uint64_t, const DyckPath& path) {
                if (nm_shod(HomologyTable(path), max_pdim, max_idim, strong)) ++count;
            });
        std::uint64_t total = 0;
        for (auto c : counts) total += c;
        out.push_back({m, total});
    }
    return out;
}

bool VerifyReport::verified() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.verified(); });
}

namespace {

// Per-path checks evaluated inside the parallel map (E4 is a per-semilength
// reduction and handled separately).
enum PathCheck { kE1, kE2, kE3, kE5, kPathChecks };

struct Failure {
    std::uint64_t index;
    Counterexample example;
};

struct VerifyState {
    ClassTally tally;
    std::array<std::optional<Failure>, kPathChecks> first;
};

}  // namespace

VerifyReport verify_theorems(int max_semilength, const VerifyOptions& options) {
    require_semilength(max_semilength, options.cap);
    const Classifier homological = options.homological ? options.homological : classify_homological;
    const Classifier geometric = options.geometric ? options.geometric : classify_geometric;

    static const Permutation p132({1, 3, 2});
    static const Permutation p321({3, 2, 1});
    static const std::array<Permutation, 2> shod_patterns{Permutation({4, 3, 2, 1}),
                                                          Permutation({4, 2, 3, 1})};

    VerifyReport report;
    report.max_semilength = max_semilength;
    report.checks = {
        {"E1", "homological verdict equals geometric verdict", 0, std::nullopt},
        {"E2", "shod iff phi_inverse avoids 4321 and 4231", 0, std::nullopt},
        {"E3", "tilted iff at most two peaks iff phi_inverse avoids 321", 0, std::nullopt},
        {"E4", "census counts equal the closed formulas", 0, std::nullopt},
        {"E5", "phi roundtrip and peaks equal left-to-right minima", 0, std::nullopt},
    };
    constexpr std::array<std::size_t, kPathChecks> report_slot{0, 1, 2, 4};
    constexpr std::size_t kE4Slot = 3;

    const auto start = std::chrono::steady_clock::now();
    for (int m = 1; m <= max_semilength; ++m) {
        const auto m_start = std::chrono::steady_clock::now();
        std::array<bool, kPathChecks> active{};
        for (std::size_t c = 0; c < kPathChecks; ++c)
            active[c] = report.checks[report_slot[c]].verified();

        auto states = map_paths<VerifyState>(
            m, options.threads, options.cap,
            [&](VerifyState& state, std::uint64_t index, const DyckPath& path) {
                const Verdict hv = homological(path);
                state.tally.add(hv.cls);

                auto fail = [&](PathCheck check, std::string detail) {
                    if (state.first[check]) return;
                    state.first[check] = Failure{
                        index,
                        {m, path.steps(), std::vector<int>(path.area().begin(), path.area().end()),
                         std::move(detail)}};
                };
                auto pending = [&](PathCheck check) { return active[check] && !state.first[check]; };

                if (pending(kE1)) {
                    const Verdict gv = geometric(path);
                    if (gv.cls != hv.cls) {
                        fail(kE1, "homological " + std::string(to_string(hv.cls)) + " vs geometric " +
                                      std::string(to_string(gv.cls)));
                    }
                }
                if (!pending(kE2) && !pending(kE3) && !pending(kE5)) return;

                const Permutation pi = phi_inverse(path);
                const int peaks = peak_count(path);
                if (pending(kE2)) {
                    const bool avoid = avoids_all(pi, shod_patterns);
                    if (avoid != is_shod(hv.cls)) {
                        fail(kE2, std::string(to_string(hv.cls)) + " but phi_inverse " +
                                      (avoid ? "avoids" : "contains") + " {4321, 4231}");
                    }
                }
                if (pending(kE3)) {
                    const bool tilted = hv.cls == ShodClass::Tilted;
                    const bool few_peaks = peaks <= 2;
                    const bool avoid = avoids(pi, p321);
                    if (tilted != few_peaks || tilted != avoid) {
                        fail(kE3, std::string(to_string(hv.cls)) + ", " + std::to_string(peaks) +
                                      " peaks, phi_inverse " + (avoid ? "avoids" : "contains") + " 321");
                    }
                }
                if (pending(kE5)) {
                    if (!avoids(pi, p132)) {
                        fail(kE5, "phi_inverse contains 132");
                    } else if (phi(pi) != path) {
                        fail(kE5, "phi(phi_inverse(D)) = " + phi(pi).steps());
                    } else if (ltr_decompose(pi).blocks() != peaks) {
                        fail(kE5, std::to_string(ltr_decompose(pi).blocks()) +
                                      " left-to-right minima vs " + std::to_string(peaks) + " peaks");
                    }
                }
            });

        ClassTally tally;
        std::array<std::optional<Failure>, kPathChecks> first;
        for (auto& state : states) {
            tally.merge(state.tally);
            for (std::size_t c = 0; c < kPathChecks; ++c) {
                auto& candidate = state.first[c];
                if (candidate && (!first[c] || candidate->index < first[c]->index))
                    first[c] = std::move(candidate);
            }
        }

        for (std::size_t c = 0; c < kPathChecks; ++c) {
            if (!active[c]) continue;
            CheckResult& result = report.checks[report_slot[c]];
            if (first[c]) {
                result.checked += first[c]->index + 1;
                result.counterexample = std::move(first[c]->example);
            } else {
                result.checked += tally.total;
            }
        }

        const CensusRow row = make_row(m, tally);
        CheckResult& e4 = report.checks[kE4Slot];
        if (e4.verified()) {
            e4.checked += tally.total;
            if (!row.agree) {
                e4.counterexample = Counterexample{
                    m, "", {},
                    "n = " + std::to_string(row.n) + ": tilted " + std::to_string(row.tilted) + " vs " +
                        std::to_string(row.f_tilted) + ", strict " + std::to_string(row.strict) +
                        " vs " + std::to_string(row.f_strict) + ", shod " + std::to_string(row.shod) +
                        " vs " + std::to_string(row.f_total)};
            }
        }
        report.rows.push_back(row);
        report.seconds_per_semilength.push_back(
            std::chrono::duration<double>(std::chrono::steady_clock::now() - m_start).count());
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace shodlab
