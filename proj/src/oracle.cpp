#include "hertzinv/oracle.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace hertzinv {

Int involution_count(int n) {
    if (n < 0) throw std::invalid_argument("involution count needs n >= 0");
    Int prev = 1, cur = 1;  // I_0, I_1
    if (n == 0) return prev;
    for (int m = 2; m <= n; ++m) {
        Int next = cur + (m - 1) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

void extend_involution(std::vector<int>& arr, int n,
                       const std::function<void(const Permutation&)>& fn) {
    int i = 1;
    while (i <= n && arr[static_cast<std::size_t>(i)] != 0) ++i;
    if (i > n) {
        fn(Permutation(std::vector<int>(arr.begin() + 1, arr.end())));
        return;
    }
    arr[static_cast<std::size_t>(i)] = i;
    extend_involution(arr, n, fn);
    arr[static_cast<std::size_t>(i)] = 0;
    for (int j = i + 1; j <= n; ++j) {
        if (arr[static_cast<std::size_t>(j)] != 0) continue;
        arr[static_cast<std::size_t>(i)] = j;
        arr[static_cast<std::size_t>(j)] = i;
        extend_involution(arr, n, fn);
        arr[static_cast<std::size_t>(i)] = 0;
        arr[static_cast<std::size_t>(j)] = 0;
    }
}

}  // namespace

void for_each_involution(int n, const std::function<void(const Permutation&)>& fn) {
    if (n < 0) throw std::invalid_argument("involution enumeration needs n >= 0");
    std::vector<int> arr(static_cast<std::size_t>(n) + 1, 0);
    extend_involution(arr, n, fn);
}

std::vector<Permutation> involutions(int n) {
    std::vector<Permutation> out;
    for_each_involution(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

StatisticsVector statistics_of(const PatternSet& set, const Permutation& p) {
    const OccurrenceStats stats = count_stats(set, p);
    return StatisticsVector{p.involution_stats().fixed_points, stats.sib_nsib, stats.left_counts};
}

Census statistics_census_serial(const PatternSet& set, int n) {
    Census census;
    for_each_involution(n, [&](const Permutation& p) { census[statistics_of(set, p)] += 1; });
    return census;
}

Census statistics_census(const PatternSet& set, int n) {
    const std::vector<Permutation> all = involutions(n);
    Census total;
#pragma omp parallel
    {
        Census local;
#pragma omp for schedule(dynamic, 64) nowait
        for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(all.size()); ++idx)
            local[statistics_of(set, all[static_cast<std::size_t>(idx)])] += 1;
#pragma omp critical
        for (const auto& [key, count] : local) total[key] += count;
    }
    return total;
}

MultiSeries census_series(const Census& census, const std::vector<std::string>& vars, int n) {
    MultiSeries row = MultiSeries::zero(vars, MultiSeries::kUnbounded);
    for (const auto& [sv, count] : census) {
        std::map<std::string, int> exps{{"x", n}, {"t", sv.fixed_points}};
        for (std::size_t i = 0; i < sv.sib_nsib.size(); ++i) {
            const auto [sib, nsib] = sv.sib_nsib[i];
            if (nsib % 2 != 0) throw std::logic_error("odd non-self-sibling count in census");
            exps["u" + std::to_string(i + 1)] = sib;
            exps["v" + std::to_string(i + 1)] = nsib / 2;
        }
        for (std::size_t k = 0; k < sv.left_counts.size(); ++k)
            exps["w" + std::to_string(k + 1)] = sv.left_counts[k];
        row += MultiSeries::monomial(vars, MultiSeries::kUnbounded, exps, count);
    }
    return row;
}

namespace {

MultiSeries one_plus_var(const std::vector<std::string>& vars, const std::string& name) {
    return MultiSeries::constant(vars, MultiSeries::kUnbounded, 1) +
           MultiSeries::variable(vars, MultiSeries::kUnbounded, name);
}

MultiSeries marked_weight(const PatternSet& set, const std::vector<std::string>& vars,
                          const Permutation& p) {
    const StatisticsVector sv = statistics_of(set, p);
    MultiSeries weight = MultiSeries::monomial(
        vars, MultiSeries::kUnbounded, {{"x", p.size()}, {"t", sv.fixed_points}}, 1);
    for (std::size_t i = 0; i < sv.sib_nsib.size(); ++i) {
        const auto [sib, nsib] = sv.sib_nsib[i];
        if (nsib % 2 != 0) throw std::logic_error("odd non-self-sibling count in marked weight");
        weight = weight * one_plus_var(vars, "u" + std::to_string(i + 1)).pow(sib);
        weight = weight * one_plus_var(vars, "v" + std::to_string(i + 1)).pow(nsib / 2);
    }
    for (std::size_t k = 0; k < sv.left_counts.size(); ++k)
        weight = weight * one_plus_var(vars, "w" + std::to_string(k + 1)).pow(sv.left_counts[k]);
    return weight;
}

int pattern_index(const std::vector<Permutation>& pats, const Permutation& p) {
    for (std::size_t i = 0; i < pats.size(); ++i)
        if (pats[i] == p) return static_cast<int>(i);
    return -1;
}

}  // namespace

MultiSeries marked_row_formula_serial(const PatternSet& set, const std::vector<std::string>& vars,
                                      int n) {
    MultiSeries row = MultiSeries::zero(vars, MultiSeries::kUnbounded);
    for_each_involution(n, [&](const Permutation& p) { row += marked_weight(set, vars, p); });
    return row;
}

MultiSeries marked_row_formula(const PatternSet& set, const std::vector<std::string>& vars, int n) {
    const std::vector<Permutation> all = involutions(n);
    MultiSeries total = MultiSeries::zero(vars, MultiSeries::kUnbounded);
#pragma omp parallel
    {
        MultiSeries local = MultiSeries::zero(vars, MultiSeries::kUnbounded);
#pragma omp for schedule(dynamic, 64) nowait
        for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(all.size()); ++idx)
            local += marked_weight(set, vars, all[static_cast<std::size_t>(idx)]);
#pragma omp critical
        total += local;
    }
    return total;
}

MultiSeries marked_row_subsets(const PatternSet& set, const std::vector<std::string>& vars, int n) {
    MultiSeries row = MultiSeries::zero(vars, MultiSeries::kUnbounded);
    for_each_involution(n, [&](const Permutation& p) {
        const std::vector<Occurrence> occ = find_occurrences(set, p);
        std::vector<std::vector<Occurrence>> orbits;
        std::vector<bool> consumed(occ.size(), false);
        for (std::size_t i = 0; i < occ.size(); ++i) {
            if (consumed[i]) continue;
            consumed[i] = true;
            const Occurrence sib = occ[i].sibling();
            if (sib == occ[i]) {
                orbits.push_back({occ[i]});
                continue;
            }
            const auto it = std::lower_bound(occ.begin(), occ.end(), sib);
            if (it == occ.end() || *it != sib)
                throw std::logic_error("occurrence list of an involution is missing a sibling");
            consumed[static_cast<std::size_t>(it - occ.begin())] = true;
            orbits.push_back({occ[i], sib});
        }
        if (orbits.size() >= 63)
            throw std::invalid_argument("too many sibling orbits for subset enumeration");

        const int fp = p.involution_stats().fixed_points;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << orbits.size()); ++mask) {
            std::map<std::string, int> exps{{"x", n}, {"t", fp}};
            std::vector<int> nsib(static_cast<std::size_t>(set.involutive_count()), 0);
            for (std::size_t b = 0; b < orbits.size(); ++b) {
                if (!(mask >> b & 1)) continue;
                for (const Occurrence& mark : orbits[b]) {
                    int i = pattern_index(set.involutive(), mark.pattern);
                    if (i >= 0) {
                        if (mark.is_self_sibling())
                            ++exps["u" + std::to_string(i + 1)];
                        else
                            ++nsib[static_cast<std::size_t>(i)];
                        continue;
                    }
                    i = pattern_index(set.left(), mark.pattern);
                    if (i >= 0) ++exps["w" + std::to_string(i + 1)];
                }
            }
            for (std::size_t i = 0; i < nsib.size(); ++i) {
                if (nsib[i] % 2 != 0)
                    throw std::logic_error("sibling-closed mark subset with an odd pair count");
                exps["v" + std::to_string(i + 1)] = nsib[i] / 2;
            }
            row += MultiSeries::monomial(vars, MultiSeries::kUnbounded, exps, 1);
        }
    });
    return row;
}

namespace {

bool contains_factor(const Permutation& p, const Permutation& pat) {
    const int n = p.size();
    const int k = pat.size();
    for (int j = 1; j + k - 1 <= n; ++j) {
        const int c = p.at(j) - pat.at(1);
        bool match = true;
        for (int i = 2; i <= k; ++i) {
            if (p.at(j + i - 1) != pat.at(i) + c) {
                match = false;
                break;
            }
        }
        if (match) return true;
    }
    return false;
}

std::vector<Int> filtered_sequence(int max_n, const std::function<bool(const Permutation&)>& keep) {
    if (max_n < 0) throw std::invalid_argument("sequence needs max_n >= 0");
    std::vector<Int> seq(static_cast<std::size_t>(max_n) + 1, 0);
    for (int n = 0; n <= max_n; ++n)
        for_each_involution(n, [&](const Permutation& p) {
            if (keep(p)) seq[static_cast<std::size_t>(n)] += 1;
        });
    return seq;
}

bool no_ascent_by_one(const Permutation& p) {
    for (int i = 1; i < p.size(); ++i)
        if (p.at(i + 1) - p.at(i) == 1) return false;
    return true;
}

bool no_step_by_one(const Permutation& p) {
    for (int i = 1; i < p.size(); ++i) {
        const int d = p.at(i + 1) - p.at(i);
        if (d == 1 || d == -1) return false;
    }
    return true;
}

}  // namespace

Int avoider_count(const std::vector<Permutation>& patterns, int n) {
    Int count = 0;
    for_each_involution(n, [&](const Permutation& p) {
        for (const Permutation& pat : patterns)
            if (contains_factor(p, pat)) return;
        count += 1;
    });
    return count;
}

std::vector<Int> avoidance_sequence(const Permutation& pattern, int max_n) {
    if (max_n < 0) throw std::invalid_argument("avoidance sequence needs max_n >= 0");
    std::vector<Int> seq;
    seq.reserve(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) seq.push_back(avoider_count({pattern}, n));
    return seq;
}

std::vector<Int> hertzsprung_sequence(int max_n) {
    return filtered_sequence(max_n, no_step_by_one);
}

std::vector<Int> irreducible_sequence(int max_n) {
    return filtered_sequence(max_n, no_ascent_by_one);
}

std::vector<Int> fpf_irreducible_sequence(int max_n) {
    return filtered_sequence(max_n, [](const Permutation& p) {
        return p.involution_stats().fixed_points == 0 && no_ascent_by_one(p);
    });
}

std::vector<std::vector<Int>> short_pair_table(int max_n) {
    if (max_n < 0) throw std::invalid_argument("short pair table needs max_n >= 0");
    std::vector<std::vector<Int>> rows(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        auto& row = rows[static_cast<std::size_t>(n)];
        for_each_involution(n, [&](const Permutation& p) {
            if (p.involution_stats().fixed_points != 0) return;
            int short_pairs = 0;
            for (int i = 1; i < p.size(); ++i)
                if (p.at(i) == i + 1 && p.at(i + 1) == i) ++short_pairs;
            if (static_cast<std::size_t>(short_pairs) >= row.size())
                row.resize(static_cast<std::size_t>(short_pairs) + 1, 0);
            row[static_cast<std::size_t>(short_pairs)] += 1;
        });
    }
    return rows;
}

}  // namespace hertzinv
