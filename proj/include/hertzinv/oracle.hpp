#pragma once

#include "hertzinv/pattern.hpp"
#include "hertzinv/series.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hertzinv {

/// Number of involutions of length n, from I_n = I_{n-1} + (n-1) I_{n-2}.
Int involution_count(int n);

/// Calls fn once per involution of length n. Order: the smallest unassigned
/// symbol is first fixed, then paired with each larger unassigned symbol in
/// increasing order, so n = 3 yields 123, 132, 213, 321.
void for_each_involution(int n, const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> involutions(int n);

/// Joint statistic values of one involution: fixed points, per involutive
/// pattern its (self-sibling, non-self-sibling) occurrence counts, per
/// transversal pattern its occurrence count.
struct StatisticsVector {
    int fixed_points = 0;
    std::vector<std::pair<int, int>> sib_nsib;
    std::vector<int> left_counts;

    friend bool operator==(const StatisticsVector&, const StatisticsVector&) = default;
    friend auto operator<=>(const StatisticsVector&, const StatisticsVector&) = default;
};

StatisticsVector statistics_of(const PatternSet& set, const Permutation& p);

using Census = std::map<StatisticsVector, Int>;

/// Exhaustive census of statistics_of over all involutions of length n.
/// statistics_census fans the enumeration out over OpenMP threads and merges
/// the per-thread maps; the serial twin is kept as the reference.
Census statistics_census(const PatternSet& set, int n);
Census statistics_census_serial(const PatternSet& set, int n);

/// The census re-encoded as a series row: x^n t^fp u_i^sib v_i^(nsib/2) w_k^count,
/// over a caller-supplied variable list containing those names.
MultiSeries census_series(const Census& census, const std::vector<std::string>& vars, int n);

/// Marked involutions of length n by total weight
///   t^fp (1+u_i)^sib (1+v_i)^(nsib/2) (1+w_k)^count,
/// and the independent cross-check that walks sibling orbits of the occurrence
/// set and sums one monomial per sibling-closed subset of marks.
MultiSeries marked_row_formula(const PatternSet& set, const std::vector<std::string>& vars, int n);
MultiSeries marked_row_formula_serial(const PatternSet& set, const std::vector<std::string>& vars,
                                      int n);
MultiSeries marked_row_subsets(const PatternSet& set, const std::vector<std::string>& vars, int n);

/// Number of involutions of length n containing no occurrence of any listed pattern.
Int avoider_count(const std::vector<Permutation>& patterns, int n);

/// avoider_count of the single pattern for n = 0..max_n (index = n).
std::vector<Int> avoidance_sequence(const Permutation& pattern, int max_n);

/// Direct-definition sequences behind the {12,21} specializations, n = 0..max_n.
std::vector<Int> hertzsprung_sequence(int max_n);      // |p(i+1) - p(i)| != 1 everywhere
std::vector<Int> irreducible_sequence(int max_n);      // p(i+1) - p(i) != 1 everywhere
std::vector<Int> fpf_irreducible_sequence(int max_n);  // irreducible and fixed-point-free

/// rows[n][j] = fixed-point-free involutions of length n whose matching has
/// exactly j short pairs (positions i with p(i) = i + 1, p(i+1) = i).
std::vector<std::vector<Int>> short_pair_table(int max_n);

}  // namespace hertzinv
