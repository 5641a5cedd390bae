#pragma once

#include "hertzinv/cluster.hpp"
#include "hertzinv/oracle.hpp"
#include "hertzinv/pattern.hpp"
#include "hertzinv/series.hpp"

#include <map>
#include <string>
#include <vector>

namespace hertzinv {

/// Depth that keeps the continued-fraction evaluation stable to order N:
/// every level multiplies by B, whose order is at least 2, so levels beyond
/// floor(N/2) + 1 cannot reach coefficients of order <= N.
int default_cf_depth(int N);

/// The involution continued fraction 1/(1 - A - B/(1 - A - 2B/(...))) with
/// level-k weight k*B, evaluated bottom-up over `depth` levels with the bottom
/// level seeded by 1/(1 - A), truncated to order N of the first variable.
/// Requires zero constant terms, order(A) >= 1, order(B) >= 2, and depth at
/// least N/order(B) + 1 (the static form of the depth-stability bound).
MultiSeries eval_continued_fraction(const MultiSeries& A, const MultiSeries& B, int N, int depth);
MultiSeries eval_continued_fraction(const MultiSeries& A, const MultiSeries& B, int N);

/// Whether the cluster series feeding a pipeline come from direct enumeration
/// or from the stocked rational closed forms.
enum class SeriesSource { enumerated, closed_form };

/// Joint distribution of involutions by length (x), fixed points (t) and
/// pattern statistics (u_i self-sibling, v_i sibling-pair, w_k transversal
/// occurrence counts), over involution_vars(set), to order N.
MultiSeries joint_distribution(const PatternSet& set, int N, SeriesSource source);
MultiSeries joint_distribution(const PatternSet& set, int N, SeriesSource source, int depth);

/// Marked involutions by the same statistics of their marks: the composition
/// without the inclusion-exclusion shifts.
MultiSeries marked_involution_gf(const PatternSet& set, int N, SeriesSource source);
MultiSeries marked_involution_gf(const PatternSet& set, int N, SeriesSource source, int depth);

/// A distribution series reorganized into per-length statistics rows.
class DistributionTable {
public:
    DistributionTable(PatternSet set, MultiSeries series);

    const PatternSet& patterns() const { return set_; }
    const MultiSeries& series() const { return series_; }
    int max_length() const;

    /// Statistics rows of the given length, decoded from the exponents.
    std::map<StatisticsVector, Int> row(int n) const;
    Int row_sum(int n) const;

    nlohmann::json to_json() const;
    std::string to_csv() const;
    std::string to_plain() const;

private:
    PatternSet set_;
    MultiSeries series_;
};

/// Compares a distribution series against the exhaustive census for every
/// n <= max_n. Returns one description per mismatching statistics vector;
/// empty means exact agreement.
std::vector<std::string> compare_with_oracle(const PatternSet& set, const MultiSeries& series,
                                             int max_n);

/// The four pattern families with stocked closed forms.
std::vector<PatternSet> stocked_families();

enum class Preset { hertzsprung, irreducible, fpf_irreducible, matchings_short_pairs };

Preset parse_preset(const std::string& name);
std::string preset_name(Preset preset);

/// Specializations of the {12,21} distribution: hertzsprung sets t=1 and all
/// pattern variables to 0; irreducible keeps only 21-statistics at 1 (t=1);
/// fpf_irreducible is the same at t=0. Entries indexed by n = 0..max_n.
std::vector<Int> preset_sequence(Preset preset, int max_n);

/// The matchings_short_pairs specialization (t=0, all pattern variables at 1
/// except u2, which stays symbolic): rows[n][j] = coefficient of x^n u2^j.
std::vector<std::vector<Int>> preset_short_pair_rows(int max_n);

/// Involutions of length n = 0..max_n avoiding the pattern, read off the
/// stocked closed-form distribution instead of the enumeration oracle.
/// The pattern must belong to one of the stocked families.
std::vector<Int> avoidance_sequence_gf(const Permutation& pattern, int max_n);

struct WilfClass {
    std::vector<Permutation> patterns;
    std::vector<Int> sequence;  // avoiders by length, n = 0..max_n
};

/// Groups the patterns of length k (2 or 3) by their involution avoidance
/// sequences up to max_n >= 6, oracle-computed and cross-checked against the
/// closed-form route for every pattern a stocked family covers. Classes are
/// ordered by their lexicographically smallest member.
std::vector<WilfClass> classify_wilf(int k, int max_n);

}  // namespace hertzinv
