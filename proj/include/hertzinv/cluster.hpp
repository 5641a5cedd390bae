#pragma once

#include "hertzinv/pattern.hpp"
#include "hertzinv/series.hpp"

#include <string>
#include <vector>

namespace hertzinv {

/// A marked permutation in which every boundary between adjacent positions is
/// spanned by a mark, so the word cannot be cut into two marked halves.
struct Cluster {
    MarkedPermutation marked;
    int length() const { return marked.word.size(); }

    friend bool operator==(const Cluster&, const Cluster&) = default;
    friend auto operator<=>(const Cluster&, const Cluster&) = default;
};

/// True when mp has length >= 2, every mark is a genuine occurrence of a pattern
/// in the set, and every cut position is spanned by some mark. On failure an
/// explanation is written to reason when given.
bool is_cluster(const PatternSet& set, const MarkedPermutation& mp, std::string* reason = nullptr);

/// A cluster whose word is an involution and whose mark set contains the
/// sibling of each of its marks.
bool is_involutory_cluster(const PatternSet& set, const MarkedPermutation& mp,
                           std::string* reason = nullptr);

/// Every cluster of length at most max_len, sorted by (length, word, marks).
/// Distinct markings of the same word are distinct clusters.
std::vector<Cluster> enumerate_clusters(const PatternSet& set, int max_len);
std::vector<Cluster> enumerate_involutory_clusters(const PatternSet& set, int max_len);

/// Variables of the plain cluster series: length x, then a_i (marked occurrences
/// of the i-th involutive pattern), b_j and c_j (marked occurrences of the j-th
/// transversal pattern and of its inverse).
std::vector<std::string> cluster_vars(const PatternSet& set);

/// Variables of the involutory cluster / involution series: length x, fixed
/// points t, then u_i (self-sibling marks), v_i (sibling mark pairs; the printed
/// nsib count is twice the exponent) and w_j (marks of the j-th transversal
/// pattern; marks of its inverse are their siblings and are not counted twice).
std::vector<std::string> involution_vars(const PatternSet& set);

/// Cluster series from direct enumeration, truncated at x-order N.
MultiSeries cluster_gf(const PatternSet& set, int N);
MultiSeries involutory_cluster_gf(const PatternSet& set, int N);

struct ClosedForms {
    RationalExpr clusters;    // over cluster_vars
    RationalExpr involutory;  // over involution_vars
};

/// True for the four stocked families {12,21}, {123,321}, {132,213}, {231,312}.
bool has_closed_form(const PatternSet& set);

/// Exact rational closed forms for the four stocked families; throws otherwise.
ClosedForms closed_form(const PatternSet& set);

}  // namespace hertzinv
