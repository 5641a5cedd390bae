#pragma once

#include "hertzinv/permutation.hpp"

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hertzinv {

/// A located factor b_start .. b_{start+k-1} of a word with b_i = pattern(i) + offset,
/// i.e. an occurrence that is contiguous in positions and in values. Identity is the
/// (pattern, start, offset) triple. Generic marks may use patterns of length 1; the
/// length >= 2 requirement belongs to HPattern / PatternSet.
struct Occurrence {
    Permutation pattern;
    int start = 1;   // 1-based position of the first symbol
    int offset = 0;  // value shift c

    int length() const { return pattern.size(); }
    int end() const { return start + pattern.size() - 1; }

    /// The occurrence of pattern^-1 formed by the symbols start..end in an involution.
    Occurrence sibling() const { return Occurrence{pattern.inverse(), offset + 1, start - 1}; }
    bool is_self_sibling() const { return start == offset + 1 && pattern == pattern.inverse(); }

    bool occurs_in(const std::vector<int>& word) const;
    bool occurs_in(const Permutation& p) const { return occurs_in(p.word()); }

    /// The values the factor consists of, in position order.
    std::vector<int> factor() const;
    std::string factor_string() const;  // compact when values fit in one digit

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
    /// Ordered by (start, pattern, offset) so sorted occurrence lists read left to right.
    friend std::strong_ordering operator<=>(const Occurrence& a, const Occurrence& b) {
        if (auto c = a.start <=> b.start; c != 0) return c;
        if (auto c = a.pattern <=> b.pattern; c != 0) return c;
        return a.offset <=> b.offset;
    }
};

/// A pattern usable for factor containment: length at least two.
class HPattern {
public:
    explicit HPattern(Permutation p);
    const Permutation& perm() const { return p_; }
    friend bool operator==(const HPattern&, const HPattern&) = default;
    friend auto operator<=>(const HPattern&, const HPattern&) = default;

private:
    Permutation p_;
};

/// A finite set of patterns, closed under inverse, in which no pattern occurs as a
/// factor-pattern of another. Split into the involutions T_I and a transversal
/// T_L of the non-involution inverse pairs (lexicographically smaller element).
class PatternSet {
public:
    explicit PatternSet(std::vector<Permutation> patterns);

    /// Adds missing inverses before validating.
    static PatternSet with_inverse_closure(std::vector<Permutation> patterns);

    const std::vector<Permutation>& involutive() const { return involutive_; }
    const std::vector<Permutation>& left() const { return left_; }
    const std::vector<Permutation>& left_inverse() const { return left_inverse_; }

    int involutive_count() const { return static_cast<int>(involutive_.size()); }
    int left_count() const { return static_cast<int>(left_.size()); }

    /// Every pattern, sorted: T_I then T_L then T_L^-1.
    std::vector<Permutation> all() const;
    bool contains(const Permutation& p) const;

    std::string label() const;  // "231,312" style, for messages and output headers

    friend bool operator==(const PatternSet&, const PatternSet&) = default;

private:
    std::vector<Permutation> involutive_;
    std::vector<Permutation> left_;
    std::vector<Permutation> left_inverse_;
};

/// All occurrences of the given patterns in a repeat-free word, sorted by (start, pattern).
std::vector<Occurrence> find_occurrences(std::span<const Permutation> patterns,
                                         const std::vector<int>& word);
std::vector<Occurrence> find_occurrences(const PatternSet& set, const Permutation& p);

/// Plain occurrence count of one pattern in any repeat-free word.
int count_occurrences(const Permutation& pattern, const std::vector<int>& word);
int count_occurrences(const Permutation& pattern, const Permutation& p);

/// Validates that p is an involution and o occurs in it, then returns the sibling.
Occurrence sibling_in(const Permutation& p, const Occurrence& o);

struct OccurrenceStats {
    /// Per pattern of PatternSet::involutive(): occurrences equal to their sibling,
    /// occurrences distinct from their sibling (always even).
    std::vector<std::pair<int, int>> sib_nsib;
    /// Per pattern of PatternSet::left(): occurrence count (equals the count of the inverse).
    std::vector<int> left_counts;
    /// Per pattern of PatternSet::all(): plain occurrence count.
    std::vector<int> totals;
};

/// Occurrence statistics of an involution with respect to a pattern set.
OccurrenceStats count_stats(const PatternSet& set, const Permutation& p);

/// A word with a duplicate-free, sorted set of marked located factors.
struct MarkedPermutation {
    Permutation word;
    std::vector<Occurrence> marks;

    friend bool operator==(const MarkedPermutation&, const MarkedPermutation&) = default;
    friend auto operator<=>(const MarkedPermutation&, const MarkedPermutation&) = default;
};

/// Sorts and deduplicates the marks and checks each one occurs in the word.
MarkedPermutation make_marked(Permutation word, std::vector<Occurrence> marks);

/// Replaces the m symbols of the skeleton by the given non-empty marked blocks:
/// block j keeps its relative order, is shifted into the value range dictated by
/// skeleton(j), and its marks shift along with it.
MarkedPermutation inflate(const Permutation& skeleton, const std::vector<MarkedPermutation>& parts);

}  // namespace hertzinv
