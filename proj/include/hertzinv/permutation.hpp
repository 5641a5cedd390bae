#pragma once

#include <string>
#include <vector>

namespace hertzinv {

/// A permutation of {1..n} in one-line notation. Positions and values are
/// 1-based throughout; the empty permutation (n = 0) is valid.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);

    /// Accepts compact digit strings ("231") as well as space- or
    /// comma-separated values ("10 8 9 7 5 6 4 2 3 1").
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(word_.size()); }
    bool empty() const { return word_.empty(); }

    /// Value at position pos, 1-based.
    int at(int pos) const { return word_.at(static_cast<std::size_t>(pos) - 1); }

    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const;

    /// this after other: result(i) = this(other(i)).
    Permutation compose(const Permutation& other) const;

    bool is_involution() const;

    /// Reverse complement: i maps to n+1 - value at position n+1-i.
    Permutation reverse_complement() const;

    struct InvolutionStats {
        int fixed_points = 0;
        int two_cycles = 0;  // transpositions only, so fixed_points + 2*two_cycles = n
    };

    /// Throws std::invalid_argument when the permutation is not an involution.
    InvolutionStats involution_stats() const;

    std::string to_string() const;          // space-separated values
    std::string to_compact_string() const;  // "231"; falls back to spaces when any value > 9

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> word_;
};

/// All permutations of {1..n} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace hertzinv
