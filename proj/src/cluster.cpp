#include "hertzinv/cluster.hpp"

#include <algorithm>
#include <stdexcept>

namespace hertzinv {

bool is_cluster(const PatternSet& set, const MarkedPermutation& mp, std::string* reason) {
    auto fail = [&](std::string why) {
        if (reason) *reason = std::move(why);
        return false;
    };
    const int n = mp.word.size();
    if (n < 2) return fail("cluster must have length at least 2");
    if (mp.marks.empty()) return fail("cluster must have at least one mark");
    for (const Occurrence& m : mp.marks) {
        if (!set.contains(m.pattern))
            return fail("mark uses a pattern outside the set: " + m.pattern.to_compact_string());
        if (!m.occurs_in(mp.word))
            return fail("mark is not an occurrence: " + m.pattern.to_compact_string() +
                        " at position " + std::to_string(m.start));
    }
    for (int cut = 1; cut < n; ++cut) {
        const bool spanned = std::any_of(mp.marks.begin(), mp.marks.end(), [cut](const Occurrence& m) {
            return m.start <= cut && cut < m.end();
        });
        if (!spanned)
            return fail("cut position " + std::to_string(cut) + " is not spanned by any mark");
    }
    return true;
}

bool is_involutory_cluster(const PatternSet& set, const MarkedPermutation& mp, std::string* reason) {
    if (!is_cluster(set, mp, reason)) return false;
    if (!mp.word.is_involution()) {
        if (reason) *reason = "word is not an involution";
        return false;
    }
    std::vector<Occurrence> sorted(mp.marks);
    std::sort(sorted.begin(), sorted.end());
    for (const Occurrence& m : sorted) {
        if (!std::binary_search(sorted.begin(), sorted.end(), m.sibling())) {
            if (reason)
                *reason = "mark set is not sibling closed: missing the sibling of " +
                          m.pattern.to_compact_string() + " at position " + std::to_string(m.start);
            return false;
        }
    }
    return true;
}

namespace {

/// Depth-first search over mark sequences in increasing (start, pattern, offset)
/// order. Adjacent marks must overlap in at least one position, so the covered
/// prefix [1..max_end] never has an unspanned cut; a state is emitted whenever
/// the assigned values are exactly 1..max_end.
class ClusterSearch {
public:
    ClusterSearch(const PatternSet& set, int max_len, std::vector<Cluster>& out)
        : pats_(set.all()),
          max_len_(max_len),
          out_(out),
          values_(static_cast<std::size_t>(std::max(0, max_len)) + 1, 0),
          used_(static_cast<std::size_t>(std::max(0, max_len)) + 1, false) {}

    void run() {
        if (max_len_ < 2) return;
        for (const Permutation& pat : pats_) {
            for (int c = 0; c + pat.size() <= max_len_; ++c) {
                const Occurrence first{pat, 1, c};
                if (try_mark(first)) {
                    dfs();
                    undo_mark();
                }
            }
        }
    }

private:
    std::vector<Permutation> pats_;
    int max_len_ = 0;
    std::vector<Cluster>& out_;

    std::vector<int> values_;  // values_[pos], 1-based, 0 = unassigned
    std::vector<bool> used_;
    int max_end_ = 0;
    int max_value_ = 0;
    std::vector<Occurrence> marks_;
    struct Undo {
        int first_new_pos = 0;
        int prev_max_end = 0;
        int prev_max_value = 0;
    };
    std::vector<Undo> undo_;

    bool try_mark(const Occurrence& occ) {
        const int j = occ.start;
        const int hi = occ.end();
        if (hi > max_len_) return false;
        for (int i = 1; i <= occ.length(); ++i) {
            const int pos = j + i - 1;
            const int val = occ.pattern.at(i) + occ.offset;
            if (val < 1 || val > max_len_) return false;
            if (pos <= max_end_) {
                if (values_[static_cast<std::size_t>(pos)] != val) return false;
            } else if (used_[static_cast<std::size_t>(val)]) {
                return false;
            }
        }
        Undo u{std::max(max_end_ + 1, j), max_end_, max_value_};
        for (int pos = u.first_new_pos; pos <= hi; ++pos) {
            const int val = occ.pattern.at(pos - j + 1) + occ.offset;
            values_[static_cast<std::size_t>(pos)] = val;
            used_[static_cast<std::size_t>(val)] = true;
            max_value_ = std::max(max_value_, val);
        }
        max_end_ = std::max(max_end_, hi);
        marks_.push_back(occ);
        undo_.push_back(u);
        return true;
    }

    void undo_mark() {
        const Undo u = undo_.back();
        undo_.pop_back();
        for (int pos = u.first_new_pos; pos <= max_end_; ++pos) {
            used_[static_cast<std::size_t>(values_[static_cast<std::size_t>(pos)])] = false;
            values_[static_cast<std::size_t>(pos)] = 0;
        }
        max_end_ = u.prev_max_end;
        max_value_ = u.prev_max_value;
        marks_.pop_back();
    }

    void emit_if_complete() {
        if (max_value_ != max_end_) return;  // a value above max_end is still waiting for cover
        std::vector<int> word(values_.begin() + 1, values_.begin() + 1 + max_end_);
        out_.push_back(Cluster{MarkedPermutation{Permutation(std::move(word)), marks_}});
    }

    void dfs() {
        emit_if_complete();
        const Occurrence last = marks_.back();  // copy: push_back below may reallocate
        for (int j = last.start; j <= max_end_; ++j) {
            for (const Permutation& pat : pats_) {
                const int c = values_[static_cast<std::size_t>(j)] - pat.at(1);
                const Occurrence next{pat, j, c};
                if (!(last < next)) continue;
                if (try_mark(next)) {
                    dfs();
                    undo_mark();
                }
            }
        }
    }
};

bool cluster_order(const Cluster& a, const Cluster& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.marked < b.marked;
}

}  // namespace

std::vector<Cluster> enumerate_clusters(const PatternSet& set, int max_len) {
    std::vector<Cluster> out;
    ClusterSearch(set, max_len, out).run();
    std::sort(out.begin(), out.end(), cluster_order);
    return out;
}

std::vector<Cluster> enumerate_involutory_clusters(const PatternSet& set, int max_len) {
    std::vector<Cluster> all = enumerate_clusters(set, max_len);
    std::vector<Cluster> out;
    for (Cluster& cl : all)
        if (is_involutory_cluster(set, cl.marked)) out.push_back(std::move(cl));
    return out;
}

std::vector<std::string> cluster_vars(const PatternSet& set) {
    std::vector<std::string> vars{"x"};
    for (int i = 1; i <= set.involutive_count(); ++i) vars.push_back("a" + std::to_string(i));
    for (int j = 1; j <= set.left_count(); ++j) vars.push_back("b" + std::to_string(j));
    for (int j = 1; j <= set.left_count(); ++j) vars.push_back("c" + std::to_string(j));
    return vars;
}

std::vector<std::string> involution_vars(const PatternSet& set) {
    std::vector<std::string> vars{"x", "t"};
    for (int i = 1; i <= set.involutive_count(); ++i) vars.push_back("u" + std::to_string(i));
    for (int i = 1; i <= set.involutive_count(); ++i) vars.push_back("v" + std::to_string(i));
    for (int j = 1; j <= set.left_count(); ++j) vars.push_back("w" + std::to_string(j));
    return vars;
}

namespace {

int index_of(const std::vector<Permutation>& pats, const Permutation& p) {
    for (std::size_t i = 0; i < pats.size(); ++i)
        if (pats[i] == p) return static_cast<int>(i);
    return -1;
}

}  // namespace

MultiSeries cluster_gf(const PatternSet& set, int N) {
    MultiSeries gf = MultiSeries::zero(cluster_vars(set), N);
    for (const Cluster& cl : enumerate_clusters(set, N)) {
        std::map<std::string, int> exps{{"x", cl.length()}};
        for (const Occurrence& m : cl.marked.marks) {
            int i = index_of(set.involutive(), m.pattern);
            if (i >= 0) {
                ++exps["a" + std::to_string(i + 1)];
                continue;
            }
            i = index_of(set.left(), m.pattern);
            if (i >= 0) {
                ++exps["b" + std::to_string(i + 1)];
                continue;
            }
            i = index_of(set.left_inverse(), m.pattern);
            ++exps["c" + std::to_string(i + 1)];
        }
        gf += MultiSeries::monomial(gf.vars(), N, exps, 1);
    }
    validate_length_dominated(gf);
    return gf;
}

MultiSeries involutory_cluster_gf(const PatternSet& set, int N) {
    MultiSeries gf = MultiSeries::zero(involution_vars(set), N);
    for (const Cluster& cl : enumerate_involutory_clusters(set, N)) {
        std::map<std::string, int> exps{{"x", cl.length()},
                                        {"t", cl.marked.word.involution_stats().fixed_points}};
        std::vector<int> nsib(static_cast<std::size_t>(set.involutive_count()), 0);
        for (const Occurrence& m : cl.marked.marks) {
            int i = index_of(set.involutive(), m.pattern);
            if (i >= 0) {
                if (m.is_self_sibling())
                    ++exps["u" + std::to_string(i + 1)];
                else
                    ++nsib[static_cast<std::size_t>(i)];
                continue;
            }
            i = index_of(set.left(), m.pattern);
            if (i >= 0) ++exps["w" + std::to_string(i + 1)];
            // marks of a left-inverse pattern are the siblings of the left marks
        }
        for (std::size_t i = 0; i < nsib.size(); ++i) {
            if (nsib[i] % 2 != 0)
                throw std::logic_error("sibling-closed mark set with an odd non-self-sibling count");
            exps["v" + std::to_string(i + 1)] = nsib[i] / 2;
        }
        gf += MultiSeries::monomial(gf.vars(), N, exps, 1);
    }
    validate_length_dominated(gf);
    return gf;
}

namespace {

/// Monomial shorthand over a fixed untruncated variable space.
struct Builder {
    std::vector<std::string> vars;
    MultiSeries mono(const std::map<std::string, int>& exps, Int coefficient = 1) const {
        return MultiSeries::monomial(vars, MultiSeries::kUnbounded, exps, coefficient);
    }
    MultiSeries one() const { return MultiSeries::constant(vars, MultiSeries::kUnbounded, 1); }
};

/// Maps an involutory closed form to the plain cluster variables: t drops out and
/// each per-pattern pair (u_i, v_i) collapses onto a_i, with v_i carrying squared
/// weight because one v exponent stands for two marks.
RationalExpr collapse_to_cluster_vars(const RationalExpr& involutory, const PatternSet& set,
                                      const std::vector<std::string>& cvars) {
    std::map<std::string, MultiSeries> bind;
    bind.emplace("t", MultiSeries::constant(cvars, MultiSeries::kUnbounded, 1));
    for (int i = 1; i <= set.involutive_count(); ++i) {
        const std::string a = "a" + std::to_string(i);
        bind.emplace("u" + std::to_string(i),
                     MultiSeries::variable(cvars, MultiSeries::kUnbounded, a));
        bind.emplace("v" + std::to_string(i),
                     MultiSeries::variable(cvars, MultiSeries::kUnbounded, a, 2));
    }
    return involutory.substituted(bind, cvars);
}

}  // namespace

bool has_closed_form(const PatternSet& set) {
    const std::string l = set.label();
    return l == "12,21" || l == "123,321" || l == "132,213" || l == "231,312";
}

ClosedForms closed_form(const PatternSet& set) {
    const std::string family = set.label();
    const Builder iv{involution_vars(set)};
    const Builder cv{cluster_vars(set)};

    if (family == "12,21") {
        // Clusters are fully marked runs: rising runs give self-sibling marks of 12,
        // falling runs pair their 21 marks around an optional central one.
        RationalExpr rising(iv.mono({{"x", 2}, {"t", 2}, {"u1", 1}}),
                            iv.one() - iv.mono({{"x", 1}, {"t", 1}, {"u1", 1}}));
        RationalExpr falling(iv.mono({{"x", 2}, {"u2", 1}}) + iv.mono({{"x", 3}, {"t", 1}, {"v2", 1}}),
                             iv.one() - iv.mono({{"x", 2}, {"v2", 1}}));
        RationalExpr involutory = rising + falling;
        return ClosedForms{collapse_to_cluster_vars(involutory, set, cv.vars), involutory};
    }

    if (family == "123,321") {
        RationalExpr rising(iv.mono({{"x", 3}, {"t", 3}, {"u1", 1}}),
                            iv.one() - iv.mono({{"x", 1}, {"t", 1}, {"u1", 1}}) -
                                iv.mono({{"x", 2}, {"t", 2}, {"u1", 1}}));
        RationalExpr falling(iv.mono({{"x", 3}, {"t", 1}, {"u2", 1}}) + iv.mono({{"x", 4}, {"v2", 1}}) +
                                 iv.mono({{"x", 5}, {"t", 1}, {"v2", 1}}),
                             iv.one() - iv.mono({{"x", 2}, {"v2", 1}}) - iv.mono({{"x", 4}, {"v2", 1}}));
        RationalExpr involutory = rising + falling;
        // The plain series is NOT the involutory one with t = 1, u_i = a_i, v_i = a_i^2:
        // falling words of length >= 6 admit coverings that are not sibling closed.
        // Both rising and falling words carry the same covering count, so each
        // contributes the rising-type factor in its own mark variable.
        auto plain_part = [&](const std::string& a) {
            return RationalExpr(cv.mono({{"x", 3}, {a, 1}}),
                                cv.one() - cv.mono({{"x", 1}, {a, 1}}) - cv.mono({{"x", 2}, {a, 1}}));
        };
        return ClosedForms{plain_part("a1") + plain_part("a2"), involutory};
    }

    if (family == "132,213") {
        // Every mark coincides with its sibling, so no v variables appear.
        RationalExpr involutory(
            iv.mono({{"x", 3}, {"t", 1}, {"u1", 1}}) + iv.mono({{"x", 3}, {"t", 1}, {"u2", 1}}) +
                iv.mono({{"x", 4}, {"t", 2}, {"u1", 1}, {"u2", 1}}) +
                iv.mono({{"x", 5}, {"t", 1}, {"u1", 1}, {"u2", 1}}),
            iv.one() - iv.mono({{"x", 3}, {"t", 1}, {"u1", 1}, {"u2", 1}}));
        return ClosedForms{collapse_to_cluster_vars(involutory, set, cv.vars), involutory};
    }

    if (family == "231,312") {
        RationalExpr involutory(
            iv.mono({{"x", 4}, {"t", 2}, {"w1", 1}}) + iv.mono({{"x", 5}, {"t", 1}, {"w1", 1}}) +
                iv.mono({{"x", 7}, {"t", 1}, {"w1", 2}}) + iv.mono({{"x", 8}, {"t", 2}, {"w1", 2}}),
            iv.one() - iv.mono({{"x", 6}, {"w1", 2}}));
        RationalExpr plain(cv.mono({{"x", 3}, {"b1", 1}}) + cv.mono({{"x", 3}, {"c1", 1}}) +
                               cv.mono({{"x", 4}, {"b1", 1}, {"c1", 1}}) +
                               cv.mono({{"x", 5}, {"b1", 1}, {"c1", 1}}),
                           cv.one() - cv.mono({{"x", 3}, {"b1", 1}, {"c1", 1}}));
        return ClosedForms{plain, involutory};
    }

    throw std::invalid_argument("no stocked closed form for pattern set {" + family + "}");
}

}  // namespace hertzinv
