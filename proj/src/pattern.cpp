#include "hertzinv/pattern.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hertzinv {

bool Occurrence::occurs_in(const std::vector<int>& word) const {
    const int n = static_cast<int>(word.size());
    if (start < 1 || end() > n) return false;
    for (int i = 1; i <= length(); ++i)
        if (word[static_cast<std::size_t>(start + i - 1) - 1] != pattern.at(i) + offset) return false;
    return true;
}

std::vector<int> Occurrence::factor() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(length()));
    for (int i = 1; i <= length(); ++i) out.push_back(pattern.at(i) + offset);
    return out;
}

std::string Occurrence::factor_string() const {
    const std::vector<int> f = factor();
    const bool compact = std::all_of(f.begin(), f.end(), [](int v) { return v <= 9; });
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!compact && i > 0) out += ' ';
        out += std::to_string(f[i]);
    }
    return out;
}

HPattern::HPattern(Permutation p) : p_(std::move(p)) {
    if (p_.size() < 2)
        throw std::invalid_argument("pattern too short: length must be at least 2, got " +
                                    std::to_string(p_.size()));
}

namespace {

void check_word_repeat_free(const std::vector<int>& word) {
    std::set<int> seen;
    for (int v : word)
        if (!seen.insert(v).second)
            throw std::invalid_argument("word has a repeated symbol: " + std::to_string(v));
}

}  // namespace

PatternSet::PatternSet(std::vector<Permutation> patterns) {
    std::sort(patterns.begin(), patterns.end());
    if (std::adjacent_find(patterns.begin(), patterns.end()) != patterns.end())
        throw std::invalid_argument("pattern set has a duplicate element");
    for (const Permutation& p : patterns) HPattern{p};  // enforces length >= 2

    for (const Permutation& p : patterns) {
        if (!std::binary_search(patterns.begin(), patterns.end(), p.inverse()))
            throw std::invalid_argument("pattern set not self-inverse: missing " +
                                        p.inverse().to_compact_string());
    }
    for (const Permutation& p : patterns)
        for (const Permutation& q : patterns) {
            if (p == q) continue;
            if (!find_occurrences(std::span(&q, 1), p.word()).empty())
                throw std::invalid_argument("pattern set not simple: " + q.to_compact_string() +
                                            " occurs as a factor pattern of " + p.to_compact_string());
        }

    for (const Permutation& p : patterns) {
        if (p == p.inverse()) {
            involutive_.push_back(p);
        } else if (p < p.inverse()) {
            left_.push_back(p);
        }
    }
    for (const Permutation& p : left_) left_inverse_.push_back(p.inverse());
}

PatternSet PatternSet::with_inverse_closure(std::vector<Permutation> patterns) {
    std::vector<Permutation> closed(patterns);
    for (const Permutation& p : patterns) closed.push_back(p.inverse());
    std::sort(closed.begin(), closed.end());
    closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
    return PatternSet(std::move(closed));
}

std::vector<Permutation> PatternSet::all() const {
    std::vector<Permutation> out(involutive_);
    out.insert(out.end(), left_.begin(), left_.end());
    out.insert(out.end(), left_inverse_.begin(), left_inverse_.end());
    return out;
}

bool PatternSet::contains(const Permutation& p) const {
    const std::vector<Permutation> everything = all();
    return std::find(everything.begin(), everything.end(), p) != everything.end();
}

std::string PatternSet::label() const {
    std::vector<Permutation> everything = all();
    std::sort(everything.begin(), everything.end());
    std::string out;
    for (std::size_t i = 0; i < everything.size(); ++i) {
        if (i > 0) out += ',';
        out += everything[i].to_compact_string();
    }
    return out;
}

std::vector<Occurrence> find_occurrences(std::span<const Permutation> patterns,
                                         const std::vector<int>& word) {
    check_word_repeat_free(word);
    const int n = static_cast<int>(word.size());
    std::vector<Occurrence> out;
    for (int start = 1; start <= n; ++start) {
        for (const Permutation& pat : patterns) {
            const int k = pat.size();
            if (k < 1 || start + k - 1 > n) continue;
            const int c = word[static_cast<std::size_t>(start) - 1] - pat.at(1);
            Occurrence cand{pat, start, c};
            if (cand.occurs_in(word)) out.push_back(std::move(cand));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Occurrence> find_occurrences(const PatternSet& set, const Permutation& p) {
    const std::vector<Permutation> pats = set.all();
    return find_occurrences(std::span(pats.data(), pats.size()), p.word());
}

int count_occurrences(const Permutation& pattern, const std::vector<int>& word) {
    return static_cast<int>(find_occurrences(std::span(&pattern, 1), word).size());
}

int count_occurrences(const Permutation& pattern, const Permutation& p) {
    return count_occurrences(pattern, p.word());
}

Occurrence sibling_in(const Permutation& p, const Occurrence& o) {
    if (!p.is_involution())
        throw std::invalid_argument("sibling is defined in involutions only; got " + p.to_string());
    if (!o.occurs_in(p))
        throw std::invalid_argument("not an occurrence in " + p.to_string() + ": pattern " +
                                    o.pattern.to_compact_string() + " at position " +
                                    std::to_string(o.start));
    return o.sibling();
}

OccurrenceStats count_stats(const PatternSet& set, const Permutation& p) {
    if (!p.is_involution())
        throw std::invalid_argument(
            "occurrence statistics are defined for involutions; use count_occurrences for plain counts");
    const std::vector<Occurrence> occs = find_occurrences(set, p);

    OccurrenceStats stats;
    stats.sib_nsib.assign(set.involutive().size(), {0, 0});
    stats.left_counts.assign(set.left().size(), 0);
    const std::vector<Permutation> everything = set.all();
    stats.totals.assign(everything.size(), 0);

    for (const Occurrence& o : occs) {
        for (std::size_t i = 0; i < everything.size(); ++i)
            if (everything[i] == o.pattern) ++stats.totals[i];
        for (std::size_t i = 0; i < set.involutive().size(); ++i) {
            if (set.involutive()[i] != o.pattern) continue;
            if (o.is_self_sibling())
                ++stats.sib_nsib[i].first;
            else
                ++stats.sib_nsib[i].second;
        }
        for (std::size_t k = 0; k < set.left().size(); ++k)
            if (set.left()[k] == o.pattern) ++stats.left_counts[k];
    }
    return stats;
}

MarkedPermutation make_marked(Permutation word, std::vector<Occurrence> marks) {
    std::sort(marks.begin(), marks.end());
    marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
    for (const Occurrence& m : marks)
        if (!m.occurs_in(word))
            throw std::invalid_argument("mark is not an occurrence in " + word.to_string() +
                                        ": pattern " + m.pattern.to_compact_string() +
                                        " at position " + std::to_string(m.start));
    return MarkedPermutation{std::move(word), std::move(marks)};
}

MarkedPermutation inflate(const Permutation& skeleton, const std::vector<MarkedPermutation>& parts) {
    const int m = skeleton.size();
    if (static_cast<int>(parts.size()) != m)
        throw std::invalid_argument("inflation needs one block per skeleton symbol: " +
                                    std::to_string(m) + " expected, " +
                                    std::to_string(parts.size()) + " given");
    for (const MarkedPermutation& part : parts)
        if (part.word.empty()) throw std::invalid_argument("inflation blocks must be non-empty");

    // Block j is shifted in value by the total size of blocks with smaller skeleton rank,
    // and in position by the total size of blocks to its left.
    std::vector<int> value_shift(static_cast<std::size_t>(m), 0);
    for (int j = 1; j <= m; ++j)
        for (int j2 = 1; j2 <= m; ++j2)
            if (skeleton.at(j2) < skeleton.at(j))
                value_shift[static_cast<std::size_t>(j) - 1] += parts[static_cast<std::size_t>(j2) - 1].word.size();

    std::vector<int> word;
    std::vector<Occurrence> marks;
    int position_shift = 0;
    for (int j = 1; j <= m; ++j) {
        const MarkedPermutation& part = parts[static_cast<std::size_t>(j) - 1];
        const int vs = value_shift[static_cast<std::size_t>(j) - 1];
        for (int v : part.word.word()) word.push_back(v + vs);
        for (const Occurrence& mk : part.marks)
            marks.push_back(Occurrence{mk.pattern, mk.start + position_shift, mk.offset + vs});
        position_shift += part.word.size();
    }
    return make_marked(Permutation(std::move(word)), std::move(marks));
}

}  // namespace hertzinv
