#include "hertzinv/distribution.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hertzinv {

int default_cf_depth(int N) {
    if (N < 0) throw std::invalid_argument("negative truncation order");
    return N / 2 + 2;
}

MultiSeries eval_continued_fraction(const MultiSeries& A, const MultiSeries& B, int N, int depth) {
    if (N < 0) throw std::invalid_argument("negative truncation order");
    if (A.vars() != B.vars())
        throw std::invalid_argument("continued fraction arguments over different variables");
    if (A.constant_term() != 0 || B.constant_term() != 0)
        throw std::invalid_argument("continued fraction arguments must have zero constant term");
    const MultiSeries a = A.truncated(N);
    const MultiSeries b = B.truncated(N);
    if (!a.is_zero() && a.order() < 1)
        throw std::invalid_argument("continued fraction argument A must have order at least 1");
    if (!b.is_zero() && b.order() < 2)
        throw std::invalid_argument("continued fraction argument B must have order at least 2");
    const int needed = b.is_zero() ? 1 : N / b.order() + 1;
    if (depth < needed)
        throw std::invalid_argument("insufficient continued fraction depth " +
                                    std::to_string(depth) + " for order " + std::to_string(N) +
                                    ": need at least " + std::to_string(needed));

    const MultiSeries one = MultiSeries::constant(a.vars(), N, 1);
    MultiSeries f = (one - a).reciprocal();  // bottom level; the dropped tail has order > N
    for (int level = depth - 1; level >= 1; --level)
        f = (one - a - Int(level) * (b * f)).reciprocal();
    return f;
}

MultiSeries eval_continued_fraction(const MultiSeries& A, const MultiSeries& B, int N) {
    return eval_continued_fraction(A, B, N, default_cf_depth(N));
}

namespace {

MultiSeries var_over(const std::vector<std::string>& vars, const std::string& name, int exp = 1) {
    return MultiSeries::variable(vars, MultiSeries::kUnbounded, name, exp);
}

MultiSeries const_over(const std::vector<std::string>& vars, const Int& value) {
    return MultiSeries::constant(vars, MultiSeries::kUnbounded, value);
}

struct PipelineParts {
    MultiSeries A;
    MultiSeries B;
};

/// A = xt + CI and B = x^2 + C(x -> x^2) over involution_vars(set), mapping the
/// plain cluster variables a_i -> v_i and b_j, c_j -> w_j. With shift, every
/// mark variable moves to (variable - 1), the inclusion-exclusion weights.
PipelineParts pipeline_parts(const PatternSet& set, int N, SeriesSource source, bool shift) {
    const std::vector<std::string> ivars = involution_vars(set);

    MultiSeries ci = MultiSeries::zero(ivars, N);
    MultiSeries c = MultiSeries::zero(cluster_vars(set), N);
    if (source == SeriesSource::enumerated) {
        ci = involutory_cluster_gf(set, N);
        c = cluster_gf(set, N);
    } else {
        const ClosedForms forms = closed_form(set);
        ci = forms.involutory.expand(N);
        c = forms.clusters.expand(N);
    }

    auto mark_image = [&](const std::string& name) {
        return shift ? var_over(ivars, name) - const_over(ivars, 1) : var_over(ivars, name);
    };

    std::map<std::string, MultiSeries> ci_bind;
    std::map<std::string, MultiSeries> c_bind;
    c_bind.emplace("x", var_over(ivars, "x", 2));
    for (int i = 1; i <= set.involutive_count(); ++i) {
        ci_bind.emplace("u" + std::to_string(i), mark_image("u" + std::to_string(i)));
        ci_bind.emplace("v" + std::to_string(i), mark_image("v" + std::to_string(i)));
        c_bind.emplace("a" + std::to_string(i), mark_image("v" + std::to_string(i)));
    }
    for (int k = 1; k <= set.left_count(); ++k) {
        ci_bind.emplace("w" + std::to_string(k), mark_image("w" + std::to_string(k)));
        c_bind.emplace("b" + std::to_string(k), mark_image("w" + std::to_string(k)));
        c_bind.emplace("c" + std::to_string(k), mark_image("w" + std::to_string(k)));
    }

    MultiSeries A = MultiSeries::monomial(ivars, N, {{"x", 1}, {"t", 1}}, 1) +
                    ci.substituted(ci_bind, ivars);
    MultiSeries B = MultiSeries::monomial(ivars, N, {{"x", 2}}, 1) + c.substituted(c_bind, ivars);
    return PipelineParts{std::move(A), std::move(B)};
}

}  // namespace

MultiSeries joint_distribution(const PatternSet& set, int N, SeriesSource source, int depth) {
    const PipelineParts parts = pipeline_parts(set, N, source, true);
    MultiSeries F = eval_continued_fraction(parts.A, parts.B, N, depth);
    validate_length_dominated(F);
    return F;
}

MultiSeries joint_distribution(const PatternSet& set, int N, SeriesSource source) {
    return joint_distribution(set, N, source, default_cf_depth(N));
}

MultiSeries marked_involution_gf(const PatternSet& set, int N, SeriesSource source, int depth) {
    const PipelineParts parts = pipeline_parts(set, N, source, false);
    MultiSeries mi = eval_continued_fraction(parts.A, parts.B, N, depth);
    validate_length_dominated(mi);
    return mi;
}

MultiSeries marked_involution_gf(const PatternSet& set, int N, SeriesSource source) {
    return marked_involution_gf(set, N, source, default_cf_depth(N));
}

namespace {

StatisticsVector decode_statistics(const PatternSet& set, const std::vector<int>& exps) {
    const int r = set.involutive_count();
    const int s = set.left_count();
    StatisticsVector sv;
    sv.fixed_points = exps[1];
    for (int i = 0; i < r; ++i)
        sv.sib_nsib.emplace_back(exps[static_cast<std::size_t>(2 + i)],
                                 2 * exps[static_cast<std::size_t>(2 + r + i)]);
    for (int k = 0; k < s; ++k)
        sv.left_counts.push_back(exps[static_cast<std::size_t>(2 + 2 * r + k)]);
    return sv;
}

std::string describe_statistics(const StatisticsVector& sv) {
    std::string out = "fp=" + std::to_string(sv.fixed_points);
    for (const auto& [sib, nsib] : sv.sib_nsib)
        out += " sib/nsib=(" + std::to_string(sib) + "," + std::to_string(nsib) + ")";
    for (const int count : sv.left_counts) out += " occ=" + std::to_string(count);
    return out;
}

}  // namespace

DistributionTable::DistributionTable(PatternSet set, MultiSeries series)
    : set_(std::move(set)), series_(std::move(series)) {
    if (series_.vars() != involution_vars(set_))
        throw std::invalid_argument("distribution series variables do not match the pattern set");
    for (const auto& [exps, coef] : series_.terms())
        if (coef < 0)
            throw std::invalid_argument("negative count in distribution series at " +
                                        describe_statistics(decode_statistics(set_, exps)));
}

int DistributionTable::max_length() const {
    if (series_.trunc() != MultiSeries::kUnbounded) return series_.trunc();
    int best = 0;
    for (const auto& [exps, coef] : series_.terms()) best = std::max(best, exps[0]);
    return best;
}

std::map<StatisticsVector, Int> DistributionTable::row(int n) const {
    std::map<StatisticsVector, Int> out;
    for (const auto& [exps, coef] : series_.terms())
        if (exps[0] == n) out.emplace(decode_statistics(set_, exps), coef);
    return out;
}

Int DistributionTable::row_sum(int n) const {
    Int total = 0;
    for (const auto& [sv, count] : row(n)) total += count;
    return total;
}

nlohmann::json DistributionTable::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 0; n <= max_length(); ++n) {
        for (const auto& [sv, count] : row(n)) {
            nlohmann::json entry{{"n", n}, {"fixed_points", sv.fixed_points}};
            nlohmann::json sib = nlohmann::json::array();
            nlohmann::json nsib = nlohmann::json::array();
            for (const auto& [s, ns] : sv.sib_nsib) {
                sib.push_back(s);
                nsib.push_back(ns);
            }
            entry["sib"] = std::move(sib);
            entry["nsib"] = std::move(nsib);
            entry["left"] = sv.left_counts;
            entry["count"] = count.str();
            rows.push_back(std::move(entry));
        }
    }
    return nlohmann::json{{"patterns", set_.label()},
                          {"max_length", max_length()},
                          {"rows", std::move(rows)},
                          {"series", series_.to_json()}};
}

std::string DistributionTable::to_csv() const {
    std::string out = "n,fixed_points";
    for (const Permutation& p : set_.involutive())
        out += ",sib_" + p.to_compact_string() + ",nsib_" + p.to_compact_string();
    for (const Permutation& p : set_.left()) out += ",occ_" + p.to_compact_string();
    out += ",count\n";
    for (int n = 0; n <= max_length(); ++n) {
        for (const auto& [sv, count] : row(n)) {
            out += std::to_string(n) + "," + std::to_string(sv.fixed_points);
            for (const auto& [sib, nsib] : sv.sib_nsib)
                out += "," + std::to_string(sib) + "," + std::to_string(nsib);
            for (const int c : sv.left_counts) out += "," + std::to_string(c);
            out += "," + count.str() + "\n";
        }
    }
    return out;
}

std::string DistributionTable::to_plain() const {
    std::string out;
    for (int n = 0; n <= max_length(); ++n) {
        const auto r = row(n);
        if (r.empty()) continue;
        out += "n=" + std::to_string(n) + ":";
        for (const auto& [sv, count] : r)
            out += "  [" + describe_statistics(sv) + "] " + count.str();
        out += "\n";
    }
    return out;
}

std::vector<std::string> compare_with_oracle(const PatternSet& set, const MultiSeries& series,
                                             int max_n) {
    const DistributionTable table(set, series);
    std::vector<std::string> issues;
    for (int n = 0; n <= max_n; ++n) {
        const std::map<StatisticsVector, Int> pipeline = table.row(n);
        const Census oracle = statistics_census(set, n);
        for (const auto& [sv, count] : oracle) {
            const auto it = pipeline.find(sv);
            const Int got = it == pipeline.end() ? Int(0) : it->second;
            if (got != count)
                issues.push_back("n=" + std::to_string(n) + " " + describe_statistics(sv) +
                                 ": pipeline " + got.str() + ", oracle " + count.str());
        }
        for (const auto& [sv, count] : pipeline)
            if (!oracle.contains(sv))
                issues.push_back("n=" + std::to_string(n) + " " + describe_statistics(sv) +
                                 ": pipeline " + count.str() + ", oracle 0");
    }
    return issues;
}

std::vector<PatternSet> stocked_families() {
    auto family = [](const char* a, const char* b) {
        return PatternSet({Permutation::parse(a), Permutation::parse(b)});
    };
    std::vector<PatternSet> out;
    out.push_back(family("12", "21"));
    out.push_back(family("123", "321"));
    out.push_back(family("132", "213"));
    out.push_back(family("231", "312"));
    return out;
}

Preset parse_preset(const std::string& name) {
    if (name == "hertzsprung") return Preset::hertzsprung;
    if (name == "irreducible") return Preset::irreducible;
    if (name == "fpf_irreducible") return Preset::fpf_irreducible;
    if (name == "matchings_short_pairs") return Preset::matchings_short_pairs;
    throw std::invalid_argument("unknown preset: " + name +
                                " (expected hertzsprung, irreducible, fpf_irreducible or "
                                "matchings_short_pairs)");
}

std::string preset_name(Preset preset) {
    switch (preset) {
        case Preset::hertzsprung: return "hertzsprung";
        case Preset::irreducible: return "irreducible";
        case Preset::fpf_irreducible: return "fpf_irreducible";
        case Preset::matchings_short_pairs: return "matchings_short_pairs";
    }
    throw std::invalid_argument("unknown preset");
}

namespace {

PatternSet adjacent_pair_set() {
    return PatternSet({Permutation::parse("12"), Permutation::parse("21")});
}

}  // namespace

std::vector<Int> preset_sequence(Preset preset, int max_n) {
    if (preset == Preset::matchings_short_pairs)
        throw std::invalid_argument(
            "matchings_short_pairs is a bivariate table; use preset_short_pair_rows");
    const MultiSeries F =
        joint_distribution(adjacent_pair_set(), max_n, SeriesSource::closed_form);
    const std::vector<std::string> target{"x"};
    const Int zero = 0, one = 1;
    const Int& t = preset == Preset::fpf_irreducible ? zero : one;
    const Int& rising = zero;  // u1 and v1: the hertzsprung and irreducible filters bar 12
    const Int& falling = preset == Preset::hertzsprung ? zero : one;
    const std::map<std::string, MultiSeries> bind{
        {"t", const_over(target, t).truncated(max_n)},
        {"u1", const_over(target, rising).truncated(max_n)},
        {"v1", const_over(target, rising).truncated(max_n)},
        {"u2", const_over(target, falling).truncated(max_n)},
        {"v2", const_over(target, falling).truncated(max_n)}};
    const MultiSeries s = F.substituted(bind, target);
    std::vector<Int> seq;
    seq.reserve(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) seq.push_back(s.coeff({{"x", n}}));
    return seq;
}

std::vector<std::vector<Int>> preset_short_pair_rows(int max_n) {
    const MultiSeries F =
        joint_distribution(adjacent_pair_set(), max_n, SeriesSource::closed_form);
    const std::vector<std::string> target{"x", "u2"};
    const std::map<std::string, MultiSeries> bind{{"t", const_over(target, 0).truncated(max_n)},
                                                  {"u1", const_over(target, 1).truncated(max_n)},
                                                  {"v1", const_over(target, 1).truncated(max_n)},
                                                  {"v2", const_over(target, 1).truncated(max_n)}};
    const MultiSeries s = F.substituted(bind, target);
    std::vector<std::vector<Int>> rows(static_cast<std::size_t>(max_n) + 1);
    for (const auto& [exps, coef] : s.terms()) {
        auto& row = rows[static_cast<std::size_t>(exps[0])];
        if (static_cast<std::size_t>(exps[1]) >= row.size())
            row.resize(static_cast<std::size_t>(exps[1]) + 1, 0);
        row[static_cast<std::size_t>(exps[1])] = coef;
    }
    return rows;
}

namespace {

std::vector<Int> avoidance_from_distribution(const PatternSet& family, const MultiSeries& F,
                                             const Permutation& pattern, int max_n) {
    const std::vector<std::string> target{"x"};
    std::map<std::string, MultiSeries> bind{{"t", const_over(target, 1).truncated(max_n)}};
    for (int i = 0; i < family.involutive_count(); ++i) {
        const Int value = family.involutive()[static_cast<std::size_t>(i)] == pattern ? 0 : 1;
        bind.emplace("u" + std::to_string(i + 1), const_over(target, value).truncated(max_n));
        bind.emplace("v" + std::to_string(i + 1), const_over(target, value).truncated(max_n));
    }
    for (int k = 0; k < family.left_count(); ++k) {
        // an involution holds equally many occurrences of a pattern and of its
        // inverse, so killing w_k removes both members of the pair
        const bool hit = family.left()[static_cast<std::size_t>(k)] == pattern ||
                         family.left_inverse()[static_cast<std::size_t>(k)] == pattern;
        bind.emplace("w" + std::to_string(k + 1), const_over(target, hit ? 0 : 1).truncated(max_n));
    }
    const MultiSeries s = F.substituted(bind, target);
    std::vector<Int> seq;
    seq.reserve(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) seq.push_back(s.coeff({{"x", n}}));
    return seq;
}

}  // namespace

std::vector<Int> avoidance_sequence_gf(const Permutation& pattern, int max_n) {
    for (const PatternSet& family : stocked_families()) {
        if (!family.contains(pattern)) continue;
        const MultiSeries F = joint_distribution(family, max_n, SeriesSource::closed_form);
        return avoidance_from_distribution(family, F, pattern, max_n);
    }
    throw std::invalid_argument("no stocked closed form covers pattern " +
                                pattern.to_compact_string());
}

std::vector<WilfClass> classify_wilf(int k, int max_n) {
    if (k != 2 && k != 3)
        throw std::invalid_argument("wilf classification supports pattern lengths 2 and 3");
    if (max_n < 6) throw std::invalid_argument("wilf classification needs max_n >= 6");

    std::map<std::vector<Int>, std::vector<Permutation>> groups;
    std::map<Permutation, std::vector<Int>> oracle_sequences;
    for (const Permutation& pat : all_permutations(k)) {
        std::vector<Int> seq = avoidance_sequence(pat, max_n);
        groups[seq].push_back(pat);
        oracle_sequences.emplace(pat, std::move(seq));
    }

    for (const PatternSet& family : stocked_families()) {
        if (family.all().front().size() != k) continue;
        const MultiSeries F = joint_distribution(family, max_n, SeriesSource::closed_form);
        for (const Permutation& pat : family.all())
            if (avoidance_from_distribution(family, F, pat, max_n) != oracle_sequences.at(pat))
                throw std::logic_error(
                    "avoidance sequences disagree between the oracle and the closed-form route "
                    "for pattern " +
                    pat.to_compact_string());
    }

    std::vector<WilfClass> classes;
    for (const auto& [seq, pats] : groups) classes.push_back(WilfClass{pats, seq});
    std::sort(classes.begin(), classes.end(), [](const WilfClass& a, const WilfClass& b) {
        return a.patterns.front() < b.patterns.front();
    });
    return classes;
}

}  // namespace hertzinv
