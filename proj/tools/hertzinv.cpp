#include "CLI11.hpp"
#include "hertzinv/cluster.hpp"
#include "hertzinv/oracle.hpp"
#include "hertzinv/distribution.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace hz = hertzinv;

namespace {

// Exhaustive enumeration above this length takes minutes to hours; require an
// explicit override instead of silently grinding.
constexpr int kOracleGuard = 13;

hz::PatternSet parse_pattern_set(const std::string& spec, bool close) {
    std::vector<hz::Permutation> pats;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ','))
        if (!token.empty()) pats.push_back(hz::Permutation::parse(token));
    if (pats.empty()) throw std::invalid_argument("empty pattern list");
    return close ? hz::PatternSet::with_inverse_closure(std::move(pats))
                 : hz::PatternSet(std::move(pats));
}

void check_oracle_guard(int n, bool force) {
    if (!force && n > kOracleGuard)
        throw std::invalid_argument("n = " + std::to_string(n) +
                                    " exceeds the exhaustive-enumeration guard (" +
                                    std::to_string(kOracleGuard) + "); pass --force to run anyway");
}

hz::SeriesSource resolve_source(const std::string& name, const hz::PatternSet& set) {
    if (name == "closed-form") return hz::SeriesSource::closed_form;
    if (name == "enumerated") return hz::SeriesSource::enumerated;
    return hz::has_closed_form(set) ? hz::SeriesSource::closed_form
                                    : hz::SeriesSource::enumerated;
}

void print_distribution(const hz::DistributionTable& table, const std::string& format) {
    if (format == "json")
        std::cout << table.to_json().dump(2) << "\n";
    else if (format == "csv")
        std::cout << table.to_csv();
    else
        std::cout << table.to_plain();
}

std::string cluster_line(const hz::Cluster& cl) {
    std::string out = cl.marked.word.to_compact_string() + " |";
    const bool compact = cl.length() <= 9;
    for (const hz::Occurrence& mark : cl.marked.marks)
        out += (compact ? " " : "  ") + mark.factor_string();
    return out;
}

nlohmann::json cluster_json(const hz::Cluster& cl) {
    nlohmann::json marks = nlohmann::json::array();
    for (const hz::Occurrence& mark : cl.marked.marks)
        marks.push_back(nlohmann::json{{"pattern", mark.pattern.to_compact_string()},
                                       {"start", mark.start},
                                       {"offset", mark.offset},
                                       {"factor", mark.factor_string()}});
    return nlohmann::json{
        {"word", cl.marked.word.word()}, {"length", cl.length()}, {"marks", std::move(marks)}};
}

void print_sequence_plain(const std::vector<hz::Int>& seq) {
    for (std::size_t n = 0; n < seq.size(); ++n)
        std::cout << n << " " << seq[n].str() << "\n";
}

std::vector<std::pair<int, hz::Int>> read_expect_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open expectation file " + path);
    std::vector<std::pair<int, hz::Int>> expected;
    std::string line;
    while (std::getline(in, line)) {
        std::stringstream ls(line);
        std::string first, second;
        if (!(ls >> first) || first.front() == '#') continue;
        if (!(ls >> second))
            throw std::invalid_argument("malformed expectation line (need \"n value\"): " + line);
        expected.emplace_back(std::stoi(first), hz::Int(second));
    }
    return expected;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact joint distribution of Hertzsprung-pattern occurrences in involutions"};
    app.require_subcommand(1);

    int rc = 0;

    std::string patterns_spec;
    std::string format = "plain";
    std::string source = "auto";
    std::string kind = "distribution";
    std::string preset_name;
    std::string expect_file;
    int n = 0;
    int max_n = 0;
    int length = 3;
    int depth = 0;
    bool close = false;
    bool force = false;
    bool involutory = false;

    auto add_patterns = [&](CLI::App* cmd) {
        cmd->add_option("--patterns", patterns_spec,
                        "comma-separated patterns in one-line notation, e.g. 231,312")
            ->required();
        cmd->add_flag("--close", close, "complete the set with missing inverse patterns");
    };
    auto add_format = [&](CLI::App* cmd, std::vector<std::string> choices) {
        std::string label = choices.front();
        for (std::size_t i = 1; i < choices.size(); ++i)
            label += (i + 1 == choices.size() ? " or " : ", ") + choices[i];
        cmd->add_option("--format", format, "output format: " + label)
            ->check(CLI::IsMember(std::move(choices)));
    };

    CLI::App* dist = app.add_subcommand(
        "distribution", "Involutions of length <= n by fixed points and pattern statistics");
    add_patterns(dist);
    dist->add_option("--n", n, "maximum length")->required()->check(CLI::NonNegativeNumber);
    dist->add_option("--depth", depth, "continued fraction depth override")
        ->check(CLI::PositiveNumber);
    dist->add_option("--source", source, "cluster series source: auto, closed-form or enumerated")
        ->check(CLI::IsMember(std::vector<std::string>{"auto", "closed-form", "enumerated"}));
    add_format(dist, {"plain", "csv", "json"});
    dist->callback([&] {
        const hz::PatternSet set = parse_pattern_set(patterns_spec, close);
        const int d = depth > 0 ? depth : hz::default_cf_depth(n);
        const hz::DistributionTable table(
            set, hz::joint_distribution(set, n, resolve_source(source, set), d));
        print_distribution(table, format);
    });

    CLI::App* oracle = app.add_subcommand(
        "oracle", "Exhaustive-enumeration statistics census of the involutions of length n");
    add_patterns(oracle);
    oracle->add_option("--n", n, "involution length")->required()->check(CLI::NonNegativeNumber);
    oracle->add_flag("--force", force, "run past the exhaustive-enumeration guard");
    add_format(oracle, {"plain", "csv", "json"});
    oracle->callback([&] {
        check_oracle_guard(n, force);
        const hz::PatternSet set = parse_pattern_set(patterns_spec, close);
        const hz::Census census = hz::statistics_census(set, n);
        const hz::DistributionTable table(
            set, hz::census_series(census, hz::involution_vars(set), n));
        print_distribution(table, format);
    });

    CLI::App* clusters =
        app.add_subcommand("clusters", "Chains of overlapping marked pattern occurrences");
    add_patterns(clusters);
    clusters->add_option("--max-n", max_n, "maximum cluster length")
        ->required()
        ->check(CLI::NonNegativeNumber);
    clusters->add_flag("--involutory", involutory,
                       "only involutions with sibling-closed mark sets");
    add_format(clusters, {"plain", "json"});
    clusters->callback([&] {
        const hz::PatternSet set = parse_pattern_set(patterns_spec, close);
        const std::vector<hz::Cluster> found = involutory
                                                   ? hz::enumerate_involutory_clusters(set, max_n)
                                                   : hz::enumerate_clusters(set, max_n);
        if (format == "json") {
            nlohmann::json out = nlohmann::json::array();
            for (const hz::Cluster& cl : found) out.push_back(cluster_json(cl));
            std::cout << out.dump(2) << "\n";
        } else {
            for (const hz::Cluster& cl : found) std::cout << cluster_line(cl) << "\n";
        }
    });

    CLI::App* series = app.add_subcommand("series", "Print one series of the pipeline");
    add_patterns(series);
    series->add_option("--n", n, "truncation order")->required()->check(CLI::NonNegativeNumber);
    series->add_option("--kind", kind,
                       "clusters, involutory-clusters, distribution or marked")
        ->check(CLI::IsMember(std::vector<std::string>{"clusters", "involutory-clusters",
                                                       "distribution", "marked"}));
    series->add_option("--depth", depth, "continued fraction depth override")
        ->check(CLI::PositiveNumber);
    series->add_option("--source", source, "cluster series source: auto, closed-form or enumerated")
        ->check(CLI::IsMember(std::vector<std::string>{"auto", "closed-form", "enumerated"}));
    add_format(series, {"plain", "json"});
    series->callback([&] {
        const hz::PatternSet set = parse_pattern_set(patterns_spec, close);
        const hz::SeriesSource src = resolve_source(source, set);
        const bool closed = src == hz::SeriesSource::closed_form;
        const int d = depth > 0 ? depth : hz::default_cf_depth(n);
        hz::MultiSeries s = hz::MultiSeries::zero({"x"}, n);
        if (kind == "clusters")
            s = closed ? hz::closed_form(set).clusters.expand(n) : hz::cluster_gf(set, n);
        else if (kind == "involutory-clusters")
            s = closed ? hz::closed_form(set).involutory.expand(n)
                       : hz::involutory_cluster_gf(set, n);
        else if (kind == "marked")
            s = hz::marked_involution_gf(set, n, src, d);
        else
            s = hz::joint_distribution(set, n, src, d);
        if (format == "json")
            std::cout << s.to_json().dump(2) << "\n";
        else
            std::cout << s.to_pretty_string() << "\n";
    });

    CLI::App* sequence =
        app.add_subcommand("sequence", "Specializations of the {12,21} distribution");
    sequence->add_option("--preset", preset_name,
                         "hertzsprung, irreducible, fpf_irreducible or matchings_short_pairs")
        ->required();
    sequence->add_option("--n", n, "maximum length")->required()->check(CLI::NonNegativeNumber);
    sequence->add_option("--expect-file", expect_file,
                         "file of \"n value\" lines to compare against (b-file style)");
    add_format(sequence, {"plain", "csv", "json"});
    sequence->callback([&] {
        const hz::Preset preset = hz::parse_preset(preset_name);
        if (preset == hz::Preset::matchings_short_pairs) {
            if (!expect_file.empty())
                throw std::invalid_argument(
                    "--expect-file compares single sequences; matchings_short_pairs is a table");
            const std::vector<std::vector<hz::Int>> rows = hz::preset_short_pair_rows(n);
            if (format == "json") {
                nlohmann::json out = nlohmann::json::array();
                for (const auto& row : rows) {
                    nlohmann::json jrow = nlohmann::json::array();
                    for (const hz::Int& v : row) jrow.push_back(v.str());
                    out.push_back(std::move(jrow));
                }
                std::cout << nlohmann::json{{"preset", preset_name}, {"rows", std::move(out)}}
                                 .dump(2)
                          << "\n";
            } else if (format == "csv") {
                std::cout << "n,short_pairs,count\n";
                for (std::size_t m = 0; m < rows.size(); ++m)
                    for (std::size_t j = 0; j < rows[m].size(); ++j)
                        std::cout << m << "," << j << "," << rows[m][j].str() << "\n";
            } else {
                for (std::size_t m = 0; m < rows.size(); ++m) {
                    std::cout << m << ":";
                    for (const hz::Int& v : rows[m]) std::cout << " " << v.str();
                    std::cout << "\n";
                }
            }
            return;
        }
        const std::vector<hz::Int> seq = hz::preset_sequence(preset, n);
        if (!expect_file.empty()) {
            int checked = 0;
            for (const auto& [m, value] : read_expect_file(expect_file)) {
                if (m < 0 || m >= static_cast<int>(seq.size())) continue;
                ++checked;
                if (seq[static_cast<std::size_t>(m)] != value) {
                    std::cout << "mismatch at n=" << m << ": computed "
                              << seq[static_cast<std::size_t>(m)].str() << ", expected "
                              << value.str() << "\n";
                    rc = 1;
                }
            }
            std::cout << (rc == 0 ? "ok" : "FAIL") << ": " << checked
                      << " values compared against " << expect_file << "\n";
            return;
        }
        if (format == "json") {
            nlohmann::json values = nlohmann::json::array();
            for (const hz::Int& v : seq) values.push_back(v.str());
            std::cout << nlohmann::json{{"preset", preset_name}, {"values", std::move(values)}}
                             .dump(2)
                      << "\n";
        } else if (format == "csv") {
            std::cout << "n,count\n";
            for (std::size_t m = 0; m < seq.size(); ++m)
                std::cout << m << "," << seq[m].str() << "\n";
        } else {
            print_sequence_plain(seq);
        }
    });

    CLI::App* wilf = app.add_subcommand(
        "wilf", "Group patterns of one length by their involution avoidance sequences");
    wilf->add_option("--length", length, "pattern length (2 or 3)")->required();
    wilf->add_option("--max-n", max_n, "largest involution length")->required();
    wilf->add_flag("--force", force, "run past the exhaustive-enumeration guard");
    add_format(wilf, {"plain", "json"});
    wilf->callback([&] {
        check_oracle_guard(max_n, force);
        const std::vector<hz::WilfClass> classes = hz::classify_wilf(length, max_n);
        if (format == "json") {
            nlohmann::json out = nlohmann::json::array();
            for (const hz::WilfClass& cls : classes) {
                nlohmann::json pats = nlohmann::json::array();
                nlohmann::json seq = nlohmann::json::array();
                for (const hz::Permutation& p : cls.patterns)
                    pats.push_back(p.to_compact_string());
                for (const hz::Int& v : cls.sequence) seq.push_back(v.str());
                out.push_back(
                    nlohmann::json{{"patterns", std::move(pats)}, {"avoiders", std::move(seq)}});
            }
            std::cout << out.dump(2) << "\n";
        } else {
            for (const hz::WilfClass& cls : classes) {
                std::cout << "{";
                for (std::size_t i = 0; i < cls.patterns.size(); ++i)
                    std::cout << (i ? "," : "") << cls.patterns[i].to_compact_string();
                std::cout << "}";
                for (const hz::Int& v : cls.sequence) std::cout << " " << v.str();
                std::cout << "\n";
            }
        }
    });

    CLI::App* verify = app.add_subcommand(
        "verify", "Cross-check the pipeline against enumeration; nonzero exit on mismatch");
    add_patterns(verify);
    verify->add_option("--n", n, "maximum length")->required()->check(CLI::NonNegativeNumber);
    verify->add_flag("--force", force, "run past the exhaustive-enumeration guard");
    verify->callback([&] {
        check_oracle_guard(n, force);
        const hz::PatternSet set = parse_pattern_set(patterns_spec, close);
        const bool stocked = hz::has_closed_form(set);
        const hz::SeriesSource src =
            stocked ? hz::SeriesSource::closed_form : hz::SeriesSource::enumerated;
        int failures = 0;
        auto report = [&failures](const std::string& check, bool ok) {
            std::cout << (ok ? "ok" : "FAIL") << ": " << check << "\n";
            if (!ok) ++failures;
        };

        bool parity_ok = true;
        for (int m = 0; m <= n && parity_ok; ++m)
            for (const auto& [sv, count] : hz::statistics_census(set, m))
                for (const auto& [sib, nsib] : sv.sib_nsib)
                    if (nsib % 2 != 0) parity_ok = false;
        report("sibling parity (every non-self-sibling count even, n <= " + std::to_string(n) +
                   ")",
               parity_ok);

        const hz::MultiSeries F = hz::joint_distribution(set, n, src);
        const std::vector<std::string> issues = hz::compare_with_oracle(set, F, n);
        for (const std::string& issue : issues) std::cout << "  " << issue << "\n";
        report("distribution equals the exhaustive census (n <= " + std::to_string(n) + ")",
               issues.empty());

        if (stocked) {
            const hz::ClosedForms forms = hz::closed_form(set);
            report("enumerated cluster series equals the closed form",
                   hz::cluster_gf(set, n) == forms.clusters.expand(n));
            report("enumerated involutory cluster series equals the closed form",
                   hz::involutory_cluster_gf(set, n) == forms.involutory.expand(n));
            report("closed-form and enumerated distributions agree",
                   F == hz::joint_distribution(set, n, hz::SeriesSource::enumerated));
        } else {
            std::cout << "note: no stocked closed form; enumeration-only checks\n";
        }

        report("continued fraction stable one level past the default depth",
               F == hz::joint_distribution(set, n, src, hz::default_cf_depth(n) + 1));

        rc = failures == 0 ? 0 : 1;
        std::cout << (failures == 0 ? "all checks passed" : "checks failed") << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
