#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace hertzinv {

using Int = boost::multiprecision::cpp_int;

/// Sparse multivariate formal power series with exact integer coefficients.
/// Terms map an exponent vector (one entry per variable) to a coefficient.
///
/// Truncation is by degree in the first variable only, the designated length
/// variable: arithmetic drops terms whose first exponent exceeds trunc().
/// trunc() == kUnbounded turns the object into a plain polynomial with no
/// cutoff, which is how rational-function numerators and denominators are kept
/// exact before expansion.
class MultiSeries {
public:
    static constexpr int kUnbounded = std::numeric_limits<int>::max();
    using TermMap = std::map<std::vector<int>, Int>;

    MultiSeries(std::vector<std::string> vars, int trunc);

    static MultiSeries zero(std::vector<std::string> vars, int trunc);
    static MultiSeries constant(std::vector<std::string> vars, int trunc, const Int& value);
    static MultiSeries variable(std::vector<std::string> vars, int trunc, const std::string& name,
                                int exponent = 1);
    static MultiSeries monomial(std::vector<std::string> vars, int trunc,
                                const std::map<std::string, int>& exponents, const Int& coefficient);

    const std::vector<std::string>& vars() const { return vars_; }
    int trunc() const { return trunc_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int constant_term() const;

    /// Smallest exponent of the truncation variable over all terms;
    /// kUnbounded for the zero series.
    int order() const;

    /// Coefficient of the monomial with the given exponents (unlisted variables read as 0).
    Int coeff(const std::map<std::string, int>& exponents) const;

    int var_index(const std::string& name) const;

    MultiSeries truncated(int new_trunc) const;

    /// Re-embeds into a superset variable list (same truncation variable first).
    MultiSeries mapped_to(std::vector<std::string> target) const;

    MultiSeries operator-() const;
    MultiSeries& operator+=(const MultiSeries& rhs);
    MultiSeries& operator-=(const MultiSeries& rhs);
    friend MultiSeries operator+(MultiSeries lhs, const MultiSeries& rhs) { return lhs += rhs; }
    friend MultiSeries operator-(MultiSeries lhs, const MultiSeries& rhs) { return lhs -= rhs; }
    friend MultiSeries operator*(const MultiSeries& lhs, const MultiSeries& rhs);
    friend MultiSeries operator*(const Int& scalar, const MultiSeries& s);
    friend MultiSeries operator*(const MultiSeries& s, const Int& scalar) { return scalar * s; }

    MultiSeries pow(int exponent) const;

    /// Multiplicative inverse. Requires a finite truncation, a constant term of
    /// +1 or -1, and every non-constant term to carry a positive power of the
    /// truncation variable (otherwise the expansion would not terminate).
    MultiSeries reciprocal() const;

    /// Substitutes series for variables. Every variable must either have a
    /// binding or be present in target_vars; bindings are series over
    /// target_vars. A binding for the truncation variable of a truncated series
    /// must have positive order, or truncation would not be preserved.
    MultiSeries substituted(const std::map<std::string, MultiSeries>& bindings,
                            std::vector<std::string> target_vars) const;
    MultiSeries substituted(const std::map<std::string, MultiSeries>& bindings) const;

    std::string to_pretty_string() const;

    nlohmann::json to_json() const;
    static MultiSeries from_json(const nlohmann::json& j);

    friend bool operator==(const MultiSeries&, const MultiSeries&) = default;

private:
    std::vector<std::string> vars_;
    int trunc_ = kUnbounded;
    TermMap terms_;

    void add_term(const std::vector<int>& exps, const Int& coefficient);
    void check_compatible(const MultiSeries& other) const;
};

/// Ratio of two exact polynomials over the same variables. The denominator must
/// have constant term +1 or -1, so expansion stays in integer coefficients.
class RationalExpr {
public:
    RationalExpr(MultiSeries numerator, MultiSeries denominator);
    static RationalExpr polynomial(MultiSeries p);

    const MultiSeries& num() const { return num_; }
    const MultiSeries& den() const { return den_; }

    friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b);
    friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b);
    friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b);

    RationalExpr substituted(const std::map<std::string, MultiSeries>& bindings,
                             std::vector<std::string> target_vars) const;

    /// Truncated series expansion num/den to the given order of the length variable.
    MultiSeries expand(int order) const;

private:
    MultiSeries num_;
    MultiSeries den_;
};

/// Checks the output contract of the statistics pipelines: in every term, each
/// non-length exponent is bounded by the length exponent. Throws on violation.
void validate_length_dominated(const MultiSeries& s);

}  // namespace hertzinv
