#include "hertzinv/series.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace hertzinv {

MultiSeries::MultiSeries(std::vector<std::string> vars, int trunc)
    : vars_(std::move(vars)), trunc_(trunc) {
    if (vars_.empty()) throw std::invalid_argument("series needs at least the length variable");
    if (trunc_ < 0) throw std::invalid_argument("negative truncation order");
    std::vector<std::string> sorted(vars_);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate variable name");
}

MultiSeries MultiSeries::zero(std::vector<std::string> vars, int trunc) {
    return MultiSeries(std::move(vars), trunc);
}

MultiSeries MultiSeries::constant(std::vector<std::string> vars, int trunc, const Int& value) {
    MultiSeries s(std::move(vars), trunc);
    s.add_term(std::vector<int>(s.vars_.size(), 0), value);
    return s;
}

MultiSeries MultiSeries::variable(std::vector<std::string> vars, int trunc, const std::string& name,
                                  int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative exponent for variable " + name);
    MultiSeries s(std::move(vars), trunc);
    std::vector<int> exps(s.vars_.size(), 0);
    exps[static_cast<std::size_t>(s.var_index(name))] = exponent;
    s.add_term(exps, 1);
    return s;
}

MultiSeries MultiSeries::monomial(std::vector<std::string> vars, int trunc,
                                  const std::map<std::string, int>& exponents,
                                  const Int& coefficient) {
    MultiSeries s(std::move(vars), trunc);
    std::vector<int> exps(s.vars_.size(), 0);
    for (const auto& [name, e] : exponents) {
        if (e < 0) throw std::invalid_argument("negative exponent for variable " + name);
        exps[static_cast<std::size_t>(s.var_index(name))] = e;
    }
    s.add_term(exps, coefficient);
    return s;
}

Int MultiSeries::constant_term() const {
    const auto it = terms_.find(std::vector<int>(vars_.size(), 0));
    return it == terms_.end() ? Int(0) : it->second;
}

int MultiSeries::order() const {
    int best = kUnbounded;
    for (const auto& [exps, coef] : terms_) best = std::min(best, exps[0]);
    return best;
}

Int MultiSeries::coeff(const std::map<std::string, int>& exponents) const {
    std::vector<int> exps(vars_.size(), 0);
    for (const auto& [name, e] : exponents) exps[static_cast<std::size_t>(var_index(name))] = e;
    const auto it = terms_.find(exps);
    return it == terms_.end() ? Int(0) : it->second;
}

int MultiSeries::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown variable: " + name);
}

MultiSeries MultiSeries::truncated(int new_trunc) const {
    MultiSeries out(vars_, new_trunc);
    for (const auto& [exps, coef] : terms_)
        if (exps[0] <= new_trunc) out.terms_.emplace(exps, coef);
    return out;
}

MultiSeries MultiSeries::mapped_to(std::vector<std::string> target) const {
    MultiSeries out(target, trunc_);
    if (target[0] != vars_[0])
        throw std::invalid_argument("variable mismatch: embedding must keep the truncation variable " +
                                    vars_[0] + " first");
    std::vector<int> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i)
        where[i] = out.var_index(vars_[i]);
    for (const auto& [exps, coef] : terms_) {
        std::vector<int> mapped(target.size(), 0);
        for (std::size_t i = 0; i < exps.size(); ++i)
            mapped[static_cast<std::size_t>(where[i])] = exps[i];
        out.terms_.emplace(std::move(mapped), coef);
    }
    return out;
}

MultiSeries MultiSeries::operator-() const {
    MultiSeries out(*this);
    for (auto& [exps, coef] : out.terms_) coef = -coef;
    return out;
}

void MultiSeries::check_compatible(const MultiSeries& other) const {
    if (vars_ != other.vars_)
        throw std::invalid_argument("variable mismatch between series operands");
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& rhs) {
    check_compatible(rhs);
    trunc_ = std::min(trunc_, rhs.trunc_);
    for (const auto& [exps, coef] : rhs.terms_) add_term(exps, coef);
    if (trunc_ != kUnbounded)
        std::erase_if(terms_, [this](const auto& t) { return t.first[0] > trunc_; });
    return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& rhs) {
    check_compatible(rhs);
    trunc_ = std::min(trunc_, rhs.trunc_);
    for (const auto& [exps, coef] : rhs.terms_) add_term(exps, -coef);
    if (trunc_ != kUnbounded)
        std::erase_if(terms_, [this](const auto& t) { return t.first[0] > trunc_; });
    return *this;
}

void MultiSeries::add_term(const std::vector<int>& exps, const Int& coefficient) {
    if (coefficient == 0) return;
    if (trunc_ != kUnbounded && exps[0] > trunc_) return;
    auto [it, inserted] = terms_.emplace(exps, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {

// Exponent vectors pack into one 64-bit key (a byte per variable) when the
// variable count and the exponents are small, which makes the multiplication
// inner loop a flat hash accumulation instead of map-of-vector traffic.
bool packable(const MultiSeries::TermMap& a, const MultiSeries::TermMap& b, std::size_t nvars) {
    if (nvars > 8) return false;
    auto fits = [](const MultiSeries::TermMap& m) {
        for (const auto& [exps, coef] : m)
            for (int e : exps)
                if (e > 127) return false;
        return true;
    };
    return fits(a) && fits(b);
}

std::uint64_t pack(const std::vector<int>& exps) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < exps.size(); ++i)
        key |= static_cast<std::uint64_t>(exps[i]) << (8 * i);
    return key;
}

std::vector<int> unpack(std::uint64_t key, std::size_t nvars) {
    std::vector<int> exps(nvars);
    for (std::size_t i = 0; i < nvars; ++i)
        exps[i] = static_cast<int>((key >> (8 * i)) & 0xff);
    return exps;
}

}  // namespace

MultiSeries operator*(const MultiSeries& lhs, const MultiSeries& rhs) {
    lhs.check_compatible(rhs);
    const int trunc = std::min(lhs.trunc_, rhs.trunc_);
    MultiSeries out(lhs.vars_, trunc);
    const std::size_t nvars = lhs.vars_.size();

    if (packable(lhs.terms_, rhs.terms_, nvars)) {
        std::unordered_map<std::uint64_t, Int> acc;
        acc.reserve(lhs.terms_.size() + rhs.terms_.size());
        for (const auto& [ea, ca] : lhs.terms_) {
            const std::uint64_t ka = pack(ea);
            for (const auto& [eb, cb] : rhs.terms_) {
                if (trunc != MultiSeries::kUnbounded && ea[0] + eb[0] > trunc) continue;
                acc[ka + pack(eb)] += ca * cb;
            }
        }
        for (const auto& [key, coef] : acc)
            if (coef != 0) out.terms_.emplace(unpack(key, nvars), coef);
        return out;
    }

    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            if (trunc != MultiSeries::kUnbounded && ea[0] + eb[0] > trunc) continue;
            std::vector<int> exps(nvars);
            for (std::size_t i = 0; i < nvars; ++i) exps[i] = ea[i] + eb[i];
            out.add_term(exps, ca * cb);
        }
    }
    return out;
}

MultiSeries operator*(const Int& scalar, const MultiSeries& s) {
    MultiSeries out(s.vars_, s.trunc_);
    if (scalar == 0) return out;
    for (const auto& [exps, coef] : s.terms_) out.terms_.emplace(exps, scalar * coef);
    return out;
}

MultiSeries MultiSeries::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("negative power of a series");
    MultiSeries acc = constant(vars_, trunc_, 1);
    for (int i = 0; i < exponent; ++i) acc = acc * *this;
    return acc;
}

MultiSeries MultiSeries::reciprocal() const {
    if (trunc_ == kUnbounded)
        throw std::invalid_argument("reciprocal needs a finite truncation order");
    const Int c = constant_term();
    if (c != 1 && c != -1)
        throw std::invalid_argument("reciprocal of a series whose constant term is not a unit: " +
                                    c.str());
    // s = c(1 - q) with q = 1 - c*s; the inverse is c * sum of q^k.
    MultiSeries q = constant(vars_, trunc_, 1) - c * *this;
    if (!q.is_zero() && q.order() < 1)
        throw std::invalid_argument(
            "reciprocal does not terminate: a non-constant term is free of the truncation variable " +
            vars_[0]);
    const MultiSeries one = constant(vars_, trunc_, 1);
    MultiSeries r = one;
    if (!q.is_zero()) {
        const int steps = trunc_ / std::max(1, q.order()) + 1;
        for (int i = 0; i < steps; ++i) r = one + q * r;
    }
    return c * r;
}

MultiSeries MultiSeries::substituted(const std::map<std::string, MultiSeries>& bindings,
                                     std::vector<std::string> target_vars) const {
    int trunc = trunc_;
    for (const auto& [name, value] : bindings) {
        var_index(name);  // throws for bindings of unknown variables
        if (value.vars() != target_vars)
            throw std::invalid_argument("variable mismatch: binding for " + name +
                                        " is not a series over the target variables");
        trunc = std::min(trunc, value.trunc());
    }
    MultiSeries out(target_vars, trunc);

    // Unbound variables carry over by name; the truncation variable may not move.
    std::vector<int> carry(vars_.size(), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (bindings.contains(vars_[i])) continue;
        carry[i] = out.var_index(vars_[i]);
        if (i == 0 && carry[i] != 0)
            throw std::invalid_argument("variable mismatch: the truncation variable " + vars_[0] +
                                        " must stay first in the target");
    }
    if (trunc_ != kUnbounded && bindings.contains(vars_[0])) {
        const MultiSeries& image = bindings.at(vars_[0]);
        if (!image.is_zero() && image.order() < 1)
            throw std::invalid_argument(
                "ill-founded substitution: image of the truncation variable " + vars_[0] +
                " has a term of order zero, so truncation would not be preserved");
    }

    // Cached powers of each bound series, grown on demand.
    std::map<std::string, std::vector<MultiSeries>> powers;
    auto power_of = [&](const std::string& name, int e) -> const MultiSeries& {
        auto& cache = powers[name];
        if (cache.empty()) cache.push_back(MultiSeries::constant(target_vars, trunc, 1));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * bindings.at(name));
        return cache[static_cast<std::size_t>(e)];
    };

    for (const auto& [exps, coef] : terms_) {
        std::vector<int> base(target_vars.size(), 0);
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (carry[i] >= 0) base[static_cast<std::size_t>(carry[i])] = exps[i];
        MultiSeries term(target_vars, trunc);
        term.add_term(base, coef);
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (carry[i] < 0 && exps[i] > 0) term = term * power_of(vars_[i], exps[i]);
        out += term;
    }
    return out;
}

MultiSeries MultiSeries::substituted(const std::map<std::string, MultiSeries>& bindings) const {
    return substituted(bindings, vars_);
}

std::string MultiSeries::to_pretty_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [exps, coef] : terms_) {
        const bool negative = coef < 0;
        const Int magnitude = negative ? Int(-coef) : coef;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string factors;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += vars_[i];
            if (exps[i] > 1) factors += "^" + std::to_string(exps[i]);
        }
        if (factors.empty()) {
            out += magnitude.str();
        } else if (magnitude == 1) {
            out += factors;
        } else {
            out += magnitude.str() + "*" + factors;
        }
    }
    return out;
}

nlohmann::json MultiSeries::to_json() const {
    nlohmann::json j;
    j["vars"] = vars_;
    if (trunc_ == kUnbounded)
        j["trunc"] = nullptr;
    else
        j["trunc"] = trunc_;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [exps, coef] : terms_) {
        nlohmann::json t;
        nlohmann::json e = nlohmann::json::object();
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (exps[i] != 0) e[vars_[i]] = exps[i];
        t["exps"] = std::move(e);
        t["coef"] = coef.str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

MultiSeries MultiSeries::from_json(const nlohmann::json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    const int trunc = j.at("trunc").is_null() ? kUnbounded : j.at("trunc").get<int>();
    MultiSeries out(std::move(vars), trunc);
    for (const auto& t : j.at("terms")) {
        std::vector<int> exps(out.vars_.size(), 0);
        for (const auto& [name, e] : t.at("exps").items())
            exps[static_cast<std::size_t>(out.var_index(name))] = e.get<int>();
        out.add_term(exps, Int(t.at("coef").get<std::string>()));
    }
    return out;
}

RationalExpr::RationalExpr(MultiSeries numerator, MultiSeries denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (num_.vars() != den_.vars())
        throw std::invalid_argument("variable mismatch between numerator and denominator");
    const Int c = den_.constant_term();
    if (c != 1 && c != -1)
        throw std::invalid_argument("denominator constant term must be a unit, got " + c.str());
}

RationalExpr RationalExpr::polynomial(MultiSeries p) {
    MultiSeries one = MultiSeries::constant(p.vars(), p.trunc(), 1);
    return RationalExpr(std::move(p), std::move(one));
}

RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
    return RationalExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) {
    return RationalExpr(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
    return RationalExpr(a.num_ * b.num_, a.den_ * b.den_);
}

RationalExpr RationalExpr::substituted(const std::map<std::string, MultiSeries>& bindings,
                                       std::vector<std::string> target_vars) const {
    return RationalExpr(num_.substituted(bindings, target_vars),
                        den_.substituted(bindings, target_vars));
}

MultiSeries RationalExpr::expand(int order) const {
    return num_.truncated(order) * den_.truncated(order).reciprocal();
}

void validate_length_dominated(const MultiSeries& s) {
    for (const auto& [exps, coef] : s.terms())
        for (std::size_t i = 1; i < exps.size(); ++i)
            if (exps[i] > exps[0])
                throw std::logic_error("statistics exponent exceeds the length exponent in variable " +
                                       s.vars()[i]);
}

}  // namespace hertzinv
