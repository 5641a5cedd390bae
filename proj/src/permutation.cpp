#include "hertzinv/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hertzinv {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<int> sorted(word_);
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
        if (sorted[static_cast<std::size_t>(i)] != i + 1) {
            throw std::invalid_argument("not a permutation of 1..n: value " +
                                        std::to_string(sorted[static_cast<std::size_t>(i)]) +
                                        " where " + std::to_string(i + 1) + " was expected");
        }
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> values;
    const bool separated = text.find_first_of(", \t") != std::string::npos;
    if (separated) {
        std::string cleaned(text);
        std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
        std::istringstream in(cleaned);
        int v = 0;
        while (in >> v) values.push_back(v);
        if (!in.eof()) throw std::invalid_argument("cannot parse permutation from '" + text + "'");
    } else {
        for (char ch : text) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw std::invalid_argument("cannot parse permutation from '" + text + "'");
            values.push_back(ch - '0');
        }
    }
    return Permutation(std::move(values));
}

Permutation Permutation::inverse() const {
    std::vector<int> w(word_.size());
    for (int i = 1; i <= size(); ++i) w[static_cast<std::size_t>(at(i)) - 1] = i;
    return Permutation(std::move(w));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size())
        throw std::invalid_argument("cannot compose permutations of different sizes");
    std::vector<int> w(word_.size());
    for (int i = 1; i <= size(); ++i) w[static_cast<std::size_t>(i) - 1] = at(other.at(i));
    return Permutation(std::move(w));
}

bool Permutation::is_involution() const {
    for (int i = 1; i <= size(); ++i)
        if (at(at(i)) != i) return false;
    return true;
}

Permutation Permutation::reverse_complement() const {
    const int n = size();
    std::vector<int> w(word_.size());
    for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i) - 1] = n + 1 - at(n + 1 - i);
    return Permutation(std::move(w));
}

Permutation::InvolutionStats Permutation::involution_stats() const {
    if (!is_involution())
        throw std::invalid_argument("involution statistics requested for a non-involution: " + to_string());
    InvolutionStats s;
    for (int i = 1; i <= size(); ++i) {
        if (at(i) == i)
            ++s.fixed_points;
        else if (at(i) > i)
            ++s.two_cycles;
    }
    return s;
}

std::string Permutation::to_string() const {
    std::string out;
    for (int i = 1; i <= size(); ++i) {
        if (i > 1) out += ' ';
        out += std::to_string(at(i));
    }
    return out;
}

std::string Permutation::to_compact_string() const {
    if (std::any_of(word_.begin(), word_.end(), [](int v) { return v > 9; })) return to_string();
    std::string out;
    for (int v : word_) out += static_cast<char>('0' + v);
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace hertzinv
