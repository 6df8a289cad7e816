// Finite stratification posets.
//
// Elements are stratum ids; x <= y means "stratum x lies in the closure of
// stratum y". Each element carries an integer level (for even-dimensional
// stratifications, level w stands for real dimension 2w). Open subsets of
// the stratified space correspond to up-closed element sets, closed subsets
// to down-closed ones.

#pragma once

#include <algorithm>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace stag {

class StratPoset {
public:
    /// Build from element names, covering/order pairs (x below y, by name)
    /// and per-element levels. The given pairs are closed off transitively;
    /// antisymmetry is checked.
    StratPoset(std::vector<std::string> names,
               const std::vector<std::pair<std::string, std::string>>& below,
               std::vector<int> levels)
        : names_(std::move(names)), levels_(std::move(levels)) {
        const std::size_t n = names_.size();
        if (levels_.size() != n)
            throw std::invalid_argument("StratPoset: one level per element required");
        std::set<std::string> seen(names_.begin(), names_.end());
        if (seen.size() != n)
            throw std::invalid_argument("StratPoset: duplicate element names");
        leq_.assign(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i) leq_[i][i] = true;
        for (const auto& [a, b] : below) leq_[index_of(a)][index_of(b)] = true;
        // transitive closure (Floyd-Warshall on the relation)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (leq_[i][k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (leq_[k][j]) leq_[i][j] = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && leq_[i][j] && leq_[j][i])
                    throw std::invalid_argument("StratPoset: relation not antisymmetric");
        build_covers();
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    int level(std::size_t i) const { return levels_[i]; }

    std::size_t index_of(const std::string& name) const {
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end())
            throw std::invalid_argument("StratPoset: unknown element " + name);
        return std::size_t(it - names_.begin());
    }

    bool leq(std::size_t x, std::size_t y) const { return leq_[x][y]; }

    /// Covering relations x < y with nothing strictly between.
    const std::vector<std::pair<std::size_t, std::size_t>>& covers() const {
        return covers_;
    }

    std::vector<std::size_t> up_set(std::size_t x) const {
        std::vector<std::size_t> r;
        for (std::size_t y = 0; y < size(); ++y)
            if (leq_[x][y]) r.push_back(y);
        return r;
    }
    std::vector<std::size_t> down_set(std::size_t x) const {
        std::vector<std::size_t> r;
        for (std::size_t y = 0; y < size(); ++y)
            if (leq_[y][x]) r.push_back(y);
        return r;
    }

    bool is_down_closed(const std::vector<bool>& t) const {
        for (std::size_t x = 0; x < size(); ++x)
            for (std::size_t y = 0; y < size(); ++y)
                if (t[y] && leq_[x][y] && !t[x]) return false;
        return true;
    }
    bool is_up_closed(const std::vector<bool>& t) const {
        for (std::size_t x = 0; x < size(); ++x)
            for (std::size_t y = 0; y < size(); ++y)
                if (t[x] && leq_[x][y] && !t[y]) return false;
        return true;
    }

    /// Down-closed set {x : level(x) <= w}. Throws if the level map is not
    /// monotone enough for that set to be closed.
    std::vector<bool> level_closed_set(int w) const {
        std::vector<bool> t(size(), false);
        for (std::size_t x = 0; x < size(); ++x) t[x] = levels_[x] <= w;
        return t;
    }

    int min_level() const {
        int m = levels_.empty() ? 0 : levels_[0];
        for (int l : levels_) m = std::min(m, l);
        return m;
    }
    int max_level() const {
        int m = levels_.empty() ? 0 : levels_[0];
        for (int l : levels_) m = std::max(m, l);
        return m;
    }

    /// Length (edge count) of the longest chain.
    std::size_t longest_chain() const {
        std::vector<std::size_t> h(size(), 0);
        // elements in any linear extension order: repeat relax (size is tiny)
        for (std::size_t pass = 0; pass < size(); ++pass)
            for (const auto& [x, y] : covers_)
                h[y] = std::max(h[y], h[x] + 1);
        std::size_t m = 0;
        for (auto v : h) m = std::max(m, v);
        return m;
    }

    bool same_as(const StratPoset& o) const {
        return names_ == o.names_ && levels_ == o.levels_ && leq_ == o.leq_;
    }

private:
    void build_covers() {
        const std::size_t n = size();
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                if (x == y || !leq_[x][y]) continue;
                bool cover = true;
                for (std::size_t z = 0; z < n && cover; ++z)
                    if (z != x && z != y && leq_[x][z] && leq_[z][y]) cover = false;
                if (cover) covers_.emplace_back(x, y);
            }
    }

    std::vector<std::string> names_;
    std::vector<int> levels_;
    std::vector<std::vector<bool>> leq_;
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

using PosetPtr = std::shared_ptr<const StratPoset>;

/// Chain poset c0 < c1 < ... with levels 0,1,2,...
inline PosetPtr chain_poset(const std::vector<std::string>& names) {
    std::vector<std::pair<std::string, std::string>> below;
    std::vector<int> levels;
    for (std::size_t i = 0; i < names.size(); ++i) {
        levels.push_back(int(i));
        if (i + 1 < names.size()) below.emplace_back(names[i], names[i + 1]);
    }
    return std::make_shared<StratPoset>(names, below, levels);
}

/// Same elements and levels, reversed order. Involutive up to same_as().
inline PosetPtr opposite_poset(const StratPoset& p) {
    std::vector<std::string> names;
    std::vector<int> levels;
    for (std::size_t i = 0; i < p.size(); ++i) {
        names.push_back(p.name(i));
        levels.push_back(p.level(i));
    }
    std::vector<std::pair<std::string, std::string>> below;
    for (const auto& [x, y] : p.covers()) below.emplace_back(p.name(y), p.name(x));
    return std::make_shared<StratPoset>(names, below, levels);
}

/// Full sub-poset on the masked elements, keeping names and levels.
inline PosetPtr sub_poset(const StratPoset& p, const std::vector<bool>& t) {
    std::vector<std::string> names;
    std::vector<int> levels;
    for (std::size_t x = 0; x < p.size(); ++x)
        if (t[x]) {
            names.push_back(p.name(x));
            levels.push_back(p.level(x));
        }
    std::vector<std::pair<std::string, std::string>> below;
    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < p.size(); ++y)
            if (t[x] && t[y] && x != y && p.leq(x, y))
                below.emplace_back(p.name(x), p.name(y));
    return std::make_shared<StratPoset>(names, below, levels);
}

/// Discrete poset whose elements are the given integer weights, one element
/// per weight, level = weight. Models graded vector spaces.
inline PosetPtr weight_poset(int lo, int hi) {
    std::vector<std::string> names;
    std::vector<int> levels;
    for (int w = lo; w <= hi; ++w) {
        names.push_back("w" + std::to_string(w));
        levels.push_back(w);
    }
    return std::make_shared<StratPoset>(
        names, std::vector<std::pair<std::string, std::string>>{}, levels);
}

}  // namespace stag
