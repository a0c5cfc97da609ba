#pragma once

// Conversations on the circle: each seat talks to an adjacent seat or to
// nobody. Represented as a partner vector with partner[i] == i meaning seat i
// sits the round out.

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace roundtable {

struct Matching {
    std::vector<int> partner;

    Matching() = default;
    explicit Matching(std::vector<int> p) : partner(std::move(p)) {}

    static Matching singles(int n) {
        Matching m;
        m.partner.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) m.partner[static_cast<std::size_t>(i)] = i;
        return m;
    }

    int size() const { return static_cast<int>(partner.size()); }

    void match(int i, int j) {
        partner[static_cast<std::size_t>(i)] = j;
        partner[static_cast<std::size_t>(j)] = i;
    }

    int at(int i) const { return partner[static_cast<std::size_t>(i)]; }
    bool unmatched(int i) const { return at(i) == i; }

    bool perfect() const {
        for (int i = 0; i < size(); ++i)
            if (unmatched(i)) return false;
        return true;
    }

    std::vector<int> unmatched_seats() const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (unmatched(i)) out.push_back(i);
        return out;
    }

    // "1 0 3 2": seat i's partner, unmatched seats print their own index.
    std::string str() const {
        std::string s;
        for (int i = 0; i < size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(at(i));
        }
        return s;
    }

    friend bool operator==(const Matching&, const Matching&) = default;
    friend auto operator<=>(const Matching& a, const Matching& b) {
        return a.partner <=> b.partner;
    }
};

// Valid on an n-cycle: an involution whose non-fixed points pair adjacent seats.
inline bool is_valid_matching(int n, const Matching& m) {
    if (m.size() != n || n < 1) return false;
    for (int i = 0; i < n; ++i) {
        const int j = m.at(i);
        if (j < 0 || j >= n) return false;
        if (m.at(j) != i) return false;
        if (j == i) continue;
        const int d = ((j - i) % n + n) % n;
        if (d != 1 && d != n - 1) return false;
    }
    return true;
}

namespace detail {
inline void require_valid_matching(int n, const Matching& m) {
    if (!is_valid_matching(n, m))
        throw std::invalid_argument("matching is not a valid adjacent-seat involution");
}
}  // namespace detail

inline Matching make_matching(int n, std::initializer_list<std::pair<int, int>> pairs) {
    Matching m = Matching::singles(n);
    for (auto [a, b] : pairs) m.match(a, b);
    detail::require_valid_matching(n, m);
    return m;
}

}  // namespace roundtable
