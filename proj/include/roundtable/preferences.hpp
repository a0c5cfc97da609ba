#pragma once

// A table of n seats in a circle. Every seat independently prefers talking to
// its left neighbor (L) or its right neighbor (R); being in a conversation the
// seat prefers beats any other conversation, which beats sitting alone.
//
// A preference string is stored as one machine word: bit i set means seat i
// prefers its right neighbor. That makes "all strings of length n" the integer
// range [0, 2^n) and caps n at 64, far above every exhaustive-sweep cap here.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace roundtable {

inline constexpr int kMaxSeats = 64;

inline std::uint64_t seat_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

enum class Regularity { Regular, IrregularAllL, IrregularAllR };

struct Preferences {
    int n = 0;
    std::uint64_t bits = 0;  // bit i: seat i prefers right

    Preferences(int n_, std::uint64_t bits_) : n(n_), bits(bits_) {
        if (n < 1 || n > kMaxSeats)
            throw std::invalid_argument("preferences need 1 <= n <= 64");
        if (bits & ~seat_mask(n))
            throw std::invalid_argument("preference bits beyond seat n-1");
    }

    static Preferences parse(std::string_view s) {
        if (s.empty() || s.size() > kMaxSeats)
            throw std::invalid_argument("preference string needs 1..64 symbols");
        std::uint64_t b = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == 'R')
                b |= std::uint64_t{1} << i;
            else if (s[i] != 'L')
                throw std::invalid_argument("preference symbols are L and R only");
        }
        return Preferences(static_cast<int>(s.size()), b);
    }

    int wrap(int seat) const {
        int r = seat % n;
        return r < 0 ? r + n : r;
    }

    bool prefers_right(int seat) const { return (bits >> wrap(seat)) & 1; }

    std::string str() const {
        std::string s(static_cast<std::size_t>(n), 'L');
        for (int i = 0; i < n; ++i)
            if (prefers_right(i)) s[static_cast<std::size_t>(i)] = 'R';
        return s;
    }

    friend bool operator==(const Preferences&, const Preferences&) = default;
};

inline Regularity classify(const Preferences& p) {
    if (p.bits == 0) return Regularity::IrregularAllL;
    if (p.bits == seat_mask(p.n)) return Regularity::IrregularAllR;
    return Regularity::Regular;
}

inline bool is_regular(const Preferences& p) { return classify(p) == Regularity::Regular; }

// Seats (i, i+1) where i points right and i+1 points left: the two want each
// other more than anyone else, so every stable matching must pair them.
inline std::vector<std::pair<int, int>> natural_pairs(const Preferences& p) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < p.n; ++i) {
        const int j = p.wrap(i + 1);
        if (p.prefers_right(i) && !p.prefers_right(j) && i != j) out.emplace_back(i, j);
    }
    return out;
}

namespace detail {
inline void require_regular(const Preferences& p, const char* what) {
    if (!is_regular(p))
        throw std::domain_error(std::string(what) + " is defined only for regular preferences");
}
}  // namespace detail

// Distance from seat i to the nearest R scanning left (the seat itself not
// included). Finite only when some R exists, i.e. the string is not all-L;
// all-R is rejected too so both scan distances share one domain.
inline int left_distance(const Preferences& p, int seat) {
    detail::require_regular(p, "left_distance");
    for (int k = 1; k <= p.n; ++k)
        if (p.prefers_right(seat - k)) return k;
    throw std::logic_error("unreachable: regular string has an R");
}

// Distance from seat i to the nearest L scanning right.
inline int right_distance(const Preferences& p, int seat) {
    detail::require_regular(p, "right_distance");
    for (int k = 1; k <= p.n; ++k)
        if (!p.prefers_right(seat + k)) return k;
    throw std::logic_error("unreachable: regular string has an L");
}

// Some neighbor points at this seat, so no stable matching may leave it alone.
inline bool is_preferred(const Preferences& p, int seat) {
    return p.prefers_right(seat - 1) || !p.prefers_right(seat + 1);
}

}  // namespace roundtable
