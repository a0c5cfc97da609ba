#pragma once

// Stability of conversation matchings, checked two independent ways, plus the
// constructive description of the stable outcome for every preference string.
//
// A matching is unstable when two adjacent seats could defect: both strictly
// prefer talking to each other over what they currently have. Three regimes:
//   regular strings (both symbols occur)  -> exactly one stable matching;
//   all same symbol, even n               -> exactly the two perfect matchings;
//   all same symbol, odd n                -> no stable matching at all.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "roundtable/matching.hpp"
#include "roundtable/preferences.hpp"

namespace roundtable {

inline constexpr int kDefaultMatchingCap = 16;

enum class StableTag { UniqueStable, TwoPerfect, NoStable };

struct StableOutcome {
    StableTag tag = StableTag::NoStable;
    std::vector<Matching> matchings;  // 1, 2 or 0 entries
};

namespace detail {

// Would `seat` strictly rather talk to `neighbor` than keep its current state?
// Alone loses to any conversation; a conversation loses only to the preferred
// neighbor.
inline bool gains_by_switching(const Preferences& p, const Matching& m, int seat, int neighbor) {
    const int cur = m.at(seat);
    if (cur == neighbor) return false;
    if (cur == seat) return true;
    return p.prefers_right(seat) ? neighbor == p.wrap(seat + 1) : neighbor == p.wrap(seat - 1);
}

}  // namespace detail

// Definitional check: no adjacent pair wants to defect together. The single
// seat at n == 1 is treated as unstable (it is wanted by its own neighborhood
// yet necessarily alone), which keeps this checker, the characterization below
// and the no-stable-matching verdict for odd irregular strings consistent.
inline bool is_stable_def(const Preferences& p, const Matching& m) {
    detail::require_valid_matching(p.n, m);
    if (p.n == 1) return false;
    for (int i = 0; i < p.n; ++i) {
        const int j = p.wrap(i + 1);
        if (detail::gains_by_switching(p, m, i, j) && detail::gains_by_switching(p, m, j, i))
            return false;
    }
    return true;
}

// Structural check, equivalent to the definition: every natural pair talks,
// no preferred seat is alone, and no two adjacent seats are both alone.
inline bool is_stable_characterized(const Preferences& p, const Matching& m) {
    detail::require_valid_matching(p.n, m);
    for (auto [a, b] : natural_pairs(p))
        if (m.at(a) != b) return false;
    for (int i = 0; i < p.n; ++i)
        if (is_preferred(p, i) && m.unmatched(i)) return false;
    for (int i = 0; i < p.n; ++i) {
        const int j = p.wrap(i + 1);
        if (j != i && m.unmatched(i) && m.unmatched(j)) return false;
    }
    return true;
}

// Seat i is alone in the stable matching of a regular string exactly when both
// its scan distances are even.
inline bool is_unmatched(const Preferences& p, int seat) {
    detail::require_regular(p, "is_unmatched");
    return left_distance(p, seat) % 2 == 0 && right_distance(p, seat) % 2 == 0;
}

// Everyone talks exactly when all the gaps between consecutive natural pairs
// have even length (the gap is the run of seats strictly between two pairs).
inline bool everyone_matched(const Preferences& p) {
    detail::require_regular(p, "everyone_matched");
    const auto pairs = natural_pairs(p);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const int from = pairs[k].second;                          // L seat of this pair
        const int to = pairs[(k + 1) % pairs.size()].first;        // R seat of the next
        const int gap = p.wrap(to - from - 1);
        if (gap % 2 != 0) return false;
    }
    return true;
}

// --- zone decomposition -----------------------------------------------------
//
// Between two consecutive natural pairs the seats always read L...LR...R.
// Zone 1 is the longest even run of leading L's (they pair off left to right),
// zone 3 the longest even run of trailing R's (they pair off right to left),
// and zone 2 is what remains: nothing, a lone L, a lone R (that seat stays
// alone), or a final LR pair that talks.

enum class Zone2 { Empty, SingleL, SingleR, PairLR };

struct Stretch {
    int opening_pair;  // R seat of the natural pair just before this stretch
    int begin;         // first seat of the stretch
    int length;        // number of seats, possibly 0
    int zone1_len;     // even
    int zone3_len;     // even
    Zone2 zone2 = Zone2::Empty;
};

struct ZoneDecomposition {
    std::vector<Stretch> stretches;
};

inline ZoneDecomposition zone_decomposition(const Preferences& p) {
    detail::require_regular(p, "zone_decomposition");
    const auto pairs = natural_pairs(p);
    ZoneDecomposition z;
    z.stretches.reserve(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        Stretch st;
        st.opening_pair = pairs[k].first;
        st.begin = p.wrap(pairs[k].second + 1);
        st.length = p.wrap(pairs[(k + 1) % pairs.size()].first - pairs[k].second - 1);

        int lrun = 0;
        while (lrun < st.length && !p.prefers_right(st.begin + lrun)) ++lrun;
        const int rrun = st.length - lrun;
        for (int j = lrun; j < st.length; ++j)
            if (!p.prefers_right(st.begin + j))
                throw std::logic_error("stretch between natural pairs is not of the form L*R*");

        st.zone1_len = lrun - (lrun % 2);
        st.zone3_len = rrun - (rrun % 2);
        if (lrun % 2 == 0 && rrun % 2 == 0)
            st.zone2 = Zone2::Empty;
        else if (lrun % 2 == 1 && rrun % 2 == 0)
            st.zone2 = Zone2::SingleL;
        else if (lrun % 2 == 0)
            st.zone2 = Zone2::SingleR;
        else
            st.zone2 = Zone2::PairLR;
        z.stretches.push_back(st);
    }
    return z;
}

// The one stable matching of a regular string: natural pairs talk, each zone 1
// and zone 3 pairs off internally, a PairLR zone 2 talks, single-seat zone 2
// stays alone.
inline Matching unique_stable_matching(const Preferences& p) {
    detail::require_regular(p, "unique_stable_matching");
    Matching m = Matching::singles(p.n);
    for (auto [a, b] : natural_pairs(p)) m.match(a, b);
    for (const Stretch& st : zone_decomposition(p).stretches) {
        for (int j = 0; j + 1 < st.zone1_len; j += 2)
            m.match(p.wrap(st.begin + j), p.wrap(st.begin + j + 1));
        const int end = p.wrap(st.begin + st.length - 1);
        for (int j = 0; j + 1 < st.zone3_len; j += 2)
            m.match(p.wrap(end - j), p.wrap(end - j - 1));
        if (st.zone2 == Zone2::PairLR) {
            const int i = p.wrap(st.begin + st.zone1_len);
            m.match(i, p.wrap(i + 1));
        }
    }
    return m;
}

// Full stable outcome for any string. Irregular strings have no natural pairs:
// even n admits exactly the two perfect matchings, odd n admits nothing.
inline StableOutcome stable_set(const Preferences& p) {
    StableOutcome out;
    if (is_regular(p)) {
        out.tag = StableTag::UniqueStable;
        out.matchings.push_back(unique_stable_matching(p));
        return out;
    }
    if (p.n % 2 != 0) {
        out.tag = StableTag::NoStable;
        return out;
    }
    out.tag = StableTag::TwoPerfect;
    Matching even = Matching::singles(p.n);
    for (int i = 0; i + 1 < p.n; i += 2) even.match(i, i + 1);
    Matching odd = Matching::singles(p.n);
    for (int i = 1; i < p.n; i += 2) odd.match(i, p.wrap(i + 1));
    out.matchings.push_back(even);  // the matching containing (0,1) comes first
    out.matchings.push_back(odd);   // degenerate n == 2: same matching twice
    return out;
}

// All matchings of the n-cycle, smallest-cap brute force. Matchings correspond
// to sets of edges (i, i+1) with no two sets sharing a seat, i.e. bitmasks s
// with s & rotate(s) == 0.
inline std::vector<Matching> enumerate_matchings(int n, int cap = kDefaultMatchingCap) {
    if (n < 1) throw std::invalid_argument("enumerate_matchings needs n >= 1");
    if (n > cap) throw std::length_error("enumerate_matchings: n exceeds the brute-force cap");
    std::vector<Matching> out;
    if (n == 1) {
        out.push_back(Matching::singles(1));
        return out;
    }
    if (n == 2) {
        out.push_back(make_matching(2, {{0, 1}}));
        out.push_back(Matching::singles(2));
        std::sort(out.begin(), out.end());
        return out;
    }
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < total; ++s) {
        const std::uint64_t rot = ((s << 1) | (s >> (n - 1))) & seat_mask(n);
        if (s & rot) continue;
        Matching m = Matching::singles(n);
        for (int i = 0; i < n; ++i)
            if ((s >> i) & 1) m.match(i, (i + 1) % n);
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Stable matchings found by checking every matching against the definition.
// Oracle for the constructive routines above, never a replacement for them.
inline std::vector<Matching> all_stable_matchings_bruteforce(const Preferences& p,
                                                             int cap = kDefaultMatchingCap) {
    std::vector<Matching> out;
    for (Matching& m : enumerate_matchings(p.n, cap))
        if (is_stable_def(p, m)) out.push_back(std::move(m));
    return out;
}

}  // namespace roundtable
