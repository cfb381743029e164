#include "descent/matching.hpp"

#include <algorithm>
#include <stdexcept>

#include "parse_util.hpp"

namespace descent {

namespace {

// Arcs (a,b) and (c,d) in the upper half plane meet iff their endpoints interleave.
bool arcs_cross(int a, int b, int c, int d) {
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

// Strictly inside the arc of the circle running clockwise from a to b.
bool strictly_between_cyclic(int a, int b, int x) {
    if (a < b) return a < x && x < b;
    return x > a || x < b;
}

// Chords with four distinct endpoints meet iff exactly one endpoint of the
// second lies on each side of the first.
bool chords_cross(int a, int b, int c, int d) {
    return strictly_between_cyclic(a, b, c) != strictly_between_cyclic(a, b, d);
}

void collect_matchings(std::vector<int>& partner, int budget, std::vector<Matching>& out, int n) {
    int first = 0;
    int free = 0;
    for (int i = n; i >= 1; --i) {
        if (partner[i - 1] == 0) {
            first = i;
            ++free;
        }
    }
    if (first == 0) {
        std::vector<std::pair<int, int>> arcs;
        for (int i = 1; i <= n; ++i) {
            if (partner[i - 1] > i) arcs.emplace_back(i, partner[i - 1]);
        }
        out.emplace_back(n, arcs);
        return;
    }
    // -1 marks a point deliberately left unmatched.
    if (budget > 0) {
        partner[first - 1] = -1;
        collect_matchings(partner, budget - 1, out, n);
        partner[first - 1] = 0;
    }
    if (free - budget < 2) return;
    for (int j = first + 1; j <= n; ++j) {
        if (partner[j - 1] != 0) continue;
        partner[first - 1] = j;
        partner[j - 1] = first;
        collect_matchings(partner, budget, out, n);
        partner[first - 1] = 0;
        partner[j - 1] = 0;
    }
}

// Longest chain of arcs spanning one gap, monotone in both endpoints.
int longest_chain(std::vector<Arc> spanning, bool rights_increase) {
    std::sort(spanning.begin(), spanning.end());
    const std::size_t m = spanning.size();
    std::vector<int> best(m, 1);
    int answer = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const bool ok = rights_increase ? spanning[j].right < spanning[i].right
                                            : spanning[j].right > spanning[i].right;
            if (ok) best[i] = std::max(best[i], best[j] + 1);
        }
        answer = std::max(answer, best[i]);
    }
    return answer;
}

int gap_scan(const Matching& m, bool crossing) {
    const auto arcs = m.arcs();
    int answer = 0;
    for (int t = 1; t < m.n(); ++t) {
        std::vector<Arc> spanning;
        for (const Arc& a : arcs) {
            if (a.left <= t && t < a.right) spanning.push_back(a);
        }
        answer = std::max(answer, longest_chain(std::move(spanning), crossing));
    }
    return answer;
}

int subset_scan(const Matching& m, bool crossing) {
    const auto arcs = m.arcs();
    const int r = static_cast<int>(arcs.size());
    if (r > 16) throw std::invalid_argument("cr/ne oracle: more than 16 arcs");
    int answer = 0;
    for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
        std::vector<Arc> chosen;
        for (int i = 0; i < r; ++i) {
            if (mask & (1u << i)) chosen.push_back(arcs[i]);
        }
        const int size = static_cast<int>(chosen.size());
        if (size <= answer) continue;
        // chosen is sorted by left endpoint: i_1 < ... < i_r.
        bool ok = chosen.back().left < std::min_element(chosen.begin(), chosen.end(), [](const Arc& x, const Arc& y) {
                                           return x.right < y.right;
                                       })->right;
        for (int i = 1; ok && i < size; ++i) {
            ok = crossing ? chosen[i - 1].right < chosen[i].right : chosen[i - 1].right > chosen[i].right;
        }
        if (ok) answer = size;
    }
    return answer;
}

}  // namespace

Matching::Matching(int n, const std::vector<std::pair<int, int>>& arcs) : partner_(n, 0) {
    for (auto [a, b] : arcs) {
        if (a < 1 || a > n || b < 1 || b > n) {
            throw std::invalid_argument("matching: endpoint outside [" + std::to_string(n) + "]");
        }
        if (a == b) throw std::invalid_argument("matching: arc with equal endpoints");
        if (partner_[a - 1] != 0 || partner_[b - 1] != 0) {
            throw std::invalid_argument("matching: arcs are not disjoint at " + std::to_string(a) + "-" +
                                        std::to_string(b));
        }
        partner_[a - 1] = b;
        partner_[b - 1] = a;
    }
}

std::vector<Arc> Matching::arcs() const {
    std::vector<Arc> out;
    for (int i = 1; i <= n(); ++i) {
        if (partner(i) > i) out.push_back({i, partner(i)});
    }
    return out;
}

int Matching::unmatched() const {
    return static_cast<int>(std::count(partner_.begin(), partner_.end(), 0));
}

Permutation to_involution(const Matching& m) {
    std::vector<int> images(m.n());
    for (int i = 1; i <= m.n(); ++i) images[i - 1] = m.matched(i) ? m.partner(i) : i;
    return Permutation(std::move(images));
}

Matching from_involution(const Permutation& p) {
    if (!is_involution(p)) throw std::invalid_argument("from_involution: permutation is not an involution");
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= p.size(); ++i) {
        if (p(i) > i) arcs.emplace_back(i, p(i));
    }
    return Matching(p.size(), arcs);
}

DescentSet des(const Matching& m) { return des(to_involution(m)); }

DescentSet mdes(const Matching& m) {
    const int n = m.n();
    DescentSet d(n, false);
    for (int i = 1; i < n; ++i) {
        const int a = m.partner(i);
        const int b = m.partner(i + 1);
        const bool adjacent = a == i + 1;
        const bool crossing = a != 0 && b != 0 && !adjacent && arcs_cross(i, a, i + 1, b);
        const bool gap_then_arc = a == 0 && b != 0;
        if (adjacent || crossing || gap_then_arc) d.insert(i);
    }
    return d;
}

DescentSet cmdes(const Matching& m) {
    const int n = m.n();
    DescentSet d(n, true);
    for (int i = 1; i <= n; ++i) {
        const int j = i % n + 1;
        if (j == i) continue;
        const int a = m.partner(i);
        const int b = m.partner(j);
        const bool adjacent = a == j;
        const bool crossing = a != 0 && b != 0 && !adjacent && chords_cross(i, a, j, b);
        const bool gap_then_arc = a == 0 && b != 0;
        if (adjacent || crossing || gap_then_arc) d.insert(i);
    }
    return d;
}

Matching rotate(const Matching& m) {
    const int n = m.n();
    std::vector<std::pair<int, int>> arcs;
    for (const Arc& a : m.arcs()) arcs.emplace_back(a.left % n + 1, a.right % n + 1);
    return Matching(n, arcs);
}

int crossing_number(const Matching& m) { return gap_scan(m, true); }
int nesting_number(const Matching& m) { return gap_scan(m, false); }
int crossing_number(const Permutation& involution) { return crossing_number(from_involution(involution)); }
int nesting_number(const Permutation& involution) { return nesting_number(from_involution(involution)); }

int crossing_number_oracle(const Matching& m) { return subset_scan(m, true); }
int nesting_number_oracle(const Matching& m) { return subset_scan(m, false); }

StatTuple stats(const Matching& m) {
    return {des(m), mdes(m), cmdes(m), crossing_number(m), nesting_number(m), m.unmatched()};
}

std::vector<Matching> enumerate_matchings(int n, int k) {
    check_nk(n, k);
    std::vector<Matching> out;
    std::vector<int> partner(n, 0);
    collect_matchings(partner, k, out, n);
    return out;
}

std::vector<Matching> enumerate_matchings(int n) {
    std::vector<Matching> out;
    for (int k = n % 2; k <= n; k += 2) {
        auto part = enumerate_matchings(n, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<Permutation> enumerate_involutions(int n, int k) {
    std::vector<Permutation> out;
    for (const Matching& m : enumerate_matchings(n, k)) out.push_back(to_involution(m));
    return out;
}

std::vector<Permutation> enumerate_inkj(int n, int k, int j) {
    check_nkj(n, k, j);
    std::vector<Permutation> out;
    for (const Matching& m : enumerate_matchings(n, k)) {
        if (nesting_number(m) == j) out.push_back(to_involution(m));
    }
    return out;
}

Matching parse_matching(std::string_view text, int n) {
    detail::Cursor cur(text);
    std::vector<std::pair<int, int>> arcs;
    if (cur.at_end() || cur.accept('-')) {
        if (!cur.at_end()) cur.fail("trailing characters");
        return Matching(n);
    }
    do {
        const int a = cur.integer();
        cur.expect('-');
        const int b = cur.integer();
        arcs.emplace_back(a, b);
    } while (cur.accept(','));
    if (!cur.at_end()) cur.fail("trailing characters");
    return Matching(n, arcs);
}

std::string format_matching(const Matching& m) {
    std::string out;
    for (const Arc& a : m.arcs()) {
        if (!out.empty()) out += ',';
        out += std::to_string(a.left) + "-" + std::to_string(a.right);
    }
    return out.empty() ? "-" : out;
}

}  // namespace descent
