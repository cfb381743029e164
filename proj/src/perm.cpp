#include "descent/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "parse_util.hpp"

namespace descent {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    std::vector<char> seen(n + 1, 0);
    for (int v : images_) {
        if (v < 1 || v > n) {
            throw std::invalid_argument("permutation: value " + std::to_string(v) + " outside [" +
                                        std::to_string(n) + "]");
        }
        if (seen[v]) throw std::invalid_argument("permutation: repeated value " + std::to_string(v));
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < size(); ++i) inv[images_[i] - 1] = i + 1;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (other.size() != size()) throw std::invalid_argument("permutation: size mismatch in compose");
    std::vector<int> out(images_.size());
    for (int i = 1; i <= size(); ++i) out[i - 1] = (*this)(other(i));
    return Permutation(std::move(out));
}

std::vector<Permutation> enumerate_permutations(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_permutations: negative size");
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

DescentSet des(const Permutation& p) {
    DescentSet d(p.size(), false);
    for (int i = 1; i < p.size(); ++i) {
        if (p(i) > p(i + 1)) d.insert(i);
    }
    return d;
}

DescentSet cellini_cdes(const Permutation& p) {
    const int n = p.size();
    DescentSet d(n, true);
    for (int i = 1; i <= n; ++i) {
        const int next = i == n ? p(1) : p(i + 1);
        if (p(i) > next) d.insert(i);
    }
    return d;
}

Permutation cellini_rotate(const Permutation& p) {
    const int n = p.size();
    if (n == 0) return p;
    std::vector<int> out(n);
    out[0] = p(n);
    for (int i = 1; i < n; ++i) out[i] = p(i);
    return Permutation(std::move(out));
}

std::vector<int> fixed_points(const Permutation& p) {
    std::vector<int> out;
    for (int i = 1; i <= p.size(); ++i) {
        if (p(i) == i) out.push_back(i);
    }
    return out;
}

CycleType cycle_type(const Permutation& p) {
    const int n = p.size();
    std::vector<char> seen(n + 1, 0);
    CycleType ct;
    for (int i = 1; i <= n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = p(j)) {
            seen[j] = 1;
            ++len;
        }
        ct.parts.push_back(len);
    }
    std::sort(ct.parts.begin(), ct.parts.end(), std::greater<>());
    return ct;
}

bool is_involution(const Permutation& p) {
    for (int i = 1; i <= p.size(); ++i) {
        if (p(p(i)) != i) return false;
    }
    return true;
}

Permutation conjugate_w0(const Permutation& p) {
    const int n = p.size();
    std::vector<int> out(n);
    for (int i = 1; i <= n; ++i) out[i - 1] = n + 1 - p(n + 1 - i);
    return Permutation(std::move(out));
}

Permutation standardize(std::span<const int> word) {
    const int n = static_cast<int>(word.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return word[a] < word[b]; });
    std::vector<int> out(n);
    for (int r = 0; r < n; ++r) {
        if (r > 0 && word[order[r]] == word[order[r - 1]]) {
            throw std::invalid_argument("standardize: repeated letter " + std::to_string(word[order[r]]));
        }
        out[order[r]] = r + 1;
    }
    return Permutation(std::move(out));
}

std::vector<Permutation> shuffles(std::span<const int> a, std::span<const int> b) {
    std::vector<int> letters(a.begin(), a.end());
    letters.insert(letters.end(), b.begin(), b.end());
    std::vector<int> sorted = letters;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("shuffles: letter sets overlap");
    }
    const int na = static_cast<int>(a.size());
    const int n = static_cast<int>(letters.size());
    auto rank = [&](int letter) {
        return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), letter) - sorted.begin()) + 1;
    };

    std::vector<Permutation> out;
    // Combinations of positions for `a`, in lexicographic order.
    std::vector<int> pos(na);
    std::iota(pos.begin(), pos.end(), 0);
    while (true) {
        std::vector<int> word(n);
        std::vector<char> taken(n, 0);
        for (int t = 0; t < na; ++t) {
            word[pos[t]] = rank(a[t]);
            taken[pos[t]] = 1;
        }
        int bi = 0;
        for (int i = 0; i < n; ++i) {
            if (!taken[i]) word[i] = rank(b[bi++]);
        }
        out.emplace_back(std::move(word));

        int t = na - 1;
        while (t >= 0 && pos[t] == n - na + t) --t;
        if (t < 0) break;
        ++pos[t];
        for (int u = t + 1; u < na; ++u) pos[u] = pos[u - 1] + 1;
    }
    return out;
}

Permutation parse_cycles(std::string_view text, int n) {
    if (n < 0) throw std::invalid_argument("cycles: negative size");
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    std::vector<char> used(n + 1, 0);
    detail::Cursor cur(text);
    while (!cur.at_end()) {
        cur.expect('(');
        std::vector<int> cycle;
        if (!cur.peek(')')) {
            cycle.push_back(cur.integer());
            while (cur.accept(',')) cycle.push_back(cur.integer());
        }
        cur.expect(')');
        for (int v : cycle) {
            if (v < 1 || v > n) {
                throw std::invalid_argument("cycles: entry " + std::to_string(v) + " outside [" +
                                            std::to_string(n) + "]");
            }
            if (used[v]) throw std::invalid_argument("cycles: overlapping cycles at " + std::to_string(v));
            used[v] = 1;
        }
        for (std::size_t t = 0; t < cycle.size(); ++t) {
            images[cycle[t] - 1] = cycle[(t + 1) % cycle.size()];
        }
    }
    return Permutation(std::move(images));
}

std::string format_cycles(const Permutation& p) {
    const int n = p.size();
    std::vector<char> seen(n + 1, 0);
    std::string out;
    for (int i = 1; i <= n; ++i) {
        if (seen[i] || p(i) == i) continue;
        out += '(';
        for (int j = i; !seen[j]; j = p(j)) {
            seen[j] = 1;
            if (j != i) out += ',';
            out += std::to_string(j);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation parse_one_line(std::string_view text) {
    detail::Cursor cur(text);
    cur.expect('[');
    std::vector<int> images;
    if (!cur.peek(']')) {
        images.push_back(cur.integer());
        while (cur.accept(',')) images.push_back(cur.integer());
    }
    cur.expect(']');
    if (!cur.at_end()) throw std::invalid_argument("one-line: trailing characters");
    return Permutation(std::move(images));
}

std::string format_one_line(const Permutation& p) {
    std::string out = "[";
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(p(i));
    }
    return out + "]";
}

}  // namespace descent
