#include "descent/tableau.hpp"

#include <algorithm>
#include <stdexcept>

#include "descent/params.hpp"
#include "parse_util.hpp"

namespace descent {

namespace {

using Rows = std::vector<std::vector<int>>;

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

int row_len(const Rows& rows, int r) {
    return r >= 1 && r <= static_cast<int>(rows.size()) ? static_cast<int>(rows[r - 1].size()) : 0;
}

Cell insert_rows(Rows& rows, int x) {
    for (std::size_t r = 0;; ++r) {
        if (r == rows.size()) {
            rows.push_back({x});
            return {static_cast<int>(r) + 1, 1};
        }
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return {static_cast<int>(r) + 1, static_cast<int>(row.size())};
        }
        std::swap(*it, x);
    }
}

bool is_outer_corner(const Rows& rows, Cell c) {
    return c.row >= 1 && c.col >= 1 && row_len(rows, c.row) == c.col && row_len(rows, c.row + 1) < c.col;
}

int bump_out(Rows& rows, Cell corner) {
    require(is_outer_corner(rows, corner), "reverse bump: cell is not an outer corner");
    int y = rows[corner.row - 1].back();
    rows[corner.row - 1].pop_back();
    if (rows[corner.row - 1].empty()) rows.pop_back();
    for (int r = corner.row - 1; r >= 1; --r) {
        auto& row = rows[r - 1];
        auto it = std::lower_bound(row.begin(), row.end(), y);
        require(it != row.begin(), "reverse bump: tableau is not standard");
        --it;
        std::swap(*it, y);
    }
    return y;
}

void collect_syt(const std::vector<int>& target, Rows& rows, int next, int n, std::vector<Tableau>& out) {
    if (next > n) {
        out.emplace_back(rows);
        return;
    }
    for (std::size_t r = 0; r < target.size(); ++r) {
        const int len = r < rows.size() ? static_cast<int>(rows[r].size()) : 0;
        if (len >= target[r]) continue;
        if (r > 0 && static_cast<int>(rows[r - 1].size()) <= len) continue;
        if (r == rows.size()) rows.emplace_back();
        rows[r].push_back(next);
        collect_syt(target, rows, next + 1, n, out);
        rows[r].pop_back();
        if (rows[r].empty()) rows.pop_back();
    }
}

void collect_partitions(int remaining, int max_part, std::vector<int>& cur, std::vector<Shape>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        collect_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        require(parts_[i] > 0, "shape: parts must be positive");
        require(i == 0 || parts_[i] <= parts_[i - 1], "shape: parts must be weakly decreasing");
    }
}

int Shape::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

int Shape::row_length(int row) const {
    return row >= 1 && row <= height() ? parts_[row - 1] : 0;
}

Shape Shape::transpose() const {
    std::vector<int> t(parts_.empty() ? 0 : parts_.front(), 0);
    for (int p : parts_) {
        for (int c = 0; c < p; ++c) ++t[c];
    }
    return Shape(std::move(t));
}

int Shape::odd_cols() const {
    int k = 0;
    const Shape t = transpose();
    for (int c : t.parts()) k += c % 2;
    return k;
}

std::vector<Shape> partitions(int n) {
    require(n >= 0, "partitions: negative size");
    std::vector<Shape> out;
    std::vector<int> cur;
    collect_partitions(n, n, cur, out);
    return out;
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        require(!row.empty(), "tableau: empty row");
        require(r == 0 || row.size() <= rows_[r - 1].size(), "tableau: row lengths must weakly decrease");
        for (std::size_t c = 0; c < row.size(); ++c) {
            require(row[c] > 0, "tableau: entries must be positive");
            require(c == 0 || row[c - 1] < row[c], "tableau: rows must strictly increase");
            require(r == 0 || rows_[r - 1][c] < row[c], "tableau: columns must strictly increase");
        }
    }
    std::vector<int> all;
    for (const auto& row : rows_) all.insert(all.end(), row.begin(), row.end());
    std::sort(all.begin(), all.end());
    require(std::adjacent_find(all.begin(), all.end()) == all.end(), "tableau: repeated entry");
}

Shape Tableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return Shape(std::move(parts));
}

int Tableau::size() const {
    int s = 0;
    for (const auto& row : rows_) s += static_cast<int>(row.size());
    return s;
}

std::optional<Cell> Tableau::find(int x) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), x);
        if (it != row.end() && *it == x) {
            return Cell{static_cast<int>(r) + 1, static_cast<int>(it - row.begin()) + 1};
        }
    }
    return std::nullopt;
}

bool Tableau::is_standard() const {
    const int n = size();
    for (const auto& row : rows_) {
        for (int v : row) {
            if (v > n) return false;
        }
    }
    return true;  // distinct positive entries, all <= n
}

DescentSet des(const Tableau& t) {
    require(t.is_standard(), "tableau descent set: entries must be 1..n");
    const int n = t.size();
    std::vector<int> row_of(n + 1, 0);
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        for (int v : t.rows()[r]) row_of[v] = static_cast<int>(r);
    }
    DescentSet d(n, false);
    for (int i = 1; i < n; ++i) {
        if (row_of[i + 1] > row_of[i]) d.insert(i);
    }
    return d;
}

std::pair<Tableau, Cell> rs_insert(Tableau t, int x) {
    require(x > 0, "rs_insert: letters must be positive");
    require(!t.find(x), "rs_insert: letter already present");
    Rows rows = t.rows();
    const Cell added = insert_rows(rows, x);
    return {Tableau(std::move(rows)), added};
}

std::pair<Tableau, int> reverse_bump(Tableau t, Cell corner) {
    Rows rows = t.rows();
    const int y = bump_out(rows, corner);
    return {Tableau(std::move(rows)), y};
}

RsPair rs_pair(const Permutation& w) {
    Rows p, q;
    for (int i = 1; i <= w.size(); ++i) {
        const Cell c = insert_rows(p, w(i));
        if (c.row > static_cast<int>(q.size())) q.emplace_back();
        q[c.row - 1].push_back(i);
    }
    return {Tableau(std::move(p)), Tableau(std::move(q))};
}

Permutation rs_inverse(const Tableau& p, const Tableau& q) {
    require(p.shape() == q.shape(), "rs_inverse: shape mismatch");
    require(p.is_standard() && q.is_standard(), "rs_inverse: tableaux must be standard");
    const int n = p.size();
    Rows prow = p.rows();
    Rows qrow = q.rows();
    std::vector<int> w(n);
    for (int m = n; m >= 1; --m) {
        // m is the largest entry left in Q, so it sits at an outer corner.
        Cell c{};
        for (std::size_t r = 0; r < qrow.size(); ++r) {
            if (qrow[r].back() == m) c = {static_cast<int>(r) + 1, static_cast<int>(qrow[r].size())};
        }
        qrow[c.row - 1].pop_back();
        if (qrow[c.row - 1].empty()) qrow.pop_back();
        w[m - 1] = bump_out(prow, c);
    }
    return Permutation(std::move(w));
}

Tableau jdt_delete(Tableau t, int x) {
    const auto found = t.find(x);
    require(found.has_value(), "jdt_delete: letter absent");
    Rows rows = t.rows();
    int r = found->row;
    int c = found->col;
    while (true) {
        const bool has_right = c + 1 <= row_len(rows, r);
        const bool has_below = c <= row_len(rows, r + 1);
        if (!has_right && !has_below) break;
        int nr = r, nc = c + 1;
        if (!has_right || (has_below && rows[r][c - 1] < rows[r - 1][c])) {
            nr = r + 1;
            nc = c;
        }
        rows[r - 1][c - 1] = rows[nr - 1][nc - 1];
        r = nr;
        c = nc;
    }
    rows[r - 1].pop_back();
    if (rows[r - 1].empty()) rows.pop_back();
    return Tableau(std::move(rows));
}

Tableau reverse_jdt_place(Tableau t, int x, Cell corner) {
    require(x > 0, "reverse_jdt_place: letters must be positive");
    require(!t.find(x), "reverse_jdt_place: letter already present");
    Rows rows = t.rows();
    const int h = static_cast<int>(rows.size());
    require(corner.row >= 1 && corner.row <= h + 1 && corner.col == row_len(rows, corner.row) + 1 &&
                (corner.row == 1 || row_len(rows, corner.row - 1) >= corner.col),
            "reverse_jdt_place: cell is not addable");
    if (corner.row == h + 1) rows.emplace_back();
    rows[corner.row - 1].push_back(0);
    int r = corner.row;
    int c = corner.col;
    while (true) {
        const int left = c > 1 ? rows[r - 1][c - 2] : 0;
        const int above = r > 1 ? rows[r - 2][c - 1] : 0;
        if (std::max(left, above) <= x) break;
        if (left > above) {
            rows[r - 1][c - 1] = left;
            --c;
        } else {
            rows[r - 1][c - 1] = above;
            --r;
        }
    }
    rows[r - 1][c - 1] = x;
    return Tableau(std::move(rows));
}

std::pair<Tableau, int> q_inverse_step(const Tableau& current) {
    const auto cols = current.shape().transpose().parts();
    int col = 0;
    for (int c = static_cast<int>(cols.size()); c >= 1; --c) {
        if (cols[c - 1] % 2 == 1) {
            col = c;
            break;
        }
    }
    require(col > 0, "q_inverse_step: no odd column left");
    return reverse_bump(current, Cell{cols[col - 1], col});
}

Permutation q_inverse_shuffle(const Tableau& q) {
    require(q.is_standard(), "q_inverse_shuffle: tableau must be standard");
    const int n = q.size();
    const int k = q.shape().odd_cols();

    std::vector<int> image(n, 0);
    Tableau t = q;
    for (int m = n; m > n - k; --m) {
        auto [rest, position] = q_inverse_step(t);
        image[position - 1] = m;
        t = std::move(rest);
    }

    // The residue records the positions of the small letters; standardising
    // it gives Q_sigma for the fixed-point-free involution sigma.
    std::vector<int> labels;
    for (const auto& row : t.rows()) labels.insert(labels.end(), row.begin(), row.end());
    std::sort(labels.begin(), labels.end());
    Rows std_rows = t.rows();
    for (auto& row : std_rows) {
        for (int& v : row) v = static_cast<int>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin()) + 1;
    }
    const Tableau q_sigma(std::move(std_rows));
    const Permutation sigma = rs_inverse(q_sigma, q_sigma);

    int next = 1;
    for (int i = 0; i < n; ++i) {
        if (image[i] == 0) image[i] = sigma(next++);
    }
    return Permutation(std::move(image));
}

Permutation q_inverse_shuffle(const Tableau& q, int k) {
    if (q.shape().odd_cols() != k) {
        throw std::invalid_argument("q_inverse_shuffle: tableau has " + std::to_string(q.shape().odd_cols()) +
                                    " odd columns, expected " + std::to_string(k));
    }
    return q_inverse_shuffle(q);
}

std::vector<Tableau> enumerate_syt(const Shape& shape) {
    std::vector<Tableau> out;
    Rows rows;
    collect_syt(shape.parts(), rows, 1, shape.size(), out);
    return out;
}

std::vector<Tableau> enumerate_syt_n(int n) {
    std::vector<Tableau> out;
    for (const Shape& s : partitions(n)) {
        auto part = enumerate_syt(s);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<Tableau> enumerate_syt_nk(int n, int k) {
    check_nk(n, k);
    std::vector<Tableau> out;
    for (const Shape& s : partitions(n)) {
        if (s.odd_cols() != k) continue;
        auto part = enumerate_syt(s);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<Tableau> enumerate_syt_nkj(int n, int k, int j) {
    check_nkj(n, k, j);
    std::vector<Tableau> out;
    for (const Shape& s : partitions(n)) {
        if (s.odd_cols() != k || s.height() < 2 * j || s.height() > 2 * j + 1) continue;
        auto part = enumerate_syt(s);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

Tableau parse_tableau(std::string_view text) {
    detail::Cursor cur(text);
    Rows rows;
    if (cur.at_end() || cur.accept('-')) {
        if (!cur.at_end()) cur.fail("trailing characters");
        return Tableau{};
    }
    do {
        std::vector<int> row{cur.integer()};
        while (cur.accept(',')) row.push_back(cur.integer());
        rows.push_back(std::move(row));
    } while (cur.accept('/'));
    if (!cur.at_end()) cur.fail("trailing characters");
    return Tableau(std::move(rows));
}

std::string format_tableau(const Tableau& t) {
    if (t.empty()) return "-";
    std::string out;
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        if (r > 0) out += '/';
        for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
            if (c > 0) out += ',';
            out += std::to_string(t.rows()[r][c]);
        }
    }
    return out;
}

Shape parse_shape(std::string_view text) {
    detail::Cursor cur(text);
    std::vector<int> parts;
    if (cur.at_end() || cur.accept('-')) {
        if (!cur.at_end()) cur.fail("trailing characters");
        return Shape{};
    }
    parts.push_back(cur.integer());
    while (cur.accept(',')) parts.push_back(cur.integer());
    if (!cur.at_end()) cur.fail("trailing characters");
    return Shape(std::move(parts));
}

std::string format_shape(const Shape& s) {
    if (s.parts().empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < s.parts().size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(s.parts()[i]);
    }
    return out;
}

}  // namespace descent
