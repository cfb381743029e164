#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "descent/descent_set.hpp"
#include "descent/perm.hpp"

namespace descent {

/// Integer partition given by its row lengths.
class Shape {
public:
    Shape() = default;
    /// Throws unless `parts` is weakly decreasing and positive.
    explicit Shape(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int height() const { return static_cast<int>(parts_.size()); }
    int size() const;
    /// Row length, 0 beyond the last row. Rows are 1-based.
    int row_length(int row) const;
    Shape transpose() const;
    /// Number of odd-length columns (odd parts of the transpose).
    int odd_cols() const;

    friend bool operator==(const Shape&, const Shape&) = default;
    friend auto operator<=>(const Shape&, const Shape&) = default;

private:
    std::vector<int> parts_;
};

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Shape> partitions(int n);

struct Cell {
    int row = 0;  // 1-based
    int col = 0;  // 1-based
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Row-major tableau with distinct positive entries, strictly increasing
/// along rows and down columns. Entries need not be 1..n: the tableaux that
/// appear midway through Sundaram's bijection carry arbitrary labels.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Shape shape() const;
    int size() const;
    int height() const { return static_cast<int>(rows_.size()); }
    bool empty() const { return rows_.empty(); }
    int at(Cell c) const { return rows_[c.row - 1][c.col - 1]; }
    std::optional<Cell> find(int x) const;
    /// True when the entries are exactly 1..size().
    bool is_standard() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau&, const Tableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// {i : i+1 lies in a strictly lower row than i}. Requires entries 1..n.
DescentSet des(const Tableau& t);

/// Schensted row insertion; returns the new tableau and the cell it added.
std::pair<Tableau, Cell> rs_insert(Tableau t, int x);
/// Inverse of row insertion: empties the outer corner `corner` and bumps
/// upward, returning the tableau and the letter ejected from row 1.
std::pair<Tableau, int> reverse_bump(Tableau t, Cell corner);

struct RsPair {
    Tableau p;  // insertion tableau
    Tableau q;  // recording tableau
};
RsPair rs_pair(const Permutation& w);
Permutation rs_inverse(const Tableau& p, const Tableau& q);

/// Removes x and slides the hole out to an outer corner (jeu de taquin).
Tableau jdt_delete(Tableau t, int x);
/// Opens a hole at the outer corner `corner`, slides it inward past every
/// left/above neighbour larger than x, then writes x into it. Inverts
/// jdt_delete when `corner` is the cell jdt_delete vacated.
Tableau reverse_jdt_place(Tableau t, int x, Cell corner);

/// The unique word tau in (fixed-point-free involutions on [n-k]) shuffled with
/// [n-k+1..n] whose recording tableau is q, where k = odd_cols(shape(q)).
Permutation q_inverse_shuffle(const Tableau& q);
/// Same, but checks the odd-column count against `k`.
Permutation q_inverse_shuffle(const Tableau& q, int k);

/// Intermediate state of q_inverse_shuffle after peeling one letter; exposed
/// for tests. Returns the remaining tableau and tau^{-1}(m) for the current
/// largest letter m.
std::pair<Tableau, int> q_inverse_step(const Tableau& current);

// Enumeration. Tableaux of one shape are produced by placing 1..n into
// addable cells, topmost row first; shapes follow the order of `partitions`.
std::vector<Tableau> enumerate_syt(const Shape& shape);
std::vector<Tableau> enumerate_syt_n(int n);
/// SYT of size n with exactly k odd columns. Requires n-k even.
std::vector<Tableau> enumerate_syt_nk(int n, int k);
/// Further restricted to 2j <= height <= 2j+1.
std::vector<Tableau> enumerate_syt_nkj(int n, int k, int j);

// Codecs: tableau "1,2,4,6/3,5,8/7" ("-" or "" for empty), shape "4,3,2".
Tableau parse_tableau(std::string_view text);
std::string format_tableau(const Tableau& t);
Shape parse_shape(std::string_view text);
std::string format_shape(const Shape& s);

}  // namespace descent
