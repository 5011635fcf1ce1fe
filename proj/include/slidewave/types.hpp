#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace slidewave {

/// Row index of the edit distance matrix (0..n). Also used for string lengths.
using Row = std::int64_t;

/// Diagonal offset d = j - i of a matrix cell (i, j).
using Diagonal = int;

/// Edit-cost level h of a wave.
using Level = int;

/// A distance bounded by a budget k; std::nullopt renders "exceeds k".
using BoundedDistance = std::optional<int>;

inline constexpr BoundedDistance kExceedsK = std::nullopt;

/// Number of predecessor candidates of the cell (d, h): 3 when |d| <= h-2, 2 when
/// |d| = h-1 >= 1, 1 when |d| = h or h = 1, and 1 for (0, 0).
/// Throws std::invalid_argument when |d| > h.
int cap_c(Diagonal d, Level h);

/// Geometry of the diagonal band for inputs of lengths n (rows) and m (columns).
///
/// Only non-empty diagonals take part in the computation, so the band is
/// [max(-k, -n), min(k, m)]; for strings longer than k it is the full [-k, k].
struct Band {
    int k = 0;
    Row n = 0;
    Row m = 0;

    Diagonal min_diagonal() const;
    Diagonal max_diagonal() const;
    bool contains(Diagonal d) const { return d >= min_diagonal() && d <= max_diagonal(); }

    Row first_row(Diagonal d) const { return d < 0 ? -static_cast<Row>(d) : 0; }
    Row last_row(Diagonal d) const;

    /// Diagonal on which the matrix corner (n, m) lies.
    Row terminal() const { return m - n; }
    bool feasible() const;

    /// Candidate count of (d, h) restricted to the band. Equals cap_c(d, h)
    /// when the band spans all of [-k, k].
    int candidate_count(Diagonal d, Level h) const;

    /// Clamp a candidate start row to the end of diagonal d.
    Row clamp(Diagonal d, Row row) const;
};

/// The values F^h(d) = max{i : D[i][i+d] = h} for |d| <= h <= k.
///
/// A cell is unset when diagonal d never attains cost h. Tables produced by
/// the wave algorithms also record, per cell, the byte of y just past the
/// slide (y[F + d]) so an alignment can be rebuilt without rereading y.
class FrontierTable {
public:
    FrontierTable() = default;
    FrontierTable(int k, Row n, Row m);

    int k() const { return k_; }
    Row n() const { return n_; }
    Row m() const { return m_; }
    Band band() const { return Band{k_, n_, m_}; }
    bool empty() const { return values_.empty(); }

    std::optional<Row> at(Diagonal d, Level h) const;
    void set(Diagonal d, Level h, Row row);

    /// Furthest row on d reachable with cost at most h. Only meaningful on a
    /// complete table; requires |d| <= h and d inside the band.
    Row reach(Diagonal d, Level h) const;

    std::optional<std::uint8_t> next_y(Diagonal d, Level h) const;
    void set_next_y(Diagonal d, Level h, std::uint8_t byte);

    /// Number of set cells.
    std::size_t defined_count() const;

    /// Human-readable list of cells where the two tables disagree (F values only).
    std::vector<std::string> diff(const FrontierTable& other, std::size_t limit = 8) const;

    friend bool operator==(const FrontierTable& a, const FrontierTable& b);

private:
    std::size_t index(Diagonal d, Level h) const;
    void check(Diagonal d, Level h) const;

    int k_ = 0;
    Row n_ = 0;
    Row m_ = 0;
    std::vector<Row> values_;
    std::vector<std::int16_t> next_y_;
};

} // namespace slidewave
