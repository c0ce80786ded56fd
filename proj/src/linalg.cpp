#include "subword/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

namespace subword {

namespace {

Integer row_content(const SparseRow& r) {
    Integer g = 0;
    for (const auto& [c, v] : r) {
        g = boost::multiprecision::gcd(g, v);
        if (g == 1) break;
    }
    return g;
}

void divide_row(SparseRow& r, const Integer& g) {
    if (g == 1) return;
    for (auto& [c, v] : r) v /= g;
}

const Integer* row_entry(const SparseRow& r, int col) {
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    if (it == r.end() || it->first != col) return nullptr;
    return &it->second;
}

// a*ra - b*rb, columns merged
SparseRow combine(const Integer& a, const SparseRow& ra, const Integer& b, const SparseRow& rb) {
    SparseRow out;
    out.reserve(ra.size() + rb.size());
    size_t i = 0, j = 0;
    while (i < ra.size() || j < rb.size()) {
        if (j == rb.size() || (i < ra.size() && ra[i].first < rb[j].first)) {
            out.emplace_back(ra[i].first, a * ra[i].second);
            ++i;
        } else if (i == ra.size() || rb[j].first < ra[i].first) {
            out.emplace_back(rb[j].first, -b * rb[j].second);
            ++j;
        } else {
            Integer v = a * ra[i].second - b * rb[j].second;
            if (v != 0) out.emplace_back(ra[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

std::size_t exact_rank(std::vector<SparseRow> rows, int ncols) {
    for (auto& r : rows) {
        for (const auto& [c, v] : r) {
            if (c < 0 || c >= ncols) throw std::invalid_argument("exact_rank: column out of range");
            if (v == 0) throw std::invalid_argument("exact_rank: explicit zero entry");
        }
        if (!std::is_sorted(r.begin(), r.end(),
                            [](const auto& x, const auto& y) { return x.first < y.first; }))
            throw std::invalid_argument("exact_rank: unsorted row");
        Integer g = row_content(r);
        if (g > 1) divide_row(r, g);
    }

    std::vector<char> active(rows.size(), 1);
    std::size_t rank = 0;
    std::vector<std::size_t> col_count(static_cast<size_t>(ncols), 0);

    for (;;) {
        std::fill(col_count.begin(), col_count.end(), 0);
        bool any = false;
        for (size_t r = 0; r < rows.size(); ++r)
            if (active[r])
                for (const auto& [c, v] : rows[r]) {
                    ++col_count[static_cast<size_t>(c)];
                    any = true;
                }
        if (!any) break;

        // Markowitz-style pivot: unit entries first, then least fill estimate.
        size_t best_row = rows.size();
        int best_col = -1;
        std::pair<int, std::size_t> best_score{2, 0};
        for (size_t r = 0; r < rows.size(); ++r) {
            if (!active[r] || rows[r].empty()) continue;
            for (const auto& [c, v] : rows[r]) {
                int unit_penalty = (v == 1 || v == -1) ? 0 : 1;
                std::size_t fill = (rows[r].size() - 1) * (col_count[static_cast<size_t>(c)] - 1);
                std::pair<int, std::size_t> score{unit_penalty, fill};
                if (score < best_score || best_row == rows.size()) {
                    best_score = score;
                    best_row = r;
                    best_col = c;
                }
            }
        }

        const Integer pivot = *row_entry(rows[best_row], best_col);
        ++rank;
        active[best_row] = 0;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (!active[r]) continue;
            const Integer* e = row_entry(rows[r], best_col);
            if (!e) continue;
            rows[r] = combine(pivot, rows[r], *e, rows[best_row]);
            Integer g = row_content(rows[r]);
            if (g > 1) divide_row(rows[r], g);
            if (rows[r].empty()) active[r] = 0;
        }
        rows[best_row].clear();
    }
    return rank;
}

Integer exact_determinant(std::vector<std::vector<Integer>> m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("exact_determinant: matrix not square");
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev; // exact by Sylvester
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

std::optional<std::vector<Rational>> solve_rational(std::vector<std::vector<Rational>> a,
                                                    std::vector<Rational> b) {
    const size_t nrows = a.size();
    if (b.size() != nrows) throw std::invalid_argument("solve_rational: size mismatch");
    const size_t ncols = nrows == 0 ? 0 : a[0].size();
    for (const auto& row : a)
        if (row.size() != ncols) throw std::invalid_argument("solve_rational: ragged matrix");

    std::vector<size_t> pivot_row_of_col(ncols, nrows);
    size_t next_row = 0;
    for (size_t col = 0; col < ncols && next_row < nrows; ++col) {
        size_t p = next_row;
        while (p < nrows && a[p][col] == 0) ++p;
        if (p == nrows) continue;
        std::swap(a[p], a[next_row]);
        std::swap(b[p], b[next_row]);
        Rational inv = a[next_row][col];
        for (size_t j = col; j < ncols; ++j) a[next_row][j] /= inv;
        b[next_row] /= inv;
        for (size_t i = 0; i < nrows; ++i) {
            if (i == next_row || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (size_t j = col; j < ncols; ++j) a[i][j] -= f * a[next_row][j];
            b[i] -= f * b[next_row];
        }
        pivot_row_of_col[col] = next_row;
        ++next_row;
    }
    // rows beyond the pivots must be consistent
    for (size_t i = next_row; i < nrows; ++i)
        if (b[i] != 0) return std::nullopt;
    for (size_t col = 0; col < ncols; ++col)
        if (pivot_row_of_col[col] == nrows)
            throw std::invalid_argument("solve_rational: columns not independent");
    std::vector<Rational> x(ncols);
    for (size_t col = 0; col < ncols; ++col) x[col] = b[pivot_row_of_col[col]];
    return x;
}

} // namespace subword
