#include "subword/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

namespace subword {

Integer binomial(long long m, long long j) {
    if (j < 0) return 0;
    if (m < 0) {
        Integer v = binomial(j - m - 1, j);
        return (j % 2 == 0) ? v : -v;
    }
    if (j > m) return 0;
    if (j > m - j) j = m - j;
    Integer r = 1;
    for (long long i = 1; i <= j; ++i) {
        r *= m - j + i;
        r /= i; // exact: r is C(m-j+i, i) after this step
    }
    return r;
}

Integer stirling2(long long m, long long d) {
    if (m < 0 || d < 0) return 0;
    if (d > m) return 0;
    if (m == 0) return d == 0 ? 1 : 0;
    if (d == 0) return 0;
    // row DP on S(i, j) = S(i-1, j-1) + j S(i-1, j)
    std::vector<Integer> row(static_cast<size_t>(d) + 1, 0);
    row[0] = 1;
    for (long long i = 1; i <= m; ++i) {
        for (long long j = std::min<long long>(i, d); j >= 1; --j)
            row[j] = row[j - 1] + j * row[j];
        row[0] = 0;
    }
    return row[d];
}

Integer stirling_cycle(long long m, long long j) {
    if (m < 0 || j < 0) return 0;
    if (j > m) return 0;
    if (m == 0) return j == 0 ? 1 : 0;
    // c(i, j) = c(i-1, j-1) + (i-1) c(i-1, j)
    std::vector<Integer> row(static_cast<size_t>(j) + 1, 0);
    row[0] = 1;
    for (long long i = 1; i <= m; ++i) {
        for (long long t = std::min<long long>(i, j); t >= 1; --t)
            row[t] = row[t - 1] + (i - 1) * row[t];
        row[0] = 0;
    }
    return row[j];
}

Integer reduced_stirling(long long j, long long d) {
    if (j < 0 || d < 0) return 0;
    if (d > j) return 0;
    if (j == 0) return d == 0 ? 1 : 0;
    // Inserting j into a partition of {1..j-1}: either as the new singleton
    // block of highest index, or into one of the d blocks not containing j-1.
    // S*(m+1, d) = S*(m, d-1) + (d-1) S*(m, d)
    std::vector<Integer> row(static_cast<size_t>(d) + 1, 0);
    row[0] = 1;
    for (long long i = 1; i <= j; ++i) {
        for (long long t = std::min<long long>(i, d); t >= 1; --t)
            row[t] = row[t - 1] + (t - 1) * row[t];
        row[0] = 0;
    }
    return row[d];
}

Integer bell(long long m) {
    if (m < 0) return 0;
    Integer total = 0;
    for (long long d = 0; d <= m; ++d) total += stirling2(m, d);
    return total;
}

Integer bell_no_singletons(long long m) {
    if (m < 0) return 0;
    Integer total = 0;
    for (long long r = 0; r <= m; ++r) {
        Integer term = binomial(m, r) * bell(m - r);
        total += (r % 2 == 0) ? term : -term;
    }
    return total;
}

IntPartition::IntPartition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int IntPartition::sum() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

int IntPartition::count_ones() const { return multiplicity(1); }

int IntPartition::multiplicity(int part) const {
    int c = 0;
    for (int p : parts) c += (p == part);
    return c;
}

Integer IntPartition::centralizer() const {
    Integer z = 1;
    int run = 0;
    int prev = 0;
    for (int p : parts) {
        if (p == prev) {
            ++run;
        } else {
            prev = p;
            run = 1;
        }
        z *= Integer(p) * run; // accumulates p^{m_p} * m_p! across the run
    }
    return z;
}

static void partitions_rec(int remaining, int cap, std::vector<int>& cur,
                           std::vector<IntPartition>& out) {
    if (remaining == 0) {
        IntPartition p;
        p.parts = cur;
        out.push_back(std::move(p));
        return;
    }
    for (int next = std::min(remaining, cap); next >= 1; --next) {
        cur.push_back(next);
        partitions_rec(remaining - next, next, cur, out);
        cur.pop_back();
    }
}

std::vector<IntPartition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<IntPartition> out;
    std::vector<int> cur;
    partitions_rec(n, n == 0 ? 1 : n, cur, out);
    return out;
}

static void rgs_rec(int m, int i, int maxv, std::vector<int>& code,
                    const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    if (i == m) {
        std::vector<std::vector<int>> blocks(static_cast<size_t>(maxv) + 1);
        for (int e = 0; e < m; ++e) blocks[static_cast<size_t>(code[e])].push_back(e);
        visit(blocks);
        return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
        code[i] = v;
        rgs_rec(m, i + 1, std::max(maxv, v), code, visit);
    }
}

void for_each_set_partition(int m,
                            const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    if (m < 0) throw std::invalid_argument("for_each_set_partition: negative m");
    if (m == 0) {
        visit({});
        return;
    }
    std::vector<int> code(static_cast<size_t>(m), 0);
    rgs_rec(m, 1, 0, code, visit);
}

} // namespace subword
