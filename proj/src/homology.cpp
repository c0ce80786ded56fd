#include "subword/homology.hpp"

#include <algorithm>

namespace subword {

std::vector<int> admissible_fix_counts(int n) {
    std::vector<int> out;
    for (int f = 0; f <= n; ++f)
        if (f != n - 1) out.push_back(f);
    return out;
}

ChainComplexSummary betti_numbers(const SubwordPoset& P, std::size_t chain_cap) {
    const int max_dim = P.level_count(); // chains have at most one element per level
    std::vector<std::vector<std::vector<std::size_t>>> faces(static_cast<size_t>(max_dim));
    std::size_t total_faces = 0;
    bool completed = for_each_chain(P, [&](const std::vector<std::size_t>& chain) {
        if (++total_faces > chain_cap) return false;
        faces[chain.size() - 1].push_back(chain);
        return true;
    });
    if (!completed) throw chain_cap_error("order complex exceeds the chain cap");

    while (!faces.empty() && faces.back().empty()) faces.pop_back();
    const int dims = static_cast<int>(faces.size());

    ChainComplexSummary out;
    if (dims == 0) return out; // no elements: only the empty face, euler -1

    std::vector<std::map<std::vector<std::size_t>, int>> face_index(static_cast<size_t>(dims));
    for (int d = 0; d < dims; ++d) {
        int i = 0;
        for (const auto& f : faces[static_cast<size_t>(d)]) face_index[static_cast<size_t>(d)][f] = i++;
    }

    // boundary_rank[d] = rank of the map from d-chains to (d-1)-chains,
    // with the empty face as the single (-1)-dimensional target of d = 0.
    std::vector<std::size_t> boundary_rank(static_cast<size_t>(dims) + 1, 0);
    boundary_rank[0] = faces[0].empty() ? 0 : 1;
    for (int d = 1; d < dims; ++d) {
        std::vector<SparseRow> cols;
        cols.reserve(faces[static_cast<size_t>(d)].size());
        for (const auto& f : faces[static_cast<size_t>(d)]) {
            SparseRow col;
            std::vector<std::size_t> sub(f.size() - 1);
            for (size_t omit = 0; omit < f.size(); ++omit) {
                sub.clear();
                for (size_t i = 0; i < f.size(); ++i)
                    if (i != omit) sub.push_back(f[i]);
                int row = face_index[static_cast<size_t>(d - 1)].at(sub);
                col.emplace_back(row, omit % 2 == 0 ? 1 : -1);
            }
            std::sort(col.begin(), col.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            cols.push_back(std::move(col));
        }
        boundary_rank[static_cast<size_t>(d)] =
            exact_rank(std::move(cols), static_cast<int>(faces[static_cast<size_t>(d - 1)].size()));
    }

    out.face_counts.reserve(static_cast<size_t>(dims));
    out.betti.reserve(static_cast<size_t>(dims));
    out.reduced_euler = -1;
    for (int d = 0; d < dims; ++d) {
        Integer fd = static_cast<unsigned long>(faces[static_cast<size_t>(d)].size());
        out.face_counts.push_back(fd);
        out.reduced_euler += (d % 2 == 0) ? fd : -fd;
        Integer b = fd - Integer(static_cast<unsigned long>(boundary_rank[static_cast<size_t>(d)])) -
                    Integer(static_cast<unsigned long>(boundary_rank[static_cast<size_t>(d) + 1]));
        out.betti.push_back(b);
    }
    return out;
}

FixCharacter lefschetz_character(int n, int k, const RankSet& T) {
    if (T.empty()) throw std::invalid_argument("lefschetz_character: empty rank set");
    FixCharacter out;
    out.n = n;
    const int sign = (T.size() - 1) % 2 == 0 ? 1 : -1;
    for (int f : admissible_fix_counts(n)) {
        Integer mu = poset_mobius(build_poset(f, k, T, true));
        out.values[f] = sign > 0 ? mu : -mu;
    }
    return out;
}

FixCharacter chain_character(int n, int k, const RankSet& T) {
    FixCharacter out;
    out.n = n;
    for (int f : admissible_fix_counts(n))
        out.values[f] = maximal_chain_count(build_poset(f, k, T, true));
    return out;
}

std::vector<Integer> whitney_dims(int n, int k) {
    if (k < 1) throw std::invalid_argument("whitney_dims: need k >= 1");
    std::vector<Integer> dims;
    dims.reserve(static_cast<size_t>(k) + 1);
    const Word bottom(n, {});
    for (int i = 0; i <= k; ++i) {
        Integer total = 0;
        for (const Word& x : all_words(n, i)) total += mobius_interval(bottom, x);
        dims.push_back(i % 2 == 0 ? total : -total);
    }
    return dims;
}

std::vector<Integer> dual_whitney_dims(int n, int k) {
    if (k < 1) throw std::invalid_argument("dual_whitney_dims: need k >= 1");
    // mu(x, 1hat) = -sum over words alpha >= x of mu(x, alpha); accumulate the
    // inner sums by scanning each word's distinct subwords.
    std::map<Word, Integer> acc;
    for (int j = 0; j <= k; ++j)
        for (const Word& alpha : all_words(n, j))
            for (const Word& x : subwords_of(alpha)) acc[x] += mobius_interval(x, alpha);
    std::vector<Integer> per_rank(static_cast<size_t>(k) + 1, 0);
    for (const auto& [x, s] : acc) per_rank[static_cast<size_t>(x.rank())] -= s;
    std::vector<Integer> dims(static_cast<size_t>(k) + 1, 0);
    for (int i = 0; i <= k; ++i) {
        Integer v = per_rank[static_cast<size_t>(i)];
        dims[static_cast<size_t>(i)] = (k + 1 - i) % 2 == 0 ? v : -v;
    }
    return dims;
}

} // namespace subword
