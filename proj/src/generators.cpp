#include "uusc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace uusc {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw Error(std::string("gen_tight invariant failed: ") + what);
}

} // namespace

TightFamilyResult gen_tight(int m) {
    if (m < 1) throw InvalidParams("gen_tight requires m >= 1");

    const int cols = 36 * m;       // columns O_1..O_{36m}, 1-indexed below
    const int n = 4 * cols;        // column j owns elements 4(j-1)..4(j-1)+3
    const int f4 = 12 * m;         // first-group 4-rows
    const int s4 = 6 * m;          // second-group 4-rows
    const int r3 = 8 * m;          // 3-rows

    // columns a row meets, as 1-based column indices
    std::vector<std::vector<int>> row_cols(static_cast<size_t>(f4 + s4 + r3));
    for (int i = 1; i <= f4 - 1; ++i)
        row_cols[i - 1] = {3 * i - 2, 3 * i - 1, 3 * i, 3 * i + 1};
    row_cols[f4 - 1] = {1, cols - 2, cols - 1, cols};
    for (int i = 1; i <= 3 * m; ++i) {
        row_cols[f4 + 2 * (i - 1)] = {3 * i - 1, 9 * m + 3 * i - 1,
                                      18 * m + 3 * i - 1, 27 * m + 3 * i - 1};
        row_cols[f4 + 2 * (i - 1) + 1] = {3 * i, 9 * m + 3 * i, 18 * m + 3 * i,
                                          27 * m + 3 * i};
    }
    for (int i = 1; i <= 4 * m; ++i) {
        row_cols[f4 + s4 + 2 * (i - 1)] = {3 * i - 1, 12 * m + 3 * i - 1,
                                           24 * m + 3 * i - 1};
        row_cols[f4 + s4 + 2 * (i - 1) + 1] = {3 * i, 12 * m + 3 * i, 24 * m + 3 * i};
    }

    // Per column, the rows of each group that meet it, in row order.
    std::vector<std::vector<int>> first_hits(static_cast<size_t>(cols + 1));
    std::vector<int> second_hit(static_cast<size_t>(cols + 1), -1);
    std::vector<int> third_hit(static_cast<size_t>(cols + 1), -1);
    for (size_t r = 0; r < row_cols.size(); ++r)
        for (int c : row_cols[r]) {
            if (static_cast<int>(r) < f4) {
                first_hits[static_cast<size_t>(c)].push_back(static_cast<int>(r));
            } else if (static_cast<int>(r) < f4 + s4) {
                require(second_hit[static_cast<size_t>(c)] == -1, "two second-group hits");
                second_hit[static_cast<size_t>(c)] = static_cast<int>(r);
            } else {
                require(third_hit[static_cast<size_t>(c)] == -1, "two 3-row hits");
                third_hit[static_cast<size_t>(c)] = static_cast<int>(r);
            }
        }

    // Element slots within column j: 0 and 1 to the first-group rows in row
    // order, 2 to the second-group row, 3 to the 3-row; unassigned slots
    // stay for the 2-set completion.
    std::vector<std::vector<int>> row_elems(row_cols.size());
    int o20 = 0, o21 = 0;
    for (int c = 1; c <= cols; ++c) {
        const int base = 4 * (c - 1);
        const auto& fh = first_hits[static_cast<size_t>(c)];
        require(fh.size() + (second_hit[static_cast<size_t>(c)] >= 0 ? 1 : 0) == 2,
                "column not met by exactly two 4-rows");
        for (size_t i = 0; i < fh.size(); ++i)
            row_elems[static_cast<size_t>(fh[i])].push_back(base + static_cast<int>(i));
        if (second_hit[static_cast<size_t>(c)] >= 0)
            row_elems[static_cast<size_t>(second_hit[static_cast<size_t>(c)])].push_back(base + 2);
        if (third_hit[static_cast<size_t>(c)] >= 0)
            row_elems[static_cast<size_t>(third_hit[static_cast<size_t>(c)])].push_back(base + 3);
        const bool res1 = c % 3 == 1;
        require((third_hit[static_cast<size_t>(c)] >= 0) == !res1,
                "3-row hit disagrees with column residue");
        (res1 ? o20 : o21)++;
    }
    require(o20 == 12 * m && o21 == 24 * m, "column class counts");

    TightFamilyResult out;
    out.m = m;
    out.instance.n = n;
    out.instance.p = 2;
    out.instance.k = 4;
    out.instance.all_p_sets_implicit = true;
    out.instance.closure_enabled = false;

    for (int c = 1; c <= cols; ++c) {
        const int base = 4 * (c - 1);
        std::vector<int> col = {base, base + 1, base + 2, base + 3};
        out.opt_cover.sets.push_back(
            make_explicit_handle(static_cast<int>(out.instance.explicit_sets.size()), col));
        out.instance.explicit_sets.push_back(std::move(col));
    }
    ElemSet seen(static_cast<size_t>(n));
    for (size_t r = 0; r < row_elems.size(); ++r) {
        auto& elems = row_elems[r];
        std::sort(elems.begin(), elems.end());
        require(elems.size() == row_cols[r].size(), "row size != columns met");
        for (int e : elems) {
            require(!seen.test(static_cast<size_t>(e)), "rows overlap");
            seen.set(static_cast<size_t>(e));
        }
        out.apx_packing.sets.push_back(
            make_explicit_handle(static_cast<int>(out.instance.explicit_sets.size()), elems));
        out.instance.explicit_sets.push_back(elems);
    }
    require(static_cast<int>(seen.count()) == 96 * m, "covered-element count");
    return out;
}

Instance gen_random(int p, int k, int n, double density, std::uint64_t seed) {
    if (p < 1 || p >= k || k > n) throw InvalidParams("require 1 <= p < k <= n");
    if (!(density > 0)) throw InvalidParams("density must be positive");

    const auto target = static_cast<long long>(std::ceil(density * n));
    // Distinct sets of each size are capped by C(n, size); bail out early
    // when the request cannot be met.
    {
        double capacity = 0;
        for (int s = p + 1; s <= k; ++s) {
            double c = 1;
            for (int i = 0; i < s; ++i) c = c * (n - i) / (i + 1);
            capacity += c;
        }
        if (capacity < static_cast<double>(target))
            throw InvalidParams("density too high for distinct sets");
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size_dist(p + 1, k);
    std::set<std::vector<int>> sets;
    std::vector<int> pool(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i;
    while (static_cast<long long>(sets.size()) < target) {
        const int size = size_dist(rng);
        // partial Fisher-Yates draw of `size` distinct elements
        for (int i = 0; i < size; ++i) {
            std::uniform_int_distribution<int> pick(i, n - 1);
            std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(pick(rng))]);
        }
        std::vector<int> s(pool.begin(), pool.begin() + size);
        std::sort(s.begin(), s.end());
        sets.insert(std::move(s));
    }

    Instance inst;
    inst.n = n;
    inst.p = p;
    inst.k = k;
    inst.all_p_sets_implicit = true;
    inst.explicit_sets.assign(sets.begin(), sets.end());
    return inst;
}

Instance gen_biclique(int left, int right,
                      const std::vector<std::pair<int, int>>& edges,
                      std::uint64_t /*seed*/) {
    if (left < 0 || right < 0) throw InvalidParams("negative side size");
    std::vector<std::vector<int>> edge_id(static_cast<size_t>(left),
                                          std::vector<int>(static_cast<size_t>(right), -1));
    int next = 0;
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= left || v < 0 || v >= right)
            throw InvalidParams("edge endpoint out of range");
        if (edge_id[static_cast<size_t>(u)][static_cast<size_t>(v)] != -1)
            throw InvalidParams("multi-edge in biclique input");
        edge_id[static_cast<size_t>(u)][static_cast<size_t>(v)] = next++;
    }

    Instance inst;
    inst.n = next;
    inst.p = 2;
    inst.k = 4;
    inst.all_p_sets_implicit = true;
    // every K_{2,2} whose four edges all appear in the graph
    for (int u1 = 0; u1 < left; ++u1)
        for (int u2 = u1 + 1; u2 < left; ++u2)
            for (int v1 = 0; v1 < right; ++v1)
                for (int v2 = v1 + 1; v2 < right; ++v2) {
                    const int a = edge_id[static_cast<size_t>(u1)][static_cast<size_t>(v1)];
                    const int b = edge_id[static_cast<size_t>(u1)][static_cast<size_t>(v2)];
                    const int c = edge_id[static_cast<size_t>(u2)][static_cast<size_t>(v1)];
                    const int d = edge_id[static_cast<size_t>(u2)][static_cast<size_t>(v2)];
                    if (a < 0 || b < 0 || c < 0 || d < 0) continue;
                    std::vector<int> s = {a, b, c, d};
                    std::sort(s.begin(), s.end());
                    inst.explicit_sets.push_back(std::move(s));
                }
    return inst;
}

} // namespace uusc
