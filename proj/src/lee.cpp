#include "pretzelkh/lee.hpp"

#include "pretzelkh/scan.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pkh {

namespace {

long long rank_with_retry(SparseMat&& m, const std::function<SparseMat()>& rebuild) {
    try {
        return rank_destructive(m);
    } catch (const std::overflow_error&) {
        return rank_rational(rebuild());
    }
}

}  // namespace

std::map<int, long long> lee_homology_rank(const LinkDiagram& d, const CubeOptions& opt) {
    // past ~12 crossings the full deformed cube no longer fits; the scanning
    // path is checked identical to the cube on the small-diagram corpus
    if (d.crossing_count() > 12) return lee_homology_rank_scan(d, opt.max_crossings);
    CubeComplex cube(d, opt);
    std::map<int, long long> out;
    long long prev_rank = 0;
    for (int i = cube.i_min(); i <= cube.i_max(); ++i) {
        const long long n_i = cube.generators_at(i);
        const long long n_next = cube.generators_at(i + 1);
        const long long rank_i = (n_i == 0 || n_next == 0) ? 0 : cube.block_rank(i, {}, true);
        const long long h = n_i - rank_i - prev_rank;
        if (h != 0) out[i] = h;
        prev_rank = rank_i;
    }
    return out;
}

SInvariantResult s_invariant(const LinkDiagram& d, const CubeOptions& opt) {
    if (d.component_count() != 1) throw std::invalid_argument("s invariant: knot diagrams only");
    if (d.crossing_count() > 12) return s_invariant_scan(d, opt.max_crossings);
    CubeComplex cube(d, opt);
    const std::vector<int> q0 = cube.column_qdegs(0);  // degree-0 generator filtration levels
    const long long n0 = static_cast<long long>(q0.size());

    auto build_d0 = [&] { return cube.differential(0, {}, true); };
    auto build_dm1 = [&] { return cube.differential(-1, {}, true); };

    // ranks of the unrestricted differentials around degree 0
    const long long rank_d0 = (cube.generators_at(1) > 0) ? rank_with_retry(build_d0(), build_d0) : 0;
    const long long rank_dm1 =
        (cube.generators_at(-1) > 0) ? rank_with_retry(build_dm1(), build_dm1) : 0;
    const long long lee_rank = n0 - rank_d0 - rank_dm1;
    if (lee_rank != 2) throw std::runtime_error("s invariant: degree-0 Lee rank is not 2");

    // r(j) = dim F_j - rank(d0 restricted to F_j) - rank(dm1) + rank(dm1 into
    // the complement of F_j); F_j spanned by degree-0 generators of quantum
    // degree >= j. This uses im(dm1) <= ker(d0), so the part of the boundary
    // space lying in F_j has dimension rank_dm1 - rank(rows below j).
    auto r_of = [&](int j) -> long long {
        long long dim_f = 0;
        for (int qq : q0)
            if (qq >= j) ++dim_f;
        long long rank_d0_f = 0;
        if (cube.generators_at(1) > 0) {
            auto gen = [&] {
                SparseMat m = build_d0();
                for (long long c = 0; c < m.cols; ++c)
                    if (q0[c] < j) {
                        m.col[c].clear();
                        m.col[c].shrink_to_fit();
                    }
                return m;
            };
            rank_d0_f = rank_with_retry(gen(), gen);
        }
        long long rank_dm1_below = 0;
        if (cube.generators_at(-1) > 0) {
            auto gen = [&] {
                SparseMat m = build_dm1();
                for (auto& col : m.col) {
                    std::erase_if(col, [&](const auto& e) { return q0[e.first] >= j; });
                }
                return m;
            };
            rank_dm1_below = rank_with_retry(gen(), gen);
        }
        return dim_f - rank_d0_f - rank_dm1 + rank_dm1_below;
    };
    std::map<int, long long> r_cache;
    auto r_at = [&](int j) {
        auto it = r_cache.find(j);
        if (it == r_cache.end()) it = r_cache.emplace(j, r_of(j)).first;
        return it->second;
    };

    std::vector<int> levels(q0);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    // r is non-increasing in j, stepping 2 -> 1 -> 0
    auto largest_level_with = [&](long long bound) {
        int lo = 0, hi = static_cast<int>(levels.size()) - 1, best = -1;
        while (lo <= hi) {
            int mid = (lo + hi) / 2;
            if (r_at(levels[mid]) >= bound) {
                best = mid;
                lo = mid + 1;
            } else {
                hi = mid - 1;
            }
        }
        if (best < 0) throw std::runtime_error("s invariant: filtration search failed");
        return levels[best];
    };
    SInvariantResult out;
    out.lee_rank = lee_rank;
    out.s_min = largest_level_with(2);
    out.s_max = largest_level_with(1);
    if (out.s_max != out.s_min + 2)
        throw std::runtime_error("s invariant: filtration jump levels are not 2 apart");
    out.s = out.s_min + 1;
    return out;
}

std::optional<int> is_h_thin(const BigradedDims& dims) {
    std::vector<int> diag;
    for (auto& [ij, rk] : dims.ranks) diag.push_back(ij.second - 2 * ij.first);
    std::sort(diag.begin(), diag.end());
    diag.erase(std::unique(diag.begin(), diag.end()), diag.end());
    if (diag.size() != 2 || diag[1] - diag[0] != 2) return std::nullopt;
    return diag[0] + 1;
}

int s_from_thin(const BigradedDims& dims) {
    auto c = is_h_thin(dims);
    if (!c) throw std::invalid_argument("s from thin: homology is not H-thin");
    return *c;
}

}  // namespace pkh
