#include "pretzelkh/turner.hpp"

#include <set>
#include <stdexcept>

namespace pkh {

ResolutionSequence build_sequence(const LinkDiagram& d, const std::vector<int>& crossing_order,
                                  const std::vector<OrientationChoice>& d_orients,
                                  const std::vector<OrientationChoice>& dtilde_orients) {
    const size_t m = crossing_order.size();
    std::set<int> seen;
    for (int c : crossing_order) {
        if (c < 0 || c >= d.crossing_count())
            throw std::invalid_argument("sequence: crossing id out of range");
        if (!seen.insert(c).second) throw std::invalid_argument("sequence: duplicate crossing id");
    }
    if (!d_orients.empty() && d_orients.size() != m)
        throw std::invalid_argument("sequence: wrong number of orientation overrides");
    if (!dtilde_orients.empty() && dtilde_orients.size() != m)
        throw std::invalid_argument("sequence: wrong number of orientation overrides");

    ResolutionSequence seq;
    seq.base = d;
    seq.crossing_order = crossing_order;
    seq.d_seq.push_back(d);
    // base ids shift as crossings disappear
    std::vector<int> index_of(d.crossing_count());
    for (int c = 0; c < d.crossing_count(); ++c) index_of[c] = c;
    for (size_t k = 0; k < m; ++k) {
        const int idx = index_of[crossing_order[k]];
        const OrientationChoice& oc_d = d_orients.empty() ? OrientationChoice{} : d_orients[k];
        const OrientationChoice& oc_t = dtilde_orients.empty() ? OrientationChoice{} : dtilde_orients[k];
        seq.dtilde_seq.push_back(resolve(seq.d_seq.back(), idx, 0, oc_t));
        seq.d_seq.push_back(resolve(seq.d_seq.back(), idx, 1, oc_d));
        for (int c = 0; c < d.crossing_count(); ++c)
            if (index_of[c] > idx) --index_of[c];
        index_of[crossing_order[k]] = -1;
    }
    return seq;
}

TurnerConstants constants(const ResolutionSequence& seq) {
    const int m = static_cast<int>(seq.crossing_order.size());
    TurnerConstants c;
    c.n_plus.resize(m + 1);
    c.n_minus.resize(m + 1);
    c.nt_plus.assign(m + 1, 0);
    c.nt_minus.assign(m + 1, 0);
    c.a.assign(m + 1, 0);
    c.b.assign(m + 1, 0);
    c.a_tilde.assign(m + 1, 0);
    c.b_tilde.assign(m + 1, 0);
    c.A.assign(m + 1, 0);
    c.B.assign(m + 1, 0);
    for (int k = 0; k <= m; ++k) {
        c.n_plus[k] = seq.d_seq[k].n_plus();
        c.n_minus[k] = seq.d_seq[k].n_minus();
    }
    for (int k = 1; k <= m; ++k) {
        c.nt_plus[k] = seq.dtilde_seq[k - 1].n_plus();
        c.nt_minus[k] = seq.dtilde_seq[k - 1].n_minus();
        c.a[k] = c.n_minus[k - 1] - c.n_minus[k] - 1;
        c.b[k] = 3 * c.a[k] + 1;
        c.a_tilde[k] = c.n_minus[k - 1] - c.nt_minus[k];
        c.b_tilde[k] = 3 * c.a_tilde[k] - 1;
        c.A[k] = c.A[k - 1] + c.a[k];
        c.B[k] = 3 * c.A[k] + k;
    }
    return c;
}

std::vector<E1Page> e1_pages(const ResolutionSequence& seq, const std::vector<int>& js,
                             const CubeOptions& opt) {
    const int m = static_cast<int>(seq.crossing_order.size());
    TurnerConstants tc = constants(seq);
    std::vector<BigradedDims> leaf_dims;  // D~(1)..D~(m), then D(m)
    for (int k = 1; k <= m; ++k) leaf_dims.push_back(homology_dims(seq.dtilde_seq[k - 1], opt));
    leaf_dims.push_back(homology_dims(seq.d_seq[m], opt));

    std::vector<E1Page> pages;
    for (int j : js) {
        E1Page page;
        page.j = j;
        for (int s = 0; s < m; ++s) {
            const int jl = j + tc.B[s] + tc.b_tilde[s + 1];
            for (auto& [ij, rk] : leaf_dims[s].ranks) {
                if (ij.second != jl) continue;
                const int t = ij.first - s - tc.A[s] - tc.a_tilde[s + 1];
                E1Cell cell{rk, "D~(" + std::to_string(s + 1) + ")", ij.first, ij.second};
                page.cells[{s, t}] = cell;
            }
        }
        {
            const int jl = j + tc.B[m];
            for (auto& [ij, rk] : leaf_dims[m].ranks) {
                if (ij.second != jl) continue;
                const int t = ij.first - m - tc.A[m];
                E1Cell cell{rk, "D(m)", ij.first, ij.second};
                page.cells[{m, t}] = cell;
            }
        }
        pages.push_back(std::move(page));
    }
    return pages;
}

E1Page e1_page(const ResolutionSequence& seq, int j, const CubeOptions& opt) {
    return e1_pages(seq, {j}, opt).front();
}

bool e1_euler_check(const E1Page& page, const BigradedDims& dims_of_base, int j) {
    long long lhs = 0;
    for (auto& [st, cell] : page.cells)
        lhs += ((st.first + st.second) % 2 == 0) ? cell.rank : -cell.rank;
    long long rhs = 0;
    for (auto& [ij, rk] : dims_of_base.ranks)
        if (ij.second == j) rhs += (ij.first % 2 == 0) ? rk : -rk;
    return lhs == rhs;
}

bool diagonal_support_check(const E1Page& page, int j, int offset_c) {
    for (auto& [st, cell] : page.cells) {
        const int twice = 2 * (st.first + st.second);
        if (twice != j - offset_c - 1 && twice != j - offset_c + 1) return false;
    }
    return true;
}

}  // namespace pkh
