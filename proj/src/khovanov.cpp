#include "pretzelkh/khovanov.hpp"

#include "pretzelkh/scan.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>

namespace pkh {

namespace {

long long binom(int n, int k) {
    static const auto table = [] {
        std::vector<std::array<long long, 70>> t(70);
        for (int i = 0; i < 70; ++i) {
            t[i][0] = 1;
            for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
            for (int j = i + 1; j < 70; ++j) t[i][j] = 0;
        }
        return t;
    }();
    if (k < 0 || k > n) return 0;
    return table[n][k];
}

// index of a k-subset bitmask within the increasing-numeric-order enumeration
long long colex_rank(uint64_t mask) {
    long long r = 0;
    int seen = 0;
    while (mask) {
        int p = std::countr_zero(mask);
        mask &= mask - 1;
        r += binom(p, ++seen);
    }
    return r;
}

uint64_t first_subset(int k) { return (k == 0) ? 0 : ((uint64_t(1) << k) - 1); }
uint64_t next_subset(uint64_t v) {  // Gosper; returns 0 on wrap for v = 0
    if (v == 0) return 0;
    uint64_t c = v & -v, r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

std::vector<uint64_t> states_of_popcount(int n, int r) {
    std::vector<uint64_t> out;
    if (r < 0 || r > n) return out;
    out.reserve(binom(n, r));
    for (uint64_t s = first_subset(r); s < (uint64_t(1) << n); s = next_subset(s)) {
        out.push_back(s);
        if (s == 0) break;
    }
    return out;
}

// circles of one smoothing into caller-owned scratch; returns circle count
// (edge circles only, numbered by smallest edge)
int circles_of_state(const LinkDiagram& d, uint64_t state, std::vector<int>& uf, std::vector<int>& id,
                     uint8_t* circ_of_edge) {
    const int ne = d.edge_count();
    uf.resize(ne);
    id.assign(ne, -1);
    for (int e = 0; e < ne; ++e) uf[e] = e;
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (int c = 0; c < d.crossing_count(); ++c) {
        const auto& e = d.crossings()[c].edge;
        int a0 = e[0], b0 = (state >> c & 1) ? e[1] : e[3];
        int a1 = (state >> c & 1) ? e[2] : e[1], b1 = (state >> c & 1) ? e[3] : e[2];
        uf[find(a0)] = find(b0);
        uf[find(a1)] = find(b1);
    }
    int count = 0;
    for (int e = 0; e < ne; ++e) {
        int r = find(e);
        if (id[r] < 0) id[r] = count++;
        circ_of_edge[e] = static_cast<uint8_t>(id[r]);
    }
    return count;
}

}  // namespace

CubeComplex::CubeComplex(const LinkDiagram& d, const CubeOptions& opt) : d_(d), opt_(opt) {
    n_ = d_.crossing_count();
    ne_ = d_.edge_count();
    if (n_ > opt_.max_crossings) throw std::length_error("cube: crossing count exceeds limit");
    if (n_ >= 26) throw std::length_error("cube: crossing count not supported");
    const uint64_t nstates = uint64_t(1) << n_;
    circ_count_.resize(nstates);
    circ_of_edge_.resize(nstates * ne_);
    std::vector<int> uf, id;
    for (uint64_t s = 0; s < nstates; ++s)
        circ_count_[s] = static_cast<uint8_t>(circles_of_state(d_, s, uf, id, circ_of_edge_.data() + s * ne_) +
                                              d_.free_loop_count());
}

int CubeComplex::x_count(uint64_t state, int j) const {
    const int c = circ_count_[state];
    const int r = std::popcount(state);
    const int num = c + r + qdeg_shift() - j;
    if (num < 0 || num % 2 != 0) return -1;
    const int k = num / 2;
    return (k <= c) ? k : -1;
}

std::map<std::pair<int, int>, long long> CubeComplex::generator_counts() const {
    std::map<std::pair<int, int>, long long> out;
    const uint64_t nstates = uint64_t(1) << n_;
    for (uint64_t s = 0; s < nstates; ++s) {
        const int c = circ_count_[s];
        const int r = std::popcount(s);
        const int i = r - d_.n_minus();
        for (int k = 0; k <= c; ++k) out[{i, c - 2 * k + r + qdeg_shift()}] += binom(c, k);
    }
    return out;
}

long long CubeComplex::generators_at(int i, std::optional<int> j) const {
    long long total = 0;
    for (uint64_t s : states_of_popcount(n_, i + d_.n_minus())) {
        if (!j) {
            total += int64_t(1) << circ_count_[s];
        } else {
            int k = x_count(s, *j);
            if (k >= 0) total += binom(circ_count_[s], k);
        }
    }
    return total;
}

std::vector<int> CubeComplex::column_qdegs(int i) const {
    std::vector<int> out;
    const int r = i + d_.n_minus();
    for (uint64_t s : states_of_popcount(n_, r)) {
        const int c = circ_count_[s];
        const int base = c + r + qdeg_shift();
        for (uint64_t mask = 0; mask < (uint64_t(1) << c); ++mask)
            out.push_back(base - 2 * std::popcount(mask));
    }
    return out;
}

SparseMat CubeComplex::differential(int i, std::optional<int> j, bool lee) const {
    if (lee && j) throw std::invalid_argument("cube: deformed differential does not preserve j");
    const int r = i + d_.n_minus();
    SparseMat m;
    m.resize(generators_at(i + 1, j), generators_at(i, j));
    if (r < 0 || r >= n_ || m.cols == 0) return m;

    // row starts per target state at degree i+1
    std::vector<long long> row_off(uint64_t(1) << n_, 0);
    {
        long long acc = 0;
        for (uint64_t s : states_of_popcount(n_, r + 1)) {
            row_off[s] = acc;
            if (!j) {
                acc += int64_t(1) << circ_count_[s];
            } else {
                int k = x_count(s, *j);
                if (k >= 0) acc += binom(circ_count_[s], k);
            }
        }
    }

    std::vector<int> map_c(ne_ + d_.free_loop_count() + 2);
    long long col_base = 0;
    for (uint64_t s : states_of_popcount(n_, r)) {
        const int c = circ_count_[s];
        const int me = c - d_.free_loop_count();
        int k = -1;
        long long width;
        if (!j) {
            width = int64_t(1) << c;
        } else {
            k = x_count(s, *j);
            width = (k >= 0) ? binom(c, k) : 0;
        }
        if (width == 0) continue;
        const uint8_t* cs = circ_of_edge_.data() + s * ne_;
        for (int t = 0; t < n_; ++t) {
            if (s >> t & 1) continue;
            const uint64_t s2 = s | (uint64_t(1) << t);
            const uint8_t* cs2 = circ_of_edge_.data() + s2 * ne_;
            const int me2 = circ_count_[s2] - d_.free_loop_count();
            for (int e = 0; e < ne_; ++e) map_c[cs[e]] = cs2[e];
            for (int l = 0; l < d_.free_loop_count(); ++l) map_c[me + l] = me2 + l;
            const auto& ce = d_.crossings()[t].edge;
            const int A = cs[ce[0]], B = cs[ce[1]];
            const bool is_merge = (A != B);
            const int U = cs2[ce[0]], V = cs2[ce[2]];  // merged circle is U
            const int64_t sgn = (std::popcount(s & ((uint64_t(1) << t) - 1)) % 2 == 0) ? 1 : -1;

            uint64_t mask = j ? first_subset(k) : 0;
            for (long long idx = 0; idx < width; ++idx, mask = j ? next_subset(mask) : mask + 1) {
                uint64_t base = 0;
                uint64_t rest = mask & ~((uint64_t(1) << A) | (uint64_t(1) << B));
                while (rest) {
                    int b = std::countr_zero(rest);
                    rest &= rest - 1;
                    base |= uint64_t(1) << map_c[b];
                }
                const long long col = col_base + idx;
                auto emit = [&](uint64_t target) {
                    long long row = row_off[s2] + (j ? colex_rank(target) : static_cast<long long>(target));
                    m.col[col].emplace_back(static_cast<int32_t>(row), sgn);
                };
                if (is_merge) {
                    const bool xA = mask >> A & 1, xB = mask >> B & 1;
                    if (!(xA && xB))
                        emit(base | ((xA || xB) ? (uint64_t(1) << U) : 0));
                    else if (lee)
                        emit(base);
                } else {
                    const bool xA = mask >> A & 1;
                    if (!xA) {
                        emit(base | (uint64_t(1) << U));
                        emit(base | (uint64_t(1) << V));
                    } else {
                        emit(base | (uint64_t(1) << U) | (uint64_t(1) << V));
                        if (lee) emit(base);
                    }
                }
            }
        }
        col_base += width;
    }
    for (auto& colv : m.col) std::sort(colv.begin(), colv.end());
    return m;
}

long long CubeComplex::block_rank(int i, std::optional<int> j, bool lee) const {
    SparseMat m = differential(i, j, lee);
    try {
        return rank_destructive(m);
    } catch (const std::overflow_error&) {
        return rank_rational(differential(i, j, lee));
    }
}

BigradedDims CubeComplex::homology() const {
    auto counts = generator_counts();
    std::vector<int> js;
    for (auto& [ij, cnt] : counts)
        if (js.empty() || js.back() != ij.second) js.push_back(ij.second);
    std::sort(js.begin(), js.end());
    js.erase(std::unique(js.begin(), js.end()), js.end());

    std::vector<BigradedDims> per_j(js.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t idx = next.fetch_add(1); idx < js.size(); idx = next.fetch_add(1)) {
            const int j = js[idx];
            long long prev_rank = 0;
            for (int i = i_min(); i <= i_max(); ++i) {
                auto it = counts.find({i, j});
                const long long n_ij = (it == counts.end()) ? 0 : it->second;
                auto it2 = counts.find({i + 1, j});
                const long long n_next = (it2 == counts.end()) ? 0 : it2->second;
                const long long rank_i = (n_ij == 0 || n_next == 0) ? 0 : block_rank(i, j);
                per_j[idx].add(i, j, n_ij - rank_i - prev_rank);
                prev_rank = rank_i;
            }
        }
    };
    const int nthreads = std::max(1, std::min<int>(opt_.threads, static_cast<int>(js.size())));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    BigradedDims out;
    for (auto& d : per_j)
        for (auto& [ij, rk] : d.ranks) out.add(ij.first, ij.second, rk);
    return out;
}

BigradedDims homology_dims(const LinkDiagram& d, const CubeOptions& opt) {
    // past ~12 crossings the full cube no longer fits; the scanning path is
    // checked identical to the cube on the small-diagram corpus
    if (d.crossing_count() > 12) return homology_dims_scan(d, opt.max_crossings);
    return CubeComplex(d, opt).homology();
}

LaurentQT poincare_polynomial(const BigradedDims& dims) {
    LaurentQT p;
    for (auto& [ij, rk] : dims.ranks) p.add_term(ij.second, ij.first, mpz_class(static_cast<long>(rk)));
    return p;
}

LaurentQ graded_euler_characteristic(const BigradedDims& dims) {
    LaurentQ p;
    for (auto& [ij, rk] : dims.ranks)
        p.add_term(ij.second, (ij.first % 2 == 0) ? mpz_class(static_cast<long>(rk)) : mpz_class(static_cast<long>(-rk)));
    return p;
}

LaurentQ jones_kauffman(const LinkDiagram& d, int max_crossings) {
    const int n = d.crossing_count();
    if (n > max_crossings) throw std::length_error("jones: crossing count exceeds limit");
    LaurentQ acc;
    const LaurentQ loop = LaurentQ::monomial(1) + LaurentQ::monomial(-1);
    std::vector<int> uf, id;
    std::vector<uint8_t> scratch(std::max(d.edge_count(), 1));
    std::vector<LaurentQ> loop_pow{LaurentQ::monomial(0)};
    for (uint64_t s = 0; s < (uint64_t(1) << n); ++s) {
        int c = circles_of_state(d, s, uf, id, scratch.data()) + d.free_loop_count();
        while (static_cast<int>(loop_pow.size()) <= c) loop_pow.push_back(loop_pow.back() * loop);
        const int r = std::popcount(s);
        acc += LaurentQ::monomial(r, (r % 2 == 0) ? 1 : -1) * loop_pow[c];
    }
    LaurentQ out;
    const int sign = (d.n_minus() % 2 == 0) ? 1 : -1;
    for (auto& [e, coeff] : acc.terms()) out.add_term(e + d.n_plus() - 2 * d.n_minus(), sign * coeff);
    return out;
}

}  // namespace pkh
