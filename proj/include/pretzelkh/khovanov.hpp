#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pretzelkh/diagram.hpp"
#include "pretzelkh/laurent.hpp"
#include "pretzelkh/sparse_rank.hpp"

namespace pkh {

// Homology ranks keyed by (homological degree i, quantum degree j); zero
// ranks are never stored.
struct BigradedDims {
    std::map<std::pair<int, int>, long long> ranks;

    long long rank(int i, int j) const {
        auto it = ranks.find({i, j});
        return it == ranks.end() ? 0 : it->second;
    }
    void add(int i, int j, long long r) {
        if (r != 0) ranks[{i, j}] += r;
    }
    bool operator==(const BigradedDims&) const = default;
};

struct CubeOptions {
    int max_crossings = 22;
    int threads = 1;
};

// Cube of resolutions of a diagram with the rank-2 Frobenius algebra {1, x}.
// Generators live at vertices (state bitmask; bit = 1-smoothing) and carry a
// label subset (set bit = x on that circle). Gradings: i = |state| - n_minus,
// j = (#circles - 2#x) + |state| + n_plus - 2 n_minus.
class CubeComplex {
public:
    explicit CubeComplex(const LinkDiagram& d, const CubeOptions& opt = {});

    const LinkDiagram& diagram() const { return d_; }
    int i_min() const { return -d_.n_minus(); }
    int i_max() const { return d_.crossing_count() - d_.n_minus(); }

    // total generator count per bigrading
    std::map<std::pair<int, int>, long long> generator_counts() const;
    long long generators_at(int i, std::optional<int> j = {}) const;
    // quantum degrees of the slice-i generators in column order (full slice)
    std::vector<int> column_qdegs(int i) const;

    // Differential block from degree i to i+1. With j given, only the
    // quantum-degree-j generators (the Khovanov differential preserves j).
    // With lee = true the deformed terms (m(xx)=1, the 1#1 term of delta(x))
    // are included; these raise j by 4, so lee requires j = nullopt.
    SparseMat differential(int i, std::optional<int> j, bool lee = false) const;

    // rank of a differential block, falling back to all-rational arithmetic
    // if int64 elimination overflows
    long long block_rank(int i, std::optional<int> j, bool lee = false) const;

    BigradedDims homology() const;  // blockwise rank-nullity, per j

private:
    LinkDiagram d_;
    CubeOptions opt_;
    int n_ = 0, ne_ = 0;
    std::vector<uint8_t> circ_count_;    // per state
    std::vector<uint8_t> circ_of_edge_;  // per state, ne_ entries

    int qdeg_shift() const { return d_.n_plus() - 2 * d_.n_minus(); }
    // #x labels for a degree-j generator on a state with c circles, or -1
    int x_count(uint64_t state, int j) const;
};

BigradedDims homology_dims(const LinkDiagram& d, const CubeOptions& opt = {});

LaurentQT poincare_polynomial(const BigradedDims& dims);
LaurentQ graded_euler_characteristic(const BigradedDims& dims);

// Independent oracle: unnormalized Jones polynomial by the Kauffman state
// sum, (-1)^{n-} q^{n+ - 2n-} sum_s (-q)^{|s|} (q + q^{-1})^{circles(s)}.
LaurentQ jones_kauffman(const LinkDiagram& d, int max_crossings = 22);

}  // namespace pkh
