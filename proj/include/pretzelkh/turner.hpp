#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pretzelkh/diagram.hpp"
#include "pretzelkh/khovanov.hpp"

namespace pkh {

// Resolution sequence of m chosen crossings of a base diagram: d_seq[k] has
// the first k of them set to the 1-smoothing; dtilde_seq[k-1] has the first
// k-1 set to 1 and the k-th set to 0.
struct ResolutionSequence {
    LinkDiagram base;
    std::vector<int> crossing_order;  // crossing ids in the base diagram
    std::vector<LinkDiagram> d_seq;        // D_(0) .. D_(m)
    std::vector<LinkDiagram> dtilde_seq;   // D~_(1) .. D~_(m)
};

// Shift constants of the spectral sequence, indexed 1..m (entry 0 unused
// except A[0] = B[0] = 0).
struct TurnerConstants {
    std::vector<int> n_plus, n_minus;    // of D_(k), k = 0..m
    std::vector<int> nt_plus, nt_minus;  // of D~_(k), k = 1..m (index k)
    std::vector<int> a, b, a_tilde, b_tilde;  // k = 1..m (index k)
    std::vector<int> A, B;                    // k = 0..m
};

struct E1Cell {
    long long rank = 0;
    std::string leaf;          // "D~(k)" or "D(m)"
    int leaf_i = 0, leaf_j = 0;  // bigrading in the leaf homology
};

struct E1Page {
    int j = 0;
    std::map<std::pair<int, int>, E1Cell> cells;  // keyed by (s, t), rank > 0
};

// Builds all derived diagrams. Orientations: components that keep their
// orientation through a smoothing inherit it; otherwise the per-step override
// (d_orients for D_(k), dtilde_orients for D~_(k), both indexed k-1) or the
// default choice applies.
ResolutionSequence build_sequence(const LinkDiagram& d, const std::vector<int>& crossing_order,
                                  const std::vector<OrientationChoice>& d_orients = {},
                                  const std::vector<OrientationChoice>& dtilde_orients = {});

TurnerConstants constants(const ResolutionSequence& seq);

// E1^{s,t} = KH^{s+t+A_s+a~_{s+1}}_{j+B_s+b~_{s+1}}(D~_(s+1)) for s < m and
// KH^{m+t+A_m}_{j+B_m}(D_(m)) for s = m.
E1Page e1_page(const ResolutionSequence& seq, int j, const CubeOptions& opt = {});
// Shared-leaf batch version: one homology computation per leaf.
std::vector<E1Page> e1_pages(const ResolutionSequence& seq, const std::vector<int>& js,
                             const CubeOptions& opt = {});

// Sum (-1)^{s+t} rank E1^{s,t} = sum_i (-1)^i rank KH^i_j(base)?
bool e1_euler_check(const E1Page& page, const BigradedDims& dims_of_base, int j);

// every nonzero cell sits on s+t = (j-c+-1)/2?
bool diagonal_support_check(const E1Page& page, int j, int offset_c);

}  // namespace pkh
