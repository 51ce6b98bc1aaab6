#pragma once

#include <gmpxx.h>

#include <map>
#include <tuple>
#include <vector>

#include "pretzelkh/diagram.hpp"
#include "pretzelkh/khovanov.hpp"
#include "pretzelkh/lee.hpp"

namespace pkh {

// Chain complex left over after scanning a closed diagram crossing by
// crossing in the delooped cobordism category and cancelling every
// filtration-degree-0 isomorphism entry. Over the undeformed algebra the
// differential cancels completely and the generators are the homology; over
// the deformed algebra the remaining entries strictly raise the quantum
// filtration.
struct ReducedComplex {
    struct Gen {
        int i = 0;
        int q = 0;
    };
    std::vector<Gen> gens;
    std::vector<std::tuple<int, int, mpq_class>> entries;  // (from, to, coeff), i_to = i_from+1
    int free_loops = 0;
};

ReducedComplex scan_reduce(const LinkDiagram& d, bool lee, int max_crossings = 22);

// Same invariants as the cube-of-resolutions path, via scanning. Results are
// checked identical on the small-diagram corpus; use these for big diagrams.
BigradedDims homology_dims_scan(const LinkDiagram& d, int max_crossings = 22);
std::map<int, long long> lee_homology_rank_scan(const LinkDiagram& d, int max_crossings = 22);
SInvariantResult s_invariant_scan(const LinkDiagram& d, int max_crossings = 22);

}  // namespace pkh
