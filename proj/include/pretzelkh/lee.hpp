#pragma once

#include <map>
#include <optional>

#include "pretzelkh/diagram.hpp"
#include "pretzelkh/khovanov.hpp"

namespace pkh {

struct SInvariantResult {
    int s = 0;
    int s_min = 0;
    int s_max = 0;
    long long lee_rank = 0;  // rank of the degree-0 Lee homology
};

// Ranks of Lee homology per homological degree (zero ranks omitted).
std::map<int, long long> lee_homology_rank(const LinkDiagram& d, const CubeOptions& opt = {});

// Rasmussen invariant of a knot from the quantum filtration on degree-0 Lee
// homology: with r(j) = rank of the image of H(F_j) in the total homology,
// s_min is the largest filtration level with r = 2 and s_max the largest
// with r >= 1; s = s_min + 1 = s_max - 1.
SInvariantResult s_invariant(const LinkDiagram& d, const CubeOptions& opt = {});

// Diagonal offset c with supp(dims) inside {j = 2i + c +- 1}, when both
// diagonals are inhabited (making c unique).
std::optional<int> is_h_thin(const BigradedDims& dims);

// For an H-thin knot s equals the diagonal offset.
int s_from_thin(const BigradedDims& dims);

}  // namespace pkh
