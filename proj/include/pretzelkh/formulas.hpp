#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>

#include "pretzelkh/laurent.hpp"

namespace pkh {

// Closed-form Poincare polynomial (variables q, t) of the rational Khovanov
// homology of P(p,-(p-2),0), p odd. The published range is p >= 9; pass
// allow_p7 to evaluate the same expression at p = 7 (extrapolated, checked
// against direct computation only).
LaurentQT kh_formula_pq0(int p, bool allow_p7 = false);

// Same for P(p,-(p-2),-r), r positive even: the r = 2 and r >= 4 branches of
// the shifted-formula family.
LaurentQT kh_formula_pqr(int p, int r, bool allow_p7 = false);

struct SPrediction {
    std::optional<int> exact;                      // theorem/table value when pinned down
    std::optional<std::pair<int, int>> interval;   // bound [lo, hi] when the tables give one
    std::string case_tag;
    std::optional<int> sigma;
    bool alternating = false;
};

// s-invariant of the pretzel knot P(p,q,r) from the classification tables,
// canonicalized over permutations and the global mirror (both of which are
// controlled symmetries of s). Throws on triples that are not knots; returns
// an empty prediction (tag "outside-tables") when some |entry| <= 1, which the
// tables' standing two-half-twist assumption excludes.
SPrediction predict_s(int p, int q, int r);

// Signature column of the same tables (omega = pq+qr+rp case split); absent
// for triples the tables do not cover.
std::optional<int> sigma_prediction(int p, int q, int r);

int omega_of(int p, int q, int r);

// Support superset {(i, p-1±1+2i) : 0 <= i <= p} for KH(T(2,p)), p >= 2.
std::set<std::pair<int, int>> torus_support(int p);

}  // namespace pkh
