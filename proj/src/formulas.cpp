#include "pretzelkh/formulas.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace pkh {

namespace {

void check_p(int p, bool allow_p7) {
    if (p % 2 == 0 || p < 0) throw std::invalid_argument("formula: p must be a positive odd number");
    if (p < (allow_p7 ? 7 : 9)) throw std::invalid_argument("formula: p out of published range");
}

}  // namespace

LaurentQT kh_formula_pq0(int p, bool allow_p7) {
    check_p(p, allow_p7);
    LaurentQT f;
    f.add_term(-2 * p + 5, -p + 2, 1);
    f.add_term(-2 * p + 9, -p + 3, 1);
    f.add_term(-2 * p + 9, -p + 4, 2);
    f.add_term(-2 * p + 11, -p + 5, 1);
    for (int n = -p + 7; n <= -2; n += 2) {
        const int in = (p + n - 5) / 2;
        f.add_term(2 * n - 1, n - 2, in + 1);
        f.add_term(2 * n - 1, n - 1, in + 2);
        f.add_term(2 * n + 1, n - 1, in);
        f.add_term(2 * n + 1, n, in + 1);
    }
    const int i0 = (p - 9) / 2;
    f.add_term(-1, -2, i0 + 3);
    f.add_term(-1, -1, i0 + 3);
    f.add_term(1, -1, i0 + 2);
    f.add_term(1, 0, i0 + 4);
    f.add_term(3, 0, i0 + 4);
    f.add_term(3, 1, i0 + 3);
    f.add_term(5, 1, i0 + 3);
    f.add_term(5, 2, i0 + 4);
    for (int m = 2; m <= p - 3; m += 2) {
        const int im = (p - m - 3) / 2;
        f.add_term(2 * m + 3, m, im + 1);
        f.add_term(2 * m + 3, m + 1, im);
        f.add_term(2 * m + 5, m + 1, im + 2);
        f.add_term(2 * m + 5, m + 2, im + 1);
    }
    f.add_term(2 * p + 3, p, 1);
    return f;
}

LaurentQT kh_formula_pqr(int p, int r, bool allow_p7) {
    check_p(p, allow_p7);
    if (r < 2 || r % 2 != 0) throw std::invalid_argument("formula: r must be a positive even number");
    const LaurentQT base = kh_formula_pq0(p, allow_p7);
    if (r == 2) {
        LaurentQT f = LaurentQT::monomial(4, 2) * base;
        f.add_term(1, 0, 1);
        f.add_term(3, 0, 1);
        f.add_term(3, 1, 1);
        f.add_term(9, 3, 1);
        return f;
    }
    LaurentQT f = LaurentQT::monomial(2 * r, r) * base;
    f.add_term(1, 0, 1);
    f.add_term(3, 0, 1);
    f.add_term(3, 1, 1);
    for (int k = 1; k <= r / 2 - 1; ++k) {
        // q^{4k} t^{2k} (q + q^3)(1 + q^2 t)
        f.add_term(4 * k + 1, 2 * k, 1);
        f.add_term(4 * k + 3, 2 * k, 1);
        f.add_term(4 * k + 3, 2 * k + 1, 1);
        f.add_term(4 * k + 5, 2 * k + 1, 1);
    }
    f.add_term(2 * r + 5, r + 1, 1);
    return f;
}

int omega_of(int p, int q, int r) { return p * q + q * r + r * p; }

namespace {

// One classification pass over a triple whose entries all have |entry| >= 2.
// Returns false when the sign pattern only matches a table row after a global
// mirror (the caller then negates the triple and flips the results).
bool classify(std::array<int, 3> t, SPrediction& out) {
    const int w = omega_of(t[0], t[1], t[2]);
    std::array<int, 3> odd, even;
    int no = 0, ne = 0;
    for (int v : t) (v % 2 != 0 ? odd[no++] : even[ne++]) = v;
    if (ne == 1) {
        const int o1 = odd[0], o2 = odd[1], e = even[0];
        if (o1 > 0 && o2 > 0 && e > 0) {  // P(p,q,r): alternating
            out.exact = o1 + o2 - 2;
            out.sigma = -(o1 + o2 - 2);
            out.alternating = true;
            out.case_tag = "Table6-alternating";
            return true;
        }
        if (o1 > 0 && o2 > 0 && e < 0) {  // P(p,q,-r): positive diagram
            out.exact = o1 + o2;
            if (w < 0) out.sigma = -o1 - o2;
            if (w > 0) out.sigma = -o1 - o2 + 2;
            out.case_tag = "Table6-positive";
            return true;
        }
        if (e < 0 && ((o1 > 0) != (o2 > 0))) {  // P(p,-q,-r): s = p - q
            const int pp = std::max(o1, o2), qq = -std::min(o1, o2);
            out.exact = pp - qq;
            out.interval = {pp - qq - 2, pp - qq};
            if (w < 0) out.sigma = -(pp - qq);
            if (w > 0) out.sigma = -(pp - qq - 2);
            out.case_tag = "Thm1.2";
            return true;
        }
        return false;
    }
    std::sort(odd.begin(), odd.end(), std::greater<>());
    if (odd[0] > 0 && odd[1] > 0 && odd[2] > 0) {  // P(p,q,r): negative diagram
        out.exact = -2;
        out.sigma = 2;
        out.alternating = true;
        out.case_tag = "Table7-negative";
        return true;
    }
    if (odd[1] > 0 && odd[2] < 0) {  // P(p,q,-r): mirror of the Thm 1.3 family
        const int c = -odd[2], m = std::min(odd[0], odd[1]);
        if (w < 0) out.sigma = 0;
        if (w > 0) out.sigma = 2;
        out.interval = {-2, 0};
        if (c > m) {
            out.exact = 0;
            out.case_tag = "Thm1.3-pgtmin";
        } else if (c < m) {
            out.exact = -2;
            out.case_tag = "Thm1.3-pltmin";
        } else {
            out.case_tag = "open";
        }
        return true;
    }
    if (odd[0] > 0 && odd[1] < 0) {  // P(p,-q,-r), all odd: Thm 1.3 directly
        const int a = odd[0], m = std::min(-odd[1], -odd[2]);
        if (w < 0) out.sigma = 0;
        if (w > 0) out.sigma = -2;
        out.interval = {0, 2};
        if (a > m) {
            out.exact = 0;
            out.case_tag = "Thm1.3-pgtmin";
        } else if (a < m) {
            out.exact = 2;
            out.case_tag = "Thm1.3-pltmin";
        } else {
            out.case_tag = "open";
        }
        return true;
    }
    return false;  // all negative: mirror of the alternating all-odd row
}

}  // namespace

SPrediction predict_s(int p, int q, int r) {
    int evens = (p % 2 == 0) + (q % 2 == 0) + (r % 2 == 0);
    if (evens > 1) throw std::invalid_argument("predict_s: P(p,q,r) is not a knot");
    SPrediction out;
    if (std::abs(p) <= 1 || std::abs(q) <= 1 || std::abs(r) <= 1) {
        out.case_tag = "outside-tables";
        return out;
    }
    if (classify({p, q, r}, out)) return out;
    SPrediction m;
    if (!classify({-p, -q, -r}, m)) throw std::logic_error("predict_s: unclassified triple");
    out.case_tag = m.case_tag;
    out.alternating = m.alternating;
    if (m.exact) out.exact = -*m.exact;
    if (m.sigma) out.sigma = -*m.sigma;
    if (m.interval) out.interval = {-m.interval->second, -m.interval->first};
    return out;
}

std::optional<int> sigma_prediction(int p, int q, int r) {
    int evens = (p % 2 == 0) + (q % 2 == 0) + (r % 2 == 0);
    if (evens > 1) return std::nullopt;
    if (std::abs(p) <= 1 || std::abs(q) <= 1 || std::abs(r) <= 1) return std::nullopt;
    return predict_s(p, q, r).sigma;
}

std::set<std::pair<int, int>> torus_support(int p) {
    if (p < 2) throw std::invalid_argument("torus_support: p >= 2 required");
    std::set<std::pair<int, int>> s;
    for (int i = 0; i <= p; ++i) {
        s.insert({i, p - 2 + 2 * i});
        s.insert({i, p + 2 * i});
    }
    return s;
}

}  // namespace pkh
