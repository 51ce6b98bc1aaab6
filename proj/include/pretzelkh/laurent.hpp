#pragma once

#include <gmpxx.h>

#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace pkh {

// Laurent polynomial in one variable q, exact integer coefficients.
class LaurentQ {
public:
    LaurentQ() = default;

    static LaurentQ monomial(int q_exp, mpz_class coeff = 1) {
        LaurentQ p;
        if (coeff != 0) p.terms_[q_exp] = std::move(coeff);
        return p;
    }

    const std::map<int, mpz_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    mpz_class coeff(int q_exp) const {
        auto it = terms_.find(q_exp);
        return it == terms_.end() ? mpz_class(0) : it->second;
    }

    void add_term(int q_exp, const mpz_class& c) {
        if (c == 0) return;
        auto it = terms_.find(q_exp);
        if (it == terms_.end()) {
            terms_[q_exp] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentQ& operator+=(const LaurentQ& o) {
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentQ& operator-=(const LaurentQ& o) {
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
    friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }

    friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
        LaurentQ r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    bool operator==(const LaurentQ& o) const = default;

    // "q^-1 + q" style, ascending exponents; "0" when empty.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto& [e, c] : terms_) {
            mpz_class a = abs(c);
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            if (a != 1 || e == 0) out << a.get_str();
            if (e != 0) {
                if (a != 1) out << "*";
                out << "q^" << e;
            }
        }
        return out.str();
    }

private:
    std::map<int, mpz_class> terms_;  // exponent -> nonzero coefficient
};

// Laurent polynomial in q and t; used for Poincare polynomials.
class LaurentQT {
public:
    using Key = std::pair<int, int>;  // (q exponent, t exponent)

    LaurentQT() = default;

    static LaurentQT monomial(int q_exp, int t_exp, mpz_class coeff = 1) {
        LaurentQT p;
        if (coeff != 0) p.terms_[{q_exp, t_exp}] = std::move(coeff);
        return p;
    }

    const std::map<Key, mpz_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    mpz_class coeff(int q_exp, int t_exp) const {
        auto it = terms_.find({q_exp, t_exp});
        return it == terms_.end() ? mpz_class(0) : it->second;
    }

    void add_term(int q_exp, int t_exp, const mpz_class& c) {
        if (c == 0) return;
        Key k{q_exp, t_exp};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_[k] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentQT& operator+=(const LaurentQT& o) {
        for (auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    friend LaurentQT operator+(LaurentQT a, const LaurentQT& b) { return a += b; }

    friend LaurentQT operator*(const LaurentQT& a, const LaurentQT& b) {
        LaurentQT r;
        for (auto& [ka, ca] : a.terms_)
            for (auto& [kb, cb] : b.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }

    bool operator==(const LaurentQT& o) const = default;

    // Substitute t = -1, keeping q.
    LaurentQ at_t_minus_one() const {
        LaurentQ r;
        for (auto& [k, c] : terms_) r.add_term(k.first, (k.second % 2 == 0) ? c : mpz_class(-c));
        return r;
    }

    // "c*q^a*t^b + ..." sorted by (q exponent, t exponent).
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto& [k, c] : terms_) {
            mpz_class a = abs(c);
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            bool wrote = false;
            if (a != 1 || (k.first == 0 && k.second == 0)) {
                out << a.get_str();
                wrote = true;
            }
            if (k.first != 0) {
                if (wrote) out << "*";
                out << "q^" << k.first;
                wrote = true;
            }
            if (k.second != 0) {
                if (wrote) out << "*";
                out << "t^" << k.second;
            }
        }
        return out.str();
    }

private:
    std::map<Key, mpz_class> terms_;
};

}  // namespace pkh
