#include "vlink/poly.hpp"

#include <cstdlib>

namespace vlink {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError{};
    return r;
}

int64_t checked_neg(int64_t a) {
    int64_t r;
    if (__builtin_sub_overflow(int64_t{0}, a, &r)) throw OverflowError{};
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError{};
    return r;
}

LaurentPolynomial LaurentPolynomial::monomial(int64_t coeff, int64_t exp) {
    LaurentPolynomial p;
    p.add_term(coeff, exp);
    return p;
}

int64_t LaurentPolynomial::coeff(int64_t exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
}

int64_t LaurentPolynomial::eval_at_one() const {
    int64_t s = 0;
    for (auto& [e, c] : terms_) s = checked_add(s, c);
    return s;
}

void LaurentPolynomial::add_term(int64_t coeff, int64_t exp) {
    if (coeff == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, coeff);
        return;
    }
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
}

LaurentPolynomial lp_add(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r = a;
    for (auto& [e, c] : b.terms()) r.add_term(c, e);
    return r;
}

LaurentPolynomial lp_neg(const LaurentPolynomial& a) {
    LaurentPolynomial r;
    for (auto& [e, c] : a.terms()) r.add_term(checked_neg(c), e);
    return r;
}

LaurentPolynomial lp_sub(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return lp_add(a, lp_neg(b));
}

LaurentPolynomial lp_scale(const LaurentPolynomial& a, int64_t k) {
    LaurentPolynomial r;
    for (auto& [e, c] : a.terms()) r.add_term(checked_mul(c, k), e);
    return r;
}

LaurentPolynomial lp_mul_monomial(const LaurentPolynomial& a, int64_t k) {
    LaurentPolynomial r;
    for (auto& [e, c] : a.terms()) r.add_term(c, checked_add(e, k));
    return r;
}

LaurentPolynomial lp_invert_variable(const LaurentPolynomial& a) {
    LaurentPolynomial r;
    for (auto& [e, c] : a.terms()) r.add_term(c, checked_neg(e));
    return r;
}

int64_t lp_coeff_abs_sum(const LaurentPolynomial& a, bool exclude_zero_exponent) {
    int64_t s = 0;
    for (auto& [e, c] : a.terms()) {
        if (exclude_zero_exponent && e == 0) continue;
        s = checked_add(s, c < 0 ? checked_neg(c) : c);
    }
    return s;
}

std::string lp_to_text(const LaurentPolynomial& a, const std::string& var) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [e, c] : a.terms()) {  // ascending exponent
        int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1 || e == 0) out += std::to_string(mag);
        if (e != 0) {
            if (mag != 1) out += "*";
            out += var;
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

ExponentSum ExponentSum::term(int64_t coeff, const LaurentPolynomial& g) {
    ExponentSum e;
    e.add_term(coeff, g);
    return e;
}

void ExponentSum::add_term(int64_t coeff, const LaurentPolynomial& g) {
    if (coeff == 0) return;
    auto it = terms_.find(g);
    if (it == terms_.end()) {
        terms_.emplace(g, coeff);
        return;
    }
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
}

ExponentSum es_add(const ExponentSum& a, const ExponentSum& b) {
    ExponentSum r = a;
    for (auto& [g, c] : b.terms()) r.add_term(c, g);
    return r;
}

ExponentSum es_neg(const ExponentSum& a) {
    ExponentSum r;
    for (auto& [g, c] : a.terms()) r.add_term(checked_neg(c), g);
    return r;
}

ExponentSum es_sub(const ExponentSum& a, const ExponentSum& b) {
    return es_add(a, es_neg(b));
}

ExponentSum es_invert_t(const ExponentSum& a) {
    ExponentSum r;
    for (auto& [g, c] : a.terms()) r.add_term(c, lp_neg(g));
    return r;
}

ExponentSum es_invert_s(const ExponentSum& a) {
    ExponentSum r;
    for (auto& [g, c] : a.terms()) r.add_term(c, lp_invert_variable(g));
    return r;
}

int64_t es_coeff_abs_sum(const ExponentSum& a, bool exclude_zero_exponent) {
    int64_t s = 0;
    for (auto& [g, c] : a.terms()) {
        if (exclude_zero_exponent && g.is_zero()) continue;
        s = checked_add(s, c < 0 ? checked_neg(c) : c);
    }
    return s;
}

int64_t es_coeff_abs_sum_excluding(const ExponentSum& a, const LaurentPolynomial& excluded) {
    int64_t s = 0;
    for (auto& [g, c] : a.terms()) {
        if (g == excluded) continue;
        s = checked_add(s, c < 0 ? checked_neg(c) : c);
    }
    return s;
}

std::optional<LaurentPolynomial> es_collapse_constant_exponents(const ExponentSum& a) {
    LaurentPolynomial out;
    for (auto& [g, c] : a.terms()) {
        for (auto& [e, gc] : g.terms())
            if (e != 0) return std::nullopt;
        out.add_term(c, g.coeff(0));
    }
    return out;
}

std::string es_to_text(const ExponentSum& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [g, c] : a.terms()) {  // canonical key order
        int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1) out += std::to_string(mag) + "*";
        out += "t^[" + lp_to_text(g, "s") + "]";
    }
    return out;
}

}  // namespace vlink
