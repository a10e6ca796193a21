#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace vlink {

struct OverflowError : std::runtime_error {
    OverflowError() : std::runtime_error("integer overflow in coefficient arithmetic") {}
};

// Coefficient arithmetic traps instead of wrapping. Values stay tiny in
// practice (bounded by crossing counts), so this is purely defensive.
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_neg(int64_t a);
int64_t checked_mul(int64_t a, int64_t b);

// Laurent polynomial in one formal variable over the integers.
// Canonical: zero coefficients are never stored. The variable is anonymous;
// names like "t" or "s" exist only in the printed form.
class LaurentPolynomial {
public:
    using Terms = std::map<int64_t, int64_t>;  // exponent -> coefficient

    LaurentPolynomial() = default;

    static LaurentPolynomial monomial(int64_t coeff, int64_t exp);
    static LaurentPolynomial constant(int64_t value) { return monomial(value, 0); }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    int64_t coeff(int64_t exp) const;
    int64_t eval_at_one() const;

    void add_term(int64_t coeff, int64_t exp);

    bool operator==(const LaurentPolynomial&) const = default;
    // Total order: lexicographic over the canonical term sequence. Used for
    // ExponentSum keys and deterministic serialization.
    bool operator<(const LaurentPolynomial& o) const { return terms_ < o.terms_; }

private:
    Terms terms_;
};

LaurentPolynomial lp_add(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial lp_neg(const LaurentPolynomial& a);
LaurentPolynomial lp_sub(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial lp_scale(const LaurentPolynomial& a, int64_t k);
// multiply by the monomial x^k, i.e. shift every exponent by k
LaurentPolynomial lp_mul_monomial(const LaurentPolynomial& a, int64_t k);
// substitute x -> x^-1
LaurentPolynomial lp_invert_variable(const LaurentPolynomial& a);
int64_t lp_coeff_abs_sum(const LaurentPolynomial& a, bool exclude_zero_exponent = false);
std::string lp_to_text(const LaurentPolynomial& a, const std::string& var = "t");

// Formal integer combination of symbols t^g where each exponent g is itself a
// Laurent polynomial (in s). Group-ring-style model for the two-variable
// series; only addition is needed.
class ExponentSum {
public:
    using Terms = std::map<LaurentPolynomial, int64_t>;  // exponent -> coefficient

    ExponentSum() = default;
    static ExponentSum term(int64_t coeff, const LaurentPolynomial& g);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    void add_term(int64_t coeff, const LaurentPolynomial& g);

    bool operator==(const ExponentSum&) const = default;

private:
    Terms terms_;
};

ExponentSum es_add(const ExponentSum& a, const ExponentSum& b);
ExponentSum es_neg(const ExponentSum& a);
ExponentSum es_sub(const ExponentSum& a, const ExponentSum& b);
ExponentSum es_invert_t(const ExponentSum& a);  // t -> t^-1: exponent g -> -g
ExponentSum es_invert_s(const ExponentSum& a);  // s -> s^-1 inside each exponent
int64_t es_coeff_abs_sum(const ExponentSum& a, bool exclude_zero_exponent = false);
// abs-coefficient sum over terms whose exponent differs from `excluded`
int64_t es_coeff_abs_sum_excluding(const ExponentSum& a, const LaurentPolynomial& excluded);
// When every exponent is a constant polynomial n, collapse t^n terms into a
// plain Laurent polynomial in t. Empty optional otherwise.
std::optional<LaurentPolynomial> es_collapse_constant_exponents(const ExponentSum& a);
std::string es_to_text(const ExponentSum& a);

}  // namespace vlink
