#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vlink/gauss.hpp"
#include "vlink/indices.hpp"
#include "vlink/poly.hpp"

namespace vlink {

// W_i(t) = sum over self chords c of K_i with ind(c) != 0 of w(c) t^{ind'(c)}
std::vector<LaurentPolynomial> writhe_poly_components(const GaussDiagram& d, Convention cv);
// W(t) = sum of the W_i
LaurentPolynomial writhe_poly(const GaussDiagram& d, Convention cv);
// Wbar(t) = sum_i [ W_i(t) - t^{span_i} W_i(t^-1) ]; flat invariant
LaurentPolynomial flat_writhe(const GaussDiagram& d, Convention cv);
// P(t) = sum over all chords of w(c) t^{ind(c)} minus total writhe; knots only
LaurentPolynomial affine_index_poly(const GaussDiagram& d, Convention cv);
// f(t) = sum over chords with odd ind of w(c) t^{ind(c)+1}; knots only
LaurentPolynomial odd_writhe_poly(const GaussDiagram& d, Convention cv);

// G = sum over self chords with ind != 0 of w(c) t^{wci(c)}
ExponentSum generic_series(const GaussDiagram& d, Convention cv, const WeakChordIndex& wci);

// L(t,s) = sum over ALL chords of w(c) t^{Wbar of smooth(d,c)} minus
// total_writhe * t^{Wbar of d}; exponents are Laurent polynomials in s
ExponentSum smoothing_series(const GaussDiagram& d, Convention cv);
// weight_c(s) = ind(c) * Wbar(smooth(d,c)); self chords only
LaurentPolynomial chord_weight(const GaussDiagram& d, int chord, Convention cv);
// B(t,s) = sum over self chords of w(c) (t^{weight_c(s)} - 1)
ExponentSum weight_series(const GaussDiagram& d, Convention cv);
// Bbar = B(t,s) - B(t^-1,s); flat invariant, equals B(d) + B(mirror_all(d))
ExponentSum flat_weight_series(const GaussDiagram& d, Convention cv);

// checks W(mirror) = sum_i -t^{span_i} W_i(t^-1) by computing both sides
bool mirror_writhe_formula_holds(const GaussDiagram& d, Convention cv);

// #self crossings of any equivalent diagram >= this; max of the W bound
// (all terms) and the B bound (terms with nonzero exponent, since the unit
// terms of several chords merge and may double-count)
int64_t self_crossing_lower_bound(const GaussDiagram& d, Convention cv);
// #real crossings bound from the smoothing series, excluding the term at
// exponent Wbar(d) where the writhe summand sits
int64_t real_crossing_lower_bound(const GaussDiagram& d, Convention cv);

struct InvariantReport {
    std::string input;  // normalized code
    int components = 0;
    std::vector<int64_t> spans;  // per circle, in circle order
    LaurentPolynomial W;
    LaurentPolynomial Wbar;
    std::vector<LaurentPolynomial> W_i;
    std::optional<LaurentPolynomial> P;  // 1-component only
    std::optional<LaurentPolynomial> f;  // 1-component only
    ExponentSum L_ts;
    ExponentSum B;
    ExponentSum Bbar;
    int64_t self_crossing_lower_bound = 0;
    int64_t real_crossing_lower_bound = 0;  // text report only, not in JSON
    bool nonclassical = false;    // some of W, L_ts, B nonzero
    bool nontrivial_flat = false; // some of Wbar, Bbar nonzero
};

InvariantReport compute_report(const GaussDiagram& d, Convention cv);
std::string report_to_text(const InvariantReport& r, Convention cv);

}  // namespace vlink
