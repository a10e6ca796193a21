#include "vlink/invariants.hpp"

#include <sstream>

#include "vlink/moves.hpp"

namespace vlink {

std::vector<LaurentPolynomial> writhe_poly_components(const GaussDiagram& d, Convention cv) {
    IndexEngine eng(d, cv);
    std::vector<LaurentPolynomial> out(d.circle_count());
    for (int c = 0; c < d.chord_count(); ++c) {
        if (!d.is_self(c) || eng.ind(c) == 0) continue;
        out[d.self_circle(c)].add_term(d.chord(c).sign, eng.ind_prime(c));
    }
    return out;
}

LaurentPolynomial writhe_poly(const GaussDiagram& d, Convention cv) {
    LaurentPolynomial w;
    for (const LaurentPolynomial& wi : writhe_poly_components(d, cv)) w = lp_add(w, wi);
    return w;
}

LaurentPolynomial flat_writhe(const GaussDiagram& d, Convention cv) {
    IndexEngine eng(d, cv);
    auto wi = writhe_poly_components(d, cv);
    LaurentPolynomial out;
    for (int k = 0; k < d.circle_count(); ++k) {
        out = lp_add(out, wi[k]);
        out = lp_sub(out, lp_mul_monomial(lp_invert_variable(wi[k]), eng.span(k)));
    }
    return out;
}

namespace {

void require_knot(const GaussDiagram& d) {
    if (d.circle_count() != 1)
        throw DomainError("invariant is defined for one-component diagrams only");
}

}  // namespace

LaurentPolynomial affine_index_poly(const GaussDiagram& d, Convention cv) {
    require_knot(d);
    IndexEngine eng(d, cv);
    LaurentPolynomial p;
    for (int c = 0; c < d.chord_count(); ++c) p.add_term(d.chord(c).sign, eng.ind(c));
    p.add_term(-d.total_writhe(), 0);
    return p;
}

LaurentPolynomial odd_writhe_poly(const GaussDiagram& d, Convention cv) {
    require_knot(d);
    IndexEngine eng(d, cv);
    LaurentPolynomial p;
    for (int c = 0; c < d.chord_count(); ++c) {
        int64_t i = eng.ind(c);
        if (i % 2 != 0) p.add_term(d.chord(c).sign, i + 1);
    }
    return p;
}

ExponentSum generic_series(const GaussDiagram& d, Convention cv, const WeakChordIndex& wci) {
    IndexEngine eng(d, cv);
    ExponentSum out;
    for (int c = 0; c < d.chord_count(); ++c) {
        if (!d.is_self(c) || eng.ind(c) == 0) continue;
        out.add_term(d.chord(c).sign, wci(d, c));
    }
    return out;
}

ExponentSum smoothing_series(const GaussDiagram& d, Convention cv) {
    ExponentSum out;
    for (int c = 0; c < d.chord_count(); ++c)
        out.add_term(d.chord(c).sign, flat_writhe(smooth(d, c), cv));
    out.add_term(-d.total_writhe(), flat_writhe(d, cv));
    return out;
}

LaurentPolynomial chord_weight(const GaussDiagram& d, int chord, Convention cv) {
    int64_t i = ind(d, chord, cv);
    return lp_scale(flat_writhe(smooth(d, chord), cv), i);
}

ExponentSum weight_series(const GaussDiagram& d, Convention cv) {
    IndexEngine eng(d, cv);
    ExponentSum out;
    for (int c = 0; c < d.chord_count(); ++c) {
        if (!d.is_self(c) || eng.ind(c) == 0) continue;  // weight 0, term cancels
        LaurentPolynomial w = lp_scale(flat_writhe(smooth(d, c), cv), eng.ind(c));
        out.add_term(d.chord(c).sign, w);
        out.add_term(-d.chord(c).sign, LaurentPolynomial{});
    }
    return out;
}

ExponentSum flat_weight_series(const GaussDiagram& d, Convention cv) {
    ExponentSum b = weight_series(d, cv);
    return es_sub(b, es_invert_t(b));
}

bool mirror_writhe_formula_holds(const GaussDiagram& d, Convention cv) {
    GaussDiagram m = mirror_all(d);
    LaurentPolynomial lhs = writhe_poly(m, cv);
    IndexEngine eng(d, cv);
    LaurentPolynomial rhs;
    auto wi = writhe_poly_components(d, cv);
    for (int k = 0; k < d.circle_count(); ++k)
        rhs = lp_sub(rhs, lp_mul_monomial(lp_invert_variable(wi[k]), eng.span(k)));
    return lhs == rhs;
}

int64_t self_crossing_lower_bound(const GaussDiagram& d, Convention cv) {
    int64_t from_w = lp_coeff_abs_sum(writhe_poly(d, cv));
    int64_t from_b = es_coeff_abs_sum(weight_series(d, cv), /*exclude_zero_exponent=*/true);
    return std::max(from_w, from_b);
}

int64_t real_crossing_lower_bound(const GaussDiagram& d, Convention cv) {
    return es_coeff_abs_sum_excluding(smoothing_series(d, cv), flat_writhe(d, cv));
}

InvariantReport compute_report(const GaussDiagram& d, Convention cv) {
    InvariantReport r;
    r.input = serialize(d);
    r.components = d.circle_count();
    IndexEngine eng(d, cv);
    for (int k = 0; k < d.circle_count(); ++k) r.spans.push_back(eng.span(k));
    r.W_i = writhe_poly_components(d, cv);
    for (const LaurentPolynomial& wi : r.W_i) r.W = lp_add(r.W, wi);
    r.Wbar = flat_writhe(d, cv);
    if (d.circle_count() == 1) {
        r.P = affine_index_poly(d, cv);
        r.f = odd_writhe_poly(d, cv);
    }
    r.L_ts = smoothing_series(d, cv);
    r.B = weight_series(d, cv);
    r.Bbar = es_sub(r.B, es_invert_t(r.B));
    r.self_crossing_lower_bound =
        std::max(lp_coeff_abs_sum(r.W), es_coeff_abs_sum(r.B, true));
    r.real_crossing_lower_bound = es_coeff_abs_sum_excluding(r.L_ts, r.Wbar);
    r.nonclassical = !r.W.is_zero() || !r.L_ts.is_zero() || !r.B.is_zero();
    r.nontrivial_flat = !r.Wbar.is_zero() || !r.Bbar.is_zero();
    return r;
}

std::string report_to_text(const InvariantReport& r, Convention cv) {
    std::ostringstream os;
    os << "diagram:      " << r.input << "\n";
    os << "convention:   " << convention_name(cv) << "\n";
    os << "components:   " << r.components << "\n";
    os << "spans:       ";
    for (int64_t s : r.spans) os << " " << s;
    os << "\n";
    os << "W:            " << lp_to_text(r.W) << "\n";
    for (size_t k = 0; k < r.W_i.size(); ++k)
        os << "  W_" << k + 1 << ":        " << lp_to_text(r.W_i[k]) << "\n";
    os << "Wbar:         " << lp_to_text(r.Wbar) << "\n";
    os << "P:            " << (r.P ? lp_to_text(*r.P) : std::string("n/a")) << "\n";
    os << "f:            " << (r.f ? lp_to_text(*r.f) : std::string("n/a")) << "\n";
    os << "L(t,s):       " << es_to_text(r.L_ts) << "\n";
    os << "B(t,s):       " << es_to_text(r.B) << "\n";
    os << "Bbar(t,s):    " << es_to_text(r.Bbar) << "\n";
    os << "self crossings >= " << r.self_crossing_lower_bound << "\n";
    os << "real crossings >= " << r.real_crossing_lower_bound << "\n";
    os << "nonclassical:   " << (r.nonclassical ? "yes" : "no") << "\n";
    os << "nontrivial flat: " << (r.nontrivial_flat ? "yes" : "no") << "\n";
    return os.str();
}

}  // namespace vlink
