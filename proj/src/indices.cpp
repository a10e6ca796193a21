#include "vlink/indices.hpp"

namespace vlink {

Convention default_convention() { return kConventionA; }

Convention convention_by_name(std::string_view name) {
    if (name == "default" || name == "a") return kConventionA;
    if (name == "b") return kConventionB;
    if (name == "c") return kConventionC;
    if (name == "d") return kConventionD;
    throw DomainError("unknown convention '" + std::string(name) + "'");
}

std::string convention_name(Convention cv) {
    if (cv == kConventionA) return "a";
    if (cv == kConventionB) return "b";
    if (cv == kConventionC) return "c";
    return "d";
}

int endpoint_sign(const GaussDiagram& d, Endpoint e, Convention cv) {
    int w = d.chord(e.chord).sign;
    return e.role == Role::Over ? cv.over_sign_factor * w : -cv.over_sign_factor * w;
}

std::vector<Endpoint> left_part(const GaussDiagram& d, int chord, Convention cv) {
    int k = d.self_circle(chord);
    const Chord& c = d.chord(chord);
    const auto& circ = d.circles()[k];
    const int n = (int)circ.size();
    int start, end;
    if (cv.left_arc == LeftArc::OverToUnder) {
        start = c.over_end.pos;
        end = c.under_end.pos;
    } else {
        start = c.under_end.pos;
        end = c.over_end.pos;
    }
    std::vector<Endpoint> out;
    for (int j = (start + 1) % n; j != end; j = (j + 1) % n) out.push_back(circ[j]);
    return out;
}

IndexEngine::IndexEngine(const GaussDiagram& d, Convention cv) : d_(&d), cv_(cv) {
    pref_all_.resize(d.circle_count());
    pref_self_.resize(d.circle_count());
    for (int k = 0; k < d.circle_count(); ++k) {
        const auto& circ = d.circles()[k];
        pref_all_[k].assign(circ.size() + 1, 0);
        pref_self_[k].assign(circ.size() + 1, 0);
        for (size_t j = 0; j < circ.size(); ++j) {
            int64_t v = endpoint_sign(d, circ[j], cv);
            pref_all_[k][j + 1] = pref_all_[k][j] + v;
            pref_self_[k][j + 1] = pref_self_[k][j] + (d.is_self(circ[j].chord) ? v : 0);
        }
    }
}

// sum over positions strictly between start and end, walking forward (cyclic)
int64_t IndexEngine::range_sum(const std::vector<std::vector<int64_t>>& pref, int circle,
                               int start, int end) const {
    const auto& p = pref[circle];
    const int n = (int)p.size() - 1;
    if (start < end) return p[end] - p[start + 1];
    return (p[n] - p[start + 1]) + p[end];
}

int64_t IndexEngine::arc_sum(const std::vector<std::vector<int64_t>>& pref, int chord) const {
    int k = d_->self_circle(chord);
    const Chord& c = d_->chord(chord);
    int start, end;
    if (cv_.left_arc == LeftArc::OverToUnder) {
        start = c.over_end.pos;
        end = c.under_end.pos;
    } else {
        start = c.under_end.pos;
        end = c.over_end.pos;
    }
    return range_sum(pref, k, start, end);
}

int64_t IndexEngine::ind(int chord) const { return arc_sum(pref_self_, chord); }

int64_t IndexEngine::ind_prime(int chord) const { return arc_sum(pref_all_, chord); }

int64_t IndexEngine::span(int circle) const {
    if (circle < 0 || circle >= d_->circle_count())
        throw DomainError("circle index out of range");
    const int n = (int)pref_all_[circle].size() - 1;
    return pref_all_[circle][n] - pref_self_[circle][n];
}

int64_t ind(const GaussDiagram& d, int chord, Convention cv) {
    return IndexEngine(d, cv).ind(chord);
}

int64_t ind_prime(const GaussDiagram& d, int chord, Convention cv) {
    return IndexEngine(d, cv).ind_prime(chord);
}

int64_t span(const GaussDiagram& d, int circle, Convention cv) {
    return IndexEngine(d, cv).span(circle);
}

std::multiset<int64_t> span_multiset(const GaussDiagram& d, Convention cv) {
    IndexEngine eng(d, cv);
    std::multiset<int64_t> out;
    for (int k = 0; k < d.circle_count(); ++k) out.insert(eng.span(k));
    return out;
}

WeakChordIndex wci_ind_prime(Convention cv) {
    return [cv](const GaussDiagram& d, int chord) {
        return LaurentPolynomial::constant(ind_prime(d, chord, cv));
    };
}

}  // namespace vlink
