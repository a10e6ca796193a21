#pragma once

// Literal-definition index computations, used to cross-check the prefix-sum
// engine on random diagrams.

#include "vlink/gauss.hpp"
#include "vlink/indices.hpp"

namespace vlink_test {

// restrict to the chord's own component, then walk its left arc
inline int64_t naive_ind(const vlink::GaussDiagram& d, int chord, vlink::Convention cv) {
    using namespace vlink;
    GaussDiagram r = restrict_component(d, d.self_circle(chord));
    int id = r.find_chord(d.chord(chord).label);
    int64_t s = 0;
    for (const Endpoint& e : left_part(r, id, cv)) s += endpoint_sign(r, e, cv);
    return s;
}

inline int64_t naive_ind_prime(const vlink::GaussDiagram& d, int chord, vlink::Convention cv) {
    int64_t s = 0;
    for (const vlink::Endpoint& e : vlink::left_part(d, chord, cv))
        s += vlink::endpoint_sign(d, e, cv);
    return s;
}

inline int64_t naive_span(const vlink::GaussDiagram& d, int circle, vlink::Convention cv) {
    int64_t s = 0;
    for (const vlink::Endpoint& e : d.circles()[circle])
        if (!d.is_self(e.chord)) s += vlink::endpoint_sign(d, e, cv);
    return s;
}

}  // namespace vlink_test
