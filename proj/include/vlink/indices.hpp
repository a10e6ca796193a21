#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "vlink/gauss.hpp"
#include "vlink/poly.hpp"

namespace vlink {

enum class LeftArc : uint8_t { OverToUnder, UnderToOver };

// The figure-defined choices the index sums depend on: which sign an Over
// endpoint carries, and which open arc of a self chord counts as left(c).
struct Convention {
    int over_sign_factor;  // sign(e) = over_sign_factor * w(c) at the Over endpoint
    LeftArc left_arc;
    bool operator==(const Convention&) const = default;
};

inline constexpr Convention kConventionA{+1, LeftArc::OverToUnder};
inline constexpr Convention kConventionB{+1, LeftArc::UnderToOver};
inline constexpr Convention kConventionC{-1, LeftArc::OverToUnder};
inline constexpr Convention kConventionD{-1, LeftArc::UnderToOver};

// The calibrated default (convention "a"). Of the four candidates it is the
// only one reproducing both anchor values of the Kishino fixture: every
// chord has ind = -1, and smoothing chord 1 gives flat writhe
// s^-1 + s - 1 - s^-2. The acceptance suite re-asserts both.
Convention default_convention();
Convention convention_by_name(std::string_view name);  // "default", "a".."d"
std::string convention_name(Convention cv);

int endpoint_sign(const GaussDiagram& d, Endpoint e, Convention cv);

// Endpoints strictly inside left(c), in walk order. c must be a self chord.
std::vector<Endpoint> left_part(const GaussDiagram& d, int chord, Convention cv);

// Prefix-sum evaluator for the index functions of one diagram. O(n) to
// build, O(1) per query. The literal left-arc walk lives in the tests as
// the oracle.
class IndexEngine {
public:
    IndexEngine(const GaussDiagram& d, Convention cv);

    // signed endpoint sum over left(c) within c's own component
    int64_t ind(int chord) const;
    // same sum taken in the whole diagram, linking endpoints included
    int64_t ind_prime(int chord) const;
    // signed sum of linking-chord endpoints on the circle
    int64_t span(int circle) const;

    const GaussDiagram& diagram() const { return *d_; }
    Convention convention() const { return cv_; }

private:
    int64_t range_sum(const std::vector<std::vector<int64_t>>& pref, int circle,
                      int start, int end) const;
    int64_t arc_sum(const std::vector<std::vector<int64_t>>& pref, int chord) const;

    const GaussDiagram* d_;
    Convention cv_;
    std::vector<std::vector<int64_t>> pref_all_;   // all entries
    std::vector<std::vector<int64_t>> pref_self_;  // self-chord entries only
};

int64_t ind(const GaussDiagram& d, int chord, Convention cv);
int64_t ind_prime(const GaussDiagram& d, int chord, Convention cv);
int64_t span(const GaussDiagram& d, int circle, Convention cv);
std::multiset<int64_t> span_multiset(const GaussDiagram& d, Convention cv);

// Pluggable index attached to a self chord, used as a t-exponent. Values are
// Laurent polynomials; plain integers embed as constants.
using WeakChordIndex = std::function<LaurentPolynomial(const GaussDiagram&, int)>;
WeakChordIndex wci_ind_prime(Convention cv);

}  // namespace vlink
