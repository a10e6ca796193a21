#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vlink {

enum class Role : uint8_t { Over, Under };

inline Role other_role(Role r) { return r == Role::Over ? Role::Under : Role::Over; }
inline char role_char(Role r) { return r == Role::Over ? 'O' : 'U'; }

// one entry on a circle
struct Endpoint {
    int chord;
    Role role;
    bool operator==(const Endpoint&) const = default;
};

// location of an endpoint
struct EndRef {
    int circle = -1;
    int pos = -1;
    bool operator==(const EndRef&) const = default;
};

struct Chord {
    std::string label;  // as written in the source code of the diagram
    int sign = 0;       // +1 or -1, the writhe of the crossing
    EndRef over_end;
    EndRef under_end;
};

struct ParseError : std::runtime_error {
    enum class Kind { Syntax, UnpairedLabel, DuplicateRole, SignMismatch };
    Kind kind;
    size_t position;  // byte offset into the original input
    ParseError(Kind k, size_t pos, const std::string& detail);
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Gauss diagram of a virtual link: one circle per component, read in
// counterclockwise order, with signed arrowed chords (Over = arrow tail).
// Immutable after construction; every operation returns a new diagram.
class GaussDiagram {
public:
    using RawEntry = std::pair<std::string, Role>;
    using RawCircle = std::vector<RawEntry>;

    GaussDiagram() = default;  // zero circles; use parse/from_raw for real diagrams

    // Builds and validates. Signs must cover exactly the labels appearing in
    // `raw`; each label must occur once as Over and once as Under.
    static GaussDiagram from_raw(const std::vector<RawCircle>& raw,
                                 const std::map<std::string, int>& signs);

    int circle_count() const { return (int)circles_.size(); }
    int chord_count() const { return (int)chords_.size(); }
    const std::vector<std::vector<Endpoint>>& circles() const { return circles_; }
    const std::vector<Chord>& chords() const { return chords_; }
    const Chord& chord(int id) const;
    int find_chord(std::string_view label) const;  // -1 if absent
    bool is_self(int chord) const;
    int self_circle(int chord) const;  // circle index of a self chord
    int total_writhe() const;
    std::vector<RawCircle> to_raw() const;

private:
    std::vector<std::vector<Endpoint>> circles_;
    std::vector<Chord> chords_;
};

GaussDiagram parse(std::string_view code);
std::string serialize(const GaussDiagram& d);

struct Classification {
    std::vector<int> self_chords;     // S(L)
    std::vector<int> linking_chords;  // M(L)
};
Classification classify(const GaussDiagram& d);

// One-circle diagram keeping exactly the self chords of the given circle,
// endpoint order preserved.
GaussDiagram restrict_component(const GaussDiagram& d, int circle);

// Swap the chord's Over/Under roles and negate its sign.
GaussDiagram crossing_change(const GaussDiagram& d, int chord);
// crossing_change at every chord
GaussDiagram mirror_all(const GaussDiagram& d);

GaussDiagram disjoint_union(const GaussDiagram& a, const GaussDiagram& b);

// Minimal token stream over all circle orderings and per-circle rotations,
// chords renamed by first appearance. Exponential in circle count; fine at
// the scale diagrams are compared here.
std::vector<int> canonical_form(const GaussDiagram& d);
// Equality up to circle permutation, rotation, and chord relabeling.
bool diagram_equal(const GaussDiagram& a, const GaussDiagram& b);

}  // namespace vlink
