#include "vlink/gauss.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace vlink {

namespace {

const char* parse_error_kind_name(ParseError::Kind k) {
    switch (k) {
        case ParseError::Kind::Syntax: return "syntax error";
        case ParseError::Kind::UnpairedLabel: return "unpaired label";
        case ParseError::Kind::DuplicateRole: return "duplicate role";
        case ParseError::Kind::SignMismatch: return "sign mismatch";
    }
    return "parse error";
}

std::string parse_error_message(ParseError::Kind k, size_t pos, const std::string& detail) {
    return std::string(parse_error_kind_name(k)) + " at position " + std::to_string(pos) +
           ": " + detail;
}

}  // namespace

ParseError::ParseError(Kind k, size_t pos, const std::string& detail)
    : std::runtime_error(parse_error_message(k, pos, detail)), kind(k), position(pos) {}

GaussDiagram GaussDiagram::from_raw(const std::vector<RawCircle>& raw,
                                    const std::map<std::string, int>& signs) {
    GaussDiagram d;
    d.circles_.resize(raw.size());
    std::map<std::string, int, std::less<>> id_of;
    for (size_t ci = 0; ci < raw.size(); ++ci) {
        d.circles_[ci].reserve(raw[ci].size());
        for (size_t pos = 0; pos < raw[ci].size(); ++pos) {
            const auto& [label, role] = raw[ci][pos];
            int id;
            auto it = id_of.find(label);
            if (it == id_of.end()) {
                id = (int)d.chords_.size();
                id_of.emplace(label, id);
                auto sit = signs.find(label);
                if (sit == signs.end())
                    throw DomainError("no sign given for chord '" + label + "'");
                if (sit->second != 1 && sit->second != -1)
                    throw DomainError("sign of chord '" + label + "' must be +1 or -1");
                d.chords_.push_back(Chord{label, sit->second, {}, {}});
            } else {
                id = it->second;
            }
            Chord& ch = d.chords_[id];
            EndRef& slot = role == Role::Over ? ch.over_end : ch.under_end;
            if (slot.circle != -1)
                throw DomainError("chord '" + label + "' has two " +
                                  (role == Role::Over ? std::string("Over") : std::string("Under")) +
                                  " endpoints");
            slot = EndRef{(int)ci, (int)pos};
            d.circles_[ci].push_back(Endpoint{id, role});
        }
    }
    if (id_of.size() != signs.size())
        throw DomainError("sign map names a chord absent from the circles");
    for (const Chord& ch : d.chords_)
        if (ch.over_end.circle == -1 || ch.under_end.circle == -1)
            throw DomainError("chord '" + ch.label + "' lacks one endpoint");
    return d;
}

const Chord& GaussDiagram::chord(int id) const {
    if (id < 0 || id >= (int)chords_.size()) throw DomainError("chord id out of range");
    return chords_[id];
}

int GaussDiagram::find_chord(std::string_view label) const {
    for (size_t i = 0; i < chords_.size(); ++i)
        if (chords_[i].label == label) return (int)i;
    return -1;
}

bool GaussDiagram::is_self(int id) const {
    const Chord& c = chord(id);
    return c.over_end.circle == c.under_end.circle;
}

int GaussDiagram::self_circle(int id) const {
    if (!is_self(id)) throw DomainError("chord '" + chord(id).label + "' is a linking chord");
    return chord(id).over_end.circle;
}

int GaussDiagram::total_writhe() const {
    int w = 0;
    for (const Chord& c : chords_) w += c.sign;
    return w;
}

std::vector<GaussDiagram::RawCircle> GaussDiagram::to_raw() const {
    std::vector<RawCircle> raw(circles_.size());
    for (size_t ci = 0; ci < circles_.size(); ++ci) {
        raw[ci].reserve(circles_[ci].size());
        for (const Endpoint& e : circles_[ci])
            raw[ci].emplace_back(chords_[e.chord].label, e.role);
    }
    return raw;
}

GaussDiagram parse(std::string_view code) {
    // strip whitespace, remembering original offsets for error positions
    std::string clean;
    std::vector<size_t> origin;
    clean.reserve(code.size());
    for (size_t p = 0; p < code.size(); ++p) {
        if (std::isspace((unsigned char)code[p])) continue;
        clean += code[p];
        origin.push_back(p);
    }
    auto at = [&](size_t i) { return i < origin.size() ? origin[i] : code.size(); };

    std::vector<GaussDiagram::RawCircle> circles(1);
    std::map<std::string, int> signs;
    struct Seen {
        bool over = false, under = false;
        size_t first = 0;
    };
    std::map<std::string, Seen> seen;

    size_t i = 0;
    while (i < clean.size()) {
        char ch = clean[i];
        if (ch == ';') {
            circles.emplace_back();
            ++i;
            continue;
        }
        size_t tok = i;
        Role role;
        if (ch == 'O' || ch == 'o') role = Role::Over;
        else if (ch == 'U' || ch == 'u') role = Role::Under;
        else throw ParseError(ParseError::Kind::Syntax, at(tok), "expected O or U");
        ++i;
        size_t lab0 = i;
        while (i < clean.size() && std::isalnum((unsigned char)clean[i])) ++i;
        if (i == lab0)
            throw ParseError(ParseError::Kind::Syntax, at(tok), "missing chord label");
        std::string label = clean.substr(lab0, i - lab0);
        if (i >= clean.size() || (clean[i] != '+' && clean[i] != '-'))
            throw ParseError(ParseError::Kind::Syntax, at(tok),
                             "missing sign after label '" + label + "'");
        int sgn = clean[i] == '+' ? 1 : -1;
        ++i;

        auto& s = seen[label];
        if (s.over || s.under) {
            bool dup = role == Role::Over ? s.over : s.under;
            if (dup)
                throw ParseError(ParseError::Kind::DuplicateRole, at(tok),
                                 "label '" + label + "' appears twice as " +
                                     (role == Role::Over ? "O" : "U"));
            if (signs[label] != sgn)
                throw ParseError(ParseError::Kind::SignMismatch, at(tok),
                                 "label '" + label + "' carries both signs");
        } else {
            s.first = at(tok);
            signs[label] = sgn;
        }
        (role == Role::Over ? s.over : s.under) = true;
        circles.back().emplace_back(std::move(label), role);
    }
    const std::pair<const std::string, Seen>* unpaired = nullptr;
    for (const auto& entry : seen) {
        const Seen& s = entry.second;
        if (s.over && s.under) continue;
        if (!unpaired || s.first < unpaired->second.first) unpaired = &entry;
    }
    if (unpaired)
        throw ParseError(ParseError::Kind::UnpairedLabel, unpaired->second.first,
                         "label '" + unpaired->first + "' lacks its " +
                             (unpaired->second.over ? "U" : "O") + " occurrence");
    return GaussDiagram::from_raw(circles, signs);
}

std::string serialize(const GaussDiagram& d) {
    std::map<int, int> ren;
    int next = 1;
    std::string out;
    for (int ci = 0; ci < d.circle_count(); ++ci) {
        if (ci) out += ';';
        for (const Endpoint& e : d.circles()[ci]) {
            auto [it, inserted] = ren.try_emplace(e.chord, next);
            if (inserted) ++next;
            out += role_char(e.role);
            out += std::to_string(it->second);
            out += d.chord(e.chord).sign > 0 ? '+' : '-';
        }
    }
    return out;
}

Classification classify(const GaussDiagram& d) {
    Classification out;
    for (int id = 0; id < d.chord_count(); ++id)
        (d.is_self(id) ? out.self_chords : out.linking_chords).push_back(id);
    return out;
}

GaussDiagram restrict_component(const GaussDiagram& d, int circle) {
    if (circle < 0 || circle >= d.circle_count())
        throw DomainError("circle index out of range");
    GaussDiagram::RawCircle circ;
    std::map<std::string, int> signs;
    for (const Endpoint& e : d.circles()[circle]) {
        if (!d.is_self(e.chord)) continue;
        const Chord& c = d.chord(e.chord);
        circ.emplace_back(c.label, e.role);
        signs[c.label] = c.sign;
    }
    return GaussDiagram::from_raw({circ}, signs);
}

GaussDiagram crossing_change(const GaussDiagram& d, int chord) {
    const std::string& label = d.chord(chord).label;
    auto raw = d.to_raw();
    std::map<std::string, int> signs;
    for (const Chord& c : d.chords()) signs[c.label] = c.label == label ? -c.sign : c.sign;
    for (auto& circ : raw)
        for (auto& [lab, role] : circ)
            if (lab == label) role = other_role(role);
    return GaussDiagram::from_raw(raw, signs);
}

GaussDiagram mirror_all(const GaussDiagram& d) {
    auto raw = d.to_raw();
    std::map<std::string, int> signs;
    for (const Chord& c : d.chords()) signs[c.label] = -c.sign;
    for (auto& circ : raw)
        for (auto& [lab, role] : circ) role = other_role(role);
    return GaussDiagram::from_raw(raw, signs);
}

GaussDiagram disjoint_union(const GaussDiagram& a, const GaussDiagram& b) {
    auto raw = a.to_raw();
    std::map<std::string, int> signs;
    for (const Chord& c : a.chords()) signs[c.label] = c.sign;
    // labels of b get a non-alphanumeric suffix, so they cannot collide with
    // a's parsed labels (or with repeated unions)
    for (const auto& circ : b.to_raw()) {
        GaussDiagram::RawCircle nc;
        nc.reserve(circ.size());
        for (const auto& [lab, role] : circ) nc.emplace_back(lab + "'", role);
        raw.push_back(std::move(nc));
    }
    for (const Chord& c : b.chords()) signs[c.label + "'"] = c.sign;
    return GaussDiagram::from_raw(raw, signs);
}

std::vector<int> canonical_form(const GaussDiagram& d) {
    const int nc = d.circle_count();
    std::vector<int> perm(nc);
    std::iota(perm.begin(), perm.end(), 0);

    std::vector<int> best;
    bool have = false;
    std::vector<int> cand;
    std::vector<int> ren(d.chord_count());

    do {
        std::vector<int> lens(nc), rot(nc, 0);
        for (int k = 0; k < nc; ++k)
            lens[k] = std::max<int>(1, (int)d.circles()[perm[k]].size());
        for (;;) {
            cand.clear();
            std::fill(ren.begin(), ren.end(), 0);
            int next = 1;
            for (int k = 0; k < nc; ++k) {
                const auto& circ = d.circles()[perm[k]];
                const int n = (int)circ.size();
                cand.push_back(-1);  // circle separator
                for (int j = 0; j < n; ++j) {
                    const Endpoint& e = circ[(j + rot[k]) % n];
                    if (ren[e.chord] == 0) ren[e.chord] = next++;
                    cand.push_back(e.role == Role::Over ? 0 : 1);
                    cand.push_back(ren[e.chord]);
                    cand.push_back(d.chord(e.chord).sign);
                }
            }
            if (!have || cand < best) {
                best = cand;
                have = true;
            }
            int k = nc - 1;
            while (k >= 0) {
                if (++rot[k] < lens[k]) break;
                rot[k] = 0;
                --k;
            }
            if (k < 0) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool diagram_equal(const GaussDiagram& a, const GaussDiagram& b) {
    if (a.circle_count() != b.circle_count() || a.chord_count() != b.chord_count())
        return false;
    auto lengths = [](const GaussDiagram& d) {
        std::vector<int> v;
        for (const auto& c : d.circles()) v.push_back((int)c.size());
        std::sort(v.begin(), v.end());
        return v;
    };
    if (lengths(a) != lengths(b)) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace vlink
