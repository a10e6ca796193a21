#include "vlink/moves.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>

namespace vlink {

namespace {

using RawEntry = GaussDiagram::RawEntry;
using RawCircle = GaussDiagram::RawCircle;

std::string fresh_label(const GaussDiagram& d, int& counter) {
    for (;;) {
        std::string lab = "m" + std::to_string(counter++);
        if (d.find_chord(lab) < 0) return lab;
    }
}

std::map<std::string, int> sign_map(const GaussDiagram& d) {
    std::map<std::string, int> signs;
    for (const Chord& c : d.chords()) signs[c.label] = c.sign;
    return signs;
}

GaussDiagram rebuild_without(const GaussDiagram& d, const std::set<std::string>& dropped) {
    auto raw = d.to_raw();
    for (auto& circ : raw)
        std::erase_if(circ, [&](const RawEntry& e) { return dropped.count(e.first) > 0; });
    auto signs = sign_map(d);
    for (const auto& lab : dropped) signs.erase(lab);
    return GaussDiagram::from_raw(raw, signs);
}

void check_circle(const GaussDiagram& d, int circle) {
    if (circle < 0 || circle >= d.circle_count())
        throw DomainError("circle index out of range");
}

void check_gap(const GaussDiagram& d, int circle, int gap) {
    if (gap < 0 || gap > (int)d.circles()[circle].size())
        throw DomainError("gap index out of range");
}

void check_sign(int sign) {
    if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
}

// entry following e on its circle; circles shorter than 2 have no usable
// neighbours (the lone entry would read as its own successor)
bool successor(const GaussDiagram& d, EndRef e, Endpoint& out) {
    const auto& circ = d.circles()[e.circle];
    const int n = (int)circ.size();
    if (n < 2) return false;
    out = circ[(e.pos + 1) % n];
    return true;
}

bool predecessor(const GaussDiagram& d, EndRef e, Endpoint& out) {
    const auto& circ = d.circles()[e.circle];
    const int n = (int)circ.size();
    if (n < 2) return false;
    out = circ[(e.pos + n - 1) % n];
    return true;
}

bool follows(const GaussDiagram& d, EndRef a, Endpoint expect) {
    Endpoint e;
    return successor(d, a, e) && e == expect;
}

bool triangle_forward(const GaussDiagram& d, int x, int y, int z) {
    return follows(d, d.chord(x).over_end, {y, Role::Over}) &&
           follows(d, d.chord(x).under_end, {z, Role::Over}) &&
           follows(d, d.chord(y).under_end, {z, Role::Under});
}

bool triangle_reversed(const GaussDiagram& d, int x, int y, int z) {
    return follows(d, d.chord(y).over_end, {x, Role::Over}) &&
           follows(d, d.chord(z).over_end, {x, Role::Under}) &&
           follows(d, d.chord(z).under_end, {y, Role::Under});
}

int resolve(const GaussDiagram& d, const std::string& label) {
    int id = d.find_chord(label);
    if (id < 0) throw DomainError("unknown chord '" + label + "'");
    return id;
}

}  // namespace

std::string move_to_text(const Move& m) {
    auto pm = [](int s) { return s > 0 ? std::string("+") : std::string("-"); };
    switch (m.kind) {
        case MoveKind::R1Insert:
            return "R1 insert " + pm(m.sign) + (m.over_first ? " OU" : " UO") + " at circle " +
                   std::to_string(m.circle) + " gap " + std::to_string(m.gap);
        case MoveKind::R1Delete:
            return "R1 delete kink '" + m.a + "'";
        case MoveKind::R2aInsert:
            return "R2a insert first sign " + pm(m.sign) + ", overs at circle " +
                   std::to_string(m.circle) + " gap " + std::to_string(m.gap) +
                   ", unders at circle " + std::to_string(m.circle2) + " gap " +
                   std::to_string(m.gap2);
        case MoveKind::R2aDelete:
            return "R2a delete pair '" + m.a + "','" + m.b + "'";
        case MoveKind::R3aApply:
            return "R3a triangle '" + m.a + "','" + m.b + "','" + m.c + "'";
    }
    return "?";
}

GaussDiagram r1_insert(const GaussDiagram& d, int circle, int gap, int sign, bool over_first,
                       std::string* new_label) {
    check_circle(d, circle);
    check_gap(d, circle, gap);
    check_sign(sign);
    int counter = 0;
    std::string lab = fresh_label(d, counter);
    if (new_label) *new_label = lab;
    auto raw = d.to_raw();
    std::array<RawEntry, 2> pair = {RawEntry{lab, Role::Over}, RawEntry{lab, Role::Under}};
    if (!over_first) std::swap(pair[0], pair[1]);
    raw[circle].insert(raw[circle].begin() + gap, pair.begin(), pair.end());
    auto signs = sign_map(d);
    signs[lab] = sign;
    return GaussDiagram::from_raw(raw, signs);
}

std::vector<int> kink_chords(const GaussDiagram& d) {
    std::vector<int> out;
    std::set<int> seen;
    for (int k = 0; k < d.circle_count(); ++k) {
        const auto& circ = d.circles()[k];
        const int n = (int)circ.size();
        if (n < 2) continue;
        for (int j = 0; j < n; ++j)
            if (circ[j].chord == circ[(j + 1) % n].chord && seen.insert(circ[j].chord).second)
                out.push_back(circ[j].chord);
    }
    return out;
}

GaussDiagram r1_delete(const GaussDiagram& d, int chord) {
    const Chord& c = d.chord(chord);
    bool kink = false;
    if (c.over_end.circle == c.under_end.circle) {
        const int n = (int)d.circles()[c.over_end.circle].size();
        if (n >= 2) {
            int p = c.over_end.pos, q = c.under_end.pos;
            kink = (p + 1) % n == q || (q + 1) % n == p;
        }
    }
    if (!kink) throw DomainError("chord '" + c.label + "' is not a kink");
    return rebuild_without(d, {c.label});
}

GaussDiagram r2a_insert(const GaussDiagram& d, int over_circle, int over_gap, int under_circle,
                        int under_gap, int first_sign,
                        std::pair<std::string, std::string>* new_labels) {
    check_circle(d, over_circle);
    check_gap(d, over_circle, over_gap);
    check_circle(d, under_circle);
    check_gap(d, under_circle, under_gap);
    check_sign(first_sign);
    int counter = 0;
    std::string x = fresh_label(d, counter);
    std::string y = fresh_label(d, counter);
    if (new_labels) *new_labels = {x, y};

    struct Ins {
        int circle, gap;
        std::array<RawEntry, 2> seq;
    };
    std::vector<Ins> ins = {
        {over_circle, over_gap, {RawEntry{x, Role::Over}, RawEntry{y, Role::Over}}},
        {under_circle, under_gap, {RawEntry{x, Role::Under}, RawEntry{y, Role::Under}}},
    };
    // descending gap within a circle, so the second insertion cannot shift
    // the first; on an exact tie the under pair lands before the over pair
    std::stable_sort(ins.begin(), ins.end(), [](const Ins& a, const Ins& b) {
        return a.circle != b.circle ? a.circle < b.circle : a.gap > b.gap;
    });
    auto raw = d.to_raw();
    for (const Ins& s : ins)
        raw[s.circle].insert(raw[s.circle].begin() + s.gap, s.seq.begin(), s.seq.end());
    auto signs = sign_map(d);
    signs[x] = first_sign;
    signs[y] = -first_sign;
    return GaussDiagram::from_raw(raw, signs);
}

std::vector<std::pair<int, int>> r2a_delete_sites(const GaussDiagram& d) {
    std::vector<std::pair<int, int>> out;
    for (int k = 0; k < d.circle_count(); ++k) {
        const auto& circ = d.circles()[k];
        const int n = (int)circ.size();
        if (n < 2) continue;
        for (int j = 0; j < n; ++j) {
            const Endpoint& e = circ[j];
            const Endpoint& f = circ[(j + 1) % n];
            if (e.role != Role::Over || f.role != Role::Over || e.chord == f.chord) continue;
            if (d.chord(e.chord).sign != -d.chord(f.chord).sign) continue;
            if (follows(d, d.chord(e.chord).under_end, {f.chord, Role::Under}))
                out.emplace_back(e.chord, f.chord);
        }
    }
    return out;
}

GaussDiagram r2a_delete(const GaussDiagram& d, int x, int y) {
    const Chord& cx = d.chord(x);
    const Chord& cy = d.chord(y);
    bool ok = x != y && cx.sign == -cy.sign && follows(d, cx.over_end, {y, Role::Over}) &&
              follows(d, cx.under_end, {y, Role::Under});
    if (!ok)
        throw DomainError("chords '" + cx.label + "','" + cy.label +
                          "' do not form a deletable pair");
    return rebuild_without(d, {cx.label, cy.label});
}

std::vector<TriangleSite> r3a_sites(const GaussDiagram& d) {
    std::set<TriangleSite> found;
    for (int x = 0; x < d.chord_count(); ++x) {
        if (d.chord(x).sign != 1) continue;
        Endpoint e;
        // forward: Oy after Ox, Oz after Ux, Uz after Uy
        if (successor(d, d.chord(x).over_end, e) && e.role == Role::Over && e.chord != x &&
            d.chord(e.chord).sign == 1) {
            int y = e.chord;
            Endpoint f;
            if (successor(d, d.chord(x).under_end, f) && f.role == Role::Over && f.chord != x &&
                f.chord != y && d.chord(f.chord).sign == 1) {
                int z = f.chord;
                if (follows(d, d.chord(y).under_end, {z, Role::Under}))
                    found.insert({x, y, z});
            }
        }
        // reversed: Ox after Oy, Ux after Oz, Uy after Uz
        if (predecessor(d, d.chord(x).over_end, e) && e.role == Role::Over && e.chord != x &&
            d.chord(e.chord).sign == 1) {
            int y = e.chord;
            Endpoint f;
            if (predecessor(d, d.chord(x).under_end, f) && f.role == Role::Over && f.chord != x &&
                f.chord != y && d.chord(f.chord).sign == 1) {
                int z = f.chord;
                if (follows(d, d.chord(z).under_end, {y, Role::Under}))
                    found.insert({x, y, z});
            }
        }
    }
    return {found.begin(), found.end()};
}

GaussDiagram r3a_apply(const GaussDiagram& d, const TriangleSite& site) {
    int x = site.x, y = site.y, z = site.z;
    bool distinct = x != y && x != z && y != z;
    bool signs_ok = distinct && d.chord(x).sign == 1 && d.chord(y).sign == 1 &&
                    d.chord(z).sign == 1;
    if (!signs_ok || (!triangle_forward(d, x, y, z) && !triangle_reversed(d, x, y, z)))
        throw DomainError("chords do not form a triangle site");
    auto raw = d.to_raw();
    auto swap_at = [&](EndRef a, EndRef b) {
        std::swap(raw[a.circle][a.pos], raw[b.circle][b.pos]);
    };
    swap_at(d.chord(x).over_end, d.chord(y).over_end);
    swap_at(d.chord(x).under_end, d.chord(z).over_end);
    swap_at(d.chord(y).under_end, d.chord(z).under_end);
    return GaussDiagram::from_raw(raw, sign_map(d));
}

GaussDiagram smooth(const GaussDiagram& d, int chord) {
    const Chord& c = d.chord(chord);
    auto raw = d.to_raw();
    auto signs = sign_map(d);
    signs.erase(c.label);
    if (d.is_self(chord)) {
        const int k = c.over_end.circle;
        const RawCircle& circ = raw[k];
        const int n = (int)circ.size();
        int p = std::min(c.over_end.pos, c.under_end.pos);
        int q = std::max(c.over_end.pos, c.under_end.pos);
        RawCircle arc1(circ.begin() + p + 1, circ.begin() + q);
        RawCircle arc2(circ.begin() + q + 1, circ.begin() + n);
        arc2.insert(arc2.end(), circ.begin(), circ.begin() + p);
        raw[k] = std::move(arc1);
        raw.insert(raw.begin() + k + 1, std::move(arc2));
    } else {
        const int ko = c.over_end.circle, ku = c.under_end.circle;
        const int po = c.over_end.pos, pu = c.under_end.pos;
        const RawCircle& a = raw[ko];
        const RawCircle& b = raw[ku];
        RawCircle merged(a.begin() + po + 1, a.end());
        merged.insert(merged.end(), a.begin(), a.begin() + po);
        merged.insert(merged.end(), b.begin() + pu + 1, b.end());
        merged.insert(merged.end(), b.begin(), b.begin() + pu);
        const int keep = std::min(ko, ku), drop = std::max(ko, ku);
        raw[keep] = std::move(merged);
        raw.erase(raw.begin() + drop);
    }
    return GaussDiagram::from_raw(raw, signs);
}

GaussDiagram apply_move(const GaussDiagram& d, const Move& m) {
    switch (m.kind) {
        case MoveKind::R1Insert:
            return r1_insert(d, m.circle, m.gap, m.sign, m.over_first);
        case MoveKind::R1Delete:
            return r1_delete(d, resolve(d, m.a));
        case MoveKind::R2aInsert:
            return r2a_insert(d, m.circle, m.gap, m.circle2, m.gap2, m.sign);
        case MoveKind::R2aDelete:
            return r2a_delete(d, resolve(d, m.a), resolve(d, m.b));
        case MoveKind::R3aApply:
            return r3a_apply(d, {resolve(d, m.a), resolve(d, m.b), resolve(d, m.c)});
    }
    throw DomainError("unknown move kind");
}

MoveTrace fuzz_equivalent(const GaussDiagram& d, int steps, uint64_t seed, int max_chords) {
    if (d.circle_count() == 0) throw DomainError("diagram has no circle to rewrite");
    std::mt19937_64 rng(seed);
    auto pick = [&](size_t n) { return (size_t)(rng() % (uint64_t)n); };

    MoveTrace tr{d, {}, d};
    GaussDiagram cur = d;
    for (int s = 0; s < steps; ++s) {
        auto kinks = kink_chords(cur);
        auto pairs = r2a_delete_sites(cur);
        auto tris = r3a_sites(cur);

        struct Cand {
            MoveKind kind;
            int weight;
        };
        std::vector<Cand> cands;
        if (cur.chord_count() + 1 <= max_chords) cands.push_back({MoveKind::R1Insert, 2});
        if (cur.chord_count() + 2 <= max_chords) cands.push_back({MoveKind::R2aInsert, 3});
        if (!kinks.empty()) cands.push_back({MoveKind::R1Delete, 2});
        if (!pairs.empty()) cands.push_back({MoveKind::R2aDelete, 2});
        if (!tris.empty()) cands.push_back({MoveKind::R3aApply, 4});

        MoveKind kind = MoveKind::R1Insert;  // fallback: a kink always fits somewhere
        if (!cands.empty()) {
            int total = 0;
            for (const Cand& c : cands) total += c.weight;
            int r = (int)pick((size_t)total);
            for (const Cand& c : cands) {
                if (r < c.weight) {
                    kind = c.kind;
                    break;
                }
                r -= c.weight;
            }
        }

        Move m{};
        m.kind = kind;
        switch (kind) {
            case MoveKind::R1Insert: {
                m.circle = (int)pick(cur.circle_count());
                m.gap = (int)pick(cur.circles()[m.circle].size() + 1);
                m.sign = rng() % 2 ? 1 : -1;
                m.over_first = rng() % 2;
                break;
            }
            case MoveKind::R2aInsert: {
                m.circle = (int)pick(cur.circle_count());
                m.gap = (int)pick(cur.circles()[m.circle].size() + 1);
                m.circle2 = (int)pick(cur.circle_count());
                m.gap2 = (int)pick(cur.circles()[m.circle2].size() + 1);
                m.sign = rng() % 2 ? 1 : -1;
                break;
            }
            case MoveKind::R1Delete:
                m.a = cur.chord(kinks[pick(kinks.size())]).label;
                break;
            case MoveKind::R2aDelete: {
                auto [x, y] = pairs[pick(pairs.size())];
                m.a = cur.chord(x).label;
                m.b = cur.chord(y).label;
                break;
            }
            case MoveKind::R3aApply: {
                TriangleSite t = tris[pick(tris.size())];
                m.a = cur.chord(t.x).label;
                m.b = cur.chord(t.y).label;
                m.c = cur.chord(t.z).label;
                break;
            }
        }
        cur = apply_move(cur, m);
        tr.moves.push_back(std::move(m));
    }
    tr.final = std::move(cur);
    return tr;
}

GaussDiagram replay(const GaussDiagram& initial, const std::vector<Move>& moves) {
    GaussDiagram cur = initial;
    for (const Move& m : moves) cur = apply_move(cur, m);
    return cur;
}

}  // namespace vlink
