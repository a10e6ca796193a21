#include "vlink/verify.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "vlink/invariants.hpp"

namespace vlink {

namespace {

constexpr std::array<std::string_view, 8> kNames = {"span", "W",   "Wbar", "P",
                                                    "f",    "Lts", "B",    "Bbar"};

std::string value_of(const GaussDiagram& d, Convention cv, const std::string& name) {
    if (name == "span") {
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (int64_t s : span_multiset(d, cv)) {
            if (!first) os << ", ";
            os << s;
            first = false;
        }
        os << "}";
        return os.str();
    }
    if (name == "W") return lp_to_text(writhe_poly(d, cv));
    if (name == "Wbar") return lp_to_text(flat_writhe(d, cv));
    if (name == "P") return lp_to_text(affine_index_poly(d, cv));
    if (name == "f") return lp_to_text(odd_writhe_poly(d, cv));
    if (name == "Lts") return es_to_text(smoothing_series(d, cv));
    if (name == "B") return es_to_text(weight_series(d, cv));
    if (name == "Bbar") return es_to_text(flat_weight_series(d, cv));
    throw DomainError("unknown invariant '" + name + "'");
}

}  // namespace

bool is_invariant_name(std::string_view name) {
    return std::find(kNames.begin(), kNames.end(), name) != kNames.end();
}

std::vector<std::string> default_invariant_names(const GaussDiagram& d) {
    std::vector<std::string> names = {"span", "W", "Wbar"};
    if (d.circle_count() == 1) {
        names.emplace_back("P");
        names.emplace_back("f");
    }
    names.emplace_back("Lts");
    names.emplace_back("B");
    names.emplace_back("Bbar");
    return names;
}

VerifyResult verify_invariance(const GaussDiagram& d, Convention cv, const VerifyOptions& opt) {
    std::vector<std::string> names =
        opt.invariants.empty() ? default_invariant_names(d) : opt.invariants;
    for (const std::string& n : names)
        if (!is_invariant_name(n)) throw DomainError("unknown invariant '" + n + "'");

    std::vector<std::string> before;
    before.reserve(names.size());
    for (const std::string& n : names) before.push_back(value_of(d, cv, n));

    VerifyResult res;
    res.trace = fuzz_equivalent(d, opt.steps, opt.seed, opt.max_chords);

    int tally[5] = {};
    for (const Move& m : res.trace.moves) ++tally[(int)m.kind];
    std::ostringstream os;
    os << "applied " << res.trace.moves.size() << " moves: " << tally[0] << " R1 inserts, "
       << tally[1] << " R1 deletes, " << tally[2] << " R2a inserts, " << tally[3]
       << " R2a deletes, " << tally[4] << " R3a; final diagram has "
       << res.trace.final.chord_count() << " chords";
    res.lines.push_back(os.str());

    for (size_t i = 0; i < names.size(); ++i) {
        std::string after = value_of(res.trace.final, cv, names[i]);
        if (after == before[i]) {
            res.lines.push_back("ok   " + names[i] + " = " + before[i]);
        } else {
            res.ok = false;
            res.lines.push_back("FAIL " + names[i] + ": '" + before[i] + "' became '" + after +
                                "'");
        }
    }
    return res;
}

}  // namespace vlink
