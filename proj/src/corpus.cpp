#include "vlink/corpus.hpp"

namespace vlink {

const std::vector<Fixture>& corpus() {
    static const std::vector<Fixture> fixtures = {
        {"kishino", "U1-O2+O1-U2+U3-O4+O3-U4+",
         "Kishino knot: both halves undo by R1, the whole does not"},
        {"kishino-variant", "U1-O2+O1-U2+U3+O4-O3+U4-",
         "Kishino knot with the signs of the second half switched"},
        {"slavik", "O1+U2+U1+O2+O3-U4-U3-O4-",
         "Slavik's knot: nontrivial but invisible to every invariant here"},
        {"virtual-trefoil", "O1+O2+U1+U2+", "virtual trefoil"},
        {"two-crossing-link", "O1-O2+U1-O3+U2+O4-;U3+U4-",
         "two-component link with two self and two linking crossings"},
        {"hopf", "O1+U2+;U1+O2+", "classical Hopf link"},
        {"trefoil", "O1+U2+O3+U1+O2+U3+", "classical trefoil"},
        {"figure-eight", "O1+U2-O4-U1+O3+U4-O2-U3+", "classical figure-eight knot"},
        {"whitehead", "O1+U2-O4-U5+;U1+O3+U4-O2-U3+O5+", "classical Whitehead link"},
    };
    return fixtures;
}

const Fixture* corpus_find(std::string_view name) {
    for (const Fixture& f : corpus())
        if (f.name == name) return &f;
    return nullptr;
}

}  // namespace vlink
