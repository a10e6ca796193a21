#include <doctest.h>

#include "vlink/gauss.hpp"

using namespace vlink;

namespace {

ParseError capture(const std::string& code) {
    try {
        (void)parse(code);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error for: " << code);
    return ParseError(ParseError::Kind::Syntax, SIZE_MAX, "unreachable");
}

}  // namespace

TEST_CASE("grammar round trips") {
    CHECK(serialize(parse("O1+U1+")) == "O1+U1+");
    CHECK(serialize(parse(" o1 + u1 + ")) == "O1+U1+");
    CHECK(serialize(parse("U5-O5-")) == "U1-O1-");
    CHECK(serialize(parse("O10+Uab3+U10+Oab3+")) == "O1+U2+U1+O2+");
    CHECK(serialize(parse("O1+U2+;U1+O2+")) == "O1+U2+;U1+O2+");
}

TEST_CASE("empty circles are legal") {
    GaussDiagram d = parse("");
    CHECK(d.circle_count() == 1);
    CHECK(d.chord_count() == 0);
    CHECK(serialize(d).empty());

    GaussDiagram e = parse("O1+U1+;");
    CHECK(e.circle_count() == 2);
    CHECK(e.circles()[1].empty());
    CHECK(serialize(e) == "O1+U1+;");
}

TEST_CASE("labels are case sensitive, roles are not") {
    GaussDiagram d = parse("Oa+Ua+oA-uA-");
    CHECK(d.chord_count() == 2);
    CHECK(serialize(d) == "O1+U1+O2-U2-");
}

TEST_CASE("syntax errors carry original positions") {
    auto e = capture("X1+");
    CHECK(e.kind == ParseError::Kind::Syntax);
    CHECK(e.position == 0);

    e = capture("O1+ *");
    CHECK(e.kind == ParseError::Kind::Syntax);
    CHECK(e.position == 4);

    e = capture("O+");
    CHECK(e.kind == ParseError::Kind::Syntax);
    CHECK(e.position == 0);

    e = capture("O1");
    CHECK(e.kind == ParseError::Kind::Syntax);
    CHECK(e.position == 0);

    e = capture("  O1+ X2+");
    CHECK(e.kind == ParseError::Kind::Syntax);
    CHECK(e.position == 6);
}

TEST_CASE("pairing errors") {
    auto e = capture("O1+");
    CHECK(e.kind == ParseError::Kind::UnpairedLabel);
    CHECK(e.position == 0);

    e = capture("O1+U1+O2+");
    CHECK(e.kind == ParseError::Kind::UnpairedLabel);
    CHECK(e.position == 6);

    e = capture("O1+O1+U1+");
    CHECK(e.kind == ParseError::Kind::DuplicateRole);
    CHECK(e.position == 3);

    e = capture("O1+U1-");
    CHECK(e.kind == ParseError::Kind::SignMismatch);
    CHECK(e.position == 3);

    e = capture("O1+ u1 -");
    CHECK(e.kind == ParseError::Kind::SignMismatch);
    CHECK(e.position == 4);
}

TEST_CASE("raw construction validates") {
    GaussDiagram::RawCircle c = {{"a", Role::Over}, {"a", Role::Under}};
    CHECK_THROWS_AS((void)GaussDiagram::from_raw({c}, {}), DomainError);
    CHECK_THROWS_AS((void)GaussDiagram::from_raw({c}, {{"a", 2}}), DomainError);
    CHECK_THROWS_AS((void)GaussDiagram::from_raw({c}, {{"a", 1}, {"b", 1}}), DomainError);
    GaussDiagram d = GaussDiagram::from_raw({c}, {{"a", -1}});
    CHECK(serialize(d) == "O1-U1-");
}

TEST_CASE("classification of self and linking chords") {
    GaussDiagram d = parse("O1+O2+U1+U2+O3+;U3+");
    Classification cl = classify(d);
    CHECK(cl.self_chords == std::vector<int>{0, 1});
    CHECK(cl.linking_chords == std::vector<int>{2});
    CHECK(d.is_self(0));
    CHECK(!d.is_self(2));
    CHECK(d.self_circle(0) == 0);
    CHECK_THROWS_AS((void)d.self_circle(2), DomainError);
    CHECK(d.find_chord("3") == 2);
    CHECK(d.find_chord("zzz") == -1);
}

TEST_CASE("restriction keeps only one component's self chords") {
    GaussDiagram d = parse("O1+O2+U1+U2+O3+;U3+");
    CHECK(serialize(restrict_component(d, 0)) == "O1+O2+U1+U2+");
    CHECK(serialize(restrict_component(d, 1)).empty());
    CHECK_THROWS_AS((void)restrict_component(d, 2), DomainError);
}

TEST_CASE("crossing change swaps one chord, mirror swaps all") {
    GaussDiagram d = parse("O1+U1+");
    CHECK(serialize(crossing_change(d, 0)) == "U1-O1-");
    CHECK(serialize(crossing_change(crossing_change(d, 0), 0)) == "O1+U1+");
    CHECK(serialize(mirror_all(mirror_all(d))) == "O1+U1+");

    GaussDiagram two = parse("O1+U2-U1+O2-");
    CHECK(serialize(crossing_change(two, 1)) == "O1+O2+U1+U2+");
    CHECK(serialize(mirror_all(two)) == "U1-O2+O1-U2+");
    CHECK(two.total_writhe() == 0);
    CHECK(mirror_all(two).total_writhe() == 0);
    CHECK(parse("O1+U1+O2+U2+").total_writhe() == 2);
}

TEST_CASE("disjoint union stacks circles") {
    GaussDiagram a = parse("O1+U1+");
    GaussDiagram b = parse("O1-U1-;O2+U2+");
    GaussDiagram u = disjoint_union(a, b);
    CHECK(u.circle_count() == 3);
    CHECK(u.chord_count() == 3);
    CHECK(serialize(u) == "O1+U1+;O2-U2-;O3+U3+");
}

TEST_CASE("equality is blind to rotation and circle order") {
    GaussDiagram d = parse("O1+O2+U1+U2+");
    CHECK(diagram_equal(d, parse("U2+O1+O2+U1+")));
    CHECK(diagram_equal(d, parse("O5+O7+U5+U7+")));
    CHECK(!diagram_equal(d, parse("O1+O2+U2+U1+")));
    CHECK(!diagram_equal(d, parse("O1-O2+U1-U2+")));
    CHECK(!diagram_equal(d, parse("O1+U1+")));

    GaussDiagram l = parse("O1+U1+;O2-O3+U2-U3+");
    CHECK(diagram_equal(l, parse("O2-O3+U2-U3+;O1+U1+")));
    CHECK(!diagram_equal(l, parse("O1+U1+;O2-O3+U3+U2-")));

    CHECK(diagram_equal(parse(""), parse("")));
    CHECK(diagram_equal(parse("O1+U1+;"), parse(";O1+U1+")));
    CHECK(!diagram_equal(parse(""), parse(";")));
}

TEST_CASE("canonical form is rotation stable") {
    GaussDiagram d = parse("U1-O2+O1-U2+U3-O4+O3-U4+");
    GaussDiagram rot = parse("O2+O1-U2+U3-O4+O3-U4+U1-");
    CHECK(canonical_form(d) == canonical_form(rot));
    CHECK(canonical_form(parse("O1+U1+")) != canonical_form(parse("U1-O1-")));
}
