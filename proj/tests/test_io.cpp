// Tests for the line-oriented structure-file format: deterministic
// serialization, exact round-trips, canonical rationals, and strict parsing
// with line-numbered diagnostics.
#include <catch2/catch_amalgamated.hpp>

#include "nxa/cayley_dickson.hpp"
#include "nxa/families.hpp"
#include "nxa/io.hpp"

using namespace nxa;
using Catch::Matchers::ContainsSubstring;

namespace {

Mat diag_mat(const std::vector<Scalar>& d) {
    Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i)
        m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

}  // namespace

TEST_CASE("algebra files round-trip exactly") {
    CompositionAlgebra q = cayley_dickson({Scalar(-1), Scalar(-1)});
    StructureFile f = to_structure(q.algebra, {{"family", "quaternion"}});
    std::string s = serialize(f);

    CHECK_THAT(s, ContainsSubstring("kind algebra\n"));
    CHECK_THAT(s, ContainsSubstring("dim 4\n"));
    CHECK_THAT(s, ContainsSubstring("meta family quaternion\n"));
    CHECK_THAT(s, ContainsSubstring("unit 0 1\n"));

    StructureFile g = parse_structure(s);
    CHECK(g.kind == StructureFile::Kind::algebra);
    CHECK(g.meta == f.meta);
    REQUIRE(g.unit.has_value());
    CHECK(*g.unit == *f.unit);
    CHECK(g.alg == f.alg);
    CHECK(serialize(g) == s);  // byte-stable

    Algebra back = algebra_from_structure(g);
    CHECK(back.sc() == q.algebra.sc());
    REQUIRE(back.unit().has_value());
    CHECK(back.multiply(*back.unit(), unit_vec(4, 2)) == unit_vec(4, 2));

    CHECK_THROWS_AS(triple_from_structure(g), std::invalid_argument);
}

TEST_CASE("triple files keep the declared form") {
    TripleSystem t = build_orthogonal(2, Mat::identity(2), 0);
    StructureFile f = to_structure(t, {{"family", "orthogonal"}});
    std::string s = serialize(f);

    CHECK_THAT(s, ContainsSubstring("kind triple\n"));
    CHECK_THAT(s, ContainsSubstring("form 0 0 1\n"));
    CHECK_THAT(s, ContainsSubstring("form 1 1 1\n"));

    StructureFile g = parse_structure(s);
    TripleSystem back = triple_from_structure(g);
    CHECK(back.tc() == t.tc());
    REQUIRE(back.form().has_value());
    CHECK(*back.form() == *t.form());
    CHECK(serialize(parse_structure(s)) == s);

    CHECK_THROWS_AS(algebra_from_structure(g), std::invalid_argument);

    // A triple file without form lines parses to a system with no declared form.
    TripleSystem bare(t.tc());
    std::string s2 = serialize(to_structure(bare));
    CHECK(!parse_structure(s2).form.has_value());
}

TEST_CASE("rationals are canonical and q is omitted when 1") {
    Tensor3 sc(2);
    sc(0, 0, 0) = frac(2, 4);
    sc(0, 1, 1) = frac(-3, 2);
    sc(1, 1, 0) = Scalar(5);
    StructureFile f = to_structure(Algebra(sc));
    std::string s = serialize(f);
    CHECK_THAT(s, ContainsSubstring("0 0 0 1/2\n"));
    CHECK_THAT(s, ContainsSubstring("0 1 1 -3/2\n"));
    CHECK_THAT(s, ContainsSubstring("1 1 0 5\n"));

    // Non-canonical input is accepted and canonicalized on re-serialization.
    StructureFile g = parse_structure("kind algebra\ndim 2\n0 0 0 6/4\n");
    CHECK(g.alg(0, 0, 0) == frac(3, 2));
    CHECK_THAT(serialize(g), ContainsSubstring("0 0 0 3/2\n"));
}

TEST_CASE("serialization is deterministic") {
    Tensor3 sc(2);
    sc(1, 0, 1) = Scalar(1);
    sc(0, 1, 0) = Scalar(2);
    StructureFile f = to_structure(Algebra(sc), {{"zeta", "last"}, {"alpha", "first"}});
    std::string s = serialize(f);
    CHECK_THAT(s, ContainsSubstring("meta alpha first\nmeta zeta last\n"));
    CHECK_THAT(s, ContainsSubstring("0 1 0 2\n1 0 1 1\n"));

    // Entry order in the input does not matter; the rendering is canonical.
    StructureFile g1 = parse_structure("kind algebra\ndim 2\n1 0 1 1\n0 1 0 2\n");
    StructureFile g2 = parse_structure("kind algebra\ndim 2\n0 1 0 2\n1 0 1 1\n");
    CHECK(g1.alg == g2.alg);
    CHECK(serialize(g1) == serialize(g2));
}

TEST_CASE("comments, blank lines, and interleaved headers are tolerated") {
    std::string s =
        "# a comment\n"
        "kind triple\n"
        "\n"
        "dim 2\n"
        "0 0 0 0 1\n"
        "form 0 1 1/3\n"
        "meta note two words here\n"
        "# trailing comment\n";
    StructureFile f = parse_structure(s);
    CHECK(f.trip(0, 0, 0, 0) == 1);
    REQUIRE(f.form.has_value());
    CHECK((*f.form)(0, 1) == frac(1, 3));
    CHECK((*f.form)(1, 0) == frac(1, 3));  // mirrored
    REQUIRE(f.meta.size() == 1);
    CHECK(f.meta[0].second == "two words here");
}

TEST_CASE("parse errors name the offending line") {
    CHECK_THROWS_WITH(parse_structure(""), ContainsSubstring("line 1"));
    CHECK_THROWS_WITH(parse_structure("dim 2\n"), ContainsSubstring("expected 'kind"));
    CHECK_THROWS_WITH(parse_structure("kind ring\n"), ContainsSubstring("kind must be"));
    CHECK_THROWS_WITH(parse_structure("kind algebra\n"), ContainsSubstring("missing 'dim'"));
    CHECK_THROWS_WITH(parse_structure("kind algebra\ndim 0\n"), ContainsSubstring("dimension out of range"));
    CHECK_THROWS_WITH(parse_structure("kind algebra\ndim 65\n"), ContainsSubstring("dimension out of range"));
    CHECK_THROWS_WITH(parse_structure("kind algebra\ndim 2\nkind algebra\n"),
                      ContainsSubstring("duplicate header"));

    // Line numbers point at the bad line, counting comments and blanks.
    CHECK_THROWS_WITH(parse_structure("kind algebra\ndim 2\n# ok\n0 0 0 1\n0 0 0 2\n"),
                      ContainsSubstring("line 5: duplicate tensor entry"));
    CHECK_THROWS_WITH(parse_structure("kind algebra\ndim 2\n0 0 0 0\n"),
                      ContainsSubstring("line 3: zero entry"));
    CHECK_THROWS_WITH(parse_structure("kind algebra\ndim 2\n0 0 2 1\n"),
                      ContainsSubstring("line 3: tensor index out of range"));
    CHECK_THROWS_WITH(parse_structure("kind algebra\ndim 2\n0 0 1\n"),
                      ContainsSubstring("3 indices and a value"));
    CHECK_THROWS_WITH(parse_structure("kind triple\ndim 2\n0 0 0 1\n"),
                      ContainsSubstring("4 indices and a value"));
    CHECK_THROWS_WITH(parse_structure("kind algebra\ndim 2\n0 0 0 1/0\n"),
                      ContainsSubstring("line 3"));
    CHECK_THROWS_WITH(parse_structure("kind algebra\ndim 2\n-1 0 0 1\n"),
                      ContainsSubstring("malformed index"));
    CHECK_THROWS_WITH(parse_structure("kind algebra\ndim 2\nshape 0 0 1\n"),
                      ContainsSubstring("unknown keyword 'shape'"));
    CHECK_THROWS_WITH(parse_structure("kind algebra\ndim 2\nmeta key\n"),
                      ContainsSubstring("meta needs a key and a value"));

    // unit / form discipline.
    CHECK_THROWS_WITH(parse_structure("kind triple\ndim 2\nunit 0 1\n"),
                      ContainsSubstring("algebra files only"));
    CHECK_THROWS_WITH(parse_structure("kind algebra\ndim 2\nform 0 0 1\n"),
                      ContainsSubstring("triple files only"));
    CHECK_THROWS_WITH(parse_structure("kind algebra\ndim 2\nunit 0 1\nunit 0 1\n"),
                      ContainsSubstring("duplicate unit entry"));
    CHECK_THROWS_WITH(parse_structure("kind triple\ndim 2\nform 0 1 1\nform 1 0 1\n"),
                      ContainsSubstring("duplicate form entry"));
    CHECK_THROWS_WITH(parse_structure("kind algebra\ndim 2\nunit 5 1\n"),
                      ContainsSubstring("unit index out of range"));

    // A declared unit is re-validated when the algebra is rebuilt.
    StructureFile bad = parse_structure("kind algebra\ndim 2\nunit 0 1\n0 0 0 1\n");
    CHECK_THROWS_WITH(algebra_from_structure(bad), ContainsSubstring("not a two-sided unit"));
}

TEST_CASE("family instances survive the file format unchanged") {
    Mat g4 = diag_mat({Scalar(1), Scalar(1), Scalar(1), Scalar(4)});
    DMuResult d = build_d_mu(g4, unit_vec(4, 0), Scalar(1));
    StructureFile f = to_structure(d.triple, {{"mu", scalar_to_string(d.mu)}});
    std::string s = serialize(f);
    CHECK_THAT(s, ContainsSubstring("meta mu 1/4\n"));

    TripleSystem back = triple_from_structure(parse_structure(s));
    CHECK(back.tc() == d.triple.tc());
    REQUIRE(back.form().has_value());
    CHECK(*back.form() == *d.triple.form());
    CHECK(bool(check_gjts(back)));
    CHECK(bool(check_balanced(back).result));
}
