/**
 * @file test_quadratic.cpp
 * @brief Tests for quadratic-algebra extraction, norm/trace/involution data,
 *        form scaling and the composition-algebra constructors they rely on.
 */
#include <catch2/catch_amalgamated.hpp>

#include "nxa/cayley_dickson.hpp"
#include "nxa/quadratic.hpp"

#include <stdexcept>

using namespace nxa;

namespace {

/// F x F with componentwise product; unit (1,1).
Algebra f_cross_f() {
    Tensor3 sc(2);
    sc(0, 0, 0) = 1;
    sc(1, 1, 1) = 1;
    return Algebra(std::move(sc), Vec{1, 1});
}

/// F[x]/(x^3): basis (1, x, x^2); x^2 escapes F 1 + F x.
Algebra truncated_polynomials() {
    Tensor3 sc(3);
    sc(0, 0, 0) = 1;
    for (int j = 1; j < 3; ++j) {
        sc(0, j, j) = 1;
        sc(j, 0, j) = 1;
    }
    sc(1, 1, 2) = 1;
    return Algebra(std::move(sc), unit_vec(3, 0));
}

}  // namespace

TEST_CASE("adapted quadratic algebra from form and cross", "[quadratic]") {
    Mat form(1, 1);
    form(0, 0) = 1;
    Algebra a = make_quadratic_algebra(form, Tensor3(1));
    REQUIRE(a.dim() == 2);
    CHECK(a.basis_product(1, 1) == Vec{-1, 0});
    CHECK(*a.unit() == Vec{1, 0});
    CHECK(is_commutative(a).ok);
    CHECK(is_in_variety_v(a).ok);
    REQUIRE_THROWS_AS(make_quadratic_algebra(form, Tensor3(2)), std::invalid_argument);
}

TEST_CASE("extraction for the split two-dimensional algebra", "[quadratic]") {
    Algebra a = f_cross_f();
    auto q = quadratic_structure(a);
    REQUIRE(q.has_value());
    REQUIRE(q->vdim() == 1);
    CHECK(q->vbasis[0] == Vec{frac(1, 2), frac(-1, 2)});
    CHECK(q->form(0, 0) == frac(-1, 4));
    CHECK(rebuild_quadratic(*q).sc() == a.sc());

    NormTraceInvolution nti = norm_trace_involution(*q);
    // N((a,b)) = a b, T((a,b)) = a + b, bar swaps the two coordinates.
    CHECK(norm_value(nti, Vec{2, 3}) == 6);
    CHECK(dot(nti.trace, Vec{2, 3}) == 5);
    CHECK(nti.bar.apply(Vec{1, 0}) == Vec{0, 1});
    CHECK(nti.bar.apply(Vec{1, 1}) == Vec{1, 1});
}

TEST_CASE("extraction for the quaternions", "[quadratic]") {
    CompositionAlgebra h = cayley_dickson({-1, -1});
    auto q = quadratic_structure(h.algebra);
    REQUIRE(q.has_value());
    REQUIRE(q->vdim() == 3);
    CHECK(q->vbasis[0] == unit_vec(4, 1));
    CHECK(q->form == Mat::identity(3));
    CHECK(q->cross(0, 1, 2) == 1);  // i x j = k
    CHECK(q->cross(1, 0, 2) == -1);
    CHECK(q->cross(1, 2, 0) == 1);  // j x k = i
    CHECK(q->cross(2, 0, 1) == 1);  // k x i = j

    NormTraceInvolution nti = norm_trace_involution(*q);
    CHECK(norm_value(nti, Vec{1, 2, 0, 0}) == 5);
    CHECK(dot(nti.trace, Vec{1, 2, 0, 0}) == 2);
    CHECK(nti.bar.apply(Vec{1, 2, 0, 0}) == Vec{1, -2, 0, 0});
    // The involution agrees with the composition-algebra conjugation.
    CHECK(nti.bar == h.conj);
    CHECK(nti.norm_polarization == h.norm);
}

TEST_CASE("matrix algebra of degree two is quadratic", "[quadratic]") {
    CompositionAlgebra m = split_quaternion_matrix();
    auto q = quadratic_structure(m.algebra);
    REQUIRE(q.has_value());
    REQUIRE(q->vdim() == 3);
    CHECK(is_symmetric(q->form));
    CHECK(rebuild_quadratic(*q).sc() == m.algebra.sc());

    NormTraceInvolution nti = norm_trace_involution(*q);
    // Norm = determinant, trace = matrix trace, bar = adjugate.
    Vec x{1, 2, 3, 4};
    CHECK(norm_value(nti, x) == -2);
    CHECK(dot(nti.trace, x) == 5);
    CHECK(nti.bar.apply(x) == Vec{4, -2, -3, 1});
    CHECK(nti.norm_polarization == m.norm);
    CHECK(nti.bar == m.conj);
}

TEST_CASE("quadratic structure is absent when a square escapes", "[quadratic]") {
    CHECK_FALSE(quadratic_structure(truncated_polynomials()).has_value());
    Tensor3 sc(1);
    sc(0, 0, 0) = 1;
    REQUIRE_THROWS_AS(quadratic_structure(Algebra(std::move(sc))), std::invalid_argument);
}

TEST_CASE("asymmetric forms are representable but carry no involution", "[quadratic]") {
    Mat form(2, 2);
    form(0, 1) = 1;
    Algebra a = make_quadratic_algebra(form, Tensor3(2));
    auto q = quadratic_structure(a);
    REQUIRE(q.has_value());
    CHECK(q->form == form);
    REQUIRE_THROWS_AS(norm_trace_involution(*q), std::invalid_argument);
}

TEST_CASE("symmetric cross products are rejected", "[quadratic]") {
    Tensor3 sc(3);
    sc(0, 0, 0) = 1;
    for (int j = 1; j < 3; ++j) {
        sc(0, j, j) = 1;
        sc(j, 0, j) = 1;
    }
    sc(1, 2, 1) = 1;
    sc(2, 1, 1) = 1;
    Algebra a(std::move(sc), unit_vec(3, 0));
    CHECK_FALSE(quadratic_structure(a).has_value());
}

TEST_CASE("form scaling rescales only the scalar part", "[quadratic]") {
    CompositionAlgebra h = cayley_dickson({-1, -1});
    auto q = quadratic_structure(h.algebra);
    REQUIRE(q.has_value());

    Algebra s3 = scale_form(*q, 3);
    CHECK(s3.basis_product(1, 1) == Vec{-3, 0, 0, 0});
    CHECK(s3.basis_product(1, 2) == unit_vec(4, 3));  // i j = k survives
    CHECK(scale_form(*q, 1).sc() == h.algebra.sc());
    REQUIRE_THROWS_AS(scale_form(*q, 0), std::invalid_argument);

    // The rescaled algebra is still quadratic with the expected form.
    auto q3 = quadratic_structure(s3);
    REQUIRE(q3.has_value());
    CHECK(q3->form == 3 * Mat::identity(3));
}

TEST_CASE("form evaluation and symmetry helpers", "[quadratic]") {
    Mat g(2, 2);
    g(0, 1) = 2;
    CHECK(eval_form(g, Vec{1, 0}, Vec{0, 1}) == 2);
    CHECK(eval_form(g, Vec{0, 1}, Vec{1, 0}) == 0);
    CHECK_FALSE(is_symmetric(g));
    CHECK(is_symmetric(Mat::identity(2)));
}
