/**
 * @file test_families.cpp
 * @brief Tests for the family constructors: doubled composition algebras,
 *        orthogonal / unitarian / symplectic systems, the four-dimensional
 *        bracket family, the seven-dimensional family with its color algebra,
 *        the eight-dimensional cross-product family, and the cross identity
 *        checks.
 */
#include <catch2/catch_amalgamated.hpp>

#include "nxa/families.hpp"

#include "fixtures.hpp"

#include <stdexcept>
#include <vector>

using namespace nxa;
using Catch::Matchers::ContainsSubstring;

namespace {

Mat diag_mat(const std::vector<Scalar>& d) {
    Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < static_cast<int>(d.size()); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

}  // namespace

TEST_CASE("doubling parameters and the octonion associator", "[families]") {
    REQUIRE_THROWS_AS(cayley_dickson({}), std::invalid_argument);
    REQUIRE_THROWS_AS(cayley_dickson({Scalar(1), Scalar(1), Scalar(1), Scalar(1)}), std::invalid_argument);
    REQUIRE_THROWS_AS(cayley_dickson({Scalar(0)}), std::invalid_argument);

    CompositionAlgebra o = cayley_dickson({Scalar(-1), Scalar(-1), Scalar(-1)});
    REQUIRE(o.algebra.dim() == 8);
    Vec left = o.algebra.multiply(o.algebra.multiply(unit_vec(8, 1), unit_vec(8, 2)), unit_vec(8, 4));
    Vec right = o.algebra.multiply(unit_vec(8, 1), o.algebra.multiply(unit_vec(8, 2), unit_vec(8, 4)));
    REQUIRE(left == unit_vec(8, 7));
    REQUIRE(right == Scalar(-1) * unit_vec(8, 7));
    REQUIRE(o.algebra.associator(unit_vec(8, 1), unit_vec(8, 2), unit_vec(8, 4)) == 2 * unit_vec(8, 7));
    REQUIRE(check_composition(o.algebra, o.norm));
}

TEST_CASE("orthogonal family construction and validation", "[families]") {
    TripleSystem t1 = build_orthogonal(1, Mat::identity(1), 0);
    REQUIRE(t1.tc()(0, 0, 0, 0) == 1);

    TripleSystem t2 = build_orthogonal(2, Mat::identity(2), 0);
    REQUIRE(t2.tc() == testfix::orthogonal_tensor(Mat::identity(2)));
    REQUIRE(*t2.form() == Mat::identity(2));
    REQUIRE(check_balanced(t2).result.ok);

    REQUIRE_THROWS_AS(build_orthogonal(2, Mat::identity(3), 0), std::invalid_argument);
    REQUIRE_THROWS_WITH(build_orthogonal(2, Mat::from_rows({{1, 1}, {0, 1}}), 0), ContainsSubstring("symmetric"));
    REQUIRE_THROWS_WITH(build_orthogonal(2, Mat::identity(2), Vec{2, 0}), ContainsSubstring("base point"));
    REQUIRE_THROWS_AS(build_orthogonal(2, Mat::identity(2), 2), std::invalid_argument);
    REQUIRE_THROWS_WITH(build_orthogonal(2, diag_mat({Scalar(2), Scalar(1)}), 0), ContainsSubstring("base point"));
}

TEST_CASE("orthogonal homotopes recover familiar quadratic algebras", "[families]") {
    // Indefinite form diag(1,-1): the homotope at the first basis vector is
    // the two-dimensional split algebra, isomorphic to F x F.
    TripleSystem t = build_orthogonal(2, diag_mat({Scalar(1), Scalar(-1)}), 0);
    QuadraticStructure q = bfkts_to_quadratic(t, unit_vec(2, 0));
    REQUIRE(q.vdim() == 1);
    REQUIRE(q.form(0, 0) == -1);
    REQUIRE(q.algebra.basis_product(1, 1) == unit_vec(2, 0));
    REQUIRE(is_commutative(q.algebra));
    REQUIRE(is_associative(q.algebra));

    Mat phi = Mat::from_rows({{1, 1}, {1, -1}});
    REQUIRE(verify_isomorphism(q.algebra, testfix::f_cross_f(), phi));

    // Four-dimensional orthonormal case: commutative Jordan homotope.
    TripleSystem t4 = build_orthogonal(4, Mat::identity(4), 0);
    QuadraticStructure q4 = bfkts_to_quadratic(t4, unit_vec(4, 0));
    REQUIRE(is_commutative(q4.algebra));
    REQUIRE(is_noncommutative_jordan(q4.algebra));
    REQUIRE(is_in_variety_v(q4.algebra));
}

TEST_CASE("unitarian family", "[families]") {
    CompositionAlgebra k = cayley_dickson({Scalar(1)});
    HermitianModule m1 = hermitian_split_etale(1);

    TripleSystem t1 = build_unitarian(k, m1);
    REQUIRE(t1.dim() == 2);
    REQUIRE(*t1.form() == diag_mat({Scalar(1), Scalar(-1)}));
    QuadraticStructure q1 = bfkts_to_quadratic(t1, m1.mbasis[0]);
    REQUIRE(q1.algebra.sc() == k.algebra.sc());
    REQUIRE(*q1.algebra.unit() == *k.algebra.unit());

    HermitianModule m3 = hermitian_split_etale(3);
    TripleSystem t3 = build_unitarian(k, m3);
    REQUIRE(t3.dim() == 6);
    REQUIRE(*t3.form() ==
            diag_mat({Scalar(1), Scalar(-1), Scalar(1), Scalar(-1), Scalar(1), Scalar(-1)}));
    REQUIRE(check_balanced(t3).result.ok);

    // Conjugate symmetry of the sesquilinear form on arbitrary vectors.
    Vec x{1, 2, 3, 4, 5, 6};
    Vec y{7, -1, 0, 2, 1, 3};
    REQUIRE(herm_value(m3, x, y) == m3.bar.apply(herm_value(m3, y, x)));

    // Mismatched coefficient algebra.
    CompositionAlgebra k2 = cayley_dickson({Scalar(2)});
    REQUIRE_THROWS_WITH(build_unitarian(k2, m1), ContainsSubstring("not over"));
    // Wrong coefficient dimension.
    REQUIRE_THROWS_WITH(build_unitarian(split_quaternion_matrix(), hermitian_split_quaternion(1)),
                        ContainsSubstring("dimension"));
    // Degenerate sesquilinear form (second module generator is isotropic and
    // orthogonal to everything).
    Vec one = *k.algebra.unit();
    Vec zero(2);
    HermitianModule md = free_hermitian_module(k.algebra, k.conj, {{one, zero}, {zero, zero}});
    REQUIRE_THROWS_WITH(build_unitarian(k, md), ContainsSubstring("hermitian form is degenerate"));
}

TEST_CASE("symplectic family", "[families]") {
    CompositionAlgebra h = split_quaternion_matrix();
    HermitianModule m1 = hermitian_split_quaternion(1);

    TripleSystem t1 = build_symplectic(h, m1);
    REQUIRE(t1.dim() == 4);

    Mat slot(4, 4);
    slot(0, 3) = frac(1, 2);
    slot(3, 0) = frac(1, 2);
    slot(1, 2) = frac(-1, 2);
    slot(2, 1) = frac(-1, 2);
    REQUIRE(*t1.form() == slot);

    // The binary product on the homotope at the module generator is not
    // commutative and not anti-commutative: multiplying the two nilpotent
    // matrix units in opposite orders gives 2 x_1 and -x_1.
    QuadraticStructure q1 = bfkts_to_quadratic(t1, m1.mbasis[0]);
    REQUIRE(q1.algebra.multiply(unit_vec(4, 1), unit_vec(4, 0)) == Vec{0, 2, 0, 0});
    REQUIRE(q1.algebra.multiply(unit_vec(4, 0), unit_vec(4, 1)) == Vec{0, -1, 0, 0});

    HermitianModule m2 = hermitian_split_quaternion(2);
    TripleSystem t2 = build_symplectic(h, m2);
    REQUIRE(t2.dim() == 8);
    Mat gram(8, 8);
    for (int b = 0; b < 2; ++b)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) gram(4 * b + i, 4 * b + j) = slot(i, j);
    REQUIRE(*t2.form() == gram);
    REQUIRE(check_balanced(t2).result.ok);

    REQUIRE_THROWS_WITH(build_symplectic(cayley_dickson({Scalar(1)}), hermitian_split_etale(1)),
                        ContainsSubstring("dimension"));
}

TEST_CASE("bracket family over four dimensions", "[families]") {
    DMuResult d1 = build_d_mu(Mat::identity(4), unit_vec(4, 0), Scalar(1));
    REQUIRE(d1.mu == 1);
    REQUIRE(d1.triple.basis_triple(0, 1, 2) == unit_vec(4, 3));
    REQUIRE(check_balanced(d1.triple).result.ok);

    DMuResult d2 = build_d_mu(Mat::identity(4), unit_vec(4, 0), Scalar(2));
    REQUIRE(d2.mu == 4);
    REQUIRE(d2.triple.basis_triple(0, 1, 2) == 2 * unit_vec(4, 3));
    REQUIRE(check_balanced(d2.triple).result.ok);

    DMuResult d3 = build_d_mu(diag_mat({Scalar(1), Scalar(1), Scalar(1), Scalar(4)}), unit_vec(4, 0), Scalar(1));
    REQUIRE(d3.mu == frac(1, 4));
    REQUIRE(check_balanced(d3.triple).result.ok);

    Mat degenerate(4, 4);
    degenerate(0, 0) = 1;
    REQUIRE_THROWS_WITH(build_d_mu(degenerate, unit_vec(4, 0), Scalar(1)), ContainsSubstring("nondegenerate"));
    REQUIRE_THROWS_WITH(build_d_mu(Mat::identity(4), 2 * unit_vec(4, 0), Scalar(1)),
                        ContainsSubstring("base point"));
    REQUIRE_THROWS_WITH(build_d_mu(Mat::identity(4), unit_vec(4, 0), Scalar(0)), ContainsSubstring("nonzero"));
}

TEST_CASE("seven-dimensional family and its color algebra", "[families]") {
    CompositionAlgebra c = cayley_dickson({Scalar(-1), Scalar(-1), Scalar(1)});
    Vec e = unit_vec(8, 1);

    // Trace-zero coordinates: the kernel basis of the trace functional is
    // the ambient basis vectors 1..7, so e sits at coordinate 0.
    std::vector<Vec> c0 = trace_zero_basis(c);
    REQUIRE(c0.size() == 7);
    REQUIRE(c0[0] == e);

    TripleSystem tg = build_g_type(c, e);
    REQUIRE(tg.dim() == 7);
    REQUIRE((*tg.form())(0, 0) == 1);
    BalancedCheck bal = check_balanced(tg);
    REQUIRE(bal.result.ok);

    // The inner derivations by e pair with the vector space as
    // D_{e,u}(v) = -2 n(u,v) e + [e, u v] on V = 1^perp cap e^perp.
    std::vector<Vec> vb = color_vector_basis(c, e);
    REQUIRE(vb.size() == 6);
    Mat le = c.algebra.left_mult(e);
    Mat re = c.algebra.right_mult(e);
    for (const Vec& u : vb) {
        Mat lu = c.algebra.left_mult(u);
        Mat ru = c.algebra.right_mult(u);
        Mat d = commutator(le, lu) + commutator(le, ru) + commutator(re, ru);
        for (const Vec& v : vb) {
            Vec uv = c.algebra.multiply(u, v);
            Vec comm = c.algebra.multiply(e, uv) - c.algebra.multiply(uv, e);
            REQUIRE(d.apply(v) == Scalar(-2) * ca_norm_pol(c, u, v) * e + comm);
        }
    }

    // A base point of non-unit norm still normalizes to <e|e> = 1.
    TripleSystem tg2 = build_g_type(c, 2 * e);
    Vec ce2 = *solve(detail::columns_matrix(c0), 2 * e);
    REQUIRE(eval_form(*tg2.form(), ce2, ce2) == 1);

    // Color algebra over the same data.
    QuadraticStructure bq = build_color(c, e);
    REQUIRE(bq.algebra.dim() == 7);
    REQUIRE(bq.vdim() == 6);
    REQUIRE(bq.form ==
            diag_mat({Scalar(-2), Scalar(-2), Scalar(2), Scalar(2), Scalar(2), Scalar(2)}));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            for (int l = 0; l < 6; ++l) REQUIRE(bq.cross(i, j, l) == -bq.cross(j, i, l));

    // The explicit map 1 -> e, u -> -2 e u identifies the (-2)-scaled color
    // algebra with the homotope of the seven-dimensional system at e.
    QuadraticStructure sg = bfkts_to_quadratic(tg, *solve(detail::columns_matrix(c0), e));
    REQUIRE(verify_g_iso(c, e, bq, sg.algebra));
    REQUIRE_FALSE(verify_g_iso(c, e, bq, bq.algebra));

    // The same map built with the wrong scale u -> -e u fails the product law.
    std::vector<Vec> wrong_cols;
    Mat m0 = detail::columns_matrix(c0);
    wrong_cols.push_back(*solve(m0, e));
    for (const Vec& u : vb) wrong_cols.push_back(*solve(m0, Scalar(-1) * c.algebra.multiply(e, u)));
    Mat phi_wrong = detail::columns_matrix(wrong_cols);
    REQUIRE_FALSE(verify_isomorphism(scale_form(bq, -2), sg.algebra, phi_wrong));

    // Validation: the base point must be trace-free, anisotropic, and the
    // structures must have matching shapes.
    REQUIRE_THROWS_WITH(build_g_type(c, unit_vec(8, 0)), ContainsSubstring("trace zero"));
    REQUIRE_THROWS_WITH(build_g_type(c, unit_vec(8, 1) + unit_vec(8, 5)), ContainsSubstring("nonzero norm"));
    REQUIRE_THROWS_WITH(build_color(c, unit_vec(8, 0)), ContainsSubstring("trace zero"));
    QuadraticStructure qf = *quadratic_structure(cayley_dickson({Scalar(-1), Scalar(-1), Scalar(-1)}).algebra);
    REQUIRE_THROWS_WITH(verify_g_iso(c, e, qf, sg.algebra), ContainsSubstring("mismatched"));

    // The construction also goes through on the division octonions.
    CompositionAlgebra o = cayley_dickson({Scalar(-1), Scalar(-1), Scalar(-1)});
    REQUIRE(check_balanced(build_g_type(o, unit_vec(8, 1))).result.ok);
}

TEST_CASE("eight-dimensional cross-product family", "[families]") {
    CompositionAlgebra c = cayley_dickson({Scalar(-1), Scalar(-1), Scalar(1)});
    TripleSystem tf = build_f_type(c);
    REQUIRE(tf.dim() == 8);
    REQUIRE(*tf.form() == diag_mat({Scalar(1), Scalar(1), Scalar(1), Scalar(1), Scalar(-1), Scalar(-1),
                                    Scalar(-1), Scalar(-1)}));
    REQUIRE(check_balanced(tf).result.ok);

    // The homotope at the algebra unit is exactly the 1/3 mutation of the
    // composition algebra.
    QuadraticStructure qs = bfkts_to_quadratic(tf, unit_vec(8, 0));
    REQUIRE(qs.algebra.sc() == scalar_mutation(c.algebra, frac(1, 3)).sc());

    // Scaling the norm by 9 and the vector part by -3 identifies the scaled
    // composition algebra with that homotope; the scale +3 does not work.
    QuadraticStructure qc = *quadratic_structure(c.algebra);
    Mat stretch(8, 8);
    stretch(0, 0) = 1;
    for (int i = 1; i < 8; ++i) stretch(i, i) = -3;
    Mat phi = qc.from_adapted * stretch * qc.to_adapted;
    REQUIRE(verify_isomorphism(scale_form(qc, 9), qs.algebra, phi));
    Mat stretch_bad(8, 8);
    stretch_bad(0, 0) = 1;
    for (int i = 1; i < 8; ++i) stretch_bad(i, i) = 3;
    Mat phi_bad = qc.from_adapted * stretch_bad * qc.to_adapted;
    REQUIRE_FALSE(verify_isomorphism(scale_form(qc, 9), qs.algebra, phi_bad));

    REQUIRE_THROWS_AS(build_f_type(cayley_dickson({Scalar(-1), Scalar(-1)})), std::invalid_argument);
}

TEST_CASE("cross identity checks tell the underlying products apart", "[families]") {
    // Quaternion and octonion vector cross products satisfy the two-fold
    // identity but not the three-fold one.
    QuadraticStructure qq = *quadratic_structure(cayley_dickson({Scalar(-1), Scalar(-1)}).algebra);
    REQUIRE(check_quaca(qq));
    REQUIRE_FALSE(check_colo(qq).ok);

    QuadraticStructure qo = *quadratic_structure(cayley_dickson({Scalar(-1), Scalar(-1), Scalar(-1)}).algebra);
    REQUIRE(check_quaca(qo));
    REQUIRE_FALSE(check_colo(qo).ok);

    // The color product satisfies the three-fold identity but not the
    // two-fold one.
    CompositionAlgebra c = cayley_dickson({Scalar(-1), Scalar(-1), Scalar(1)});
    QuadraticStructure bq = build_color(c, unit_vec(8, 1));
    CheckResult quaca = check_quaca(bq);
    REQUIRE_FALSE(quaca.ok);
    REQUIRE_FALSE(quaca.witness.empty());
    REQUIRE(check_colo(bq));

    // A zero product on a two-dimensional space fails the two-fold identity.
    QuadraticStructure qz = *quadratic_structure(make_quadratic_algebra(Mat::identity(2), Tensor3(2)));
    CheckResult rz = check_quaca(qz);
    REQUIRE_FALSE(rz.ok);
    REQUIRE(rz.witness == std::vector<int>{0, 0, 1});
}
