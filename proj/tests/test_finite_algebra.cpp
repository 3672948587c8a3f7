#include <doctest.h>

#include "vxa/algebroid.hpp"
#include "vxa/finite_algebra.hpp"

using namespace vxa;

namespace {
GaussianRational q(long n, long d = 1) { return GaussianRational(rational_of(n, d)); }

// 2-dim algebra {1, a} with a*a given
FiniteAlgebra two_dim(const GVec& a_sq) {
    std::vector<std::vector<GVec>> sc(2, std::vector<GVec>(2, gvec_zero(2)));
    sc[0][0] = gvec_unit(2, 0);
    sc[0][1] = sc[1][0] = gvec_unit(2, 1);
    sc[1][1] = a_sq;
    return new_algebra(2, {"1", "a"}, 0, std::move(sc));
}
} // namespace

TEST_CASE("validation accepts the dual numbers and the base field") {
    auto a = two_dim(gvec_zero(2)); // C[x]/(x^2)
    CHECK(a.dim == 2);
    std::vector<std::vector<GVec>> sc1(1, std::vector<GVec>(1, gvec_unit(1, 0)));
    auto k = new_algebra(1, {"1"}, 0, std::move(sc1));
    CHECK(k.multiply(k.unit_vec(), k.unit_vec()) == k.unit_vec());
}

TEST_CASE("validation rejects corrupted tables") {
    // a*a = 1 but a*(a*a) corrupted via a fake non-associative table:
    // set a*a = 1 + a and (deliberately) break symmetry first
    std::vector<std::vector<GVec>> sc(2, std::vector<GVec>(2, gvec_zero(2)));
    sc[0][0] = gvec_unit(2, 0);
    sc[0][1] = gvec_unit(2, 1);
    sc[1][0] = gvec_unit(2, 0); // != sc[0][1]
    sc[1][1] = gvec_unit(2, 0);
    CHECK_THROWS_WITH_AS((void)new_algebra(2, {"1", "a"}, 0, sc), doctest::Contains("NotCommutative"),
                         Error);

    // associativity corrupted on (a,a,a): a*a = a with unit elsewhere fails
    // (a*a)*a = a*a = a while a*(a*a) = a*a = a holds, so use a genuinely
    // non-associative table: a*a = 1, but redefine 1*1 = 1, 1*a = a, a*1 = a
    // and then poison a*a to depend on order via a 3-dim table.
    std::vector<std::vector<GVec>> sc3(3, std::vector<GVec>(3, gvec_zero(3)));
    for (int j = 0; j < 3; ++j) sc3[0][j] = sc3[j][0] = gvec_unit(3, j);
    sc3[1][1] = gvec_unit(3, 2);
    sc3[1][2] = sc3[2][1] = gvec_unit(3, 0); // a*b = 1: then (a*a)*a = b*a = 1, a*(a*a) = a*b = 1 ... adjust
    sc3[2][2] = gvec_unit(3, 1);             // b*b = a: (a*a)*b = b*b = a, a*(a*b) = a*1 = a ... still fine
    // poison: make b*b = b so that (a*a)*b = b*b = b but a*(a*b) = a
    sc3[2][2] = gvec_unit(3, 2);
    CHECK_THROWS_WITH_AS((void)new_algebra(3, {"1", "a", "b"}, 0, sc3),
                         doctest::Contains("NotAssociative"), Error);

    CHECK_THROWS_WITH_AS((void)new_algebra(2, {"1", "a"}, 1, two_dim(gvec_zero(2)).sc),
                         doctest::Contains("NoUnit"), Error);
}

TEST_CASE("multiply against classified family products") {
    // a*a = alpha2 a - alpha2^2/4 with alpha2 = 2: a*a = 2a - 1
    auto V = dim2_solvable(q(2));
    GVec aa = V.A.multiply(V.A.basis_vec(1), V.A.basis_vec(1));
    GVec expect = gvec_add(gvec_scale(q(2), gvec_unit(2, 1)), gvec_scale(q(-1), gvec_unit(2, 0)));
    CHECK(aa == expect);
    CHECK(V.A.multiply(V.A.unit_vec(), V.A.basis_vec(1)) == V.A.basis_vec(1));

    // dim-3 nilpotent with gamma0 = 1: a*a = b0a and a*(a*a) = 0
    auto W = dim3_nilpotent(q(1), q(0));
    GVec aa3 = W.A.multiply(W.A.basis_vec(1), W.A.basis_vec(1));
    CHECK(aa3 == gvec_unit(3, 2));
    CHECK(gvec_is_zero(W.A.multiply(W.A.basis_vec(1), aa3)));
}

TEST_CASE("local profiles of the classified quotient rings") {
    // C[x]/(x^3) shape: dim-3 nilpotent with gamma0 != 0
    auto p3 = local_profile(dim3_nilpotent(q(4), q(0)).A);
    CHECK(p3.nilpotency_index == 3);
    CHECK(p3.power_dims == std::vector<int>{2, 1, 0});

    // C[x,y]/(x^2,xy,y^2) shape: gamma0 = 0
    auto p2 = local_profile(dim3_nilpotent(q(0), q(5)).A);
    CHECK(p2.power_dims == std::vector<int>{2, 0});

    // split 2-dim algebra a*a = 1 is not local; oracle: (1 +- a)/2 are
    // idempotents, found by direct solve
    auto split = two_dim(gvec_unit(2, 0));
    GVec e{q(1, 2), q(1, 2)};
    CHECK(split.multiply(e, e) == e);
    CHECK_THROWS_WITH_AS((void)local_profile(split), doctest::Contains("NotLocal"), Error);
}

TEST_CASE("profile templates") {
    CHECK(profile_matches(dim2_solvable(q(2)).A, "C[x]/(x^2)"));
    CHECK(profile_matches(dim3_nilpotent(q(0), q(0)).A, "C[x,y]/(x^2,xy,y^2)"));
    CHECK(profile_matches(dim3_nilpotent(q(1), q(0)).A, "C[x]/(x^3)"));
    CHECK(!profile_matches(dim3_nilpotent(q(1), q(0)).A, "C[x]/(x^2)"));
    CHECK_THROWS_WITH_AS((void)profile_matches(dim2_solvable(q(2)).A, "C[x]/(x^4)"),
                         doctest::Contains("UnknownTemplate"), Error);
}

TEST_CASE("radical elements are nilpotent and admit no idempotents") {
    ScalarSampler rng(7);
    std::vector<FiniteAlgebra> algebras{dim2_solvable(q(2)).A, dim2_nilpotent(q(1)).A,
                                        dim3_nilpotent(q(1), q(0)).A, dim3_type_c(q(0)).A};
    for (const auto& A : algebras) {
        auto prof = local_profile(A);
        for (int t = 0; t < 20; ++t) {
            GVec r = gvec_zero(A.dim);
            for (const auto& rb : prof.radical_basis) gvec_axpy(r, rng.next_scalar(), rb);
            GVec pow = r;
            for (int k = 1; k < A.dim; ++k) pow = A.multiply(pow, r);
            CHECK(gvec_is_zero(pow));
            if (!gvec_is_zero(r)) {
                CHECK(A.multiply(r, r) != r);
                CHECK(A.multiply(r, r) != gvec_scale(q(-1), r));
            }
        }
    }
}

TEST_CASE("residue coefficient splits A as C.1 + radical") {
    auto V = dim2_solvable(q(2));
    auto prof = local_profile(V.A);
    // a = (a - 1) + 1, so the residue of a is 1
    CHECK(residue_coefficient(V.A, prof, V.a_basis(1)) == q(1));
    CHECK(residue_coefficient(V.A, prof, V.A.unit_vec()) == q(1));
}
