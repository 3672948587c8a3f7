#include <doctest.h>

#include "vxa/heisenberg.hpp"

using namespace vxa;

namespace {
GaussianRational q(long n, long d = 1) { return GaussianRational(rational_of(n, d)); }
} // namespace

TEST_CASE("partition counts: two algorithms agree up to 30") {
    std::vector<long> first{1, 1, 2, 3, 5, 7, 11};
    for (int n = 0; n <= 6; ++n) CHECK(partition_count(n) == first[n]);
    for (int n = 0; n <= 30; ++n)
        CHECK(partition_count_recurrence(n) == partition_count_enumerate(n));
    CHECK(partition_count(30) == 5604);
}

TEST_CASE("Fock truncation dimensions and h action") {
    FockTruncation F(6);
    for (int n = 0; n <= 6; ++n) CHECK(F.dim(n) == partition_count(n));
    // h(1) h(-1)|0> = |0>
    FVec vac{{Partition{}, q(1)}};
    FVec v = F.h(1, F.h(-1, vac));
    CHECK(v == vac);
    // h(2) h(-1) h(-1)|0> = 0
    CHECK(F.h(2, F.h(-1, F.h(-1, vac))).empty());
    // commutator invariant on all basis vectors, |m|, |n| <= 6
    for (long m = -6; m <= 6; ++m)
        for (long n = -6; n <= 6; ++n)
            for (int d = 0; d <= 6; ++d) {
                if (d - m > 6 || d - n > 6 || d - m - n > 6) continue;
                if (d - m < 0 && m > 0) {
                }
                for (const auto& p : F.basis(d)) {
                    FVec w{{p, q(1)}};
                    FVec lhs = F.h(m, F.h(n, w));
                    FockTruncation::fvec_axpy(lhs, q(-1), F.h(n, F.h(m, w)));
                    FVec expect;
                    if (m + n == 0) FockTruncation::fvec_axpy(expect, q(m), w);
                    CHECK(lhs == expect);
                }
            }
}

TEST_CASE("Fock products satisfy the free boson relations") {
    FockTruncation F(6);
    FVec vac{{Partition{}, q(1)}};
    Partition h1{1};
    // h_0 h = 0, h_1 h = |0>, h_{-1} h = h(-1)h(-1)|0>
    CHECK(F.product(h1, 0, FVec{{h1, q(1)}}).empty());
    CHECK(F.product(h1, 1, FVec{{h1, q(1)}}) == vac);
    CHECK(F.product(h1, -1, FVec{{h1, q(1)}}) == FVec{{Partition{1, 1}, q(1)}});
    // vacuum: u_{-1}|0> = u
    for (int d = 0; d <= 4; ++d)
        for (const auto& p : F.basis(d)) CHECK(F.product(p, -1, vac) == FVec{{p, q(1)}});
}

TEST_CASE("heisenberg check passes for dim2_solvable(2) at N = 4") {
    auto rep = heisenberg_check(dim2_solvable(q(2)), 4, 8);
    CHECK(rep.pass);
    CHECK(rep.residue == q(1));
    REQUIRE(rep.rescale.has_value());
    CHECK(*rep.rescale == q(1));
    for (int n = 0; n <= 4; ++n) {
        CHECK(rep.quotient_dims[n] == rep.expected[n]);
        CHECK(rep.dims_exact[n]);
        CHECK(rep.bijective[n]);
    }
    CHECK(rep.intertwine_checked > 50);
    CHECK(rep.first_failure.empty());
}

TEST_CASE("nilpotent families are rejected: the pairing residue vanishes") {
    CHECK_THROWS_WITH_AS((void)heisenberg_check(dim2_nilpotent(q(0)), 3, 6),
                         doctest::Contains("NotHeisenbergFamily"), Error);
    CHECK_THROWS_WITH_AS((void)heisenberg_check(dim3_nilpotent(q(0), q(1)), 3, 6),
                         doctest::Contains("NotHeisenbergFamily"), Error);
}

TEST_CASE("missing square root degrades gracefully") {
    // alpha2 = 3: residue 3/2, 2/3 is not a square in Q(i)
    auto rep = heisenberg_check(dim2_solvable(q(3)), 3, 6);
    CHECK(rep.sqrt_missing);
    CHECK(!rep.pass);
    CHECK(rep.residue == q(3, 2));
    for (int n = 0; n <= 3; ++n) CHECK(rep.quotient_dims[n] == rep.expected[n]);
    CHECK(rep.intertwine_checked == 0);
}

TEST_CASE("type d with nonzero beta is not even local") {
    CHECK_THROWS_WITH_AS((void)heisenberg_check(dim3_type_d(q(0), q(0)), 3, 6),
                         doctest::Contains("NotLocal"), Error);
}

TEST_CASE("heisenberg check passes for type b and type c at N = 4") {
    for (auto make : {+[] { return dim3_type_b(q(2), q(0)); }, +[] { return dim3_type_c(q(0)); }}) {
        auto rep = heisenberg_check(make(), 4, 8);
        CHECK(rep.pass);
        CHECK(rep.residue == q(1)); // a = (a - 1) + 1 modulo the radical
        for (int n = 0; n <= 4; ++n) {
            CHECK(rep.quotient_dims[n] == rep.expected[n]);
            CHECK(rep.dims_exact[n]);
        }
    }
}
