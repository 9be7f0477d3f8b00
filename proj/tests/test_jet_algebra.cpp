#include <doctest.h>

#include <map>
#include <random>

#include <ellgw/jet_algebra.hpp>
#include <ellgw/linear_algebra.hpp>
#include <ellgw/series.hpp>

#include "oracles.hpp"

using namespace ellgw;

namespace
{

DiffPoly mono(std::vector<int> idx, Rational c = 1)
{
    return DiffPoly(JetMonomial(std::move(idx)), c);
}

long partitions(int n)
{
    return n < 0 ? 0 : oracle::count_young_diagrams(n);
}

// Whether the homogeneous degree-d polynomial p lies in D(degree d-1), by
// solving the linear system over all monomials.
bool in_image_of_D(const DiffPoly &p, int d)
{
    if (p.is_zero()) {
        return true;
    }
    const auto src = oracle::all_monomials(d - 1);
    const auto dst = oracle::all_monomials(d);
    std::map<JetMonomial, std::size_t> row;
    for (std::size_t i = 0; i < dst.size(); ++i) {
        row.emplace(dst[i], i);
    }
    Matrix m(dst.size(), std::vector<Rational>(src.size(), Rational(0)));
    for (std::size_t j = 0; j < src.size(); ++j) {
        const DiffPoly image = apply_D(DiffPoly(src[j], Rational(1)));
        for (const auto &[mm, c] : image.terms()) {
            m[row.at(mm)][j] = c;
        }
    }
    std::vector<Rational> rhs(dst.size(), Rational(0));
    for (const auto &[mm, c] : p.terms()) {
        rhs[row.at(mm)] = c;
    }
    return solve(m, rhs, static_cast<int>(src.size())).has_value();
}

bool proportional(const DiffPoly &a, const DiffPoly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return a.is_zero() && b.is_zero();
    }
    const auto &[m, c] = *a.terms().begin();
    const Rational cb = b.coefficient(m);
    return cb != 0 && a * (cb / c) == b;
}

} // namespace

TEST_CASE("monomial_degree_and_derivative_count")
{
    const JetMonomial m({2, 0, 0});
    CHECK(m.indices() == std::vector<int>{0, 0, 2});
    CHECK(m.degree() == 5);
    CHECK(m.derivative_count() == 2);
    CHECK(m.max_index() == 2);
    CHECK(!m.is_basis());
    CHECK(JetMonomial({1, 1, 0}).is_basis());
    CHECK(JetMonomial({0, 0, 0}).is_basis());
    CHECK(JetMonomial().is_basis());
    CHECK(!JetMonomial({1}).is_basis());
    CHECK_THROWS_AS(JetMonomial({-1}), std::invalid_argument);
}

TEST_CASE("apply_D_examples")
{
    CHECK(apply_D(mono({0})) == mono({1}));
    CHECK(apply_D(mono({0, 0})) == mono({0, 1}, 2));
    CHECK(apply_D(mono({0, 1})) == mono({1, 1}) + mono({0, 2}));
    CHECK(apply_D(DiffPoly(Rational(5))).is_zero());
}

TEST_CASE("apply_D_raises_degree_by_one")
{
    std::mt19937 rng(11);
    for (int d = 1; d <= 10; ++d) {
        const DiffPoly f = oracle::random_poly(rng, d, 4);
        const DiffPoly df = apply_D(f);
        CHECK(df.is_homogeneous());
        if (!df.is_zero()) {
            CHECK(df.terms().begin()->first.degree() == d + 1);
        }
    }
}

TEST_CASE("normal_form_examples")
{
    CHECK(normal_form(mono({1})).is_zero());
    CHECK(normal_form(mono({0, 2})).poly() == mono({1, 1}, -1));
    CHECK(normal_form(mono({0, 0, 0})).poly() == mono({0, 0, 0}));
}

TEST_CASE("normal_form_kills_image_of_D")
{
    std::mt19937 rng(12);
    for (int d = 1; d <= 12; ++d) {
        for (int trial = 0; trial < 4; ++trial) {
            CHECK(normal_form(apply_D(oracle::random_poly(rng, d, 5))).is_zero());
        }
    }
}

TEST_CASE("normal_form_is_a_linear_projection")
{
    std::mt19937 rng(13);
    for (int d = 1; d <= 12; ++d) {
        const DiffPoly f = oracle::random_poly(rng, d, 6);
        const DiffPoly g = oracle::random_poly(rng, d, 6);
        const NormalForm nf = normal_form(f);
        CHECK(normal_form(nf.poly()) == nf);
        for (const auto &[m, c] : nf.poly().terms()) {
            CHECK(m.is_basis());
        }
        CHECK(normal_form(f + g * make_rational(3, 2)).poly()
              == nf.poly() + normal_form(g).poly() * make_rational(3, 2));
    }
}

TEST_CASE("normal_form_differs_by_a_total_derivative")
{
    std::mt19937 rng(14);
    for (int d = 2; d <= 8; ++d) {
        const DiffPoly f = oracle::random_poly(rng, d, 5);
        CHECK(in_image_of_D(f - normal_form(f).poly(), d));
    }
}

TEST_CASE("basis_has_expected_dimension")
{
    // D kills constants, so the count is p(d) - p(d-1) only from degree 2 on.
    CHECK(basis_monomials(0).size() == 1);
    CHECK(basis_monomials(1).size() == 1);
    for (int d = 2; d <= 14; ++d) {
        CHECK(static_cast<long>(basis_monomials(d).size()) == partitions(d) - partitions(d - 1));
    }
}

TEST_CASE("vertex_examples")
{
    CHECK(vertex(-1).poly() == mono({0}));
    CHECK(vertex(0).poly() == mono({0, 0}, make_rational(1, 2)));
    CHECK(vertex(1).poly() == mono({0, 0, 0}, make_rational(1, 6)));
    CHECK(vertex(2).poly() == mono({0, 0, 0, 0}, make_rational(1, 24)) - mono({1, 1}, make_rational(1, 24)));
    CHECK_THROWS_AS(vertex(-2), std::domain_error);
}

TEST_CASE("vertex_is_homogeneous_with_even_derivative_counts")
{
    for (int k = -1; k <= 10; ++k) {
        const NormalForm v = vertex(k);
        CHECK(v.poly().is_homogeneous());
        CHECK(v.poly().coefficient(JetMonomial::power_of_alpha(k + 2)) == 1 / factorial(k + 2));
        for (const auto &[m, c] : v.poly().terms()) {
            CHECK(m.degree() == k + 2);
            CHECK(m.derivative_count() % 2 == 0);
        }
    }
}

TEST_CASE("apply_E_examples")
{
    CHECK(apply_E(mono({0})).is_zero());
    CHECK(apply_E(vertex(0).poly()).is_zero());
    CHECK(apply_E(DiffPoly(Rational(1))).is_zero());
    CHECK(apply_E_raw(mono({0})) == mono({0, 1}));
}

TEST_CASE("apply_E_raises_degree_by_two")
{
    std::mt19937 rng(15);
    for (int d = 1; d <= 8; ++d) {
        const DiffPoly e = apply_E_raw(oracle::random_poly(rng, d, 4));
        for (const auto &[m, c] : e.terms()) {
            CHECK(m.degree() == d + 2);
        }
    }
}

TEST_CASE("apply_E_is_well_defined_on_the_quotient")
{
    std::mt19937 rng(16);
    for (int d = 1; d <= 10; ++d) {
        const DiffPoly f = oracle::random_poly(rng, d, 4);
        const DiffPoly g = oracle::random_poly(rng, d - 1 > 0 ? d - 1 : 1, 3);
        const DiffPoly dg = apply_D(g);
        if (d >= 2) {
            CHECK(apply_E(f + dg) == apply_E(f));
        }
        CHECK(apply_E(apply_D(f)).is_zero());
    }
}

TEST_CASE("vertices_are_annihilated_by_E")
{
    for (int k = -1; k <= 10; ++k) {
        CHECK(apply_E(vertex(k).poly()).is_zero());
    }
}

TEST_CASE("kernel_dimension_examples")
{
    const KernelResult k1 = kernel_dimension(1);
    CHECK(k1.dimension == 1);
    CHECK(proportional(k1.basis[0].poly(), mono({0})));
    const KernelResult k2 = kernel_dimension(2);
    CHECK(k2.dimension == 1);
    CHECK(proportional(k2.basis[0].poly(), mono({0, 0})));
    const KernelResult k4 = kernel_dimension(4);
    CHECK(k4.dimension == 1);
    CHECK(proportional(k4.basis[0].poly(), mono({0, 0, 0, 0}) - mono({1, 1})));
    CHECK_THROWS_AS(kernel_dimension(0), std::domain_error);
}

TEST_CASE("kernel_is_spanned_by_the_vertex")
{
    for (int d = 1; d <= 12; ++d) {
        const KernelResult kr = kernel_dimension(d);
        CHECK(kr.dimension == 1);
        REQUIRE(kr.basis.size() == 1);
        CHECK(proportional(kr.basis[0].poly(), vertex(d - 2).poly()));
    }
}

TEST_CASE("genus_split_examples")
{
    const auto s2 = genus_split(vertex(2));
    REQUIRE(s2.size() == 2);
    CHECK(s2.at(0).poly() == mono({0, 0, 0, 0}, make_rational(1, 24)));
    CHECK(s2.at(1).poly() == mono({1, 1}, make_rational(-1, 24)));
    const auto s0 = genus_split(vertex(0));
    REQUIRE(s0.size() == 1);
    CHECK(s0.at(0).poly() == mono({0, 0}, make_rational(1, 2)));
    CHECK(genus_split(NormalForm{}).empty());
    CHECK_THROWS_AS(genus_split(normal_form(mono({0, 1, 1, 1}))), std::logic_error);
}

TEST_CASE("genus_split_reassembles_vertices")
{
    for (int k = -1; k <= 10; ++k) {
        const NormalForm v = vertex(k);
        DiffPoly sum;
        for (const auto &[g, part] : genus_split(v)) {
            for (const auto &[m, c] : part.poly().terms()) {
                CHECK(m.derivative_count() == 2 * g);
            }
            sum += part.poly();
        }
        CHECK(sum == v.poly());
    }
}
