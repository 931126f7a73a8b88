#include <random>
#include <set>

#include "doctest.h"
#include "stablerep/errors.hpp"
#include "stablerep/stable_ring.hpp"

using namespace stablerep;

namespace {

StableElement random_element(std::mt19937& rng, int p, bool height_zero = false) {
    StableElement e(p);
    const int terms = 1 + static_cast<int>(rng() % 3);
    std::uniform_int_distribution<int> coeff_dist(-9, 9);
    for (int t = 0; t < terms; ++t) {
        e.add_term(static_cast<int>(rng() % (p - 1)),
                   height_zero ? 0 : static_cast<int>(rng() % (p - 1)), BigInt(coeff_dist(rng)));
    }
    return e;
}

} // namespace

TEST_CASE("clebsch-gordan products") {
    for (int p : {5, 7, 11}) {
        // U_1 U_j = U_{j-1} + U_{j+1} in the interior range
        for (int j = 1; j <= p - 3; ++j) {
            StableElement expect(p);
            expect.add_term(j - 1, 0, BigInt(1));
            expect.add_term(j + 1, 0, BigInt(1));
            CHECK(cg_multiply(StableElement::basis(p, 1, 0), StableElement::basis(p, j, 0)) ==
                  expect);
        }
        // U_{p-2}^2 = U_0
        CHECK(cg_multiply(StableElement::basis(p, p - 2, 0), StableElement::basis(p, p - 2, 0)) ==
              StableElement::one(p));
        // U_l U_{p-2} = U_{p-2-l}
        for (int l = 0; l <= p - 2; ++l) {
            CHECK(cg_multiply(StableElement::basis(p, l, 0), StableElement::basis(p, p - 2, 0)) ==
                  StableElement::basis(p, p - 2 - l, 0));
        }
    }

    // the worked p = 7 tensor product with heights
    StableElement expect(7);
    expect.add_term(5, 3, BigInt(1));
    expect.add_term(3, 3, BigInt(1));
    expect.add_term(1, 3, BigInt(1));
    CHECK(cg_multiply(StableElement::basis(7, 2, 2), StableElement::basis(7, 3, 1)) == expect);

    CHECK_THROWS_AS(cg_multiply(StableElement::one(5), StableElement::one(7)), domain_error);
}

TEST_CASE("ring axioms, randomized") {
    std::mt19937 rng(808);
    for (int p : {5, 7, 13}) {
        for (int iter = 0; iter < 400; ++iter) {
            StableElement a = random_element(rng, p);
            StableElement b = random_element(rng, p);
            StableElement c = random_element(rng, p);
            CHECK(cg_multiply(a, b) == cg_multiply(b, a));
            CHECK(cg_multiply(cg_multiply(a, b), c) == cg_multiply(a, cg_multiply(b, c)));
            CHECK(cg_multiply(a, b + c) == cg_multiply(a, b) + cg_multiply(a, c));
            CHECK(cg_multiply(a, StableElement::one(p)) == a);
        }
    }
}

TEST_CASE("heller shifts") {
    const int p = 7;
    StableElement u2 = StableElement::basis(p, 2, 0);
    CHECK(heller(u2, 0) == u2);
    CHECK(heller(StableElement::basis(p, 2, 5), 1) == StableElement::basis(p, 2, 0));
    std::mt19937 rng(3);
    for (int iter = 0; iter < 100; ++iter) {
        StableElement a = random_element(rng, p);
        CHECK(heller(heller(a, 1), p - 2) == a);
        CHECK(heller(a, p - 1) == a);
        CHECK(heller(a, -1) == heller(a, p - 2));
        // multiplication by the syzygy class is the shift
        CHECK(cg_multiply(a, StableElement::basis(p, 0, 1)) == heller(a, 1));
    }
}

TEST_CASE("duality and endotriviality") {
    for (int p : {5, 7, 11}) {
        CHECK(is_endotrivial(StableElement::basis(p, p - 2, 0)));
        CHECK(is_endotrivial(StableElement::basis(p, 0, 1)));
        CHECK(is_endotrivial(StableElement::basis(p, 0, 0)));
        CHECK(is_endotrivial(StableElement::basis(p, p - 2, 3)));
    }
    CHECK(!is_endotrivial(StableElement::basis(7, 2, 0)));
    CHECK(!is_endotrivial(StableElement::basis(7, 4, 2)));
    CHECK_THROWS_AS(is_endotrivial(StableElement::one(7) + StableElement::basis(7, 1, 0)),
                    domain_error);

    std::mt19937 rng(9);
    for (int iter = 0; iter < 100; ++iter) {
        StableElement a = random_element(rng, 11);
        CHECK(dual(dual(a)) == a);
    }
}

TEST_CASE("theta") {
    for (int p : {5, 7, 13}) {
        // the kernel generator
        StableElement ker = StableElement::one(p) + StableElement::basis(p, p - 2, 0);
        CHECK(theta(ker).is_zero());
        CHECK(theta(StableElement::one(p)) == CycInt::from_integer(p, BigInt(1)));
        for (int l = 0; l <= p - 2; ++l) {
            CHECK(theta(StableElement::basis(p, l, 0)) == g_unit(p, l + 1));
        }
    }
    CHECK_THROWS_AS(theta(StableElement::basis(7, 1, 2)), domain_error);

    // homomorphism property on random height-zero pairs
    std::mt19937 rng(606);
    for (int p : {5, 7, 11}) {
        for (int iter = 0; iter < 1000; ++iter) {
            StableElement a = random_element(rng, p, true);
            StableElement b = random_element(rng, p, true);
            CHECK(theta(cg_multiply(a, b)) == theta(a) * theta(b));
            CHECK(theta(a + b) == theta(a) + theta(b));
        }
    }
}

TEST_CASE("theta inversion by parity") {
    for (int p : {5, 7, 11, 13}) {
        for (int l = 0; l <= p - 2; ++l) {
            CHECK(theta_invert_parity(g_unit(p, l + 1), l % 2) == StableElement::basis(p, l, 0));
        }
        CHECK(theta_invert_parity(CycInt(p), 0).is_zero());
        CHECK(theta_invert_parity(CycInt(p), 1).is_zero());
    }
    // -1 on the odd slice is U_5 at p = 7
    CHECK(theta_invert_parity(CycInt::from_integer(7, BigInt(-1)), 1) ==
          StableElement::basis(7, 5, 0));

    // round trips
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coeff_dist(-20, 20);
    for (int p : {5, 7, 11}) {
        for (int iter = 0; iter < 200; ++iter) {
            RealCycCoords v;
            v.p = p;
            for (int i = 0; i < (p - 1) / 2; ++i) v.coords.push_back(BigInt(coeff_dist(rng)));
            CycInt x = from_real_coords(v);
            for (int parity : {0, 1}) {
                StableElement e = theta_invert_parity(x, parity);
                CHECK(theta(e) == x);
                for (const auto& [key, c] : e.terms()) CHECK(key.second % 2 == parity);
            }
            // parity-pure elements invert back to themselves
            StableElement pure(p);
            const int parity = static_cast<int>(rng() % 2);
            for (int l = parity; l <= p - 2; l += 2) pure.add_term(l, 0, BigInt(coeff_dist(rng)));
            CHECK(theta_invert_parity(theta(pure), parity) == pure);
        }
    }
}

TEST_CASE("presentation isomorphism") {
    for (int p : {5, 7, 13}) {
        CHECK(psi_to_presentation(StableElement::one(p)) == PresentationPoly::one(p));
        CHECK(psi_to_presentation(StableElement::basis(p, 0, 1)) == PresentationPoly::x_power(p, 1));
        CHECK(psi_to_presentation(StableElement::basis(p, p - 2, 0)) == PresentationPoly::y(p));

        // X^{p-1} = 1 and Y^2 = 1 inside the presentation
        PresentationPoly x = PresentationPoly::x_power(p, 1);
        PresentationPoly xp = PresentationPoly::one(p);
        for (int i = 0; i < p - 1; ++i) xp = xp * x;
        CHECK(xp == PresentationPoly::one(p));
        CHECK(PresentationPoly::y(p) * PresentationPoly::y(p) == PresentationPoly::one(p));

        std::mt19937 rng(1000 + p);
        for (int iter = 0; iter < 1000; ++iter) {
            StableElement a = random_element(rng, p);
            StableElement b = random_element(rng, p);
            CHECK(psi_from_presentation(psi_to_presentation(a)) == a);
            // multiplicativity: the presentation product matches the ring product
            CHECK(psi_to_presentation(cg_multiply(a, b)) ==
                  psi_to_presentation(a) * psi_to_presentation(b));
        }
    }
}

TEST_CASE("height and position tables") {
    HeightPositionTables t = height_position_tables(7);
    CHECK(t.cells[0][0][0] == BasisIndex{0, 0});    // k
    CHECK(t.cells[1][0][2] == BasisIndex{1, 0});    // E
    CHECK(t.cells[0][3][1] == BasisIndex{2, 3});
    CHECK(t.cells[1][5][0] == BasisIndex{5, 5});

    for (int p : {5, 7, 11}) {
        HeightPositionTables tabs = height_position_tables(p);
        std::set<std::pair<int, int>> seen;
        long long cells = 0;
        for (int table = 0; table < 2; ++table) {
            for (const auto& row : tabs.cells[table]) {
                for (const BasisIndex& cell : row) {
                    seen.insert({cell.l, cell.m});
                    ++cells;
                }
            }
            CHECK(static_cast<long long>(tabs.cells[table].size() * tabs.cells[table][0].size()) ==
                  static_cast<long long>(p - 1) * (p - 1) / 2);
        }
        CHECK(cells == static_cast<long long>(p - 1) * (p - 1));
        CHECK(seen.size() == static_cast<size_t>((p - 1) * (p - 1))); // each symbol once

        // products respect height addition and the table XOR rule
        for (int l1 = 0; l1 <= p - 2; ++l1) {
            for (int l2 = 0; l2 <= p - 2; ++l2) {
                for (int m1 : {0, 1, p - 2}) {
                    for (int m2 : {0, 2}) {
                        StableElement prod = cg_multiply(StableElement::basis(p, l1, m1),
                                                         StableElement::basis(p, l2, m2));
                        for (const auto& [key, c] : prod.terms()) {
                            CHECK(key.first == (m1 + m2) % (p - 1));
                            const int expected_table = table_of(l1) == table_of(l2) ? 0 : 1;
                            CHECK(table_of(key.second) == expected_table);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("basis labels") {
    CHECK(render_basis_label(0, 0) == "k");
    CHECK(render_basis_label(1, 0) == "E");
    CHECK(render_basis_label(2, 0) == "Sym^2 E");
    CHECK(render_basis_label(0, 1) == "\xCE\xA9 k");
    CHECK(render_basis_label(0, 5) == "\xCE\xA9^5 k");
    CHECK(render_basis_label(1, 4) == "\xCE\xA9^4 E");
    CHECK(render_basis_label(2, 1) == "\xCE\xA9(Sym^2 E)");
    CHECK(render_basis_label(5, 3) == "\xCE\xA9^3(Sym^5 E)");

    for (int l = 0; l <= 5; ++l) {
        for (int m = 0; m <= 5; ++m) {
            BasisIndex idx = parse_basis_label(render_basis_label(l, m), 7);
            CHECK(idx == BasisIndex{l, m});
        }
    }
    CHECK_THROWS_AS(parse_basis_label("Sym^9 E", 7), domain_error);
    CHECK_THROWS_AS(parse_basis_label("nonsense", 7), domain_error);
}
