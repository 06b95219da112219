#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "wz/errors.hpp"
#include "wz/ff.hpp"

using namespace wz;

namespace {

FqElem elem(const FqField& f, std::initializer_list<uint32_t> cs) {
    FqElem e = f.zero();
    size_t i = 0;
    for (uint32_t c : cs) e.coords[i++] = c;
    return e;
}

// Independent oracle for the pinned modulus: enumerate monic degree-a
// candidates in lex coefficient order and return the first with no root /
// no small factor, testing irreducibility by brute-force root search for
// degree 2 and 3 (enough for the fields exercised here).
std::vector<uint32_t> least_irreducible_bruteforce(uint32_t p, uint32_t a) {
    REQUIRE(a >= 2);
    REQUIRE(a <= 3);
    std::vector<uint32_t> c(a, 0);
    for (;;) {
        // f = c0 + c1 x + ... + x^a; for a <= 3 irreducible iff no root in F_p
        bool has_root = false;
        for (uint32_t x = 0; x < p && !has_root; ++x) {
            uint64_t v = 1;
            for (uint32_t i = 0; i < a; ++i) v = v * x % p;
            for (uint32_t i = 0; i < a; ++i) {
                uint64_t xi = 1;
                for (uint32_t k = 0; k < i; ++k) xi = xi * x % p;
                v = (v + static_cast<uint64_t>(c[i]) * xi) % p;
            }
            has_root = v == 0;
        }
        if (!has_root) return c;
        int i = static_cast<int>(a) - 1;
        while (i >= 0) {
            if (++c[i] < p) break;
            c[i] = 0;
            --i;
        }
        REQUIRE(i >= 0);
    }
}

}  // namespace

TEST_CASE("field construction pins the least modulus") {
    FqField f2 = FqField::make(2, 1);
    CHECK(f2.modulus() == std::vector<uint32_t>{0});  // modulus x
    CHECK(f2.q() == BigInt(2));

    FqField f4 = FqField::make(2, 2);
    CHECK(f4.modulus() == std::vector<uint32_t>{1, 1});  // x^2 + x + 1
    CHECK(f4.q() == BigInt(4));

    // derived via the brute-force oracle
    FqField f9 = FqField::make(3, 2);
    CHECK(f9.modulus() == least_irreducible_bruteforce(3, 2));
    FqField f8 = FqField::make(2, 3);
    CHECK(f8.modulus() == least_irreducible_bruteforce(2, 3));
    FqField f25 = FqField::make(5, 2);
    CHECK(f25.modulus() == least_irreducible_bruteforce(5, 2));

    // determinism
    CHECK(FqField::make(3, 2).modulus() == f9.modulus());

    CHECK_THROWS_AS(FqField::make(4, 1), NotPrime);
    CHECK_THROWS_AS(FqField::make(2, 17), DegreeOutOfRange);
}

TEST_CASE("arithmetic in F_4, F_5, F_9") {
    FqField f4 = FqField::make(2, 2);
    FqElem g = f4.generator();
    CHECK(f4.mul(g, g) == elem(f4, {1, 1}));  // g^2 = g + 1

    FqField f5 = FqField::make(5, 1);
    CHECK(f5.inv(elem(f5, {2})) == elem(f5, {3}));
    CHECK_THROWS_AS(f5.inv(f5.zero()), DivisionByZero);

    FqField f9 = FqField::make(3, 2);
    CHECK(f9.pow(f9.generator(), 8) == f9.one());

    CHECK_THROWS_AS(f5.add(f5.one(), f4.one()), FieldMismatch);
}

TEST_CASE("frobenius") {
    FqField f4 = FqField::make(2, 2);
    FqElem g = f4.generator();
    CHECK(f4.frobenius(g, 1) == elem(f4, {1, 1}));
    CHECK(f4.frobenius(g, 2) == g);
    FqField f3 = FqField::make(3, 1);
    CHECK(f3.frobenius(elem(f3, {2}), 1) == elem(f3, {2}));
}

TEST_CASE("frobenius is a ring homomorphism (exhaustive q <= 25)") {
    for (auto [p, a] : {std::pair<uint32_t, uint32_t>{2, 2},
                        {3, 2},
                        {2, 3},
                        {5, 2},
                        {2, 4},
                        {3, 1}}) {
        FqField f = FqField::make(p, a);
        std::vector<FqElem> all;
        f.enumerate([&](const FqElem& e) { all.push_back(e); });
        for (const auto& x : all)
            for (const auto& y : all) {
                CHECK(f.frobenius(f.add(x, y), 1) ==
                      f.add(f.frobenius(x, 1), f.frobenius(y, 1)));
                CHECK(f.frobenius(f.mul(x, y), 1) ==
                      f.mul(f.frobenius(x, 1), f.frobenius(y, 1)));
            }
    }
}

TEST_CASE("enumeration is complete, distinct, pinned") {
    FqField f2 = FqField::make(2, 1);
    std::vector<FqElem> e2;
    f2.enumerate([&](const FqElem& e) { e2.push_back(e); });
    REQUIRE(e2.size() == 2);
    CHECK(e2[0] == f2.zero());
    CHECK(e2[1] == f2.one());

    FqField f4 = FqField::make(2, 2);
    std::vector<FqElem> e4;
    f4.enumerate([&](const FqElem& e) { e4.push_back(e); });
    REQUIRE(e4.size() == 4);
    CHECK(e4.front() == f4.zero());
    CHECK(e4.back() == elem(f4, {1, 1}));  // g + 1 last

    FqField f9 = FqField::make(3, 2);
    std::set<std::vector<uint32_t>> seen;
    f9.enumerate([&](const FqElem& e) { seen.insert(e.coords); });
    CHECK(seen.size() == 9);

    // element_at matches enumeration order
    for (uint64_t i = 0; i < 9; ++i)
        CHECK(f9.element_index(f9.element_at(i)) == i);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(11);
    for (auto [p, a] : {std::pair<uint32_t, uint32_t>{2, 3},
                        {3, 3},
                        {5, 2},
                        {7, 1}}) {
        FqField f = FqField::make(p, a);
        uint64_t n = f.order_u64();
        for (int i = 0; i < 200; ++i) {
            FqElem x = f.element_at(rng() % n);
            FqElem y = f.element_at(rng() % n);
            FqElem z = f.element_at(rng() % n);
            CHECK(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
            CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
            CHECK(f.add(x, y) == f.add(y, x));
            CHECK(f.mul(x, y) == f.mul(y, x));
            CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
            if (!x.is_zero()) CHECK(f.mul(x, f.inv(x)) == f.one());
        }
    }
}

TEST_CASE("mpoly evaluation") {
    IntMPoly f({"x", "y"});
    f.add_term({2, 0}, BigInt(1));
    f.add_term({0, 1}, BigInt(1));  // x^2 + y
    FqField f3 = FqField::make(3, 1);
    CHECK(mpoly_eval(f, {elem(f3, {1}), elem(f3, {2})}, f3) == f3.zero());

    IntMPoly h({"x"});
    h.add_term({1}, BigInt(7));  // 7x
    FqField f5 = FqField::make(5, 1);
    CHECK(mpoly_eval(h, {f5.one()}, f5) == elem(f5, {2}));

    IntMPoly gx({"g", "x"});
    gx.add_term({1, 1}, BigInt(1));  // g*x
    FqField f4 = FqField::make(2, 2);
    CHECK(mpoly_eval(gx, {f4.generator()}, f4) == elem(f4, {1, 1}));

    CHECK_THROWS_AS(mpoly_eval(f, {f3.one()}, f3), ArityMismatch);
    FqField f2 = FqField::make(2, 1);
    CHECK_THROWS_AS(mpoly_eval(gx, {f2.one()}, f2), UnboundVariable);
}

TEST_CASE("generator embedding into extensions") {
    FqField f4 = FqField::make(2, 2);
    FqField f16 = FqField::make(2, 4);
    FqElem r = f16.embed_generator(f4);
    // r satisfies the F_4 modulus x^2 + x + 1
    FqElem v = f16.add(f16.add(f16.mul(r, r), r), f16.one());
    CHECK(v.is_zero());
    CHECK(f16.embed_generator(f16) == f16.generator());
}
