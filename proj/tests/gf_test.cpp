#include <doctest.h>

#include <vector>

#include "wprm/gf.hpp"

using wprm::fe;
using wprm::field;

namespace {

// Independent polynomial arithmetic over F_p[x]/(mod): multiply two encoded
// elements coefficient-wise and reduce by long division.
fe slow_mul(const field& F, fe a, fe b) {
    const int p = F.p(), k = F.k();
    std::vector<int> A = F.coeffs(a), B = F.coeffs(b), prod(2 * k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + A[i] * B[j]) % p;
    const std::vector<int>& mod = F.modulus();
    for (int i = 2 * k - 1; i >= k; --i) {
        int c = prod[i];
        if (c == 0) continue;
        for (int j = 0; j <= k; ++j)
            prod[i - k + j] = ((prod[i - k + j] - c * mod[j]) % p + p) % p;
    }
    fe enc = 0;
    for (int i = k - 1; i >= 0; --i) enc = enc * p + prod[i];
    return enc;
}

} // namespace

TEST_CASE("prime field is integers mod p") {
    field F(5, 1);
    CHECK(F.q() == 5);
    for (fe a = 0; a < 5; ++a)
        for (fe b = 0; b < 5; ++b) {
            CHECK(F.add(a, b) == (a + b) % 5);
            CHECK(F.mul(a, b) == (a * b) % 5);
        }
    CHECK(F.spec_string() == "5^1:5");
}

TEST_CASE("F_4 has the unique irreducible quadratic modulus") {
    field F(2, 2);
    // x^2 + x + 1, little-endian (1,1,1), encoding 7
    CHECK(F.modulus() == std::vector<int>{1, 1, 1});
    CHECK(F.spec_string() == "2^2:7");
    CHECK(F.primitive_element() == 2); // class of x
}

TEST_CASE("F_16 modulus is the smallest-encoding primitive quartic") {
    field F(2, 4);
    // Exhaustive oracle: scan all 16 monic quartics in encoding order and
    // find the first under which the class of x has order exactly 15.
    int best_enc = -1;
    for (int enc = 0; enc < 16 && best_enc < 0; ++enc) {
        std::vector<int> mod(5, 0);
        mod[4] = 1;
        for (int i = 0, e = enc; i < 4; ++i, e /= 2) mod[i] = e % 2;
        // multiply-by-x map on length-4 coefficient vectors
        auto mulx = [&](std::vector<int> v) {
            int carry = v[3];
            for (int i = 3; i > 0; --i) v[i] = v[i - 1];
            v[0] = 0;
            if (carry)
                for (int i = 0; i < 4; ++i) v[i] ^= mod[i];
            return v;
        };
        std::vector<int> cur{1, 0, 0, 0};
        int order = 0;
        for (int s = 1; s <= 15; ++s) {
            cur = mulx(cur);
            if (cur == std::vector<int>{1, 0, 0, 0}) {
                order = s;
                break;
            }
            if (cur == std::vector<int>{0, 0, 0, 0}) break; // reducible with factor x
        }
        if (order == 15) best_enc = enc;
    }
    REQUIRE(best_enc >= 0);
    std::vector<int> expect(5, 0);
    expect[4] = 1;
    for (int i = 0, e = best_enc; i < 4; ++i, e /= 2) expect[i] = e % 2;
    CHECK(F.modulus() == expect);
    CHECK(F.spec_string() == "2^4:19"); // x^4 + x + 1
}

TEST_CASE("table arithmetic matches polynomial arithmetic") {
    for (auto [p, k] : {std::pair{2, 3}, {3, 2}, {2, 4}, {5, 2}, {7, 1}}) {
        field F(p, k);
        for (fe a = 0; a < F.q(); ++a)
            for (fe b = 0; b < F.q(); ++b) CHECK(F.mul(a, b) == slow_mul(F, a, b));
    }
}

TEST_CASE("field axioms and inverses") {
    for (auto [p, k] : {std::pair{2, 2}, {3, 1}, {2, 4}, {3, 3}}) {
        field F(p, k);
        const int q = F.q();
        for (fe a = 0; a < q; ++a) {
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
            for (fe b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (fe c = 0; c < q; ++c) {
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                    CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
                }
            }
        }
    }
}

TEST_CASE("pow conventions") {
    field F(2, 2);
    CHECK(F.pow(0, 0) == 1);
    CHECK(F.pow(0, 5) == 0);
    for (fe a = 1; a < F.q(); ++a) {
        CHECK(F.pow(a, F.q() - 1) == 1);
        CHECK(F.pow(a, 0) == 1);
        // exponents reduce mod q-1 on nonzero elements
        CHECK(F.pow(a, 7) == F.pow(a, 7 % (F.q() - 1)));
    }
}

TEST_CASE("primitive element has exact order q-1") {
    for (auto [p, k] : {std::pair{2, 1}, {2, 4}, {3, 2}, {5, 1}, {13, 1}}) {
        field F(p, k);
        const fe g = F.primitive_element();
        fe cur = 1;
        for (int s = 1; s < F.q() - 1; ++s) {
            cur = F.mul(cur, g);
            CHECK(cur != 1);
        }
        CHECK(F.mul(cur, g) == 1);
    }
}

TEST_CASE("constructor rejects bad parameters") {
    CHECK_THROWS_WITH_AS(field(4, 1), doctest::Contains("not prime"), wprm::error);
    CHECK_THROWS_AS(field(2, 7), wprm::error);  // 128 > 64 cap
    CHECK_THROWS_AS(field(67, 1), wprm::error); // 67 > 64 cap
    CHECK_NOTHROW(field(2, 6));                 // 64 is allowed
}
