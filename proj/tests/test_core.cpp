#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "resolvekit/construct.hpp"
#include "resolvekit/core.hpp"

using namespace resolvekit;

namespace {

Certificate single_triple_m5() {
    return Certificate(5, 3, std::vector<std::vector<int>>{{1, 2, 3}});
}

}  // namespace

TEST_CASE("binomial small values") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(13, 3) == 286);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(3, 4) == 0);
}

TEST_CASE("k-subset enumeration is lexicographic and complete") {
    auto subs = enumerate_ksubsets(5, 3);
    REQUIRE(subs.size() == 10);
    CHECK(subs.front().members == std::vector<int>{1, 2, 3});
    CHECK(subs[1].members == std::vector<int>{1, 2, 4});
    CHECK(subs.back().members == std::vector<int>{3, 4, 5});
    for (std::size_t i = 1; i < subs.size(); ++i) CHECK(subs[i - 1].members < subs[i].members);
    CHECK(enumerate_ksubset_masks(5, 3).size() == 10);
}

TEST_CASE("certificate validation rejects malformed input") {
    // Members are canonicalized to sorted order.
    CHECK(Certificate(5, 3, std::vector<std::vector<int>>{{1, 3, 2}}).sets[0].members ==
          std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(Certificate(5, 3, std::vector<std::vector<int>>{{1, 2, 6}}),
                    invalid_parameters);
    CHECK_THROWS_AS(Certificate(5, 3, std::vector<std::vector<int>>{{1, 2}}),
                    invalid_parameters);
    CHECK_THROWS_AS(
        Certificate(5, 3, std::vector<std::vector<int>>{{1, 2, 3}, {1, 2, 3}}),
        invalid_parameters);
}

TEST_CASE("incidence matrix row-weight classes of the stored 13-point family") {
    auto cert = example1_certificate();
    auto mat = incidence_matrix(cert);
    std::vector<int> d1, d2, d3;
    for (int row = 1; row <= 13; ++row) {
        int w = mat.row_weight(row);
        if (w == 1) d1.push_back(row);
        if (w == 2) d2.push_back(row);
        if (w == 3) d3.push_back(row);
    }
    CHECK(d1 == std::vector<int>{3, 4, 8, 9, 11});
    CHECK(d2 == std::vector<int>{1, 2, 6, 7, 10});
    CHECK(d3 == std::vector<int>{5, 12, 13});
}

TEST_CASE("incidence matrix of a single subset") {
    auto mat = incidence_matrix(single_triple_m5());
    for (int row = 1; row <= 3; ++row) CHECK(mat.row_weight(row) == 1);
    for (int row = 4; row <= 5; ++row) CHECK(mat.row_weight(row) == 0);
}

TEST_CASE("column sums are constantly k") {
    for (const auto& cert : {example1_certificate(), corollary2_certificate()}) {
        auto mat = incidence_matrix(cert);
        for (int col = 1; col <= mat.cols; ++col) {
            int sum = 0;
            for (int row = 1; row <= mat.m; ++row) sum += mat.at(row, col);
            CHECK(sum == cert.k);
        }
    }
}

TEST_CASE("signature basics") {
    auto cert = example1_certificate();
    for (int s = 0; s < cert.size(); ++s) {
        auto sig = signature(cert, cert.sets[s].members);
        CHECK(sig[s] == cert.k);  // a set against itself
    }
    auto zero = signature(cert, std::vector<int>{});
    CHECK(zero == std::vector<int>(cert.size(), 0));
    auto sig = signature(cert, std::vector<int>{5, 12, 13});
    CHECK(std::accumulate(sig.begin(), sig.end(), 0) == 9);
    CHECK_THROWS_AS(signature(cert, std::vector<int>{14}), invalid_parameters);
    CHECK_THROWS_AS(signature(cert, std::vector<int>{0}), invalid_parameters);
}

TEST_CASE("signature equals the row sum of the incidence matrix") {
    std::mt19937_64 rng(7);
    for (int m = 4; m <= 8; ++m) {
        auto all = enumerate_ksubsets(m, 3);
        std::vector<std::vector<int>> pick;
        for (int i = 0; i < 3; ++i)
            pick.push_back(all[rng() % all.size()].members);
        std::sort(pick.begin(), pick.end());
        pick.erase(std::unique(pick.begin(), pick.end()), pick.end());
        Certificate cert(m, 3, pick);
        auto mat = incidence_matrix(cert);
        for (int size = 1; size <= 3; ++size)
            for (const auto& omega : enumerate_ksubsets(m, size)) {
                std::vector<int> expect(cert.size(), 0);
                for (int p : omega.members)
                    for (int col = 1; col <= mat.cols; ++col)
                        expect[col - 1] += mat.at(p, col);
                CHECK(signature(cert, omega.members) == expect);
            }
    }
}

TEST_CASE("weight profile identities") {
    auto cert = example1_certificate();
    auto prof = weight_profile(incidence_matrix(cert));
    REQUIRE(prof.d.size() >= 4);
    CHECK(prof.d[0] == 0);
    CHECK(prof.d[1] == 5);
    CHECK(prof.d[2] == 5);
    CHECK(prof.d[3] == 3);
    for (std::size_t x = 4; x < prof.d.size(); ++x) CHECK(prof.d[x] == 0);

    auto single = weight_profile(incidence_matrix(single_triple_m5()));
    CHECK(single.d[0] == 2);
    CHECK(single.d[1] == 3);

    // Sum identities on assorted certificates.
    for (const auto& c : {example1_certificate(), corollary2_certificate(),
                          q2_certificate(), single_triple_m5()}) {
        auto p = weight_profile(incidence_matrix(c));
        long long total = 0, weighted = 0;
        for (std::size_t x = 0; x < p.d.size(); ++x) {
            total += p.d[x];
            weighted += static_cast<long long>(x) * p.d[x];
        }
        CHECK(total == c.m);
        CHECK(weighted == static_cast<long long>(c.k) * c.size());
    }
}

TEST_CASE("mask operations match member lists") {
    auto cert = example1_certificate();
    auto masks = cert.masks();
    REQUIRE(static_cast<int>(masks.size()) == cert.size());
    for (int i = 0; i < cert.size(); ++i) {
        CHECK(masks[i].count() == cert.k);
        for (int p = 1; p <= cert.m; ++p) {
            bool in = std::binary_search(cert.sets[i].members.begin(),
                                         cert.sets[i].members.end(), p);
            CHECK(masks[i].test(p) == in);
        }
    }
    // High-word coverage: points above 64.
    Mask hi;
    hi.set(100);
    hi.set(3);
    CHECK(hi.count() == 2);
    CHECK(hi.test(100));
    CHECK(!hi.test(99));
    Mask other;
    other.set(100);
    CHECK(hi.intersect_count(other) == 1);
}
