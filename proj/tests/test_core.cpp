#include <doctest.h>

#include <random>

#include "kneser/core.hpp"
#include "oracles.hpp"

using namespace kneser;

namespace {

SignVector sv(int p, std::initializer_list<int> entries) {
    std::vector<std::uint8_t> e;
    for (int x : entries) e.push_back(static_cast<std::uint8_t>(x));
    return SignVector(p, std::move(e));
}

std::vector<std::vector<int>> as_lists(const std::vector<KSubset>& xs) {
    std::vector<std::vector<int>> out;
    for (const auto& x : xs) out.push_back(x.elements);
    return out;
}

}  // namespace

TEST_CASE("is_stable on the fixed examples") {
    CHECK(is_stable(KSubset(5, {1, 3}), StabilityVariant::cyclic(2)));
    CHECK_FALSE(is_stable(KSubset(5, {1, 5}), StabilityVariant::cyclic(2)));
    CHECK(is_stable(KSubset(5, {1, 5}), StabilityVariant::almost(2)));
    CHECK(is_stable(KSubset(21, {1, 6, 11, 16}), StabilityVariant::cyclic(5)));
    CHECK(is_stable(KSubset(4, {2}), StabilityVariant::cyclic(9)));  // singletons always pass
    CHECK(is_stable(KSubset(3, {1, 2, 3}), StabilityVariant::unrestricted()));
}

TEST_CASE("is_stable agrees with the pairwise oracle") {
    for (int n = 1; n <= 9; ++n) {
        for (int k = 1; k <= n; ++k) {
            for (int s = 1; s <= 4; ++s) {
                for (const auto& v : {StabilityVariant::almost(s), StabilityVariant::cyclic(s)}) {
                    for (const auto& elems : oracle::enumerate_stable(n, k, StabilityVariant::unrestricted())) {
                        CHECK(is_stable(KSubset(n, elems), v) ==
                              oracle::pairwise_stable(elems, n, v));
                    }
                }
            }
        }
    }
}

TEST_CASE("enumerate_stable produces the frozen colex listings") {
    auto almost = enumerate_stable(5, 2, StabilityVariant::almost(2));
    CHECK(as_lists(almost) == std::vector<std::vector<int>>{
                                  {1, 3}, {1, 4}, {2, 4}, {1, 5}, {2, 5}, {3, 5}});
    auto cyclic = enumerate_stable(5, 2, StabilityVariant::cyclic(2));
    CHECK(as_lists(cyclic) ==
          std::vector<std::vector<int>>{{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}});
    auto singles = enumerate_stable(4, 1, StabilityVariant::cyclic(3));
    CHECK(singles.size() == 4);
}

TEST_CASE("enumerate_stable matches the brute-force oracle in content and order") {
    for (int n = 1; n <= 10; ++n) {
        for (int k = 1; k <= std::min(n, 5); ++k) {
            for (int s = 1; s <= 4; ++s) {
                for (const auto& v : {StabilityVariant::almost(s), StabilityVariant::cyclic(s),
                                      StabilityVariant::unrestricted()}) {
                    CHECK(as_lists(enumerate_stable(n, k, v)) == oracle::enumerate_stable(n, k, v));
                }
            }
        }
    }
}

TEST_CASE("enumerate_stable rejects invalid shapes") {
    CHECK_THROWS_AS(enumerate_stable(0, 1, StabilityVariant::almost(1)), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_stable(4, 5, StabilityVariant::almost(1)), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_stable(4, 0, StabilityVariant::almost(1)), std::invalid_argument);
}

TEST_CASE("count_stable frozen values") {
    CHECK(count_stable(5, 2, StabilityVariant::almost(2)) == 6);
    CHECK(count_stable(5, 2, StabilityVariant::cyclic(2)) == 5);
    CHECK(count_stable(21, 4, StabilityVariant::cyclic(5)) == 21);
}

TEST_CASE("closed-form count matches enumeration for n<=14, k<=5, s<=5") {
    for (int n = 1; n <= 14; ++n) {
        for (int k = 1; k <= std::min(n, 5); ++k) {
            for (int s = 1; s <= 5; ++s) {
                for (const auto& v : {StabilityVariant::almost(s), StabilityVariant::cyclic(s)}) {
                    CAPTURE(n);
                    CAPTURE(k);
                    CAPTURE(s);
                    CHECK(count_stable(n, k, v) == enumerate_stable(n, k, v).size());
                }
            }
        }
    }
}

TEST_CASE("cyclic stability implies almost stability elementwise") {
    for (int n = 2; n <= 12; ++n) {
        for (int k = 1; k <= std::min(n, 4); ++k) {
            for (int s = 1; s <= 4; ++s) {
                auto cyc = enumerate_stable(n, k, StabilityVariant::cyclic(s));
                auto alm = enumerate_stable(n, k, StabilityVariant::almost(s));
                std::size_t j = 0;
                for (const auto& c : cyc) {
                    while (j < alm.size() && !(alm[j] == c)) ++j;
                    REQUIRE(j < alm.size());  // colex order makes this a merge
                }
            }
        }
    }
}

TEST_CASE("alt on the worked examples") {
    CHECK(alt(sv(5, {2, 3, 0, 3, 5, 0, 0, 2})) == 4);
    CHECK(alt(sv(5, {1, 4, 4, 4, 0, 0, 4})) == 2);
    CHECK(alt(SignVector::from_signs("+0--+0-")) == 4);
    CHECK(alt(SignVector::from_signs("--++-+0+-")) == 5);
    CHECK(alt(sv(3, {0, 0, 0})) == 0);
}

TEST_CASE("alt equals the longest-alternating-subsequence DP") {
    std::mt19937_64 rng(7);
    for (int p : {2, 3, 5}) {
        for (int iter = 0; iter < 2000; ++iter) {
            const int n = 1 + static_cast<int>(rng() % 12);
            std::vector<std::uint8_t> e(static_cast<std::size_t>(n));
            for (auto& x : e) x = static_cast<std::uint8_t>(rng() % (p + 1));
            CHECK(alt(SignVector(p, e)) == oracle::alt_dp(e));
        }
    }
}

TEST_CASE("subvector order basics") {
    CHECK(is_subvector(sv(3, {0, 1, 0}), sv(3, {2, 1, 0})));
    CHECK_FALSE(is_subvector(sv(3, {1, 0}), sv(3, {2, 1})));
    auto X = sv(3, {1, 0, 2});
    CHECK(is_subvector(X, X));
    CHECK_THROWS_AS(is_subvector(sv(2, {1}), sv(3, {1})), std::invalid_argument);
    CHECK_THROWS_AS(is_subvector(sv(3, {1}), sv(3, {1, 0})), std::invalid_argument);
}

TEST_CASE("omega_shift group action") {
    auto X = sv(3, {3, 0, 1});
    CHECK(omega_shift(X, 0) == X);
    CHECK(omega_shift(X, 1) == sv(3, {1, 0, 2}));
    for (int a = 0; a < 3; ++a) {
        CHECK(omega_shift(omega_shift(X, a), (3 - a) % 3) == X);
        CHECK(alt(omega_shift(X, a)) == alt(X));
    }
}

TEST_CASE("alt is monotone along the subvector order (exhaustive p=2,3, n<=6)") {
    for (int p : {2, 3}) {
        for (int n = 1; n <= 6; ++n) {
            const int base = 2 * p + 1;
            std::int64_t total = 1;
            for (int i = 0; i < n; ++i) total *= base;
            for (std::int64_t code = 0; code < total; ++code) {
                std::vector<std::uint8_t> ex(static_cast<std::size_t>(n));
                std::vector<std::uint8_t> ey(static_cast<std::size_t>(n));
                std::int64_t rest = code;
                for (int i = 0; i < n; ++i) {
                    const int d = static_cast<int>(rest % base);
                    rest /= base;
                    if (d == 0) {
                        ex[i] = ey[i] = 0;
                    } else if (d <= p) {
                        ex[i] = 0;
                        ey[i] = static_cast<std::uint8_t>(d);
                    } else {
                        ex[i] = ey[i] = static_cast<std::uint8_t>(d - p);
                    }
                }
                CHECK(alt(SignVector(p, ex)) <= alt(SignVector(p, ey)));
            }
        }
    }
}

TEST_CASE("alt monotonicity on random larger vectors") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 5000; ++iter) {
        const int p = (iter % 2) ? 2 : 3;
        const int n = 7 + static_cast<int>(rng() % 8);
        std::vector<std::uint8_t> ey(static_cast<std::size_t>(n));
        std::vector<std::uint8_t> ex(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            ey[i] = static_cast<std::uint8_t>(rng() % (p + 1));
            ex[i] = (rng() % 2) ? ey[i] : 0;
        }
        SignVector X(p, ex), Y(p, ey);
        REQUIRE(is_subvector(X, Y));
        CHECK(alt(X) <= alt(Y));
    }
}

TEST_CASE("pigeonhole: alt(X) > p(k-1) puts a stable k-subset inside one part") {
    for (int p : {2, 3}) {
        for (int k : {2, 3}) {
            for (int n = k; n <= 9; ++n) {
                auto stable = enumerate_stable_masks(n, k, StabilityVariant::almost(2));
                std::int64_t total = 1;
                for (int i = 0; i < n; ++i) total *= p + 1;
                for (std::int64_t code = 0; code < total; ++code) {
                    std::vector<std::uint8_t> e(static_cast<std::size_t>(n));
                    std::int64_t rest = code;
                    for (int i = 0; i < n; ++i) {
                        e[i] = static_cast<std::uint8_t>(rest % (p + 1));
                        rest /= p + 1;
                    }
                    SignVector X(p, e);
                    if (alt(X) < p * (k - 1) + 1) continue;
                    bool found = false;
                    for (int j = 1; j <= p && !found; ++j) {
                        const SetMask part = X.part(j);
                        for (SetMask vm : stable) {
                            if ((vm & ~part) == 0) {
                                found = true;
                                break;
                            }
                        }
                    }
                    CHECK(found);
                }
            }
        }
    }
}

TEST_CASE("signed variant: alt(X) >= 2k gives cyclic 2-stable subsets in both classes") {
    const int k = 2;
    for (int n = 2 * k; n <= 10; ++n) {
        auto stable = enumerate_stable_masks(n, k, StabilityVariant::cyclic(2));
        std::int64_t total = 1;
        for (int i = 0; i < n; ++i) total *= 3;
        for (std::int64_t code = 0; code < total; ++code) {
            std::vector<std::uint8_t> e(static_cast<std::size_t>(n));
            std::int64_t rest = code;
            for (int i = 0; i < n; ++i) {
                e[i] = static_cast<std::uint8_t>(rest % 3);
                rest /= 3;
            }
            SignVector X(2, e);
            if (alt(X) < 2 * k) continue;
            for (int j = 1; j <= 2; ++j) {
                const SetMask cls = X.part(j);
                bool found = false;
                for (SetMask vm : stable) {
                    if ((vm & ~cls) == 0) {
                        found = true;
                        break;
                    }
                }
                CHECK(found);
            }
        }
    }
}

TEST_CASE("KSubset validation") {
    CHECK_THROWS_AS(KSubset(5, {0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(KSubset(5, {3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(KSubset(5, {4, 2}), std::invalid_argument);
    CHECK_THROWS_AS(KSubset(5, {6}), std::invalid_argument);
    CHECK(KSubset::from_mask(5, 0b10101).elements == std::vector<int>{1, 3, 5});
}

TEST_CASE("sign vector parsing and display") {
    auto X = SignVector::from_signs("+0-");
    CHECK(X.entries == std::vector<std::uint8_t>{1, 0, 2});
    CHECK(X.to_string() == "+0-");
    CHECK(X.negated().to_string() == "-0+");
    CHECK(sv(3, {1, 0, 3}).to_string() == "103");
    CHECK_THROWS_AS(SignVector::from_signs("+x"), std::invalid_argument);
    CHECK_THROWS_AS(SignVector(1, {0}), std::invalid_argument);
    CHECK_THROWS_AS(SignVector(3, {4}), std::invalid_argument);
}
