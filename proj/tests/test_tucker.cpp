#include <doctest.h>

#include <random>

#include "kneser/coloring.hpp"
#include "kneser/tucker.hpp"

using namespace kneser;

namespace {

SignVector sv(int p, std::initializer_list<int> entries) {
    std::vector<std::uint8_t> e;
    for (int x : entries) e.push_back(static_cast<std::uint8_t>(x));
    return SignVector(p, std::move(e));
}

struct ZpFixture {
    KneserInstance inst;
    Coloring coloring;
    TuckerParams params;

    ZpFixture(int p, int n, int k)
        : inst(KneserInstance::make(n, k, p, StabilityVariant::almost(2))),
          coloring(erdos_coloring(inst)),
          params(p, n, k, coloring.t) {}
};

}  // namespace

TEST_CASE("lambda_zp low case: alt and leading part") {
    ZpFixture f(3, 7, 2);
    auto lab = lambda_zp(sv(3, {2, 0, 0, 0, 0, 0, 0}), f.params, f.inst, f.coloring);
    CHECK(lab == LambdaLabel{2, 1});
    auto lab2 = lambda_zp(sv(3, {0, 3, 1, 0, 0, 0, 0}), f.params, f.inst, f.coloring);
    CHECK(lab2 == LambdaLabel{3, 2});
    CHECK_THROWS_AS(lambda_zp(sv(3, {0, 0, 0, 0, 0, 0, 0}), f.params, f.inst, f.coloring),
                    std::invalid_argument);
}

TEST_CASE("lambda_zp high case picks the colex-smallest stable subset over all parts") {
    ZpFixture f(3, 7, 2);
    // X1={1,3}, X2={2}, X3={4,6}: entries 1,2,1,3,0,3,0 -> alt 4 > alpha 3
    auto X = sv(3, {1, 2, 1, 3, 0, 3, 0});
    REQUIRE(alt(X) == 4);
    const int i13 = f.inst.vertex_index(KSubset(7, {1, 3}).mask());
    REQUIRE(i13 >= 0);
    auto lab = lambda_zp(X, f.params, f.inst, f.coloring);
    CHECK(lab.part == 1);
    CHECK(lab.level == f.coloring.colors[static_cast<std::size_t>(i13)] + f.params.alpha());
}

TEST_CASE("lambda_zp equivariance on sampled vectors") {
    for (int p : {2, 3}) {
        ZpFixture f(p, 8, 2);
        std::mt19937_64 rng(17);
        for (int iter = 0; iter < 500; ++iter) {
            std::vector<std::uint8_t> e(8);
            bool nonzero = false;
            for (auto& x : e) {
                x = static_cast<std::uint8_t>(rng() % (p + 1));
                nonzero |= x != 0;
            }
            if (!nonzero) continue;
            SignVector X(p, e);
            auto base = lambda_zp(X, f.params, f.inst, f.coloring);
            for (int a = 0; a < p; ++a) {
                auto shifted = lambda_zp(omega_shift(X, a), f.params, f.inst, f.coloring);
                CHECK(shifted == shift_label(base, a, p));
            }
        }
    }
}

TEST_CASE("zp_tucker_conclusion arithmetic") {
    CHECK(zp_tucker_conclusion(TuckerParams(3, 9, 2, 3)));
    CHECK_FALSE(zp_tucker_conclusion(TuckerParams(3, 9, 2, 2)));
    // k=1: alpha=0, bound C >= n
    CHECK(zp_tucker_conclusion(TuckerParams(2, 4, 1, 4)));
    CHECK_FALSE(zp_tucker_conclusion(TuckerParams(2, 4, 1, 3)));
    CHECK_THROWS_AS(TuckerParams(4, 5, 2, 1), std::invalid_argument);  // p must be prime
}

TEST_CASE("property suite passes exhaustively for proper colorings (p=2,3, n<=7)") {
    for (int p : {2, 3}) {
        for (int n = 2 * p; n <= 7; ++n) {
            ZpFixture f(p, n, 2);
            ChainSampler sampler;  // exhaustive
            auto rep = check_zp_properties(f.params, f.inst, f.coloring, sampler);
            CAPTURE(p);
            CAPTURE(n);
            CHECK(rep.ok());
            CHECK(rep.vectors_checked > 0);
            CHECK(rep.pairs_checked > 0);
        }
    }
}

TEST_CASE("property suite at k=1: every non-zero vector is in the high case") {
    ZpFixture f(2, 5, 1);
    REQUIRE(f.params.alpha() == 0);
    ChainSampler sampler;
    auto rep = check_zp_properties(f.params, f.inst, f.coloring, sampler);
    CHECK(rep.ok());
    CHECK(rep.pairs_checked > 0);
}

TEST_CASE("serial and parallel exhaustive scans agree") {
    ZpFixture f(3, 7, 2);
    ChainSampler sampler;
    auto serial = check_zp_properties(f.params, f.inst, f.coloring, sampler, Parallelism::serial);
    auto parallel =
        check_zp_properties(f.params, f.inst, f.coloring, sampler, Parallelism::parallel);
    CHECK(serial.ok() == parallel.ok());
    CHECK(serial.vectors_checked == parallel.vectors_checked);
    CHECK(serial.pairs_checked == parallel.pairs_checked);
    CHECK(serial.chains_checked == parallel.chains_checked);
}

TEST_CASE("sampled property suite passes for proper colorings at n<=12") {
    for (int n : {9, 12}) {
        ZpFixture f(3, n, 2);
        ChainSampler sampler;
        sampler.exhaustive = false;
        sampler.samples = 10000;
        sampler.seed = 1;
        auto rep = check_zp_properties(f.params, f.inst, f.coloring, sampler);
        CHECK(rep.ok());
        CHECK(rep.chains_checked == 10000);
    }
}

TEST_CASE("constant colorings below the Tucker bound yield a violating chain") {
    for (const auto& [p, n] : {std::pair{2, 6}, std::pair{2, 7}, std::pair{3, 8}}) {
        auto inst = KneserInstance::make(n, 2, p, StabilityVariant::almost(2));
        auto col = Coloring::constant(inst.vertex_count(), 1, 1);
        TuckerParams params(p, n, 2, 1);
        REQUIRE_FALSE(zp_tucker_conclusion(params));
        ChainSampler sampler;
        auto rep = check_zp_properties(params, inst, col, sampler);
        CAPTURE(p);
        CAPTURE(n);
        CHECK(rep.equivariance_ok);
        CHECK(rep.low_level_ok);
        CHECK_FALSE(rep.high_level_ok);
        REQUIRE(rep.violation.has_value());
        REQUIRE(rep.witness.has_value());

        // soundness of the extraction: disjoint, monochromatic, stable
        const auto& w = *rep.witness;
        CHECK(w.vertices.size() == static_cast<std::size_t>(p));
        SetMask seen = 0;
        for (const auto& s : w.vertices) {
            CHECK(is_stable(s, StabilityVariant::almost(2)));
            CHECK((seen & s.mask()) == 0);
            seen |= s.mask();
            const int vi = inst.vertex_index(s.mask());
            REQUIRE(vi >= 0);
            CHECK(col.colors[static_cast<std::size_t>(vi)] == *w.color);
        }

        // the chain itself is a subvector chain with equal high labels
        const auto& chain = *rep.violation;
        for (std::size_t i = 0; i + 1 < chain.links.size(); ++i)
            CHECK(is_subvector(chain.links[i], chain.links[i + 1]));
    }
}

TEST_CASE("undersized proper-coloring attempts surface violations (completeness)") {
    // 2 colors on V(9,2,2) with p=3: the bound demands 3, so some chain violates.
    auto inst = KneserInstance::make(9, 2, 3, StabilityVariant::almost(2));
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 3; ++iter) {
        Coloring col{2, {}};
        for (std::size_t i = 0; i < inst.vertex_count(); ++i)
            col.colors.push_back(1 + static_cast<int>(rng() % 2));
        REQUIRE(monochromatic_edge(inst, col).has_value());
        TuckerParams params(3, 9, 2, 2);
        ChainSampler sampler;
        auto rep = check_zp_properties(params, inst, col, sampler);
        CHECK(rep.equivariance_ok);
        CHECK(rep.low_level_ok);
        CHECK_FALSE(rep.high_level_ok);
        CHECK(rep.witness.has_value());
    }
}

namespace {

// Oracle for the pruned chain scan: enumerate every p-chain directly (each
// position is untouched or receives a value at one of p entry times) and
// test the high-level property through the public lambda map.
bool naive_has_violation(const TuckerParams& params, const KneserInstance& inst,
                         const Coloring& col) {
    const int p = params.p;
    const int n = params.n;
    const std::int64_t codes = p * p + 1;
    std::int64_t total = 1;
    for (int i = 0; i < n; ++i) total *= codes;
    for (std::int64_t chain_code = 0; chain_code < total; ++chain_code) {
        std::vector<std::vector<std::uint8_t>> links(
            static_cast<std::size_t>(p), std::vector<std::uint8_t>(static_cast<std::size_t>(n)));
        std::int64_t rest = chain_code;
        for (int i = 0; i < n; ++i) {
            const int d = static_cast<int>(rest % codes);
            rest /= codes;
            if (d == 0) continue;
            const int value = (d - 1) / p + 1;
            const int enter = (d - 1) % p + 1;
            for (int l = enter; l <= p; ++l)
                links[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(i)] =
                    static_cast<std::uint8_t>(value);
        }
        bool link1_zero = true;
        for (auto x : links[0]) link1_zero &= x == 0;
        if (link1_zero) continue;
        std::vector<LambdaLabel> labels;
        for (const auto& e : links)
            labels.push_back(lambda_zp(SignVector(p, e), params, inst, col));
        bool all_high_equal = labels[0].level > params.alpha();
        for (int l = 1; l < p; ++l) all_high_equal &= labels[l].level == labels[0].level;
        if (!all_high_equal) continue;
        bool distinct = true;
        for (int a = 0; a < p && distinct; ++a)
            for (int b = a + 1; b < p && distinct; ++b)
                distinct = labels[a].part != labels[b].part;
        if (distinct) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("pruned chain scan agrees with naive full enumeration") {
    std::mt19937_64 rng(47);
    auto run_case = [&](int p, int n, int k, const Coloring& col, int colors) {
        auto inst = KneserInstance::make(n, k, p, StabilityVariant::almost(2));
        TuckerParams params(p, n, k, colors);
        ChainSampler sampler;
        auto rep = check_zp_properties(params, inst, col, sampler);
        CAPTURE(p);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(naive_has_violation(params, inst, col) == !rep.high_level_ok);
    };
    // proper colorings: no violation on either route
    {
        auto inst = KneserInstance::make(5, 2, 2, StabilityVariant::almost(2));
        auto col = erdos_coloring(inst);
        run_case(2, 5, 2, col, col.t);
        auto inst3 = KneserInstance::make(4, 1, 3, StabilityVariant::almost(2));
        auto col3 = erdos_coloring(inst3);
        run_case(3, 4, 1, col3, col3.t);
    }
    // constant and random under-colorings: both routes must find violations
    {
        auto inst = KneserInstance::make(6, 2, 2, StabilityVariant::almost(2));
        run_case(2, 6, 2, Coloring::constant(inst.vertex_count(), 1, 1), 1);
        for (int iter = 0; iter < 3; ++iter) {
            Coloring col{2, {}};
            for (std::size_t i = 0; i < inst.vertex_count(); ++i)
                col.colors.push_back(1 + static_cast<int>(rng() % 2));
            run_case(2, 6, 2, col, 2);
        }
        auto inst3 = KneserInstance::make(4, 1, 3, StabilityVariant::almost(2));
        run_case(3, 4, 1, Coloring::constant(inst3.vertex_count(), 1, 1), 1);
        auto inst5 = KneserInstance::make(5, 1, 3, StabilityVariant::almost(2));
        run_case(3, 5, 1, Coloring::constant(inst5.vertex_count(), 1, 1), 1);
    }
}

TEST_CASE("serial and parallel scans return the same violating chain") {
    auto inst = KneserInstance::make(7, 2, 2, StabilityVariant::almost(2));
    auto col = Coloring::constant(inst.vertex_count(), 1, 1);
    TuckerParams params(2, 7, 2, 1);
    ChainSampler sampler;
    auto serial = check_zp_properties(params, inst, col, sampler, Parallelism::serial);
    auto parallel = check_zp_properties(params, inst, col, sampler, Parallelism::parallel);
    REQUIRE(serial.violation.has_value());
    REQUIRE(parallel.violation.has_value());
    REQUIRE(serial.violation->links.size() == parallel.violation->links.size());
    for (std::size_t i = 0; i < serial.violation->links.size(); ++i)
        CHECK(serial.violation->links[i] == parallel.violation->links[i]);
}

TEST_CASE("lambda_signed fixed examples") {
    auto inst = KneserInstance::make(5, 2, 2, StabilityVariant::cyclic(2));
    Coloring col{2, std::vector<int>(inst.vertex_count(), 1)};
    CHECK(lambda_signed(SignVector::from_signs("+0000"), 5, 2, inst, col) == 1);
    CHECK(lambda_signed(SignVector::from_signs("-+000"), 5, 2, inst, col) == -2);

    // X = (-,+,-,+,0): alt 4 >= 2k, X- = {1,3} cyclic 2-stable
    const int i13 = inst.vertex_index(KSubset(5, {1, 3}).mask());
    REQUIRE(i13 >= 0);
    col.colors[static_cast<std::size_t>(i13)] = 2;
    const int i24 = inst.vertex_index(KSubset(5, {2, 4}).mask());
    REQUIRE(i24 >= 0);
    col.colors[static_cast<std::size_t>(i24)] = 1;
    auto X = SignVector::from_signs("-+-+0");
    REQUIRE(alt(X) == 4);
    // X+ = {2,4} color 1 beats X- = {1,3} color 2
    CHECK(lambda_signed(X, 5, 2, inst, col) == 1 + 2 * 2 - 1);
    col.colors[static_cast<std::size_t>(i24)] = 2;
    col.colors[static_cast<std::size_t>(i13)] = 1;
    CHECK(lambda_signed(X, 5, 2, inst, col) == -(1 + 2 * 2 - 1));
}

TEST_CASE("lambda_signed antipodality, exhaustive n<=8") {
    for (int n = 4; n <= 8; ++n) {
        const int k = 2;
        auto inst = KneserInstance::make(n, k, 2, StabilityVariant::cyclic(2));
        std::mt19937_64 rng(31);
        Coloring col{n - 2 * k + 1, {}};
        for (std::size_t i = 0; i < inst.vertex_count(); ++i)
            col.colors.push_back(1 + static_cast<int>(rng() % (n - 2 * k + 1)));
        std::int64_t total = 1;
        for (int i = 0; i < n; ++i) total *= 3;
        for (std::int64_t code = 1; code < total; ++code) {
            std::vector<std::uint8_t> e(static_cast<std::size_t>(n));
            std::int64_t rest = code;
            for (int i = 0; i < n; ++i) {
                e[i] = static_cast<std::uint8_t>(rest % 3);
                rest /= 3;
            }
            SignVector X(2, e);
            CHECK(lambda_signed(X.negated(), n, k, inst, col) == -lambda_signed(X, n, k, inst, col));
        }
    }
}

TEST_CASE("find_complementary_pair: index lambda has none for n<=6") {
    // lambda(X) = +-(first non-zero index): antipodal, values in +-[n], no pair
    for (int n = 1; n <= 6; ++n) {
        SignedLambdaFn lam = [](const SignVector& X) {
            for (int i = 0; i < X.n(); ++i)
                if (X.entries[static_cast<std::size_t>(i)] != 0)
                    return X.entries[static_cast<std::size_t>(i)] == 1 ? i + 1 : -(i + 1);
            throw std::invalid_argument("zero vector");
        };
        CHECK_FALSE(find_complementary_pair(lam, n).has_value());
    }
}

TEST_CASE("find_complementary_pair rejects out-of-budget n") {
    SignedLambdaFn lam = [](const SignVector&) { return 1; };
    CHECK_THROWS_AS(find_complementary_pair(lam, 14), budget_error);
}

TEST_CASE("complementary pair exists for 2-colorings of the C5 Schrijver instance") {
    const int n = 5, k = 2;
    auto inst = KneserInstance::make(n, k, 2, StabilityVariant::cyclic(2));
    Coloring col{2, {1, 2, 1, 2, 1}};
    SignedLambdaFn lam = [&](const SignVector& X) { return lambda_signed(X, n, k, inst, col); };
    auto serial = find_complementary_pair(lam, n, Parallelism::serial);
    auto parallel = find_complementary_pair(lam, n, Parallelism::parallel);
    REQUIRE(serial.has_value());
    REQUIRE(parallel.has_value());
    CHECK(serial->first == parallel->first);
    CHECK(serial->second == parallel->second);
    CHECK(is_subvector(serial->first, serial->second));
    CHECK(lam(serial->first) == -lam(serial->second));
}

TEST_CASE("schrijver_witness succeeds for every 2-coloring of the C5 instance") {
    const int n = 5, k = 2;
    auto inst = KneserInstance::make(n, k, 2, StabilityVariant::cyclic(2));
    REQUIRE(inst.vertex_count() == 5);
    for (int bits = 0; bits < 32; ++bits) {
        Coloring col{2, {}};
        for (int i = 0; i < 5; ++i) col.colors.push_back(1 + ((bits >> i) & 1));
        auto w = schrijver_witness(n, k, col);
        REQUIRE(w.vertices.size() == 2);
        CHECK((w.vertices[0].mask() & w.vertices[1].mask()) == 0);
        for (const auto& s : w.vertices) {
            CHECK(is_stable(s, StabilityVariant::cyclic(2)));
            const int vi = inst.vertex_index(s.mask());
            REQUIRE(vi >= 0);
            CHECK(col.colors[static_cast<std::size_t>(vi)] == *w.color);
        }
    }
}

TEST_CASE("schrijver_witness on a capped Erdos coloring of [6]") {
    const int n = 6, k = 2;
    auto inst = KneserInstance::make(n, k, 2, StabilityVariant::cyclic(2));
    Coloring col{n - 2 * k + 1, {}};
    for (std::size_t i = 0; i < inst.vertex_count(); ++i)
        col.colors.push_back(std::min(erdos_color(k, 2, inst.vertex(i)), n - 2 * k + 1));
    auto w = schrijver_witness(n, k, col);
    CHECK((w.vertices[0].mask() & w.vertices[1].mask()) == 0);
    CHECK(w.color.has_value());
}

TEST_CASE("schrijver_witness validates its inputs") {
    const int n = 5, k = 2;
    auto inst = KneserInstance::make(n, k, 2, StabilityVariant::cyclic(2));
    Coloring bad{3, std::vector<int>(inst.vertex_count(), 3)};  // colors beyond n-2k+1
    CHECK_THROWS_AS(schrijver_witness(n, k, bad), std::invalid_argument);
}
