#include <gtest/gtest.h>

#include <set>

#include <signings/oracle.hpp>
#include <signings/signing.hpp>
#include <signings/verify.hpp>

using namespace signings;

namespace {

Signing::BasePtr make_base(std::initializer_list<std::initializer_list<Integer>> rows) {
    return std::make_shared<const NonnegMatrix>(NonnegMatrix(rows));
}

std::vector<long long> ks_of(const std::vector<RotationFactor>& v) {
    std::vector<long long> out;
    for (const auto& a : v) out.push_back(a.k());
    return out;
}

} // namespace

TEST(AdmissibleAlphas, PeriodTwo) {
    const NonnegMatrix a{{0, 1}, {1, 0}};
    EXPECT_EQ(ks_of(admissible_alphas(a)), (std::vector<long long>{0, 1, 2, 3}));
    const AnalysisReport r = analyze(a);
    EXPECT_EQ(r.even_ks, (std::vector<long long>{0, 2}));
    EXPECT_EQ(r.odd_ks, (std::vector<long long>{1, 3}));
    EXPECT_EQ(r.period, 2U);
}

TEST(AdmissibleAlphas, AperiodicGivesPlusMinusOne) {
    const auto alphas = admissible_alphas(NonnegMatrix{{1, 1}, {1, 1}});
    ASSERT_EQ(ks_of(alphas), (std::vector<long long>{0, 1}));
    EXPECT_NEAR(std::abs(alphas[0].value() - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(alphas[1].value() + 1.0), 0.0, 1e-15);
}

TEST(AdmissibleAlphas, ThreeCycle) {
    EXPECT_EQ(ks_of(admissible_alphas(NonnegMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})),
              (std::vector<long long>{0, 1, 2, 3, 4, 5}));
}

TEST(AdmissibleAlphas, ReducibleRejected) {
    EXPECT_THROW(admissible_alphas(NonnegMatrix{{1, 1}, {0, 1}}), Error);
    const AnalysisReport r = analyze(NonnegMatrix{{1, 1}, {0, 1}});
    EXPECT_FALSE(r.irreducible);
    EXPECT_EQ(r.components.size(), 2U);
    EXPECT_TRUE(r.admissible.empty());
}

TEST(AdmissibleAlphas, ZeroOneByOneHasNoPeriod) {
    const AnalysisReport r = analyze(NonnegMatrix{{0}});
    EXPECT_TRUE(r.irreducible);
    EXPECT_FALSE(r.period);
    EXPECT_TRUE(r.admissible.empty());
    EXPECT_THROW(admissible_alphas(NonnegMatrix{{0}}), Error);
}

TEST(ConstructWitness, TwoCycle) {
    const Signing b = construct_witness(NonnegMatrix{{0, 1}, {1, 0}}, 1);
    EXPECT_EQ(realize(b), (IntMatrix{{0, 1}, {-1, 0}}));
}

TEST(ConstructWitness, ThreeCycleNegatesCornerEntry) {
    const NonnegMatrix a{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
    EXPECT_EQ(realize(construct_witness(a, 1)), (IntMatrix{{0, 1, 0}, {0, 0, 1}, {-1, 0, 0}}));
    EXPECT_EQ(realize(construct_witness(a, 0)), a.matrix());
    EXPECT_EQ(realize(construct_witness(a, 4)), a.matrix());
}

TEST(ConstructWitness, AperiodicOddIsNegation) {
    const NonnegMatrix a{{1, 2}, {1, 0}};
    EXPECT_EQ(realize(construct_witness(a, 1)), -a.matrix());
}

TEST(ConstructWitness, Errors) {
    EXPECT_THROW(construct_witness(NonnegMatrix{{0, 1}, {1, 0}}, 4), Error);
    EXPECT_THROW(construct_witness(NonnegMatrix{{0, 1}, {1, 0}}, -1), Error);
    EXPECT_THROW(construct_witness(NonnegMatrix{{1, 1}, {0, 1}}, 0), Error);
}

TEST(ConstructWitness, ShuffledPeriodTwoSixBySix) {
    Rng rng(42);
    const NonnegMatrix a = random_irreducible(6, 2, 42);
    const Signing b = construct_witness(a, 3);
    EXPECT_TRUE(rotation_check(char_poly(a), char_poly(b), RotationFactor(3, 2)));
    EXPECT_TRUE(multiset_match(numeric_spectrum(realize(b)),
                               rotate(numeric_spectrum(a.matrix()), RotationFactor(3, 2).value()), 1e-9));
}

TEST(ConstructWitness, PeriodThreeRotatedSpectraMatch) {
    const NonnegMatrix a = random_irreducible(6, 3, 5);
    const Signing b = construct_witness(a, 1);
    EXPECT_TRUE(multiset_match(numeric_spectrum(realize(b)),
                               rotate(numeric_spectrum(a.matrix()), RotationFactor(1, 3).value()), 1e-9));
}

TEST(DecideDiagSimilar, Examples) {
    auto base = make_base({{0, 1}, {1, 0}});
    const Signing b = Signing::from_matrix(base, IntMatrix{{0, 1}, {-1, 0}});
    const Signing b2 = Signing::from_matrix(base, IntMatrix{{0, -1}, {1, 0}});
    EXPECT_EQ(decide_diag_similar(b, b2), SignDiagonal({1, -1}));
    EXPECT_EQ(decide_diag_similar(b, b), SignDiagonal::identity(2));
    EXPECT_FALSE(decide_diag_similar(b, Signing::positive(base)));
}

TEST(DecideDiagSimilar, DiagonalSignsMustAgree) {
    auto base = make_base({{1, 1}, {1, 0}});
    const Signing b = Signing::positive(base);
    const Signing c = Signing::from_matrix(base, IntMatrix{{-1, 1}, {1, 0}});
    EXPECT_FALSE(decide_diag_similar(b, c));
}

TEST(DecideDiagSimilar, Errors) {
    auto b1 = Signing::positive(make_base({{0, 1}, {1, 0}}));
    auto b2 = Signing::positive(make_base({{0, 2}, {1, 0}}));
    try {
        decide_diag_similar(b1, b2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::base_mismatch);
    }
    auto red = Signing::positive(make_base({{1, 1}, {0, 1}}));
    EXPECT_THROW(decide_diag_similar(red, red), Error);
}

TEST(DecideDiagSimilar, RecoversRandomDiagonalUpToSign) {
    Rng rng(8);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = rng.uniform(1, 5);
        auto base = std::make_shared<const NonnegMatrix>(random_irreducible(n, rng.uniform(1, n), rng.next()));
        std::vector<std::int8_t> signs(base->support_size());
        for (auto& s : signs) s = rng.bernoulli(0.5) ? 1 : -1;
        const Signing b(base, signs);
        const SignDiagonal d0 = random_sign_diagonal(n, rng);
        const auto d = decide_diag_similar(b, conjugate_diag(b, d0));
        ASSERT_TRUE(d);
        EXPECT_TRUE(*d == d0 || *d == d0.negated());
        EXPECT_EQ((*d)[0], 1);
    }
}

TEST(DecideDiagSimilar, IsAnEquivalenceOnSmallCases) {
    for (std::size_t n = 1; n <= 3; ++n)
        for_each_irreducible_01(n, [](const Signing::BasePtr& base) {
            const SigningSpace space = all_signings(base);
            if (space.size() > 64) return;
            std::vector<Signing> all(space.begin(), space.end());
            for (const auto& x : all) {
                ASSERT_EQ(decide_diag_similar(x, x), SignDiagonal::identity(x.order()));
                for (const auto& y : all) {
                    const auto xy = decide_diag_similar(x, y);
                    const auto yx = decide_diag_similar(y, x);
                    ASSERT_EQ(xy.has_value(), yx.has_value());
                    if (xy) {
                        EXPECT_EQ(*xy, *yx);
                        EXPECT_EQ(conjugate_diag(x, *xy), y);
                    }
                    for (const auto& z : all) {
                        if (!xy) break;
                        const auto yz = decide_diag_similar(y, z);
                        if (yz) { EXPECT_TRUE(decide_diag_similar(x, z)); }
                    }
                }
            }
        });
}

TEST(Membership, TwoCycleExamples) {
    auto base = make_base({{0, 1}, {1, 0}});
    EXPECT_TRUE(membership(Signing::from_matrix(base, IntMatrix{{0, 1}, {-1, 0}}), 1));
    EXPECT_FALSE(membership(Signing::from_matrix(base, IntMatrix{{0, 1}, {1, 0}}), 1));
    const auto r = membership(Signing::from_matrix(base, IntMatrix{{0, -1}, {-1, 0}}), 0);
    EXPECT_TRUE(r.member);
    EXPECT_EQ(r.witness, SignDiagonal({1, -1}));
    EXPECT_EQ(char_poly(IntMatrix{{0, -1}, {-1, 0}}), char_poly(base->matrix()));
}

TEST(Membership, RangeOfKValidated) {
    auto base = make_base({{0, 1}, {1, 0}});
    EXPECT_THROW(membership(Signing::positive(base), 4), Error);
}

TEST(Membership, WitnessIsMemberAndKParityOnly) {
    Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = rng.uniform(1, 5);
        const std::size_t p = rng.uniform(1, n);
        auto base = std::make_shared<const NonnegMatrix>(random_irreducible(n, p, rng.next()));
        const auto twop = static_cast<long long>(2 * p);
        for (long long k = 0; k < twop; ++k) {
            const Signing w = construct_witness(base, k);
            EXPECT_TRUE(membership(w, k));
            std::vector<std::int8_t> signs(base->support_size());
            for (auto& s : signs) s = rng.bernoulli(0.5) ? 1 : -1;
            const Signing b(base, signs);
            EXPECT_EQ(membership(b, k).member, membership(b, (k + 2) % twop).member);
        }
    }
}

TEST(Membership, AgreesWithSpectralTest) {
    Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = rng.uniform(1, 5);
        const std::size_t p = rng.uniform(1, n);
        auto base = std::make_shared<const NonnegMatrix>(random_irreducible(n, p, rng.next()));
        const CharPoly pa = char_poly(*base);
        for (long long k = 0; k < static_cast<long long>(2 * p); ++k)
            for (int s = 0; s < 10; ++s) {
                std::vector<std::int8_t> signs(base->support_size());
                for (auto& v : signs) v = rng.bernoulli(0.5) ? 1 : -1;
                const Signing b(base, signs);
                EXPECT_EQ(membership(b, k).member,
                          rotation_check(pa, char_poly(b), RotationFactor(k, static_cast<long long>(p))));
            }
    }
}

TEST(EnumerateClass, TwoByTwo) {
    auto base = make_base({{0, 1}, {1, 0}});
    const auto cls = enumerate_class(Signing::from_matrix(base, IntMatrix{{0, 1}, {-1, 0}}));
    std::vector<IntMatrix> got;
    for (const Signing& s : cls) got.push_back(realize(s));
    EXPECT_EQ(got, (std::vector<IntMatrix>{IntMatrix{{0, 1}, {-1, 0}}, IntMatrix{{0, -1}, {1, 0}}}));
}

TEST(EnumerateClass, OneByOne) {
    const auto cls = enumerate_class(Signing::positive(make_base({{3}})));
    EXPECT_EQ(cls.size(), 1U);
    EXPECT_EQ(realize(*cls.begin()), (IntMatrix{{3}}));
}

TEST(EnumerateClass, FourCycleMatchesOracle) {
    auto base = make_base({{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}});
    const Signing w = construct_witness(base, 1);
    std::set<std::uint64_t> cls;
    for (const Signing& s : enumerate_class(w)) cls.insert(signing_mask(s));
    EXPECT_EQ(cls.size(), 8U);
    std::set<std::uint64_t> brute;
    for (const Signing& s : brute_force_M(base, 1)) brute.insert(signing_mask(s));
    EXPECT_EQ(cls, brute);
}

TEST(EnumerateClass, DistinctAndRotated) {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = rng.uniform(1, 6);
        const std::size_t p = rng.uniform(1, n);
        auto base = std::make_shared<const NonnegMatrix>(random_irreducible(n, p, rng.next()));
        const CharPoly pa = char_poly(*base);
        const long long k = static_cast<long long>(rng.uniform(0, 2 * p - 1));
        std::set<std::uint64_t> seen;
        for (const Signing& s : enumerate_class(construct_witness(base, k))) {
            seen.insert(signing_mask(s));
            EXPECT_TRUE(rotation_check(pa, char_poly(s), RotationFactor(k, static_cast<long long>(p))));
        }
        EXPECT_EQ(seen.size(), std::size_t{1} << (n - 1));
    }
}

TEST(EnumerateClass, CapEnforced) {
    const NonnegMatrix a = random_irreducible(5, 1, 1);
    try {
        enumerate_class(Signing::positive(a), 4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::cap_exceeded);
    }
}
