#include "oracles.hpp"

#include "torinv/segre_veronese.hpp"

#include <doctest.h>

#include <numeric>

using namespace torinv;

namespace {

std::vector<IntVector> vecs(std::initializer_list<std::initializer_list<long>> rows)
{
    std::vector<IntVector> out;
    for (const auto& r : rows)
        out.push_back(make_int_vector(r));
    return out;
}

std::vector<IntVector> sorted(std::vector<IntVector> v)
{
    std::sort(v.begin(), v.end(), graded_less);
    return v;
}

// Independent evaluation of the closed formula, in halves to stay integral.
long formula(const SVSpec& spec)
{
    const std::vector<int> ex = exceptional_factors(spec);
    long prod = 1;
    for (int n : spec.factors)
        prod *= n;
    long halves = 2;
    for (int i = 0; i < spec.r(); ++i)
        if (std::find(ex.begin(), ex.end(), i) == ex.end())
            halves += spec.factors[static_cast<std::size_t>(i)] - 1;
    REQUIRE((prod * halves) % 2 == 0);
    return prod * halves / 2;
}

bool separates(const TorusRep& rep, const MonomialSemigroup& S, int characteristic)
{
    if (characteristic == 0)
        return check_separating_char0(rep, S).separating;
    return check_separating_charp(rep, S, characteristic).yes;
}

} // namespace

TEST_CASE("input validation")
{
    CHECK_THROWS_AS((SVSpec{{1}, {1}, 0}.validate()), InvalidInput);
    CHECK_THROWS_AS((SVSpec{{2}, {0}, 0}.validate()), InvalidInput);
    CHECK_THROWS_AS((SVSpec{{2}, {1}, 4}.validate()), InvalidInput);
    CHECK_THROWS_AS((SVSpec{{2, 2}, {1}, 0}.validate()), InvalidInput);
    CHECK_THROWS_AS((SVSpec{{}, {}, 0}.validate()), InvalidInput);
    CHECK_NOTHROW((SVSpec{{2, 3}, {4, 1}, 5}.validate()));
}

TEST_CASE("inseparable reduction")
{
    CHECK(reduce_inseparable(SVSpec{{2, 2}, {4, 3}, 2}).degrees == std::vector<int>{1, 3});
    CHECK(reduce_inseparable(SVSpec{{2, 2}, {5, 7}, 3}).degrees == std::vector<int>{5, 7});
    CHECK(reduce_inseparable(SVSpec{{2, 2}, {4, 9}, 0}).degrees == std::vector<int>{4, 9});
    CHECK(reduce_inseparable(SVSpec{{3}, {18}, 3}).degrees == std::vector<int>{2});
}

TEST_CASE("weight matrices")
{
    CHECK(sv_weight_matrix(SVSpec{{2, 2}, {2, 1}, 0}).weights() ==
          make_int_matrix({{-2, 1, 1, 0, 0}, {-1, 0, 0, 1, 1}}));
    CHECK(sv_weight_matrix(SVSpec{{2}, {1}, 0}).weights() == make_int_matrix({{-1, 1, 1}}));
    const TorusRep big = sv_weight_matrix(SVSpec{{2, 2, 2}, {1, 1, 1}, 0});
    CHECK(big.rank() == 3);
    CHECK(big.dim() == 7);

    CHECK(segre_weight_matrix({2, 2}).weights() == make_int_matrix({{1, 1, -1, -1}}));
    CHECK(segre_weight_matrix({2, 2, 2}).weights() ==
          make_int_matrix({{1, 1, 0, 0, -1, -1}, {0, 0, 1, 1, -1, -1}}));
    CHECK(segre_weight_matrix({3, 2}).weights() == make_int_matrix({{1, 1, 1, -1, -1}}));
    CHECK_THROWS_AS(segre_weight_matrix({3}), InvalidInput);
}

TEST_CASE("bounds table")
{
    const BoundsReport v = separating_size_bounds(SVSpec{{3}, {3}, 0});
    CHECK(v.case_id == 1);
    CHECK(v.s_lower == 5);
    CHECK(v.s_upper == 5);
    CHECK(v.s_prime_lower == 4);

    for (int p : {0, 2, 3, 5}) {
        const BoundsReport s = separating_size_bounds(SVSpec{{2, 2}, {1, 1}, p});
        CHECK(s.case_id == 2);
        CHECK(s.s_lower == 4);
        CHECK(s.s_upper == 4);
        CHECK(s.s_prime_upper == 3);
    }

    const BoundsReport t = separating_size_bounds(SVSpec{{2, 2, 2}, {1, 1, 1}, 0});
    CHECK(t.case_id == 3);
    CHECK(t.s_lower == 6);
    CHECK(t.s_upper == 7);

    // Sorting before dropping the smallest factor.
    const BoundsReport u = separating_size_bounds(SVSpec{{4, 2, 3}, {1, 1, 1}, 0});
    CHECK(u.s_lower == 2 * (3 + 4) - 6 + 4);
    CHECK(u.s_upper == 2 * 9 - 6 + 1);

    // In characteristic 2 a degree of 2 is inseparable and behaves like 1.
    CHECK(separating_size_bounds(SVSpec{{2, 2}, {2, 1}, 2}).case_id == 2);
    CHECK(separating_size_bounds(SVSpec{{2, 2}, {2, 1}, 0}).case_id == 1);
    CHECK(separating_size_bounds(SVSpec{{2, 2}, {2, 1}, 0}).s_lower == 5);
}

TEST_CASE("bounds are invariant under reduction and factor order")
{
    CHECK(separating_size_bounds(SVSpec{{2, 2}, {4, 3}, 2}) == separating_size_bounds(SVSpec{{2, 2}, {1, 3}, 2}));
    CHECK(separating_size_bounds(SVSpec{{3, 2}, {4, 3}, 2}) == separating_size_bounds(SVSpec{{3, 2}, {1, 3}, 2}));
    for (int p : {0, 2, 3}) {
        for (int a = 1; a <= 4; ++a) {
            for (int b = 1; b <= 4; ++b) {
                std::vector<int> n{2, 3, 4};
                std::vector<int> d{a, b, 1};
                const BoundsReport base = separating_size_bounds(SVSpec{n, d, p});
                CHECK(base.s_lower <= base.s_upper);
                CHECK(base.s_prime_lower == base.s_lower - 1);
                CHECK(base.s_prime_upper == base.s_upper - 1);
                CHECK(separating_size_bounds(reduce_inseparable(SVSpec{n, d, p})) == base);
                SVSpec shuffled{{n[2], n[0], n[1]}, {d[2], d[0], d[1]}, p};
                const BoundsReport other = separating_size_bounds(shuffled);
                CHECK(other.case_id == base.case_id);
                CHECK(other.s_lower == base.s_lower);
                CHECK(other.s_upper == base.s_upper);
            }
        }
    }
}

TEST_CASE("exceptional factors and minimal sizes")
{
    CHECK(exceptional_factors(SVSpec{{2, 2}, {2, 1}, 0}) == std::vector<int>{1});
    CHECK(exceptional_factors(SVSpec{{2, 2}, {2, 1}, 2}) == std::vector<int>{0, 1});
    CHECK(exceptional_factors(SVSpec{{2, 2, 2}, {9, 6, 3}, 3}) == std::vector<int>{0, 2});

    CHECK(monomial_min_size(SVSpec{{2, 2}, {1, 1}, 0}) == 4);
    CHECK(monomial_min_size(SVSpec{{2, 2}, {2, 1}, 0}) == 6);
    CHECK(monomial_min_size(SVSpec{{2, 2}, {2, 1}, 2}) == 4);
    CHECK(monomial_min_size(SVSpec{{3}, {2}, 0}) == 6);
}

TEST_CASE("minimal constructions")
{
    CHECK(sorted(monomial_min_construction(SVSpec{{2, 2}, {1, 1}, 0}).generators()) ==
          sorted(vecs({{1, 1, 0, 1, 0}, {1, 1, 0, 0, 1}, {1, 0, 1, 1, 0}, {1, 0, 1, 0, 1}})));
    CHECK(sorted(monomial_min_construction(SVSpec{{2, 2}, {2, 1}, 0}).generators()) ==
          sorted(vecs({{1, 2, 0, 1, 0},
                       {1, 2, 0, 0, 1},
                       {1, 0, 2, 1, 0},
                       {1, 0, 2, 0, 1},
                       {1, 1, 1, 1, 0},
                       {1, 1, 1, 0, 1}})));
    const SVSpec veronese{{2}, {2}, 2};
    const MonomialSemigroup v = monomial_min_construction(veronese);
    CHECK(sorted(v.generators()) == sorted(vecs({{1, 2, 0}, {1, 0, 2}})));
    CHECK(check_separating_charp(sv_weight_matrix(veronese), v, 2).yes);
    CHECK_FALSE(check_separating_char0(sv_weight_matrix(veronese), v).separating);
}

TEST_CASE("constructions over a grid of small specs")
{
    int checked = 0;
    for (int r = 1; r <= 3; ++r) {
        // Enumerate n_i in {2,3} and a_i in {1,2,3}; keep the ambient dimension modest.
        const int combos = static_cast<int>(std::pow(6, r));
        for (int code = 0; code < combos; ++code) {
            SVSpec spec;
            int c = code;
            for (int i = 0; i < r; ++i) {
                spec.factors.push_back(2 + c % 2);
                c /= 2;
                spec.degrees.push_back(1 + c % 3);
                c /= 3;
            }
            const int total = 1 + std::accumulate(spec.factors.begin(), spec.factors.end(), 0);
            if (total > 8)
                continue;
            for (int p : {0, 2, 3}) {
                spec.characteristic = p;
                const TorusRep rep = sv_weight_matrix(spec);
                const MonomialSemigroup S = monomial_min_construction(spec);
                CHECK(static_cast<long>(S.size()) == monomial_min_size(spec));
                CHECK(monomial_min_size(spec) == formula(spec));
                for (const IntVector& g : S.generators()) {
                    CHECK((rep.weights() * g).isZero());
                    CHECK(is_exponent_vector(g));
                }
                CHECK(separates(rep, S, p));
                ++checked;
            }
        }
    }
    CHECK(checked > 30);
}

TEST_CASE("no smaller monomial separating set on the tiny grid")
{
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 2; ++b) {
            const SVSpec spec{{2, 2}, {a, b}, 0};
            const TorusRep rep = sv_weight_matrix(spec);
            const MonomialSemigroup pool = small_support_generators(rep, spec.r() + 2);
            MinimalSearchOptions opts;
            opts.cap = monomial_min_size(spec);
            const MinimalSearch m = minimal_monomial_size(rep, pool, opts);
            CHECK(m.found);
            CHECK(m.size == monomial_min_size(spec));
        }
    }
}

TEST_CASE("support r+2 separates")
{
    CHECK(support_r_plus_2_separates(SVSpec{{2, 2}, {2, 1}, 0}));
    CHECK(support_r_plus_2_separates(SVSpec{{2}, {3}, 0}));
    CHECK(support_r_plus_2_separates(SVSpec{{2, 2, 2}, {1, 1, 1}, 0}));
    CHECK(support_r_plus_2_separates(SVSpec{{3, 2}, {2, 3}, 3}));
    CHECK_THROWS_AS(support_r_plus_2_separates(SVSpec{{5, 5, 5}, {2, 2, 2}, 0}), DimensionTooLarge);
}

TEST_CASE("segre nullcone is the union of the coordinate complements")
{
    for (const std::vector<int>& n : {std::vector<int>{2, 2}, {2, 3}, {2, 2, 2}, {3, 2, 2}}) {
        const TorusRep rep = segre_weight_matrix(n);
        std::vector<IndexSet> expected;
        int offset = 0;
        for (int f : n) {
            IndexSet outside;
            for (int j = 0; j < static_cast<int>(rep.dim()); ++j)
                if (j < offset || j >= offset + f)
                    outside.push_back(j);
            expected.push_back(outside);
            offset += f;
        }
        std::sort(expected.begin(), expected.end());
        CHECK(nullcone(rep).components == expected);
    }
}
