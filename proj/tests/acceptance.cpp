// Acceptance run: one PASS/FAIL line per criterion.
#include "oracles.hpp"

#include "torinv/segre_veronese.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace torinv;

namespace {

struct Line {
    int id;
    bool pass;
    std::string detail;
};

// Criterion 1 asks for a four-element Hilbert basis that is not minimal; the
// computed basis has three elements generating the same semigroup.
const std::set<int> kKnownUnattainable{1};

std::vector<IntVector> vecs(std::initializer_list<std::initializer_list<long>> rows)
{
    std::vector<IntVector> out;
    for (const auto& r : rows)
        out.push_back(make_int_vector(r));
    return out;
}

std::set<std::vector<long>> as_set(const std::vector<IntVector>& vs)
{
    std::set<std::vector<long>> out;
    for (const IntVector& v : vs) {
        std::vector<long> row;
        for (Eigen::Index i = 0; i < v.size(); ++i)
            row.push_back(v(i).convert_to<long>());
        out.insert(row);
    }
    return out;
}

std::vector<TorusRep> seeded_reps(unsigned seed, int count, int max_n)
{
    std::mt19937 rng(seed);
    std::vector<TorusRep> reps;
    for (int k = 0; k < count; ++k) {
        const int r = 1 + k % 2;
        const int n = r + 1 + (k / 2) % (max_n - r);
        reps.push_back(oracle::random_rep(rng, r, n));
    }
    return reps;
}

Line criterion1()
{
    const TorusRep rep(make_int_matrix({{1, 5, -6}}));
    std::ostringstream why;
    bool ok = true;

    const HilbertBasis hb = hilbert_basis(rep.weights());
    const auto expected = vecs({{1, 1, 1}, {1, 7, 6}, {0, 6, 5}, {6, 0, 1}});
    if (as_set(hb.elements) != as_set(expected)) {
        ok = false;
        why << "hilbert basis has " << hb.elements.size() << " elements {(1,1,1),(6,0,1),(0,6,5)}; "
            << "(1,7,6) = (1,1,1) + (0,6,5) is not irreducible";
        const MonomialSemigroup four(3, expected);
        bool same = true;
        for (const IntVector& h : hb.elements)
            same = same && member(four, h);
        for (const IntVector& g : expected)
            same = same && member(hb.as_semigroup(), g);
        why << (same ? " (both lists generate the same semigroup)" : " (semigroups differ)") << "; ";
        ok = ok && same;
    }
    const bool basis_ok = ok;

    const MonomialSemigroup small = small_support_generators(rep, 2);
    if (as_set(small.generators()) != as_set(vecs({{0, 6, 5}, {6, 0, 1}}))) {
        ok = false;
        why << "bound-2 harvest mismatch; ";
    }
    const Char0Verdict v = check_separating_char0(rep, small);
    if (v.separating || !verify_certificate(rep, small, v.certificate)) {
        ok = false;
        why << "char-0 verdict or certificate wrong; ";
    }
    for (int p : {2, 3, 5}) {
        const CharPVerdict c = check_separating_charp(rep, small, p);
        if (c.yes || c.m != 8 || !verify_certificate(rep, small, c)) {
            ok = false;
            why << "p=" << p << " not NoUpTo(8); ";
        }
    }
    const bool only_basis = !basis_ok && why.str().find("mismatch") == std::string::npos &&
                            why.str().find("wrong") == std::string::npos &&
                            why.str().find("NoUpTo(8); ") == std::string::npos;
    if (ok)
        why << "basis, harvest, char-0 certificate and NoUpTo(8) for p=2,3,5 all match";
    else if (only_basis)
        why << "harvest, char-0 certificate and NoUpTo(8) for p=2,3,5 match";
    return {1, ok, why.str()};
}

Line criterion2()
{
    const TorusRep rep(make_int_matrix({{1, 0, 5, -6, 0}, {0, 1, 5, 0, -6}}));
    const bool four = check_separating_char0(rep, small_support_generators(rep, 4)).separating;
    const bool five = check_separating_char0(rep, small_support_generators(rep, 5)).separating;
    std::ostringstream why;
    why << "bound 4 separates: " << std::boolalpha << four << ", bound 5 separates: " << five;
    return {2, !four && five, why.str()};
}

Line criterion3(const std::vector<TorusRep>& reps)
{
    int failures = 0;
    for (const TorusRep& rep : reps) {
        try {
            if (!check_separating_char0(rep, construct_2rplus1(rep)).separating)
                ++failures;
        } catch (const Error&) {
            ++failures;
        }
    }
    std::ostringstream why;
    why << reps.size() << " reps, " << failures << " failures";
    return {3, failures == 0, why.str()};
}

Line criterion4(const std::vector<TorusRep>& reps)
{
    int failures = 0;
    for (const TorusRep& rep : reps) {
        try {
            if (!kernel_small_support_spans(rep).spans)
                ++failures;
        } catch (const Error&) {
            ++failures;
        }
    }
    std::ostringstream why;
    why << reps.size() << " reps, " << failures << " failures";
    return {4, failures == 0, why.str()};
}

Line criterion5()
{
    std::mt19937 rng(20261016);
    int failures = 0;
    int flagged = 0;
    int escalated = 0;
    int negatives = 0;
    int refuted = 0;
    const int pairs = 120;
    for (int k = 0; k < pairs; ++k) {
        const int r = 1 + k % 2;
        const int n = r + 1 + (k / 2) % (5 - r);
        const TorusRep rep = oracle::random_rep(rng, r, n);
        const MonomialSemigroup S = oracle::random_subsemigroup(rng, hilbert_basis(rep.weights()));
        const bool zero = check_separating_char0(rep, S).separating;
        bool both_yes = true;
        bool any_no_after_escalation = false;
        for (int p : {2, 3}) {
            CharPVerdict v = check_separating_charp(rep, S, p);
            if (!verify_certificate(rep, S, v))
                ++failures;
            if (!v.yes && zero) {
                ++escalated;
                v = check_separating_charp(rep, S, p, 24);
                any_no_after_escalation = any_no_after_escalation || !v.yes;
            }
            both_yes = both_yes && v.yes;
        }
        if (zero && any_no_after_escalation)
            ++failures;
        if (!zero) {
            ++negatives;
            if (both_yes) {
                ++flagged;
                std::clog << "criterion 5: flagged for cap escalation at pair " << k << '\n';
            }
        }
        const auto w = oracle_refute(rep, S, 30, 20000);
        if (w) {
            ++refuted;
            if (zero || !verify_oracle_witness(rep, S, *w))
                ++failures;
        }
    }
    std::ostringstream why;
    why << pairs << " pairs (" << negatives << " non-separating, " << refuted << " refuted by the oracle), "
        << failures << " failures, " << flagged << " flagged, " << escalated << " cap escalations";
    return {5, failures == 0, why.str()};
}

Line criterion6()
{
    std::ostringstream why;
    bool ok = true;
    const BoundsReport v = separating_size_bounds(SVSpec{{3}, {3}, 0});
    ok = ok && v.case_id == 1 && v.s_lower == 5 && v.s_upper == 5;
    why << "veronese s=[" << v.s_lower << "," << v.s_upper << "]";
    const BoundsReport s = separating_size_bounds(SVSpec{{2, 2}, {1, 1}, 0});
    ok = ok && s.case_id == 2 && s.s_lower == 4 && s.s_upper == 4;
    why << ", segre(2,2) s=[" << s.s_lower << "," << s.s_upper << "]";
    const BoundsReport t = separating_size_bounds(SVSpec{{2, 2, 2}, {1, 1, 1}, 0});
    ok = ok && t.case_id == 3 && t.s_lower == 6 && t.s_upper == 7;
    why << ", segre(2,2,2) s=[" << t.s_lower << "," << t.s_upper << "]";
    bool invariant = true;
    for (const std::vector<int>& n : {std::vector<int>{2, 2}, {3, 2}, {4, 5}})
        invariant = invariant &&
                    separating_size_bounds(SVSpec{n, {4, 3}, 2}) == separating_size_bounds(SVSpec{n, {1, 3}, 2});
    ok = ok && invariant;
    why << ", a=(4,3) vs (1,3) in char 2: " << (invariant ? "same" : "different");
    return {6, ok, why.str()};
}

Line criterion7()
{
    std::ostringstream why;
    bool ok = true;
    const SVSpec spec{{2, 2}, {2, 1}, 0};
    const TorusRep rep = sv_weight_matrix(spec);
    const long size = monomial_min_size(spec);
    const MonomialSemigroup S = monomial_min_construction(spec);
    bool invariant = true;
    for (const IntVector& g : S.generators())
        invariant = invariant && (rep.weights() * g).isZero() && is_exponent_vector(g);
    const bool seps = check_separating_char0(rep, S).separating;
    ok = ok && size == 6 && S.size() == 6 && invariant && seps;
    why << "char 0: size " << size << ", construction " << S.size() << " vectors, separating " << std::boolalpha
        << seps;

    const MonomialSemigroup pool = small_support_generators(rep, 4);
    MinimalSearchOptions opts;
    opts.cap = 6;
    const MinimalSearch m = minimal_monomial_size(rep, pool, opts);
    ok = ok && m.found && m.size == 6;
    why << "; exhaustive search over " << pool.size() << " pool vectors gives " << (m.found ? m.size : 0);

    const SVSpec two{{2, 2}, {2, 1}, 2};
    const MonomialSemigroup S2 = monomial_min_construction(two);
    const bool seps2 = check_separating_charp(rep, S2, 2).yes;
    ok = ok && monomial_min_size(two) == 4 && S2.size() == 4 && seps2;
    why << "; char 2: size " << monomial_min_size(two) << ", separating " << seps2;
    return {7, ok, why.str()};
}

Line criterion8()
{
    std::ostringstream why;
    const SepVarDecomposition two = sepvar_decompose(segre_weight_matrix({2, 2}));
    std::vector<Containment> got;
    for (const NullconePair& p : two.nullcone_pairs)
        got.push_back(p.classification);
    const std::vector<Containment> want{Containment::NotContained, Containment::Contained, Containment::Contained,
                                        Containment::NotContained};
    bool ok = two.includes_graph && two.simple && two.triples.empty() && got == want;
    std::vector<IndexSet> nc = nullcone(segre_weight_matrix({2, 2})).components;
    ok = ok && nc == std::vector<IndexSet>{{0, 1}, {2, 3}};
    why << "segre(2,2): " << two.nullcone_pairs.size() << " pairs, classifications";
    for (Containment c : got)
        why << ' ' << to_string(c);

    const SepVarDecomposition three = sepvar_decompose(segre_weight_matrix({2, 2, 2}));
    bool all_retained = three.nullcone_pairs.size() == 9 && three.simple && three.triples.empty();
    for (const NullconePair& p : three.nullcone_pairs)
        all_retained = all_retained && p.classification == Containment::NotContained;
    ok = ok && all_retained;
    why << "; segre(2,2,2): " << three.nullcone_pairs.size() << " pairs, all retained " << std::boolalpha
        << all_retained;
    return {8, ok, why.str()};
}

Line criterion9()
{
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> entry(-5, 5);
    int failures = 0;
    const int sets = 1000;
    for (int k = 0; k < sets; ++k) {
        const int dim = 1 + k % 4;
        const int count = 1 + (k / 4) % 7;
        RatMatrix P(dim, count);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < count; ++j)
                P(i, j) = entry(rng);
        const bool inside = in_convex_hull(P, RatVector::Zero(dim));
        const auto delta = separating_functional(P);
        bool ok = inside != delta.has_value();
        if (delta) {
            const RatVector values = to_rational(*delta).transpose() * P;
            ok = ok && (values.array() > 0).all();
        }
        failures += !ok;
    }
    std::ostringstream why;
    why << sets << " point sets, " << failures << " failures";
    return {9, failures == 0, why.str()};
}

} // namespace

int main()
{
    const auto start = std::chrono::steady_clock::now();
    const std::vector<TorusRep> reps = seeded_reps(42, 200, 6);
    std::vector<std::function<Line()>> checks{
        criterion1, criterion2, [&reps] { return criterion3(reps); }, [&reps] { return criterion4(reps); },
        criterion5, criterion6, criterion7, criterion8, criterion9};

    int unexpected = 0;
    for (const auto& check : checks) {
        Line line;
        try {
            line = check();
        } catch (const std::exception& e) {
            line = {static_cast<int>(&check - checks.data()) + 1, false, std::string("exception: ") + e.what()};
        }
        std::cout << "criterion " << line.id << ": " << (line.pass ? "PASS" : "FAIL") << " - " << line.detail;
        if (!line.pass && kKnownUnattainable.count(line.id))
            std::cout << " [known unattainable]";
        std::cout << std::endl;
        if (!line.pass && !kKnownUnattainable.count(line.id))
            ++unexpected;
    }
    const auto secs =
        std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << "elapsed " << secs << "s, unexpected failures: " << unexpected << std::endl;
    return unexpected == 0 ? 0 : 1;
}
