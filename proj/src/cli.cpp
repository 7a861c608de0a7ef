#include "torinv/cli.hpp"

#include "torinv/documents.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace torinv::cli {

namespace {

struct Settings {
    std::string rep_path;
    std::string gens_path;
    std::string pool_path;
    std::string verify_path;
    int characteristic = 0;
    std::optional<int> max_dim;
    int charp_cap = kCharPCap;
    std::uint64_t search_budget = kSearchBudget;
    long oracle_modulus = kOracleModulus;
    std::uint64_t oracle_budget = kOracleBudget;
    std::vector<int> restrict_to;
    bool has_restrict = false;
    std::vector<int> support;
    std::vector<int> left;
    std::vector<int> right;
    std::optional<int> bound;
    std::size_t cap = 0;
    std::vector<int> factors;
    std::vector<int> degrees;
    bool segre = false;
};

json read_document(const std::string& path, const std::string& what)
{
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in)
            throw InvalidInput(what + ": cannot open " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(what + ": " + e.what());
    }
}

int hb_cap(const Settings& s) { return s.max_dim.value_or(kHilbertBasisMaxDim); }
int subset_cap(const Settings& s) { return s.max_dim.value_or(kSubsetMaxDim); }

IndexSet one_based(const std::vector<int>& v, const TorusRep& rep, const std::string& field)
{
    return index_set_from_json(json(v), rep.dim(), field);
}

SVSpec sv_spec(const Settings& s)
{
    SVSpec spec{s.factors, s.degrees, s.characteristic};
    spec.validate();
    return spec;
}

json cmd_hilbert_basis(const Settings& s)
{
    const TorusRep rep = rep_from_json(read_document(s.rep_path, "rep"));
    HilbertBasis hb = hilbert_basis(rep.weights(), hb_cap(s));
    if (s.has_restrict)
        hb = restrict_basis(hb, one_based(s.restrict_to, rep, "--restrict"));
    return result_document("hilbert-basis", json{{"elements", to_json(hb.elements)}, {"count", hb.elements.size()}});
}

json cmd_nullcone(const Settings& s)
{
    const TorusRep rep = rep_from_json(read_document(s.rep_path, "rep"));
    const NullconeDecomposition nc = nullcone(rep, subset_cap(s));
    json comps = json::array();
    json functionals = json::array();
    for (const IndexSet& I : nc.components) {
        comps.push_back(index_set_to_json(I));
        functionals.push_back(to_json(*separating_functional(rep.weight_points(I))));
    }
    return result_document("nullcone", json{{"components", comps}}, json{{"functionals", functionals}});
}

json cmd_orbit_closed(const Settings& s)
{
    const TorusRep rep = rep_from_json(read_document(s.rep_path, "rep"));
    const IndexSet I = one_based(s.support, rep, "--support");
    return result_document("orbit-closed", json{{"closed", is_orbit_closed(rep, I)}, {"support", index_set_to_json(I)}});
}

json cmd_sepvar(const Settings& s)
{
    const TorusRep rep = rep_from_json(read_document(s.rep_path, "rep"));
    return result_document("sepvar", sepvar_to_json(sepvar_decompose(rep, subset_cap(s))));
}

json cmd_classify_pair(const Settings& s)
{
    const TorusRep rep = rep_from_json(read_document(s.rep_path, "rep"));
    const IndexSet I = one_based(s.left, rep, "--I");
    const IndexSet J = one_based(s.right, rep, "--J");
    const Containment c = graph_closure_classify(rep, I, J, subset_cap(s));
    return result_document("classify-pair", json{{"I", index_set_to_json(I)},
                                                 {"J", index_set_to_json(J)},
                                                 {"classification", to_string(c)}});
}

json verify_check_sep(const Settings& s, const TorusRep& rep, const MonomialSemigroup& S)
{
    const json doc = read_document(s.verify_path, "verify");
    const json& result = doc.at("result");
    const json& cert = doc.at("certificate");
    bool ok = false;
    if (result.contains("p")) {
        ok = verify_certificate(rep, S, charp_from_json(result, cert, rep.dim()));
    } else {
        const Char0Certificate c = char0_certificate_from_json(cert, rep.dim());
        ok = std::holds_alternative<std::monostate>(c)
                 ? result.at("separating") == true && check_separating_char0(rep, S, hb_cap(s)).separating
                 : result.at("separating") == false && verify_certificate(rep, S, c);
    }
    return result_document("check-sep", json{{"verified", ok}});
}

json cmd_check_sep(const Settings& s)
{
    const TorusRep rep = rep_from_json(read_document(s.rep_path, "rep"));
    const MonomialSemigroup S = generators_from_json(read_document(s.gens_path, "gens"), rep.dim());
    if (!s.verify_path.empty())
        return verify_check_sep(s, rep, S);
    if (s.characteristic == 0) {
        const Char0Verdict v = check_separating_char0(rep, S, hb_cap(s));
        return result_document("check-sep", json{{"separating", v.separating}, {"char", 0}},
                               certificate_to_json(v.certificate));
    }
    const CharPVerdict v = check_separating_charp(rep, S, s.characteristic, s.charp_cap, hb_cap(s));
    json result = charp_to_json(v);
    result["char"] = s.characteristic;
    return result_document("check-sep", result, charp_certificate_to_json(v));
}

json cmd_construct(const Settings& s)
{
    const TorusRep rep = rep_from_json(read_document(s.rep_path, "rep"));
    const int bound = s.bound.value_or(static_cast<int>(2 * rep.rank() + 1));
    const MonomialSemigroup S =
        s.bound ? small_support_generators(rep, bound, hb_cap(s)) : construct_2rplus1(rep, hb_cap(s));
    return result_document("construct", json{{"bound", bound}, {"generators", to_json(S.generators())}});
}

json cmd_kernel_span(const Settings& s)
{
    const TorusRep rep = rep_from_json(read_document(s.rep_path, "rep"));
    const KernelSpan k = kernel_small_support_spans(rep, subset_cap(s));
    return result_document("kernel-span", json{{"spans", k.spans}, {"generators", to_json(k.generators)}});
}

json cmd_min_search(const Settings& s)
{
    const TorusRep rep = rep_from_json(read_document(s.rep_path, "rep"));
    const MonomialSemigroup pool = generators_from_json(read_document(s.pool_path, "pool"), rep.dim());
    MinimalSearchOptions opt;
    opt.cap = s.cap;
    opt.budget = s.search_budget;
    opt.charp_cap = s.charp_cap;
    opt.max_dim = hb_cap(s);
    if (s.characteristic != 0)
        opt.prime = s.characteristic;
    const MinimalSearch m = minimal_monomial_size(rep, pool, opt);
    json indices = json::array();
    for (std::size_t i : m.indices)
        indices.push_back(i + 1);
    json result{{"found", m.found},
                {"pool_relative", m.pool_relative},
                {"pool_size", pool.size()},
                {"largest_size_searched", m.largest_size_searched}};
    if (m.found) {
        result["size"] = m.size;
        result["indices"] = indices;
        result["witness"] = to_json(m.witness.generators());
    }
    return result_document("min-search", result);
}

json cmd_sv_bounds(const Settings& s)
{
    return result_document("sv-bounds", bounds_to_json(separating_size_bounds(sv_spec(s))));
}

json cmd_sv_monomial(const Settings& s)
{
    const SVSpec spec = sv_spec(s);
    const MonomialSemigroup S = monomial_min_construction(spec);
    return result_document("sv-monomial", json{{"size", monomial_min_size(spec)},
                                               {"generators", to_json(S.generators())},
                                               {"exceptional", index_set_to_json(exceptional_factors(spec))}});
}

json cmd_sv_rep(const Settings& s)
{
    if (s.segre)
        return result_document("sv-rep", rep_to_json(segre_weight_matrix(s.factors)));
    return result_document("sv-rep", rep_to_json(sv_weight_matrix(sv_spec(s))));
}

json cmd_oracle(const Settings& s)
{
    const TorusRep rep = rep_from_json(read_document(s.rep_path, "rep"));
    const MonomialSemigroup S = generators_from_json(read_document(s.gens_path, "gens"), rep.dim());
    if (!s.verify_path.empty()) {
        const json doc = read_document(s.verify_path, "verify");
        const json& cert = doc.at("certificate");
        const bool ok = !cert.is_null() && verify_oracle_witness(rep, S, oracle_from_json(cert, rep.dim()));
        return result_document("oracle", json{{"verified", ok}});
    }
    const std::optional<OracleWitness> w = oracle_refute(rep, S, s.oracle_modulus, s.oracle_budget, hb_cap(s));
    return result_document("oracle", json{{"refuted", w.has_value()}, {"modulus", s.oracle_modulus}},
                           w ? oracle_to_json(*w) : json(nullptr));
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Separating invariants of torus representations"};
    app.require_subcommand(1);
    Settings s;

    auto add_rep = [&](CLI::App* sub) { sub->add_option("--rep", s.rep_path, "rep document")->required(); };
    auto add_caps = [&](CLI::App* sub) {
        sub->add_option("--max-dim", s.max_dim, "enumeration cap on n");
        sub->add_option("--charp-cap", s.charp_cap, "largest p-power exponent tried")->capture_default_str();
        sub->add_option("--search-budget", s.search_budget, "subset budget per size")->capture_default_str();
        sub->add_option("--oracle-modulus", s.oracle_modulus, "root-of-unity order")->capture_default_str();
    };
    auto add_sv = [&](CLI::App* sub, bool degrees_required) {
        sub->add_option("--n", s.factors, "factor sizes n_i")->delimiter(',')->required();
        auto* a = sub->add_option("--a", s.degrees, "degrees a_i")->delimiter(',');
        if (degrees_required)
            a->required();
        sub->add_option("--char", s.characteristic, "0 or a prime")->capture_default_str();
    };

    std::map<CLI::App*, std::function<json(const Settings&)>> handlers;
    auto sub = [&](const char* name, const char* help, json (*fn)(const Settings&)) {
        CLI::App* c = app.add_subcommand(name, help);
        handlers[c] = fn;
        add_caps(c);
        return c;
    };

    CLI::App* c = sub("hilbert-basis", "Hilbert basis of the invariant semigroup", cmd_hilbert_basis);
    add_rep(c);
    c->add_option("--restrict", s.restrict_to, "only elements supported in this set")->delimiter(',')
        ->each([&s](const std::string&) { s.has_restrict = true; });

    c = sub("nullcone", "maximal weight sets avoiding 0 in their hull", cmd_nullcone);
    add_rep(c);

    c = sub("orbit-closed", "closed-orbit test for a support", cmd_orbit_closed);
    add_rep(c);
    c->add_option("--support", s.support, "coordinates of the support")->delimiter(',');

    c = sub("sepvar", "separating variety decomposition", cmd_sepvar);
    add_rep(c);

    c = sub("classify-pair", "graph-closure classification of a component pair", cmd_classify_pair);
    add_rep(c);
    c->add_option("--I", s.left, "first component")->delimiter(',')->required();
    c->add_option("--J", s.right, "second component")->delimiter(',')->required();

    c = sub("check-sep", "decide whether generators give a separating algebra", cmd_check_sep);
    add_rep(c);
    c->add_option("--gens", s.gens_path, "generator document")->required();
    c->add_option("--char", s.characteristic, "0 or a prime")->capture_default_str();
    c->add_option("--verify", s.verify_path, "re-verify the certificate in a result document");

    c = sub("construct", "invariants on at most 2r+1 (or --bound) variables", cmd_construct);
    add_rep(c);
    c->add_option("--bound", s.bound, "support bound");

    c = sub("kernel-span", "do kernel vectors on r+1 coordinates span the kernel", cmd_kernel_span);
    add_rep(c);

    c = sub("min-search", "smallest separating subset of a pool", cmd_min_search);
    add_rep(c);
    c->add_option("--pool", s.pool_path, "generator document")->required();
    c->add_option("--char", s.characteristic, "0 or a prime")->capture_default_str();
    c->add_option("--cap", s.cap, "largest subset size (0: pool size)");

    c = sub("sv-bounds", "minimal separating set size of a Segre-Veronese cone", cmd_sv_bounds);
    add_sv(c, true);

    c = sub("sv-monomial", "minimal monomial separating set of a Segre-Veronese cone", cmd_sv_monomial);
    add_sv(c, true);

    c = sub("sv-rep", "weight matrix of a Segre-Veronese cone", cmd_sv_rep);
    add_sv(c, false);
    c->add_flag("--segre", s.segre, "rank r-1 Segre encoding");

    c = sub("oracle", "search for a point pair refuting separation", cmd_oracle);
    add_rep(c);
    c->add_option("--gens", s.gens_path, "generator document")->required();
    c->add_option("--oracle-budget", s.oracle_budget, "number of point pairs tried")->capture_default_str();
    c->add_option("--verify", s.verify_path, "re-verify the witness in a result document");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidInput;
    }

    try {
        for (auto& [command, handler] : handlers) {
            if (command->parsed()) {
                out << handler(s).dump(2) << '\n';
                return kOk;
            }
        }
        err << "no subcommand given\n";
        return kInvalidInput;
    } catch (const ResourceCap& e) {
        err << "resource cap: " << e.what() << '\n';
        return kResourceCap;
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const json::exception& e) {
        err << "invalid input: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

} // namespace torinv::cli
