#include "torinv/documents.hpp"

#include <regex>

namespace torinv {

namespace {

const Integer kSafeLimit = Integer(1) << 53;

[[noreturn]] void bad(const std::string& field, const std::string& what)
{
    throw InvalidInput(field + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& field)
{
    if (!obj.is_object())
        bad(field, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        bad(field + "." + key, "missing");
    return *it;
}

std::string at(const std::string& field, std::size_t k) { return field + "[" + std::to_string(k) + "]"; }

} // namespace

json to_json(const Integer& v)
{
    if (v <= kSafeLimit && v >= -kSafeLimit)
        return v.convert_to<std::int64_t>();
    return v.str();
}

json to_json(const IntVector& v)
{
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(to_json(v(i)));
    return out;
}

json to_json(const std::vector<IntVector>& vs)
{
    json out = json::array();
    for (const IntVector& v : vs)
        out.push_back(to_json(v));
    return out;
}

json index_set_to_json(const IndexSet& I)
{
    json out = json::array();
    for (int i : I)
        out.push_back(i + 1);
    return out;
}

Integer integer_from_json(const json& j, const std::string& field)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        static const std::regex decimal("-?[0-9]+");
        const std::string& s = j.get_ref<const std::string&>();
        if (!std::regex_match(s, decimal))
            bad(field, "not a decimal integer");
        return Integer(s);
    }
    bad(field, "expected an integer");
}

IntVector vector_from_json(const json& j, const std::string& field)
{
    if (!j.is_array())
        bad(field, "expected an array of integers");
    IntVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t k = 0; k < j.size(); ++k)
        v(static_cast<Eigen::Index>(k)) = integer_from_json(j[k], at(field, k));
    return v;
}

IndexSet index_set_from_json(const json& j, Eigen::Index n, const std::string& field)
{
    if (!j.is_array())
        bad(field, "expected an array of 1-based indices");
    IndexSet out;
    for (std::size_t k = 0; k < j.size(); ++k) {
        if (!j[k].is_number_integer())
            bad(at(field, k), "expected an integer index");
        const auto i = j[k].get<std::int64_t>();
        if (i < 1 || i > n)
            bad(at(field, k), "index " + std::to_string(i) + " outside 1.." + std::to_string(n));
        out.push_back(static_cast<int>(i - 1));
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        bad(field, "repeated index");
    return out;
}

TorusRep rep_from_json(const json& doc)
{
    const json& rank = require(doc, "rank", "rep");
    if (!rank.is_number_integer() || rank.get<std::int64_t>() < 1)
        bad("rep.rank", "expected a positive integer");
    const auto r = rank.get<std::int64_t>();
    const json& weights = require(doc, "weights", "rep");
    if (!weights.is_array() || weights.empty())
        bad("rep.weights", "expected a nonempty array of weight vectors");
    IntMatrix W(r, static_cast<Eigen::Index>(weights.size()));
    for (std::size_t k = 0; k < weights.size(); ++k) {
        const IntVector col = vector_from_json(weights[k], at("rep.weights", k));
        if (col.size() != r)
            bad(at("rep.weights", k), "has length " + std::to_string(col.size()) + ", expected rank " +
                                          std::to_string(r));
        W.col(static_cast<Eigen::Index>(k)) = col;
    }
    try {
        return TorusRep(std::move(W));
    } catch (const InvalidInput& e) {
        bad("rep.weights", e.what());
    }
}

json rep_to_json(const TorusRep& rep)
{
    json weights = json::array();
    for (Eigen::Index j = 0; j < rep.dim(); ++j)
        weights.push_back(to_json(IntVector(rep.weights().col(j))));
    return json{{"rank", rep.rank()}, {"weights", weights}};
}

MonomialSemigroup generators_from_json(const json& doc, Eigen::Index n)
{
    const json& gens = require(doc, "generators", "gens");
    if (!gens.is_array())
        bad("gens.generators", "expected an array of exponent vectors");
    std::vector<IntVector> out;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        IntVector v = vector_from_json(gens[k], at("gens.generators", k));
        if (v.size() != n)
            bad(at("gens.generators", k), "has length " + std::to_string(v.size()) + ", expected " +
                                              std::to_string(n));
        out.push_back(std::move(v));
    }
    try {
        return MonomialSemigroup(n, std::move(out));
    } catch (const InvalidInput& e) {
        bad("gens.generators", e.what());
    }
}

json generators_to_json(const MonomialSemigroup& S) { return json{{"generators", to_json(S.generators())}}; }

json certificate_to_json(const Char0Certificate& cert)
{
    if (const auto* lf = std::get_if<LatticeFailure>(&cert))
        return json{{"kind", "lattice"}, {"I", index_set_to_json(lf->I)}, {"alpha", to_json(lf->alpha)}};
    if (const auto* sf = std::get_if<SupportFailure>(&cert))
        return json{{"kind", "support"}, {"alpha", to_json(sf->alpha)}, {"i", sf->coordinate + 1}};
    return nullptr;
}

Char0Certificate char0_certificate_from_json(const json& j, Eigen::Index n)
{
    if (j.is_null())
        return std::monostate{};
    const json& kind = require(j, "kind", "certificate");
    if (kind == "lattice") {
        return LatticeFailure{index_set_from_json(require(j, "I", "certificate"), n, "certificate.I"),
                              vector_from_json(require(j, "alpha", "certificate"), "certificate.alpha")};
    }
    if (kind == "support") {
        const IndexSet i = index_set_from_json(json::array({require(j, "i", "certificate")}), n, "certificate.i");
        return SupportFailure{vector_from_json(require(j, "alpha", "certificate"), "certificate.alpha"), i[0]};
    }
    bad("certificate.kind", "expected \"lattice\" or \"support\"");
}

json charp_to_json(const CharPVerdict& v)
{
    return json{{"separating", v.yes ? "Yes" : "NoUpTo"}, {"m", v.m}, {"p", v.p}};
}

json charp_certificate_to_json(const CharPVerdict& v)
{
    if (!v.yes)
        return json{{"obstruction", v.obstruction ? to_json(*v.obstruction) : json(nullptr)}};
    json ws = json::array();
    for (const PowerWitness& w : v.witnesses)
        ws.push_back(json{{"h", to_json(w.h)}, {"m", w.m}, {"coefficients", to_json(w.coefficients)}});
    return json{{"witnesses", ws}};
}

CharPVerdict charp_from_json(const json& result, const json& certificate, Eigen::Index n)
{
    CharPVerdict v;
    const json& verdict = require(result, "separating", "result");
    if (verdict != "Yes" && verdict != "NoUpTo")
        bad("result.separating", "expected \"Yes\" or \"NoUpTo\"");
    v.yes = verdict == "Yes";
    const json& m = require(result, "m", "result");
    const json& p = require(result, "p", "result");
    if (!m.is_number_integer() || !p.is_number_integer())
        bad("result", "m and p must be integers");
    v.m = m.get<int>();
    v.p = p.get<int>();
    if (v.yes) {
        const json& ws = require(certificate, "witnesses", "certificate");
        if (!ws.is_array())
            bad("certificate.witnesses", "expected an array");
        for (std::size_t k = 0; k < ws.size(); ++k) {
            const std::string f = at("certificate.witnesses", k);
            PowerWitness w;
            w.h = vector_from_json(require(ws[k], "h", f), f + ".h");
            w.coefficients = vector_from_json(require(ws[k], "coefficients", f), f + ".coefficients");
            const json& wm = require(ws[k], "m", f);
            if (!wm.is_number_integer())
                bad(f + ".m", "expected an integer");
            w.m = wm.get<int>();
            if (w.h.size() != n)
                bad(f + ".h", "wrong length");
            v.witnesses.push_back(std::move(w));
        }
    } else {
        v.obstruction = vector_from_json(require(certificate, "obstruction", "certificate"), "certificate.obstruction");
    }
    return v;
}

json point_to_json(const TorusPoint& p)
{
    json coords = json::array();
    for (const auto& c : p.coords)
        coords.push_back(c ? json(*c) : json(nullptr));
    return json{{"modulus", p.modulus}, {"coords", coords}};
}

TorusPoint point_from_json(const json& j, Eigen::Index n, const std::string& field)
{
    TorusPoint p;
    const json& m = require(j, "modulus", field);
    if (!m.is_number_integer() || m.get<std::int64_t>() < 1)
        bad(field + ".modulus", "expected a positive integer");
    p.modulus = m.get<long>();
    const json& coords = require(j, "coords", field);
    if (!coords.is_array() || static_cast<Eigen::Index>(coords.size()) != n)
        bad(field + ".coords", "expected " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (coords[k].is_null()) {
            p.coords.emplace_back();
            continue;
        }
        if (!coords[k].is_number_integer())
            bad(at(field + ".coords", k), "expected null or an integer class");
        const long c = coords[k].get<long>();
        if (c < 0 || c >= p.modulus)
            bad(at(field + ".coords", k), "class outside 0..modulus-1");
        p.coords.emplace_back(c);
    }
    return p;
}

json oracle_to_json(const OracleWitness& w)
{
    return json{{"u", point_to_json(w.u)}, {"v", point_to_json(w.v)}, {"alpha", to_json(w.alpha)}};
}

OracleWitness oracle_from_json(const json& j, Eigen::Index n)
{
    return OracleWitness{point_from_json(require(j, "u", "certificate"), n, "certificate.u"),
                         point_from_json(require(j, "v", "certificate"), n, "certificate.v"),
                         vector_from_json(require(j, "alpha", "certificate"), "certificate.alpha")};
}

json bounds_to_json(const BoundsReport& b)
{
    return json{{"case", b.case_id},
                {"s", {b.s_lower, b.s_upper}},
                {"s_prime", {b.s_prime_lower, b.s_prime_upper}},
                {"reduced_degrees", b.reduced_degrees}};
}

json sepvar_to_json(const SepVarDecomposition& d)
{
    json pairs = json::array();
    for (const NullconePair& p : d.nullcone_pairs)
        pairs.push_back(json{{"I", index_set_to_json(p.I)},
                             {"J", index_set_to_json(p.J)},
                             {"classification", to_string(p.classification)}});
    json triples = json::array();
    for (const SepVarTriple& t : d.triples)
        triples.push_back(
            json{{"K", index_set_to_json(t.K)}, {"I", index_set_to_json(t.I)}, {"J", index_set_to_json(t.J)}});
    return json{{"includes_graph", d.includes_graph},
                {"simple", d.simple},
                {"nullcone_pairs", pairs},
                {"triples", triples}};
}

json result_document(const std::string& command, json result, json certificate)
{
    return json{{"command", command},
                {"result", std::move(result)},
                {"certificate", std::move(certificate)},
                {"version", kVersion}};
}

} // namespace torinv
