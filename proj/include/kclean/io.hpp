#ifndef KCLEAN_IO_HPP
#define KCLEAN_IO_HPP

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cleanness.hpp"
#include "exponents.hpp"
#include "ideal.hpp"
#include "multicomplex.hpp"
#include "polarization.hpp"
#include "simplicial.hpp"

/**
 * @file io.hpp
 *
 * JSON encodings. Exponent vectors are arrays whose entries are integers or
 * the string "inf". Variables and vertices are 1-based in every file format.
 *
 *   ideal         {"n": 2, "gens": [[4,0],[3,1]]}
 *   multicomplex  {"n": 2, "facets": [[2,"inf"],[3,0]]}
 *   complex       {"vertices": 6, "facets": [[1,2,4],[1,2,5]]}
 */

namespace kclean::io {

using json = nlohmann::json;

inline json to_json(Exponent e) { return e.is_inf() ? json("inf") : json(e.value()); }

inline json to_json(const ExpVec& v) {
    json out = json::array();
    for (auto e : v) {
        out.push_back(to_json(e));
    }
    return out;
}

inline Exponent exponent_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") {
        return kInf;
    }
    if (j.is_number_integer() && j.get<long long>() >= 0 && j.get<long long>() < (1LL << 30)) {
        return Exponent(static_cast<int>(j.get<long long>()));
    }
    throw Error("expected a nonnegative integer or \"inf\", got " + j.dump());
}

inline ExpVec expvec_from_json(const json& j, std::size_t n) {
    if (!j.is_array() || j.size() != n) {
        throw Error("expected an array of " + std::to_string(n) + " exponents, got " + j.dump());
    }
    ExpVec v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = exponent_from_json(j[i]);
    }
    return v;
}

inline std::size_t positive_size(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 1 ||
        j[key].get<long long>() > static_cast<long long>(VarSet::kMaxVars)) {
        throw Error(std::string("field \"") + key + "\" must be an integer between 1 and 64");
    }
    return static_cast<std::size_t>(j[key].get<long long>());
}

inline json to_json(const MonomialIdeal& I) {
    json gens = json::array();
    for (const auto& g : I.gens()) {
        gens.push_back(to_json(g));
    }
    return {{"n", I.nvars()}, {"gens", gens}};
}

inline MonomialIdeal ideal_from_json(const json& j) {
    const std::size_t n = positive_size(j, "n");
    if (!j.contains("gens") || !j["gens"].is_array()) {
        throw Error("ideal needs a \"gens\" array");
    }
    if (j["gens"].empty()) {
        return MonomialIdeal::zero(n);
    }
    std::vector<ExpVec> gens;
    for (const auto& g : j["gens"]) {
        gens.push_back(expvec_from_json(g, n));
        if (!gens.back().is_finite()) {
            throw Error("ideal generators must be finite");
        }
    }
    return MonomialIdeal::from_generators(n, std::move(gens));
}

inline json to_json(const MonomialPrime& p) {
    json vars = json::array();
    for (auto i : p.vars().indices()) {
        vars.push_back(i + 1);
    }
    return vars;
}

inline json to_json(VarSet s) {
    json out = json::array();
    for (auto i : s.indices()) {
        out.push_back(i + 1);
    }
    return out;
}

inline json to_json(const Multicomplex& g) {
    json facets = json::array();
    for (const auto& f : g.facets()) {
        facets.push_back(to_json(f));
    }
    json maximal = json::array();
    for (const auto& m : g.maximal()) {
        maximal.push_back(to_json(m));
    }
    return {{"n", g.nvars()}, {"facets", facets}, {"maximal", maximal}};
}

/// The listed elements generate the multicomplex; they need not be exactly its facets.
inline Multicomplex multicomplex_from_json(const json& j) {
    const std::size_t n = positive_size(j, "n");
    if (!j.contains("facets") || !j["facets"].is_array()) {
        throw Error("multicomplex needs a \"facets\" array");
    }
    std::vector<ExpVec> elems;
    for (const auto& f : j["facets"]) {
        elems.push_back(expvec_from_json(f, n));
    }
    return Multicomplex::generated_by(n, std::move(elems));
}

inline json to_json(const SimplicialComplex& d) {
    json facets = json::array();
    for (auto f : d.facets()) {
        facets.push_back(to_json(f));
    }
    return {{"vertices", d.vertices()}, {"facets", facets}};
}

inline VarSet face_from_json(const json& j, std::size_t n) {
    if (!j.is_array()) {
        throw Error("a face must be an array of vertex labels, got " + j.dump());
    }
    VarSet s;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > static_cast<long long>(n)) {
            throw Error("vertex label " + v.dump() + " is outside 1.." + std::to_string(n));
        }
        s.insert(static_cast<std::size_t>(v.get<long long>() - 1));
    }
    return s;
}

inline SimplicialComplex complex_from_json(const json& j) {
    const std::size_t n = positive_size(j, "vertices");
    if (!j.contains("facets") || !j["facets"].is_array()) {
        throw Error("complex needs a \"facets\" array");
    }
    std::vector<VarSet> faces;
    for (const auto& f : j["facets"]) {
        faces.push_back(face_from_json(f, n));
    }
    return SimplicialComplex::from_facets(n, std::move(faces));
}

inline json to_json(const SheddingTree& t) {
    if (t.is_leaf()) {
        return {{"multicomplex", to_json(t.complex)}};
    }
    return {{"face", to_json(*t.face)}, {"link", to_json(*t.link)}, {"deletion", to_json(*t.deletion)}};
}

inline json to_json(const SimplicialSheddingTree& t) {
    if (!t.face) {
        return {{"complex", to_json(t.complex)}};
    }
    return {{"face", to_json(*t.face)}, {"link", to_json(*t.link)}, {"deletion", to_json(*t.deletion)}};
}

inline json to_json(const IdealTree& t) {
    if (t.is_leaf()) {
        return {{"ideal", to_string(t.ideal)}};
    }
    return {{"ideal", to_string(t.ideal)},
            {"monomial", monomial_string(*t.monomial)},
            {"colon", to_json(*t.colon)},
            {"sum", to_json(*t.sum)}};
}

inline std::string filtration_line(const FiltrationStep& s) {
    return to_string(s.before) + " --" + monomial_string(s.witness) + "--> " + to_string(s.after) + " : " +
           to_string(s.prime);
}

inline json to_json(const PrimeFiltration& f) {
    json steps = json::array();
    for (const auto& s : f.steps) {
        steps.push_back({{"before", to_json(s.before)},
                         {"witness", to_json(s.witness)},
                         {"after", to_json(s.after)},
                         {"prime", to_json(s.prime)},
                         {"text", filtration_line(s)}});
    }
    return steps;
}

inline json to_json(const PolarizationMap& pm) { return {{"blocks", pm.blocks()}}; }

enum class FileKind { ideal, multicomplex, complex };

inline FileKind classify(const json& j) {
    if (!j.is_object()) {
        throw Error("input must be a JSON object");
    }
    if (j.contains("gens")) {
        return FileKind::ideal;
    }
    if (j.contains("vertices")) {
        return FileKind::complex;
    }
    if (j.contains("facets")) {
        return FileKind::multicomplex;
    }
    throw Error("cannot tell whether the input is an ideal, a multicomplex or a complex");
}

inline json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error("malformed JSON in " + path + ": " + e.what());
    }
}

}  // namespace kclean::io

#endif
