#pragma once

#include "cea/central_elements.hpp"
#include "cea/graph_invariants.hpp"
#include "cea/invariants.hpp"
#include "cea/lie_algebra.hpp"
#include "cea/uea.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace cea {

using Json = nlohmann::json;

/// Parses "glN" / "soN" / "g2".
inline LieAlgebra algebra_by_name(const std::string &name)
{
    if (name == "g2") return LieAlgebra::make_g2();
    if (name.size() >= 3 && name.substr(0, 2) == "gl")
        return LieAlgebra::make_gl(std::stoi(name.substr(2)));
    if (name.size() >= 3 && name.substr(0, 2) == "so")
        return LieAlgebra::make_so(std::stoi(name.substr(2)));
    throw std::invalid_argument("unknown algebra '" + name + "' (expected glN, soN or g2)");
}

inline Json element_to_json(const UEAElement &e)
{
    Json terms = Json::array();
    for (const auto &[m, c] : e.terms) {
        Json mono = Json::array();
        for (uint16_t x : m) mono.push_back(int(x));
        terms.push_back(Json{{"monomial", mono}, {"coeff", c.str()}});
    }
    return Json{{"algebra", e.algebra ? e.algebra->name() : ""}, {"terms", terms}};
}

inline UEAElement element_from_json(const LieAlgebra &alg, const Json &j)
{
    if (j.at("algebra").get<std::string>() != alg.name())
        throw std::invalid_argument("element_from_json: algebra name mismatch");
    UEAElement e;
    e.algebra = &alg;
    for (const auto &t : j.at("terms")) {
        PBWMonomial m;
        for (const auto &x : t.at("monomial")) {
            int idx = x.get<int>();
            if (idx < 0 || idx >= alg.dim())
                throw std::invalid_argument("element_from_json: basis index out of range");
            m.push_back(uint16_t(idx));
        }
        if (!std::is_sorted(m.begin(), m.end()))
            throw std::invalid_argument("element_from_json: monomial not nondecreasing");
        e.add_term(std::move(m), Rational::from_string(t.at("coeff").get<std::string>()));
    }
    return e;
}

inline Json algebra_info_json(const LieAlgebra &alg)
{
    Json labels = Json::array();
    for (const auto &l : alg.basis_labels()) labels.push_back(l);
    const LMatrix L = build_L(alg);
    Json relations = Json::array();
    for (const auto &rel : L.relations) relations.push_back(rel.label);
    return Json{{"name", alg.name()},
                {"dim", alg.dim()},
                {"rep_dim", alg.rep_dim()},
                {"basis_labels", labels},
                {"structure_constant_count", alg.structure_constants().nonzero_count()},
                {"relations", relations}};
}

inline InvariantGraph graph_from_json(const Json &j)
{
    InvariantGraph g;
    for (const auto &vj : j.at("vertices")) {
        InvariantGraph::Vertex v;
        const std::string color = vj.at("color").get<std::string>();
        if (color == "white")
            v.color = InvariantGraph::Color::white;
        else if (color == "black")
            v.color = InvariantGraph::Color::black;
        else
            throw std::invalid_argument("graph_from_json: color must be white or black");
        if (v.color == InvariantGraph::Color::black) {
            for (const auto &sj : vj.at("slots")) {
                const std::string end = sj.at("end").get<std::string>();
                if (end != "tail" && end != "head")
                    throw std::invalid_argument("graph_from_json: end must be tail or head");
                v.slots.push_back({sj.at("edge").get<int>(), end == "head"});
            }
        }
        g.vertices.push_back(std::move(v));
    }
    for (const auto &ej : j.at("edges"))
        g.edges.push_back({ej.at("tail").get<int>(), ej.at("head").get<int>()});
    return g;
}

inline Json invariance_to_json(const LieAlgebra &alg, const InvarianceVerdict &v)
{
    Json j{{"invariant", v.invariant}};
    if (!v.invariant) {
        j["witness"] = Json{{"generator", alg.basis_labels()[v.witness_generator]},
                            {"residual_terms", v.witness_residual.term_count()},
                            {"residual_sample", v.witness_residual.str(4)}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

inline Json centrality_to_json(const LieAlgebra &alg, const CentralityVerdict &v)
{
    Json j{{"central", v.central}};
    if (!v.central) {
        j["witness"] = Json{{"generator", alg.basis_labels()[v.witness_generator]},
                            {"residual_terms", v.witness_residual.term_count()}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

inline Json report_to_json(const CentralElementReport &r, const LieAlgebra &alg,
                           bool include_element = true)
{
    Json params{{"algebra", r.algebra}};
    if (r.k > 0) params["k"] = r.k;
    if (r.full) params["full"] = true;
    if (!r.row_partition.empty()) {
        params["row_partition"] = r.row_partition;
        params["col_partition"] = r.col_partition;
    }
    Json metadata{{"normalization", r.normalization.str()},
                  {"source_poly_terms", r.source_poly_terms},
                  {"element_terms", r.element.term_count()}};
    if (!r.vanishing_parts.empty()) metadata["vanishing_omega_orders"] = r.vanishing_parts;
    Json j{{"family", r.family},
           {"parameters", params},
           {"metadata", metadata},
           {"verdict", centrality_to_json(alg, r.centrality)}};
    if (include_element) j["element"] = element_to_json(r.element);
    return j;
}

} // namespace cea
