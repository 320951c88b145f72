#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "census.hpp"
#include "character_system.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "idempotent_system.hpp"
#include "matrix.hpp"
#include "solid.hpp"
#include "structure_constants.hpp"
#include "verify_suite.hpp"

namespace aon {

using Json = nlohmann::json;

// ---- field descriptors ----

inline Json emit_field(const FieldSpec& spec) {
    if (spec.is_rational())
        return Json{{"type", "rational"}};
    return Json{{"type", "prime"}, {"p", spec.modulus()}};
}

inline FieldSpec parse_field(const Json& j) {
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
        throw ParseError("field descriptor must be an object with a \"type\" string");
    const std::string type = j.at("type").get<std::string>();
    if (type == "rational")
        return FieldSpec::rational();
    if (type == "prime") {
        if (!j.contains("p") || !j.at("p").is_number_integer())
            throw ParseError("prime field descriptor needs an integer \"p\"");
        return FieldSpec::prime(j.at("p").get<std::int64_t>());
    }
    throw ParseError("unknown field type \"" + type + "\"");
}

// ---- scalars ----

inline Json emit_scalar(const Scalar& s) { return s.str(); }

inline Scalar parse_scalar_json(const FieldSpec& spec, const Json& j) {
    if (!j.is_string())
        throw ParseError("exact scalars must be JSON strings");
    return parse_scalar(spec, j.get<std::string>());
}

inline Json emit_scalar_list(const std::vector<Scalar>& v) {
    Json out = Json::array();
    for (const Scalar& s : v)
        out.push_back(emit_scalar(s));
    return out;
}

// ---- matrices ----

inline Json emit_entries(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(emit_scalar(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json emit_matrix_document(const Matrix& m) {
    return Json{{"field", emit_field(m.spec())}, {"entries", emit_entries(m)}};
}

inline Matrix parse_entries(const FieldSpec& spec, const Json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("\"entries\" must be a non-empty array of rows");
    const std::size_t rows = j.size();
    if (!j.at(0).is_array() || j.at(0).empty())
        throw ParseError("matrix rows must be non-empty arrays");
    const std::size_t cols = j.at(0).size();
    Matrix m(spec, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = j.at(i);
        if (!row.is_array() || row.size() != cols)
            throw ParseError("matrix rows must all have the same length");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(i, c) = parse_scalar_json(spec, row.at(c));
    }
    return m;
}

inline Matrix parse_matrix_document(const Json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("entries"))
        throw ParseError("matrix document needs \"field\" and \"entries\"");
    const FieldSpec spec = parse_field(j.at("field"));
    Matrix m = parse_entries(spec, j.at("entries"));
    if (m.rows() != m.cols())
        throw ParseError("matrix document entries must be square");
    return m;
}

// ---- structure constant tensors, layout p[i][j][h] ----

inline Json emit_pnum(const StructureConstants& pnum) {
    const std::size_t n = pnum.n();
    Json ii = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        Json jj = Json::array();
        for (std::size_t j = 0; j < n; ++j) {
            Json hh = Json::array();
            for (std::size_t h = 0; h < n; ++h)
                hh.push_back(emit_scalar(pnum.at(i, j, h)));
            jj.push_back(std::move(hh));
        }
        ii.push_back(std::move(jj));
    }
    return ii;
}

inline StructureConstants parse_pnum(const FieldSpec& spec, std::size_t n, const Json& j) {
    if (!j.is_array() || j.size() != n)
        throw ParseError("\"pnum\" must be a (d+1)^3 nested array");
    StructureConstants pnum(spec, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Json& jj = j.at(i);
        if (!jj.is_array() || jj.size() != n)
            throw ParseError("\"pnum\" must be a (d+1)^3 nested array");
        for (std::size_t c = 0; c < n; ++c) {
            const Json& hh = jj.at(c);
            if (!hh.is_array() || hh.size() != n)
                throw ParseError("\"pnum\" must be a (d+1)^3 nested array");
            for (std::size_t h = 0; h < n; ++h)
                pnum.at(i, c, h) = parse_scalar_json(spec, hh.at(h));
        }
    }
    return pnum;
}

inline Json emit_algebra_document(const CharacterAlgebra& alg) {
    return Json{{"field", emit_field(alg.spec())},
                {"d", alg.d()},
                {"pnum", emit_pnum(alg.pnum)}};
}

// Shape-level parse only; the valencies are read off the constant terms
// k_i = p^0_{ii} and the axioms are the caller's domain-level check.
inline CharacterAlgebra parse_algebra_document(const Json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("d") || !j.contains("pnum"))
        throw ParseError("algebra document needs \"field\", \"d\" and \"pnum\"");
    if (!j.at("d").is_number_integer() || j.at("d").get<std::int64_t>() < 0)
        throw ParseError("\"d\" must be a nonnegative integer");
    const FieldSpec spec = parse_field(j.at("field"));
    const std::size_t n = static_cast<std::size_t>(j.at("d").get<std::int64_t>()) + 1;
    StructureConstants pnum = parse_pnum(spec, n, j.at("pnum"));
    std::vector<Scalar> k;
    for (std::size_t i = 0; i < n; ++i)
        k.push_back(pnum.at(i, i, 0));
    return CharacterAlgebra{std::move(pnum), std::move(k)};
}

// ---- reports ----

inline Json emit_witness(const DiagonalWitness& w) {
    return Json{{"h", emit_scalar_list(w.h)}, {"k", emit_scalar_list(w.k)}};
}

inline Json emit_classification(const ClassificationReport& rep) {
    Json out{{"invertible", rep.invertible},
             {"solid", rep.solid},
             {"normalized", rep.normalized},
             {"ao", rep.ao}};
    out["ao_witness"] = rep.ao_witness ? emit_witness(*rep.ao_witness) : Json(nullptr);
    return out;
}

inline Json emit_eigendata(const EigendataReport& rep) {
    return Json{{"p", emit_matrix_document(rep.p)},
                {"q", emit_matrix_document(rep.q)},
                {"nu", emit_scalar(rep.nu)},
                {"k", emit_scalar_list(rep.k)},
                {"kstar", emit_scalar_list(rep.kstar)},
                {"m", emit_scalar_list(rep.m)},
                {"mstar", emit_scalar_list(rep.mstar)},
                {"pnum", emit_pnum(rep.pnum)}};
}

inline Json emit_character_system(const CharacterSystem& sys) {
    Json idem = Json::array();
    for (const std::vector<Scalar>& e : idempotent_coordinates(sys))
        idem.push_back(emit_scalar_list(e));
    return Json{{"field", emit_field(sys.spec())},
                {"d", sys.d()},
                {"eigenmatrix", emit_entries(sys.p)},
                {"valencies", emit_scalar_list(sys.algebra.k)},
                {"idempotents", idem}};
}

inline Json emit_census(const CensusResult& census) {
    Json members = Json::array();
    for (const CensusEntry& entry : census.normalized_solid)
        members.push_back(Json{{"entries", emit_entries(entry.matrix)}, {"ao", entry.ao}});
    return Json{{"field", emit_field(census.spec)},
                {"d", census.d},
                {"candidates", census.candidates.str()},
                {"normalized_solid_count", census.normalized_solid.size()},
                {"aon_count", census.aon_count},
                {"members", std::move(members)}};
}

inline Json emit_verify_report(const VerifyReport& rep) {
    Json checks = Json::array();
    for (const CheckResult& c : rep.checks) {
        const char* status = c.status == CheckStatus::pass     ? "pass"
                             : c.status == CheckStatus::fail   ? "fail"
                                                               : "skipped";
        Json entry{{"name", c.name}, {"status", status}};
        if (!c.detail.empty())
            entry["detail"] = c.detail;
        checks.push_back(std::move(entry));
    }
    return Json{{"all_passed", rep.all_passed()}, {"checks", std::move(checks)}};
}

// strict parse of a whole document from text, with json errors unified
inline Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace aon
