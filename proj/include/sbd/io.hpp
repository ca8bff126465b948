#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sbd/bidiag.hpp"
#include "sbd/families.hpp"
#include "sbd/oracle.hpp"

// JSON document formats. All scalar payloads are canonical text (see
// sbd/scalar.hpp); matrices are row-major with 1-based semantics, which every
// document states in its "layout" field.
//
//   sbd/1         {"schema","layout","n","family","params","nodes","scalar","B","C"[,"transform"]}
//   sbd-factors/1 {"schema","layout","n","family","params","nodes","scalar","variant","factors"[,"transform"]}
//   matrix/1      {"schema","layout","n","scalar","entries"}
//   report        {"max_rel_error_B","max_rel_error_C","worst":{"i","j","in"},"n"[,"seed"]}

namespace sbd {

using Json = nlohmann::json;

template <class S>
const char* scalar_name();
template <>
inline const char* scalar_name<Rational>() {
    return "rational";
}
template <>
inline const char* scalar_name<double>() {
    return "binary64";
}

template <class S>
S parse_scalar_as(std::string_view text);
template <>
inline Rational parse_scalar_as<Rational>(std::string_view text) {
    return parse_rational(text);
}
template <>
inline double parse_scalar_as<double>(std::string_view text) {
    return parse_double(text);
}

// ---- node config -------------------------------------------------------------

// Reads {"family","n","nodes"|"nodes_file","q"/"h"/"weights"/"d"/"s","strict"}.
// Scalars must be strings so exact values survive the trip; n and s are
// integers, strict a bool. nodes_file paths resolve against base_dir.
NodeConfig config_from_json(const Json& j, const std::filesystem::path& base_dir = {});
NodeConfig read_config_file(const std::filesystem::path& path);
Json config_to_json(const NodeConfig& cfg);
Json config_params_json(const NodeConfig& cfg); // the family parameters + strict

// One canonical scalar per line; '#' starts a comment.
std::vector<Rational> read_node_file(const std::filesystem::path& path);

// ---- decomposition documents ---------------------------------------------------

template <class S>
Json sbd_to_json(const SingularityFreeBD<S>& sbd, const NodeConfig& cfg,
                 std::string_view transform = {}) {
    Json j;
    j["schema"] = "sbd/1";
    j["layout"] = "row-major, 1-based";
    j["n"] = sbd.n;
    j["family"] = std::string(family_name(cfg.family));
    j["params"] = config_params_json(cfg);
    Json nodes = Json::array();
    for (const auto& x : cfg.nodes) nodes.push_back(canonical(x));
    j["nodes"] = std::move(nodes);
    j["scalar"] = scalar_name<S>();
    auto dump = [](const Matrix<S>& m) {
        Json rows = Json::array();
        for (int i = 1; i <= m.rows(); ++i) {
            Json row = Json::array();
            for (int k = 1; k <= m.cols(); ++k) row.push_back(canonical(m(i, k)));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    j["B"] = dump(sbd.b);
    j["C"] = dump(sbd.c);
    if (!transform.empty()) j["transform"] = std::string(transform);
    return j;
}

template <class S>
Json factors_to_json(const FactorSequence<S>& fs, const NodeConfig& cfg, std::string_view variant,
                     std::string_view transform = {}) {
    Json j;
    j["schema"] = "sbd-factors/1";
    j["layout"] = "row-major, 1-based";
    j["n"] = fs.n;
    j["family"] = std::string(family_name(cfg.family));
    j["params"] = config_params_json(cfg);
    Json nodes = Json::array();
    for (const auto& x : cfg.nodes) nodes.push_back(canonical(x));
    j["nodes"] = std::move(nodes);
    j["scalar"] = scalar_name<S>();
    j["variant"] = std::string(variant);
    Json factors = Json::array();
    for (const auto& f : fs.factors) {
        Json jf;
        jf["kind"] = f.kind == FactorKind::lower   ? "lower"
                     : f.kind == FactorKind::upper ? "upper"
                                                   : "diagonal";
        jf["band"] = f.band;
        Json diag = Json::array(), off = Json::array();
        for (const auto& v : f.diag) diag.push_back(canonical(v));
        for (const auto& v : f.offdiag) off.push_back(canonical(v));
        jf["diag"] = std::move(diag);
        jf["offdiag"] = std::move(off);
        factors.push_back(std::move(jf));
    }
    j["factors"] = std::move(factors);
    if (!transform.empty()) j["transform"] = std::string(transform);
    return j;
}

template <class S>
Json matrix_to_json(const Matrix<S>& m) {
    Json j;
    j["schema"] = "matrix/1";
    j["layout"] = "row-major, 1-based";
    j["n"] = m.rows();
    j["scalar"] = scalar_name<S>();
    Json rows = Json::array();
    for (int i = 1; i <= m.rows(); ++i) {
        Json row = Json::array();
        for (int k = 1; k <= m.cols(); ++k) row.push_back(canonical(m(i, k)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

// Parsed decomposition document with the payload kept as text; materialize
// with the scalar kind recorded in the file.
struct Document {
    std::string schema;
    NodeConfig config;
    std::string scalar = "rational";
    std::string variant = "standard";
    std::string transform;
    int n = 0;
    std::vector<std::vector<std::string>> b_text, c_text; // sbd/1
    struct FactorText {
        std::string kind;
        int band = 0;
        std::vector<std::string> diag, offdiag;
    };
    std::vector<FactorText> factors_text; // sbd-factors/1
};

Document document_from_json(const Json& j);
Document read_document_file(const std::filesystem::path& path);

template <class S>
SingularityFreeBD<S> materialize_sbd(const Document& doc) {
    if (doc.schema != "sbd/1") throw ParseError("document is not an sbd/1 document");
    SingularityFreeBD<S> out;
    out.n = doc.n;
    auto fill = [&](const std::vector<std::vector<std::string>>& text, int dim) {
        Matrix<S> m(dim, dim);
        if (static_cast<int>(text.size()) != dim) throw ParseError("matrix row count mismatch");
        for (int i = 1; i <= dim; ++i) {
            if (static_cast<int>(text[i - 1].size()) != dim)
                throw ParseError("matrix column count mismatch");
            for (int j = 1; j <= dim; ++j) m(i, j) = parse_scalar_as<S>(text[i - 1][j - 1]);
        }
        return m;
    };
    out.b = fill(doc.b_text, doc.n);
    out.c = fill(doc.c_text, doc.n + 1);
    return out;
}

template <class S>
FactorSequence<S> materialize_factors(const Document& doc) {
    if (doc.schema != "sbd-factors/1") throw ParseError("document is not an sbd-factors/1 document");
    FactorSequence<S> fs;
    fs.n = doc.n;
    for (const auto& ft : doc.factors_text) {
        BidiagonalFactor<S> f;
        f.n = doc.n;
        f.band = ft.band;
        if (ft.kind == "lower")
            f.kind = FactorKind::lower;
        else if (ft.kind == "upper")
            f.kind = FactorKind::upper;
        else if (ft.kind == "diagonal")
            f.kind = FactorKind::diagonal;
        else
            throw ParseError("unknown factor kind \"" + ft.kind + "\"");
        for (const auto& t : ft.diag) f.diag.push_back(parse_scalar_as<S>(t));
        for (const auto& t : ft.offdiag) f.offdiag.push_back(parse_scalar_as<S>(t));
        fs.factors.push_back(std::move(f));
    }
    fs.validate();
    return fs;
}

// ---- reports -------------------------------------------------------------------

Json report_to_json(const VerificationReport& report);

// ---- files ----------------------------------------------------------------------

Json read_json_file(const std::filesystem::path& path);
void write_text_atomic(const std::filesystem::path& path, const std::string& text);
void write_json_atomic(const std::filesystem::path& path, const Json& j);

} // namespace sbd
