#include "sbd/io.hpp"

#include <fstream>
#include <sstream>

#include <unistd.h>

namespace sbd {

namespace {

Rational scalar_field(const Json& j, const char* key) {
    const auto& v = j.at(key);
    if (!v.is_string())
        throw ParseError(std::string("field \"") + key +
                         "\" must be a string holding a canonical scalar");
    return parse_rational(v.get<std::string>());
}

} // namespace

NodeConfig config_from_json(const Json& j, const std::filesystem::path& base_dir) {
    NodeConfig cfg;
    if (!j.is_object()) throw ParseError("config must be a JSON object");
    if (!j.contains("family") || !j.at("family").is_string())
        throw ParseError("config needs a \"family\" string");
    auto fam = family_from_name(j.at("family").get<std::string>());
    if (!fam) throw ParseError("unknown family \"" + j.at("family").get<std::string>() + "\"");
    cfg.family = *fam;

    if (j.contains("nodes_file")) {
        std::filesystem::path p = j.at("nodes_file").get<std::string>();
        if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
        cfg.nodes = read_node_file(p);
    } else if (j.contains("nodes")) {
        const auto& arr = j.at("nodes");
        if (!arr.is_array()) throw ParseError("\"nodes\" must be an array of canonical scalars");
        for (const auto& v : arr) {
            if (!v.is_string()) throw ParseError("nodes must be strings holding canonical scalars");
            cfg.nodes.push_back(parse_rational(v.get<std::string>()));
        }
    } else {
        throw ParseError("config needs \"nodes\" or \"nodes_file\"");
    }
    cfg.n = static_cast<int>(cfg.nodes.size());
    if (j.contains("n")) {
        if (!j.at("n").is_number_integer()) throw ParseError("\"n\" must be an integer");
        int n = j.at("n").get<int>();
        if (n != cfg.n)
            throw ParseError("\"n\" = " + std::to_string(n) + " disagrees with " +
                             std::to_string(cfg.n) + " nodes");
    }
    if (j.contains("q")) cfg.q = scalar_field(j, "q");
    if (j.contains("h")) cfg.h = scalar_field(j, "h");
    if (j.contains("d")) cfg.d = scalar_field(j, "d");
    if (j.contains("s")) {
        if (!j.at("s").is_number_integer()) throw ParseError("\"s\" must be an integer");
        cfg.pole_multiplicity = j.at("s").get<int>();
    }
    if (j.contains("weights")) {
        const auto& arr = j.at("weights");
        if (!arr.is_array()) throw ParseError("\"weights\" must be an array of canonical scalars");
        for (const auto& v : arr) {
            if (!v.is_string()) throw ParseError("weights must be strings holding canonical scalars");
            cfg.weights.push_back(parse_rational(v.get<std::string>()));
        }
    }
    if (j.contains("strict")) {
        if (!j.at("strict").is_boolean()) throw ParseError("\"strict\" must be a bool");
        cfg.strict = j.at("strict").get<bool>();
    }
    return cfg;
}

NodeConfig read_config_file(const std::filesystem::path& path) {
    return config_from_json(read_json_file(path), path.parent_path());
}

Json config_params_json(const NodeConfig& cfg) {
    Json p = Json::object();
    switch (cfg.family) {
    case Family::vandermonde: break;
    case Family::q_bernstein_vandermonde:
    case Family::lupas: p["q"] = canonical(cfg.q); break;
    case Family::h_bernstein_vandermonde: p["h"] = canonical(cfg.h); break;
    case Family::rational_bernstein_vandermonde: {
        Json w = Json::array();
        for (const auto& v : cfg.weights) w.push_back(canonical(v));
        p["weights"] = std::move(w);
        break;
    }
    case Family::cauchy_vandermonde_1pole:
        p["d"] = canonical(cfg.d);
        p["s"] = cfg.pole_multiplicity;
        break;
    }
    p["strict"] = cfg.strict;
    return p;
}

Json config_to_json(const NodeConfig& cfg) {
    Json j = config_params_json(cfg);
    j["family"] = std::string(family_name(cfg.family));
    j["n"] = cfg.n;
    Json nodes = Json::array();
    for (const auto& x : cfg.nodes) nodes.push_back(canonical(x));
    j["nodes"] = std::move(nodes);
    return j;
}

std::vector<Rational> read_node_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open node file " + path.string());
    std::vector<Rational> nodes;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        try {
            nodes.push_back(parse_rational(line.substr(b, e - b + 1)));
        } catch (const Error& err) {
            throw ParseError(path.string() + ":" + std::to_string(lineno) + ": " + err.what());
        }
    }
    return nodes;
}

Document document_from_json(const Json& j) {
    Document doc;
    if (!j.is_object() || !j.contains("schema") || !j.at("schema").is_string())
        throw ParseError("document needs a \"schema\" string");
    doc.schema = j.at("schema").get<std::string>();
    if (doc.schema != "sbd/1" && doc.schema != "sbd-factors/1")
        throw ParseError("unsupported schema \"" + doc.schema + "\"");

    Json cfg_json = j.contains("params") ? j.at("params") : Json::object();
    cfg_json["family"] = j.at("family");
    cfg_json["nodes"] = j.at("nodes");
    doc.config = config_from_json(cfg_json);
    doc.n = j.at("n").get<int>();
    if (doc.n != doc.config.n)
        throw ParseError("document \"n\" disagrees with the node count");
    doc.scalar = j.at("scalar").get<std::string>();
    if (doc.scalar != "rational" && doc.scalar != "binary64")
        throw ParseError("unsupported scalar kind \"" + doc.scalar + "\"");
    if (j.contains("transform")) doc.transform = j.at("transform").get<std::string>();
    if (j.contains("variant")) doc.variant = j.at("variant").get<std::string>();

    auto read_rows = [](const Json& rows) {
        std::vector<std::vector<std::string>> out;
        if (!rows.is_array()) throw ParseError("matrix payload must be an array of arrays");
        for (const auto& row : rows) {
            if (!row.is_array()) throw ParseError("matrix payload must be an array of arrays");
            std::vector<std::string> r;
            for (const auto& v : row) {
                if (!v.is_string()) throw ParseError("matrix entries must be canonical strings");
                r.push_back(v.get<std::string>());
            }
            out.push_back(std::move(r));
        }
        return out;
    };
    if (doc.schema == "sbd/1") {
        doc.b_text = read_rows(j.at("B"));
        doc.c_text = read_rows(j.at("C"));
    } else {
        for (const auto& jf : j.at("factors")) {
            Document::FactorText ft;
            ft.kind = jf.at("kind").get<std::string>();
            ft.band = jf.at("band").get<int>();
            for (const auto& v : jf.at("diag")) ft.diag.push_back(v.get<std::string>());
            for (const auto& v : jf.at("offdiag")) ft.offdiag.push_back(v.get<std::string>());
            doc.factors_text.push_back(std::move(ft));
        }
    }
    return doc;
}

Document read_document_file(const std::filesystem::path& path) {
    return document_from_json(read_json_file(path));
}

Json report_to_json(const VerificationReport& report) {
    Json j;
    j["max_rel_error_B"] = report.max_rel_error_B.str();
    j["max_rel_error_C"] = report.max_rel_error_C.str();
    j["worst"] = Json{{"i", report.worst_i},
                      {"j", report.worst_j},
                      {"in", std::string(1, report.worst_in)}};
    j["n"] = report.n;
    if (report.seed) j["seed"] = *report.seed;
    return j;
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return j;
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
    std::filesystem::path dir = path.parent_path();
    std::filesystem::path tmp =
        (dir.empty() ? std::filesystem::path(".") : dir) /
        (path.filename().string() + ".tmp." + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw ParseError("cannot write " + tmp.string());
        out << text;
        if (!out) throw ParseError("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

void write_json_atomic(const std::filesystem::path& path, const Json& j) {
    write_text_atomic(path, j.dump(2) + "\n");
}

} // namespace sbd
