// sbdtool: construct, verify, and inspect singularity-free bidiagonal
// decompositions of Vandermonde-type matrices.
//
// Exit codes: 0 success, 1 a requested check failed, 2 usage or input error.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "sbd/sbd.hpp"

namespace fs = std::filesystem;
using namespace sbd;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct ConfigArgs {
    std::string config_path;
    std::string nodes_path;
    bool force_strict = false;
    bool force_permissive = false;

    NodeConfig load() const {
        NodeConfig cfg = read_config_file(config_path);
        if (!nodes_path.empty()) {
            cfg.nodes = read_node_file(nodes_path);
            cfg.n = static_cast<int>(cfg.nodes.size());
        }
        if (force_strict) cfg.strict = true;
        if (force_permissive) cfg.strict = false;
        return cfg;
    }
};

void add_config_options(CLI::App* cmd, ConfigArgs& args) {
    cmd->add_option("config", args.config_path, "NodeConfig JSON file")->required();
    cmd->add_option("--nodes", args.nodes_path, "node file overriding the config's nodes");
    auto* s = cmd->add_flag("--strict", args.force_strict, "force strict-mode validation");
    cmd->add_flag("--permissive", args.force_permissive, "disable strict-mode validation")
        ->excludes(s);
}

void emit(const Json& doc, const std::string& out) {
    if (out.empty())
        std::cout << doc.dump(2) << "\n";
    else
        write_json_atomic(out, doc);
}

template <class S>
Json decompose_document(const NodeConfig& cfg, bool fix_corner, bool scaled) {
    if (scaled) {
        auto fseq = sbd_rbv_scaled<S>(cfg);
        if (fix_corner) fseq = fix_bottom_right(std::move(fseq));
        return factors_to_json(fseq, cfg, "scaled", fix_corner ? "fix-corner" : "");
    }
    auto bd = decompose<S>(cfg);
    std::string transform;
    if (fix_corner) {
        bd = factors_to_sbd(fix_bottom_right(sbd_expand(bd)));
        transform = "fix-corner";
    }
    return sbd_to_json(bd, cfg, transform);
}

int run_decompose(const ConfigArgs& args, const std::string& scalar, const std::string& out,
                  bool fix_corner, const std::string& variant) {
    NodeConfig cfg = args.load();
    cfg.validate();
    bool scaled = variant == "scaled";
    if (scaled && cfg.family != Family::rational_bernstein_vandermonde)
        throw DomainError("--variant scaled applies to the rational Bernstein-Vandermonde family");
    Json doc = scalar == "f64" ? decompose_document<double>(cfg, fix_corner, scaled)
                               : decompose_document<Rational>(cfg, fix_corner, scaled);
    emit(doc, out);
    return kOk;
}

int run_verify(const ConfigArgs& args, int trials, std::uint64_t seed, const std::string& out) {
    NodeConfig cfg = args.load();
    cfg.validate();

    auto dense = dense_matrix<Rational>(cfg);
    auto exact = decompose<Rational>(cfg);
    bool recon_ok = reconstruct(sbd_expand(exact)) == dense;
    std::cerr << "reconstruction: " << (recon_ok ? "exact match" : "MISMATCH") << " (n = " << cfg.n
              << ")\n";

    auto f64 = decompose<double>(cfg);
    VerificationReport report = compare_sbd(f64, exact);
    report.seed = seed;
    Rational thr = accuracy_threshold(cfg.n);
    RelativeError maxe = report.max_rel_error();
    bool float_ok = !maxe.is_infinite() && maxe.value() <= thr;
    std::cerr << "binary64 vs exact: max relative error " << maxe.str() << " at "
              << report.worst_in << "(" << report.worst_i << "," << report.worst_j << "), "
              << (float_ok ? "within" : "EXCEEDS") << " threshold 50*n*eps = " << canonical(thr)
              << "\n";

    bool tn_ok = true;
    if (cfg.strict) {
        TnSampleReport tn = tn_sample_check(dense, trials, seed);
        tn_ok = tn.all_nonnegative();
        std::cerr << "total nonnegativity: " << trials << " random minors, "
                  << tn.negatives.size() << " negative (seed " << seed << ")\n";
        if (!tn_ok) {
            const auto& w = tn.negatives.front();
            std::cerr << "  first negative minor value " << canonical(w.value) << "\n";
        }
    }
    emit(report_to_json(report), out);
    bool ok = recon_ok && float_ok && tn_ok;
    std::cerr << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kOk : kCheckFailed;
}

int run_rank(const ConfigArgs& args) {
    NodeConfig cfg = args.load();
    cfg.validate();
    std::cout << exact_rank(dense_matrix<Rational>(cfg)) << "\n";
    return kOk;
}

template <class S>
Json reconstruct_document(const Document& doc) {
    Matrix<S> m = doc.schema == "sbd/1" ? reconstruct(sbd_expand(materialize_sbd<S>(doc)))
                                        : reconstruct(materialize_factors<S>(doc));
    return matrix_to_json(m);
}

int run_reconstruct(const std::string& path, const std::string& out) {
    Document doc = read_document_file(path);
    Json m = doc.scalar == "binary64" ? reconstruct_document<double>(doc)
                                      : reconstruct_document<Rational>(doc);
    emit(m, out);
    return kOk;
}

int run_experiment_fig1_cmd(const std::string& out_dir) {
    Fig1Artifacts artifacts = run_experiment_fig1(out_dir);
    std::cerr << "wrote " << artifacts.sbd_json.string() << "\n";
    std::cerr << "wrote " << artifacts.rank_txt.string() << "\n";
    std::cerr << "wrote " << artifacts.matrix_csv.string() << "\n";
    return kOk;
}

template <class S>
SingularityFreeBD<S> recompute_sbd(const Document& doc) {
    auto bd = decompose<S>(doc.config);
    if (doc.transform == "fix-corner") bd = factors_to_sbd(fix_bottom_right(sbd_expand(bd)));
    return bd;
}

template <class S>
FactorSequence<S> recompute_factors(const Document& doc) {
    FactorSequence<S> fseq = doc.variant == "scaled" ? sbd_rbv_scaled<S>(doc.config)
                                                     : sbd_expand(decompose<S>(doc.config));
    if (doc.transform == "fix-corner") fseq = fix_bottom_right(std::move(fseq));
    return fseq;
}

template <class S>
bool factor_sequences_equal(const FactorSequence<S>& a, const FactorSequence<S>& b) {
    if (a.n != b.n || a.factors.size() != b.factors.size()) return false;
    for (size_t i = 0; i < a.factors.size(); ++i) {
        const auto &fa = a.factors[i], &fb = b.factors[i];
        if (fa.kind != fb.kind || fa.band != fb.band || fa.diag != fb.diag ||
            fa.offdiag != fb.offdiag)
            return false;
    }
    return true;
}

template <class S>
bool document_matches(const Document& doc) {
    if (doc.schema == "sbd/1") {
        auto got = materialize_sbd<S>(doc);
        auto want = recompute_sbd<S>(doc);
        return got.b == want.b && got.c == want.c;
    }
    return factor_sequences_equal(materialize_factors<S>(doc), recompute_factors<S>(doc));
}

int run_check_file(const std::string& path) {
    Document doc = read_document_file(path);
    doc.config.validate();
    bool ok = doc.scalar == "binary64" ? document_matches<double>(doc)
                                       : document_matches<Rational>(doc);
    if (ok && doc.scalar == "rational" && doc.schema == "sbd/1" && doc.transform.empty()) {
        // the stored decomposition must also reproduce the dense matrix
        ok = reconstruct(sbd_expand(materialize_sbd<Rational>(doc))) ==
             dense_matrix<Rational>(doc.config);
    }
    std::cerr << path << ": " << (ok ? "consistent" : "DOES NOT MATCH its config") << "\n";
    return ok ? kOk : kCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"singularity-free bidiagonal decompositions of Vandermonde-type matrices"};
    app.require_subcommand(1);

    ConfigArgs dec_args;
    std::string dec_scalar = "rational", dec_out, dec_variant = "standard";
    bool dec_fix = false;
    auto* dec = app.add_subcommand("decompose", "construct a decomposition and write it as JSON");
    add_config_options(dec, dec_args);
    dec->add_option("--scalar", dec_scalar, "arithmetic kind")
        ->check(CLI::IsMember({"rational", "f64"}));
    dec->add_option("--out", dec_out, "output file (stdout when omitted)");
    dec->add_flag("--fix-corner", dec_fix, "normalize every bidiagonal factor's (n,n) entry to 1");
    dec->add_option("--variant", dec_variant, "decomposition variant")
        ->check(CLI::IsMember({"standard", "scaled"}));

    ConfigArgs ver_args;
    int ver_trials = 200;
    std::uint64_t ver_seed = 1;
    std::string ver_out;
    auto* ver = app.add_subcommand(
        "verify", "check binary64 accuracy, exact reconstruction and total nonnegativity");
    add_config_options(ver, ver_args);
    ver->add_option("--trials", ver_trials, "random minors to sample in strict mode")
        ->check(CLI::PositiveNumber);
    ver->add_option("--seed", ver_seed, "seed for the minor sampling");
    ver->add_option("--out", ver_out, "report file (stdout when omitted)");

    ConfigArgs rank_args;
    auto* rank = app.add_subcommand("rank", "print the exact rank of the dense matrix");
    add_config_options(rank, rank_args);

    std::string rec_path, rec_out;
    auto* rec = app.add_subcommand("reconstruct", "multiply a stored decomposition back together");
    rec->add_option("document", rec_path, "sbd/1 or sbd-factors/1 JSON file")->required();
    rec->add_option("--out", rec_out, "output file (stdout when omitted)");

    std::string fig1_out;
    auto* fig1 = app.add_subcommand("experiment-fig1",
                                    "emit the built-in 24x24 q-Bernstein-Vandermonde artifacts");
    fig1->add_option("--out", fig1_out, "output directory")->required();

    std::string chk_path;
    auto* chk = app.add_subcommand("check-file", "recompute a stored document from its config");
    chk->add_option("document", chk_path, "sbd/1 or sbd-factors/1 JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (dec->parsed()) return run_decompose(dec_args, dec_scalar, dec_out, dec_fix, dec_variant);
        if (ver->parsed()) return run_verify(ver_args, ver_trials, ver_seed, ver_out);
        if (rank->parsed()) return run_rank(rank_args);
        if (rec->parsed()) return run_reconstruct(rec_path, rec_out);
        if (fig1->parsed()) return run_experiment_fig1_cmd(fig1_out);
        if (chk->parsed()) return run_check_file(chk_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
