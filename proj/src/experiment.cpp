#include "sbd/experiment.hpp"

#include <sstream>

#include "sbd/bigfloat.hpp"
#include "sbd/io.hpp"
#include "sbd/oracle.hpp"

namespace sbd {

NodeConfig fig1_config() {
    NodeConfig cfg;
    cfg.family = Family::q_bernstein_vandermonde;
    cfg.q = parse_rational("0.1");
    cfg.strict = true;
    const char* nodes[] = {"0.1",  "0.2",  "0.2",  "0.2",  "0.3",  "0.31", "0.32", "0.33",
                           "0.34", "0.35", "0.36", "0.37", "0.38", "0.39", "0.5",  "0.6",
                           "0.7",  "0.7",  "0.7",  "0.7",  "0.7",  "0.7",  "0.8",  "0.9"};
    for (const char* t : nodes) cfg.nodes.push_back(parse_rational(t));
    cfg.n = static_cast<int>(cfg.nodes.size());
    return cfg;
}

Fig1Artifacts run_experiment_fig1(const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    NodeConfig cfg = fig1_config();

    auto sbd = decompose<Rational>(cfg);
    Fig1Artifacts out;
    out.sbd_json = out_dir / "sbd.json";
    write_json_atomic(out.sbd_json, sbd_to_json(sbd, cfg));

    int rank = exact_rank(dense_matrix<Rational>(cfg));
    out.rank_txt = out_dir / "rank.txt";
    write_text_atomic(out.rank_txt, std::to_string(rank) + "\n");

    // Reconstruct exactly, then round each entry once to 212 bits so equal
    // rational entries stay textually identical.
    Matrix<Rational> a = reconstruct(sbd_expand(sbd));
    std::ostringstream csv;
    for (int i = 1; i <= a.rows(); ++i) {
        for (int j = 1; j <= a.cols(); ++j) {
            if (j > 1) csv << ',';
            csv << BigFloat::from_rational(a(i, j)).str();
        }
        csv << '\n';
    }
    out.matrix_csv = out_dir / "matrix_hiprec.csv";
    write_text_atomic(out.matrix_csv, csv.str());
    return out;
}

} // namespace sbd
