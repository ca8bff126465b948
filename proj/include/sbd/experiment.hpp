#pragma once

#include <filesystem>

#include "sbd/families.hpp"

namespace sbd {

// The built-in 24x24 q-Bernstein-Vandermonde study: q = 1/10 and nodes
// 0.1, 0.2 (x3), 0.3, 0.31..0.39, 0.5, 0.6, 0.7 (x6), 0.8, 0.9. Seventeen of
// the nodes are distinct, so the matrix has rank 17.
NodeConfig fig1_config();

struct Fig1Artifacts {
    std::filesystem::path sbd_json;   // exact decomposition, sbd/1 document
    std::filesystem::path rank_txt;   // exact rank of the dense matrix
    std::filesystem::path matrix_csv; // reconstruction rendered at 212 bits, row-major CSV
};

// Writes the three artifacts into out_dir (created if missing).
Fig1Artifacts run_experiment_fig1(const std::filesystem::path& out_dir);

} // namespace sbd
