#pragma once

// Internal JSON report builders shared by the C API. Key order is
// deterministic (nlohmann::json sorts object keys), which the CLI relies on
// for byte-identical outputs.

#include <json.hpp>

#include "polyconf/annihilate.hpp"
#include "polyconf/complexity.hpp"
#include "polyconf/decompose.hpp"
#include "polyconf/tiling.hpp"

namespace polyconf {

nlohmann::json verdict_json(const AnnihilationVerdict& v);
nlohmann::json scan_json(const Configuration& c, const std::vector<NivatScanRow>& rows,
                         const Box& region);
std::string scan_tsv(const std::vector<NivatScanRow>& rows);
nlohmann::json annihilator_json(const Configuration& c, const AnnihilatorSearchResult& r,
                                const AnnihilationVerdict& recheck, const Box& region);
nlohmann::json certificate_json(const DifferenceProductCertificate& cert);
nlohmann::json classification_json(const Configuration& c, const PeriodicityClassification& cls);
nlohmann::json decomposition_json(const Configuration& c, const Decomposition& dec, bool with_dumps);
nlohmann::json window_json(const Configuration& c, const Box& box);
nlohmann::json tiling_json(const ClusterTile& tile, const CoTilerSet& cotiler);
nlohmann::json block_lines_json(const BlockLinesReport& rep);

}  // namespace polyconf
