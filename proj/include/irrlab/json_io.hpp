#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "irrlab/digraph.hpp"
#include "irrlab/labeling.hpp"
#include "irrlab/oracle.hpp"
#include "irrlab/parts.hpp"

namespace irrlab {

nlohmann::json certificate_json(const Certificate& c);

// kind "partition": group, excluded, parts as flat element-string arrays,
// pad_parts, path, certificate.
nlohmann::json partition_json(const PartitionResult& pr);

// kind "zeng" or "skolem": parts kept as objects with their kind, elements
// and witnesses; the certificate is computed here from scratch.
nlohmann::json blocks_json(const std::string& kind, const Group& g,
                           const std::vector<Elem>& excluded,
                           const std::vector<ZeroSumPart>& parts);

// kind "labeling": group, arcs with labels, phi per vertex, certificate.
nlohmann::json labeling_json(const Digraph& d, const ArcLabeling& lab);

// kind "oracle": verdict, nodes, elapsed_ms, optional partition.
nlohmann::json oracle_json(const Group& g, const OracleOutcome& out);

// One cross-validation entry: group, sizes, both verdicts, disagreement.
nlohmann::json cross_json(const CrossReport& rep);

// Re-checks an emitted document from scratch, dispatching on "kind"
// (partition, zeng, skolem, labeling, oracle). Malformed documents raise
// input_error; verification outcomes land in the returned certificate.
Certificate verify_document(const nlohmann::json& doc);

}  // namespace irrlab
