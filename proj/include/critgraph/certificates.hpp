#ifndef CRITGRAPH_CERTIFICATES_HPP
#define CRITGRAPH_CERTIFICATES_HPP

#include <optional>
#include <string>

#include "critgraph/cone_solver.hpp"
#include "critgraph/criticality.hpp"
#include "critgraph/graph.hpp"
#include "json.hpp"

namespace critgraph::certs {

/// Every certificate is a self-contained JSON object: {"claim": ...,
/// "graph": ..., "verdict": ..., claim-specific witness fields}. The
/// revalidator recomputes the claim from the embedded data only, so a
/// certificate reloaded from disk stands on its own.

nlohmann::json chromatic_number_certificate(const Graph& g, int chi,
                                            const std::optional<Coloring>& witness);
nlohmann::json k_colorable_certificate(const Graph& g, int k,
                                       const std::optional<Coloring>& witness);
nlohmann::json criticality_certificate(const Graph& g, const CriticalityReport& report);
nlohmann::json induced_d_scan_certificate(const Graph& g,
                                          const std::optional<InducedDSubgraph>& hit);
nlohmann::json edge_subgraph_d_certificate(const Graph& g, const Graph& result);

/// Ray certificates reference their matrices by CSV path, resolved
/// relative to the certificate file at revalidation time.
nlohmann::json ray_certificate(const Graph& g, const solver::RayCertificate& cert,
                               const std::string& d_csv, const std::string& p_csv);

struct Validation {
    bool valid = false;    // certificate is internally consistent
    bool verdict = false;  // the certified claim's truth value
    std::string message;
};

/// Recomputes the claim. `base_dir` resolves relative matrix paths.
Validation revalidate(const nlohmann::json& certificate, const std::string& base_dir = ".");

}  // namespace critgraph::certs

#endif
