#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "lls/chain.hpp"
#include "lls/graph.hpp"
#include "lls/moves.hpp"
#include "lls/verify.hpp"

namespace lls {

// Sequences serialize as bare integer arrays; the (r, d) context is carried
// by the enclosing problem object, so parsing is explicit rather than ADL.

nlohmann::json sequence_to_json(const VanishingSequence& s);
VanishingSequence sequence_from_json(const nlohmann::json& j, int d);

nlohmann::json problem_to_json(const BNProblem& p);
BNProblem problem_from_json(const nlohmann::json& j);

nlohmann::json chain_to_json(const ChainConfig& cfg);
ChainConfig chain_from_json(const nlohmann::json& j);

nlohmann::json component_to_json(const Component& c);
Component component_from_json(const nlohmann::json& j, int d);

// {"problem":..., "chain":[...], "components":[{"node_b":[[...]]}...]}
nlohmann::json enumeration_to_json(const BNProblem& p, const ChainConfig& cfg,
                                   const std::vector<Component>& components);

// Adjacency plus connectivity data.
nlohmann::json graph_to_json(const ComponentGraph& gr);

nlohmann::json path_to_json(const BNProblem& p, Split split,
                            const std::vector<PathStep>& path);

nlohmann::json report_to_json(const SweepReport& report);
nlohmann::json disconnected_to_json(const std::vector<DisconnectedInstance>& instances);

std::string report_to_csv(const SweepReport& report);
std::string disconnected_to_csv(const std::vector<DisconnectedInstance>& instances);

// "b1=(1,3,6)|b2=(0,2,4)"; "-" for the single-component chain.
std::string component_label(const Component& c);

std::string graph_to_dot(const ComponentGraph& gr);

}  // namespace lls
