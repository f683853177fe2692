#pragma once

#include <json.hpp>
#include <string>

#include "topsnut/degseq.hpp"
#include "topsnut/graph.hpp"
#include "topsnut/groups.hpp"
#include "topsnut/labeling.hpp"
#include "topsnut/topcode.hpp"

namespace topsnut {

using json = nlohmann::json;

json to_json(const Graph &g);
json to_json(const Labeling &f);
json to_json(const VerifyReport &r);
json to_json(const TopcodeMatrix &t);
json to_json(const VerifierSpec &s);
json to_json(const Structure &s);
json to_json(const AxiomReport &r);
json to_json(const Encryption &e);

// All readers throw ParseError on malformed documents.
Graph graph_from_json(const json &j);
Labeling labeling_from_json(const json &j);
TopcodeMatrix matrix_from_json(const json &j);
VerifierSpec spec_from_json(const json &j);
json parse_json(const std::string &text);

// Edge list or JSON object, decided by the first non-blank character.
Graph read_graph_text(const std::string &text);
std::string read_file(const std::string &path);

} // namespace topsnut
