// JSON encodings of the core values. Matrix entries travel as decimal
// strings so arbitrary precision survives the round trip; all emitted
// objects carry their keys in a fixed insertion order for byte-stable
// output.
#pragma once

#include <json.hpp>

#include "smalehom/pipeline.hpp"

namespace smalehom {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json hom_to_json(const GraphHom& h);
GraphHom hom_from_json(const Json& j);

Json complex_to_json(const PutnamComplex& p);
PutnamComplex complex_from_json(const Json& j);

Json invariants_to_json(const GroupInvariants& g);
Json limit_to_json(const LimitInvariants& l);

Json snf_to_json(const SmithDecomposition& d);
Json shift_cok_ker_to_json(const ShiftCokKer& s);
Json stable_homology_to_json(const StableHomology& h);
Json sheet_to_json(const SpectralSheet& s);
Json ruelle_to_json(const RuelleReport& r);
Json kunneth_to_json(const KunnethCheck& k);
Json odometer_to_json(const std::vector<LimitInvariants>& h);
Json tower_to_json(const OdometerTower& t);

// Parse a file, turning syntax errors into ValidationError carrying the path.
Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace smalehom
