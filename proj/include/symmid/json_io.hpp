#ifndef SYMMID_JSON_IO_HPP
#define SYMMID_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "symmid/betti.hpp"
#include "symmid/chains.hpp"
#include "symmid/ext_invariants.hpp"
#include "symmid/ideal.hpp"
#include "symmid/powers.hpp"
#include "symmid/zset.hpp"

namespace symmid {

using json = nlohmann::ordered_json;

json to_json(const Partition& x);
Partition partition_from_json(const json& j);

// {"n": 3, "generators": [[2,1,1],[4,2]]}
json to_json(const Ideal& x);
// Generators are minimalized on load; *warned is set when the input was not
// already an antichain.
Ideal ideal_from_json(const json& j, bool* warned = nullptr);
Ideal load_ideal_file(const std::string& path, bool* warned = nullptr);

// Bare partition sets for chain inputs: {"generators": [...]} ("n" optional).
std::vector<Partition> partition_set_from_json(const json& j);
std::vector<Partition> load_partition_set_file(const std::string& path);

json to_json(const ZPair& pair);
json z_set_to_json(const std::vector<ZPair>& pairs, int n);

json to_json(const MultigradedCharacter& chi);
json to_json(const InvariantReport& report);
json to_json(const CohenMacaulayReport& report);
json to_json(const BettiTable& table);
std::string render_betti_table(const BettiTable& table);

} // namespace symmid

#endif
