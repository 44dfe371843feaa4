#ifndef ISQ_JSON_IO_HPP_
#define ISQ_JSON_IO_HPP_

#include <string>

#include "json.hpp"

#include "isq/bitset.hpp"
#include "isq/congruence.hpp"
#include "isq/ogroupoid.hpp"
#include "isq/partition.hpp"
#include "isq/quotient.hpp"
#include "isq/semigroup.hpp"

namespace isq {

using json = nlohmann::json;

// {"kind":"pbij","degree":n,"elements":[[i1..in],...]} or
// {"kind":"table","n":m,"mul":[[..]],"inv":[..]}
json semigroup_to_json(const FiniteInvSemigroup& S);
FiniteInvSemigroup semigroup_from_json(const json& j);

// {"indices":[..]}
json subset_to_json(const Bitset& b);
Bitset subset_from_json(const json& j, std::size_t n);

// {"map":[..]}
json hom_map_to_json(const std::vector<elem>& map);
std::vector<elem> hom_map_from_json(const json& j);

// {"elements":[..],"identities":[..],"dom":[..],"ran":[..],"inv":[..],
//  "comp":[[i,j,k],...],"leq":[[i,j],...]}
json og_to_json(const OrderedGroupoid& G);

// {"classes":[[ids],...]}
json partition_to_json(const Partition& p);

// groupoid + partition + witness table
json quotient_to_json(const NQuotient& q);

json load_json_file(const std::string& path);
void write_output(const json& j, const std::string& out_path, bool pretty);

}  // namespace isq

#endif  // ISQ_JSON_IO_HPP_
