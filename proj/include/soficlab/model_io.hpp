#ifndef SOFICLAB_MODEL_IO_HPP
#define SOFICLAB_MODEL_IO_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "soficlab/action_model.hpp"
#include "soficlab/group_table.hpp"
#include "soficlab/measure_uniformize.hpp"
#include "soficlab/partition_upgrade.hpp"
#include "soficlab/rep_compress.hpp"

namespace soficlab {

// Model file grammar (text, one model per file; '#' starts a comment):
//   n <size>
//   gen <name> <n images>
//   table <word> <n images>     (optional, any number)
//   normal <word>               (optional, any number)
struct ModelFile {
  ActionModel model;
  NormalSubgroupSpec nspec;  // may be empty
};

ModelFile parse_model(std::istream& in);
ModelFile load_model(const std::string& path);
std::string serialize_model(const ActionModel& model, const NormalSubgroupSpec& nspec = {});
void save_model(const std::string& path, const ActionModel& model,
                const NormalSubgroupSpec& nspec = {});

// Group table files: `order k` then k rows of k entries.
GroupTable parse_group_table(std::istream& in);
GroupTable load_group_table(const std::string& path);
std::string serialize_group_table(const GroupTable& table);

// Partition files: `blocks d` then d lines `block <indices...>`.
Partition parse_partition(std::istream& in);
Partition load_partition(const std::string& path);
std::string serialize_partition(const Partition& partition);

// Measured almost-actions travel as JSON:
//   {"schema":1,"n":...,"mu":["1/4",...],"symbols":{"a":[...]},
//    "products":[["a","b","a*b"],...],"window":["a","b","a*b"]}
MeasuredAlmostAction parse_measured_action(const std::string& json_text);
MeasuredAlmostAction load_measured_action(const std::string& path);
std::string serialize_measured_action(const MeasuredAlmostAction& action);

// Unitary representation files: `dim d`, then per generator a `gen <name>`
// line followed by d rows of 2d decimals (re im pairs, row-major).
UnitaryRep parse_rep(std::istream& in);
UnitaryRep load_rep(const std::string& path);
std::string serialize_rep(const UnitaryRep& rep);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace soficlab

#endif
