#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dimerforge/planar_graph.hpp"

namespace dimerforge {

// A graph file plus directives:
//   kind <name>            path <ids>      axis <y>        root <id>
//   marked <edge ids>      marks <ids>     primed <ids>    constraint <i> <H vertex ids>
struct InstanceFile {
    std::string kind;
    PlanarGraph graph;
    std::vector<Id> path;
    std::optional<Rational> axis;
    std::optional<Id> root;
    std::vector<Id> marked;
    std::vector<Id> marks;
    std::vector<Id> primed;
    std::map<int, std::vector<Id>> constraints;
};

InstanceFile parse_instance(const std::string& text);
InstanceFile load_instance_file(const std::string& path);
std::string format_instance(const InstanceFile& inst);

std::vector<Id> parse_ids(const std::string& csv);
std::string join_ids(const std::vector<Id>& ids);

std::string read_text_file(const std::string& path);

}  // namespace dimerforge
