#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "preorder/instance.hpp"
#include "preorder/partial.hpp"

namespace preorder {

/// Instance CSV:
///
///   n=<count>
///   p,q,c
///   <p>,<q>,<value>
///   ...
///
/// Unlisted pairs have value 0. Blank lines are ignored. Parsing throws
/// DataError on a missing or malformed header, a malformed row, an index out
/// of range, a diagonal pair, a duplicate pair or a non-finite value.
Instance read_instance(std::istream& in);
/// Writes every off-diagonal pair with the shortest decimal form that parses
/// back to the same double.
void write_instance(std::ostream& out, const Instance& instance);
Instance load_instance(const std::filesystem::path& path);
void save_instance(const Instance& instance, const std::filesystem::path& path);

/// Partial assignment CSV: "n=<count>", header "p,q,x", rows p,q,{0|1}.
/// Undecided pairs are omitted.
PartialAssignment read_partial(std::istream& in);
void write_partial(std::ostream& out, const PartialAssignment& x);
PartialAssignment load_partial(const std::filesystem::path& path);
void save_partial(const PartialAssignment& x, const std::filesystem::path& path);

/// Whitespace-separated "src dst" per line; blank lines and lines starting
/// with '#' are skipped. Throws DataError on a line with other than two tokens.
std::vector<std::pair<std::string, std::string>> read_edge_list(std::istream& in);
std::vector<std::pair<std::string, std::string>> load_edge_list(const std::filesystem::path& path);
/// Sorted unique node ids occurring in the edge list.
std::vector<std::string> edge_list_nodes(const std::vector<std::pair<std::string, std::string>>& edges);

}  // namespace preorder
