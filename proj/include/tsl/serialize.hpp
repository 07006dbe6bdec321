#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "tsl/multimap.hpp"
#include "tsl/order.hpp"
#include "tsl/space.hpp"
#include "tsl/topo_semilattice.hpp"

namespace tsl {

/// Raised on malformed space files.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Contents of a space file: {"n": int, "opens": [[...], ...], "meet": [[...], ...]}.
/// "meet" is optional.
struct SpaceFile {
  FiniteSpace space;
  std::optional<MeetTable> meet;

  /// Throws ParseError if the file has no meet table.
  TopSemilattice model() const;
};

nlohmann::json subset_to_json(Subset s);
/// Accepts a JSON array of distinct indices in 0..n-1.
Subset subset_from_json(const nlohmann::json& j, int n);

nlohmann::json space_to_json(const FiniteSpace& space);
nlohmann::json model_to_json(const TopSemilattice& ts);
nlohmann::json multimap_to_json(const MultiMap& phi);

/// Throws ParseError naming the offending field; topology and meet axiom
/// violations are reported through ParseError as well.
SpaceFile parse_space(const nlohmann::json& j);
SpaceFile parse_space_text(const std::string& text);
SpaceFile read_space_file(const std::string& path);

/// "0,2,3" or "" → subset; throws ParseError on junk or out-of-range indices.
Subset parse_index_list(const std::string& text, int n);

}  // namespace tsl
