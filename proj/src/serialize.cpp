#include "tsl/serialize.hpp"

#include <fstream>
#include <sstream>

namespace tsl {

using nlohmann::json;

TopSemilattice SpaceFile::model() const {
  if (!meet) throw ParseError("space file has no \"meet\" table");
  return TopSemilattice::make(space, *meet);
}

json subset_to_json(Subset s) {
  json out = json::array();
  s.for_each([&](Element e) { out.push_back(e); });
  return out;
}

Subset subset_from_json(const json& j, int n) {
  if (!j.is_array()) throw ParseError("expected an index list, got " + j.dump());
  Subset out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ParseError("index list entries must be integers: " + j.dump());
    const auto v = e.get<long long>();
    if (v < 0 || v >= n) throw ParseError("index " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
    if (out.contains(static_cast<Element>(v))) throw ParseError("duplicate index in " + j.dump());
    out.insert(static_cast<Element>(v));
  }
  return out;
}

json space_to_json(const FiniteSpace& space) {
  json opens = json::array();
  for (Subset u : space.opens()) opens.push_back(subset_to_json(u));
  return json{{"n", space.size()}, {"opens", opens}};
}

json model_to_json(const TopSemilattice& ts) {
  json out = space_to_json(ts.space());
  out["meet"] = ts.meet().rows();
  return out;
}

json multimap_to_json(const MultiMap& phi) {
  json values = json::array();
  for (Subset v : phi.values()) values.push_back(subset_to_json(v));
  return json{{"dom", model_to_json(phi.dom())}, {"cod", model_to_json(phi.cod())}, {"values", values}};
}

SpaceFile parse_space(const json& j) {
  if (!j.is_object()) throw ParseError("space file must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("missing integer field \"n\"");
  const long long n = j["n"].get<long long>();
  if (n < 1 || n > kMaxCarrier) throw ParseError("\"n\" must be in 1.." + std::to_string(kMaxCarrier));
  if (!j.contains("opens") || !j["opens"].is_array()) throw ParseError("missing array field \"opens\"");
  std::vector<Subset> opens;
  for (const auto& u : j["opens"]) opens.push_back(subset_from_json(u, static_cast<int>(n)));
  std::optional<FiniteSpace> space;
  try {
    space = FiniteSpace::make(static_cast<int>(n), opens);
  } catch (const TopologyError& e) {
    throw ParseError(std::string("not a topology: ") + e.what());
  }
  std::optional<MeetTable> meet;
  if (j.contains("meet")) {
    const auto& m = j["meet"];
    if (!m.is_array() || static_cast<long long>(m.size()) != n)
      throw ParseError("\"meet\" must be an n×n integer matrix");
    RawTable raw;
    for (const auto& row : m) {
      if (!row.is_array() || static_cast<long long>(row.size()) != n)
        throw ParseError("\"meet\" must be an n×n integer matrix");
      std::vector<int> r;
      for (const auto& e : row) {
        if (!e.is_number_integer()) throw ParseError("\"meet\" entries must be integers");
        r.push_back(e.get<int>());
      }
      raw.push_back(std::move(r));
    }
    try {
      meet = MeetTable::validate(raw);
    } catch (const MeetAxiomError& e) {
      throw ParseError(std::string("not a semilattice: ") + e.what());
    }
  }
  return SpaceFile{std::move(*space), std::move(meet)};
}

SpaceFile parse_space_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_space(j);
}

SpaceFile read_space_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_space_text(buffer.str());
}

Subset parse_index_list(const std::string& text, int n) {
  Subset out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("bad index '" + item + "'");
    }
    if (used != item.size()) throw ParseError("bad index '" + item + "'");
    if (v < 0 || v >= n) throw ParseError("index " + item + " outside 0.." + std::to_string(n - 1));
    out.insert(v);
  }
  return out;
}

}  // namespace tsl
