#include "heffter/json_io.hpp"

#include <json.hpp>

#include "heffter/errors.hpp"

namespace heffter {

using json = nlohmann::ordered_json;

namespace {

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json parse(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("invalid JSON document");
  return doc;
}

Int get_int(const json& doc, const char* field) {
  if (!doc.contains(field) || !doc[field].is_number_integer())
    throw ParseError(std::string("missing or non-integer field: ") + field);
  return doc[field].get<Int>();
}

RingContext context_of(const json& doc) {
  try {
    return RingContext(get_int(doc, "w"), get_int(doc, "t"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json cycle_list(const std::vector<std::vector<Int>>& cycles, const RingContext& ctx) {
  json out = json::array();
  for (const auto& cycle : cycles) {
    json row = json::array();
    for (Int v : cycle) row.push_back(ctx.symmetric(v));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::vector<Int>> parse_cycle_list(const json& arr, const RingContext& ctx) {
  if (!arr.is_array()) throw ParseError("cycle list must be an array");
  std::vector<std::vector<Int>> out;
  for (const auto& row : arr) {
    if (!row.is_array()) throw ParseError("cycle must be an array");
    std::vector<Int> cycle;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ParseError("cycle vertex must be an integer");
      cycle.push_back(ctx.canonical(v.get<Int>()));
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace

std::string space_to_json(const RelativeHeffterSpace& space) {
  json doc;
  doc["w"] = space.ctx.order();
  doc["t"] = space.ctx.subgroup_order();
  doc["k"] = space.k;
  doc["r"] = space.degree();
  doc["family"] = family_name(space.family);
  json classes = json::array();
  for (const HeffterSystem& sys : space.classes) {
    json blocks = json::array();
    for (const Block& blk : sys.blocks) {
      json elems = json::array();
      for (Int x : blk.elements) elems.push_back(space.ctx.symmetric(x));
      blocks.push_back(std::move(elems));
    }
    classes.push_back(std::move(blocks));
  }
  doc["classes"] = std::move(classes);
  return dump(doc);
}

RelativeHeffterSpace space_from_json(const std::string& text) {
  const json doc = parse(text);
  RelativeHeffterSpace space{context_of(doc), get_int(doc, "k"), SpaceFamily::divisor, {}};
  if (!doc.contains("family") || !doc["family"].is_string())
    throw ParseError("missing family field");
  space.family = family_from_name(doc["family"].get<std::string>());
  if (!doc.contains("classes") || !doc["classes"].is_array())
    throw ParseError("missing classes field");
  Int label = 0;
  for (const auto& cls : doc["classes"]) {
    if (!cls.is_array()) throw ParseError("class must be an array of blocks");
    HeffterSystem sys{space.ctx, space.k, label++, {}};
    Int index = 0;
    for (const auto& blk : cls) {
      if (!blk.is_array()) throw ParseError("block must be an array of integers");
      Block block;
      block.i = index++;
      for (const auto& v : blk) {
        if (!v.is_number_integer()) throw ParseError("block element must be an integer");
        block.elements.push_back(space.ctx.canonical(v.get<Int>()));
      }
      sys.blocks.push_back(std::move(block));
    }
    space.classes.push_back(std::move(sys));
  }
  if (doc.contains("r") && get_int(doc, "r") != space.degree())
    throw ParseError("field r disagrees with the number of classes");
  return space;
}

std::string array_to_json(const HeffterArray& arr) {
  json doc;
  doc["n"] = arr.n;
  doc["k"] = arr.k;
  doc["t"] = arr.ctx.subgroup_order();
  doc["w"] = arr.ctx.order();
  json cells = json::array();
  for (const auto& [cell, value] : arr.cells)
    cells.push_back({cell.first, cell.second, arr.ctx.symmetric(value)});
  doc["cells"] = std::move(cells);
  return dump(doc);
}

HeffterArray array_from_json(const std::string& text) {
  const json doc = parse(text);
  HeffterArray arr{context_of(doc), get_int(doc, "n"), get_int(doc, "k"), {}};
  if (arr.n < 1) throw ParseError("array side must be positive");
  if (!doc.contains("cells") || !doc["cells"].is_array()) throw ParseError("missing cells field");
  for (const auto& entry : doc["cells"]) {
    if (!entry.is_array() || entry.size() != 3) throw ParseError("cell must be [row, col, value]");
    const Int r = entry[0].get<Int>(), c = entry[1].get<Int>(), v = entry[2].get<Int>();
    if (r < 1 || r > arr.n || c < 1 || c > arr.n)
      throw ParseError("cell indices out of range");
    if (!arr.cells.emplace(Cell{r, c}, arr.ctx.canonical(v)).second)
      throw ParseError("duplicate cell");
  }
  return arr;
}

std::string array_to_grid(const HeffterArray& arr) {
  std::string out;
  for (Int r = 1; r <= arr.n; ++r) {
    for (Int c = 1; c <= arr.n; ++c) {
      if (c > 1) out += ' ';
      auto it = arr.cells.find({r, c});
      out += it == arr.cells.end() ? "." : std::to_string(arr.ctx.symmetric(it->second));
    }
    out += '\n';
  }
  return out;
}

std::string decomposition_to_json(const CycleDecomposition& dec) {
  json doc;
  doc["w"] = dec.ctx.order();
  doc["t"] = dec.ctx.subgroup_order();
  doc["k"] = dec.k;
  doc["developed"] = dec.is_developed;
  doc["base_cycles"] = cycle_list(dec.base_cycles, dec.ctx);
  if (dec.is_developed) doc["cycles"] = cycle_list(dec.developed, dec.ctx);
  return dump(doc);
}

CycleDecomposition decomposition_from_json(const std::string& text) {
  const json doc = parse(text);
  CycleDecomposition dec{context_of(doc), get_int(doc, "k"), {}, {}, false};
  if (!doc.contains("base_cycles")) throw ParseError("missing base_cycles field");
  dec.base_cycles = parse_cycle_list(doc["base_cycles"], dec.ctx);
  if (doc.contains("developed") && doc["developed"].is_boolean() &&
      doc["developed"].get<bool>()) {
    dec.is_developed = true;
    if (doc.contains("cycles")) dec.developed = parse_cycle_list(doc["cycles"], dec.ctx);
  }
  return dec;
}

std::string report_to_json(const VerificationReport& report) {
  json doc;
  doc["subject"] = report.subject;
  doc["verdict"] = report.pass() ? "pass" : "fail";
  json violations = json::array();
  for (const Violation& v : report.violations)
    violations.push_back({{"axiom", v.axiom}, {"detail", v.detail}});
  doc["violations"] = std::move(violations);
  json notes = json::object();
  for (const auto& [key, value] : report.notes) notes[key] = value;
  doc["notes"] = std::move(notes);
  return dump(doc);
}

std::string orientation_to_string(const TourOrientation& o) {
  std::string out;
  for (int r : o.rows) out += r > 0 ? '+' : '-';
  out += ';';
  for (int c : o.cols) out += c > 0 ? '+' : '-';
  return out;
}

TourOrientation orientation_from_strings(const std::string& rows, const std::string& cols) {
  TourOrientation o;
  for (char ch : rows) {
    if (ch != '+' && ch != '-') throw ParseError("orientation characters must be + or -");
    o.rows.push_back(ch == '+' ? 1 : -1);
  }
  for (char ch : cols) {
    if (ch != '+' && ch != '-') throw ParseError("orientation characters must be + or -");
    o.cols.push_back(ch == '+' ? 1 : -1);
  }
  return o;
}

std::string trace_to_json(const TourTrace& trace) {
  json doc;
  doc["is_solution"] = trace.is_solution;
  doc["length"] = trace.visited.size();
  json visited = json::array();
  for (const auto& [r, c] : trace.visited) visited.push_back({r, c});
  doc["visited"] = std::move(visited);
  return dump(doc);
}

DocumentKind detect_document(const std::string& text) {
  const json doc = parse(text);
  if (doc.contains("classes")) return DocumentKind::space;
  if (doc.contains("cells")) return DocumentKind::array;
  if (doc.contains("base_cycles")) return DocumentKind::decomposition;
  throw ParseError("document is not a space, array or decomposition");
}

}  // namespace heffter
