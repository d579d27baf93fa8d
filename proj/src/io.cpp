#include "dgk/io.hpp"

#include <fstream>
#include <sstream>

namespace dgk {
namespace {

std::string join(const std::string& ctx, const std::string& field) {
  return ctx.empty() ? field : ctx + "." + field;
}

const Json& field(const Json& j, const std::string& key, const std::string& ctx) {
  if (!j.is_object()) throw FormatError(ctx.empty() ? "<root>" : ctx, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(join(ctx, key), "missing field");
  return *it;
}

std::uint32_t as_index(const Json& j, const std::string& ctx) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw FormatError(ctx, "expected a non-negative integer");
  const std::uint64_t v = j.get<std::uint64_t>();
  if (v > 0xffffffffu) throw FormatError(ctx, "index too large");
  return static_cast<std::uint32_t>(v);
}

const Json& as_array(const Json& j, const std::string& ctx) {
  if (!j.is_array()) throw FormatError(ctx, "expected an array");
  return j;
}

template <class Id>
std::vector<Id> id_list(const Json& j, const std::string& ctx) {
  std::vector<Id> out;
  const Json& a = as_array(j, ctx);
  for (std::size_t i = 0; i < a.size(); ++i)
    out.push_back(make_id<Id>(as_index(a[i], ctx + "[" + std::to_string(i) + "]")));
  return out;
}

std::vector<std::array<std::uint32_t, 3>> triples(const Json& j, const std::string& ctx) {
  std::vector<std::array<std::uint32_t, 3>> out;
  const Json& a = as_array(j, ctx);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string c = ctx + "[" + std::to_string(i) + "]";
    if (!a[i].is_array() || a[i].size() != 3) throw FormatError(c, "expected a triple");
    out.push_back({as_index(a[i][0], c), as_index(a[i][1], c), as_index(a[i][2], c)});
  }
  return out;
}

template <class Id>
Json id_array(const std::vector<Id>& v) {
  Json a = Json::array();
  for (Id x : v) a.push_back(static_cast<std::uint32_t>(x));
  return a;
}

Json triple_array(const std::vector<std::array<std::uint32_t, 3>>& v) {
  Json a = Json::array();
  for (const auto& t : v) a.push_back({t[0], t[1], t[2]});
  return a;
}

Json groupoid_json(const GroupoidTables& t) {
  Json arrows = Json::array();
  for (std::size_t i = 0; i < t.src.size(); ++i)
    arrows.push_back({{"src", static_cast<std::uint32_t>(t.src[i])},
                      {"tgt", static_cast<std::uint32_t>(t.tgt[i])}});
  return {{"objects", t.objects},
          {"arrows", arrows},
          {"compose", triple_array(t.compose)},
          {"identity", id_array(t.identity)},
          {"inverse", id_array(t.inverse)}};
}

GroupoidTables groupoid_tables(const Json& j, const std::string& ctx) {
  GroupoidTables t;
  t.objects = as_index(field(j, "objects", ctx), join(ctx, "objects"));
  const std::string actx = join(ctx, "arrows");
  const Json& arrows = as_array(field(j, "arrows", ctx), actx);
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const std::string c = actx + "[" + std::to_string(i) + "]";
    t.src.push_back(make_id<ObjectId>(as_index(field(arrows[i], "src", c), c + ".src")));
    t.tgt.push_back(make_id<ObjectId>(as_index(field(arrows[i], "tgt", c), c + ".tgt")));
  }
  t.compose = triples(field(j, "compose", ctx), join(ctx, "compose"));
  t.identity = id_list<ArrowId>(field(j, "identity", ctx), join(ctx, "identity"));
  t.inverse = id_list<ArrowId>(field(j, "inverse", ctx), join(ctx, "inverse"));
  return t;
}

Json action_json(const BundleAction& a) {
  Json out = Json::array();
  for (const ActEntry& e : a.entries())
    out.push_back({static_cast<std::uint32_t>(e.arrow), static_cast<std::uint32_t>(e.element),
                   static_cast<std::uint32_t>(e.result)});
  return out;
}

BundleAction action_from(const Json& j, const FiniteGroupoid& actor, const AbelianGroupBundle& k,
                         const std::string& ctx) {
  std::vector<ActEntry> entries;
  for (const auto& t : triples(j, ctx))
    entries.push_back({make_id<ArrowId>(t[0]), make_id<ElementId>(t[1]), make_id<ElementId>(t[2])});
  try {
    return BundleAction(actor, k.fibers(), entries);
  } catch (const FormatError& e) {
    throw FormatError(ctx, e.what());
  }
}

Json cocycle_json(const CocycleTable& c) {
  Json out = Json::array();
  for (const auto& [key, value] : c)
    out.push_back({static_cast<std::uint32_t>(key.first), static_cast<std::uint32_t>(key.second),
                   static_cast<std::uint32_t>(value)});
  return out;
}

CocycleTable cocycle_from(const Json& j, const std::string& ctx) {
  CocycleTable out;
  for (const auto& t : triples(j, ctx))
    if (!out.emplace(std::make_pair(box_id(t[0]), box_id(t[1])), make_id<ElementId>(t[2])).second)
      throw FormatError(ctx, "duplicate entry for (" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ")");
  return out;
}

GroupoidMorphism morphism_from(const Json& j, const FiniteGroupoid& dom, const FiniteGroupoid& cod,
                               const std::string& ctx) {
  GroupoidMorphism m{id_list<ArrowId>(j, ctx)};
  if (m.arrow_map.size() != dom.arrow_count())
    throw FormatError(ctx, "expected " + std::to_string(dom.arrow_count()) + " entries");
  for (std::size_t i = 0; i < m.arrow_map.size(); ++i)
    if (idx(m.arrow_map[i]) >= cod.arrow_count())
      throw FormatError(ctx + "[" + std::to_string(i) + "]", "arrow out of range");
  return m;
}

}  // namespace

Json to_json(const FiniteGroupoid& g) { return groupoid_json(g.tables()); }

Json to_json(const DoubleGroupoid& d) {
  const DoubleGroupoidTables t = d.tables();
  return {{"base", t.base},
          {"H", groupoid_json(t.horizontal)},
          {"V", groupoid_json(t.vertical)},
          {"boxes", t.boxes},
          {"t", id_array(t.top)},
          {"b", id_array(t.bottom)},
          {"l", id_array(t.left)},
          {"r", id_array(t.right)},
          {"hcompose", triple_array(t.hcompose)},
          {"vcompose", triple_array(t.vcompose)},
          {"hid", id_array(t.hid)},
          {"vid", id_array(t.vid)},
          {"hinv", id_array(t.hinv)},
          {"vinv", id_array(t.vinv)}};
}

Json to_json(const AbelianGroupBundle& k) {
  const BundleTables t = k.tables();
  return {{"base", t.base},
          {"fiber_of", id_array(t.fiber_of)},
          {"op", triple_array(t.op)},
          {"neutral", id_array(t.neutral)},
          {"negate", id_array(t.negate)}};
}

Json to_json(const ExtensionData& e) {
  return {{"bundle", to_json(e.bundle)},
          {"frame", to_json(e.frame)},
          {"vact", action_json(e.vact)},
          {"hact", action_json(e.hact)},
          {"tau", cocycle_json(e.cocycles.tau)},
          {"sigma", cocycle_json(e.cocycles.sigma)}};
}

Json to_json(const Diagram& dg) {
  return {{"D", to_json(dg.d)},
          {"H", to_json(dg.h)},
          {"V", to_json(dg.v)},
          {"i", id_array(dg.i.arrow_map)},
          {"j", id_array(dg.j.arrow_map)}};
}

FiniteGroupoid groupoid_from_json(const Json& j, const std::string& ctx) {
  GroupoidTables t = groupoid_tables(j, ctx);
  try {
    return FiniteGroupoid(std::move(t));
  } catch (const FormatError& e) {
    throw FormatError(ctx, e.what());
  }
}

DoubleGroupoid double_from_json(const Json& j, const std::string& ctx) {
  DoubleGroupoidTables t;
  t.base = as_index(field(j, "base", ctx), join(ctx, "base"));
  t.horizontal = groupoid_tables(field(j, "H", ctx), join(ctx, "H"));
  t.vertical = groupoid_tables(field(j, "V", ctx), join(ctx, "V"));
  t.boxes = as_index(field(j, "boxes", ctx), join(ctx, "boxes"));
  t.top = id_list<ArrowId>(field(j, "t", ctx), join(ctx, "t"));
  t.bottom = id_list<ArrowId>(field(j, "b", ctx), join(ctx, "b"));
  t.left = id_list<ArrowId>(field(j, "l", ctx), join(ctx, "l"));
  t.right = id_list<ArrowId>(field(j, "r", ctx), join(ctx, "r"));
  t.hcompose = triples(field(j, "hcompose", ctx), join(ctx, "hcompose"));
  t.vcompose = triples(field(j, "vcompose", ctx), join(ctx, "vcompose"));
  t.hid = id_list<BoxId>(field(j, "hid", ctx), join(ctx, "hid"));
  t.vid = id_list<BoxId>(field(j, "vid", ctx), join(ctx, "vid"));
  t.hinv = id_list<BoxId>(field(j, "hinv", ctx), join(ctx, "hinv"));
  t.vinv = id_list<BoxId>(field(j, "vinv", ctx), join(ctx, "vinv"));
  try {
    return DoubleGroupoid(std::move(t));
  } catch (const FormatError& e) {
    throw FormatError(ctx, e.what());
  }
}

AbelianGroupBundle bundle_from_json(const Json& j, const std::string& ctx) {
  BundleTables t;
  t.base = as_index(field(j, "base", ctx), join(ctx, "base"));
  t.fiber_of = id_list<ObjectId>(field(j, "fiber_of", ctx), join(ctx, "fiber_of"));
  t.op = triples(field(j, "op", ctx), join(ctx, "op"));
  t.neutral = id_list<ElementId>(field(j, "neutral", ctx), join(ctx, "neutral"));
  t.negate = id_list<ElementId>(field(j, "negate", ctx), join(ctx, "negate"));
  try {
    return AbelianGroupBundle(std::move(t));
  } catch (const FormatError& e) {
    throw FormatError(ctx, e.what());
  }
}

ExtensionData extension_from_json(const Json& j, const std::string& ctx) {
  ExtensionData e;
  e.bundle = bundle_from_json(field(j, "bundle", ctx), join(ctx, "bundle"));
  e.frame = double_from_json(field(j, "frame", ctx), join(ctx, "frame"));
  if (e.bundle.base_size() != e.frame.base_size())
    throw FormatError(join(ctx, "bundle.base"), "differs from frame.base");
  e.vact = action_from(field(j, "vact", ctx), e.frame.vertical(), e.bundle, join(ctx, "vact"));
  e.hact = action_from(field(j, "hact", ctx), e.frame.horizontal(), e.bundle, join(ctx, "hact"));
  e.cocycles.tau = cocycle_from(field(j, "tau", ctx), join(ctx, "tau"));
  e.cocycles.sigma = cocycle_from(field(j, "sigma", ctx), join(ctx, "sigma"));
  return e;
}

Diagram diagram_from_json(const Json& j, const std::string& ctx) {
  Diagram dg;
  dg.d = groupoid_from_json(field(j, "D", ctx), join(ctx, "D"));
  dg.h = groupoid_from_json(field(j, "H", ctx), join(ctx, "H"));
  dg.v = groupoid_from_json(field(j, "V", ctx), join(ctx, "V"));
  if (dg.h.object_count() != dg.d.object_count() || dg.v.object_count() != dg.d.object_count())
    throw FormatError(ctx.empty() ? "<root>" : ctx, "H, V and D must share the base");
  dg.i = morphism_from(field(j, "i", ctx), dg.h, dg.d, join(ctx, "i"));
  dg.j = morphism_from(field(j, "j", ctx), dg.v, dg.d, join(ctx, "j"));
  return dg;
}

std::string emit(const Json& j) { return j.dump() + "\n"; }

Json parse_json(const std::string& text, const std::string& ctx) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // byte offset -> line and column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw FormatError(ctx, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                               ": invalid JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError(path, "cannot write file");
  out << text;
  if (!out) throw FormatError(path, "write failed");
}

}  // namespace dgk
