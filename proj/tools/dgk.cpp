// dgk: command-line front end for the double groupoid toolkit.
//
// Exit status: 0 when every check passes, 1 when a mathematical check fails
// (the report carries a witness), 2 on unreadable or malformed input.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dgk/core_kernel.hpp"
#include "dgk/corners.hpp"
#include "dgk/diagonal.hpp"
#include "dgk/extension.hpp"
#include "dgk/fixtures.hpp"
#include "dgk/io.hpp"
#include "dgk/iso.hpp"

using namespace dgk;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct Options {
  bool no_validate = false;
  bool json = false;
  std::string output;
};

// Raised when a loaded file fails its axioms; the report goes to stderr.
struct Rejected {
  Report report;
};

enum class Kind { Groupoid, Double, Bundle, Extension, Diagram };

Kind detect(const Json& j, const std::string& path) {
  if (!j.is_object()) throw FormatError(path, "expected a JSON object");
  if (j.contains("boxes")) return Kind::Double;
  if (j.contains("tau")) return Kind::Extension;
  if (j.contains("D")) return Kind::Diagram;
  if (j.contains("fiber_of")) return Kind::Bundle;
  if (j.contains("objects")) return Kind::Groupoid;
  throw FormatError(path, "unrecognized file: expected a groupoid, double groupoid, bundle, extension or diagram");
}

GroupoidMorphism identity_map(const FiniteGroupoid& g) {
  GroupoidMorphism m;
  for (std::size_t a = 0; a < g.arrow_count(); ++a) m.arrow_map.push_back(make_id<ArrowId>(a));
  return m;
}

DoubleGroupoid load_double(const std::string& path, const Options& opt) {
  const Json j = read_json_file(path);
  if (detect(j, path) != Kind::Double) throw FormatError(path, "expected a double groupoid file");
  DoubleGroupoid d = double_from_json(j);
  if (!opt.no_validate) {
    Report r = validate_double(d);
    if (!r.ok()) throw Rejected{std::move(r)};
  }
  return d;
}

Diagram load_diagram(const std::string& path, const Options& opt) {
  const Json j = read_json_file(path);
  if (detect(j, path) != Kind::Diagram) throw FormatError(path, "expected a diagram file");
  Diagram dg = diagram_from_json(j);
  if (!opt.no_validate) {
    Report r = validate_diagram(dg);
    if (!r.ok()) throw Rejected{std::move(r)};
  }
  return dg;
}

ExtensionData load_extension(const std::string& path) {
  const Json j = read_json_file(path);
  if (detect(j, path) != Kind::Extension) throw FormatError(path, "expected an extension file");
  return extension_from_json(j);
}

void print_report(const Report& r, const Options& opt) {
  std::cout << (opt.json ? emit(r.to_json()) : r.to_text());
}

int finish(const Report& r, const Options& opt) {
  print_report(r, opt);
  return r.ok() ? kOk : kCheckFailed;
}

// Data goes to -o when given, otherwise to stdout.
int write_data(const Json& j, const Options& opt) {
  if (opt.output.empty())
    std::cout << emit(j);
  else
    write_text_file(opt.output, emit(j));
  return kOk;
}

int cmd_validate(const std::string& path, const Options& opt) {
  const Json j = read_json_file(path);
  switch (detect(j, path)) {
    case Kind::Groupoid: return finish(validate_groupoid(groupoid_from_json(j)), opt);
    case Kind::Double: return finish(validate_double(double_from_json(j)), opt);
    case Kind::Bundle: return finish(validate_bundle(bundle_from_json(j)), opt);
    case Kind::Extension: return finish(validate_cocycle_equations(extension_from_json(j)), opt);
    case Kind::Diagram: {
      const Diagram dg = diagram_from_json(j);
      Report r = validate_diagram(dg);
      r.law("every arrow factors as j(g) i(x)").expect(is_factorization(dg), "some arrow has no factorization");
      return finish(r, opt);
    }
  }
  return kInputError;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_analyze(const std::string& path, const Options& opt) {
  const DoubleGroupoid d = load_double(path, opt);
  const Transitivity t = transitivity(d);
  const CornerReport c = corners(d);
  Report facts = corner_facts(d);
  if (opt.json) {
    Json rows = Json::array();
    for (std::size_t b = 0; b < d.box_count(); ++b) {
      Json row = {{"box", b}};
      for (Corner k : kAllCorners) row[corner_name(k)] = c.at(k, box_id(b));
      rows.push_back(std::move(row));
    }
    const Json out = {{"slim", is_slim(d)},
                      {"filling", has_filling(d)},
                      {"vacant", is_vacant(d)},
                      {"horizontally_transitive", t.horizontal},
                      {"vertically_transitive", t.vertical},
                      {"boxes", d.box_count()},
                      {"corners", rows},
                      {"theta", c.theta},
                      {"corner_facts", facts.to_json()}};
    std::cout << emit(out);
  } else {
    std::cout << "slim                     " << yes_no(is_slim(d)) << "\n"
              << "filling                  " << yes_no(has_filling(d)) << "\n"
              << "vacant                   " << yes_no(is_vacant(d)) << "\n"
              << "horizontally transitive  " << yes_no(t.horizontal) << "\n"
              << "vertically transitive    " << yes_no(t.vertical) << "\n"
              << "|B|                      " << d.box_count() << "\n\n";
    std::cout << "box";
    for (Corner k : kAllCorners) std::cout << "  " << corner_name(k);
    std::cout << "\n";
    for (std::size_t b = 0; b < d.box_count(); ++b) {
      std::cout << describe(d, box_id(b));
      for (Corner k : kAllCorners) std::cout << "  " << c.at(k, box_id(b));
      std::cout << "\n";
    }
    std::cout << "\nobject  theta\n";
    for (std::size_t p = 0; p < c.theta.size(); ++p) std::cout << p << "       " << c.theta[p] << "\n";
    std::cout << "\n" << facts.to_text();
  }
  return facts.ok() ? kOk : kCheckFailed;
}

int cmd_corners(const std::string& path, const Options& opt) {
  const DoubleGroupoid d = load_double(path, opt);
  const CornerReport c = corners(d);
  const CoreGroupoid e = core(d);
  // Upper-right count predicted from the core at the bottom-left vertex.
  auto predicted = [&](ObjectId q) {
    return component_of(e.groupoid, q).size() * e.groupoid.vertex_group(q).size();
  };
  Json rows = Json::array();
  for (std::size_t i = 0; i < d.box_count(); ++i) {
    const BoxId b = box_id(i);
    Json row = {{"box", i}};
    for (Corner k : kAllCorners) row[corner_name(k)] = c.at(k, b);
    row["formula_upper_right"] = predicted(d.bottom_left(b));
    rows.push_back(std::move(row));
  }
  const Report facts = corner_facts(d);
  write_data({{"boxes", rows}, {"theta", c.theta}, {"ok", facts.ok()}}, opt);
  if (!opt.output.empty()) print_report(facts, opt);
  return facts.ok() ? kOk : kCheckFailed;
}

int cmd_roundtrip(const std::string& path, const Options& opt) {
  const DoubleGroupoid d = load_double(path, opt);
  const ExtensionData e = decompose(d);
  Report r("decompose, rebuild, compare");
  r.merge(validate_cocycle_equations(e), "cocycles: ");
  if (r.ok()) {
    const DoubleGroupoid rebuilt = build_extension(e);
    const DoubleIso psi{identity_map(d.horizontal()), identity_map(d.vertical()), extension_witness(d)};
    r.merge(check_double_iso(rebuilt, d, psi), "witness: ");
  }
  return finish(r, opt);
}

int cmd_roundtrip_slim(const std::string& path, const Options& opt) {
  return finish(roundtrip_slim(load_double(path, opt)), opt);
}

int cmd_classify(const std::string& path, const Options& opt) {
  const DoubleGroupoid d = load_double(path, opt);
  const bool filling = has_filling(d);
  std::optional<FusionVerdict> fusion;
  if (filling) fusion = is_fusion(d);
  if (opt.json) {
    Json out = {{"slim", is_slim(d)}, {"filling", filling}, {"vacant", is_vacant(d)}};
    out["fusion"] = fusion ? Json(fusion->fusion) : Json(nullptr);
    if (fusion) {
      out["v_connected"] = fusion->v_connected;
      out["bottom_injective_on_core"] = fusion->bottom_injective_on_core;
    }
    std::cout << emit(out);
  } else {
    std::cout << "slim     " << yes_no(is_slim(d)) << "\n"
              << "filling  " << yes_no(filling) << "\n"
              << "vacant   " << yes_no(is_vacant(d)) << "\n"
              << "fusion   " << (fusion ? yes_no(fusion->fusion) : "n/a (no filling)") << "\n";
    if (fusion) std::cout << "\n" << fusion->detail.to_text();
  }
  return fusion && !fusion->detail.ok() ? kCheckFailed : kOk;
}

int cmd_reduce(const std::string& path, const std::string& word, const Options& opt) {
  const DoubleGroupoid d = load_double(path, opt);
  const FreeProduct fp(d.horizontal(), d.vertical());
  const Path p = parse_path(word);
  fp.check_chained(p);
  const ReducedWord w = fp.reduce(p);
  std::optional<ArrowId> value;
  if (is_slim(d) && has_filling(d)) value = evaluate(diagonal(d), w);
  if (opt.json) {
    Json out = {{"word", word}, {"reduced", to_string(w)}, {"length", w.length()}};
    out["diagonal_arrow"] = value ? Json(idx(*value)) : Json(nullptr);
    std::cout << emit(out);
  } else {
    std::cout << to_string(w) << "\nlength " << w.length() << "\n";
    if (value) std::cout << "diagonal arrow #" << idx(*value) << "\n";
  }
  return kOk;
}

int cmd_fixtures(bool emit_all, const Options& opt) {
  if (!emit_all) throw FormatError("fixtures", "nothing to do without --emit-all");
  if (opt.output.empty()) throw FormatError("fixtures", "-o <dir> is required");
  std::filesystem::create_directories(opt.output);
  for (const auto& [name, d] : standard_fixtures()) {
    const std::string file = (std::filesystem::path(opt.output) / (name + ".json")).string();
    write_text_file(file, emit(to_json(d)));
    std::cout << file << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite double groupoids: validation, decomposition and reconstruction"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--no-validate", opt.no_validate, "Skip axiom checks when loading");
  app.add_flag("--json", opt.json, "Machine-readable report");
  app.add_option("-o,--output", opt.output, "Output path");

  std::string input, word;
  bool emit_all = false;
  std::function<int()> run;

  auto verb = [&](const std::string& name, const std::string& help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", input, "Input file")->required();
    sub->callback([&run, &input, &opt, fn] { run = [&input, &opt, fn] { return fn(input, opt); }; });
    return sub;
  };
  auto emitter = [&](const std::string& name, const std::string& help, auto make) {
    return verb(name, help, [make](const std::string& path, const Options& o) { return write_data(make(path, o), o); });
  };

  verb("validate", "Check every axiom of a groupoid, double groupoid, bundle, extension or diagram file", cmd_validate);
  verb("analyze", "Slim, filling, vacancy and transitivity flags with corner and theta tables", cmd_analyze);
  emitter("frame", "Emit the frame of a double groupoid",
          [](const std::string& p, const Options& o) { return to_json(frame(load_double(p, o))); });
  emitter("core", "Emit the core groupoid",
          [](const std::string& p, const Options& o) { return to_json(core(load_double(p, o)).groupoid); });
  emitter("kernel", "Emit the kernel bundle",
          [](const std::string& p, const Options& o) { return to_json(kernel(load_double(p, o)).bundle); });
  verb("corners", "Corner counts with the core formula alongside", cmd_corners);
  emitter("decompose", "Emit kernel, frame, actions and cocycles",
          [](const std::string& p, const Options& o) { return to_json(decompose(load_double(p, o))); });
  verb("rebuild", "Build a double groupoid from extension data", [](const std::string& p, const Options& o) {
    const ExtensionData e = load_extension(p);
    const Report r = validate_cocycle_equations(e);
    if (!r.ok()) return finish(r, o);
    return write_data(to_json(build_extension(e)), o);
  });
  verb("roundtrip", "Decompose, rebuild, and check the explicit isomorphism", cmd_roundtrip);
  emitter("diagonal", "Emit the diagonal groupoid with its maps i and j",
          [](const std::string& p, const Options& o) { return to_json(diagonal(load_double(p, o))); });
  emitter("square", "Emit the square of a diagram",
          [](const std::string& p, const Options& o) { return to_json(square_of_diagram(load_diagram(p, o))); });
  verb("roundtrip-slim", "Compare square(diagonal(D)) with D", cmd_roundtrip_slim);
  verb("classify", "Slim, filling, vacant and fusion verdicts", cmd_classify);
  verb("reduce", "Reduce a word of the free product of the edge groupoids",
       [&word](const std::string& p, const Options& o) { return cmd_reduce(p, word, o); })
      ->add_option("--word", word, "Letters such as \"V:3 H:1 V:2\"")
      ->required();

  CLI::App* fixtures = app.add_subcommand("fixtures", "Write the standard fixtures");
  fixtures->add_flag("--emit-all", emit_all, "Write every standard fixture");
  fixtures->callback([&] { run = [&] { return cmd_fixtures(emit_all, opt); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    return run();
  } catch (const Rejected& r) {
    std::cerr << "input fails its axioms (run `dgk validate` for the full report)\n" << r.report.to_text();
    return kInputError;
  } catch (const FormatError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const NotChained& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const BaseMismatch& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
