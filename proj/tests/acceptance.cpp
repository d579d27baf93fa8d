// One line per acceptance criterion. Exit status is the number of failures.

#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dgk/core_kernel.hpp"
#include "dgk/corners.hpp"
#include "dgk/diagonal.hpp"
#include "dgk/extension.hpp"
#include "dgk/fixtures.hpp"
#include "dgk/free_product.hpp"
#include "dgk/iso.hpp"

using namespace dgk;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void require(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
  void require(const Report& r, const std::string& where) {
    if (r.ok()) return;
    for (const Check& c : r.checks())
      if (!c.passed) {
        fail(where + ": " + c.name + " " + c.witness);
        return;
      }
    fail(where + ": " + (r.warnings().empty() ? "report failed" : r.warnings().front()));
  }
};

GroupoidMorphism identity_map(const FiniteGroupoid& g) {
  GroupoidMorphism m;
  for (std::size_t a = 0; a < g.arrow_count(); ++a) m.arrow_map.push_back(make_id<ArrowId>(a));
  return m;
}

const DoubleGroupoid& find(const std::vector<NamedFixture>& fx, const std::string& name) {
  for (const auto& f : fx)
    if (f.name == name) return f.d;
  throw std::logic_error("no fixture " + name);
}

Outcome axioms(const std::vector<NamedFixture>& fx) {
  Outcome o;
  std::size_t detected = 0;
  for (const auto& [name, d] : fx) {
    o.require(validate_double(d), name);
    const auto ms = mutations(d, 20, 0x5eed);
    o.require(ms.size() == 20, name + ": only " + std::to_string(ms.size()) + " mutations");
    for (const Mutation& m : ms) {
      bool caught = false;
      try {
        const Report r = validate_double(DoubleGroupoid(m.tables));
        for (const Check& c : r.checks()) caught = caught || (!c.passed && !c.witness.empty());
      } catch (const Error&) {
        caught = true;  // rejected at load time, with the message as witness
      }
      o.require(caught, name + ": undetected mutation " + m.describe());
      detected += caught;
    }
  }
  if (o.ok) o.detail = std::to_string(fx.size()) + " fixtures valid, " + std::to_string(detected) + " mutations detected";
  return o;
}

Outcome extension_roundtrip(const std::vector<NamedFixture>& fx) {
  Outcome o;
  for (const auto& [name, d] : fx) {
    const ExtensionData e = decompose(d);
    o.require(validate_cocycle_equations(e), name + " cocycles");
    const DoubleGroupoid rebuilt = build_extension(e);
    const DoubleIso psi{identity_map(d.horizontal()), identity_map(d.vertical()), extension_witness(d)};
    o.require(check_double_iso(rebuilt, d, psi), name + " witness");
  }
  if (o.ok) o.detail = "explicit witness is an isomorphism on all fixtures; four equations hold";
  return o;
}

Outcome frame_counting(const std::vector<NamedFixture>& fx) {
  Outcome o;
  std::string summary;
  for (const auto& [name, d] : fx) {
    const DoubleGroupoid f = frame(d);
    const KernelBundle k = kernel(d);
    std::size_t sum = 0;
    for (std::size_t i = 0; i < f.box_count(); ++i) sum += k.bundle.fiber(f.bottom_left(box_id(i))).size();
    o.require(sum == d.box_count(), name + ": sum " + std::to_string(sum) + " vs " + std::to_string(d.box_count()));
    o.require(psi_check(d, choose_section(d, f)), name);
    if (is_slim(d)) o.require(f.box_count() == d.box_count(), name + ": slim but frame differs");
    summary += " " + name + "=" + std::to_string(d.box_count());
  }
  o.require(find(fx, "A2").box_count() == 2, "A2 should have 2 boxes");
  o.require(find(fx, "EXT1").box_count() == 32, "EXT1 should have 32 boxes");
  if (o.ok) o.detail = "|B| = sum of kernel fibers:" + summary;
  return o;
}

Outcome slim_roundtrips(const std::vector<NamedFixture>& fx) {
  Outcome o;
  for (const char* name : {"CPAIR2", "CPAIR3", "S3F"}) o.require(roundtrip_slim(find(fx, name)), name);
  for (const auto& [name, dg] : standard_diagrams()) o.require(roundtrip_diagram(dg), name);
  const Diagram p2 = diagonal(find(fx, "CPAIR2"));
  o.require(p2.d.arrow_count() == 4 && p2.d.object_count() == 2, "diagonal(CPAIR2) is not 4 arrows on 2 objects");
  const Diagram s3 = diagonal(find(fx, "S3F"));
  o.require(s3.d.arrow_count() == 6 && s3.d.vertex_group(make_id<ObjectId>(0)).size() == 6,
            "diagonal(S3F) is not one vertex group of order 6");
  if (o.ok) o.detail = "3 slim and 3 diagram round trips; |D(CPAIR2)| = 4, |D(S3F)| = 6";
  return o;
}

Outcome well_definedness(const std::vector<NamedFixture>& fx) {
  Outcome o;
  std::size_t products = 0;
  for (const auto& [name, d] : fx) {
    // Non-slim fixtures are checked through their frames.
    const DoubleGroupoid s = is_slim(d) ? d : frame(d);
    o.require(diagonal_report(s), name);
    products += diagonal_model(s).product_checks;
  }
  const DoubleGroupoid& cp = find(fx, "CPAIR2");
  const FiniteGroupoid& h = cp.horizontal();
  const FiniteGroupoid& v = cp.vertical();
  for (std::size_t x = 0; x < h.arrow_count(); ++x)
    for (std::size_t g = 0; g < v.arrow_count(); ++g) {
      const ArrowId xa = make_id<ArrowId>(x), ga = make_id<ArrowId>(g);
      if (h.tgt(xa) != v.src(ga)) continue;
      o.require(ur_set(cp, xa, ga).size() == 2, "CPAIR2 configuration without exactly 2 fillings");
    }
  if (o.ok) o.detail = std::to_string(products) + " representative/filling products agree";
  return o;
}

bool core_trivial(const DoubleGroupoid& d) {
  const CoreGroupoid e = core(d);
  for (std::size_t a = 0; a < e.groupoid.arrow_count(); ++a)
    if (!e.groupoid.is_identity(make_id<ArrowId>(a))) return false;
  return true;
}

Outcome corner_counting(const std::vector<NamedFixture>& fx) {
  Outcome o;
  for (const auto& [name, d] : fx) o.require(corner_facts(d), name);
  const DoubleGroupoid& s3 = find(fx, "S3F");
  o.require(is_vacant(s3) && core_trivial(s3), "S3F should be vacant with trivial core");
  for (const char* name : {"A2", "CPAIR2"})
    o.require(!is_vacant(find(fx, name)) && !core_trivial(find(fx, name)),
              std::string(name) + " should be non-vacant with non-trivial core");
  if (o.ok) o.detail = "corner formula and facts (a)-(d) hold on all fixtures";
  return o;
}

Path random_path(const FreeProduct& fp, std::mt19937_64& rng, std::size_t len) {
  const std::size_t objects = fp.groupoid(Side::H).object_count();
  ObjectId at = make_id<ObjectId>(std::uniform_int_distribution<std::size_t>(0, objects - 1)(rng));
  Path p;
  for (std::size_t i = 0; i < len; ++i) {
    const Side s = rng() % 2 ? Side::H : Side::V;
    const auto out = fp.groupoid(s).arrows_from(at);
    const ArrowId a = out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)];
    p.push_back({s, a});
    at = fp.groupoid(s).tgt(a);
  }
  return p;
}

Outcome rewriting(const std::vector<NamedFixture>& fx) {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::size_t samples = 0;
  for (const auto& [name, d] : fx) {
    const FreeProduct fp(d.horizontal(), d.vertical());
    for (int n = 0; n < 200; ++n) {
      const Path p = random_path(fp, rng, 1 + rng() % 8);
      const ReducedWord expected = fp.reduce(p);
      for (int schedule = 0; schedule < 10; ++schedule, ++samples)
        o.require(fp.reduce_randomly(p, rng) == expected, name + ": schedules disagree");
    }
  }
  o.require(samples >= 2000, "too few confluence samples");

  std::size_t configs = 0, violations = 0;
  std::string witness;
  for (const auto& [name, d] : fx) {
    const FreeProduct fp(d.horizontal(), d.vertical());
    const auto words = all_reduced_words(fp, 4);
    for (const auto& p : words)
      for (const auto& q : words) {
        if (fp.target(p) != fp.source(q)) continue;
        const auto stated = stated_length(fp, p, q);
        if (!stated) continue;
        ++configs;
        const std::size_t actual = fp.concat(p, q).length();
        if (actual != *stated && violations++ == 0)
          witness = name + ": (" + to_string(p) + ")(" + to_string(q) + ") has length " +
                    std::to_string(actual) + ", stated " + std::to_string(*stated);
        o.require(forced_length(fp, p, q) == actual, name + ": corrected length disagrees");
      }
  }
  if (violations)
    o.fail(std::to_string(samples) + " confluence samples agree; " + std::to_string(violations) + " of " +
           std::to_string(configs) + " length configurations violate case (iii) as stated, first " + witness +
           "; corrected count N+M-3 matches all");
  if (o.ok) o.detail = std::to_string(samples) + " confluence samples; " + std::to_string(configs) + " length configurations";
  return o;
}

Outcome fusion_suite(const std::vector<NamedFixture>& fx) {
  Outcome o;
  o.require(is_fusion(find(fx, "S3F")).fusion, "S3F should be fusion");
  o.require(is_fusion(find(fx, "CPAIR2")).fusion, "CPAIR2 should be fusion");
  o.require(!is_fusion(find(fx, "A2")).fusion, "A2 should not be fusion");
  for (const auto& [name, d] : fx) {
    if (!has_filling(d)) continue;
    const FusionVerdict v = is_fusion(d);
    if (v.fusion) o.require(is_slim(d), name + ": fusion but not slim");
    if (is_slim(d)) {
      const Diagram dg = diagonal(d);
      const bool rhs = is_connected(d.vertical()) && is_injective(dg.j);
      o.require(v.fusion == rhs, name + ": fusion differs from connected V with injective j");
    }
    o.require(frame_core_sequence(d), name);
  }
  if (o.ok) o.detail = "verdicts S3F, CPAIR2 fusion, A2 not; equivalence and exact sequence hold";
  return o;
}

std::vector<ReducedWord> short_words(const FreeProduct& fp) {
  std::vector<ReducedWord> out;
  for (std::size_t p = 0; p < fp.groupoid(Side::H).object_count(); ++p) out.push_back(fp.point(make_id<ObjectId>(p)));
  for (auto& w : all_reduced_words(fp, 2)) out.push_back(std::move(w));
  return out;
}

Outcome oracle(const std::vector<NamedFixture>& fx) {
  Outcome o;
  std::size_t pairs = 0;
  for (const char* name : {"S3F", "CPAIR2"}) {
    const DoubleGroupoid& d = find(fx, name);
    const Diagram dg = diagonal(d);
    const FreeProduct fp(d.horizontal(), d.vertical());
    const auto words = short_words(fp);
    for (const auto& a : words)
      for (const auto& b : words) {
        if (fp.source(a) != fp.source(b) || fp.target(a) != fp.target(b)) continue;
        ++pairs;
        const bool model = evaluate(dg, a) == evaluate(dg, b);
        const bool member = j_closure_oracle(d, fp.concat(a, fp.inverse(b)), 3) == OracleVerdict::Member;
        o.require(model == member, std::string(name) + ": model " + (model ? "equal" : "distinct") +
                                       " but oracle " + (member ? "member" : "bound exceeded") + " for (" +
                                       to_string(a) + ") vs (" + to_string(b) + ")");
      }
  }
  if (o.ok) o.detail = std::to_string(pairs) + " word pairs agree";
  return o;
}

}  // namespace

int main() {
  const std::vector<NamedFixture> fx = standard_fixtures();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"axiom suite", [&] { return axioms(fx); }},
      {"extension round trip", [&] { return extension_roundtrip(fx); }},
      {"frame counting", [&] { return frame_counting(fx); }},
      {"slim round trips", [&] { return slim_roundtrips(fx); }},
      {"well-definedness", [&] { return well_definedness(fx); }},
      {"corner counting", [&] { return corner_counting(fx); }},
      {"rewriting", [&] { return rewriting(fx); }},
      {"fusion", [&] { return fusion_suite(fx); }},
      {"oracle consistency", [&] { return oracle(fx); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("criterion %zu %-22s %s  %s\n", i + 1, criteria[i].first, o.ok ? "PASS" : "FAIL", o.detail.c_str());
    failures += !o.ok;
  }
  return failures;
}
