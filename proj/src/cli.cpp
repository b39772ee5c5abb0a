#include "pogroup/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "pogroup/error.hpp"
#include "pogroup/io.hpp"
#include "pogroup/oracle.hpp"
#include "pogroup/render.hpp"

namespace pogroup::cli {

namespace {

using io::Json;

struct Options {
  std::string input;
  std::string face;
  std::string box;
  std::string out;
  std::string format = "json";
  std::string degree;
  std::string vector;
  bool local = false;
  bool global = false;
  bool prune = false;
  std::size_t budget = kDefaultCoprimaryDegreeBudget;
};

std::string trim(std::string s) {
  auto sp = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), sp));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), sp).base(), s.end());
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep))
    parts.push_back(trim(part));
  return parts;
}

std::int64_t parse_int(const std::string& s, const std::string& flag) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used == s.size())
      return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::InvalidInput, flag + ": malformed integer \"" + s + "\"");
}

std::optional<std::size_t> lattice_id(const std::string& text) {
  if (text.size() > 1 && text[0] == '#')
    return static_cast<std::size_t>(parse_int(text.substr(1), "--face"));
  return std::nullopt;
}

/// Orthant faces: "x", "xy", "0,2", "[1]", "origin" / "[]", "full" or "#k".
CoordSet parse_orthant_face(const std::string& raw, std::size_t n, const FaceLattice* lattice) {
  std::string text = trim(raw);
  if (text.empty())
    throw Error(ErrorKind::InvalidInput, "--face: required");
  if (auto id = lattice_id(text)) {
    if (!lattice || *id >= lattice->faces.size())
      throw Error(ErrorKind::FaceNotInLattice, "--face: lattice id " + text.substr(1) + " out of range");
    return lattice->faces[*id].char_set;
  }
  if (text == "origin" || text == "none")
    return CoordSet();
  if (text == "full")
    return CoordSet::full(n);
  if (text.front() == '[' && text.back() == ']')
    text = trim(text.substr(1, text.size() - 2));
  if (text.empty())
    return CoordSet();
  CoordSet face;
  if (std::all_of(text.begin(), text.end(), [](char c) { return std::string("xyzw").find(c) != std::string::npos; })) {
    for (char c : text)
      face = face.with(std::string("xyzw").find(c));
  } else {
    for (const auto& part : split(text, ','))
      face = face.with(static_cast<std::size_t>(std::max<std::int64_t>(0, parse_int(part, "--face"))));
  }
  if (!face.is_subset_of(CoordSet::full(n)))
    throw Error(ErrorKind::FaceNotInLattice, "--face: \"" + raw + "\" names a coordinate beyond rank " +
                                                 std::to_string(n));
  return face;
}

/// Cone-int faces: lattice id "k" or "#k", "origin", "full".
std::size_t parse_lattice_face(const std::string& raw, const FaceLattice& lattice) {
  std::string text = trim(raw);
  std::size_t id;
  if (text == "origin" || text == "[]" || text == "none")
    id = lattice.trivial();
  else if (text == "full")
    id = lattice.full();
  else if (auto k = lattice_id(text))
    id = *k;
  else
    id = static_cast<std::size_t>(parse_int(text, "--face"));
  if (id >= lattice.faces.size())
    throw Error(ErrorKind::FaceNotInLattice, "--face: lattice id " + std::to_string(id) + " out of range");
  return id;
}

Json face_json(CoordSet face) {
  Json a = Json::array();
  for (int i : face.indices())
    a.push_back(i);
  return a;
}

IntVec parse_degree(const std::string& s, std::size_t n) {
  std::string t = trim(s);
  if (!t.empty() && t.front() == '[' && t.back() == ']')
    t = t.substr(1, t.size() - 2);
  IntVec q;
  for (const auto& part : split(t, ','))
    q.push_back(parse_int(part, "--degree"));
  if (q.size() != n)
    throw Error(ErrorKind::RankMismatch, "--degree: expected " + std::to_string(n) + " coordinates");
  return q;
}

RatVec parse_vector(const std::string& s) {
  std::string t = trim(s);
  if (!t.empty() && t.front() == '[' && t.back() == ']')
    t = t.substr(1, t.size() - 2);
  RatVec v;
  if (trim(t).empty())
    return v;
  for (const auto& part : split(t, ',')) {
    std::string p = part;
    if (p.size() >= 2 && p.front() == '"' && p.back() == '"')
      p = p.substr(1, p.size() - 2);
    try {
      v.push_back(parse_rational(p));
    } catch (const Error&) {
      throw Error(ErrorKind::InvalidInput, "--vector: malformed rational \"" + part + "\"");
    }
  }
  return v;
}

Json region_result(const Region& r) { return io::to_json(r); }

Json components_json(const DownsetExpr& d, const std::vector<Component>& comps) {
  Json out = Json::array();
  for (const auto& c : comps)
    out.push_back({{"face", face_json(c.face)},
                   {"label", face_label(c.face)},
                   {"pieces", io::pieces_to_json(c.downset)},
                   {"local_support", io::to_json(local_support(d, c.face))}});
  return out;
}

GridBox grid_box_option(const Options& o, std::size_t n, const GridBox& fallback) {
  if (o.box.empty())
    return fallback;
  ViewBox v = parse_view_box(o.box, n);
  return GridBox(v.lo, v.hi);
}

GridBox general_margin_box(const GeneralDownset& d) {
  IntVec lo(d.cone.n, 0), hi(d.cone.n, 0);
  for (const auto& p : d.pieces)
    for (std::size_t i = 0; i < d.cone.n; ++i) {
      lo[i] = std::min(lo[i], p.apex[i]);
      hi[i] = std::max(hi[i], p.apex[i]);
    }
  for (std::size_t i = 0; i < d.cone.n; ++i) {
    lo[i] -= 2;
    hi[i] += 2;
  }
  return GridBox(lo, hi);
}


Json load(const std::string& path, const char* flag) {
  if (path.empty())
    throw Error(ErrorKind::InvalidInput, std::string(flag) + ": required");
  return io::read_file(path);
}

// ---- commands ------------------------------------------------------------

Json cmd_faces(const Options& o) {
  Json j = load(o.input, "--cone");
  // Accept a bare cone or anything with a "group" member.
  ConePresentation cone = j.contains("kind") ? io::cone_from_json(j, "")
                                             : io::cone_from_json(j.value("group", Json()), "group");
  FaceLattice lattice = enumerate_faces(cone);
  Json out = io::to_json(cone, lattice);
  out["count"] = lattice.faces.size();
  return out;
}

Json cmd_localize(const Options& o) {
  Json j = load(o.input, "--input");
  auto any = io::any_downset_from_json(j);
  if (auto* d = std::get_if<DownsetExpr>(&any)) {
    CoordSet tau = parse_orthant_face(o.face, d->rank(), nullptr);
    return {{"face", face_json(tau)}, {"downset", io::to_json(localize(*d, tau))}};
  }
  const auto& g = std::get<GeneralDownset>(any);
  std::size_t tau = parse_lattice_face(o.face, g.lattice);
  return {{"face", tau}, {"downset", io::to_json(localize_general(g, tau))}};
}

Json cmd_support(const Options& o) {
  if (o.local && o.global)
    throw Error(ErrorKind::InvalidInput, "--local and --global are exclusive");
  Json j = load(o.input, "--input");
  auto any = io::any_downset_from_json(j);
  const char* kind = o.local ? "local" : "global";
  if (auto* d = std::get_if<DownsetExpr>(&any)) {
    CoordSet tau = parse_orthant_face(o.face, d->rank(), nullptr);
    Region r = o.local ? local_support(*d, tau) : global_support(*d, tau);
    return {{"face", face_json(tau)}, {"support", kind}, {"region", region_result(r)}};
  }
  const auto& g = std::get<GeneralDownset>(any);
  std::size_t tau = parse_lattice_face(o.face, g.lattice);
  GridBox box = grid_box_option(o, g.cone.n, general_margin_box(g));
  GeneralSupports s = grid_supports_general(g, tau, box);
  return {{"face", tau},
          {"support", kind},
          {"box", io::to_json(box)},
          {"points", io::points_to_json(o.local ? s.local : s.global)}};
}

Json cmd_decompose_downset(const Options& o) {
  DownsetExpr d = io::downset_from_json(load(o.input, "--input"));
  auto comps = canonical_decomposition(d);
  Json out = {{"downset", io::to_json(d)}, {"components", components_json(d, comps)}};
  if (o.prune) {
    auto pruned = prune_redundant(comps, d);
    Json removed = Json::array();
    for (const auto& c : comps)
      if (std::none_of(pruned.begin(), pruned.end(), [&](const Component& p) { return p.face == c.face; }))
        removed.push_back(face_json(c.face));
    out["components"] = components_json(d, pruned);
    out["removed"] = removed;
  }
  return out;
}

HullPresentation load_module(const Options& o) {
  Json j = load(o.input, "--module");
  if (j.contains("hull"))
    return io::hull_from_json(j);
  // A downset on its own stands for k[D] on the box, which is generated at
  // the lower corner whenever D meets the box.
  DownsetExpr d = io::downset_from_json(j);
  GridBox box = grid_box_option(o, d.rank(), oracle::margin_box(d, 1));
  HullPresentation h{{d}, {}, box};
  if (member(box.lo(), d))
    h.generators.push_back({box.lo(), {Rational(1)}});
  return h;
}

Json cmd_decompose_module(const Options& o) {
  HullPresentation h = load_module(o);
  ModuleDecomposition dec = primary_decomposition_module(h);
  Json comps = Json::array();
  for (const auto& c : dec.components)
    comps.push_back({{"face", face_json(c.face)},
                     {"label", face_label(c.face)},
                     {"quotient_dims", io::dims_to_json(c.quotient)}});
  return {{"box", io::to_json(h.box)},
          {"module_dims", io::dims_to_json(dec.realized.module)},
          {"components", comps},
          {"injective", true}};
}

Json cmd_classify(const Options& o) {
  HullPresentation h = load_module(o);
  GridModule m = realize_module(h);
  CoordSet tau = parse_orthant_face(o.face, m.rank(), nullptr);
  IntVec q = parse_degree(o.degree, m.rank());
  if (!m.box().contains(q))
    throw Error(ErrorKind::DegreeOutsideBox, "--degree outside the module box");
  RatVec v = o.vector.empty() ? RatVec(m.dim(q), Rational(1)) : parse_vector(o.vector);
  ElementClass c = classify_element(m, q, v, tau);
  auto multiple = coprimary_multiple(m, q, v, tau);
  Json mj = nullptr;
  if (multiple) {
    mj = Json::array();
    for (auto x : *multiple)
      mj.push_back(x);
  }
  return {{"face", face_json(tau)},
          {"persistent", c.persistent},
          {"transient", c.transient},
          {"coprimary", c.coprimary},
          {"coprimary_multiple", mj}};
}

struct Report {
  Json checks = Json::array();
  bool ok = true;
  void add(const std::string& name, bool pass, const std::string& detail = "") {
    Json c = {{"name", name}, {"ok", pass}};
    if (!detail.empty())
      c["detail"] = detail;
    checks.push_back(c);
    ok = ok && pass;
  }
};

std::string mismatch(const oracle::Comparison& c) {
  return c.mismatch ? "first mismatch at " + format_point(to_rational(*c.mismatch)) : "";
}

void check_orthant(const DownsetExpr& d, Report& r) {
  auto faces = orthant_faces(d.rank());
  for (std::int64_t margin : {1, 3}) {
    GridBox box = oracle::margin_box(d, margin);
    if (box.size() > 2000000) {
      r.add("grid oracle margin " + std::to_string(margin), true, "skipped: box too large");
      continue;
    }
    GridSet g = oracle::grid_from_downset(d, box);
    std::string suffix = " (margin " + std::to_string(margin) + ")";
    r.add("grid is a downset" + suffix, oracle::is_downset(g));
    for (CoordSet tau : faces) {
      std::string f = " face " + face_label(tau) + suffix;
      auto c1 = oracle::compare(localize(d, tau), oracle::grid_localize(g, tau));
      r.add("localize" + f, c1.equal, mismatch(c1));
      auto c2 = oracle::compare(global_support(d, tau), oracle::grid_global_support(g, tau));
      r.add("global support" + f, c2.equal, mismatch(c2));
      auto c3 = oracle::compare(local_support(d, tau), oracle::grid_local_support(g, tau));
      r.add("local support" + f, c3.equal, mismatch(c3));
      auto c4 = oracle::compare(primary_component(d, tau), oracle::grid_primary_component(g, tau));
      r.add("primary component" + f, c4.equal, mismatch(c4));
    }
  }
  Region whole = to_region(d);
  Region unite(d.rank(), d.mode());
  for (CoordSet tau : faces)
    unite = region_union(unite, local_support(d, tau));
  r.add("union of local supports equals D", region_equals(unite, whole));

  bool disjoint = true, inside = true;
  std::vector<Region> parts;
  for (CoordSet tau : faces)
    parts.push_back(region_intersect(global_support(d, tau), to_region(localize(d, tau))));
  for (std::size_t a = 0; a < parts.size(); ++a) {
    inside = inside && region_subset(parts[a], whole);
    for (std::size_t b = a + 1; b < parts.size(); ++b)
      disjoint = disjoint && region_is_empty(region_intersect(parts[a], parts[b]));
  }
  r.add("supports in localizations are pairwise disjoint", disjoint);
  r.add("supports in localizations lie in D", inside);

  auto comps = canonical_decomposition(d);
  Region cover(d.rank(), d.mode());
  for (const auto& c : comps) {
    auto face = is_coprimary_downset(c.downset);
    r.add("component " + face_label(c.face) + " is coprimary for its face", face && *face == c.face);
    cover = region_union(cover, to_region(c.downset));
  }
  r.add("components cover D", region_equals(cover, whole));
}

void check_general(const GeneralDownset& d, Report& r) {
  r.add("cone closedness proven", d.lattice.closed_flag == ClosedFlag::Proven,
        to_string(d.lattice.closed_flag));
  GridBox box = general_margin_box(d);
  GridSet in_d = GridSet::from_predicate(box, [&](const IntVec& q) { return member(q, d); });
  GridSet unite(box);
  for (const auto& face : d.lattice.faces) {
    GeneralSupports s = grid_supports_general(d, face.id, box);
    unite = unite | s.local;
    if (d.lattice.closed_flag == ClosedFlag::Proven) {
      GeneralDownset loc = localize_general(d, face.id);
      IntVec w = interior_point(d.cone, face);
      GridSet sym = GridSet::from_predicate(box, [&](const IntVec& q) { return member(q, loc); });
      GridSet grid = GridSet::from_predicate(box, [&](const IntVec& q) { return pushed_member(q, w, d); });
      r.add("localize face #" + std::to_string(face.id), sym == grid);
    }
  }
  r.add("union of local supports equals D on the box", unite == in_d);
}

void check_module(const HullPresentation& h, std::size_t budget, Report& r) {
  ModuleDecomposition dec = primary_decomposition_module(h);
  r.add("module is commutative", dec.realized.module.is_commutative());
  r.add("kernels intersect to zero", true);
  for (const auto& c : dec.components)
    r.add("quotient " + face_label(c.face) + " is coprimary",
          is_coprimary_module(c.quotient, c.face, budget));
}

Json cmd_check(const Options& o) {
  Json j = load(o.input, "--input");
  Report r;
  if (j.contains("hull")) {
    check_module(io::hull_from_json(j), o.budget, r);
  } else {
    auto any = io::any_downset_from_json(j);
    if (auto* d = std::get_if<DownsetExpr>(&any))
      check_orthant(*d, r);
    else
      check_general(std::get<GeneralDownset>(any), r);
  }
  return {{"checks", r.checks}, {"ok", r.ok}};
}

std::string cmd_render(const Options& o) {
  Json j = load(o.input, "--input");
  std::vector<Panel> panels;
  ViewBox view;
  if (j.contains("boxes")) {
    Region region = io::region_from_json(j);
    if (o.box.empty())
      throw Error(ErrorKind::InvalidInput, "--box: required for regions");
    view = parse_view_box(o.box, region.rank());
    panels.push_back({"region", {{region, "#3182bd"}}, 0});
  } else {
    DownsetExpr d = io::downset_from_json(j);
    view = o.box.empty() ? default_view(d) : parse_view_box(o.box, d.rank());
    panels = component_panels(d, canonical_decomposition(d));
  }
  if (o.format == "svg")
    return render_svg(panels, view);
  if (o.format == "ascii")
    return render_ascii(panels, view);
  throw Error(ErrorKind::InvalidInput, "--format: render supports svg or ascii");
}

} // namespace

int exit_code(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::BoxTooLarge:
  case ErrorKind::ConversionOverflow:
    return kExitBudget;
  case ErrorKind::DecompositionUnionMismatch:
  case ErrorKind::InjectivityFailure:
    return kExitCheckFailed;
  default:
    return kExitInvalid;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Primary decomposition of downsets and modules over partially ordered groups", "pogroup"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input,--module", o.input, "JSON input file");
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "write output to FILE instead of stdout");
    sub->add_option("--format", o.format, "json, svg or ascii");
  };
  auto add_face = [&](CLI::App* sub) {
    sub->add_option("--face", o.face, "face: letters (xy), indices (0,2), #id, origin or full")
        ->required();
  };

  auto* faces = app.add_subcommand("faces", "face lattice of a cone");
  faces->add_option("--cone,--input", o.input, "cone JSON file")->required();
  add_out(faces);

  auto* loc = app.add_subcommand("localize", "localization of a downset along a face");
  add_input(loc);
  add_face(loc);
  add_out(loc);

  auto* sup = app.add_subcommand("support", "global or local support along a face");
  add_input(sup);
  add_face(sup);
  sup->add_flag("--local", o.local, "local support");
  sup->add_flag("--global", o.global, "global support (default)");
  sup->add_option("--box", o.box, "grid box LO..HI for cone-int groups");
  add_out(sup);

  auto* dd = app.add_subcommand("decompose-downset", "canonical primary decomposition of a downset");
  add_input(dd);
  dd->add_flag("--prune", o.prune, "greedily drop redundant components");
  add_out(dd);

  auto* dm = app.add_subcommand("decompose-module", "primary decomposition of a hull-presented module");
  add_input(dm);
  dm->add_option("--box", o.box, "box LO..HI when the input is a downset");
  add_out(dm);

  auto* cl = app.add_subcommand("classify", "persistence/transience of a homogeneous element");
  add_input(cl);
  add_face(cl);
  cl->add_option("--degree", o.degree, "degree, e.g. 1,1")->required();
  cl->add_option("--vector", o.vector, "coefficients, e.g. 1,1/2 (default all ones)");
  cl->add_option("--box", o.box, "box LO..HI when the input is a downset");
  add_out(cl);

  auto* ck = app.add_subcommand("check", "run the invariant suite on an instance");
  add_input(ck);
  ck->add_option("--budget", o.budget, "degree budget for coprimary checks");
  add_out(ck);

  auto* rd = app.add_subcommand("render", "draw a rank-2 downset decomposition or region");
  add_input(rd);
  rd->add_option("--box", o.box, "view window LO..HI, e.g. -4..4 or -2,-40..22,440");
  add_out(rd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    std::string text;
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "render") {
      if (o.format == "json")
        o.format = "svg";
      text = cmd_render(o);
    } else {
      if (o.format != "json")
        throw Error(ErrorKind::InvalidInput, "--format: " + name + " only emits json");
      Json result;
      if (name == "faces")
        result = cmd_faces(o);
      else if (name == "localize")
        result = cmd_localize(o);
      else if (name == "support")
        result = cmd_support(o);
      else if (name == "decompose-downset")
        result = cmd_decompose_downset(o);
      else if (name == "decompose-module")
        result = cmd_decompose_module(o);
      else if (name == "classify")
        result = cmd_classify(o);
      else
        result = cmd_check(o);
      text = io::dump(result);
      if (name == "check" && !result["ok"].get<bool>()) {
        out << text;
        return kExitCheckFailed;
      }
    }
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out, std::ios::binary);
      if (!file)
        throw Error(ErrorKind::InvalidInput, "--out: cannot write " + o.out);
      file << text;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
}

} // namespace pogroup::cli
