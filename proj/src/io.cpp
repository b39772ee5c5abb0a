#include "pogroup/io.hpp"

#include <fstream>
#include <sstream>

#include "pogroup/error.hpp"

namespace pogroup::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::InvalidInput, (path.empty() ? std::string("<root>") : path) + ": " + what);
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string at(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object())
    fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end())
    fail(join(path, key), "missing field");
  return *it;
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array())
    fail(path, "expected an array");
  return j;
}

std::int64_t integer(const Json& j, const std::string& path) {
  if (j.is_number_integer())
    return j.get<std::int64_t>();
  if (j.is_number_unsigned() && j.get<std::uint64_t>() <= INT64_MAX)
    return static_cast<std::int64_t>(j.get<std::uint64_t>());
  fail(path, "expected an integer");
}

std::size_t count(const Json& j, const std::string& path) {
  std::int64_t v = integer(j, path);
  if (v < 0)
    fail(path, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

IntVec int_vector(const Json& j, const std::string& path, std::size_t n) {
  array(j, path);
  if (j.size() != n)
    throw Error(ErrorKind::RankMismatch,
                path + ": expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  IntVec v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(integer(j[i], at(path, i)));
  return v;
}

std::vector<IntVec> int_rows(const Json& j, const std::string& path, std::size_t n) {
  array(j, path);
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < j.size(); ++i)
    rows.push_back(int_vector(j[i], at(path, i), n));
  return rows;
}

Json int_vector_json(const IntVec& v) {
  Json out = Json::array();
  for (auto x : v)
    out.push_back(x);
  return out;
}

Json indices_json(CoordSet s) {
  Json out = Json::array();
  for (int i : s.indices())
    out.push_back(i);
  return out;
}

CoordSet face_from_json(const Json& j, const std::string& path, std::size_t n) {
  array(j, path);
  CoordSet s;
  for (std::size_t k = 0; k < j.size(); ++k) {
    std::int64_t i = integer(j[k], at(path, k));
    if (i < 0 || static_cast<std::size_t>(i) >= n)
      throw Error(ErrorKind::FaceNotInLattice, at(path, k) + ": coordinate index " +
                                                   std::to_string(i) + " out of range for rank " +
                                                   std::to_string(n));
    if (s.contains(static_cast<std::size_t>(i)))
      fail(at(path, k), "repeated coordinate index " + std::to_string(i));
    s = s.with(static_cast<std::size_t>(i));
  }
  return s;
}

std::string kind_name(ConeKind k) { return to_string(k); }

// Integer-mode regions hold only before-cuts at integers.
Json lower_json(const Cut& c) {
  return c.finite() ? to_json(c.value) : Json(nullptr);
}

} // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::InvalidInput, source + ":" + std::to_string(line) + ":" +
                                             std::to_string(col) + ": malformed JSON");
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::InvalidInput, path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

Json to_json(const Rational& r) {
  if (is_integer(r) && r.get_num().fits_slong_p())
    return static_cast<std::int64_t>(r.get_num().get_si());
  return format_rational(r);
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer() || j.is_number_unsigned())
    return Rational(std::to_string(integer(j, path)));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error&) {
      fail(path, "malformed rational \"" + j.get<std::string>() + "\"");
    }
  }
  fail(path, "expected an integer or a \"p/q\" string");
}

Json to_json(const ConePresentation& cone) {
  Json out = {{"kind", kind_name(cone.kind)}, {"n", cone.n}};
  if (cone.kind == ConeKind::ConeInt) {
    Json gens = Json::array(), hs = Json::array();
    for (const auto& g : cone.generators)
      gens.push_back(int_vector_json(g));
    for (const auto& h : cone.halfspaces)
      hs.push_back(int_vector_json(h));
    out["generators"] = gens;
    out["halfspaces"] = hs;
  }
  return out;
}

ConePresentation cone_from_json(const Json& j, const std::string& path) {
  const Json& kind_j = field(j, "kind", path);
  if (!kind_j.is_string())
    fail(join(path, "kind"), "expected a string");
  std::string kind = kind_j.get<std::string>();
  std::size_t n = count(field(j, "n", path), join(path, "n"));
  if (n == 0)
    fail(join(path, "n"), "rank must be positive");
  if (kind == "orthant-int" || kind == "orthant-rat") {
    if (n > kMaxOrthantRank)
      fail(join(path, "n"), "rank exceeds " + std::to_string(kMaxOrthantRank));
    return kind == "orthant-int" ? ConePresentation::orthant_int(n) : ConePresentation::orthant_rat(n);
  }
  if (kind == "cone-int") {
    if (n > kMaxConeRank)
      fail(join(path, "n"), "cone-int rank exceeds " + std::to_string(kMaxConeRank));
    bool has_g = j.contains("generators"), has_h = j.contains("halfspaces");
    if (!has_g && !has_h)
      fail(path, "cone-int needs generators or halfspaces");
    ConePresentation cone;
    if (has_g) {
      cone = ConePresentation::from_generators(
          n, int_rows(j["generators"], join(path, "generators"), n));
      if (has_h) {
        auto other = ConePresentation::from_halfspaces(
            n, int_rows(j["halfspaces"], join(path, "halfspaces"), n));
        if (other.halfspaces != cone.halfspaces)
          fail(join(path, "halfspaces"), "does not describe the cone of the generators");
      }
    } else {
      cone = ConePresentation::from_halfspaces(
          n, int_rows(j["halfspaces"], join(path, "halfspaces"), n));
    }
    return cone;
  }
  if (kind.find("torsion") != std::string::npos)
    fail(join(path, "kind"), "groups with torsion are not supported");
  fail(join(path, "kind"), "unknown group kind \"" + kind + "\"");
}

Json face_to_json(const ConePresentation& cone, const Face& face) {
  Json out = {{"id", face.id}};
  if (cone.is_orthant()) {
    out["char_set"] = indices_json(face.char_set);
  } else {
    Json t = Json::array();
    for (int k : face.tight)
      t.push_back(k);
    out["tight"] = t;
  }
  return out;
}

Json to_json(const ConePresentation& cone, const FaceLattice& lattice) {
  Json faces = Json::array(), rays = Json::array();
  for (const auto& f : lattice.faces) {
    Json fj = face_to_json(cone, f);
    fj["dim"] = f.dim;
    Json gens = Json::array();
    for (int g : f.generator_ids)
      gens.push_back(g);
    fj["generator_ids"] = gens;
    faces.push_back(fj);
  }
  for (auto r : lattice.rays)
    rays.push_back(r);
  return {{"group", to_json(cone)},
          {"faces", faces},
          {"rays", rays},
          {"closed", to_string(lattice.closed_flag)}};
}

Json pieces_to_json(const DownsetExpr& d) {
  Json pieces = Json::array();
  for (const auto& p : d.pieces) {
    Json apex = Json::array();
    for (const auto& a : p.apex) {
      if (d.group.integral())
        apex.push_back(a.get_num().get_si());
      else
        apex.push_back(to_json(a));
    }
    Json pj = {{"apex", apex}, {"face", indices_json(p.face)}};
    bool any_strict = false;
    for (std::size_t i = 0; i < d.rank(); ++i)
      any_strict = any_strict || p.is_strict(i);
    if (any_strict) {
      Json s = Json::array();
      for (std::size_t i = 0; i < d.rank(); ++i)
        s.push_back(p.is_strict(i));
      pj["strict"] = s;
    }
    pieces.push_back(pj);
  }
  return pieces;
}

Json to_json(const DownsetExpr& d) {
  return {{"group", to_json(d.group)}, {"pieces", pieces_to_json(d)}};
}

DownsetExpr downset_from_json(const Json& j, const std::string& path) {
  DownsetExpr d;
  d.group = cone_from_json(field(j, "group", path), join(path, "group"));
  if (!d.group.is_orthant())
    throw Error(ErrorKind::ModeMismatch, join(path, "group") + ": an orthant group is required here");
  const std::size_t n = d.group.n;
  const std::string pp = join(path, "pieces");
  const Json& pieces = array(field(j, "pieces", path), pp);
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const std::string here = at(pp, k);
    CoprincipalPiece p;
    const Json& apex = array(field(pieces[k], "apex", here), join(here, "apex"));
    if (apex.size() != n)
      throw Error(ErrorKind::RankMismatch, join(here, "apex") + ": expected " + std::to_string(n) +
                                               " entries, got " + std::to_string(apex.size()));
    for (std::size_t i = 0; i < n; ++i) {
      Rational a = rational_from_json(apex[i], at(join(here, "apex"), i));
      if (d.group.integral() && !is_integer(a))
        fail(at(join(here, "apex"), i), "non-integer apex coordinate in an integer group");
      p.apex.push_back(a);
    }
    p.face = face_from_json(field(pieces[k], "face", here), join(here, "face"), n);
    if (pieces[k].contains("strict")) {
      const Json& s = array(pieces[k]["strict"], join(here, "strict"));
      if (s.size() != n)
        throw Error(ErrorKind::RankMismatch, join(here, "strict") + ": expected " +
                                                 std::to_string(n) + " entries");
      for (std::size_t i = 0; i < n; ++i) {
        if (!s[i].is_boolean())
          fail(at(join(here, "strict"), i), "expected a boolean");
        p.strict.push_back(s[i].get<bool>());
      }
    }
    d.pieces.push_back(std::move(p));
  }
  return normalize(std::move(d));
}

Json to_json(const GeneralDownset& d) {
  Json pieces = Json::array();
  for (const auto& p : d.pieces)
    pieces.push_back({{"apex", int_vector_json(p.apex)}, {"face", p.face}});
  return {{"group", to_json(d.cone)}, {"pieces", pieces}};
}

GeneralDownset general_downset_from_json(const Json& j, const std::string& path) {
  ConePresentation cone = cone_from_json(field(j, "group", path), join(path, "group"));
  FaceLattice lattice = enumerate_faces(cone);
  const std::string pp = join(path, "pieces");
  const Json& pieces = array(field(j, "pieces", path), pp);
  std::vector<GeneralPiece> out;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const std::string here = at(pp, k);
    GeneralPiece p;
    p.apex = int_vector(field(pieces[k], "apex", here), join(here, "apex"), cone.n);
    const Json& f = field(pieces[k], "face", here);
    if (f.is_array()) {
      if (!cone.is_orthant())
        fail(join(here, "face"), "faces of a cone-int group are given by lattice id");
      auto id = lattice.find(face_from_json(f, join(here, "face"), cone.n));
      p.face = *id;
    } else {
      p.face = count(f, join(here, "face"));
      if (p.face >= lattice.faces.size())
        throw Error(ErrorKind::FaceNotInLattice, join(here, "face") + ": lattice id " +
                                                     std::to_string(p.face) + " out of range");
    }
    out.push_back(p);
  }
  return make_general_downset(std::move(cone), std::move(out));
}

AnyDownset any_downset_from_json(const Json& j, const std::string& path) {
  const Json& g = field(j, "group", path);
  if (g.is_object() && g.contains("kind") && g["kind"] == "cone-int")
    return general_downset_from_json(j, path);
  return downset_from_json(j, path);
}

Json to_json(const Region& r) {
  bool rational = r.mode() == EndpointMode::Rational;
  Json boxes = Json::array();
  for (const auto& b : r.boxes()) {
    Json lo = Json::array(), hi = Json::array(), lo_open = Json::array(), hi_open = Json::array();
    for (const auto& iv : b) {
      if (!rational) {
        lo.push_back(iv.lo.finite() ? Json(iv.lo.value.get_num().get_si()) : Json(nullptr));
        hi.push_back(iv.hi.finite() ? Json(Rational(iv.hi.value - 1).get_num().get_si())
                                    : Json(nullptr));
      } else {
        lo.push_back(lower_json(iv.lo));
        hi.push_back(lower_json(iv.hi));
        lo_open.push_back(iv.lo.finite() && iv.lo.after);
        hi_open.push_back(iv.hi.finite() && !iv.hi.after);
      }
    }
    Json bj = {{"lo", lo}, {"hi", hi}};
    if (rational) {
      bj["lo_open"] = lo_open;
      bj["hi_open"] = hi_open;
    }
    boxes.push_back(bj);
  }
  return {{"n", r.rank()}, {"mode", rational ? "rational" : "integer"}, {"boxes", boxes}};
}

Region region_from_json(const Json& j, const std::string& path) {
  std::size_t n = count(field(j, "n", path), join(path, "n"));
  EndpointMode mode = EndpointMode::Integer;
  if (j.contains("mode")) {
    if (j["mode"] == "rational")
      mode = EndpointMode::Rational;
    else if (j["mode"] != "integer")
      fail(join(path, "mode"), "expected \"integer\" or \"rational\"");
  }
  const std::string bp = join(path, "boxes");
  const Json& boxes = array(field(j, "boxes", path), bp);
  std::vector<GeneralizedBox> out;
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    const std::string here = at(bp, k);
    const Json& lo = array(field(boxes[k], "lo", here), join(here, "lo"));
    const Json& hi = array(field(boxes[k], "hi", here), join(here, "hi"));
    if (lo.size() != n || hi.size() != n)
      throw Error(ErrorKind::RankMismatch, here + ": bounds must have " + std::to_string(n) + " entries");
    auto flags = [&](const char* key) {
      std::vector<bool> f(n, false);
      if (boxes[k].contains(key)) {
        const Json& a = array(boxes[k][key], join(here, key));
        if (a.size() != n)
          throw Error(ErrorKind::RankMismatch, join(here, key) + ": expected " + std::to_string(n) + " entries");
        for (std::size_t i = 0; i < n; ++i) {
          if (!a[i].is_boolean())
            fail(at(join(here, key), i), "expected a boolean");
          f[i] = a[i].get<bool>();
        }
        if (mode == EndpointMode::Integer && std::find(f.begin(), f.end(), true) != f.end())
          fail(join(here, key), "open endpoints need rational mode");
      }
      return f;
    };
    std::vector<bool> lo_open = flags("lo_open"), hi_open = flags("hi_open");
    GeneralizedBox b;
    for (std::size_t i = 0; i < n; ++i) {
      Interval iv;
      if (!lo[i].is_null()) {
        Rational v = rational_from_json(lo[i], at(join(here, "lo"), i));
        if (mode == EndpointMode::Integer && !is_integer(v))
          fail(at(join(here, "lo"), i), "non-integer bound in integer mode");
        iv.lo = lo_open[i] ? Cut::after_value(v) : Cut::before(v);
      }
      if (!hi[i].is_null()) {
        Rational v = rational_from_json(hi[i], at(join(here, "hi"), i));
        if (mode == EndpointMode::Integer && !is_integer(v))
          fail(at(join(here, "hi"), i), "non-integer bound in integer mode");
        iv.hi = mode == EndpointMode::Integer ? Cut::before(v + 1)
                : hi_open[i]                  ? Cut::before(v)
                                              : Cut::after_value(v);
      }
      b.push_back(iv);
    }
    out.push_back(std::move(b));
  }
  return Region(n, mode, std::move(out));
}

Json to_json(const GridBox& box) {
  return {{"lo", int_vector_json(box.lo())}, {"hi", int_vector_json(box.hi())}};
}

GridBox box_from_json(const Json& j, const std::string& path) {
  const Json& lo_j = array(field(j, "lo", path), join(path, "lo"));
  IntVec lo = int_vector(lo_j, join(path, "lo"), lo_j.size());
  IntVec hi = int_vector(field(j, "hi", path), join(path, "hi"), lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i])
      fail(at(join(path, "hi"), i), "upper bound below lower bound");
  return GridBox(lo, hi);
}

Json to_json(const HullPresentation& h) {
  Json hull = Json::array(), gens = Json::array();
  for (const auto& d : h.hull)
    hull.push_back(to_json(d));
  for (const auto& g : h.generators) {
    Json coeffs = Json::array();
    for (const auto& c : g.coeffs)
      coeffs.push_back(to_json(c));
    gens.push_back({{"degree", int_vector_json(g.degree)}, {"coeffs", coeffs}});
  }
  return {{"hull", hull}, {"generators", gens}, {"box", to_json(h.box)}};
}

HullPresentation hull_from_json(const Json& j, const std::string& path) {
  HullPresentation h;
  h.box = box_from_json(field(j, "box", path), join(path, "box"));
  const std::size_t n = h.box.rank();
  const std::string hp = join(path, "hull");
  const Json& hull = array(field(j, "hull", path), hp);
  for (std::size_t k = 0; k < hull.size(); ++k)
    h.hull.push_back(downset_from_json(hull[k], at(hp, k)));
  const std::string gp = join(path, "generators");
  const Json& gens = array(field(j, "generators", path), gp);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::string here = at(gp, k);
    HullGenerator g;
    g.degree = int_vector(field(gens[k], "degree", here), join(here, "degree"), n);
    const Json& coeffs = array(field(gens[k], "coeffs", here), join(here, "coeffs"));
    for (std::size_t c = 0; c < coeffs.size(); ++c)
      g.coeffs.push_back(rational_from_json(coeffs[c], at(join(here, "coeffs"), c)));
    h.generators.push_back(std::move(g));
  }
  return h;
}

Json points_to_json(const GridSet& s) {
  Json out = Json::array();
  for (const auto& p : s.points())
    out.push_back(int_vector_json(p));
  return out;
}

Json dims_to_json(const GridModule& m) {
  Json out = Json::array();
  for (std::size_t k = 0; k < m.box().size(); ++k)
    if (m.dim(k) > 0)
      out.push_back({{"degree", int_vector_json(m.box().point(k))}, {"dim", m.dim(k)}});
  return out;
}

} // namespace pogroup::io
