#include <kirby/json_io.hpp>

#include <sstream>

namespace kirby {

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw input_error(where.empty() ? what : where + ": " + what);
}

const Json& expect_field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(where + "/" + key, "missing field");
  return *it;
}

Int expect_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) schema_error(where, "expected an integer");
  return j.get<Int>();
}

IntMat matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of rows");
  const Eigen::Index n = Eigen::Index(j.size());
  Eigen::Index cols = -1;
  IntMat m;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = j[size_t(i)];
    if (!row.is_array())
      schema_error(where + "/" + std::to_string(i), "expected an array");
    if (cols < 0) {
      cols = Eigen::Index(row.size());
      m = IntMat::Zero(n, cols);
    }
    if (Eigen::Index(row.size()) != cols)
      schema_error(where + "/" + std::to_string(i), "ragged matrix rows");
    for (Eigen::Index k = 0; k < cols; ++k)
      m(i, k) = expect_int(row[size_t(k)],
                           where + "/" + std::to_string(i) + "/" + std::to_string(k));
  }
  if (n == 0) m = IntMat(0, 0);
  return m;
}

}  // namespace

IntVec intvec_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of integers");
  IntVec v(Eigen::Index(j.size()));
  for (size_t i = 0; i < j.size(); ++i)
    v(Eigen::Index(i)) = expect_int(j[i], where + "/" + std::to_string(i));
  return v;
}

FramedLink framed_link_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  std::string pd;
  if (j.contains("pd")) {
    if (!j["pd"].is_string()) schema_error(where + "/pd", "expected a string");
    pd = j["pd"].get<std::string>();
  }
  int declared = -1;
  if (j.contains("components"))
    declared = int(expect_int(j["components"], where + "/components"));

  std::optional<std::vector<Int>> framings;
  if (j.contains("framings")) {
    IntVec f = intvec_from_json(j["framings"], where + "/framings");
    framings = std::vector<Int>(f.data(), f.data() + f.size());
  }

  FramedLink fl = parse_pd(pd, framings, declared);

  if (j.contains("orientations")) {
    const Json& o = j["orientations"];
    if (!o.is_array()) schema_error(where + "/orientations", "expected an array of booleans");
    if (int(o.size()) != fl.diagram.component_count())
      schema_error(where + "/orientations", "length does not match component count");
    for (size_t i = 0; i < o.size(); ++i) {
      if (!o[i].is_boolean())
        schema_error(where + "/orientations/" + std::to_string(i), "expected a boolean");
      if (!o[i].get<bool>())
        fl.diagram = fl.diagram.reversed(int(i));
    }
  }
  return fl;
}

SymmetricForm form_from_json(const Json& j, const std::string& where) {
  const Json& m = expect_field(j, "matrix", where);
  IntMat parsed = matrix_from_json(m, where + "/matrix");
  try {
    return SymmetricForm(std::move(parsed));
  } catch (const input_error& e) {
    schema_error(where + "/matrix", e.what());
  }
}

HandleComplex complex_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  std::vector<std::string> ones;
  if (j.contains("one_handles")) {
    const Json& o = j["one_handles"];
    if (!o.is_array()) schema_error(where + "/one_handles", "expected an array of names");
    for (size_t i = 0; i < o.size(); ++i) {
      if (!o[i].is_string())
        schema_error(where + "/one_handles/" + std::to_string(i), "expected a string");
      ones.push_back(o[i].get<std::string>());
    }
  }
  std::vector<TwoHandle> twos;
  const Json& t = expect_field(j, "two_handles", where);
  if (!t.is_array()) schema_error(where + "/two_handles", "expected an array");
  for (size_t i = 0; i < t.size(); ++i) {
    const std::string hw = where + "/two_handles/" + std::to_string(i);
    TwoHandle h;
    const Json& word = expect_field(t[i], "word", hw);
    if (!word.is_array()) schema_error(hw + "/word", "expected an array of [name, exponent]");
    for (size_t k = 0; k < word.size(); ++k) {
      const Json& l = word[k];
      if (!l.is_array() || l.size() != 2 || !l[0].is_string() || !l[1].is_number_integer() ||
          (l[1].get<Int>() != 1 && l[1].get<Int>() != -1))
        schema_error(hw + "/word/" + std::to_string(k), "expected [name, +-1]");
      h.word.push_back({l[0].get<std::string>(), int(l[1].get<Int>())});
    }
    if (t[i].contains("framing"))
      h.framing = expect_int(t[i]["framing"], hw + "/framing");
    twos.push_back(std::move(h));
  }
  std::optional<IntMat> linking;
  if (j.contains("linking"))
    linking = matrix_from_json(j["linking"], where + "/linking");
  try {
    return HandleComplex(std::move(ones), std::move(twos), std::move(linking));
  } catch (const input_error& e) {
    schema_error(where, e.what());
  }
}

OrientedFront front_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  const Json& ev = expect_field(j, "events", where);
  if (!ev.is_array()) schema_error(where + "/events", "expected an array");
  FrontWord w;
  for (size_t i = 0; i < ev.size(); ++i) {
    const std::string ew = where + "/events/" + std::to_string(i);
    const Json& e = ev[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_number_integer())
      schema_error(ew, "expected [\"L\"|\"R\"|\"X\", position]");
    std::string kind = e[0].get<std::string>();
    int pos = int(e[1].get<Int>());
    if (kind == "L")
      w.push_back(left_cusp(pos));
    else if (kind == "R")
      w.push_back(right_cusp(pos));
    else if (kind == "X")
      w.push_back(crossing(pos));
    else
      schema_error(ew + "/0", "unknown event kind '" + kind + "'");
  }
  try {
    OrientedFront f(w);
    if (j.contains("orientations")) {
      const Json& o = j["orientations"];
      if (!o.is_array()) schema_error(where + "/orientations", "expected an array of booleans");
      std::vector<bool> flags;
      for (size_t i = 0; i < o.size(); ++i) {
        if (!o[i].is_boolean())
          schema_error(where + "/orientations/" + std::to_string(i), "expected a boolean");
        flags.push_back(o[i].get<bool>());
      }
      return OrientedFront(w, flags);
    }
    return f;
  } catch (const input_error& e) {
    schema_error(where + "/events", e.what());
  }
}

std::vector<Move> moves_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of moves");
  std::vector<Move> script;
  for (size_t i = 0; i < j.size(); ++i) {
    const std::string mw = where + "/" + std::to_string(i);
    const Json& m = j[i];
    const Json& op = expect_field(m, "op", mw);
    if (!op.is_string()) schema_error(mw + "/op", "expected a string");
    Move mv;
    if (op == "slide") {
      mv.kind = Move::Kind::slide;
      mv.i = int(expect_int(expect_field(m, "i", mw), mw + "/i"));
      mv.j = int(expect_int(expect_field(m, "j", mw), mw + "/j"));
      mv.eps = int(expect_int(expect_field(m, "eps", mw), mw + "/eps"));
    } else if (op == "blow") {
      mv.kind = Move::Kind::blow;
      const Json& dir = expect_field(m, "dir", mw);
      if (dir == "up")
        mv.dir = BlowDirection::up;
      else if (dir == "down")
        mv.dir = BlowDirection::down;
      else
        schema_error(mw + "/dir", "expected \"up\" or \"down\"");
      if (m.contains("sign")) mv.sign = int(expect_int(m["sign"], mw + "/sign"));
      if (m.contains("k")) mv.k = int(expect_int(m["k"], mw + "/k"));
    } else {
      schema_error(mw + "/op", "unknown op");
    }
    script.push_back(mv);
  }
  return script;
}

Json json_matrix(const IntMat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json json_vector(const IntVec& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

namespace {

Json json_poly(const LaurentPoly& p) {
  Json obj = Json::object();
  for (const auto& [e, c] : p.coefficients()) obj[std::to_string(e)] = c;
  return obj;
}

Json invariants_json(const FormInvariants& inv) {
  Json j;
  j["rank"] = inv.rank;
  j["det"] = inv.det;
  j["b_plus"] = inv.b_plus;
  j["b_minus"] = inv.b_minus;
  j["b_zero"] = inv.b_zero;
  j["signature"] = inv.signature;
  j["parity"] = inv.even ? "even" : "odd";
  j["unimodular"] = inv.unimodular;
  j["nondegenerate"] = inv.nondegenerate;
  j["definiteness"] = definiteness_name(inv.definiteness);
  return j;
}

Json obstruction_json(const ObstructionReport& r) {
  Json j;
  j["sigma_mod_8"] = r.sigma_mod_8;
  j["sigma_mod_16"] = r.sigma_mod_16;
  j["algebraic_ok"] = r.algebraic_ok;
  j["rohlin_smooth_ok"] = r.rohlin_smooth_ok;
  if (r.mu)
    j["mu"] = *r.mu;
  else
    j["mu"] = nullptr;
  return j;
}

}  // namespace

Json link_invariants_report(const FramedLink& fl) {
  Json j;
  j["components"] = fl.diagram.component_count();
  j["crossings"] = fl.diagram.crossing_count();
  SignData s = crossing_signs(fl.diagram);
  j["signs"] = s.signs;
  j["writhe"] = s.writhe;
  Json lk = Json::array();
  for (int a = 0; a < fl.diagram.component_count(); ++a)
    for (int b = a + 1; b < fl.diagram.component_count(); ++b) {
      Json e;
      e["i"] = a;
      e["j"] = b;
      e["lk"] = linking_number(fl.diagram, a, b);
      lk.push_back(std::move(e));
    }
  j["linking_numbers"] = std::move(lk);
  j["framings"] = fl.framings;
  j["linking_matrix"] = json_matrix(linking_matrix(fl));
  return j;
}

Json form_report(const SymmetricForm& q) {
  Json j;
  j["matrix"] = json_matrix(q.matrix());
  j["invariants"] = invariants_json(form_invariants(q));
  j["obstructions"] = obstruction_json(obstruction_report(q));
  return j;
}

Json homology_report(const HandleComplex& hc) {
  Json j;
  GroupPresentation p = pi1_presentation(hc);
  Json gens = Json::array();
  for (const std::string& g : p.generators) gens.push_back(g);
  Json rels = Json::array();
  for (const Word& w : p.relators) {
    Json rel = Json::array();
    for (const Letter& l : w) rel.push_back(Json::array({l.first, l.second}));
    rels.push_back(std::move(rel));
  }
  j["pi1"] = Json{{"generators", std::move(gens)}, {"relators", std::move(rels)}};
  j["boundary_matrix"] = json_matrix(boundary_matrix_2(hc));
  HomologySummary h = homology_summary(hc);
  j["h1"] = Json{{"invariant_factors", h.h1_invariant_factors},
                 {"free_rank", h.h1_free_rank}};
  j["h2"] = Json{{"rank", h.h2_rank}, {"kernel_basis", json_matrix(h.h2_basis)}};
  SymmetricForm q = intersection_form_of_complex(hc);
  j["intersection_form"] = json_matrix(q.matrix());
  j["form_invariants"] = invariants_json(form_invariants(q));
  return j;
}

Json alexander_report(const OrientedLinkDiagram& d) {
  Json j;
  LaurentPoly delta = alexander_polynomial(d);
  j["alexander"] = json_poly(delta);
  j["alexander_pretty"] = delta.str();
  j["determinant"] = knot_determinant(delta);
  FoxMilnorReport fm = fox_milnor_test(delta);
  Json f;
  f["det_square"] = fm.det_square;
  f["factor_pairing"] = fm.factor_pairing == PairingVerdict::paired
                            ? Json(true)
                            : fm.factor_pairing == PairingVerdict::not_paired
                                  ? Json(false)
                                  : Json("inconclusive");
  f["verdict"] = fm.obstructed ? "not slice" : "inconclusive";
  j["fox_milnor"] = std::move(f);
  return j;
}

Json slice_obstruction_report(const OrientedLinkDiagram& d) {
  Json full = alexander_report(d);
  Json j;
  j["determinant"] = full["determinant"];
  j["fox_milnor"] = full["fox_milnor"];
  return j;
}

Json legendrian_report(const OrientedFront& f) {
  Json j;
  j["components"] = f.component_count();
  j["crossings"] = f.crossing_count();
  ClassicalInvariants inv = f.invariants();
  j["tb"] = inv.tb;
  j["rot"] = inv.rot;
  j["writhe"] = inv.writhe;
  j["cusps"] = inv.cusps;
  j["up_cusps"] = inv.up_cusps;
  j["down_cusps"] = inv.down_cusps;
  Json per = Json::array();
  for (int c = 0; c < f.component_count(); ++c) {
    ClassicalInvariants ci = f.component_invariants(c);
    per.push_back(Json{{"tb", ci.tb}, {"rot", ci.rot}, {"cusps", ci.cusps}});
  }
  j["per_component"] = std::move(per);
  return j;
}

Json stein_trace_report(const SteinTrace& t) {
  Json j;
  j["form"] = json_matrix(t.form.matrix());
  j["c1"] = t.c1;
  j["form_invariants"] = invariants_json(form_invariants(t.form));
  return j;
}

Json genus_bound_report(const GenusBound& b) {
  Json j;
  j["kind"] = b.kind;
  if (b.kind == "slice-bennequin") {
    j["tb"] = b.tb;
    j["rot"] = b.rot;
  } else if (b.kind == "adjunction") {
    j["square"] = b.square;
    j["c1_pairing"] = b.pairing;
  } else {
    j["degree"] = b.degree;
  }
  j["genus_lower_bound"] = b.bound;
  return j;
}

Json moves_report(const SymmetricForm& start, const MovesResult& r) {
  Json j;
  j["start"] = json_matrix(start.matrix());
  j["final"] = json_matrix(r.final_form.matrix());
  Json segs = Json::array();
  for (const MoveSegment& s : r.segments) {
    Json e;
    e["start"] = json_matrix(s.start.matrix());
    e["end"] = json_matrix(s.end.matrix());
    e["basis_change"] = json_matrix(s.basis_change);
    e["verified"] = s.verified;
    segs.push_back(std::move(e));
  }
  j["segments"] = std::move(segs);
  j["final_invariants"] = invariants_json(form_invariants(r.final_form));
  return j;
}

namespace {

void render_value(const Json& j, const std::string& key, int indent, std::ostream& os);

bool scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_object() || e.is_array()) return false;
  return true;
}

bool matrix_array(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& e : j)
    if (!scalar_array(e)) return false;
  return true;
}

std::string inline_scalar_array(const Json& j) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < j.size(); ++i) {
    if (i) os << ", ";
    os << j[i].dump();
  }
  os << "]";
  return os.str();
}

void render_value(const Json& j, const std::string& key, int indent, std::ostream& os) {
  std::string pad(size_t(indent) * 2, ' ');
  if (j.is_object()) {
    if (!key.empty()) os << pad << key << ":\n";
    for (auto it = j.begin(); it != j.end(); ++it)
      render_value(it.value(), it.key(), indent + (key.empty() ? 0 : 1), os);
  } else if (matrix_array(j)) {
    os << pad << key << ":\n";
    for (const auto& row : j)
      os << pad << "  " << inline_scalar_array(row) << "\n";
  } else if (scalar_array(j)) {
    os << pad << key << ": " << inline_scalar_array(j) << "\n";
  } else if (j.is_array()) {
    os << pad << key << ":\n";
    for (size_t i = 0; i < j.size(); ++i)
      render_value(j[i], "- " + std::to_string(i), indent + 1, os);
  } else {
    os << pad << key << ": " << j.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  render_value(j, "", 0, os);
  return os.str();
}

}  // namespace kirby
