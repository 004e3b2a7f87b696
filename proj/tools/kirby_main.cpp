#include <kirby/json_io.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using kirby::Json;

namespace {

struct Options {
  std::string input;
  std::string pd;
  std::string script;
  std::string format = "json";
  bool classify = false;
  bool to_pd = false;
  bool stein = false;
  std::string characteristic;
  std::string complement;
};

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw kirby::input_error("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw kirby::input_error("'" + path + "' is not valid JSON: " + e.what());
  }
  return j;
}

kirby::IntVec parse_vector_option(const std::string& text) {
  std::vector<kirby::Int> vals;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      vals.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw kirby::input_error("bad integer '" + tok + "' in vector option");
    }
  }
  kirby::IntVec v(Eigen::Index(vals.size()));
  for (size_t i = 0; i < vals.size(); ++i) v(Eigen::Index(i)) = vals[i];
  return v;
}

Json run_on_document(const std::string& command, const Json& doc, const Options& opt) {
  using namespace kirby;
  if (command == "invariants") {
    return link_invariants_report(framed_link_from_json(doc));
  }
  if (command == "form") {
    SymmetricForm q = form_from_json(doc);
    Json out = form_report(q);
    if (opt.classify) {
      if (auto e8 = recognize_definite_e8(q)) {
        out["classification"] = *e8;
      } else {
        out["classification"] = classify_indefinite_unimodular(q).text;
      }
    }
    if (!opt.characteristic.empty()) {
      IntVec v = parse_vector_option(opt.characteristic);
      CharacteristicReport r = characteristic_report(q, v);
      Json c;
      c["vector"] = json_vector(v);
      c["is_characteristic"] = *r.is_characteristic;
      c["km_ok"] = *r.km_ok;
      c["solution"] = r.solution;
      out["characteristic"] = std::move(c);
    }
    if (!opt.complement.empty()) {
      IntVec v = parse_vector_option(opt.complement);
      SymmetricForm comp = orthogonal_complement(q, v);
      out["orthogonal_complement"] = form_report(comp);
    }
    return out;
  }
  if (command == "homology") {
    return homology_report(complex_from_json(doc));
  }
  if (command == "alexander") {
    return alexander_report(framed_link_from_json(doc).diagram);
  }
  if (command == "slice-obstructions") {
    return slice_obstruction_report(framed_link_from_json(doc).diagram);
  }
  if (command == "legendrian") {
    OrientedFront f = front_from_json(doc);
    Json out = legendrian_report(f);
    if (opt.to_pd) {
      OrientedLinkDiagram d = front_to_pd(f);
      std::ostringstream pd;
      for (int c = 0; c < d.crossing_count(); ++c) {
        if (c) pd << ", ";
        const auto& a = d.crossings()[size_t(c)].arcs;
        pd << "X(" << a[0] << "," << a[1] << "," << a[2] << "," << a[3] << ")";
      }
      out["pd"] = pd.str();
      out["pd_components"] = d.component_count();
    }
    if (opt.stein) {
      out["stein_trace"] = stein_trace_report(stein_trace({f}));
    }
    return out;
  }
  if (command == "genus-bounds") {
    const Json& kind = doc.contains("kind") ? doc["kind"] : Json();
    if (kind == "slice-bennequin") {
      if (!doc.contains("front")) throw input_error("/front: missing field");
      return genus_bound_report(slice_bennequin_bound(front_from_json(doc["front"], "/front")));
    }
    if (kind == "adjunction") {
      if (!doc.contains("form")) throw input_error("/form: missing field");
      SteinTrace t;
      Json wrap;
      wrap["matrix"] = doc["form"];
      t.form = form_from_json(wrap, "");
      if (!doc.contains("c1")) throw input_error("/c1: missing field");
      IntVec c1 = intvec_from_json(doc["c1"], "/c1");
      t.c1.assign(c1.data(), c1.data() + c1.size());
      if (!doc.contains("class")) throw input_error("/class: missing field");
      IntVec cls = intvec_from_json(doc["class"], "/class");
      return genus_bound_report(adjunction_bound(t, cls));
    }
    if (kind == "thom") {
      if (!doc.contains("d")) throw input_error("/d: missing field");
      if (!doc["d"].is_number_integer()) throw input_error("/d: expected an integer");
      return genus_bound_report(thom_bound(doc["d"].get<Int>()));
    }
    throw input_error("/kind: expected \"slice-bennequin\", \"adjunction\" or \"thom\"");
  }
  if (command == "moves") {
    SymmetricForm q = form_from_json(doc);
    Json script_doc = load_json(opt.script);
    std::vector<Move> script = moves_from_json(script_doc);
    return moves_report(q, apply_moves(q, script));
  }
  throw input_error("unknown command '" + command + "'");
}

void emit(const Json& j, const Options& opt) {
  if (opt.format == "text")
    std::cout << kirby::render_text(j);
  else
    std::cout << j.dump(2) << "\n";
}

int run_command(const std::string& command, const Options& opt) {
  // alexander and slice-obstructions accept --pd directly
  if (!opt.pd.empty()) {
    Json doc;
    doc["pd"] = opt.pd;
    emit(run_on_document(command, doc, opt), opt);
    return 0;
  }
  if (opt.input.empty()) throw kirby::input_error("--in is required");

  if (fs::is_directory(opt.input)) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(opt.input))
      if (e.is_regular_file()) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw kirby::input_error("empty input directory");

    int worst = 0;
    Json rows = Json::array();
    for (const fs::path& f : files) {
      Json row;
      row["file"] = f.filename().string();
      try {
        row["ok"] = true;
        row["report"] = run_on_document(command, load_json(f.string()), opt);
      } catch (const kirby::internal_error& e) {
        row["ok"] = false;
        row["error"] = e.what();
        worst = std::max(worst, 2);
      } catch (const std::exception& e) {
        row["ok"] = false;
        row["error"] = e.what();
        worst = std::max(worst, 1);
      }
      rows.push_back(std::move(row));
    }
    Json out;
    out["rows"] = std::move(rows);
    emit(out, opt);
    return worst;
  }

  emit(run_on_document(command, load_json(opt.input), opt), opt);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kirby: invariants of 4-manifold handle decompositions"};
  app.require_subcommand(1);

  Options opt;
  std::string command;

  auto add_common = [&](CLI::App* sub, bool with_pd = false) {
    sub->add_option("--in", opt.input, "input JSON file or directory of files");
    sub->add_option("--format", opt.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    if (with_pd) sub->add_option("--pd", opt.pd, "inline PD code");
    sub->callback([&, sub] { command = sub->get_name(); });
  };

  add_common(app.add_subcommand("invariants", "linking data of a framed link"));
  auto* form = app.add_subcommand("form", "invariants and obstructions of a symmetric form");
  add_common(form);
  form->add_flag("--classify", opt.classify, "label indefinite unimodular forms (and +-E8)");
  form->add_option("--characteristic", opt.characteristic,
                   "comma-separated vector to test for characteristicness");
  form->add_option("--complement", opt.complement,
                   "comma-separated vector whose orthogonal complement to compute");
  add_common(app.add_subcommand("homology", "pi1/H1/H2 and the intersection form"));
  add_common(app.add_subcommand("alexander", "Alexander polynomial of a knot"), true);
  add_common(app.add_subcommand("slice-obstructions", "Fox-Milnor slice obstructions"), true);
  auto* leg = app.add_subcommand("legendrian", "tb/rot of a Legendrian front");
  add_common(leg);
  leg->add_flag("--to-pd", opt.to_pd, "emit the smoothed PD code");
  leg->add_flag("--stein", opt.stein, "emit the Stein-trace form and c1");
  add_common(app.add_subcommand("genus-bounds", "slice-Bennequin / adjunction / Thom bounds"));
  auto* moves = app.add_subcommand("moves", "run a slide/blow script against a form");
  add_common(moves);
  moves->add_option("--script", opt.script, "JSON move script")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    return run_command(command, opt);
  } catch (const kirby::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const kirby::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
