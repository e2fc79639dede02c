#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <thread>

#include "quadpow/case_analysis.hpp"
#include "quadpow/errors.hpp"
#include "quadpow/klein.hpp"
#include "quadpow/sylvester.hpp"

#ifndef QUADPOW_CORPUS_DIR
#define QUADPOW_CORPUS_DIR "corpus"
#endif

namespace quadpow::cli {
namespace fs = std::filesystem;
using io::Json;
using io::Source;

namespace {

struct Options {
  std::string out;
  long precision = 128;
  unsigned jobs = 0;

  std::string input;
  bool all = false;
  bool list = false;
  std::string export_dir;
  std::string recipe;
  long e = 1, e_prime = 1, t = 1, s = 2, k = 2, d = 0;
  double theta_re = 0, theta_im = 0;
  std::string name;
  std::string d_range;
  std::string format = "json";
  double tol = 1e-6;
};

struct Outcome {
  Json body;
  int code = kPass;
};

template <class Fn>
std::vector<Json> parallel_map(std::size_t n, unsigned jobs, Fn fn) {
  std::vector<Json> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(n, 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < jobs; ++w) pool.emplace_back(worker);
    worker();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<std::string> corpus_files(const std::string& dir) {
  std::vector<std::string> out;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return out;
  for (const auto& p : fs::directory_iterator(dir, ec))
    if (p.path().extension() == ".json") out.push_back(p.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_catalog_name(const std::string& name) {
  const auto names = catalog_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

Source resolve(const std::string& arg) {
  std::error_code ec;
  if (arg == "-" || fs::is_regular_file(arg, ec)) return Source::from_file(arg);
  const fs::path in_dir = fs::path(catalog_dir()) / (arg + ".json");
  if (fs::is_regular_file(in_dir, ec)) return Source::from_file(in_dir.string());
  if (is_catalog_name(arg)) return Source::from_text("catalog:" + arg, entry_json(catalog_entry(arg)).dump(2));
  throw io::InputError(arg + ": no such file or catalog entry");
}

std::string identity_root(const Source& src) { return src.doc.is_object() && src.doc.contains("identity") ? "/identity" : ""; }

Json forms_json(const FormSet& forms) {
  Json a = Json::array();
  for (const auto& f : forms) a.push_back(io::to_json(f));
  return a;
}

FormSet forms_from(const Source& src, const std::string& pointer) {
  const Json& a = src.at(pointer);
  if (!a.is_array() || a.empty()) src.fail(pointer, "expected a non-empty array of forms");
  FormSet out;
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back(io::form_from(src, pointer + "/" + std::to_string(k)));
  return out;
}

BinaryForm single_form(const Source& src) {
  if (src.doc.is_object() && src.doc.contains("form")) return io::form_from(src, "/form");
  if (src.doc.is_object() && src.doc.contains("value")) return io::form_from(src, "/value");
  return io::form_from(src, "");
}

Json check_identity(const PowerIdentity& id, bool& pass) {
  const VerifyResult r = verify_identity(id);
  pass = pass && r.pass;
  return Json{{"verdict", r.pass ? "pass" : "fail"}, {"residual", r.residual ? io::to_json(*r.residual) : Json()}};
}

Json verify_source(const Source& src, bool& pass) {
  const std::string root = identity_root(src);
  const PowerIdentity id = io::identity_from(src, root);
  Json j = check_identity(id, pass);
  if (!root.empty()) {
    if (src.doc.contains("name")) j["name"] = src.doc["name"];
    std::vector<PowerIdentity> all{id};
    if (src.doc.contains("related")) {
      Json rel = Json::array();
      for (std::size_t k = 0; k < src.doc["related"].size(); ++k) {
        all.push_back(io::identity_from(src, "/related/" + std::to_string(k)));
        rel.push_back(check_identity(all.back(), pass));
      }
      j["related"] = rel;
    }
    if (src.doc.contains("value") && !src.doc["value"].is_null()) {
      const BinaryForm v = io::form_from(src, "/value");
      bool ok = true;
      for (const auto& x : all) ok = ok && left_value(x) == v;
      j["value_matches"] = ok;
      pass = pass && ok;
    }
  }
  j["verdict"] = pass ? "pass" : "fail";
  return j;
}

Outcome cmd_verify(const Options& o) {
  if (!o.all) {
    if (o.input.empty()) throw io::InputError("verify needs an input file or catalog name (or --all)");
    bool pass = true;
    Json j = verify_source(resolve(o.input), pass);
    return {j, pass ? kPass : kMathFailure};
  }
  std::vector<std::string> inputs = corpus_files(catalog_dir());
  const bool from_files = !inputs.empty();
  if (!from_files) inputs = catalog_names();
  std::atomic<bool> all_pass{true};
  std::vector<Json> results = parallel_map(inputs.size(), o.jobs, [&](std::size_t i) {
    bool pass = true;
    const Source src = from_files ? Source::from_file(inputs[i])
                                  : Source::from_text("catalog:" + inputs[i], entry_json(catalog_entry(inputs[i])).dump());
    Json j = verify_source(src, pass);
    if (!j.contains("name")) j["name"] = inputs[i];
    if (!pass) all_pass = false;
    return j;
  });
  Json body{{"verdict", all_pass ? "pass" : "fail"}, {"count", results.size()}, {"results", results}};
  return {body, all_pass ? kPass : kMathFailure};
}

Outcome cmd_catalog(const Options& o) {
  if (o.list) {
    Json names = Json::array();
    for (const auto& n : catalog_names()) names.push_back(n);
    return {Json{{"names", names}}};
  }
  if (!o.export_dir.empty()) {
    fs::create_directories(o.export_dir);
    Json files = Json::array();
    for (const auto& n : catalog_names()) {
      const fs::path p = fs::path(o.export_dir) / (n + ".json");
      std::ofstream f(p);
      if (!f) throw io::InputError(p.string() + ": cannot write");
      f << entry_json(catalog_entry(n)).dump(2) << "\n";
      files.push_back(p.string());
    }
    return {Json{{"written", files}}};
  }
  if (o.input.empty()) throw io::InputError("catalog needs a name, --list or --export");
  if (!is_catalog_name(o.input)) throw io::InputError(o.input + ": unknown catalog entry");
  return {entry_json(catalog_entry(o.input))};
}

Outcome cmd_construct(const Options& o) {
  ConstructionRecipe r;
  if (o.recipe == "molluzzo")
    r = recipe::Molluzzo{o.e, o.e_prime, o.t};
  else if (o.recipe == "monomial")
    r = recipe::Monomial{o.s};
  else if (o.recipe == "quadrature")
    r = recipe::Quadrature{o.s, {o.theta_re, o.theta_im}};
  else if (o.recipe == "psi-odd")
    r = recipe::PsiOdd{o.s};
  else if (o.recipe == "psi-even")
    r = recipe::PsiEven{o.s};
  else if (o.recipe == "icosa14")
    r = recipe::Icosa14{};
  else if (o.recipe == "catalog")
    r = recipe::Catalog{o.name};
  else
    throw io::InputError("unknown recipe \"" + o.recipe +
                         "\"; expected molluzzo, monomial, quadrature, psi-odd, psi-even, icosa14 or catalog");
  const Construction c = build(r);
  Json body{{"metadata", {{"recipe", c.recipe}, {"term_count", c.term_count}, {"description", c.description}}}};
  bool pass = true;
  if (c.identity) {
    body["identity"] = io::to_json(*c.identity);
    const Json v = check_identity(*c.identity, pass);
    body["verdict"] = v["verdict"];
    body["residual"] = v["residual"];
  }
  if (c.numeric) {
    pass = c.numeric->pass;
    body["numeric"] = {{"terms", c.numeric->terms},
                       {"max_residual", c.numeric->max_residual},
                       {"tolerance", c.numeric->tolerance},
                       {"pass", c.numeric->pass}};
    body["verdict"] = pass ? "pass" : "fail";
  }
  return {body, pass ? kPass : kMathFailure};
}

Outcome cmd_kernel(const Options& o) {
  const Source src = resolve(o.input);
  FormSet forms;
  long d = o.d;
  if (src.doc.is_object() && src.doc.contains("forms")) {
    forms = forms_from(src, "/forms");
    if (d == 0) d = io::integer_from(src, "/d");
  } else {
    const PowerIdentity id = io::identity_from(src, identity_root(src));
    forms = id.forms();
    if (d == 0) d = id.d;
  }
  if (d < 1) throw io::InputError("exponent must be positive");
  const DependenceReport rep = power_kernel(forms, d);
  Json kernel = Json::array();
  for (const auto& v : rep.kernel) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(io::to_json(x));
    kernel.push_back(row);
  }
  return {Json{{"d", d}, {"forms", forms_json(forms)}, {"rank", rep.rank}, {"r", rep.r},
               {"dependent", rep.dependent()}, {"kernel", kernel}}};
}

Json decomposition_json(const TwoPowerDecomposition& t, const BinaryForm& p) {
  return Json{{"provenance", to_string(t.kind)},
              {"d", t.d},
              {"mu1", io::to_json(t.mu1)},
              {"mu2", io::to_json(t.mu2)},
              {"g1", io::to_json(t.g1)},
              {"g2", io::to_json(t.g2)},
              {"h", {io::to_json(t.h[0]), io::to_json(t.h[1]), io::to_json(t.h[2])}},
              {"verified", t.expand() == p}};
}

Json sylvester_json(const SylvesterReport& r) {
  Json a = Json::array(), m = Json::array(), k = Json::array();
  for (const auto& x : r.a) a.push_back(io::to_json(x));
  for (const auto& row : r.matrix) {
    Json jr = Json::array();
    for (const auto& x : row) jr.push_back(io::to_json(x));
    m.push_back(jr);
  }
  for (const auto& h : r.kernel) k.push_back({io::to_json(h[0]), io::to_json(h[1]), io::to_json(h[2])});
  return Json{{"d", r.d}, {"a", a}, {"matrix", m}, {"rank", r.rank}, {"kernel", k}};
}

Outcome cmd_sylvester(const Options& o) {
  const BinaryForm p = single_form(resolve(o.input));
  Json body = sylvester_json(sylvester_matrix(p));
  Json dec = Json::array();
  for (const auto& t : two_power_decompose(p)) dec.push_back(decomposition_json(t, p));
  body["decompositions"] = dec;
  return {body};
}

Outcome cmd_representations(const Options& o) {
  const BinaryForm p = single_form(resolve(o.input));
  const long d = o.d ? o.d : p.degree() / 2;
  const EvenRepresentations r = enumerate_even_representations(p, d);
  Json dec = Json::array();
  for (const auto& t : r.decompositions) dec.push_back(decomposition_json(t, p));
  return {Json{{"form", io::to_json(p)},
               {"report", sylvester_json(r.report)},
               {"count", r.decompositions.size()},
               {"decompositions", dec},
               {"family", r.family},
               {"family_dimension", r.family_dimension}}};
}

Outcome cmd_diagonalize(const Options& o) {
  const Source src = resolve(o.input);
  const FormSet forms = forms_from(src, "/forms");
  if (forms.size() != 2) src.fail("/forms", "expected exactly two quadratics");
  const DiagonalizationResult r = simultaneous_diagonalize(forms[0], forms[1]);
  const bool ok = is_even(r.g1) && is_even(r.g2) && proportional(compose(forms[0], r.m), r.g1) &&
                  proportional(compose(forms[1], r.m), r.g2);
  return {Json{{"change", io::to_json(r.m)}, {"g1", io::to_json(r.g1)}, {"g2", io::to_json(r.g2)}, {"verified", ok}},
          ok ? kPass : kMathFailure};
}

std::pair<long, long> d_span(const Options& o) {
  if (!o.d_range.empty()) {
    const auto colon = o.d_range.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument("range");
      std::size_t used = 0;
      const long a = std::stol(o.d_range.substr(0, colon), &used);
      const long b = std::stol(o.d_range.substr(colon + 1));
      if (a > b) throw std::invalid_argument("range");
      return {a, b};
    } catch (const std::exception&) {
      throw io::InputError("--d-range expects A:B with A <= B, got \"" + o.d_range + "\"");
    }
  }
  if (o.d == 0) throw io::InputError("expected --d N or --d-range A:B");
  return {o.d, o.d};
}

Json tame_json(const TameReport& r) {
  Json branches = Json::array();
  for (const auto& b : r.branches) {
    Json minors = Json::array(), cands = Json::array(), roots = Json::array();
    for (const auto& m : b.minors) minors.push_back({{"rows", m.rows}, {"poly", io::to_json(m.poly)}});
    for (const auto& x : b.seed_roots) roots.push_back(io::to_json(x));
    for (const auto& c : b.candidates) {
      Json jc{{"value", io::to_json(c.value)}, {"realized", c.realized}};
      jc["witness_rows"] = c.witness_rows ? Json(*c.witness_rows) : Json();
      jc["witness_value"] = c.witness_value ? io::to_json(*c.witness_value) : Json();
      if (c.identity) jc["identity"] = io::to_json(*c.identity);
      cands.push_back(jc);
    }
    branches.push_back({{"kind", to_string(b.kind)},
                        {"variable", b.variable},
                        {"minors", minors},
                        {"seed", b.seed},
                        {"seed_roots", roots},
                        {"unresolved", io::to_json(b.unresolved)},
                        {"candidates", cands}});
  }
  return Json{{"d", r.d}, {"realized", r.realized_count()}, {"branches", branches}};
}

Json wild_json(const WildReport& r) {
  Json conds = Json::array(), branches = Json::array(), sols = Json::array();
  for (const auto& [n, p] : r.conditions) conds.push_back({{"name", n}, {"poly", p.to_string()}});
  for (const auto& b : r.branches) {
    Json jb{{"name", b.name}, {"relations", b.relations}, {"status", to_string(b.status)}, {"satisfied", b.satisfied}};
    jb["lambda_condition"] = b.lambda_condition ? io::to_json(*b.lambda_condition) : Json();
    jb["next"] = b.next;
    jb["witness_label"] = b.witness_label;
    jb["witness"] = b.witness ? io::to_json(*b.witness) : Json();
    branches.push_back(jb);
  }
  for (const auto& s : r.solutions)
    sols.push_back({{"lambda", io::to_json(s.lambda)},
                    {"alpha", io::to_json(s.alpha)},
                    {"beta", io::to_json(s.beta)},
                    {"f3", io::to_json(s.f3)},
                    {"f4", io::to_json(s.f4)},
                    {"identity", io::to_json(s.identity)},
                    {"verified", s.verified}});
  return Json{{"d", r.d}, {"conditions", conds}, {"branches", branches}, {"solutions", sols}};
}

template <class Analyze>
Outcome sweep(const Options& o, Analyze analyze) {
  const auto [a, b] = d_span(o);
  std::vector<Json> reports =
      parallel_map(static_cast<std::size_t>(b - a + 1), o.jobs, [&](std::size_t i) { return analyze(a + static_cast<long>(i)); });
  if (a == b) return {reports.front()};
  return {Json{{"reports", reports}}};
}

Outcome cmd_theta(const Options& o) {
  const ThetaValue v = theta(o.e, o.d);
  return {Json{{"e", o.e}, {"d", o.d}, {"theta", v.value}, {"t", v.t}}};
}

Json bound_json(const Bound& b) { return Json{{"value", b.value}, {"source", b.source}}; }

Outcome cmd_phi(const Options& o) {
  const PhiBounds p = phi_bounds(o.k, o.d);
  Json lc = Json::array(), uc = Json::array();
  for (const auto& b : p.lower_candidates) lc.push_back(bound_json(b));
  for (const auto& b : p.upper_candidates) uc.push_back(bound_json(b));
  return {Json{{"k", p.k},
               {"d", p.d},
               {"lower", bound_json(p.lower)},
               {"upper", bound_json(p.upper)},
               {"exact", p.exact ? Json(*p.exact) : Json()},
               {"lower_candidates", lc},
               {"upper_candidates", uc}}};
}

Outcome cmd_klein(const Options& o, std::string& csv) {
  const Source src = resolve(o.input);
  FormSet forms;
  if (src.doc.is_object() && src.doc.contains("forms"))
    forms = forms_from(src, "/forms");
  else
    forms = io::identity_from(src, identity_root(src)).forms();
  Json roots = Json::array(), points = Json::array();
  std::vector<KleinPoint> pts;
  for (const auto& f : forms)
    for (const auto& r : roots_of_form(f, o.precision)) {
      if (r.infinite)
        roots.push_back("infinity");
      else
        roots.push_back({{"re", r.re}, {"im", r.im}, {"error_bound", r.error_bound}});
      pts.push_back(klein_point(r));
      points.push_back({pts.back()[0], pts.back()[1], pts.back()[2]});
    }
  const KleinLabel label = recognize(pts, o.tol);
  if (o.format == "csv") {
    char line[96];
    csv = "x,y,z\n";
    for (const auto& p : pts) {
      std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", p[0], p[1], p[2]);
      csv += line;
    }
  } else if (o.format != "json") {
    throw io::InputError("--format must be json or csv");
  }
  return {Json{{"points", points}, {"label", label.to_string()}, {"residual", label.residual}, {"roots", roots}}};
}

}  // namespace

std::string catalog_dir() {
  if (const char* env = std::getenv("QUADPOW_CATALOG_DIR"); env && *env) return env;
  return QUADPOW_CORPUS_DIR;
}

Json entry_json(const CatalogEntry& e) {
  Json j{{"schema", kSchema}, {"name", e.name}, {"description", e.description}, {"identity", io::to_json(e.identity)}};
  Json rel = Json::array();
  for (const auto& r : e.related) rel.push_back(io::to_json(r));
  j["related"] = rel;
  j["value"] = e.value ? io::to_json(*e.value) : Json();
  if (e.cousin) {
    Json c{{"source", e.cousin->source}, {"pi", e.cousin->pi}, {"change", io::to_json(e.cousin->m)}};
    Json cs = Json::array();
    for (const auto& x : e.cousin->c) cs.push_back(io::to_json(x));
    c["c"] = cs;
    j["cousin"] = c;
  } else {
    j["cousin"] = Json();
  }
  return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact identities among powers of binary forms", "quadpow"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out, "Write the report to this file instead of stdout");
  app.add_option("--precision", o.precision, "Binary digits for numeric paths (klein, quadrature)")->check(CLI::Range(16L, 100000L));
  app.add_option("--jobs", o.jobs, "Worker threads for --all and --d-range (0: all cores)");

  auto* verify = app.add_subcommand("verify", "Check an identity file or catalog entry exactly");
  verify->add_option("input", o.input, "Identity JSON, corpus file, catalog name, or - for stdin");
  verify->add_flag("--all", o.all, "Verify every corpus entry");

  auto* cat = app.add_subcommand("catalog", "List, show or export the identity corpus");
  cat->add_option("name", o.input, "Entry to show");
  cat->add_flag("--list", o.list, "List entry names");
  cat->add_option("--export", o.export_dir, "Write one JSON file per entry into this directory");

  auto* construct = app.add_subcommand("construct", "Build an identity from a recipe");
  construct->add_option("--recipe", o.recipe, "molluzzo | monomial | quadrature | psi-odd | psi-even | icosa14 | catalog")
      ->required();
  construct->add_option("--e", o.e, "molluzzo: e");
  construct->add_option("--e-prime", o.e_prime, "molluzzo: e'");
  construct->add_option("--t", o.t, "molluzzo: t");
  construct->add_option("--s", o.s, "monomial, quadrature, psi-odd, psi-even: s");
  construct->add_option("--theta-re", o.theta_re, "quadrature: real part of theta");
  construct->add_option("--theta-im", o.theta_im, "quadrature: imaginary part of theta");
  construct->add_option("--name", o.name, "catalog: entry name");

  auto* kernel = app.add_subcommand("kernel", "Linear relations among d-th powers of a form set");
  kernel->add_option("input", o.input, "{\"d\", \"forms\"} JSON, identity, or catalog name")->required();
  kernel->add_option("--d", o.d, "Exponent (overrides the file)");

  auto* syl = app.add_subcommand("sylvester", "2-Sylvester matrix and two-power decompositions of an even form");
  syl->add_option("input", o.input, "Form JSON or catalog name")->required();

  auto* diag = app.add_subcommand("diagonalize", "Simultaneously diagonalize two coprime quadratics");
  diag->add_option("input", o.input, "{\"forms\": [f1, f2]} JSON")->required();

  auto* reps = app.add_subcommand("representations", "Even two-power representations of a form");
  reps->add_option("input", o.input, "Form JSON or catalog name")->required();
  reps->add_option("--d", o.d, "Exponent (default: half the degree)");

  auto* tame = app.add_subcommand("tame", "Tame case analysis");
  tame->add_option("--d", o.d, "Exponent");
  tame->add_option("--d-range", o.d_range, "Inclusive range A:B");

  auto* wild = app.add_subcommand("wild", "Wild case analysis");
  wild->add_option("--d", o.d, "Exponent");
  wild->add_option("--d-range", o.d_range, "Inclusive range A:B");

  auto* th = app.add_subcommand("theta", "Synching bound Theta_e(d)");
  th->add_option("--e", o.e, "e")->required();
  th->add_option("--d", o.d, "d")->required();

  auto* phi = app.add_subcommand("phi", "Lower and upper bounds for Phi_k(d)");
  phi->add_option("--k", o.k, "k")->required();
  phi->add_option("--d", o.d, "d")->required();

  auto* klein = app.add_subcommand("klein", "Klein set of the forms of an identity");
  klein->add_option("input", o.input, "Identity JSON, {\"forms\"} JSON, or catalog name")->required();
  klein->add_option("--format", o.format, "json | csv");
  klein->add_option("--tol", o.tol, "Recognition tolerance");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "quadpow: " << e.what() << "\n";
    return kInputError;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  const auto start = std::chrono::steady_clock::now();
  Outcome res;
  std::string csv;
  try {
    if (command == "verify")
      res = cmd_verify(o);
    else if (command == "catalog")
      res = cmd_catalog(o);
    else if (command == "construct")
      res = cmd_construct(o);
    else if (command == "kernel")
      res = cmd_kernel(o);
    else if (command == "sylvester")
      res = cmd_sylvester(o);
    else if (command == "diagonalize")
      res = cmd_diagonalize(o);
    else if (command == "representations")
      res = cmd_representations(o);
    else if (command == "tame")
      res = sweep(o, [](long d) { return tame_json(tame_analyze(d)); });
    else if (command == "wild")
      res = sweep(o, [](long d) { return wild_json(wild_analyze(d)); });
    else if (command == "theta")
      res = cmd_theta(o);
    else if (command == "phi")
      res = cmd_phi(o);
    else if (command == "klein")
      res = cmd_klein(o, csv);
  } catch (const io::InputError& e) {
    err << "quadpow " << command << ": " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "quadpow " << command << ": " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "quadpow " << command << ": " << e.what() << "\n";
    return kMathFailure;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  Json inputs{{"command", command}};
  for (const auto* opt : sub->get_options())
    if (opt->count() > 0 && opt->get_name() != "--help") inputs[opt->get_name()] = opt->results();
  if (!o.input.empty() && command != "catalog") {
    try {
      inputs["document"] = resolve(o.input).doc;
    } catch (const io::InputError&) {
    }
  }
  if (command == "klein" || command == "construct") inputs["precision"] = o.precision;

  std::string text;
  if (!csv.empty()) {
    text = csv;
  } else {
    Json report{{"schema", kSchema},
                {"tool_version", kToolVersion},
                {"command", command},
                {"inputs_digest", "fnv1a64:" + io::fnv1a_hex(inputs.dump())}};
    for (auto it = res.body.begin(); it != res.body.end(); ++it) report[it.key()] = it.value();
    report["timing_ms"] = ms;
    text = report.dump(2) + "\n";
  }
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) {
      err << "quadpow: cannot write " << o.out << "\n";
      return kInputError;
    }
    f << text;
  } else {
    out << text;
  }
  return res.code;
}

}  // namespace quadpow::cli
