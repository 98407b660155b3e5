#include "cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "io.hpp"
#include "suites.hpp"
#include "hmon/error.hpp"

namespace moncli {

using namespace hmon;

namespace {

struct Options {
  std::string output;
  std::vector<std::string> files;
  int d = 0;
  std::size_t terms = 4;
  int times = 1;
  bool oracle = false;
  std::string control;
  std::string suite = "all";
  std::uint64_t seed = 1;
  std::size_t iters = 100;
  std::size_t max_size = 3;
  int max_t = 3;
  std::string ring = "int-local:2";
  std::string check_ring = "ints";
  int t = 2;
  int max_s = -1;
  std::vector<int> exps;
};

struct Loaded {
  json doc;
  std::filesystem::path dir;
};

Loaded load(const std::string& path) {
  return Loaded{read_json_file(path), std::filesystem::path(path).parent_path()};
}

MonObject load_object(const std::string& path) {
  Loaded l = load(path);
  if (is_morphism_doc(l.doc) || is_triangle_doc(l.doc)) throw Error(ErrorCode::ParseError, path + " is not an object file");
  return parse_object(l.doc);
}

MonMorphism load_morphism(const std::string& path) {
  Loaded l = load(path);
  if (!is_morphism_doc(l.doc)) throw Error(ErrorCode::ParseError, path + " is not a morphism file");
  return parse_morphism(l.doc, l.dir).psi;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

class Command {
 public:
  Command(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  int validate() {
    Loaded l = load(o_.files[0]);
    if (is_triangle_doc(l.doc)) {
      const Triangle tr = parse_triangle(l.doc, l.dir);
      const bool exact = triangle_nullity(tr).has_value();
      emit(std::string("triangle: ") + (exact ? "valid" : "composites not null-homotopic") + "\n");
      return exact ? 0 : 1;
    }
    if (is_morphism_doc(l.doc)) {
      const MonMorphism psi = parse_morphism(l.doc, l.dir).psi;
      emit("morphism: valid " + std::to_string(psi.tgt().n()) + "x" + std::to_string(psi.src().n()) + "\n");
      return 0;
    }
    const MonObject f = parse_object(l.doc);
    emit("object: valid n=" + std::to_string(f.n()) + " svals=" + format_lengths(f.svals()) + "\n");
    return 0;
  }

  int sigma() {
    Loaded l = load(o_.files[0]);
    if (is_morphism_doc(l.doc)) return emit_json(emit_morphism(induced_sigma_morphism(parse_morphism(l.doc, l.dir).psi)));
    return emit_json(emit_object(parse_object(l.doc).sigma()));
  }

  int suspend_cmd() {
    Loaded l = load(o_.files[0]);
    if (is_morphism_doc(l.doc)) return emit_json(emit_morphism(suspend(parse_morphism(l.doc, l.dir).psi)));
    return emit_json(emit_object(suspend(parse_object(l.doc))));
  }

  int cone_cmd() {
    const Cone c = cone(load_morphism(o_.files[0]));
    json j;
    j["cone"] = emit_object(c.C);
    j["inj"] = emit_morphism(c.inj);
    j["proj"] = emit_morphism(c.proj);
    return emit_json(j);
  }

  int triangle() { return emit_json(emit_triangle(standard_triangle(load_morphism(o_.files[0])))); }

  int rotate_cmd() {
    Loaded l = load(o_.files[0]);
    Triangle tr = is_triangle_doc(l.doc) ? parse_triangle(l.doc, l.dir) : standard_triangle(parse_morphism(l.doc, l.dir).psi);
    if (o_.times < 1) throw Error(ErrorCode::ParseError, "--times must be positive");
    json isos = json::array();
    for (int k = 0; k < o_.times; ++k) {
      Rotation r = rotate(tr);
      isos.push_back(emit_morphism(r.iso_witness));
      tr = std::move(r.rotated);
    }
    json j;
    j["triangle"] = emit_triangle(tr);
    j["iso"] = std::move(isos);
    return emit_json(j);
  }

  int decompose_cmd() {
    emit("svals: " + format_lengths(decompose(load_object(o_.files[0]))) + "\n");
    return 0;
  }

  int coker() {
    const RModuleObj m = cokernel(load_object(o_.files[0]));
    emit("exps: " + format_lengths(m.exps) + "\n");
    return 0;
  }

  int projective() {
    const bool p = is_projective(load_object(o_.files[0]));
    emit("projective: " + yes_no(p) + "\n");
    return p ? 0 : 1;
  }

  int nullhomotopic() {
    const auto w = null_homotopy(load_morphism(o_.files[0]));
    std::string text = "null-homotopic: " + yes_no(w.has_value()) + "\n";
    if (w) text += "s0: " + dump(emit_matrix(w->s0)) + "\ns1: " + dump(emit_matrix(w->s1)) + "\n";
    emit(text);
    return w ? 0 : 1;
  }

  int stable_hom_cmd() {
    const MonObject a = load_object(o_.files[0]);
    const MonObject b = load_object(o_.files.at(1));
    const StableHomModule m = stable_hom(a, b);
    std::string text = "lengths: " + format_lengths(m.lengths) + "\n";
    int rc = 0;
    if (o_.oracle) {
      const StableHomModule br = stable_hom_R_bruteforce(cokernel(a), cokernel(b));
      text += "oracle: " + format_lengths(br.lengths) + (br == m ? " PASS" : " FAIL") + "\n";
      rc = br == m ? 0 : 1;
    }
    emit(text);
    return rc;
  }

  int iso_test() {
    const bool iso = is_iso_in_homotopy(load_morphism(o_.files[0]));
    emit("iso: " + yes_no(iso) + "\n");
    return iso ? 0 : 1;
  }

  int resolve() {
    const MonObject f = load_object(o_.files[0]);
    const PeriodicResolution res = two_periodic_resolution(f, o_.terms);
    std::string text = "f_bar: " + dump(emit_matrix(res.f_bar)) + "\nfsig_bar: " + dump(emit_matrix(res.fsig_bar)) +
                       "\nterms: " + std::to_string(res.length) + "\n";
    int rc = 0;
    if (f.ctx().base().finite_residue_field()) {
      const bool exact = resolution_is_exact(res, f.ctx());
      text += "exact: " + yes_no(exact) + "\n";
      rc = exact ? 0 : 1;
    } else {
      text += "exact: unchecked (infinite residue field)\n";
    }
    emit(text);
    return rc;
  }

  int tau_cmd() { return emit_json(emit_object(tau(load_object(o_.files[0]), o_.d))); }

  int tau_gp_cmd() {
    const RModuleObj m = RModuleObj::make(RingCtx(parse_ring_spec(o_.ring), o_.t), o_.exps);
    emit("exps: " + format_lengths(tau_gp(m, o_.d).exps) + "\n");
    return 0;
  }

  int ar_seq() {
    const ArSequence s = ar_sequence(load_object(o_.files[0]));
    json j;
    j["tau_f"] = emit_object(s.tau_f);
    j["middle"] = emit_object(s.middle);
    j["end"] = emit_object(s.end);
    j["theta"] = emit_morphism(s.theta);
    j["g"] = emit_morphism(s.g);
    return emit_json(j);
  }

  int ar_verify() {
    const MonObject f = load_object(o_.files[0]);
    ArSequence seq = o_.control.empty()        ? ar_sequence(f)
                     : o_.control == "split"   ? ar_control(f, ArControl::Split)
                     : o_.control == "sign"    ? ar_control(f, ArControl::SignCorrupted)
                                               : throw Error(ErrorCode::ParseError, "unknown control \"" + o_.control + "\"");
    const ArReport rep = verify_right_almost_split(seq);
    std::ostringstream os;
    for (const std::string& n : rep.notes) os << "NOTE " << n << "\n";
    for (const ArTestLine& l : rep.tests)
      os << "TEST s'=" << l.s2 << " classes=" << l.classes << " factored=" << l.factored << (l.pass ? " PASS" : " FAIL")
         << "\n";
    os << "ARSS " << rep.s << " " << rep.t << (rep.pass() ? " PASS" : " FAIL") << "\n";
    emit(os.str());
    return rep.pass() ? 0 : 1;
  }

  int check() {
    SuiteParams p;
    p.seed = o_.seed;
    p.iters = o_.iters;
    p.max_size = o_.max_size;
    p.max_t = o_.max_t;
    if (p.max_size < 1 || p.max_t < 1) throw Error(ErrorCode::ParseError, "--max-size and --max-t must be positive");
    if (o_.check_ring == "ints") {
      p.mode = RingMode::Ints;
    } else if (o_.check_ring == "any") {
      p.mode = RingMode::Any;
    } else {
      p.mode = RingMode::Fixed;
      p.fixed = parse_ring_spec(o_.check_ring);
    }
    std::vector<std::string> names = o_.suite == "all" ? suite_names() : std::vector<std::string>{o_.suite};
    std::ostringstream os;
    bool ok = true;
    for (const std::string& n : names) {
      const SuiteResult r = run_suite(n, p);
      os << r.summary() << "\n";
      for (const std::string& f : r.failures) os << "  " << f << "\n";
      ok = ok && r.pass();
    }
    emit(os.str());
    return ok ? 0 : 1;
  }

  int faithful() {
    const RingCtx ctx(parse_ring_spec(o_.ring), o_.t);
    const FaithfulReport rep = check_fully_faithful(ctx, o_.max_s < 0 ? o_.t : o_.max_s);
    std::ostringstream os;
    for (const PairReport& p : rep.pairs)
      os << "PAIR s=" << p.s << " s'=" << p.s2 << " mon=" << format_lengths(p.mon)
         << " oracle=" << format_lengths(p.oracle) << (p.pass ? " PASS" : " FAIL") << "\n";
    emit(os.str());
    return rep.all_pass() ? 0 : 1;
  }

 private:
  int emit_json(const json& j) {
    emit(dump(j) + "\n");
    return 0;
  }

  void emit(const std::string& text) {
    if (o_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(o_.output);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write " + o_.output);
    f << text;
  }

  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in Mon(omega, P) over a DVR", "mon"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("-o,--output", o.output, "Write the result to this file");

  using Handler = int (Command::*)();
  std::vector<std::pair<CLI::App*, Handler>> table;
  auto sub = [&](const char* name, const char* help, Handler h, std::size_t nfiles) {
    CLI::App* s = app.add_subcommand(name, help);
    if (nfiles > 0) s->add_option("files", o.files, "Input files")->required()->expected(static_cast<int>(nfiles));
    table.emplace_back(s, h);
    return s;
  };

  sub("validate", "Parse and validate an object, morphism or triangle file", &Command::validate, 1);
  sub("sigma", "Sigma-partner of an object, or the induced morphism", &Command::sigma, 1);
  sub("suspend", "Suspension of an object or morphism", &Command::suspend_cmd, 1);
  sub("cone", "Mapping cone of a morphism with its structure maps", &Command::cone_cmd, 1);
  sub("triangle", "Standard triangle of a morphism", &Command::triangle, 1);
  sub("rotate", "Rotate a triangle (or the standard triangle of a morphism)", &Command::rotate_cmd, 1)
      ->add_option("--times", o.times, "Number of rotations");
  sub("decompose", "Elementary divisor exponents of an object", &Command::decompose_cmd, 1);
  sub("coker", "Cokernel as an R-module", &Command::coker, 1);
  sub("is-projective", "Is the object projective", &Command::projective, 1);
  sub("nullhomotopic", "Decide null-homotopy and print a witness", &Command::nullhomotopic, 1);
  sub("stable-hom", "Hom in the homotopy category", &Command::stable_hom_cmd, 2)
      ->add_flag("--oracle", o.oracle, "Compare with brute force over R");
  sub("iso-test", "Is the morphism an isomorphism in the homotopy category", &Command::iso_test, 1);
  sub("resolve", "2-periodic resolution of the cokernel over R", &Command::resolve, 1)
      ->add_option("--terms", o.terms, "Number of terms");
  sub("tau", "Auslander-Reiten translate in Mon", &Command::tau_cmd, 1)->add_option("--d", o.d, "Dimension of R");
  {
    CLI::App* s = sub("tau-gp", "Auslander-Reiten translate of R/pi^e", &Command::tau_gp_cmd, 0);
    s->add_option("--ring", o.ring, "Ring, e.g. int-local:2 or poly-local:Q");
    s->add_option("--t", o.t, "Exponent of omega")->required();
    s->add_option("--exps", o.exps, "Module exponents")->required()->delimiter(',');
    s->add_option("--d", o.d, "Dimension of R");
  }
  sub("ar-seq", "Almost split sequence ending at an indecomposable object", &Command::ar_seq, 1);
  sub("ar-verify", "Brute-force check that the sequence is right almost split", &Command::ar_verify, 1)
      ->add_option("--control", o.control, "Negative control: split or sign");
  {
    CLI::App* s = sub("check", "Seeded property suites", &Command::check, 0);
    s->add_option("--suite", o.suite, "Suite name or all");
    s->add_option("--seed", o.seed, "Random seed");
    s->add_option("--iters", o.iters, "Trials per suite");
    s->add_option("--max-size", o.max_size, "Maximal object rank");
    s->add_option("--max-t", o.max_t, "Maximal exponent t");
    s->add_option("--ring", o.check_ring, "ints, any, or a ring spec");
  }
  {
    CLI::App* s = sub("faithful", "Compare stable Hom with the brute-force R-side", &Command::faithful, 0);
    s->add_option("--ring", o.ring, "Ring spec");
    s->add_option("--t", o.t, "Exponent of omega")->required();
    s->add_option("--max-s", o.max_s, "Largest s tested (default t)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Command cmd(o, out);
    for (auto& [s, h] : table)
      if (s->parsed()) return (cmd.*h)();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace moncli
