// qhall: command-line front end for the cyclic-quiver Hall algebra library.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qhall/basis.hpp"
#include "qhall/errors.hpp"
#include "qhall/hall.hpp"
#include "qhall/json_io.hpp"
#include "qhall/monoid.hpp"
#include "qhall/order.hpp"
#include "qhall/verify.hpp"

using namespace qhall;

namespace {

struct Options {
  int n = 0;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 1;
  long long fiber_cap = 0;

  std::string word;
  bool word_given = false;
  std::string word_compact;
  std::string pi;
  std::string mu;
  std::string la;
  std::string dim;
  int vertex = 0;
  bool count_only = false;
  std::string section = "canonical";
  std::string section_file;
  std::string form = "green";
  std::string vector_file;
  std::string level = "quick";
};

std::vector<int> split_letters(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw DomainError("--word: '" + tok + "' is not an integer letter");
    }
  }
  return out;
}

int need_n(const Options& o) {
  if (o.n < 2) throw DomainError("--n must be given and at least 2");
  return o.n;
}

Word read_word(const Options& o) {
  if (!o.word_compact.empty()) {
    if (need_n(o) > 9) throw DomainError("--word-compact needs n <= 9; use --word with commas");
    std::vector<int> v;
    for (char c : o.word_compact) {
      if (c < '0' || c > '9') throw DomainError("--word-compact: '" + std::string(1, c) + "' is not a digit");
      v.push_back(c - '0');
    }
    return Word(o.n, std::move(v));
  }
  if (!o.word_given) throw DomainError("a word is required (--word 1,2,1 or --word-compact 121)");
  return Word(need_n(o), split_letters(o.word));
}

MultiPartition read_pi(const std::string& text, const Options& o, const char* what) {
  if (text.empty()) throw DomainError(std::string("--") + what + " is required");
  return multipartition_from_json(parse_json(text, what), o.n, what);
}

DimVector read_dim(const Options& o) {
  if (o.dim.empty()) throw DomainError("--dim is required, e.g. --dim '[2,1]'");
  DimVector d = dim_vector_from_json(parse_json(o.dim, "dim"));
  if (o.n != 0 && d.n() != o.n) throw DomainError("--dim has " + std::to_string(d.n()) + " entries but --n is " + std::to_string(o.n));
  if (d.n() < 2) throw DomainError("dim: need at least 2 vertices");
  return d;
}

class Printer {
 public:
  explicit Printer(const Options& o) : fmt_(o.format) {
    if (!o.out.empty()) {
      file_.open(o.out);
      if (!file_) throw DomainError("--out: cannot open " + o.out);
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  const std::string& fmt() const { return fmt_; }
  bool text() const { return fmt_ == "text"; }
  void json(const Json& j) { os() << j.dump() << "\n"; }
  void require(std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
      if (fmt_ == a) return;
    }
    throw DomainError("--format " + fmt_ + " is not available for this command");
  }

 private:
  std::string fmt_;
  std::ofstream file_;
};

std::string text_poly(const IntPoly& p) { return to_string(LaurentPoly::from_q(p), "v"); }

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

void print_steps(Printer& out, const std::vector<Step>& steps) {
  out.require({"json", "text"});
  if (out.text()) {
    for (const auto& s : steps) out.os() << to_string(s.target) << "\t" << to_string(s.coeff, "q") << "\n";
    return;
  }
  Json a = Json::array();
  for (const auto& s : steps) a.push_back(to_json(s));
  out.json(a);
}

template <class C>
void print_vector(Printer& out, const HallVector<C>& x) {
  out.require({"json", "text"});
  if (!out.text()) {
    out.json(to_json(x));
    return;
  }
  if (x.entries.empty()) out.os() << "0\n";
  for (const auto& [pi, c] : x.entries) out.os() << to_string(c, "v") << "\t" << to_string(pi) << "\n";
}

Section read_section(const Options& o, const DimVector& d) {
  if (o.section == "canonical") return canonical_section(d);
  if (o.section == "random") return random_section(d, o.seed);
  if (o.section == "distinguished") {
    auto s = distinguished_section(d);
    if (!s) throw DomainError("some separated multipartition of this degree has no distinguished word");
    return *s;
  }
  if (o.section == "file") {
    std::ifstream in(o.section_file);
    if (!in) throw DomainError("--section-file: cannot open '" + o.section_file + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    Json j = parse_json(ss.str(), "section-file");
    if (!j.is_array()) throw DomainError("malformed JSON field 'section': expected an array of {pi, word}");
    Section s;
    for (const auto& e : j) {
      if (!e.is_object() || !e.contains("pi") || !e.contains("word")) {
        throw DomainError("malformed JSON field 'section[]': expected {\"pi\":..,\"word\":..}");
      }
      s.emplace_back(multipartition_from_json(e["pi"], d.n()), word_from_json(e["word"], d.n()));
    }
    return s;
  }
  throw DomainError("--section must be canonical, distinguished, random or file");
}

FormKind read_form(const Options& o) {
  if (o.form == "green") return FormKind::Green;
  if (o.form == "plain") return FormKind::Plain;
  throw DomainError("--form must be green or plain");
}

int run_verify(const Options& o, Printer& out) {
  VerifyLevel level;
  if (o.level == "quick") {
    level = VerifyLevel::Quick;
  } else if (o.level == "full") {
    level = VerifyLevel::Full;
  } else {
    throw DomainError("verify level must be quick or full");
  }
  bool all = true;
  for (const auto& c : library_criteria(level)) {
    const auto r = run_criterion(c);
    all = all && r.passed;
    out.os() << format_result(r) << "\n";
    out.os().flush();
  }
  out.os() << "criterion 9 (brute-force oracle gates) runs in the test suite: ctest -R acceptance\n";
  out.os() << (all ? "verify: all criteria passed" : "verify: FAILED") << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generic extensions, Hall polynomials and PBW bases for the cyclic quiver"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;

  app.add_option("--n", o.n, "number of vertices");
  app.add_option("--format", o.format, "json | text | csv | dot")->check(CLI::IsMember({"json", "text", "csv", "dot"}));
  app.add_option("--out", o.out, "write output to this file");
  app.add_option("--seed", o.seed, "seed for random sections");
  app.add_option("--fiber-cap", o.fiber_cap, "largest fiber to list (also QHALL_FIBER_CAP)");

  auto add_word = [&](CLI::App* c) {
    c->add_option("--word", o.word, "comma-separated letters, e.g. 1,2,1");
    c->add_option("--word-compact", o.word_compact, "digit string, n <= 9");
  };
  auto add_pi = [&](CLI::App* c) { c->add_option("--pi", o.pi, "multipartition JSON, parts array or {\"n\",\"parts\"}"); };

  auto* c_wp = app.add_subcommand("wp", "multipartition of the generic extension of a word");
  add_word(c_wp);
  auto* c_fiber = app.add_subcommand("fiber", "all words with a given image");
  add_pi(c_fiber);
  c_fiber->add_flag("--count-only", o.count_only, "print only the number of words");
  auto* c_canon = app.add_subcommand("canonical-word", "one fixed word in the fiber");
  add_pi(c_canon);
  auto* c_dist = app.add_subcommand("distinguished", "distinguished-word test");
  add_word(c_dist);
  auto* c_sep = app.add_subcommand("separated", "separatedness test");
  add_pi(c_sep);

  auto* c_order = app.add_subcommand("order", "degeneration order");
  c_order->require_subcommand(1);
  auto* c_leq = c_order->add_subcommand("leq", "is mu <= la");
  c_leq->add_option("--mu", o.mu, "multipartition JSON")->required();
  c_leq->add_option("--la", o.la, "multipartition JSON")->required();
  auto* c_poset = c_order->add_subcommand("poset", "the poset on Pi_d");
  c_poset->add_option("--dim", o.dim, "dimension vector JSON")->required();
  auto* c_ideal = c_order->add_subcommand("ideal", "everything below pi");
  add_pi(c_ideal);

  auto* c_hall = app.add_subcommand("hall", "Hall polynomials");
  c_hall->require_subcommand(1);
  auto* c_bracket = c_hall->add_subcommand("bracket", "<w|pi>");
  add_word(c_bracket);
  add_pi(c_bracket);
  auto* c_top = c_hall->add_subcommand("top-step", "submodules with simple top quotient S_i");
  add_pi(c_top);
  c_top->add_option("--vertex", o.vertex, "vertex i")->required();
  auto* c_rfc = c_hall->add_subcommand("reduced-count", "reduced filtrations of type w");
  add_word(c_rfc);
  add_pi(c_rfc);

  auto* c_basis = app.add_subcommand("basis", "monomial and PBW bases");
  c_basis->require_subcommand(1);
  auto* c_expand = c_basis->add_subcommand("expand", "E_w in the u-basis");
  add_word(c_expand);
  auto* c_matrix = c_basis->add_subcommand("matrix", "monomial-to-u transition matrix");
  c_matrix->add_option("--dim", o.dim, "dimension vector JSON")->required();
  c_matrix->add_option("--section", o.section, "canonical | distinguished | random | file");
  c_matrix->add_option("--section-file", o.section_file, "JSON array of {pi, word}");
  auto* c_radical = c_basis->add_subcommand("radical", "basis of the radical of the form");
  c_radical->add_option("--dim", o.dim, "dimension vector JSON")->required();
  c_radical->add_option("--form", o.form, "green | plain");
  auto* c_pbw = c_basis->add_subcommand("pbw", "representative supported on separated multipartitions");
  add_word(c_pbw);
  add_pi(c_pbw);
  c_pbw->add_option("--vector", o.vector_file, "HallVector JSON file");

  auto* c_verify = app.add_subcommand("verify", "run the acceptance checks");
  c_verify->add_option("level", o.level, "quick | full");

  try {
    app.parse(argc, argv);
    for (auto* c : {c_wp, c_dist, c_bracket, c_rfc, c_expand, c_pbw}) {
      if (c->parsed() && c->count("--word") > 0) o.word_given = true;
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    const std::int64_t cap = o.fiber_cap > 0 ? o.fiber_cap : fiber_cap_from_env();
    if (o.fiber_cap < 0) throw DomainError("--fiber-cap must be positive");
    Printer out(o);

    if (c_wp->parsed()) {
      out.require({"json", "text"});
      const auto pi = wp(read_word(o));
      if (out.text()) {
        out.os() << to_string(pi) << "\n";
      } else {
        out.json(to_json(pi));
      }
    } else if (c_fiber->parsed()) {
      out.require({"json", "text"});
      const auto pi = read_pi(o.pi, o, "pi");
      if (o.count_only) {
        out.os() << fiber_size(pi).get_str() << "\n";
      } else {
        const auto words = fiber(pi, cap);
        if (out.text()) {
          for (const auto& w : words) out.os() << to_string(w) << "\n";
        } else {
          Json a = Json::array();
          for (const auto& w : words) a.push_back(to_json(w));
          out.json(a);
        }
      }
    } else if (c_canon->parsed()) {
      out.require({"json", "text"});
      const auto w = canonical_word(read_pi(o.pi, o, "pi"));
      if (out.text()) {
        out.os() << to_string(w) << "\n";
      } else {
        out.json(to_json(w));
      }
    } else if (c_dist->parsed()) {
      out.require({"json", "text"});
      out.os() << (is_distinguished(read_word(o)) ? "true" : "false") << "\n";
    } else if (c_sep->parsed()) {
      out.require({"json", "text"});
      out.os() << (is_separated(read_pi(o.pi, o, "pi")) ? "true" : "false") << "\n";
    } else if (c_leq->parsed()) {
      out.require({"json", "text"});
      out.os() << (leq_deg(read_pi(o.mu, o, "mu"), read_pi(o.la, o, "la")) ? "true" : "false") << "\n";
    } else if (c_poset->parsed()) {
      out.require({"json", "dot", "text"});
      const Poset p = degeneration_poset(read_dim(o));
      if (out.fmt() == "dot") {
        out.os() << to_dot(p);
      } else if (out.text()) {
        for (const auto& [a, b] : p.covers) out.os() << to_string(p.elements[a]) << " < " << to_string(p.elements[b]) << "\n";
      } else {
        out.json(to_json(p));
      }
    } else if (c_ideal->parsed()) {
      out.require({"json", "text"});
      const auto id = ideal(read_pi(o.pi, o, "pi"));
      if (out.text()) {
        for (const auto& pi : id) out.os() << to_string(pi) << "\n";
      } else {
        Json a = Json::array();
        for (const auto& pi : id) a.push_back(to_json(pi));
        out.json(a);
      }
    } else if (c_bracket->parsed() || c_rfc->parsed()) {
      out.require({"json", "text"});
      const Word w = read_word(o);
      const auto pi = read_pi(o.pi, o, "pi");
      const IntPoly p = c_bracket->parsed() ? bracket(w, pi) : reduced_filtration_count(w, pi);
      if (out.text()) {
        out.os() << to_string(p, "q") << "\n";
      } else {
        out.json(to_json(p));
      }
    } else if (c_top->parsed()) {
      print_steps(out, top_step(read_pi(o.pi, o, "pi"), o.vertex));
    } else if (c_expand->parsed()) {
      print_vector(out, expand_monomial(read_word(o)));
    } else if (c_matrix->parsed()) {
      out.require({"json", "csv", "text"});
      const DimVector d = read_dim(o);
      const TransitionMatrix t = transition_matrix(d, read_section(o, d));
      if (out.fmt() == "json") {
        out.json(to_json(t));
      } else {
        out.os() << "word";
        for (const auto& c : t.cols) out.os() << "," << csv_quote(to_string(c));
        out.os() << "\n";
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
          out.os() << csv_quote(to_string(t.words[r]));
          for (const auto& e : t.entries[r]) out.os() << "," << csv_quote(to_string(e, "v"));
          out.os() << "\n";
        }
      }
    } else if (c_radical->parsed()) {
      out.require({"json", "text"});
      const auto basis = radical_basis(read_dim(o), read_form(o));
      if (out.text()) {
        for (const auto& y : basis) {
          print_vector(out, y);
          out.os() << "\n";
        }
      } else {
        Json a = Json::array();
        for (const auto& y : basis) a.push_back(to_json(y));
        out.json(a);
      }
    } else if (c_pbw->parsed()) {
      HallVector<RatFunc> x;
      if (!o.vector_file.empty()) {
        std::ifstream in(o.vector_file);
        if (!in) throw DomainError("--vector: cannot open '" + o.vector_file + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        x = hall_vector_from_json(parse_json(ss.str(), "vector"));
      } else if (!o.pi.empty()) {
        const auto pi = read_pi(o.pi, o, "pi");
        x = HallVector<RatFunc>(dim_vector(pi));
        x.add(pi, RatFunc(1));
      } else {
        x = to_ratfunc(expand_monomial(read_word(o)));
      }
      print_vector(out, pbw_expand(x));
    } else if (c_verify->parsed()) {
      return run_verify(o, out);
    }
    return 0;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
