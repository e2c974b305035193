// Command-line frontend: Macaulay representation arithmetic, monomial-set
// operations, Gotzmann persistence checks, splitting certificates and the
// lemma verification suites.
//
// Exit codes: 0 success, 1 a mathematical check failed, 2 usage or parse
// error (including budget refusals).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gotzmann/engine.hpp"
#include "gotzmann/suites.hpp"

namespace {

using gotzmann::Int;
using Json = nlohmann::ordered_json;

struct GlobalOpts {
  std::string format = "plain";
  std::uint64_t budget = gotzmann::kDefaultSubsetBudget;
  std::uint64_t seed = 0;
  int parallel = 1;

  bool json() const { return format == "json"; }
};

Int parse_big(const std::string& text) {
  try {
    return Int(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
}

gotzmann::MonomialSet read_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open '" + path + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return gotzmann::parse_monomial_set(buf.str());
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

Json set_json(const gotzmann::MonomialSet& v) {
  Json members = Json::array();
  for (const auto& m : v.members()) {
    members.push_back(gotzmann::to_string(m));
  }
  return Json{{"n", v.nvars()}, {"d", v.degree()}, {"members", members}};
}

int cmd_rep(const GlobalOpts& g, const std::string& h_text, int n) {
  gotzmann::BinomialRep rep = gotzmann::macaulay_rep(parse_big(h_text), n);
  if (g.json()) {
    Json terms = Json::array();
    for (const auto& t : rep.terms) {
      terms.push_back(Json{{"top", gotzmann::to_string(t.top)}, {"bottom", t.bottom}});
    }
    emit(Json{{"terms", terms}, {"value", gotzmann::to_string(rep_eval(rep))}});
  } else {
    std::cout << gotzmann::to_string(rep) << " = " << gotzmann::to_string(rep_eval(rep))
              << '\n';
  }
  return 0;
}

int cmd_op(const GlobalOpts& g, const std::string& name, const std::string& h_text, int n) {
  Int h = parse_big(h_text);
  if (name == "rem") {
    gotzmann::Remainder r = gotzmann::remainder(h, n);
    if (g.json()) {
      emit(Json{{"alpha", gotzmann::to_string(r.alpha)}, {"rem", gotzmann::to_string(r.rem)}});
    } else {
      std::cout << "alpha=" << gotzmann::to_string(r.alpha)
                << " rem=" << gotzmann::to_string(r.rem) << '\n';
    }
    return 0;
  }
  Int value = name == "up"     ? gotzmann::up(h, n)
              : name == "down" ? gotzmann::down(h, n)
                               : gotzmann::ddown(h, n);
  if (g.json()) {
    emit(Json{{"value", gotzmann::to_string(value)}});
  } else {
    std::cout << gotzmann::to_string(value) << '\n';
  }
  return 0;
}

void print_set(const GlobalOpts& g, const gotzmann::MonomialSet& v) {
  if (g.json()) {
    emit(set_json(v));
  } else {
    std::cout << gotzmann::to_string(v);
  }
}

int cmd_set_gotzmann(const GlobalOpts& g, const std::string& path) {
  gotzmann::MonomialSet v = read_set(path);
  Int size(static_cast<unsigned long>(v.size()));
  Int shadow_size(static_cast<unsigned long>(gotzmann::shadow(v).size()));
  Int bound = gotzmann::up(size, v.nvars() - 1);
  bool pass = shadow_size == bound;
  if (g.json()) {
    emit(Json{{"size", gotzmann::to_string(size)},
              {"shadow", gotzmann::to_string(shadow_size)},
              {"bound", gotzmann::to_string(bound)},
              {"pass", pass}});
  } else {
    std::cout << "|V|=" << gotzmann::to_string(size)
              << " |MV|=" << gotzmann::to_string(shadow_size)
              << " bound=" << gotzmann::to_string(bound) << ' ' << (pass ? "PASS" : "FAIL")
              << '\n';
  }
  return pass ? 0 : 1;
}

int cmd_set_persist(const GlobalOpts& g, const std::string& path, int steps) {
  gotzmann::MonomialSet v = read_set(path);
  std::vector<Int> chain = gotzmann::shadow_size_chain(v, steps);
  bool pass = true;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    pass = pass && chain[k + 1] == gotzmann::up(chain[k], v.nvars() - 1);
  }
  if (g.json()) {
    Json jchain = Json::array();
    for (const auto& c : chain) {
      jchain.push_back(gotzmann::to_string(c));
    }
    emit(Json{{"chain", jchain}, {"pass", pass}});
  } else {
    std::cout << "chain:";
    for (const auto& c : chain) {
      std::cout << ' ' << gotzmann::to_string(c);
    }
    std::cout << '\n' << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? 0 : 1;
}

Json cert_json(const gotzmann::PersistenceCertificate& c) {
  const char* kind = c.kind == gotzmann::CertKind::FullSet     ? "full"
                     : c.kind == gotzmann::CertKind::Singleton ? "singleton"
                                                               : "split";
  Json j{{"kind", kind},
         {"n", c.n_vars},
         {"d", c.degree},
         {"gcd", gotzmann::to_string(c.gcd_removed)},
         {"size", gotzmann::to_string(c.set_size)}};
  if (c.kind == gotzmann::CertKind::Split) {
    j["i"] = c.index;
    j["b"] = gotzmann::to_string(c.dropped_count);
    j["c"] = gotzmann::to_string(c.kept_count);
    j["kept"] = cert_json(*c.kept_child);
    j["dropped"] = cert_json(*c.dropped_child);
  }
  return j;
}

int cmd_set_certify(const GlobalOpts& g, const std::string& path, bool machine) {
  gotzmann::MonomialSet v = read_set(path);
  if (!gotzmann::is_gotzmann(v)) {
    std::cerr << "not a Gotzmann set; no certificate exists\n";
    return 1;
  }
  gotzmann::PersistenceCertificate cert = gotzmann::build_certificate(v);
  gotzmann::CertCheck check = gotzmann::check_certificate(cert, v);
  if (!check) {
    std::cerr << "internal inconsistency: built certificate fails validation: "
              << check.diagnostic << '\n';
    return 1;
  }
  if (g.json()) {
    emit(cert_json(cert));
  } else {
    std::cout << (machine ? gotzmann::to_machine(cert) : gotzmann::to_text(cert));
  }
  return 0;
}

int cmd_set_split(const GlobalOpts& g, int index, const std::string& path) {
  gotzmann::MonomialSet v = read_set(path);
  gotzmann::SplitResult s = gotzmann::split(v, index);
  if (g.json()) {
    emit(Json{{"i", s.index},
              {"gcd", gotzmann::to_string(s.gcd)},
              {"kept", set_json(s.kept)},
              {"dropped", set_json(s.dropped)}});
  } else {
    std::cout << "# i=" << s.index << " gcd=" << gotzmann::to_string(s.gcd) << '\n'
              << "# kept\n"
              << gotzmann::to_string(s.kept) << "# dropped\n"
              << gotzmann::to_string(s.dropped);
  }
  return 0;
}

int cmd_lemma(const GlobalOpts& g, const std::string& name, gotzmann::SuiteOptions opt) {
  auto id = gotzmann::parse_lemma_id(name);
  if (!id) {
    throw std::invalid_argument("unknown lemma '" + name + "'");
  }
  opt.seed = g.seed;
  opt.budget = g.budget;
  opt.workers = g.parallel;
  gotzmann::LemmaReport report = gotzmann::run_lemma_suite(*id, opt);
  if (g.json()) {
    Json violations = Json::array();
    for (const auto& v : report.violations) {
      violations.push_back(v);
    }
    emit(Json{{"lemma", report.lemma},
              {"range", report.range},
              {"cases", report.cases},
              {"violations", violations}});
  } else {
    std::cout << report.to_string();
  }
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Macaulay binomial representations, monomial shadows and "
               "Gotzmann persistence certificates"};
  app.require_subcommand(1);
  // '-h' stays free for the positional h arguments.
  app.set_help_flag("--help", "print help");

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"plain", "json"}));
  app.add_option("--budget", g.budget, "subset enumeration cap per cell");
  app.add_option("--seed", g.seed, "seed for sampled suites");
  app.add_option("--parallel", g.parallel, "worker count for partitioned sweeps")
      ->check(CLI::PositiveNumber);

  // rep <h> <n>
  auto* rep_cmd = app.add_subcommand("rep", "print the Macaulay representation of h");
  rep_cmd->set_help_flag("--help", "print help");
  std::string rep_h;
  int rep_n = 0;
  rep_cmd->add_option("h", rep_h)->required();
  rep_cmd->add_option("n", rep_n)->required()->check(CLI::PositiveNumber);

  // op <up|down|ddown|rem> <h> <n>
  auto* op_cmd = app.add_subcommand("op", "evaluate a growth/compression operator");
  op_cmd->set_help_flag("--help", "print help");
  std::string op_name, op_h;
  int op_n = 0;
  op_cmd->add_option("operator", op_name)
      ->required()
      ->check(CLI::IsMember({"up", "down", "ddown", "rem"}));
  op_cmd->add_option("h", op_h)->required();
  op_cmd->add_option("n", op_n)->required()->check(CLI::NonNegativeNumber);

  // set <action> ...
  auto* set_cmd = app.add_subcommand("set", "monomial-set operations");
  set_cmd->require_subcommand(1);

  auto* lex_cmd = set_cmd->add_subcommand("lex", "print Lex(n, d, a)");
  int lex_n = 0, lex_d = 0;
  std::string lex_a;
  lex_cmd->add_option("n", lex_n)->required()->check(CLI::PositiveNumber);
  lex_cmd->add_option("d", lex_d)->required()->check(CLI::NonNegativeNumber);
  lex_cmd->add_option("a", lex_a)->required();

  auto* shadow_cmd = set_cmd->add_subcommand("shadow", "print MV");
  std::string shadow_file;
  shadow_cmd->add_option("file", shadow_file)->required();

  auto* gotz_cmd = set_cmd->add_subcommand("gotzmann", "check |MV| = up(|V|, n-1)");
  std::string gotz_file;
  gotz_cmd->add_option("file", gotz_file)->required();

  auto* persist_cmd = set_cmd->add_subcommand("persist", "iterate shadows and check growth");
  std::string persist_file;
  int persist_steps = 1;
  persist_cmd->add_option("--steps", persist_steps)->check(CLI::PositiveNumber);
  persist_cmd->add_option("file", persist_file)->required();

  auto* certify_cmd = set_cmd->add_subcommand("certify", "build a persistence certificate");
  std::string certify_file;
  bool certify_machine = false;
  certify_cmd->add_flag("--machine", certify_machine, "one node per line");
  certify_cmd->add_option("file", certify_file)->required();

  auto* split_cmd = set_cmd->add_subcommand("split", "print K_i(V) and D_i(V)");
  int split_i = 0;
  std::string split_file;
  split_cmd->add_option("i", split_i)->required()->check(CLI::PositiveNumber);
  split_cmd->add_option("file", split_file)->required();

  // lemma <id> [range flags]
  auto* lemma_cmd = app.add_subcommand("lemma", "run a verification suite");
  std::string lemma_name;
  gotzmann::SuiteOptions sweep;
  lemma_cmd->add_option("id", lemma_name)->required();
  lemma_cmd->add_option("--max-h", sweep.max_h);
  lemma_cmd->add_option("--max-n", sweep.max_n);
  lemma_cmd->add_option("--max-a", sweep.max_a);
  lemma_cmd->add_option("--max-b", sweep.max_b);
  lemma_cmd->add_option("--max-alpha", sweep.max_alpha);
  lemma_cmd->add_option("--samples", sweep.samples);
  lemma_cmd->add_option("--n", sweep.n_vars);
  lemma_cmd->add_option("--d", sweep.degree);

  // Let the global flags (--format, --seed, ...) appear after the
  // subcommand as well.
  for (CLI::App* sub : {rep_cmd, op_cmd, set_cmd, lex_cmd, shadow_cmd, gotz_cmd,
                        persist_cmd, certify_cmd, split_cmd, lemma_cmd}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (rep_cmd->parsed()) {
      return cmd_rep(g, rep_h, rep_n);
    }
    if (op_cmd->parsed()) {
      return cmd_op(g, op_name, op_h, op_n);
    }
    if (set_cmd->parsed()) {
      if (lex_cmd->parsed()) {
        print_set(g, gotzmann::lexsegment(lex_n, lex_d, parse_big(lex_a)));
        return 0;
      }
      if (shadow_cmd->parsed()) {
        print_set(g, gotzmann::shadow(read_set(shadow_file)));
        return 0;
      }
      if (gotz_cmd->parsed()) {
        return cmd_set_gotzmann(g, gotz_file);
      }
      if (persist_cmd->parsed()) {
        return cmd_set_persist(g, persist_file, persist_steps);
      }
      if (certify_cmd->parsed()) {
        return cmd_set_certify(g, certify_file, certify_machine);
      }
      if (split_cmd->parsed()) {
        return cmd_set_split(g, split_i, split_file);
      }
    }
    if (lemma_cmd->parsed()) {
      return cmd_lemma(g, lemma_name, sweep);
    }
  } catch (const gotzmann::InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return 1;
  } catch (const gotzmann::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
