#include "brauerlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "brauerlab/algebra.hpp"
#include "brauerlab/automata.hpp"
#include "brauerlab/diophantine.hpp"
#include "brauerlab/error.hpp"
#include "brauerlab/gt.hpp"
#include "brauerlab/json_io.hpp"
#include "brauerlab/mutation.hpp"

namespace brauerlab::cli {
namespace {

using io::json;

struct Output {
  std::string text;
  json data;
};

using Handler = std::function<Output()>;

struct Leaf {
  CLI::App* app;
  std::string name;
  Handler handler;
};

template <class T>
std::string join(const std::vector<T>& items, const std::string& sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < items.size(); ++i) out << (i ? sep : "") << items[i];
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

mutation::RconVariant rcon_variant(const std::string& name) {
  if (name == "standard") return mutation::RconVariant::standard;
  if (name == "listed") return mutation::RconVariant::listed;
  throw std::invalid_argument("unknown rcon variant '" + name + "'");
}

// A JSON seed document, or whitespace-separated hex bytes of an AES-128 key.
mutation::Seed load_seed(const std::string& path, const std::string& rcon) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return io::seed_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
      throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
    }
  }
  return mutation::aes_seed(mutation::parse_hex_bytes(text), rcon_variant(rcon));
}

std::string hex32(std::uint32_t w) {
  std::ostringstream out;
  out << std::hex << std::setw(8) << std::setfill('0') << w;
  return out.str();
}

std::string summary_text(const AlgebraSummary& s) {
  std::ostringstream out;
  out << "nodes " << s.nodes << "\narrows " << s.arrows << "\nloops " << s.loops << "\ndimension " << s.dim
      << "\ncenter " << (s.center_dim ? std::to_string(*s.center_dim) : "n/a") << "\ngrading "
      << (s.graded ? std::to_string(*s.graded) : "none") << '\n';
  if (s.basis_size) out << "basis " << *s.basis_size << '\n';
  return out.str();
}

std::string pattern_block(const gt::GTPattern& p) {
  std::ostringstream out;
  for (std::size_t k = 0; k < p.rows.size(); ++k) {
    out << std::string(2 * k, ' ');
    for (std::size_t i = 0; i < p.rows[k].size(); ++i) out << (i ? "   " : "") << p.rows[k][i];
    out << '\n';
  }
  return out.str();
}

std::vector<std::int64_t> parse_int_list(const std::vector<std::string>& parts) {
  std::vector<std::int64_t> out;
  for (const auto& p : parts) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(p, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != p.size() || p.empty()) throw std::invalid_argument("'" + p + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

class Commands {
 public:
  explicit Commands(CLI::App& app) : app_(app) {
    app_.require_subcommand(1);
    app_.add_flag("--json", json_, "Emit a JSON envelope instead of plain text");
    app_.add_flag("--skip-truncated", skip_truncated_, "Build quivers with truncated vertices skipped");
    add_brauer();
    add_mutate();
    add_aes();
    add_dioph();
    add_gt();
    add_nfa();
  }

  std::string execute() {
    for (const auto& leaf : leaves_) {
      if (!leaf.app->parsed()) continue;
      Output o = leaf.handler();
      if (json_) return io::envelope(leaf.name, std::move(o.data)).dump(2) + "\n";
      return o.text;
    }
    throw CLI::CallForHelp();
  }

 private:
  CLI::App* group(const std::string& name, const std::string& description) {
    auto* g = app_.add_subcommand(name, description);
    g->require_subcommand(1);
    return g;
  }

  CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& description, Handler h) {
    auto* sub = parent->add_subcommand(name, description);
    leaves_.push_back({sub, parent->get_name() + " " + name, std::move(h)});
    return sub;
  }

  TruncatedPolicy policy() const { return skip_truncated_ ? TruncatedPolicy::skip : TruncatedPolicy::reject; }

  void add_brauer() {
    auto* g = group("brauer", "Brauer configuration algebras");
    auto* build = leaf(g, "build", "Quiver, dimensions and grading", [this] {
      const auto config = io::load_configuration(config_path_);
      const auto quiver = build_quiver(config, policy());
      const auto summary = summarize(config, false, policy());
      if (!dot_path_.empty()) {
        std::ofstream out(dot_path_);
        if (!out) throw std::invalid_argument("cannot write '" + dot_path_ + "'");
        out << quiver_dot(config, quiver);
      }
      std::ostringstream text;
      text << summary_text(summary);
      json arrows = json::array();
      for (const auto& a : quiver.arrows) {
        const auto name = arrow_name(config, a);
        text << "arrow " << name << " V" << a.source + 1 << " -> V" << a.target + 1 << '\n';
        arrows.push_back(json{{"name", name}, {"source", a.source}, {"target", a.target}});
      }
      json relations = json::array();
      for (const auto& gen : ideal_generators(config, quiver)) {
        const auto d = describe(config, quiver, gen);
        text << "relation " << d << '\n';
        relations.push_back(d);
      }
      return Output{text.str(), json{{"summary", io::to_json(summary)}, {"arrows", arrows}, {"relations", relations}}};
    });
    build->add_option("config", config_path_, "Configuration JSON file")->required();
    build->add_option("--dot", dot_path_, "Write the quiver as Graphviz to this file");

    auto* basis = leaf(g, "basis", "Basis listing and count", [this] {
      const auto config = io::load_configuration(config_path_);
      const auto quiver = build_quiver(config, policy());
      const auto elements = enumerate_basis(config, quiver);
      std::ostringstream text;
      json list = json::array();
      for (const auto& e : elements) {
        const auto name = e.arrows.empty() ? "e_V" + std::to_string(e.polygon + 1) : path_name(config, quiver, e.arrows);
        text << name << '\n';
        list.push_back(name);
      }
      text << "count " << elements.size() << '\n';
      return Output{text.str(), json{{"basis", list}, {"count", elements.size()}}};
    });
    basis->add_option("config", config_path_, "Configuration JSON file")->required();
  }

  void add_mutate() {
    auto* g = group("mutate", "Brauer cluster mutations");
    auto* run_cmd = leaf(g, "run", "Clusters and the configuration of their messages", [this] {
      const auto seed = load_seed(seed_path_, rcon_);
      const auto clusters = mutation::run(seed, rounds_);
      std::ostringstream text;
      json list = json::array();
      for (const auto& c : clusters) {
        const auto hex = mutation::cluster_hex(c);
        text << "M" << c.index << ' ' << hex << '\n';
        list.push_back(json{{"index", c.index}, {"hex", hex}});
      }
      const auto summary = summarize(mutation::cluster_configuration(seed, rounds_), false, policy());
      text << summary_text(summary);
      return Output{text.str(), json{{"clusters", list}, {"summary", io::to_json(summary)}}};
    });
    run_cmd->add_option("--seed", seed_path_, "Seed file: hex key bytes or a JSON seed")->required();
    run_cmd->add_option("--rounds", rounds_, "Number of mutations m0")->required();
    run_cmd->add_option("--rcon", rcon_, "Round constants for hex seeds: standard|listed")->capture_default_str();

    auto* period = leaf(g, "period", "Orbit preperiod and period", [this] {
      const auto seed = load_seed(seed_path_, rcon_);
      const auto report = mutation::detect_period(seed, max_steps_);
      std::ostringstream text;
      text << "determined " << (report.determined ? "yes" : "no") << '\n';
      if (report.determined) text << "preperiod " << report.preperiod << "\nperiod " << report.period << '\n';
      text << "states " << report.states_visited << '\n';
      if (!report.reason.empty()) text << "reason " << report.reason << '\n';
      return Output{text.str(), io::to_json(report)};
    });
    period->add_option("--seed", seed_path_, "Seed file: hex key bytes or a JSON seed")->required();
    period->add_option("--max", max_steps_, "Maximum number of mutations")->required();
    period->add_option("--rcon", rcon_, "Round constants for hex seeds: standard|listed")->capture_default_str();
  }

  void add_aes() {
    auto* g = group("aes", "AES-128 key schedule");
    auto* schedule = leaf(g, "schedule", "The 44 words w_0..w_43", [this] {
      std::string compact;
      for (char c : key_) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
      }
      if (compact.size() != 32) throw std::invalid_argument("key must be 32 hex characters");
      std::string spaced;
      for (std::size_t i = 0; i < 32; i += 2) spaced += compact.substr(i, 2) + ' ';
      const auto words = mutation::aes_key_schedule(mutation::parse_hex_bytes(spaced), rcon_variant(rcon_));
      std::ostringstream text;
      json list = json::array();
      for (auto w : words) {
        text << hex32(w) << '\n';
        list.push_back(hex32(w));
      }
      return Output{text.str(), json{{"words", list}}};
    });
    schedule->add_option("--key", key_, "Key as 32 hex characters")->required();
    schedule->add_option("--rcon", rcon_, "Round constants: standard|listed")->capture_default_str();
  }

  void add_dioph() {
    auto* g = group("dioph", "Numerical semigroups and linear diophantine systems");
    auto* frob = leaf(g, "frobenius", "Frobenius number", [this] {
      const auto f = dioph::frobenius(gens_);
      return Output{dioph::to_string(f) + "\n", io::to_json(f)};
    });
    frob->add_option("generators", gens_, "Generators")->required();

    auto* gaps = leaf(g, "gaps", "Non-representable positive integers", [this] {
      const auto v = dioph::gaps(gens_);
      return Output{join(v, " ") + "\n", json(v)};
    });
    gaps->add_option("generators", gens_, "Generators")->required();

    auto* irr = leaf(g, "irreducibles", "Minimal generating set", [this] {
      const auto v = dioph::irreducibles(gens_);
      return Output{join(v, " ") + "\n", json(v)};
    });
    irr->add_option("generators", gens_, "Generators")->required();

    auto* den = leaf(g, "denumerant", "Number of representations of a target", [this] {
      const auto d = dioph::denumerant(coins_, target_);
      return Output{to_string(d) + "\n", io::to_json(d)};
    });
    den->add_option("--coins", coins_, "Coin values, comma-separated")->delimiter(',')->required();
    den->add_option("--target", target_, "Target b")->required();

    auto* solve = leaf(g, "solve", "Solutions of D(n1, n2, K)", [this] {
      dioph::DioProblem p{n1_, n2_, k_, bound_};
      if (count_) {
        const auto r = dioph::solve(p, dioph::SolveMode::count);
        return Output{to_string(r.count) + "\n", json{{"problem", io::to_json(p)}, {"count", io::to_json(r.count)}}};
      }
      const auto r = dioph::solve(p, first_ ? dioph::SolveMode::first : dioph::SolveMode::all);
      std::ostringstream text;
      json list = json::array();
      for (const auto& s : r.solutions) {
        text << dioph::to_string(s) << '\n';
        list.push_back(io::to_json(s));
      }
      return Output{text.str(), json{{"problem", io::to_json(p)}, {"solutions", list}}};
    });
    solve->add_option("--n1", n1_, "Sum of the lambdas")->required();
    solve->add_option("--n2", n2_, "Weighted sum")->required();
    solve->add_option("--k", k_, "Coefficients, comma-separated")->delimiter(',')->required();
    solve->add_option("--bound", bound_, "Lower bound for every lambda")->check(CLI::Range(0u, 1u))->capture_default_str();
    solve->add_flag("--count", count_, "Only count the solutions");
    solve->add_flag("--first", first_, "Stop at the first solution");

    auto* msg = leaf(g, "from-message", "Valency profile and D(...) of a hex message", [this] {
      const auto eq = dioph::message_to_diophantine(dioph::hex_to_bits(hex_));
      std::ostringstream text;
      text << "profile " << dioph::to_string(eq.profile) << "\nequation " << dioph::to_string(eq.problem)
           << "\nsolution " << dioph::to_string(eq.solution) << "\nformula_n2 " << eq.formula_n2 << '\n';
      return Output{text.str(), io::to_json(eq)};
    });
    msg->add_option("message", hex_, "Message as hex digits")->required();
  }

  void add_gt() {
    auto* g = group("gt", "Gelfand-Tsetlin patterns, hearts and gt(n) equations");
    auto* count = leaf(g, "count", "Number of patterns with a given top row", [this] {
      gt::GTWeightSpec spec{parse_int_list(top_), std::nullopt};
      if (!content_.empty()) spec.content = parse_int_list(content_);
      const auto c = gt::count_patterns(spec);
      std::string text = to_string(c) + "\n";
      json data{{"count", io::to_json(c)}};
      if (list_) {
        text.clear();
        json patterns = json::array();
        for (const auto& p : gt::list_patterns(spec)) {
          text += pattern_block(p) + "\n";
          patterns.push_back(io::to_json(p));
        }
        text += "count " + to_string(c) + "\n";
        data["patterns"] = patterns;
      }
      return Output{text, data};
    });
    count->add_option("--top", top_, "Top row, comma-separated")->delimiter(',')->required();
    count->add_option("--content", content_, "Row-sum differences, comma-separated")->delimiter(',');
    count->add_flag("--list", list_, "List the patterns");

    auto* formula = leaf(g, "formula", "(r+1)^C(n,2)", [this] {
      const auto c = gt::gt_count_formula(n_, r_);
      return Output{to_string(c) + "\n", io::to_json(c)};
    });
    formula->add_option("--n", n_, "Top row length")->required();
    formula->add_option("--r", r_, "Spacing")->required();

    auto* mono = leaf(g, "monotone", "Monotone triangle counts", [this] {
      const auto m = gt::monotone_summary(n_, refined_);
      std::ostringstream text;
      text << "total " << m.brute_total << "\nformula " << m.formula_total << '\n';
      json data{{"n", n_}, {"total", io::to_json(m.brute_total)}, {"formula", io::to_json(m.formula_total)}};
      if (refined_) {
        json rb = json::array();
        json rf = json::array();
        std::vector<std::string> b;
        std::vector<std::string> f;
        for (const auto& x : m.refined_brute) {
          b.push_back(to_string(x));
          rb.push_back(io::to_json(x));
        }
        for (const auto& x : m.refined_formula) {
          f.push_back(to_string(x));
          rf.push_back(io::to_json(x));
        }
        text << "refined " << join(b, " ") << "\nrefined_formula " << join(f, " ") << '\n';
        data["refined"] = rb;
        data["refined_formula"] = rf;
      }
      return Output{text.str(), data};
    });
    mono->add_option("--n", n_, "Top row length")->required();
    mono->add_flag("--refined", refined_, "Counts by apex value");

    auto* hearts = leaf(g, "hearts", "Heart poset for n = 4", [this] {
      const auto poset = gt::heart_poset(r_);
      std::ostringstream text;
      text << "elements " << poset.elements.size() << '\n';
      json data{{"r", r_}, {"elements", poset.elements.size()}};
      if (covers_) {
        text << "covers " << gt::cover_count(poset) << "\nformula " << gt::cover_count_formula(r_) << '\n';
        data["covers"] = gt::cover_count(poset);
        data["formula"] = gt::cover_count_formula(r_);
      }
      return Output{text.str(), data};
    });
    hearts->add_option("--r", r_, "Spacing")->required();
    hearts->add_flag("--covers", covers_, "Count cover relations");

    auto* equation = leaf(g, "equation", "Coefficients of gt(n)", [this] {
      const auto k = gt::gt_equation(n_);
      std::string text = join(k, " ");
      json data{{"n", n_}, {"coefficients", k}};
      if (frobenius_) {
        const auto f = gt::gt_frobenius(n_);
        text += " / " + dioph::to_string(f);
        data["frobenius"] = io::to_json(f);
      }
      return Output{text + "\n", data};
    });
    equation->add_option("--n", n_, "n >= 3")->required();
    equation->add_flag("--frobenius", frobenius_, "Append the Frobenius number");

    auto* table = leaf(g, "table", "Frobenius numbers of gt(n) against the reference table", [this] {
      std::ostringstream text;
      json rows = json::array();
      if (csv_) text << "n,coefficients,computed,reference,match\n";
      for (const auto& row : gt::gt_frobenius_table(from_, to_)) {
        const std::string ref = row.reference ? dioph::to_string(*row.reference) : "-";
        const std::string computed = dioph::to_string(row.computed);
        if (csv_) {
          text << row.n << ',' << join(row.coefficients, " ") << ',' << computed << ',' << ref << ','
               << (row.matches() ? "yes" : "no") << '\n';
        } else {
          text << "gt(" << row.n << ")" << std::setw(row.n < 10 ? 4 : 3) << ' ' << std::left << std::setw(10)
               << computed << std::setw(10) << ref << std::right << (row.matches() ? "match" : "differs") << '\n';
        }
        rows.push_back(json{{"n", row.n},
                            {"coefficients", row.coefficients},
                            {"computed", io::to_json(row.computed)},
                            {"reference", row.reference ? io::to_json(*row.reference) : json(nullptr)},
                            {"match", row.matches()}});
      }
      return Output{text.str(), rows};
    });
    table->add_option("--from", from_, "First n")->capture_default_str();
    table->add_option("--to", to_, "Last n")->capture_default_str();
    table->add_flag("--csv", csv_, "Comma-separated output");

    auto* config = leaf(g, "config", "The configuration whose polygons are the S_gt classes", [this] {
      const auto cfg = gt::build_gt_configuration(r_);
      if (dot_) return Output{quiver_dot(cfg, build_quiver(cfg)), io::to_json(cfg)};
      return Output{io::to_json(cfg).dump(2) + "\n", io::to_json(cfg)};
    });
    config->add_option("--r", r_, "Spacing")->required();
    config->add_flag("--dot", dot_, "Print the quiver as Graphviz");
  }

  void add_nfa() {
    auto* g = group("nfa", "Automata of Brauer configuration algebras");
    auto* build = leaf(g, "build", "States, letters and transitions", [this] {
      const auto config = io::load_configuration(config_path_);
      const auto automaton = nfa::build_nfa(config, policy());
      if (dot_) return Output{nfa::export_dot(automaton), io::to_json(automaton)};
      std::ostringstream text;
      text << nfa::transition_table(automaton);
      auto names = [&](const std::set<std::size_t>& s) {
        std::vector<std::string> out;
        for (auto i : s) out.push_back(automaton.states[i]);
        return join(out, " ");
      };
      text << "initial " << names(automaton.initial) << "\naccepting " << names(automaton.accepting) << '\n';
      return Output{text.str(), io::to_json(automaton)};
    });
    build->add_option("config", config_path_, "Configuration JSON file")->required();
    build->add_flag("--dot", dot_, "Print Graphviz");

    auto* accept = leaf(g, "accept", "Decide whether a word is accepted", [this] {
      const auto config = io::load_configuration(config_path_);
      const auto quiver = build_quiver(config, policy());
      const auto automaton = nfa::build_nfa(config, quiver);
      const bool ok = nfa::accepts(automaton, ideal_generators(config, quiver), word_);
      return Output{ok ? "accepted\n" : "rejected\n", json{{"word", word_}, {"accepted", ok}}};
    });
    accept->add_option("config", config_path_, "Configuration JSON file")->required();
    accept->add_option("--word", word_, "Comma-separated letters, e.g. l1_3,a0_1")->required();
  }

  CLI::App& app_;
  std::vector<Leaf> leaves_;
  bool json_ = false;
  bool skip_truncated_ = false;

  std::string config_path_;
  std::string dot_path_;
  std::string seed_path_;
  std::string rcon_ = "standard";
  std::size_t rounds_ = 0;
  std::size_t max_steps_ = 0;
  std::string key_;
  std::vector<std::uint64_t> gens_;
  std::vector<std::uint64_t> coins_;
  std::uint64_t target_ = 0;
  std::uint64_t n1_ = 0;
  std::uint64_t n2_ = 0;
  std::vector<std::uint64_t> k_;
  unsigned bound_ = 0;
  bool count_ = false;
  bool first_ = false;
  std::string hex_;
  std::vector<std::string> top_;
  std::vector<std::string> content_;
  bool list_ = false;
  unsigned n_ = 0;
  unsigned r_ = 0;
  bool refined_ = false;
  bool covers_ = false;
  bool frobenius_ = false;
  unsigned from_ = 4;
  unsigned to_ = 12;
  bool csv_ = false;
  bool dot_ = false;
  std::string word_;
};

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Brauer configuration algebras, mutations and related enumerations", "brauerlab"};
  Commands commands(app);
  CommandResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.out = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.err = std::string("error: ") + e.what() + "\n" + app.help();
    return result;
  }
  try {
    result.out = commands.execute();
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
  } catch (const std::invalid_argument& e) {
    result.exit_code = 1;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::out_of_range& e) {
    result.exit_code = 1;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::runtime_error& e) {
    result.exit_code = 1;
    result.err = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace brauerlab::cli
