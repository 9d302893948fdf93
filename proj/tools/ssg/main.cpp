#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ssg/closure.hpp"
#include "ssg/cross_check.hpp"
#include "ssg/dot.hpp"
#include "ssg/errors.hpp"
#include "ssg/presentation.hpp"
#include "ssg/structure.hpp"
#include "ssg/verdict.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kValidation = 2,
  kCrossCheck = 3,
  kCapacity = 4,
  kIo = 5,
  kNotContracted = 6,
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input;
  std::string output_prefix;
  std::uint64_t capacity = ssg::SubsetDigraph::kDefaultCapacity;
  std::size_t depth = ssg::ClosureOptions{}.depth_bound;
  bool cross_check = false;
  std::string format;
  std::vector<std::uint64_t> primes;
  std::uint32_t subset_vertices = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

class Style {
 public:
  Style() {
    const char* env = std::getenv("SSG_COLOR");
    if (env) enabled_ = std::string(env) != "0";
    else enabled_ = isatty(STDOUT_FILENO) != 0;
  }
  std::string bold(const std::string& s) const { return wrap("1", s); }
  std::string good(const std::string& s) const { return wrap("32", s); }
  std::string bad(const std::string& s) const { return wrap("31", s); }

 private:
  std::string wrap(const char* code, const std::string& s) const {
    return enabled_ ? "\033[" + std::string(code) + "m" + s + "\033[0m" : s;
  }
  bool enabled_ = false;
};

/// The analysed automaton: the file itself, or its nucleus when it lists
/// generators.
ssg::NucleusAutomaton load_nucleus(const RunConfig& cfg) {
  ssg::Presentation p = ssg::parse_presentation(read_file(cfg.input));
  if (!p.requests_closure()) return std::move(p.automaton);
  ssg::ClosureOptions opts;
  opts.depth_bound = cfg.depth;
  return ssg::nucleus_closure(p, opts);
}

std::string alphabet_text(const ssg::NucleusAutomaton& a) {
  std::string out = "{";
  for (std::uint32_t x = 0; x < a.alphabet_size(); ++x) {
    if (x) out += ",";
    out += a.letter_name(ssg::Letter{x});
  }
  return out + "}";
}

int cmd_validate(const RunConfig& cfg) {
  const ssg::Presentation p = ssg::parse_presentation(read_file(cfg.input));
  const auto& a = p.automaton;
  std::cout << a.state_count() << (a.state_count() == 1 ? " state" : " states") << ", alphabet "
            << alphabet_text(a) << ", identity " << a.name(a.identity()) << "\n";
  if (p.requests_closure()) {
    std::cout << "generators";
    for (ssg::StateId g : p.generators) std::cout << " " << a.name(g);
    std::cout << "\n";
  }
  return kOk;
}

std::string element_text(const ssg::NucleusAutomaton& a, const ssg::GroupTable& g,
                         const ssg::WitnessElement& w) {
  std::string out;
  for (std::size_t i = 0; i < w.coefficients.size(); ++i) {
    const ssg::BigInt& c = w.coefficients[i];
    if (sgn(c) == 0) continue;
    const std::string name = a.name(g.elements[i]);
    std::string term = abs(c) == 1 ? name : ssg::BigInt(abs(c)).get_str() + name;
    if (out.empty()) out = sgn(c) < 0 ? "-" + term : term;
    else out += (sgn(c) < 0 ? " - " : " + ") + term;
  }
  return out;
}

void print_text(const ssg::NucleusAutomaton& a, const ssg::SimplicityVerdict& v) {
  const Style st;
  auto yes_no = [&](bool b) { return b ? st.good("yes") : st.bad("no"); };
  std::cout << st.bold("hausdorff:") << "      " << yes_no(v.hausdorff) << "\n";
  if (!v.hausdorff) {
    const auto& r = v.hausdorff_report;
    std::cout << "  " << a.name(*r.witness_state) << " strongly fixes "
              << a.format_word(r.witness_word) << "\n";
  }
  std::cout << st.bold("complex simple:") << " " << yes_no(v.complex_simple) << "\n";
  std::cout << st.bold("C* simple:") << "      " << yes_no(v.cstar_simple) << "\n";
  std::cout << st.bold("not simple in characteristic:") << " ";
  if (v.nonsimple.all) {
    std::cout << "all\n";
  } else if (v.nonsimple.primes.empty()) {
    std::cout << "none\n";
  } else {
    for (std::size_t i = 0; i < v.nonsimple.primes.size(); ++i)
      std::cout << (i ? ", " : "") << v.nonsimple.primes[i];
    std::cout << "\n";
  }
  for (std::size_t i = 0; i < v.maximal_subgroups.size(); ++i) {
    const auto& h = v.maximal_subgroups[i];
    std::cout << st.bold("H_" + a.format_word(h.word)) << " = {";
    for (std::size_t j = 0; j < h.elements.size(); ++j) std::cout << (j ? "," : "") << a.name(h.elements[j]);
    std::cout << "}\n";
    for (const auto& w : v.witnesses)
      if (w.subgroup_index == i)
        std::cout << "  witness in characteristic " << w.characteristic << ": "
                  << element_text(a, h.group, w.element) << "\n";
  }
}

int cmd_simplicity(const RunConfig& cfg) {
  const ssg::NucleusAutomaton a = load_nucleus(cfg);
  ssg::AnalysisOptions opts;
  opts.subset_capacity = cfg.capacity;
  const ssg::SimplicityVerdict v = ssg::decide_simplicity(a, opts);

  const std::string fmt = cfg.format.empty() ? "json" : cfg.format;
  if (fmt == "dot") throw CLI::ValidationError("--format", "simplicity supports json or text");
  if (fmt == "json") {
    const std::string json = ssg::to_json(a, v);
    if (cfg.output_prefix.empty()) std::cout << json;
    else write_file(cfg.output_prefix + ".json", json);
  } else {
    print_text(a, v);
  }

  if (cfg.cross_check) {
    const ssg::CrossCheckReport r = ssg::cross_check(a, v, cfg.primes);
    if (!r.agree()) {
      for (const auto& d : r.disagreements)
        std::cerr << "cross-check mismatch in characteristic " << d.characteristic
                  << ": engine says " << (d.engine_simple ? "simple" : "not simple")
                  << ", oracle says " << (d.oracle_simple ? "simple" : "not simple") << "\n";
      return kCrossCheck;
    }
    std::cerr << "cross-check: agreement in " << r.characteristics.size()
              << " characteristics\n";
  }
  return kOk;
}

int cmd_graphs(const RunConfig& cfg) {
  if (!cfg.format.empty() && cfg.format != "dot")
    throw CLI::ValidationError("--format", "graphs supports dot only");
  const ssg::NucleusAutomaton a = load_nucleus(cfg);
  const ssg::StrongFixGraph h = ssg::build_strongfix(a);
  std::vector<std::pair<std::string, std::string>> graphs = {
      {"H", ssg::strongfix_to_dot(a, h)},
      {"delta", ssg::delta_to_dot(a, ssg::build_delta(a))},
  };
  if (cfg.subset_vertices > 0) {
    const auto s = ssg::SubsetDigraph::build(h, cfg.capacity);
    graphs.emplace_back("subsets", ssg::subset_digraph_to_dot(a, s, cfg.subset_vertices));
  }
  for (const auto& [name, dot] : graphs) {
    if (cfg.output_prefix.empty()) std::cout << dot;
    else write_file(cfg.output_prefix + "-" + name + ".dot", dot);
  }
  return kOk;
}

int cmd_nucleus(const RunConfig& cfg) {
  const ssg::Presentation p = ssg::parse_presentation(read_file(cfg.input));
  ssg::ClosureOptions opts;
  opts.depth_bound = cfg.depth;
  const ssg::NucleusAutomaton n =
      p.requests_closure() ? ssg::nucleus_closure(p, opts) : p.automaton;
  const std::string text = ssg::serialize(n);
  if (cfg.output_prefix.empty()) std::cout << text;
  else write_file(cfg.output_prefix + ".ssg", text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplicity of algebras of contracting self-similar groups"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "Presentation file")->required();
    sub->add_option("-o,--output", cfg.output_prefix, "Write to files with this prefix");
    sub->add_option("--depth", cfg.depth, "Round bound for nucleus closure")
        ->check(CLI::PositiveNumber);
  };
  auto add_capacity = [&](CLI::App* sub) {
    sub->add_option("--capacity", cfg.capacity, "Largest subset digraph to build")
        ->check(CLI::Range(std::uint64_t{1} << 10, std::numeric_limits<std::uint64_t>::max()));
  };

  CLI::App* validate = app.add_subcommand("validate", "Check a presentation");
  validate->add_option("input", cfg.input, "Presentation file")->required();

  CLI::App* simplicity = app.add_subcommand("simplicity", "Decide simplicity");
  add_common(simplicity);
  add_capacity(simplicity);
  simplicity->add_flag("--cross-check", cfg.cross_check, "Compare with the partition oracle");
  simplicity->add_option("--format", cfg.format, "json or text")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  simplicity->add_option("--primes", cfg.primes, "Extra primes for --cross-check")->delimiter(',');

  CLI::App* graphs = app.add_subcommand("graphs", "Write H and Delta as DOT");
  add_common(graphs);
  add_capacity(graphs);
  graphs->add_option("--format", cfg.format, "dot")->check(CLI::IsMember({"json", "text", "dot"}));
  graphs->add_option("--subsets", cfg.subset_vertices,
                     "Also emit the subset digraph, truncated to this many vertices");

  CLI::App* nucleus = app.add_subcommand("nucleus", "Compute the nucleus of a generating set");
  add_common(nucleus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kValidation;
  }

  try {
    if (*validate) return cmd_validate(cfg);
    if (*simplicity) return cmd_simplicity(cfg);
    if (*graphs) return cmd_graphs(cfg);
    return cmd_nucleus(cfg);
  } catch (const ssg::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const ssg::NotPrime& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const ssg::CapacityExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapacity;
  } catch (const ssg::NotContractedWithinBound& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotContracted;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
