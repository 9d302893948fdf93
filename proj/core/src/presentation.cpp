#include "ssg/presentation.hpp"

#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "ssg/errors.hpp"

namespace ssg {
namespace {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

bool is_punct(char c) { return c == ':' || c == ',' || c == '.'; }

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

// Names may contain anything except whitespace, the punctuation ": , .",
// '#', and the arrow "->".
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (is_space(c)) {
      ++i;
      continue;
    }
    if (is_punct(c)) {
      out.push_back({std::string(1, c), i + 1});
      ++i;
      continue;
    }
    if (line.substr(i, 2) == "->") {
      out.push_back({"->", i + 1});
      i += 2;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i]) && !is_punct(line[i]) &&
           line[i] != '#' && line.substr(i, 2) != "->")
      ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

bool is_name(const Token& t) {
  return !t.text.empty() && t.text != "->" && !(t.text.size() == 1 && is_punct(t.text[0]));
}

struct RawClause {
  Token from, to, target;
};

struct RawState {
  Token name;
  std::size_t line = 0;
  std::vector<RawClause> clauses;
};

class Parser {
 public:
  Presentation run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t end = text.find('\n', pos);
      const std::string_view line =
          text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
      ++line_no;
      parse_line(line_no, tokenize(line));
      if (end == std::string_view::npos) break;
      pos = end + 1;
    }
    return finish(line_no);
  }

 private:
  [[noreturn]] static void fail(std::size_t line, std::size_t col, const std::string& msg) {
    throw SyntaxError(line, col, msg);
  }

  void parse_line(std::size_t line, const std::vector<Token>& toks) {
    if (toks.empty()) return;
    const std::string& kw = toks[0].text;
    if (kw == "alphabet") {
      if (alphabet_) fail(line, toks[0].column, "alphabet declared twice");
      if (!states_.empty()) fail(line, toks[0].column, "alphabet must precede states");
      std::vector<std::string> letters;
      std::set<std::string> seen;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (!is_name(toks[i])) fail(line, toks[i].column, "expected letter token");
        if (!seen.insert(toks[i].text).second)
          fail(line, toks[i].column, "duplicate letter '" + toks[i].text + "'");
        letters.push_back(toks[i].text);
      }
      if (letters.size() < 2)
        fail(line, toks[0].column, "alphabet needs at least two letters");
      alphabet_ = std::move(letters);
    } else if (kw == "identity") {
      if (identity_) fail(line, toks[0].column, "identity declared twice");
      if (toks.size() != 2 || !is_name(toks[1]))
        fail(line, toks[0].column, "expected 'identity <name>'");
      identity_ = toks[1];
      identity_line_ = line;
    } else if (kw == "generators") {
      if (!generators_.empty()) fail(line, toks[0].column, "generators declared twice");
      if (toks.size() < 2) fail(line, toks[0].column, "expected at least one generator");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (!is_name(toks[i])) fail(line, toks[i].column, "expected state name");
        generators_.push_back({toks[i], line});
      }
    } else if (kw == "state") {
      if (!alphabet_) fail(line, toks[0].column, "state declared before alphabet");
      parse_state(line, toks);
    } else {
      fail(line, toks[0].column, "unknown keyword '" + kw + "'");
    }
  }

  void parse_state(std::size_t line, const std::vector<Token>& toks) {
    std::size_t i = 1;
    auto expect = [&](const char* what) -> const Token& {
      if (i >= toks.size()) {
        const std::size_t col = toks.back().column + toks.back().text.size();
        fail(line, col, std::string("expected ") + what + " at end of line");
      }
      return toks[i++];
    };
    auto expect_punct = [&](const char* p) {
      const Token& t = expect(p);
      if (t.text != p) fail(line, t.column, std::string("expected '") + p + "'");
    };
    auto expect_name = [&](const char* what) -> Token {
      const Token& t = expect(what);
      if (!is_name(t)) fail(line, t.column, std::string("expected ") + what);
      return t;
    };

    RawState st;
    st.line = line;
    st.name = expect_name("state name");
    expect_punct(":");
    while (true) {
      RawClause c;
      c.from = expect_name("input letter");
      expect_punct("->");
      c.to = expect_name("output letter");
      expect_punct(".");
      c.target = expect_name("restriction target");
      st.clauses.push_back(std::move(c));
      if (i == toks.size()) break;
      expect_punct(",");
    }
    states_.push_back(std::move(st));
  }

  Presentation finish(std::size_t last_line) {
    if (!alphabet_) fail(last_line, 1, "missing alphabet declaration");
    if (states_.empty()) fail(last_line, 1, "no states declared");
    const auto& alphabet = *alphabet_;
    std::map<std::string, std::uint32_t> letter_ids;
    for (std::uint32_t x = 0; x < alphabet.size(); ++x) letter_ids[alphabet[x]] = x;

    std::map<std::string, std::uint32_t> state_ids;
    for (const auto& s : states_) {
      if (!state_ids.try_emplace(s.name.text, static_cast<std::uint32_t>(state_ids.size())).second)
        fail(s.line, s.name.column, "state '" + s.name.text + "' declared twice");
    }

    auto letter = [&](std::size_t line, const Token& t) {
      auto it = letter_ids.find(t.text);
      if (it == letter_ids.end()) fail(line, t.column, "unknown letter '" + t.text + "'");
      return Letter{it->second};
    };

    std::vector<StateSpec> specs;
    for (const auto& s : states_) {
      StateSpec spec;
      spec.name = s.name.text;
      spec.output.assign(alphabet.size(), Letter{});
      spec.restriction.assign(alphabet.size(), StateId{});
      std::vector<bool> seen(alphabet.size(), false);
      for (const auto& c : s.clauses) {
        const Letter from = letter(s.line, c.from);
        if (seen[from.value])
          fail(s.line, c.from.column, "second clause for letter '" + c.from.text + "'");
        seen[from.value] = true;
        spec.output[from.value] = letter(s.line, c.to);
        auto target = state_ids.find(c.target.text);
        if (target == state_ids.end())
          throw DanglingRestriction("line " + std::to_string(s.line) + ": state '" +
                                    s.name.text + "' restricts to unknown state '" +
                                    c.target.text + "'");
        spec.restriction[from.value] = StateId{target->second};
      }
      for (std::uint32_t x = 0; x < alphabet.size(); ++x)
        if (!seen[x])
          fail(s.line, s.name.column,
               "state '" + s.name.text + "' has no clause for letter '" + alphabet[x] + "'");
      specs.push_back(std::move(spec));
    }

    std::optional<StateId> identity;
    if (identity_) {
      auto it = state_ids.find(identity_->text);
      if (it == state_ids.end())
        throw NoIdentity("line " + std::to_string(identity_line_) +
                         ": identity '" + identity_->text + "' is not a declared state");
      identity = StateId{it->second};
    }

    std::vector<StateId> generators;
    for (const auto& [tok, line] : generators_) {
      auto it = state_ids.find(tok.text);
      if (it == state_ids.end())
        fail(line, tok.column, "unknown generator '" + tok.text + "'");
      generators.push_back(StateId{it->second});
    }

    return Presentation{NucleusAutomaton::create(alphabet, std::move(specs), identity),
                        identity_.has_value(), std::move(generators)};
  }

  std::optional<std::vector<std::string>> alphabet_;
  std::optional<Token> identity_;
  std::size_t identity_line_ = 0;
  std::vector<std::pair<Token, std::size_t>> generators_;
  std::vector<RawState> states_;
};

}  // namespace

Presentation parse_presentation(std::string_view text) { return Parser{}.run(text); }

std::string serialize(const NucleusAutomaton& a, const std::vector<StateId>& generators) {
  std::ostringstream out;
  out << "alphabet";
  for (const auto& t : a.alphabet()) out << ' ' << t;
  out << "\nidentity " << a.name(a.identity()) << '\n';
  for (StateId g : a.all_states()) {
    out << "state " << a.name(g) << " :";
    for (std::uint32_t x = 0; x < a.alphabet_size(); ++x) {
      const Letter in{x};
      out << (x == 0 ? " " : " , ") << a.letter_name(in) << " -> "
          << a.letter_name(a.output(g, in)) << " . " << a.name(a.restriction(g, in));
    }
    out << '\n';
  }
  if (!generators.empty()) {
    out << "generators";
    for (StateId g : generators) out << ' ' << a.name(g);
    out << '\n';
  }
  return out.str();
}

std::string serialize(const Presentation& p) { return serialize(p.automaton, p.generators); }

}  // namespace ssg
