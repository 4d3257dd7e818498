#include "skillmc/parser.hpp"

#include <cctype>
#include <optional>
#include <utility>

namespace skillmc {

SyntaxError::SyntaxError(const std::string& what, std::size_t position)
    : FormulaError(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

bool is_token_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

// Recursive descent over the raw text; whitespace is allowed between
// tokens but not inside a modal identifier such as `K_a`.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = parse_iff();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool lookahead(std::string_view s) {
    skip_ws();
    return starts_with(text_.substr(pos_), s);
  }

  bool accept(std::string_view s) {
    if (!lookahead(s)) return false;
    pos_ += s.size();
    return true;
  }

  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }

  std::string token() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_token_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  // `_a` directly after a closing bracket of an update or quantifier.
  AgentId agent_suffix() {
    expect("_");
    if (pos_ >= text_.size() || !is_token_char(text_[pos_])) {
      fail("expected an agent name");
    }
    return token();
  }

  std::set<std::string> name_set() {
    std::size_t open = (skip_ws(), pos_);
    expect("{");
    std::set<std::string> out;
    if (accept("}")) throw EmptySetError("empty set in modality", open);
    do {
      out.insert(token());
    } while (accept(","));
    expect("}");
    return out;
  }

  Formula parse_iff() {
    Formula lhs = parse_implies();
    while (accept("<->")) lhs = Iff(lhs, parse_implies());
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (accept("->")) return Formula::Implies(lhs, parse_implies());
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (accept("|")) lhs = Or(lhs, parse_and());
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (accept("&")) lhs = And(lhs, parse_unary());
    return lhs;
  }

  Formula parse_unary() {
    char c = peek();
    if (c == '~') {
      ++pos_;
      return Formula::Not(parse_unary());
    }
    if (c == '[' || c == '<') return parse_quantifier();
    if (c == '(') {
      std::size_t save = pos_;
      ++pos_;
      char next = peek();
      if (next == '+' || next == '-' || next == '=') return parse_update();
      pos_ = save;
    }
    if (c != '\0' && is_token_char(c)) return parse_word();
    return parse_primary();
  }

  // After the opening parenthesis of `(+{..})_a`, `(-{..})_a`,
  // `(={..})_a` or `(==b)_a`.
  Formula parse_update() {
    if (accept("==")) {
      AgentId source = token();
      expect(")");
      AgentId learner = agent_suffix();
      return Formula::CopySkills(learner, source, parse_unary());
    }
    char kind = text_[pos_++];
    SkillSet skills = name_set();
    expect(")");
    AgentId a = agent_suffix();
    Formula body = parse_unary();
    switch (kind) {
      case '+': return Formula::AddSkills(a, skills, body);
      case '-': return Formula::RemoveSkills(a, skills, body);
      default: return Formula::AssignSkills(a, skills, body);
    }
  }

  Formula parse_quantifier() {
    bool dual = peek() == '<';
    ++pos_;
    char kind = peek();
    if (kind != '+' && kind != '-' && kind != '=') {
      fail("expected '+', '-' or '=' in quantifier");
    }
    ++pos_;
    expect("*");
    expect(dual ? ">" : "]");
    AgentId a = agent_suffix();
    Formula body = parse_unary();
    if (!dual) {
      switch (kind) {
        case '+': return Formula::BoxPlus(a, body);
        case '-': return Formula::BoxMinus(a, body);
        default: return Formula::BoxAssign(a, body);
      }
    }
    switch (kind) {
      case '+': return DiamondPlus(a, body);
      case '-': return DiamondMinus(a, body);
      default: return DiamondAssign(a, body);
    }
  }

  // A bare name: a modal prefix (`K_a`, `hatK_a`, `C_{..}` ...), a
  // keyword, or an atom.
  Formula parse_word() {
    std::size_t start = pos_;
    std::string w = token();
    if (starts_with(w, "K_") && w.size() > 2) {
      return Formula::Knows(w.substr(2), parse_unary());
    }
    if (starts_with(w, "hatK_") && w.size() > 5) {
      return HatK(w.substr(5), parse_unary());
    }
    if (w.size() >= 2 && w[1] == '_' &&
        (w[0] == 'C' || w[0] == 'D' || w[0] == 'E' || w[0] == 'F')) {
      if (w.size() != 2 || pos_ >= text_.size() || text_[pos_] != '{') {
        pos_ = start;
        fail("group modality '" + w.substr(0, 2) + "' needs a braced group");
      }
      Group g = name_set();
      Formula body = parse_unary();
      switch (w[0]) {
        case 'C': return Formula::Common(g, body);
        case 'D': return Formula::Distributed(g, body);
        case 'E': return Formula::Mutual(g, body);
        default: return Formula::Field(g, body);
      }
    }
    if (w == "K" || w == "hatK") {
      pos_ = start;
      fail("knowledge operator needs an agent subscript");
    }
    if (w == "true") return True();
    if (w == "false") return False();
    if (w == kReservedAtom) {
      pos_ = start;
      fail("atom '" + w + "' is reserved");
    }
    return Formula::Atom(w);
  }

  Formula parse_primary() {
    if (accept("(")) {
      Formula f = parse_iff();
      expect(")");
      return f;
    }
    if (pos_ >= text_.size()) fail("unexpected end of input");
    fail(std::string("unexpected character '") + text_[pos_] + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_true_pattern(const Formula& f) {
  return f.op() == Op::Implies && f.lhs().op() == Op::Atom &&
         f.lhs().atom() == kReservedAtom && f.rhs().op() == Op::Atom &&
         f.rhs().atom() == kReservedAtom;
}

std::string join(const std::set<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ",";
    out += n;
  }
  return out;
}

void render(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Op::Atom:
      out += f.atom();
      return;
    case Op::Not:
      if (is_true_pattern(f.child())) {
        out += "false";
        return;
      }
      out += "~";
      render(f.child(), out);
      return;
    case Op::Implies:
      if (is_true_pattern(f)) {
        out += "true";
        return;
      }
      out += "(";
      render(f.lhs(), out);
      out += " -> ";
      render(f.rhs(), out);
      out += ")";
      return;
    case Op::Knows:
      out += "K_" + f.agent() + " ";
      break;
    case Op::Common:
      out += "C_{" + join(f.group()) + "} ";
      break;
    case Op::Distributed:
      out += "D_{" + join(f.group()) + "} ";
      break;
    case Op::Mutual:
      out += "E_{" + join(f.group()) + "} ";
      break;
    case Op::Field:
      out += "F_{" + join(f.group()) + "} ";
      break;
    case Op::AddSkills:
      out += "(+{" + join(f.skills()) + "})_" + f.agent() + " ";
      break;
    case Op::RemoveSkills:
      out += "(-{" + join(f.skills()) + "})_" + f.agent() + " ";
      break;
    case Op::AssignSkills:
      out += "(={" + join(f.skills()) + "})_" + f.agent() + " ";
      break;
    case Op::CopySkills:
      out += "(==" + f.source() + ")_" + f.agent() + " ";
      break;
    case Op::BoxPlus:
      out += "[+*]_" + f.agent() + " ";
      break;
    case Op::BoxMinus:
      out += "[-*]_" + f.agent() + " ";
      break;
    case Op::BoxAssign:
      out += "[=*]_" + f.agent() + " ";
      break;
  }
  render(f.child(), out);
}

}  // namespace

Formula parse_formula(std::string_view text) {
  try {
    return Parser(text).parse();
  } catch (const SyntaxError&) {
    throw;
  } catch (const FormulaError& e) {
    throw SyntaxError(e.what(), 0);
  }
}

std::string render_formula(const Formula& f) {
  std::string out;
  render(f, out);
  return out;
}

}  // namespace skillmc
