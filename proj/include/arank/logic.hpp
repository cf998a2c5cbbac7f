#ifndef ARANK_LOGIC_HPP
#define ARANK_LOGIC_HPP

// Propositional logic over a small explicit vocabulary: formula ASTs, a
// recursive-descent parser, valuation enumeration, and canonical defining
// formulas for model sets. Valuations are bitmasks, one bit per variable in
// vocabulary order.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace arank {

using Valuation = std::uint32_t;

// Sorted list of valuation bitmasks.
using ModelSet = std::vector<Valuation>;

struct Vocabulary {
  std::vector<std::string> names;

  std::size_t size() const { return names.size(); }

  // Pre: names unique, non-empty, at most 16.
  void validate() const {
    if (names.size() > 16) throw std::invalid_argument("vocabulary larger than 16 variables");
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i].empty()) throw std::invalid_argument("empty variable name");
      for (std::size_t j = i + 1; j < names.size(); ++j)
        if (names[i] == names[j]) throw std::invalid_argument("duplicate variable: " + names[i]);
    }
  }

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    return -1;
  }

  std::uint32_t valuation_count() const { return std::uint32_t{1} << names.size(); }

  ModelSet full_space() const {
    ModelSet all(valuation_count());
    for (std::uint32_t v = 0; v < all.size(); ++v) all[v] = v;
    return all;
  }
};

enum class FormulaKind { Var, Top, Bot, Not, And, Or, Imp, Iff };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FormulaKind kind;
  int var = -1;
  FormulaPtr left;
  FormulaPtr right;
};

inline FormulaPtr make_var(int index) {
  return std::make_shared<Formula>(Formula{FormulaKind::Var, index, nullptr, nullptr});
}
inline FormulaPtr make_const(bool value) {
  return std::make_shared<Formula>(
      Formula{value ? FormulaKind::Top : FormulaKind::Bot, -1, nullptr, nullptr});
}
inline FormulaPtr make_not(FormulaPtr f) {
  return std::make_shared<Formula>(Formula{FormulaKind::Not, -1, std::move(f), nullptr});
}
inline FormulaPtr make_bin(FormulaKind k, FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(Formula{k, -1, std::move(l), std::move(r)});
}

inline bool same_formula(const FormulaPtr& a, const FormulaPtr& b) {
  if (a->kind != b->kind || a->var != b->var) return false;
  if (a->left && !same_formula(a->left, b->left)) return false;
  if (a->right && !same_formula(a->right, b->right)) return false;
  return true;
}

struct ParseError : std::runtime_error {
  int offset;
  ParseError(int at, const std::string& what)
      : std::runtime_error("syntax error at offset " + std::to_string(at) + ": " + what),
        offset(at) {}
};

namespace detail {

// Grammar, loosest to tightest: iff := imp ("<->" imp)*, right associative;
// imp := or ("->" or)*, right associative; or := and ("|" and)*; and :=
// unary ("&" unary)*; unary := "~" unary | atom. T and F are reserved words.
class FormulaParser {
 public:
  FormulaParser(const std::string& text, const Vocabulary& vocab)
      : text_(text), vocab_(vocab) {}

  FormulaPtr parse() {
    FormulaPtr f = parse_iff();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(static_cast<int>(pos_), "trailing input");
    return f;
  }

 private:
  const std::string& text_;
  const Vocabulary& vocab_;
  std::size_t pos_ = 0;

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool eat(const std::string& token) {
    skip_space();
    if (text_.compare(pos_, token.size(), token) != 0) return false;
    pos_ += token.size();
    return true;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  FormulaPtr parse_iff() {
    FormulaPtr l = parse_imp();
    if (eat("<->")) return make_bin(FormulaKind::Iff, std::move(l), parse_iff());
    return l;
  }

  FormulaPtr parse_imp() {
    FormulaPtr l = parse_or();
    skip_space();
    // "->" must not shadow the first dash of "<->"; nothing else starts with '-'.
    if (eat("->")) return make_bin(FormulaKind::Imp, std::move(l), parse_imp());
    return l;
  }

  FormulaPtr parse_or() {
    FormulaPtr l = parse_and();
    while (peek('|')) {
      ++pos_;
      l = make_bin(FormulaKind::Or, std::move(l), parse_and());
    }
    return l;
  }

  FormulaPtr parse_and() {
    FormulaPtr l = parse_unary();
    while (peek('&')) {
      ++pos_;
      l = make_bin(FormulaKind::And, std::move(l), parse_unary());
    }
    return l;
  }

  FormulaPtr parse_unary() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '~') {
      ++pos_;
      return make_not(parse_unary());
    }
    return parse_atom();
  }

  FormulaPtr parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError(static_cast<int>(pos_), "expected a formula");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      FormulaPtr f = parse_iff();
      if (!peek(')')) throw ParseError(static_cast<int>(pos_), "expected ')'");
      ++pos_;
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      if (name == "T") return make_const(true);
      if (name == "F") return make_const(false);
      int index = vocab_.index_of(name);
      if (index < 0)
        throw ParseError(static_cast<int>(start), "unknown variable '" + name + "'");
      return make_var(index);
    }
    throw ParseError(static_cast<int>(pos_), std::string("unexpected '") + c + "'");
  }
};

inline int precedence(FormulaKind k) {
  switch (k) {
    case FormulaKind::Iff: return 0;
    case FormulaKind::Imp: return 1;
    case FormulaKind::Or: return 2;
    case FormulaKind::And: return 3;
    default: return 4;
  }
}

inline void print_into(const FormulaPtr& f, const Vocabulary& vocab, int min_prec,
                       std::string& out) {
  int prec = precedence(f->kind);
  bool parens = prec < min_prec;
  if (parens) out += "(";
  switch (f->kind) {
    case FormulaKind::Var:
      out += vocab.names[static_cast<std::size_t>(f->var)];
      break;
    case FormulaKind::Top: out += "T"; break;
    case FormulaKind::Bot: out += "F"; break;
    case FormulaKind::Not:
      out += "~";
      print_into(f->left, vocab, 4, out);
      break;
    case FormulaKind::And:
      print_into(f->left, vocab, 3, out);
      out += " & ";
      print_into(f->right, vocab, 4, out);
      break;
    case FormulaKind::Or:
      print_into(f->left, vocab, 2, out);
      out += " | ";
      print_into(f->right, vocab, 3, out);
      break;
    case FormulaKind::Imp:
      print_into(f->left, vocab, 2, out);
      out += " -> ";
      print_into(f->right, vocab, 1, out);
      break;
    case FormulaKind::Iff:
      print_into(f->left, vocab, 1, out);
      out += " <-> ";
      print_into(f->right, vocab, 0, out);
      break;
  }
  if (parens) out += ")";
}

}  // namespace detail

inline FormulaPtr parse_formula(const std::string& text, const Vocabulary& vocab) {
  return detail::FormulaParser(text, vocab).parse();
}

inline std::string print_formula(const FormulaPtr& f, const Vocabulary& vocab) {
  std::string out;
  detail::print_into(f, vocab, 0, out);
  return out;
}

inline bool eval_formula(const FormulaPtr& f, Valuation v) {
  switch (f->kind) {
    case FormulaKind::Var: return (v >> f->var) & 1u;
    case FormulaKind::Top: return true;
    case FormulaKind::Bot: return false;
    case FormulaKind::Not: return !eval_formula(f->left, v);
    case FormulaKind::And: return eval_formula(f->left, v) && eval_formula(f->right, v);
    case FormulaKind::Or: return eval_formula(f->left, v) || eval_formula(f->right, v);
    case FormulaKind::Imp: return !eval_formula(f->left, v) || eval_formula(f->right, v);
    case FormulaKind::Iff: return eval_formula(f->left, v) == eval_formula(f->right, v);
  }
  return false;
}

using Theory = std::vector<FormulaPtr>;

inline ModelSet models_of(const Theory& t, const Vocabulary& vocab) {
  ModelSet out;
  for (std::uint32_t v = 0; v < vocab.valuation_count(); ++v) {
    bool all = true;
    for (const FormulaPtr& f : t)
      if (!eval_formula(f, v)) {
        all = false;
        break;
      }
    if (all) out.push_back(v);
  }
  return out;
}

inline ModelSet models_of_formula(const FormulaPtr& f, const Vocabulary& vocab) {
  return models_of(Theory{f}, vocab);
}

// Minterm for one valuation: conjunction of literals in vocabulary order.
inline FormulaPtr minterm(Valuation v, const Vocabulary& vocab) {
  if (vocab.size() == 0) return make_const(true);
  FormulaPtr f;
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    FormulaPtr lit = make_var(static_cast<int>(i));
    if (!((v >> i) & 1u)) lit = make_not(lit);
    f = f ? make_bin(FormulaKind::And, std::move(f), std::move(lit)) : lit;
  }
  return f;
}

// Canonical disjunctive normal form: minterms in increasing valuation order.
inline FormulaPtr defining_formula(const ModelSet& x, const Vocabulary& vocab) {
  if (x.empty()) return make_const(false);
  FormulaPtr f;
  for (Valuation v : x) {
    FormulaPtr m = minterm(v, vocab);
    f = f ? make_bin(FormulaKind::Or, std::move(f), std::move(m)) : m;
  }
  return f;
}

inline Theory theory_of(const ModelSet& x, const Vocabulary& vocab) {
  return Theory{defining_formula(x, vocab)};
}

inline bool subset_models(const ModelSet& a, const ModelSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool classically_entails(const Theory& t, const FormulaPtr& f, const Vocabulary& vocab) {
  return subset_models(models_of(t, vocab), models_of_formula(f, vocab));
}

}  // namespace arank

#endif  // ARANK_LOGIC_HPP
