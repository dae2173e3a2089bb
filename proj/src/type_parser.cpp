// Type-string grammar:
//   type    := segment+ | simple*
//   segment := '<' simple* '>'
//   simple  := ['b('] atom [')'] ('^l' | '^r')*
// Tokens are separated by whitespace or U+00B7 (middle dot); '<' and '>'
// are tokens on their own even when written without surrounding spaces.

#include <cctype>
#include <optional>

#include "pregroup/error.hpp"
#include "pregroup/types.hpp"

namespace pregroup {

namespace {

struct Token {
  std::string_view text;
  std::size_t pos;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_middle_dot(std::string_view s, std::size_t i) {
  return i + 1 < s.size() && static_cast<unsigned char>(s[i]) == 0xC2 &&
         static_cast<unsigned char>(s[i + 1]) == 0xB7;
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (is_space(s[i])) {
      ++i;
    } else if (is_middle_dot(s, i)) {
      i += 2;
    } else if (s[i] == '<' || s[i] == '>') {
      out.push_back({s.substr(i, 1), i});
      ++i;
    } else {
      const std::size_t start = i;
      while (i < s.size() && !is_space(s[i]) && !is_middle_dot(s, i) && s[i] != '<' && s[i] != '>')
        ++i;
      out.push_back({s.substr(start, i - start), start});
    }
  }
  return out;
}

SimpleType parse_simple_token(const Token& tok, const AtomTable* table) {
  std::string_view t = tok.text;
  std::size_t i = 0;
  bool beta = false;
  if (t.starts_with("b(")) {
    beta = true;
    i = 2;
  }
  std::size_t name_end = i;
  while (name_end < t.size() && t[name_end] != '^' && t[name_end] != ')' && t[name_end] != '(')
    ++name_end;
  std::string_view name = t.substr(i, name_end - i);
  if (name.empty()) throw ParseError("empty atom name in '" + std::string(t) + "'", tok.pos + i);
  if (name_end < t.size() && t[name_end] == '(')
    throw ParseError("unexpected '(' in '" + std::string(t) + "'", tok.pos + name_end);
  i = name_end;
  if (beta) {
    if (i >= t.size() || t[i] != ')')
      throw ParseError("unbalanced 'b(' in '" + std::string(t) + "'", tok.pos);
    ++i;
  } else if (i < t.size() && t[i] == ')') {
    throw ParseError("unbalanced ')' in '" + std::string(t) + "'", tok.pos + i);
  }
  int exponent = 0;
  while (i < t.size()) {
    if (t[i] != '^' || i + 1 >= t.size() || (t[i + 1] != 'l' && t[i + 1] != 'r'))
      throw ParseError("malformed adjoint suffix in '" + std::string(t) + "'", tok.pos + i);
    exponent += t[i + 1] == 'l' ? -1 : 1;
    i += 2;
  }
  if (table != nullptr && !table->contains(name))
    throw ParseError("unknown atom '" + std::string(name) + "'", tok.pos + (beta ? 2 : 0));
  return SimpleType{Atom{std::string(name)}, exponent, beta};
}

ParsedType parse_impl(std::string_view text, const AtomTable* table) {
  const auto tokens = tokenize(text);
  CompoundType loose;
  std::vector<CompoundType> segments;
  std::optional<CompoundType> open;
  std::optional<std::size_t> open_pos;
  std::optional<std::size_t> first_loose;
  for (const auto& tok : tokens) {
    if (tok.text == "<") {
      if (open) throw ParseError("nested '<'", tok.pos);
      open.emplace();
      open_pos = tok.pos;
    } else if (tok.text == ">") {
      if (!open) throw ParseError("unbalanced '>'", tok.pos);
      segments.push_back(std::move(*open));
      open.reset();
    } else {
      auto simple = parse_simple_token(tok, table);
      if (open) {
        open->push_back(std::move(simple));
      } else {
        if (!first_loose) first_loose = tok.pos;
        loose.push_back(std::move(simple));
      }
    }
  }
  if (open) throw ParseError("unbalanced '<'", *open_pos);
  if (segments.empty()) return loose;
  if (first_loose) throw ParseError("type outside of braces", *first_loose);
  return BracedType{std::move(segments)};
}

}  // namespace

ParsedType parse_type(std::string_view text, const AtomTable& table) {
  return parse_impl(text, &table);
}

ParsedType parse_type_unchecked(std::string_view text) { return parse_impl(text, nullptr); }

CompoundType parse_compound(std::string_view text, const AtomTable& table) {
  auto parsed = parse_type(text, table);
  if (auto* c = std::get_if<CompoundType>(&parsed)) return std::move(*c);
  throw ParseError("braces are not allowed here", text.find('<'));
}

BracedType parse_braced(std::string_view text, const AtomTable& table) {
  auto parsed = parse_type(text, table);
  if (auto* b = std::get_if<BracedType>(&parsed)) return std::move(*b);
  return BracedType{{std::get<CompoundType>(std::move(parsed))}};
}

SimpleType parse_simple(std::string_view text, const AtomTable& table) {
  auto t = parse_compound(text, table);
  if (t.size() != 1) throw ParseError("expected exactly one simple type", 0);
  return t[0];
}

}  // namespace pregroup
