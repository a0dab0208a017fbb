#include "ackdec/literal.hpp"

#include <cctype>
#include <stdexcept>

namespace ackdec {

namespace {

struct Cursor {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(std::string_view tok) {
    skip_ws();
    if (s.substr(pos, tok.size()) == tok) {
      pos += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!eat(tok))
      throw std::invalid_argument("set literal: expected '" + std::string(tok) + "' at offset " +
                                  std::to_string(pos));
  }
  int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("set literal: expected integer at offset " +
                                                  std::to_string(start));
    return std::stoi(std::string(s.substr(start, pos - start)));
  }
  bool done() {
    skip_ws();
    return pos == s.size();
  }
};

std::vector<int> int_list(Cursor& c, char open, char close) {
  c.expect(std::string_view(&open, 1));
  std::vector<int> v;
  c.skip_ws();
  if (c.eat(std::string_view(&close, 1))) return v;
  while (true) {
    v.push_back(c.integer());
    if (c.eat(std::string_view(&close, 1))) return v;
    c.expect(",");
  }
}

} // namespace

ExponentSet parse_set_literal(std::string_view text) {
  Cursor c{text};
  if (c.eat("box")) {
    c.expect("d");
    c.expect("=");
    int d = c.integer();
    c.expect("k");
    c.expect("=");
    std::vector<int> caps = int_list(c, '[', ']');
    c.expect("deg");
    c.expect("<=");
    int deg = c.integer();
    if (!c.done()) throw std::invalid_argument("set literal: trailing input");
    if (static_cast<int>(caps.size()) != d)
      throw std::invalid_argument("set literal: caps length differs from d");
    return ExponentSet::box(KBox(caps), deg);
  }
  if (c.eat("set")) {
    c.expect("d");
    c.expect("=");
    int d = c.integer();
    c.expect("{");
    std::vector<MultiIndex> elems;
    c.skip_ws();
    if (!c.eat("}")) {
      while (true) {
        c.skip_ws();
        if (c.pos < c.s.size() && c.s[c.pos] == '(') {
          elems.emplace_back(int_list(c, '(', ')'));
        } else {
          elems.emplace_back(std::vector<int>{c.integer()});
        }
        if (c.eat("}")) break;
        c.expect(",");
      }
    }
    if (!c.done()) throw std::invalid_argument("set literal: trailing input");
    return ExponentSet::from_elements(d, std::move(elems));
  }
  throw std::invalid_argument("set literal: expected 'box' or 'set'");
}

std::string format_set_literal(const ExponentSet& set) {
  if (auto b = set.as_box()) {
    return "box d=" + std::to_string(set.dim()) + " k=" + b->first.str() +
           " deg<=" + std::to_string(b->second);
  }
  return "set d=" + std::to_string(set.dim()) + " " + elements_str(set.elements());
}

} // namespace ackdec
