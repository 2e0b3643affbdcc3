#include "mgt/group_spec.hpp"

#include <cctype>
#include <sstream>

#include "mgt/error.hpp"

namespace mgt {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  bool eat(const char* token) {
    const size_t len = std::string_view(token).size();
    if (s.compare(pos, len, token) == 0) {
      pos += len;
      return true;
    }
    return false;
  }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  bool done() const { return pos >= s.size(); }
};

int parse_int(Cursor& cur) {
  if (!std::isdigit(static_cast<unsigned char>(cur.peek())))
    throw ParseError("expected a number at \"" + cur.s.substr(cur.pos) + "\"");
  int value = 0;
  while (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    value = value * 10 + (cur.s[cur.pos] - '0');
    ++cur.pos;
    if (value > 1000000) throw ParseError("number too large in group spec");
  }
  return value;
}

GroupSpec parse_spec(Cursor& cur) {
  GroupSpec spec;
  if (cur.eat("cyclic:")) {
    spec.kind = GroupSpec::Kind::Cyclic;
    spec.n = parse_int(cur);
  } else if (cur.eat("dihedral:")) {
    spec.kind = GroupSpec::Kind::Dihedral;
    spec.n = parse_int(cur);
  } else if (cur.eat("symmetric:")) {
    spec.kind = GroupSpec::Kind::Symmetric;
    spec.n = parse_int(cur);
  } else if (cur.eat("alternating:")) {
    spec.kind = GroupSpec::Kind::Alternating;
    spec.n = parse_int(cur);
  } else if (cur.eat("klein4")) {
    spec.kind = GroupSpec::Kind::Klein4;
  } else if (cur.eat("quaternion8")) {
    spec.kind = GroupSpec::Kind::Quaternion8;
  } else if (cur.eat("product:")) {
    spec.kind = GroupSpec::Kind::Product;
    spec.factors.push_back(parse_spec(cur));
    if (!cur.eat(",")) throw ParseError("product needs two comma-separated factors");
    spec.factors.push_back(parse_spec(cur));
  } else if (cur.eat("perm:")) {
    spec.kind = GroupSpec::Kind::Perm;
    spec.degree = parse_int(cur);
    if (!cur.eat(":")) throw ParseError("perm spec needs a ':' before its generators");
    // Generators are "(...)" groups separated by ';'; the list ends at the
    // first character that cannot start a cycle (e.g. the ',' closing a
    // product factor).
    for (;;) {
      if (cur.peek() != '(') throw ParseError("perm spec generator must start with '('");
      const size_t start = cur.pos;
      while (cur.peek() == '(') {
        while (!cur.done() && cur.peek() != ')') ++cur.pos;
        if (cur.done()) throw ParseError("unterminated cycle in perm spec");
        ++cur.pos;  // consume ')'
      }
      spec.gens.push_back(parse_cycles(cur.s.substr(start, cur.pos - start), spec.degree));
      if (!cur.eat(";")) break;
    }
  } else {
    throw ParseError("unknown group spec at \"" + cur.s.substr(cur.pos) + "\"");
  }
  return spec;
}

}  // namespace

std::string GroupSpec::text() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::Cyclic: out << "cyclic:" << n; break;
    case Kind::Dihedral: out << "dihedral:" << n; break;
    case Kind::Symmetric: out << "symmetric:" << n; break;
    case Kind::Alternating: out << "alternating:" << n; break;
    case Kind::Klein4: out << "klein4"; break;
    case Kind::Quaternion8: out << "quaternion8"; break;
    case Kind::Product:
      out << "product:" << factors[0].text() << "," << factors[1].text();
      break;
    case Kind::Perm: {
      out << "perm:" << degree << ":";
      for (size_t i = 0; i < gens.size(); ++i) {
        if (i) out << ";";
        out << format_cycles(gens[i]);
      }
      break;
    }
  }
  return out.str();
}

GroupSpec parse_group_spec(const std::string& text) {
  Cursor cur{text};
  GroupSpec spec = parse_spec(cur);
  if (!cur.done())
    throw ParseError("trailing characters in group spec: \"" + text.substr(cur.pos) + "\"");
  return spec;
}

GroupTable build_group(const GroupSpec& spec, int max_order) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic: return cyclic_group(spec.n, max_order);
    case GroupSpec::Kind::Dihedral: return dihedral_group(spec.n, max_order);
    case GroupSpec::Kind::Symmetric: return symmetric_group(spec.n, max_order);
    case GroupSpec::Kind::Alternating: return alternating_group(spec.n, max_order);
    case GroupSpec::Kind::Klein4: return klein_four_group();
    case GroupSpec::Kind::Quaternion8: return quaternion8_group();
    case GroupSpec::Kind::Product:
      return direct_product(build_group(spec.factors[0], max_order),
                            build_group(spec.factors[1], max_order), max_order);
    case GroupSpec::Kind::Perm: return group_from_generators(spec.degree, spec.gens, max_order);
  }
  throw ArgumentError("unknown group spec kind");
}

std::vector<Elem> parse_generator_list(const GroupTable& G, const std::string& text) {
  std::vector<Elem> gens;
  size_t start = 0;
  int depth = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i != text.size() && (text[i] != ',' || depth != 0)) continue;
    std::string piece = text.substr(start, i - start);
    start = i + 1;
    size_t ws = 0;
    while (ws < piece.size() && std::isspace(static_cast<unsigned char>(piece[ws]))) ++ws;
    piece = piece.substr(ws);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back())))
      piece.pop_back();
    if (piece.empty()) continue;
    if (piece[0] == '#') {
      int idx = 0;
      try {
        idx = std::stoi(piece.substr(1));
      } catch (const std::exception&) {
        throw ParseError("bad element index \"" + piece + "\"");
      }
      if (idx < 0 || idx >= G.order())
        throw ArgumentError("element index " + std::to_string(idx) + " out of range 0.." +
                            std::to_string(G.order() - 1));
      gens.push_back(idx);
    } else {
      if (!G.has_labels())
        throw ArgumentError(
            "this group has no permutation labels; name generators by index (\"#k\")");
      const Perm p = parse_cycles(piece, G.degree());
      const auto found = G.find_label(p);
      if (!found)
        throw ArgumentError("permutation " + format_cycles(p) + " is not an element of the group");
      gens.push_back(*found);
    }
  }
  return gens;
}

}  // namespace mgt
