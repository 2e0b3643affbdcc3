#include "mgt/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mgt/error.hpp"

namespace mgt {

Perm Perm::identity(int degree) {
  Perm p;
  p.images.resize(degree);
  for (int i = 0; i < degree; ++i) p.images[i] = i;
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images[i] != i) return false;
  return true;
}

bool Perm::is_valid() const {
  const int n = degree();
  std::vector<char> seen(n, 0);
  for (std::int32_t img : images) {
    if (img < 0 || img >= n || seen[img]) return false;
    seen[img] = 1;
  }
  return true;
}

Perm Perm::compose(const Perm& other) const {
  if (degree() != other.degree())
    throw ArgumentError("cannot compose permutations of different degree");
  Perm r;
  r.images.resize(degree());
  for (int i = 0; i < degree(); ++i) r.images[i] = other.images[images[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.images.resize(degree());
  for (int i = 0; i < degree(); ++i) r.images[images[i]] = i;
  return r;
}

namespace {

void skip_ws(const std::string& s, size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

}  // namespace

Perm parse_cycles(const std::string& text, int degree) {
  Perm p = Perm::identity(degree);
  std::vector<char> moved(degree, 0);
  size_t pos = 0;
  skip_ws(text, pos);
  if (pos == text.size())
    throw ParseError("empty permutation text; the identity is written \"()\"");
  bool any_cycle = false;
  while (pos < text.size()) {
    skip_ws(text, pos);
    if (pos == text.size()) break;
    if (text[pos] != '(')
      throw ParseError("expected '(' in cycle notation at \"" + text.substr(pos) + "\"");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_ws(text, pos);
      if (pos == text.size()) throw ParseError("unterminated cycle in \"" + text + "\"");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected point number in \"" + text + "\"");
      int point = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        point = point * 10 + (text[pos] - '0');
        ++pos;
      }
      if (point < 1 || point > degree)
        throw ParseError("point " + std::to_string(point) + " out of range 1.." +
                         std::to_string(degree));
      cycle.push_back(point - 1);
    }
    any_cycle = true;
    if (cycle.size() == 1)
      throw ParseError("singleton cycle in \"" + text + "\"; omit fixed points");
    for (int pt : cycle) {
      if (moved[pt])
        throw ParseError("point " + std::to_string(pt + 1) + " appears twice in \"" + text + "\"");
      moved[pt] = 1;
    }
    for (size_t i = 0; i < cycle.size(); ++i)
      p.images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  if (!any_cycle) throw ParseError("no cycles found in \"" + text + "\"");
  return p;
}

std::vector<Perm> parse_cycle_list(const std::string& text, int degree) {
  std::vector<Perm> result;
  size_t start = 0;
  int depth = 0;
  bool any = false;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      std::string piece = text.substr(start, i - start);
      size_t ws = 0;
      skip_ws(piece, ws);
      if (ws < piece.size()) {
        result.push_back(parse_cycles(piece, degree));
        any = true;
      } else if (i < text.size() || any) {
        throw ParseError("empty entry in permutation list \"" + text + "\"");
      }
      start = i + 1;
    }
  }
  return result;
}

std::string format_cycles(const Perm& p) {
  const int n = p.degree();
  std::vector<char> seen(n, 0);
  std::ostringstream out;
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || p.images[i] == i) continue;
    any = true;
    out << '(' << (i + 1);
    seen[i] = 1;
    for (int j = p.images[i]; j != i; j = p.images[j]) {
      out << ' ' << (j + 1);
      seen[j] = 1;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

}  // namespace mgt
