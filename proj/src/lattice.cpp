#include "e6kit/lattice.hpp"

#include "e6kit/exact.hpp"
#include "e6kit/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace e6kit {

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
  LatticeVector r;
  for (int i = 0; i < 7; ++i) r.x[i] = x[i] + o.x[i];
  return r;
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
  LatticeVector r;
  for (int i = 0; i < 7; ++i) r.x[i] = x[i] - o.x[i];
  return r;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r;
  for (int i = 0; i < 7; ++i) r.x[i] = -x[i];
  return r;
}

LatticeVector LatticeVector::operator*(std::int64_t c) const {
  LatticeVector r;
  for (int i = 0; i < 7; ++i) r.x[i] = c * x[i];
  return r;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  for (int i = 0; i < 7; ++i) x[i] += o.x[i];
  return *this;
}

std::string LatticeVector::str() const {
  std::string s = "(";
  for (int i = 0; i < 7; ++i) {
    if (i) s += ",";
    s += std::to_string(x[i]);
  }
  return s + ")";
}

std::int64_t pairing(const LatticeVector& u, const LatticeVector& v) {
  std::int64_t s = u.x[0] * v.x[0];
  for (int i = 1; i < 7; ++i) s -= u.x[i] * v.x[i];
  return s;
}

LatticeVector basis_vector(int i) {
  if (i < 0 || i > 6) throw std::out_of_range("basis_vector index");
  LatticeVector v;
  v.x[i] = 1;
  return v;
}

LatticeVector canonical_class() { return {-3, 1, 1, 1, 1, 1, 1}; }

bool is_root(const LatticeVector& v) { return pairing(v, v) == -2 && pairing(v, canonical_class()) == 0; }

bool is_line(const LatticeVector& v) { return pairing(v, v) == -1 && pairing(v, canonical_class()) == -1; }

namespace {

struct Tables {
  std::vector<Root> roots;
  std::vector<std::string> root_labels;
  std::map<LatticeVector, int> root_index;
  std::vector<Line> lines;
  std::map<LatticeVector, int> line_index;
  std::array<Root, 7> simple{};
  // Inverse Gram matrix of r1..r6 scaled by 3 (det of the E6 Cartan matrix).
  std::array<std::array<std::int64_t, 6>, 6> gram_inv3{};

  Tables() {
    auto push_root = [&](const LatticeVector& v, const std::string& name) {
      root_index[v] = static_cast<int>(roots.size());
      roots.push_back(Root{v});
      root_labels.push_back(name);
      root_index[-v] = static_cast<int>(roots.size());
      roots.push_back(Root{-v});
      root_labels.push_back("-" + name);
    };
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) {
        LatticeVector v;
        v.x[i] = 1;
        v.x[j] = -1;
        push_root(v, "a" + std::to_string(i) + std::to_string(j));
      }
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j)
        for (int k = j + 1; k <= 6; ++k) {
          LatticeVector v;
          v.x[0] = 1;
          v.x[i] = v.x[j] = v.x[k] = -1;
          push_root(v, "a" + std::to_string(i) + std::to_string(j) + std::to_string(k));
        }
    push_root({2, -1, -1, -1, -1, -1, -1}, "max");

    for (int i = 1; i <= 6; ++i) lines.push_back(Line{basis_vector(i), Line::Kind::A, i, 0, 0});
    for (int i = 1; i <= 6; ++i) {
      LatticeVector v{2, -1, -1, -1, -1, -1, -1};
      v.x[i] = 0;
      lines.push_back(Line{v, Line::Kind::B, i, 0, 0});
    }
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) {
        LatticeVector v{1, 0, 0, 0, 0, 0, 0};
        v.x[i] = v.x[j] = -1;
        lines.push_back(Line{v, Line::Kind::C, i, j, 0});
      }
    for (int s = 0; s < kLineCount; ++s) {
      lines[s].index = s;
      line_index[lines[s].vec] = s;
    }

    auto find = [&](const LatticeVector& v) { return roots[root_index.at(v)]; };
    simple[1] = find({1, -1, -1, -1, 0, 0, 0});
    for (int i = 2; i <= 6; ++i) {
      LatticeVector v;
      v.x[i - 1] = 1;
      v.x[i] = -1;
      simple[i] = find(v);
    }
    simple[0] = find({-2, 1, 1, 1, 1, 1, 1});

    RatMatrix g(6, RatVector(6));
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) g[a][b] = pairing(simple[a + 1].vec, simple[b + 1].vec);
    for (int b = 0; b < 6; ++b) {
      RatVector e(6), col;
      e[b] = 1;
      if (!solve(g, e, col)) throw InternalError("E6 Gram matrix singular");
      for (int a = 0; a < 6; ++a) {
        Rat t = col[a] * 3;
        if (t.get_den() != 1) throw InternalError("E6 Gram inverse not in (1/3)Z");
        gram_inv3[a][b] = t.get_num().get_si();
      }
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

std::string Root::label() const {
  auto it = tables().root_index.find(vec);
  if (it == tables().root_index.end()) return vec.str();
  return tables().root_labels[it->second];
}

int Root::index() const {
  auto it = tables().root_index.find(vec);
  if (it == tables().root_index.end()) throw std::invalid_argument("not a root: " + vec.str());
  return it->second;
}

std::string Line::label() const {
  switch (kind) {
    case Kind::A:
      return "a" + std::to_string(i);
    case Kind::B:
      return "b" + std::to_string(i);
    case Kind::C:
      return "c" + std::to_string(i) + std::to_string(j);
  }
  return {};
}

Root make_root(const LatticeVector& v) {
  if (!is_root(v)) throw std::invalid_argument("not a root: " + v.str());
  return Root{v};
}

Root alpha(int i, int j) {
  if (i < 1 || j < 1 || i > 6 || j > 6 || i == j) throw std::invalid_argument("alpha_ij: bad indices");
  LatticeVector v;
  v.x[i] = 1;
  v.x[j] = -1;
  return Root{v};
}

Root alpha(int i, int j, int k) {
  if (i < 1 || j < 1 || k < 1 || i > 6 || j > 6 || k > 6 || i == j || j == k || i == k)
    throw std::invalid_argument("alpha_ijk: bad indices");
  LatticeVector v;
  v.x[0] = 1;
  v.x[i] = v.x[j] = v.x[k] = -1;
  return Root{v};
}

Root alpha_max() { return Root{{2, -1, -1, -1, -1, -1, -1}}; }

const std::vector<Root>& enumerate_roots() { return tables().roots; }
const std::vector<Line>& enumerate_lines() { return tables().lines; }

const Line& line(int index) { return tables().lines.at(index); }

int line_index(const LatticeVector& v) {
  auto it = tables().line_index.find(v);
  return it == tables().line_index.end() ? -1 : it->second;
}

int line_index(std::string_view label) {
  auto digit = [](char c) { return c >= '1' && c <= '6' ? c - '0' : -1; };
  if (label.size() == 2 && (label[0] == 'a' || label[0] == 'b') && digit(label[1]) > 0)
    return (label[0] == 'a' ? 0 : 6) + digit(label[1]) - 1;
  if (label.size() == 3 && label[0] == 'c') {
    int i = digit(label[1]), j = digit(label[2]);
    if (i > 0 && j > 0 && i != j) {
      if (i > j) std::swap(i, j);
      for (const auto& l : enumerate_lines())
        if (l.kind == Line::Kind::C && l.i == i && l.j == j) return l.index;
    }
  }
  throw std::invalid_argument("bad line label '" + std::string(label) + "'");
}

std::string line_label(int index) { return line(index).label(); }

const std::array<Root, 7>& simple_roots() { return tables().simple; }

std::vector<std::pair<int, int>> double_six(const LatticeVector& r) {
  if (!is_root(r)) throw std::invalid_argument("double_six: not a root " + r.str());
  std::vector<std::pair<int, int>> out;
  for (const auto& l : enumerate_lines())
    if (pairing(r, l.vec) == 1) out.emplace_back(l.index, line_index(l.vec + r));
  return out;
}

std::array<std::int64_t, 6> simple_coordinates(const LatticeVector& v) {
  if (pairing(v, canonical_class()) != 0) throw std::invalid_argument("vector not in E6: " + v.str());
  const auto& t = tables();
  std::array<std::int64_t, 6> b{};
  for (int j = 0; j < 6; ++j) b[j] = pairing(t.simple[j + 1].vec, v);
  std::array<std::int64_t, 6> c{};
  for (int a = 0; a < 6; ++a) {
    std::int64_t s = 0;
    for (int j = 0; j < 6; ++j) s += t.gram_inv3[a][j] * b[j];
    if (s % 3 != 0) throw InternalError("non-integral simple coordinates");
    c[a] = s / 3;
  }
  return c;
}

namespace {

std::vector<int> parse_indices(std::string_view body, std::size_t expect, std::string_view token) {
  std::vector<int> idx;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string_view part = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (part.size() != 1 || part[0] < '1' || part[0] > '6')
      throw ParseError("bad index in root token '" + std::string(token) + "'");
    idx.push_back(part[0] - '0');
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (idx.size() != expect) throw ParseError("wrong index count in root token '" + std::string(token) + "'");
  std::vector<int> sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ParseError("repeated index in root token '" + std::string(token) + "'");
  return idx;
}

}  // namespace

Root parse_root(std::string_view token) {
  std::string_view t = token;
  bool negate = false;
  if (!t.empty() && t[0] == '-') {
    negate = true;
    t.remove_prefix(1);
  }
  Root r;
  if (t == "max") {
    r = alpha_max();
  } else if (t.size() > 2 && t.substr(0, 2) == "a:") {
    auto idx = parse_indices(t.substr(2), 2, token);
    r = alpha(idx[0], idx[1]);
  } else if (t.size() > 2 && t.substr(0, 2) == "b:") {
    auto idx = parse_indices(t.substr(2), 3, token);
    r = alpha(idx[0], idx[1], idx[2]);
  } else if (!t.empty() && t.front() == '(' && t.back() == ')') {
    LatticeVector v;
    std::string body(t.substr(1, t.size() - 2));
    std::size_t pos = 0;
    for (int i = 0; i < 7; ++i) {
      std::size_t end = body.find(',', pos);
      if ((end == std::string::npos) != (i == 6)) throw ParseError("tuple must have 7 entries: '" + std::string(token) + "'");
      std::string part = body.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
      part.erase(std::remove_if(part.begin(), part.end(), [](unsigned char c) { return std::isspace(c); }), part.end());
      std::size_t used = 0;
      try {
        v.x[i] = std::stoll(part, &used);
      } catch (const std::exception&) {
        used = std::string::npos;
      }
      if (used != part.size()) throw ParseError("bad tuple entry '" + part + "'");
      pos = end + 1;
    }
    if (!is_root(v)) throw ParseError("tuple is not a root: " + v.str());
    r = Root{v};
  } else {
    throw ParseError("unrecognized root token '" + std::string(token) + "'");
  }
  return negate ? -r : r;
}

std::vector<Root> parse_root_list(std::string_view text) {
  std::vector<Root> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    std::size_t end = i;
    bool tuple = c == '(' || (c == '-' && i + 1 < text.size() && text[i + 1] == '(');
    if (tuple) {
      end = text.find(')', i);
      if (end == std::string_view::npos) throw ParseError("unterminated tuple", line, col);
      ++end;
    } else {
      while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != '#') ++end;
    }
    std::string_view tok = text.substr(i, end - i);
    try {
      out.push_back(parse_root(tok));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line, col);
    }
    advance(end - i);
  }
  return out;
}

}  // namespace e6kit
