#include "almosthopf/almost_group.hpp"

#include <array>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "almosthopf/errors.hpp"
#include "text_format.hpp"

namespace almosthopf {

namespace {

// Shape sanity shared by the checked accessors and the verifier. Structures
// are plain aggregates, so a hand-assembled one may be malformed; that is an
// input error, not a failed axiom.
void validate_shape(const AlmostGroup& g) {
  const std::size_t n = g.elements.size();
  if (n == 0) throw std::invalid_argument("almost group: no elements");
  if (g.mul.size() != n || g.inv.size() != n || g.in_j.size() != n)
    throw std::invalid_argument("almost group: table sizes disagree");
  std::set<std::string> seen;
  for (const auto& e : g.elements)
    if (!seen.insert(e).second)
      throw std::invalid_argument("almost group: duplicate label '" + e + "'");
  for (const auto& row : g.mul) {
    if (row.size() != n)
      throw std::invalid_argument("almost group: mul table is not square");
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw std::invalid_argument("almost group: mul entry out of range");
  }
  for (int v : g.inv)
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      throw std::invalid_argument("almost group: inv entry out of range");
}

}  // namespace

int AlmostGroup::mul_at(int a, int b) const {
  if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= size() ||
      static_cast<std::size_t>(b) >= size())
    throw std::out_of_range("AlmostGroup::mul_at: index out of range");
  return mul[a][b];
}

int AlmostGroup::i_at(int g) const {
  if (g < 0 || static_cast<std::size_t>(g) >= size())
    throw std::out_of_range("AlmostGroup::i_at: index out of range");
  return inv[g];
}

bool AlmostGroup::is_j(int g) const {
  if (g < 0 || static_cast<std::size_t>(g) >= size())
    throw std::out_of_range("AlmostGroup::is_j: index out of range");
  return in_j[g];
}

int AlmostGroup::index_of(const std::string& label) const {
  for (std::size_t k = 0; k < elements.size(); ++k)
    if (elements[k] == label) return static_cast<int>(k);
  return -1;
}

AlmostGroup build_almost_group(std::vector<std::string> elements,
                               std::vector<std::vector<int>> mul,
                               std::vector<int> inv,
                               const std::vector<int>& j_indices) {
  AlmostGroup g;
  g.elements = std::move(elements);
  g.mul = std::move(mul);
  g.inv = std::move(inv);
  g.in_j.assign(g.elements.size(), false);
  for (int j : j_indices) {
    if (j < 0 || static_cast<std::size_t>(j) >= g.elements.size())
      throw std::invalid_argument("almost group: J index out of range");
    g.in_j[j] = true;
  }
  validate_shape(g);
  return g;
}

AxiomReport verify_axioms(const AlmostGroup& g) {
  validate_shape(g);
  const int n = static_cast<int>(g.size());
  const auto& lbl = g.elements;
  AxiomReport report;

  RuleRecorder assoc("assoc");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int l = g.mul[g.mul[a][b]][c];
        int r = g.mul[a][g.mul[b][c]];
        if (l != r) assoc.fail({lbl[a], lbl[b], lbl[c]}, lbl[l], lbl[r]);
      }
  assoc.finish(report);

  RuleRecorder anti("anti-involution");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int l = g.inv[g.mul[a][b]];
      int r = g.mul[g.inv[b]][g.inv[a]];
      if (l != r) anti.fail({lbl[a], lbl[b]}, lbl[l], lbl[r]);
    }
  anti.finish(report);

  RuleRecorder invol("involution");
  for (int a = 0; a < n; ++a) {
    int l = g.inv[g.inv[a]];
    if (l != a) invol.fail({lbl[a]}, lbl[l], lbl[a]);
  }
  invol.finish(report);

  RuleRecorder central("central-j");
  for (int j = 0; j < n; ++j) {
    if (!g.in_j[j]) continue;
    for (int a = 0; a < n; ++a) {
      int l = g.mul[j][a];
      int r = g.mul[a][j];
      if (l != r) central.fail({lbl[j], lbl[a]}, lbl[l], lbl[r]);
    }
  }
  central.finish(report);

  RuleRecorder norm("norm-in-j");
  for (int a = 0; a < n; ++a) {
    int l = g.mul[a][g.inv[a]];
    int r = g.mul[g.inv[a]][a];
    if (l != r) norm.fail({lbl[a]}, lbl[l], lbl[r]);
    if (!g.in_j[l]) norm.fail({lbl[a]}, lbl[l], "an element of J");
  }
  norm.finish(report);

  RuleRecorder jmul("j-closed-mul");
  for (int j = 0; j < n; ++j) {
    if (!g.in_j[j]) continue;
    for (int k = 0; k < n; ++k) {
      if (!g.in_j[k]) continue;
      int p = g.mul[j][k];
      if (!g.in_j[p]) jmul.fail({lbl[j], lbl[k]}, lbl[p], "an element of J");
    }
  }
  jmul.finish(report);

  RuleRecorder jinv("j-closed-inv");
  for (int j = 0; j < n; ++j) {
    if (!g.in_j[j]) continue;
    int p = g.inv[j];
    if (!g.in_j[p]) jinv.fail({lbl[j]}, lbl[p], "an element of J");
  }
  jinv.finish(report);

  return report;
}

AlmostGroup from_group(std::vector<std::string> elements,
                       std::vector<std::vector<int>> cayley,
                       const std::string& identity_label) {
  AlmostGroup g;
  g.elements = std::move(elements);
  g.mul = std::move(cayley);
  g.inv.assign(g.elements.size(), 0);
  g.in_j.assign(g.elements.size(), false);
  validate_shape(g);

  const int n = static_cast<int>(g.size());
  int e = g.index_of(identity_label);
  if (e < 0)
    throw PreconditionError("from_group: unknown identity label '" +
                            identity_label + "'");
  for (int a = 0; a < n; ++a)
    if (g.mul[e][a] != a || g.mul[a][e] != a)
      throw PreconditionError("from_group: '" + identity_label +
                              "' is not an identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]])
          throw PreconditionError("from_group: table is not associative at (" +
                                  g.elements[a] + ", " + g.elements[b] + ", " +
                                  g.elements[c] + ")");
  for (int a = 0; a < n; ++a) {
    int found = -1;
    for (int b = 0; b < n; ++b)
      if (g.mul[a][b] == e && g.mul[b][a] == e) {
        found = b;
        break;
      }
    if (found < 0)
      throw PreconditionError("from_group: '" + g.elements[a] +
                              "' has no two-sided inverse");
    g.inv[a] = found;
  }
  g.in_j[e] = true;
  return g;
}

AlmostGroup pair_construction(const AlmostGroup& a) {
  validate_shape(a);
  const int n = static_cast<int>(a.size());

  int e = -1;
  for (int x = 0; x < n && e < 0; ++x) {
    bool ident = true;
    for (int y = 0; y < n; ++y)
      if (a.mul[x][y] != y || a.mul[y][x] != y) {
        ident = false;
        break;
      }
    if (ident) e = x;
  }
  if (e < 0)
    throw PreconditionError("pair_construction: input has no identity");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (a.mul[x][y] != a.mul[y][x])
        throw PreconditionError("pair_construction: input is not abelian");
      for (int z = 0; z < n; ++z)
        if (a.mul[a.mul[x][y]][z] != a.mul[x][a.mul[y][z]])
          throw PreconditionError("pair_construction: input not associative");
    }
  for (int x = 0; x < n; ++x) {
    bool invertible = false;
    for (int y = 0; y < n; ++y)
      if (a.mul[x][y] == e) invertible = true;
    if (!invertible)
      throw PreconditionError("pair_construction: input is not a group");
  }

  // Pairs ordered row-major; (x,y) has index x*n + y.
  AlmostGroup p;
  const int m = n * n;
  p.elements.reserve(m);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      p.elements.push_back("(" + a.elements[x] + "," + a.elements[y] + ")");
  p.mul.assign(m, std::vector<int>(m, 0));
  p.inv.assign(m, 0);
  p.in_j.assign(m, false);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int idx = x * n + y;
      p.inv[idx] = y * n + x;
      p.in_j[idx] = (x == y);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          p.mul[idx][u * n + v] = a.mul[x][u] * n + a.mul[y][v];
    }
  return p;
}

AlmostGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: n must be positive");
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return from_group(std::move(labels), std::move(table), "0");
}

AlmostGroup symmetric_group_3() {
  // Permutations of {0,1,2} in one-line notation; composition p after q.
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                           {0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
  auto label = [](const std::array<int, 3>& p) {
    return std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]);
  };
  std::vector<std::string> labels;
  for (const auto& p : perms) labels.push_back(label(p));
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> comp{};
      for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
      int idx = -1;
      for (int k = 0; k < 6; ++k)
        if (perms[k] == comp) idx = k;
      table[a][b] = idx;
    }
  return from_group(std::move(labels), std::move(table), "012");
}

AlmostGroup group_product(const AlmostGroup& a, const AlmostGroup& b) {
  validate_shape(a);
  validate_shape(b);
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table(n * m, std::vector<int>(n * m));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < m; ++y)
      labels.push_back("(" + a.elements[x] + "," + b.elements[y] + ")");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < m; ++y)
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < m; ++v)
          table[x * m + y][u * m + v] = a.mul[x][u] * m + b.mul[y][v];

  int ea = -1, eb = -1;
  for (int x = 0; x < n; ++x) {
    bool ident = true;
    for (int y = 0; y < n; ++y)
      if (a.mul[x][y] != y || a.mul[y][x] != y) ident = false;
    if (ident) ea = x;
  }
  for (int x = 0; x < m; ++x) {
    bool ident = true;
    for (int y = 0; y < m; ++y)
      if (b.mul[x][y] != y || b.mul[y][x] != y) ident = false;
    if (ident) eb = x;
  }
  if (ea < 0 || eb < 0)
    throw PreconditionError("group_product: factors must be groups");
  return from_group(std::move(labels), std::move(table),
                    "(" + a.elements[ea] + "," + b.elements[eb] + ")");
}

AlmostGroup constant_product_structure() {
  return build_almost_group({"a", "b", "c"},
                            {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}, {0, 1, 2},
                            {0, 1});
}

AlmostGroup unital_collapse_structure() {
  return build_almost_group({"a", "b", "c"},
                            {{0, 1, 2}, {1, 1, 1}, {2, 1, 1}}, {0, 1, 2},
                            {0, 1});
}

namespace {

using detail::Line;
using detail::fail_at;
using detail::tokenize;

}  // namespace

AlmostGroup parse_agrp(std::istream& in) {
  std::vector<Line> lines = tokenize(in);
  std::size_t at = 0;
  auto next = [&](const std::string& what) -> const Line& {
    if (at >= lines.size())
      throw ParseError("unexpected end of input, expected " + what);
    return lines[at++];
  };

  const Line& header = next("'elements' line");
  if (header.tokens[0] != "elements" || header.tokens.size() < 2)
    fail_at(header.number, "expected 'elements <label>...'");
  std::vector<std::string> elements(header.tokens.begin() + 1,
                                    header.tokens.end());
  const std::size_t n = elements.size();
  std::set<std::string> seen;
  for (const auto& e : elements)
    if (!seen.insert(e).second)
      fail_at(header.number, "duplicate element label '" + e + "'");
  auto resolve = [&](const std::string& label, int line) {
    for (std::size_t k = 0; k < n; ++k)
      if (elements[k] == label) return static_cast<int>(k);
    fail_at(line, "unknown element label '" + label + "'");
  };

  std::vector<std::vector<int>> mul;
  for (std::size_t r = 0; r < n; ++r) {
    const Line& row = next("'row' line for '" + elements[r] + "'");
    if (row.tokens[0] != "row" || row.tokens.size() != n + 3 ||
        row.tokens[2] != ":")
      fail_at(row.number, "expected 'row " + elements[r] + " : <" +
                              std::to_string(n) + " labels>'");
    if (row.tokens[1] != elements[r])
      fail_at(row.number, "rows must appear in element order; expected row '" +
                              elements[r] + "', got '" + row.tokens[1] + "'");
    std::vector<int> entries;
    for (std::size_t k = 3; k < row.tokens.size(); ++k)
      entries.push_back(resolve(row.tokens[k], row.number));
    mul.push_back(std::move(entries));
  }

  const Line& iline = next("'i' line");
  if (iline.tokens[0] != "i" || iline.tokens.size() != n + 1)
    fail_at(iline.number,
            "expected 'i <" + std::to_string(n) + " labels>'");
  std::vector<int> inv;
  for (std::size_t k = 1; k < iline.tokens.size(); ++k)
    inv.push_back(resolve(iline.tokens[k], iline.number));

  const Line& jline = next("'J' line");
  if (jline.tokens[0] != "J")
    fail_at(jline.number, "expected 'J <labels>'");
  std::vector<int> j_indices;
  std::set<int> j_seen;
  for (std::size_t k = 1; k < jline.tokens.size(); ++k) {
    int idx = resolve(jline.tokens[k], jline.number);
    if (!j_seen.insert(idx).second)
      fail_at(jline.number, "duplicate J label '" + jline.tokens[k] + "'");
    j_indices.push_back(idx);
  }

  if (at != lines.size())
    fail_at(lines[at].number, "unexpected content after 'J' line");
  return build_almost_group(std::move(elements), std::move(mul),
                            std::move(inv), j_indices);
}

AlmostGroup parse_agrp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_agrp(in);
}

std::string serialize_agrp(const AlmostGroup& g) {
  validate_shape(g);
  std::string out = "elements";
  for (const auto& e : g.elements) out += " " + e;
  out += "\n";
  for (std::size_t r = 0; r < g.size(); ++r) {
    out += "row " + g.elements[r] + " :";
    for (int v : g.mul[r]) out += " " + g.elements[v];
    out += "\n";
  }
  out += "i";
  for (int v : g.inv) out += " " + g.elements[v];
  out += "\nJ";
  for (std::size_t k = 0; k < g.size(); ++k)
    if (g.in_j[k]) out += " " + g.elements[k];
  out += "\n";
  return out;
}

}  // namespace almosthopf
