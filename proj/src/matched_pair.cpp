#include "almosthopf/matched_pair.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>
#include <utility>

#include "almosthopf/errors.hpp"
#include "text_format.hpp"

namespace almosthopf {

namespace {

void validate_tables(const MatchedPair& mp) {
  const std::size_t nm = mp.m.size();
  const std::size_t ng = mp.g.size();
  if (mp.right_table.size() != nm || mp.left_table.size() != nm)
    throw std::invalid_argument("matched pair: tables need one row per M");
  for (std::size_t s = 0; s < nm; ++s) {
    if (mp.right_table[s].size() != ng || mp.left_table[s].size() != ng)
      throw std::invalid_argument(
          "matched pair: tables need one column per G");
    for (int v : mp.right_table[s])
      if (v < 0 || static_cast<std::size_t>(v) >= ng)
        throw std::invalid_argument("matched pair: right entry out of range");
    for (int v : mp.left_table[s])
      if (v < 0 || static_cast<std::size_t>(v) >= nm)
        throw std::invalid_argument("matched pair: left entry out of range");
  }
}

}  // namespace

int MatchedPair::right(int s, int u) const {
  if (s < 0 || u < 0 || static_cast<std::size_t>(s) >= m.size() ||
      static_cast<std::size_t>(u) >= g.size())
    throw std::out_of_range("MatchedPair::right: index out of range");
  return right_table[s][u];
}

int MatchedPair::left(int s, int u) const {
  if (s < 0 || u < 0 || static_cast<std::size_t>(s) >= m.size() ||
      static_cast<std::size_t>(u) >= g.size())
    throw std::out_of_range("MatchedPair::left: index out of range");
  return left_table[s][u];
}

MatchedPair build_matched_pair(AlmostGroup g, AlmostGroup m,
                               std::vector<std::vector<int>> right_table,
                               std::vector<std::vector<int>> left_table) {
  MatchedPair mp{std::move(g), std::move(m), std::move(right_table),
                 std::move(left_table)};
  validate_tables(mp);
  return mp;
}

MatchedPair trivial_pair(const AlmostGroup& g, const AlmostGroup& m) {
  if (!verify_axioms(g).passed)
    throw PreconditionError("trivial_pair: first carrier fails verification");
  if (!verify_axioms(m).passed)
    throw PreconditionError("trivial_pair: second carrier fails verification");
  std::vector<std::vector<int>> right_table(m.size(),
                                            std::vector<int>(g.size()));
  std::vector<std::vector<int>> left_table(m.size(),
                                           std::vector<int>(g.size()));
  for (std::size_t s = 0; s < m.size(); ++s)
    for (std::size_t u = 0; u < g.size(); ++u) {
      right_table[s][u] = static_cast<int>(u);
      left_table[s][u] = static_cast<int>(s);
    }
  return build_matched_pair(g, m, std::move(right_table),
                            std::move(left_table));
}

MatchedPair inversion_pair(int n) {
  AlmostGroup g = cyclic_group(n);
  AlmostGroup m = cyclic_group(2);
  std::vector<std::vector<int>> right_table(2, std::vector<int>(g.size()));
  std::vector<std::vector<int>> left_table(2, std::vector<int>(g.size(), 0));
  for (int u = 0; u < n; ++u) {
    right_table[0][u] = u;
    right_table[1][u] = (n - u) % n;
    left_table[1][u] = 1;
  }
  return build_matched_pair(std::move(g), std::move(m),
                            std::move(right_table), std::move(left_table));
}

AxiomReport verify_matched(const MatchedPair& mp) {
  validate_tables(mp);
  const int nm = static_cast<int>(mp.m.size());
  const int ng = static_cast<int>(mp.g.size());
  const AlmostGroup& G = mp.g;
  const AlmostGroup& M = mp.m;
  AxiomReport report;

  auto carrier_rule = [&report](const char* rule, const AlmostGroup& a) {
    RuleRecorder rec(rule);
    AxiomReport inner = verify_axioms(a);
    if (!inner.passed)
      for (const auto& c : inner.checks)
        if (!c.passed)
          rec.fail({c.rule}, "a passing almost-group check", "a failure");
    rec.finish(report);
  };
  carrier_rule("g-axioms", G);
  carrier_rule("m-axioms", M);

  auto gl = [&](int u) { return G.elements[u]; };
  auto ml = [&](int s) { return M.elements[s]; };
  auto rt = [&](int s, int u) { return mp.right_table[s][u]; };
  auto lt = [&](int s, int u) { return mp.left_table[s][u]; };

  RuleRecorder left_g("left-over-g-product");
  RuleRecorder right_g("right-over-g-product");
  for (int s = 0; s < nm; ++s)
    for (int u = 0; u < ng; ++u)
      for (int v = 0; v < ng; ++v) {
        int lhs = lt(s, G.mul[u][v]);
        int rhs = lt(lt(s, u), v);
        if (lhs != rhs)
          left_g.fail({"s=" + ml(s), "u=" + gl(u), "v=" + gl(v)}, ml(lhs),
                      ml(rhs));
        int rlhs = rt(s, G.mul[u][v]);
        int rrhs = G.mul[rt(s, u)][rt(lt(s, u), v)];
        if (rlhs != rrhs)
          right_g.fail({"s=" + ml(s), "u=" + gl(u), "v=" + gl(v)}, gl(rlhs),
                       gl(rrhs));
      }
  left_g.finish(report);

  RuleRecorder left_m("left-over-m-product");
  RuleRecorder right_m("right-over-m-product");
  for (int s = 0; s < nm; ++s)
    for (int t = 0; t < nm; ++t)
      for (int u = 0; u < ng; ++u) {
        int st = M.mul[s][t];
        int lhs = lt(st, u);
        int rhs = M.mul[lt(s, rt(t, u))][lt(t, u)];
        if (lhs != rhs)
          left_m.fail({"s=" + ml(s), "t=" + ml(t), "u=" + gl(u)}, ml(lhs),
                      ml(rhs));
        int rlhs = rt(st, u);
        int rrhs = rt(s, rt(t, u));
        if (rlhs != rrhs)
          right_m.fail({"s=" + ml(s), "t=" + ml(t), "u=" + gl(u)}, gl(rlhs),
                       gl(rrhs));
      }
  left_m.finish(report);
  right_m.finish(report);
  right_g.finish(report);

  RuleRecorder inv_r("involution-right");
  RuleRecorder inv_l("involution-left");
  for (int s = 0; s < nm; ++s)
    for (int u = 0; u < ng; ++u) {
      int sl = M.inv[lt(s, u)];
      int ur = G.inv[rt(s, u)];
      int lhs_r = rt(sl, ur);
      if (lhs_r != G.inv[u])
        inv_r.fail({"s=" + ml(s), "u=" + gl(u)}, gl(lhs_r), gl(G.inv[u]));
      int lhs_l = lt(sl, ur);
      if (lhs_l != M.inv[s])
        inv_l.fail({"s=" + ml(s), "u=" + gl(u)}, ml(lhs_l), ml(M.inv[s]));
    }
  inv_r.finish(report);
  inv_l.finish(report);

  RuleRecorder vac_m("vacuum-m");
  for (int s = 0; s < nm; ++s) {
    if (!M.in_j[s]) continue;
    for (int u = 0; u < ng; ++u) {
      if (rt(s, u) != u)
        vac_m.fail({"j=" + ml(s), "u=" + gl(u)}, gl(rt(s, u)), gl(u));
      if (lt(s, u) != s)
        vac_m.fail({"j=" + ml(s), "u=" + gl(u)}, ml(lt(s, u)), ml(s));
    }
  }
  vac_m.finish(report);

  RuleRecorder vac_g("vacuum-g");
  for (int u = 0; u < ng; ++u) {
    if (!G.in_j[u]) continue;
    for (int s = 0; s < nm; ++s) {
      if (rt(s, u) != u)
        vac_g.fail({"s=" + ml(s), "j=" + gl(u)}, gl(rt(s, u)), gl(u));
      if (lt(s, u) != s)
        vac_g.fail({"s=" + ml(s), "j=" + gl(u)}, ml(lt(s, u)), ml(s));
    }
  }
  vac_g.finish(report);

  RuleRecorder norm_l("norm-left");
  RuleRecorder norm_r("norm-right");
  for (int s = 0; s < nm; ++s)
    for (int w = 0; w < ng; ++w) {
      int sw = lt(s, w);
      int lhs = M.mul[M.inv[sw]][sw];
      if (lhs != M.mul[s][M.inv[s]] || lhs != M.mul[M.inv[s]][s])
        norm_l.fail({"s=" + ml(s), "w=" + gl(w)}, ml(lhs),
                    ml(M.mul[s][M.inv[s]]));
      int rw = rt(s, w);
      int rlhs = G.mul[rw][G.inv[rw]];
      if (rlhs != G.mul[w][G.inv[w]] || rlhs != G.mul[G.inv[w]][w])
        norm_r.fail({"s=" + ml(s), "w=" + gl(w)}, gl(rlhs),
                    gl(G.mul[w][G.inv[w]]));
    }
  norm_l.finish(report);
  norm_r.finish(report);

  return report;
}

AlmostGroup doublecross(const MatchedPair& mp) {
  AxiomReport ok = verify_matched(mp);
  if (!ok.passed) {
    std::string first;
    for (const auto& c : ok.checks)
      if (!c.passed) {
        first = c.rule;
        break;
      }
    throw PreconditionError(
        "doublecross: matched-pair verification failed (first failing rule: " +
        first + ")");
  }

  const int nm = static_cast<int>(mp.m.size());
  const int ng = static_cast<int>(mp.g.size());
  auto idx = [nm](int u, int s) { return u * nm + s; };

  std::vector<std::string> elements;
  elements.reserve(static_cast<std::size_t>(ng) * nm);
  for (int u = 0; u < ng; ++u)
    for (int s = 0; s < nm; ++s)
      elements.push_back("(" + mp.g.elements[u] + "," + mp.m.elements[s] +
                         ")");

  std::vector<std::vector<int>> mul(elements.size(),
                                    std::vector<int>(elements.size()));
  std::vector<int> inv(elements.size());
  std::vector<int> j_indices;
  for (int u = 0; u < ng; ++u)
    for (int s = 0; s < nm; ++s) {
      for (int v = 0; v < ng; ++v)
        for (int t = 0; t < nm; ++t) {
          int gu = mp.g.mul[u][mp.right_table[s][v]];
          int ms = mp.m.mul[mp.left_table[s][v]][t];
          mul[idx(u, s)][idx(v, t)] = idx(gu, ms);
        }
      int si = mp.m.inv[s];
      int ui = mp.g.inv[u];
      inv[idx(u, s)] = idx(mp.right_table[si][ui], mp.left_table[si][ui]);
      if (mp.g.in_j[u] && mp.m.in_j[s]) j_indices.push_back(idx(u, s));
    }

  return build_almost_group(std::move(elements), std::move(mul),
                            std::move(inv), j_indices);
}

namespace {

using detail::Line;
using detail::fail_at;
using detail::tokenize;

}  // namespace

MatchedPair parse_mpair_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::vector<Line> lines = tokenize(in);
  std::size_t at = 0;
  auto next = [&](const std::string& what) -> const Line& {
    if (at >= lines.size())
      throw ParseError("unexpected end of input, expected " + what);
    return lines[at++];
  };

  const std::filesystem::path dir =
      std::filesystem::path(path).parent_path();
  auto carrier = [&](const char* which) {
    const Line& line = next(std::string("'") + which + " <path>' line");
    if (line.tokens[0] != which || line.tokens.size() != 2)
      fail_at(line.number,
              std::string("expected '") + which + " <path>'");
    return parse_agrp_file((dir / line.tokens[1]).string());
  };
  AlmostGroup g = carrier("G");
  AlmostGroup m = carrier("M");

  const std::size_t nm = m.size();
  const std::size_t ng = g.size();
  std::vector<std::vector<int>> right_table(nm, std::vector<int>(ng, -1));
  std::vector<std::vector<int>> left_table(nm, std::vector<int>(ng, -1));

  while (at < lines.size()) {
    const Line& line = lines[at++];
    const std::string& head = line.tokens[0];
    bool is_right = head == "right";
    if (!is_right && head != "left")
      fail_at(line.number, "expected 'right' or 'left', got '" + head + "'");
    if (line.tokens.size() != 5 || line.tokens[3] != ":")
      fail_at(line.number,
              "expected '" + head + " <s> <u> : <" +
                  (is_right ? std::string("g") : std::string("m")) +
                  ">'");
    int s = m.index_of(line.tokens[1]);
    if (s < 0)
      fail_at(line.number, "unknown M label '" + line.tokens[1] + "'");
    int u = g.index_of(line.tokens[2]);
    if (u < 0)
      fail_at(line.number, "unknown G label '" + line.tokens[2] + "'");
    auto& table = is_right ? right_table : left_table;
    const AlmostGroup& target = is_right ? g : m;
    int value = target.index_of(line.tokens[4]);
    if (value < 0)
      fail_at(line.number, "unknown " + std::string(is_right ? "G" : "M") +
                               " label '" + line.tokens[4] + "'");
    if (table[s][u] >= 0)
      fail_at(line.number, "repeated " + head + " entry for (" +
                               line.tokens[1] + ", " + line.tokens[2] + ")");
    table[s][u] = value;
  }

  for (std::size_t s = 0; s < nm; ++s)
    for (std::size_t u = 0; u < ng; ++u) {
      if (right_table[s][u] < 0)
        throw ParseError("missing right entry for (" + m.elements[s] + ", " +
                         g.elements[u] + ")");
      if (left_table[s][u] < 0)
        throw ParseError("missing left entry for (" + m.elements[s] + ", " +
                         g.elements[u] + ")");
    }

  return build_matched_pair(std::move(g), std::move(m),
                            std::move(right_table), std::move(left_table));
}

std::string serialize_mpair(const MatchedPair& mp, const std::string& g_ref,
                            const std::string& m_ref) {
  validate_tables(mp);
  std::string out = "G " + g_ref + "\nM " + m_ref + "\n";
  for (std::size_t s = 0; s < mp.m.size(); ++s)
    for (std::size_t u = 0; u < mp.g.size(); ++u)
      out += "right " + mp.m.elements[s] + " " + mp.g.elements[u] + " : " +
             mp.g.elements[mp.right_table[s][u]] + "\n";
  for (std::size_t s = 0; s < mp.m.size(); ++s)
    for (std::size_t u = 0; u < mp.g.size(); ++u)
      out += "left " + mp.m.elements[s] + " " + mp.g.elements[u] + " : " +
             mp.m.elements[mp.left_table[s][u]] + "\n";
  return out;
}

}  // namespace almosthopf
