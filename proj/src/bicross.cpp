#include "almosthopf/bicross.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "almosthopf/errors.hpp"

namespace almosthopf {

namespace {

void require_matched(const MatchedPair& mp, const char* who) {
  AxiomReport report = verify_matched(mp);
  if (report.passed) return;
  std::string first;
  for (const auto& c : report.checks)
    if (!c.passed) {
      first = c.rule;
      break;
    }
  throw PreconditionError(std::string(who) +
                          ": matched-pair verification failed (first failing "
                          "rule: " +
                          first + ")");
}

std::function<std::string(LabelKind, int)> bicross_namer(const MatchedPair& mp,
                                                         bool dual) {
  // On H the group leg lives in M and the delta leg in G; the dual swaps
  // which carrier sits under which leaf kind.
  return [g = mp.g.elements, m = mp.m.elements, dual](LabelKind k, int i) {
    if (k == LabelKind::DeltaElem)
      return "d(" + (dual ? m.at(i) : g.at(i)) + ")";
    return dual ? g.at(i) : m.at(i);
  };
}

}  // namespace

BicrossAlgebra bicrossproduct(const MatchedPair& mp) {
  require_matched(mp, "bicrossproduct");
  const int nm = static_cast<int>(mp.m.size());
  const int ng = static_cast<int>(mp.g.size());
  const int n = nm * ng;
  auto label = [](int s, int u) {
    return BasisLabel::pair(BasisLabel::group_elem(s),
                            BasisLabel::delta_elem(u));
  };

  AlmostHopfStructure h;
  h.construction = "bicross";
  h.leaf_name = bicross_namer(mp, false);
  for (int s = 0; s < nm; ++s)
    for (int u = 0; u < ng; ++u) h.basis.push_back(label(s, u));
  for (int s = 0; s < nm; ++s)
    for (int u = 0; u < ng; ++u)
      if (mp.m.in_j[s] && mp.g.in_j[u]) h.j_basis.push_back(s * ng + u);

  h.mul.assign(n, std::vector<LinComb>(n));
  for (int s = 0; s < nm; ++s)
    for (int u = 0; u < ng; ++u)
      for (int t = 0; t < nm; ++t)
        for (int v = 0; v < ng; ++v)
          if (u == mp.right_table[t][v])
            h.mul[s * ng + u][t * ng + v] =
                LinComb::basis(label(mp.m.mul[s][t], v));

  h.comul.assign(n, LinComb());
  for (int s = 0; s < nm; ++s)
    for (int x = 0; x < ng; ++x)
      for (int y = 0; y < ng; ++y) {
        int u = mp.g.mul[x][y];
        h.comul[s * ng + u].add_term(
            BasisLabel::pair(label(s, x), label(mp.left_table[s][x], y)),
            Rational(1));
      }

  h.counit.assign(n, LinComb());
  for (int s = 0; s < nm; ++s)
    for (int u = 0; u < ng; ++u)
      if (mp.g.in_j[u])
        h.counit[s * ng + u] =
            LinComb::basis(label(mp.m.mul[s][mp.m.inv[s]], u));

  h.unit.assign(h.j_basis.size(), LinComb());
  for (std::size_t p = 0; p < h.j_basis.size(); ++p) {
    int j = h.j_basis[p] / ng;
    int target = h.j_basis[p] % ng;
    for (int z = 0; z < ng; ++z)
      if (mp.g.mul[z][mp.g.inv[z]] == target)
        h.unit[p] += LinComb::basis(label(j, z));
  }

  h.antipode.assign(n, LinComb());
  for (int s = 0; s < nm; ++s)
    for (int u = 0; u < ng; ++u)
      h.antipode[s * ng + u] =
          LinComb::basis(label(mp.m.inv[mp.left_table[s][u]],
                               mp.g.inv[mp.right_table[s][u]]));

  return BicrossAlgebra{std::move(h), mp};
}

DualBicrossAlgebra dual_bicrossproduct(const MatchedPair& mp) {
  require_matched(mp, "dual_bicrossproduct");
  const int nm = static_cast<int>(mp.m.size());
  const int ng = static_cast<int>(mp.g.size());
  const int n = nm * ng;
  auto label = [](int s, int u) {
    return BasisLabel::pair(BasisLabel::delta_elem(s),
                            BasisLabel::group_elem(u));
  };

  AlmostHopfStructure h;
  h.construction = "dualBicross";
  h.leaf_name = bicross_namer(mp, true);
  for (int s = 0; s < nm; ++s)
    for (int u = 0; u < ng; ++u) h.basis.push_back(label(s, u));
  for (int s = 0; s < nm; ++s)
    for (int u = 0; u < ng; ++u)
      if (mp.m.in_j[s] && mp.g.in_j[u]) h.j_basis.push_back(s * ng + u);

  h.mul.assign(n, std::vector<LinComb>(n));
  for (int s = 0; s < nm; ++s)
    for (int u = 0; u < ng; ++u)
      for (int v = 0; v < ng; ++v) {
        int t = mp.left_table[s][u];
        h.mul[s * ng + u][t * ng + v] =
            LinComb::basis(label(s, mp.g.mul[u][v]));
      }

  h.comul.assign(n, LinComb());
  for (int a = 0; a < nm; ++a)
    for (int b = 0; b < nm; ++b) {
      int s = mp.m.mul[a][b];
      for (int u = 0; u < ng; ++u)
        h.comul[s * ng + u].add_term(
            BasisLabel::pair(label(a, mp.right_table[b][u]), label(b, u)),
            Rational(1));
    }

  h.counit.assign(n, LinComb());
  for (int s = 0; s < nm; ++s)
    for (int u = 0; u < ng; ++u)
      if (mp.m.in_j[s])
        h.counit[s * ng + u] =
            LinComb::basis(label(s, mp.g.mul[u][mp.g.inv[u]]));

  h.unit.assign(h.j_basis.size(), LinComb());
  for (std::size_t p = 0; p < h.j_basis.size(); ++p) {
    int target = h.j_basis[p] / ng;
    int nu = h.j_basis[p] % ng;
    for (int a = 0; a < nm; ++a)
      if (mp.m.mul[a][mp.m.inv[a]] == target)
        h.unit[p] += LinComb::basis(label(a, nu));
  }

  h.antipode.assign(n, LinComb());
  for (int s = 0; s < nm; ++s)
    for (int u = 0; u < ng; ++u)
      h.antipode[s * ng + u] =
          LinComb::basis(label(mp.m.inv[mp.left_table[s][u]],
                               mp.g.inv[mp.right_table[s][u]]));

  return DualBicrossAlgebra{std::move(h), mp};
}

namespace {

int dual_index(const DualBicrossAlgebra& hp, const BasisLabel& l) {
  int i = hp.h.index_of(l);
  if (i < 0)
    throw std::invalid_argument("pairing: not a dual-basis label: " +
                                l.to_string());
  return i;
}

int primal_index(const BicrossAlgebra& h, const BasisLabel& l) {
  int i = h.h.index_of(l);
  if (i < 0)
    throw std::invalid_argument("pairing: not a basis label: " +
                                l.to_string());
  return i;
}

}  // namespace

Rational pairing(const DualBicrossAlgebra& hp, const LinComb& x,
                 const BicrossAlgebra& h, const LinComb& y) {
  if (!(hp.source == h.source))
    throw std::invalid_argument(
        "pairing: algebras built from different matched pairs");
  Rational acc;
  for (const auto& [lx, cx] : x) {
    int i = dual_index(hp, lx);
    for (const auto& [ly, cy] : y)
      if (i == primal_index(h, ly)) acc = acc + cx * cy;
  }
  return acc;
}

namespace {

// ⟨a⊗b, c⊗d⟩ = ⟨a,c⟩⟨b,d⟩ on combinations whose terms are tensor pairs.
Rational pairing_tensor(const DualBicrossAlgebra& hp, const LinComb& x,
                        const BicrossAlgebra& h, const LinComb& y) {
  Rational acc;
  for (const auto& [lx, cx] : x) {
    int i1 = dual_index(hp, lx.left());
    int i2 = dual_index(hp, lx.right());
    for (const auto& [ly, cy] : y)
      if (i1 == primal_index(h, ly.left()) &&
          i2 == primal_index(h, ly.right()))
        acc = acc + cx * cy;
  }
  return acc;
}

}  // namespace

CheckReport verify_duality(const DualBicrossAlgebra& hp,
                           const BicrossAlgebra& h) {
  if (!(hp.source == h.source))
    throw std::invalid_argument(
        "verify_duality: algebras built from different matched pairs");
  const int n = static_cast<int>(h.h.dim());
  CheckReport report;

  auto hb = [&](int i) { return LinComb::basis(h.h.basis[i]); };
  auto pb = [&](int i) { return LinComb::basis(hp.h.basis[i]); };

  RuleRecorder units("unit-counit-duality");
  for (int x = 0; x < n; ++x)
    for (int ja : h.h.j_basis) {
      Rational lhs = pairing(hp, hp.h.counit[x], h, hb(ja));
      Rational rhs = pairing(hp, pb(x), h, h.h.unit_lc(hb(ja)));
      if (!(lhs == rhs))
        units.fail({hp.h.render(hp.h.basis[x]), h.h.render(h.h.basis[ja])},
                   lhs.to_string(), rhs.to_string());
    }
  for (int ja : hp.h.j_basis)
    for (int y = 0; y < n; ++y) {
      Rational lhs = pairing(hp, hp.h.unit_lc(pb(ja)), h, hb(y));
      Rational rhs = pairing(hp, pb(ja), h, h.h.counit[y]);
      if (!(lhs == rhs))
        units.fail({hp.h.render(hp.h.basis[ja]), h.h.render(h.h.basis[y])},
                   lhs.to_string(), rhs.to_string());
    }
  units.finish(report);

  RuleRecorder antipode("antipode-duality");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Rational lhs = pairing(hp, hp.h.antipode[x], h, hb(y));
      Rational rhs = pairing(hp, pb(x), h, h.h.antipode[y]);
      if (!(lhs == rhs))
        antipode.fail({hp.h.render(hp.h.basis[x]), h.h.render(h.h.basis[y])},
                      lhs.to_string(), rhs.to_string());
    }
  antipode.finish(report);

  // The sparse product keeps these quadratic in practice: x'x'' is at most
  // one term, so only its support needs pairing against Δy.
  RuleRecorder prod("product-coproduct-duality");
  for (int x1 = 0; x1 < n; ++x1)
    for (int x2 = 0; x2 < n; ++x2) {
      const LinComb& px = hp.h.mul[x1][x2];
      LinComb xx = tensor(pb(x1), pb(x2));
      for (int y = 0; y < n; ++y) {
        Rational lhs = pairing(hp, px, h, hb(y));
        Rational rhs = pairing_tensor(hp, xx, h, h.h.comul[y]);
        if (!(lhs == rhs))
          prod.fail({hp.h.render(hp.h.basis[x1]), hp.h.render(hp.h.basis[x2]),
                     h.h.render(h.h.basis[y])},
                    lhs.to_string(), rhs.to_string());
      }
    }
  prod.finish(report);

  RuleRecorder coprod("coproduct-product-duality");
  for (int y1 = 0; y1 < n; ++y1)
    for (int y2 = 0; y2 < n; ++y2) {
      const LinComb& py = h.h.mul[y1][y2];
      LinComb yy = tensor(hb(y1), hb(y2));
      for (int x = 0; x < n; ++x) {
        Rational lhs = pairing(hp, pb(x), h, py);
        Rational rhs = pairing_tensor(hp, hp.h.comul[x], h, yy);
        if (!(lhs == rhs))
          coprod.fail({hp.h.render(hp.h.basis[x]), h.h.render(h.h.basis[y1]),
                       h.h.render(h.h.basis[y2])},
                      lhs.to_string(), rhs.to_string());
      }
    }
  coprod.finish(report);

  return report;
}

CheckReport verify_duality(const MatchedPair& mp) {
  return verify_duality(dual_bicrossproduct(mp), bicrossproduct(mp));
}

LinComb star(const BicrossAlgebra& h, const BasisLabel& x) {
  int i = h.h.index_of(x);
  if (i < 0)
    throw std::invalid_argument("star: not a basis label: " + x.to_string());
  const MatchedPair& mp = h.source;
  int ng = static_cast<int>(mp.g.size());
  int s = i / ng;
  int u = i % ng;
  return LinComb::basis(
      BasisLabel::pair(BasisLabel::group_elem(mp.m.inv[s]),
                       BasisLabel::delta_elem(mp.right_table[s][u])));
}

LinComb star(const BicrossAlgebra& h, const LinComb& x) {
  return apply_linear([&h](const BasisLabel& l) { return star(h, l); }, x);
}

LinComb star_dual(const DualBicrossAlgebra& hp, const BasisLabel& x) {
  int i = hp.h.index_of(x);
  if (i < 0)
    throw std::invalid_argument("star_dual: not a basis label: " +
                                x.to_string());
  const MatchedPair& mp = hp.source;
  int ng = static_cast<int>(mp.g.size());
  int s = i / ng;
  int u = i % ng;
  return LinComb::basis(
      BasisLabel::pair(BasisLabel::delta_elem(mp.left_table[s][u]),
                       BasisLabel::group_elem(mp.g.inv[u])));
}

LinComb star_dual(const DualBicrossAlgebra& hp, const LinComb& x) {
  return apply_linear(
      [&hp](const BasisLabel& l) { return star_dual(hp, l); }, x);
}

namespace {

// Star rules against one algebra with an explicit table; `prefix`
// distinguishes the primal and dual reports.
void star_rules(const AlmostHopfStructure& a, const std::vector<LinComb>& tab,
                const std::string& prefix, CheckReport& report) {
  const int n = static_cast<int>(a.dim());
  if (tab.size() != a.dim())
    throw std::invalid_argument("star table size mismatch");
  LabelFn star_fn = [&](const BasisLabel& l) {
    int i = a.index_of(l);
    if (i < 0)
      throw std::invalid_argument("star table: not a basis label: " +
                                  l.to_string());
    return tab[i];
  };

  RuleRecorder invol(prefix + "involution");
  for (int x = 0; x < n; ++x) {
    LinComb twice = apply_linear(star_fn, tab[x]);
    if (twice != LinComb::basis(a.basis[x]))
      invol.fail({a.render(a.basis[x])}, a.render(twice),
                 a.render(a.basis[x]));
  }
  invol.finish(report);

  RuleRecorder antimul(prefix + "antimultiplicative");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      LinComb lhs = apply_linear(star_fn, a.mul[x][y]);
      LinComb rhs = a.mul_lc(tab[y], tab[x]);
      if (lhs != rhs)
        antimul.fail({a.render(a.basis[x]), a.render(a.basis[y])},
                     a.render(lhs), a.render(rhs));
    }
  antimul.finish(report);

  RuleRecorder comul(prefix + "comultiplicative");
  for (int x = 0; x < n; ++x) {
    LinComb lhs = a.comul_lc(tab[x]);
    LinComb rhs = apply_to_left(star_fn, apply_to_right(star_fn, a.comul[x]));
    if (lhs != rhs)
      comul.fail({a.render(a.basis[x])}, a.render(lhs), a.render(rhs));
  }
  comul.finish(report);

  RuleRecorder unit(prefix + "unit");
  for (std::size_t p = 0; p < a.j_basis.size(); ++p) {
    const BasisLabel& ja = a.basis[a.j_basis[p]];
    try {
      LinComb lhs = apply_linear(star_fn, a.unit[p]);
      LinComb rhs = a.unit_lc(tab[a.j_basis[p]]);
      if (lhs != rhs) unit.fail({a.render(ja)}, a.render(lhs), a.render(rhs));
    } catch (const PreconditionError&) {
      unit.fail({a.render(ja)}, a.render(tab[a.j_basis[p]]),
                "a combination of j-basis elements");
    }
  }
  unit.finish(report);

  RuleRecorder counit(prefix + "counit");
  for (int x = 0; x < n; ++x) {
    LinComb lhs = a.counit_lc(tab[x]);
    LinComb rhs = apply_linear(star_fn, a.counit[x]);
    if (lhs != rhs)
      counit.fail({a.render(a.basis[x])}, a.render(lhs), a.render(rhs));
  }
  counit.finish(report);

  RuleRecorder antipode(prefix + "antipode");
  for (int x = 0; x < n; ++x) {
    LinComb lhs = apply_linear(star_fn, a.antipode[x]);
    LinComb rhs = a.antipode_lc(tab[x]);
    if (lhs != rhs)
      antipode.fail({a.render(a.basis[x])}, a.render(lhs), a.render(rhs));
  }
  antipode.finish(report);
}

}  // namespace

CheckReport verify_star_tables(const BicrossAlgebra& h,
                               const DualBicrossAlgebra& hp,
                               const std::vector<LinComb>& star_h,
                               const std::vector<LinComb>& star_hp) {
  CheckReport report;
  star_rules(h.h, star_h, "star-", report);
  star_rules(hp.h, star_hp, "star-dual-", report);
  return report;
}

CheckReport verify_star(const MatchedPair& mp) {
  BicrossAlgebra h = bicrossproduct(mp);
  DualBicrossAlgebra hp = dual_bicrossproduct(mp);
  std::vector<LinComb> star_h, star_hp;
  for (const auto& l : h.h.basis) star_h.push_back(star(h, l));
  for (const auto& l : hp.h.basis) star_hp.push_back(star_dual(hp, l));
  return verify_star_tables(h, hp, star_h, star_hp);
}

namespace {

void validate_inverse_shapes(const MatchedPair& mp, const InverseData& data) {
  const int nm = static_cast<int>(mp.m.size());
  const int ng = static_cast<int>(mp.g.size());
  if (data.inv_g.size() != mp.g.size())
    throw std::invalid_argument("inverse data: inv_g needs one entry per G");
  if (data.inv_m.size() != mp.m.size())
    throw std::invalid_argument("inverse data: inv_m needs one entry per M");
  if (data.dx_inverse.size() != mp.g.size() * mp.m.size())
    throw std::invalid_argument(
        "inverse data: dx_inverse needs one entry per doublecross element");
  for (int v : data.inv_g)
    if (v < 0 || v >= nm)
      throw std::invalid_argument("inverse data: inv_g entry out of range");
  for (int v : data.inv_m)
    if (v < 0 || v >= ng)
      throw std::invalid_argument("inverse data: inv_m entry out of range");
  for (int v : data.dx_inverse)
    if (v < 0 || v >= nm * ng)
      throw std::invalid_argument(
          "inverse data: dx_inverse entry out of range");
}

// Two-sided identity of an almost group's multiplication table, -1 if none.
int find_identity(const AlmostGroup& a) {
  const int n = static_cast<int>(a.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = a.mul[e][x] == x && a.mul[x][e] == x;
    if (ok) return e;
  }
  return -1;
}

}  // namespace

InverseData derive_inverse_data(const MatchedPair& mp) {
  AlmostGroup dx = doublecross(mp);
  const int nm = static_cast<int>(mp.m.size());
  const int n = static_cast<int>(dx.size());

  int e = find_identity(dx);
  if (e < 0)
    throw PreconditionError(
        "derive_inverse_data: doublecross product has no identity");

  InverseData data;
  data.dx_inverse.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (dx.mul[x][y] == e && dx.mul[y][x] == e) {
        data.dx_inverse[x] = y;
        break;
      }
    if (data.dx_inverse[x] < 0)
      throw PreconditionError(
          "derive_inverse_data: no two-sided inverse for " + dx.elements[x]);
  }

  const int eg = e / nm;  // G part of the identity pair
  const int em = e % nm;  // M part
  data.inv_g.assign(mp.g.size(), -1);
  for (std::size_t u = 0; u < mp.g.size(); ++u) {
    int inv = data.dx_inverse[static_cast<int>(u) * nm + em];
    int p = inv / nm;
    int q = inv % nm;
    if (p == eg) {
      data.inv_g[u] = q;
    } else if (q == em) {
      int candidate = mp.m.index_of(mp.g.elements[p]);
      if (candidate < 0)
        throw PreconditionError(
            "derive_inverse_data: inverse of embedded " + mp.g.elements[u] +
            " has no M counterpart for " + mp.g.elements[p]);
      data.inv_g[u] = candidate;
    } else {
      throw PreconditionError(
          "derive_inverse_data: inverse of embedded " + mp.g.elements[u] +
          " is not supported on either embedding");
    }
  }

  data.inv_m.assign(mp.m.size(), -1);
  for (std::size_t s = 0; s < mp.m.size(); ++s) {
    int inv = data.dx_inverse[eg * nm + static_cast<int>(s)];
    int p = inv / nm;
    int q = inv % nm;
    if (q == em) {
      data.inv_m[s] = p;
    } else if (p == eg) {
      int candidate = mp.g.index_of(mp.m.elements[q]);
      if (candidate < 0)
        throw PreconditionError(
            "derive_inverse_data: inverse of embedded " + mp.m.elements[s] +
            " has no G counterpart for " + mp.m.elements[q]);
      data.inv_m[s] = candidate;
    } else {
      throw PreconditionError(
          "derive_inverse_data: inverse of embedded " + mp.m.elements[s] +
          " is not supported on either embedding");
    }
  }

  return data;
}

CheckReport check_mutually_inverse(const MatchedPair& mp,
                                   const InverseData& data) {
  validate_inverse_shapes(mp, data);
  AlmostGroup dx = doublecross(mp);
  const int nm = static_cast<int>(mp.m.size());
  const int ng = static_cast<int>(mp.g.size());
  const int n = static_cast<int>(dx.size());
  CheckReport report;

  auto gl = [&](int u) { return mp.g.elements[u]; };
  auto ml = [&](int s) { return mp.m.elements[s]; };

  RuleRecorder group_rule("dx-group");
  int e = find_identity(dx);
  if (e < 0) {
    group_rule.fail({}, "an identity element", "none exists");
  } else {
    for (int x = 0; x < n; ++x) {
      int y = data.dx_inverse[x];
      if (dx.mul[x][y] != e || dx.mul[y][x] != e)
        group_rule.fail({dx.elements[x]},
                        dx.elements[dx.mul[x][y]] + " and " +
                            dx.elements[dx.mul[y][x]],
                        dx.elements[e]);
    }
  }
  group_rule.finish(report);

  RuleRecorder maps("inverse-maps");
  for (int u = 0; u < ng; ++u)
    if (data.inv_m[data.inv_g[u]] != u)
      maps.fail({"u=" + gl(u)}, gl(data.inv_m[data.inv_g[u]]), gl(u));
  for (int s = 0; s < nm; ++s)
    if (data.inv_g[data.inv_m[s]] != s)
      maps.fail({"s=" + ml(s)}, ml(data.inv_g[data.inv_m[s]]), ml(s));
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < ng; ++v) {
      int lhs = data.inv_g[mp.g.mul[u][v]];
      int rhs = mp.m.mul[data.inv_g[v]][data.inv_g[u]];
      if (lhs != rhs)
        maps.fail({"u=" + gl(u), "v=" + gl(v)}, ml(lhs), ml(rhs));
    }
  for (int s = 0; s < nm; ++s)
    for (int t = 0; t < nm; ++t) {
      int lhs = data.inv_m[mp.m.mul[s][t]];
      int rhs = mp.g.mul[data.inv_m[t]][data.inv_m[s]];
      if (lhs != rhs)
        maps.fail({"s=" + ml(s), "t=" + ml(t)}, gl(lhs), gl(rhs));
    }
  for (int u = 0; u < ng; ++u)
    if (data.inv_g[mp.g.inv[u]] != mp.m.inv[data.inv_g[u]])
      maps.fail({"u=" + gl(u) + "^i"}, ml(data.inv_g[mp.g.inv[u]]),
                ml(mp.m.inv[data.inv_g[u]]));
  for (int s = 0; s < nm; ++s)
    if (data.inv_m[mp.m.inv[s]] != mp.g.inv[data.inv_m[s]])
      maps.fail({"s=" + ml(s) + "^i"}, gl(data.inv_m[mp.m.inv[s]]),
                gl(mp.g.inv[data.inv_m[s]]));
  maps.finish(report);

  RuleRecorder jbij("inverse-j-bijection");
  std::vector<int> hit(nm, 0);
  for (int u = 0; u < ng; ++u) {
    if (!mp.g.in_j[u]) continue;
    int s = data.inv_g[u];
    if (!mp.m.in_j[s]) {
      jbij.fail({"u=" + gl(u)}, ml(s), "an element of J_M");
      continue;
    }
    if (++hit[s] > 1) jbij.fail({"u=" + gl(u)}, ml(s), "a fresh J_M element");
  }
  for (int s = 0; s < nm; ++s)
    if (mp.m.in_j[s] && hit[s] == 0)
      jbij.fail({"j=" + ml(s)}, "no J_G preimage", "one");
  jbij.finish(report);

  RuleRecorder invol("involution-compatible");
  for (int x = 0; x < n; ++x) {
    int lhs = data.dx_inverse[dx.inv[x]];
    int rhs = dx.inv[data.dx_inverse[x]];
    if (lhs != rhs)
      invol.fail({dx.elements[x]}, dx.elements[lhs], dx.elements[rhs]);
  }
  invol.finish(report);

  RuleRecorder act("action-inversion");
  for (int s = 0; s < nm; ++s)
    for (int u = 0; u < ng; ++u) {
      int ui = data.inv_g[u];
      int si = data.inv_m[s];
      int lhs_r = mp.right_table[ui][si];
      int rhs_r = data.inv_m[mp.left_table[s][u]];
      if (lhs_r != rhs_r)
        act.fail({"s=" + ml(s), "u=" + gl(u)}, gl(lhs_r), gl(rhs_r));
      int lhs_l = mp.left_table[ui][si];
      int rhs_l = data.inv_g[mp.right_table[s][u]];
      if (lhs_l != rhs_l)
        act.fail({"s=" + ml(s), "u=" + gl(u)}, ml(lhs_l), ml(rhs_l));
    }
  act.finish(report);

  return report;
}

namespace {

BasisLabel t_label(const InverseData& data, int s, int u) {
  return BasisLabel::pair(BasisLabel::delta_elem(data.inv_g[u]),
                          BasisLabel::group_elem(data.inv_m[s]));
}

}  // namespace

LinComb t_map(const BicrossAlgebra& h, const DualBicrossAlgebra& hp,
              const InverseData& data, const BasisLabel& x) {
  validate_inverse_shapes(h.source, data);
  if (!(hp.source == h.source))
    throw std::invalid_argument(
        "t_map: algebras built from different matched pairs");
  int i = h.h.index_of(x);
  if (i < 0)
    throw std::invalid_argument("t_map: not a basis label: " + x.to_string());
  int ng = static_cast<int>(h.source.g.size());
  return LinComb::basis(t_label(data, i / ng, i % ng));
}

LinComb t_map(const BicrossAlgebra& h, const DualBicrossAlgebra& hp,
              const InverseData& data, const LinComb& x) {
  return apply_linear(
      [&](const BasisLabel& l) { return t_map(h, hp, data, l); }, x);
}

LinComb t_j_map(const BicrossAlgebra& h, const DualBicrossAlgebra& hp,
                const InverseData& data, const BasisLabel& x) {
  if (!h.h.label_in_j(x))
    throw PreconditionError("t_j_map: argument is not an H_J basis label: " +
                            h.h.render(x));
  return t_map(h, hp, data, x);
}

CheckReport check_t_properties(const BicrossAlgebra& h,
                               const DualBicrossAlgebra& hp,
                               const InverseData& data) {
  validate_inverse_shapes(h.source, data);
  if (!(hp.source == h.source))
    throw std::invalid_argument(
        "check_t_properties: algebras built from different matched pairs");
  const int n = static_cast<int>(h.h.dim());
  CheckReport report;

  LabelFn t_fn = [&](const BasisLabel& l) { return t_map(h, hp, data, l); };
  auto tb = [&](int i) { return t_map(h, hp, data, h.h.basis[i]); };

  RuleRecorder antimul("t-antimultiplicative");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      LinComb lhs = apply_linear(t_fn, h.h.mul[x][y]);
      LinComb rhs = hp.h.mul_lc(tb(y), tb(x));
      if (lhs != rhs)
        antimul.fail({h.h.render(h.h.basis[x]), h.h.render(h.h.basis[y])},
                     hp.h.render(lhs), hp.h.render(rhs));
    }
  antimul.finish(report);

  RuleRecorder anticomul("t-anticomultiplicative");
  for (int x = 0; x < n; ++x) {
    LinComb lhs = apply_to_left(t_fn, apply_to_right(t_fn, h.h.comul[x]));
    LinComb rhs = tensor_swap(hp.h.comul_lc(tb(x)));
    if (lhs != rhs)
      anticomul.fail({h.h.render(h.h.basis[x])}, hp.h.render(lhs),
                     hp.h.render(rhs));
  }
  anticomul.finish(report);

  RuleRecorder antipode("t-antipode-commute");
  for (int x = 0; x < n; ++x) {
    LinComb lhs = hp.h.antipode_lc(tb(x));
    LinComb rhs = apply_linear(t_fn, h.h.antipode[x]);
    if (lhs != rhs)
      antipode.fail({h.h.render(h.h.basis[x])}, hp.h.render(lhs),
                    hp.h.render(rhs));
  }
  antipode.finish(report);

  RuleRecorder star_rule("t-star-commute");
  for (int x = 0; x < n; ++x) {
    LinComb lhs = star_dual(hp, tb(x));
    LinComb rhs = apply_linear(t_fn, star(h, h.h.basis[x]));
    if (lhs != rhs)
      star_rule.fail({h.h.render(h.h.basis[x])}, hp.h.render(lhs),
                     hp.h.render(rhs));
  }
  star_rule.finish(report);

  RuleRecorder unit("t-unit");
  for (std::size_t p = 0; p < h.h.j_basis.size(); ++p) {
    const BasisLabel& ja = h.h.basis[h.h.j_basis[p]];
    try {
      LinComb lhs = apply_linear(t_fn, h.h.unit[p]);
      LinComb rhs = hp.h.unit_lc(t_map(h, hp, data, ja));
      if (lhs != rhs)
        unit.fail({h.h.render(ja)}, hp.h.render(lhs), hp.h.render(rhs));
    } catch (const PreconditionError&) {
      unit.fail({h.h.render(ja)}, hp.h.render(t_map(h, hp, data, ja)),
                "a combination of dual j-basis elements");
    }
  }
  unit.finish(report);

  RuleRecorder counit("t-counit");
  for (int x = 0; x < n; ++x) {
    LinComb lhs = hp.h.counit_lc(tb(x));
    LinComb rhs = apply_linear(t_fn, h.h.counit[x]);
    if (lhs != rhs)
      counit.fail({h.h.render(h.h.basis[x])}, hp.h.render(lhs),
                  hp.h.render(rhs));
  }
  counit.finish(report);

  return report;
}

CheckReport verify_self_duality(const MatchedPair& mp,
                                const InverseData& data) {
  validate_inverse_shapes(mp, data);
  BicrossAlgebra h = bicrossproduct(mp);
  DualBicrossAlgebra hp = dual_bicrossproduct(mp);
  const int n = static_cast<int>(h.h.dim());
  CheckReport report;

  // TS on basis labels: S is basis-to-basis, then T is basis-to-basis.
  std::vector<int> ts(n);
  for (int x = 0; x < n; ++x) {
    const LinComb& sx = h.h.antipode[x];
    LinComb image = t_map(h, hp, data, sx);
    ts[x] = hp.h.index_of(image.begin()->first);
  }
  LabelFn ts_fn = [&](const BasisLabel& l) {
    int i = h.h.index_of(l);
    if (i < 0)
      throw std::invalid_argument("TS: not a basis label: " + l.to_string());
    return LinComb::basis(hp.h.basis[ts[i]]);
  };

  RuleRecorder bij("ts-bijective");
  std::vector<int> seen(n, -1);
  for (int x = 0; x < n; ++x) {
    if (seen[ts[x]] >= 0)
      bij.fail({h.h.render(h.h.basis[x]), h.h.render(h.h.basis[seen[ts[x]]])},
               hp.h.render(hp.h.basis[ts[x]]), "a distinct image");
    else
      seen[ts[x]] = x;
  }
  bij.finish(report);

  RuleRecorder mult("ts-multiplicative");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      LinComb lhs = apply_linear(ts_fn, h.h.mul[x][y]);
      LinComb rhs = hp.h.mul[ts[x]][ts[y]];
      if (lhs != rhs)
        mult.fail({h.h.render(h.h.basis[x]), h.h.render(h.h.basis[y])},
                  hp.h.render(lhs), hp.h.render(rhs));
    }
  mult.finish(report);

  RuleRecorder comult("ts-comultiplicative");
  for (int x = 0; x < n; ++x) {
    LinComb lhs = apply_to_left(ts_fn, apply_to_right(ts_fn, h.h.comul[x]));
    const LinComb& rhs = hp.h.comul[ts[x]];
    if (lhs != rhs)
      comult.fail({h.h.render(h.h.basis[x])}, hp.h.render(lhs),
                  hp.h.render(rhs));
  }
  comult.finish(report);

  RuleRecorder counit("ts-counit");
  for (int x = 0; x < n; ++x) {
    const LinComb& lhs = hp.h.counit[ts[x]];
    LinComb rhs = apply_linear(ts_fn, h.h.counit[x]);
    if (lhs != rhs)
      counit.fail({h.h.render(h.h.basis[x])}, hp.h.render(lhs),
                  hp.h.render(rhs));
  }
  counit.finish(report);

  RuleRecorder unit("ts-unit");
  for (std::size_t p = 0; p < h.h.j_basis.size(); ++p) {
    const BasisLabel& ja = h.h.basis[h.h.j_basis[p]];
    try {
      LinComb lhs = apply_linear(ts_fn, h.h.unit[p]);
      LinComb rhs = hp.h.unit_lc(LinComb::basis(hp.h.basis[ts[h.h.j_basis[p]]]));
      if (lhs != rhs)
        unit.fail({h.h.render(ja)}, hp.h.render(lhs), hp.h.render(rhs));
    } catch (const PreconditionError&) {
      unit.fail({h.h.render(ja)},
                hp.h.render(hp.h.basis[ts[h.h.j_basis[p]]]),
                "a dual j-basis element");
    }
  }
  unit.finish(report);

  RuleRecorder antipode("ts-antipode");
  for (int x = 0; x < n; ++x) {
    LinComb lhs = hp.h.antipode[ts[x]];
    LinComb rhs = apply_linear(ts_fn, h.h.antipode[x]);
    if (lhs != rhs)
      antipode.fail({h.h.render(h.h.basis[x])}, hp.h.render(lhs),
                    hp.h.render(rhs));
  }
  antipode.finish(report);

  return report;
}

CheckReport verify_self_duality(const MatchedPair& mp) {
  return verify_self_duality(mp, derive_inverse_data(mp));
}

}  // namespace almosthopf
