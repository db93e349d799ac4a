#include "almosthopf/hopf.hpp"

#include <algorithm>
#include <stdexcept>

#include "almosthopf/errors.hpp"

namespace almosthopf {

namespace {

// Constructions keep basis labels strictly increasing, which is what lets
// index_of use binary search; hand-assembled structures must do the same.
void validate_structure(const AlmostHopfStructure& h) {
  const std::size_t n = h.basis.size();
  if (n == 0) throw std::invalid_argument("hopf structure: empty basis");
  for (std::size_t k = 1; k < n; ++k)
    if (!(h.basis[k - 1] < h.basis[k]))
      throw std::invalid_argument("hopf structure: basis not sorted");
  if (h.mul.size() != n || h.comul.size() != n || h.counit.size() != n ||
      h.antipode.size() != n)
    throw std::invalid_argument("hopf structure: table sizes disagree");
  for (const auto& row : h.mul)
    if (row.size() != n)
      throw std::invalid_argument("hopf structure: mul table is not square");
  if (!std::is_sorted(h.j_basis.begin(), h.j_basis.end()) ||
      std::adjacent_find(h.j_basis.begin(), h.j_basis.end()) !=
          h.j_basis.end())
    throw std::invalid_argument("hopf structure: j_basis not sorted unique");
  for (int j : h.j_basis)
    if (j < 0 || static_cast<std::size_t>(j) >= n)
      throw std::invalid_argument("hopf structure: j_basis out of range");
  if (h.unit.size() != h.j_basis.size())
    throw std::invalid_argument("hopf structure: unit table size mismatch");

  auto check_vector = [&](const LinComb& v, const char* table) {
    for (const auto& [l, c] : v)
      if (h.index_of(l) < 0)
        throw std::invalid_argument(std::string("hopf structure: ") + table +
                                    " value uses non-basis label " +
                                    l.to_string());
  };
  auto check_tensor = [&](const LinComb& v, const char* table) {
    for (const auto& [l, c] : v) {
      if (l.kind() != LabelKind::Pair || h.index_of(l.left()) < 0 ||
          h.index_of(l.right()) < 0)
        throw std::invalid_argument(std::string("hopf structure: ") + table +
                                    " value is not in H(x)H: " +
                                    l.to_string());
    }
  };
  for (const auto& row : h.mul)
    for (const auto& v : row) check_vector(v, "mul");
  for (const auto& v : h.comul) check_tensor(v, "comul");
  for (const auto& v : h.counit) check_vector(v, "counit");
  for (const auto& v : h.unit) check_vector(v, "unit");
  for (const auto& v : h.antipode) check_vector(v, "antipode");
}

}  // namespace

int AlmostHopfStructure::index_of(const BasisLabel& l) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), l);
  if (it == basis.end() || !(*it == l)) return -1;
  return static_cast<int>(it - basis.begin());
}

bool AlmostHopfStructure::label_in_j(const BasisLabel& l) const {
  return j_position(l) >= 0;
}

int AlmostHopfStructure::j_position(const BasisLabel& l) const {
  int idx = index_of(l);
  if (idx < 0) return -1;
  auto it = std::lower_bound(j_basis.begin(), j_basis.end(), idx);
  if (it == j_basis.end() || *it != idx) return -1;
  return static_cast<int>(it - j_basis.begin());
}

namespace {

int require_index(const AlmostHopfStructure& h, const BasisLabel& l) {
  int idx = h.index_of(l);
  if (idx < 0)
    throw std::invalid_argument("hopf structure: label not in basis: " +
                                l.to_string());
  return idx;
}

}  // namespace

LinComb AlmostHopfStructure::mul_lc(const LinComb& a, const LinComb& b) const {
  LinComb r;
  for (const auto& [la, ca] : a) {
    int i = require_index(*this, la);
    for (const auto& [lb, cb] : b)
      r += scale(ca * cb, mul[i][require_index(*this, lb)]);
  }
  return r;
}

LinComb AlmostHopfStructure::comul_lc(const LinComb& a) const {
  LinComb r;
  for (const auto& [l, c] : a) r += scale(c, comul[require_index(*this, l)]);
  return r;
}

LinComb AlmostHopfStructure::counit_lc(const LinComb& a) const {
  LinComb r;
  for (const auto& [l, c] : a) r += scale(c, counit[require_index(*this, l)]);
  return r;
}

LinComb AlmostHopfStructure::antipode_lc(const LinComb& a) const {
  LinComb r;
  for (const auto& [l, c] : a) r += scale(c, antipode[require_index(*this, l)]);
  return r;
}

LinComb AlmostHopfStructure::unit_lc(const LinComb& a) const {
  LinComb r;
  for (const auto& [l, c] : a) {
    int pos = j_position(l);
    if (pos < 0)
      throw PreconditionError("unit: argument not in the j-basis span: " +
                              l.to_string());
    r += scale(c, unit[pos]);
  }
  return r;
}

LinComb AlmostHopfStructure::mul_tensor(const LinComb& a,
                                        const LinComb& b) const {
  LinComb r;
  for (const auto& [la, ca] : a) {
    if (la.kind() != LabelKind::Pair)
      throw std::logic_error("mul_tensor: term is not a tensor");
    int i1 = require_index(*this, la.left());
    int i2 = require_index(*this, la.right());
    for (const auto& [lb, cb] : b) {
      if (lb.kind() != LabelKind::Pair)
        throw std::logic_error("mul_tensor: term is not a tensor");
      int j1 = require_index(*this, lb.left());
      int j2 = require_index(*this, lb.right());
      r += scale(ca * cb, tensor(mul[i1][j1], mul[i2][j2]));
    }
  }
  return r;
}

LinComb AlmostHopfStructure::fold_mul(const LinComb& a) const {
  LinComb r;
  for (const auto& [l, c] : a) {
    if (l.kind() != LabelKind::Pair)
      throw std::logic_error("fold_mul: term is not a tensor");
    r += scale(c, mul[require_index(*this, l.left())]
                     [require_index(*this, l.right())]);
  }
  return r;
}

std::string AlmostHopfStructure::render(const LinComb& a) const {
  return leaf_name ? a.to_string(leaf_name) : a.to_string();
}

std::string AlmostHopfStructure::render(const BasisLabel& l) const {
  return leaf_name ? l.to_string(leaf_name) : l.to_string();
}

namespace {

void require_verified(const AlmostGroup& g, const char* who) {
  AxiomReport report = verify_axioms(g);
  if (report.passed) return;
  std::string first;
  for (const auto& c : report.checks)
    if (!c.passed) {
      first = c.rule;
      break;
    }
  throw PreconditionError(std::string(who) +
                          ": structure fails verification (first failing "
                          "rule: " +
                          first + ")");
}

std::function<std::string(LabelKind, int)> leaf_namer(
    std::vector<std::string> group_labels, std::vector<std::string> delta_labels) {
  return [group_labels = std::move(group_labels),
          delta_labels = std::move(delta_labels)](LabelKind k, int i) {
    if (k == LabelKind::DeltaElem) return "d(" + delta_labels.at(i) + ")";
    return group_labels.at(i);
  };
}

}  // namespace

AlmostHopfStructure function_algebra(const AlmostGroup& g) {
  require_verified(g, "function_algebra");
  const int n = static_cast<int>(g.size());

  AlmostHopfStructure h;
  h.construction = "functionAlgebra";
  h.leaf_name = leaf_namer(g.elements, g.elements);
  for (int x = 0; x < n; ++x) h.basis.push_back(BasisLabel::delta_elem(x));
  for (int x = 0; x < n; ++x)
    if (g.in_j[x]) h.j_basis.push_back(x);

  h.mul.assign(n, std::vector<LinComb>(n));
  for (int x = 0; x < n; ++x) h.mul[x][x] = LinComb::basis(h.basis[x]);

  h.comul.assign(n, LinComb());
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z)
      h.comul[g.mul[y][z]].add_term(
          BasisLabel::pair(h.basis[y], h.basis[z]), Rational(1));

  h.counit.assign(n, LinComb());
  for (int x = 0; x < n; ++x)
    if (g.in_j[x]) h.counit[x] = LinComb::basis(h.basis[x]);

  h.unit.assign(h.j_basis.size(), LinComb());
  for (std::size_t p = 0; p < h.j_basis.size(); ++p)
    for (int z = 0; z < n; ++z)
      if (g.mul[z][g.inv[z]] == h.j_basis[p])
        h.unit[p] += LinComb::basis(h.basis[z]);

  h.antipode.assign(n, LinComb());
  for (int x = 0; x < n; ++x)
    h.antipode[x] = LinComb::basis(h.basis[g.inv[x]]);

  return h;
}

AlmostHopfStructure group_algebra(const AlmostGroup& g) {
  require_verified(g, "group_algebra");
  const int n = static_cast<int>(g.size());

  AlmostHopfStructure h;
  h.construction = "groupAlgebra";
  h.leaf_name = leaf_namer(g.elements, g.elements);
  for (int x = 0; x < n; ++x) h.basis.push_back(BasisLabel::group_elem(x));
  for (int x = 0; x < n; ++x)
    if (g.in_j[x]) h.j_basis.push_back(x);

  h.mul.assign(n, std::vector<LinComb>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      h.mul[x][y] = LinComb::basis(h.basis[g.mul[x][y]]);

  h.comul.assign(n, LinComb());
  for (int x = 0; x < n; ++x)
    h.comul[x] = LinComb::basis(BasisLabel::pair(h.basis[x], h.basis[x]));

  h.counit.assign(n, LinComb());
  for (int x = 0; x < n; ++x)
    h.counit[x] = LinComb::basis(h.basis[g.mul[x][g.inv[x]]]);

  h.unit.assign(h.j_basis.size(), LinComb());
  for (std::size_t p = 0; p < h.j_basis.size(); ++p)
    h.unit[p] = LinComb::basis(h.basis[h.j_basis[p]]);

  h.antipode.assign(n, LinComb());
  for (int x = 0; x < n; ++x)
    h.antipode[x] = LinComb::basis(h.basis[g.inv[x]]);

  return h;
}

HopfReport verify_hopf(const AlmostHopfStructure& h) {
  validate_structure(h);
  const int n = static_cast<int>(h.dim());
  HopfReport report;

  auto wlabel = [&](int idx) { return h.render(h.basis[idx]); };

  RuleRecorder hj_comm("hj-commutative");
  RuleRecorder hj_closed("hj-closed");
  for (int a : h.j_basis)
    for (int b : h.j_basis) {
      const LinComb& ab = h.mul[a][b];
      const LinComb& ba = h.mul[b][a];
      if (ab != ba)
        hj_comm.fail({wlabel(a), wlabel(b)}, h.render(ab), h.render(ba));
      for (const auto& [l, c] : ab)
        if (!h.label_in_j(l))
          hj_closed.fail({wlabel(a), wlabel(b)}, h.render(ab),
                         "a combination of j-basis elements");
    }
  hj_comm.finish(report);
  hj_closed.finish(report);

  RuleRecorder assoc("assoc");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const LinComb& ab = h.mul[a][b];
      for (int c = 0; c < n; ++c) {
        LinComb l = h.mul_lc(ab, LinComb::basis(h.basis[c]));
        LinComb r = h.mul_lc(LinComb::basis(h.basis[a]), h.mul[b][c]);
        if (l != r)
          assoc.fail({wlabel(a), wlabel(b), wlabel(c)}, h.render(l),
                     h.render(r));
      }
    }
  assoc.finish(report);

  LabelFn comul_fn = [&h](const BasisLabel& l) {
    return h.comul[require_index(h, l)];
  };
  LabelFn counit_fn = [&h](const BasisLabel& l) {
    return h.counit[require_index(h, l)];
  };
  LabelFn antipode_fn = [&h](const BasisLabel& l) {
    return h.antipode[require_index(h, l)];
  };

  RuleRecorder coassoc("coassoc");
  for (int x = 0; x < n; ++x) {
    LinComb l = assoc_to_right(apply_to_left(comul_fn, h.comul[x]));
    LinComb r = apply_to_right(comul_fn, h.comul[x]);
    if (l != r) coassoc.fail({wlabel(x)}, h.render(l), h.render(r));
  }
  coassoc.finish(report);

  RuleRecorder twist("counit-twisted");
  for (int x = 0; x < n; ++x) {
    LinComb l = apply_to_left(counit_fn, h.comul[x]);
    LinComb r = tensor_swap(apply_to_right(counit_fn, h.comul[x]));
    if (l != r) twist.fail({wlabel(x)}, h.render(l), h.render(r));
  }
  twist.finish(report);

  RuleRecorder exchange("unit-exchange");
  for (std::size_t p = 0; p < h.j_basis.size(); ++p)
    for (int x = 0; x < n; ++x) {
      LinComb l = h.mul_lc(h.unit[p], LinComb::basis(h.basis[x]));
      LinComb r = h.mul_lc(LinComb::basis(h.basis[x]), h.unit[p]);
      if (l != r)
        exchange.fail({wlabel(h.j_basis[p]), wlabel(x)}, h.render(l),
                      h.render(r));
    }
  exchange.finish(report);

  RuleRecorder antipode("antipode");
  for (int x = 0; x < n; ++x) {
    LinComb l = h.fold_mul(apply_to_left(antipode_fn, h.comul[x]));
    LinComb m = h.fold_mul(apply_to_right(antipode_fn, h.comul[x]));
    try {
      LinComb r = h.unit_lc(h.counit[x]);
      if (l != r) antipode.fail({wlabel(x)}, h.render(l), h.render(r));
      if (m != r) antipode.fail({wlabel(x)}, h.render(m), h.render(r));
    } catch (const PreconditionError&) {
      antipode.fail({wlabel(x)}, h.render(h.counit[x]),
                    "a j-span counit value");
    }
  }
  antipode.finish(report);

  RuleRecorder comul_mult("comul-multiplicative");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      LinComb l = h.comul_lc(h.mul[x][y]);
      LinComb r = h.mul_tensor(h.comul[x], h.comul[y]);
      if (l != r)
        comul_mult.fail({wlabel(x), wlabel(y)}, h.render(l), h.render(r));
    }
  comul_mult.finish(report);

  RuleRecorder counit_mult("counit-multiplicative");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      LinComb l = h.counit_lc(h.mul[x][y]);
      LinComb r = h.mul_lc(h.counit[x], h.counit[y]);
      if (l != r)
        counit_mult.fail({wlabel(x), wlabel(y)}, h.render(l), h.render(r));
    }
  counit_mult.finish(report);

  RuleRecorder unit_mult("unit-multiplicative");
  for (int a : h.j_basis)
    for (int b : h.j_basis) {
      try {
        LinComb l = h.unit_lc(h.mul[a][b]);
        LinComb r = h.mul_lc(h.unit[h.j_position(h.basis[a])],
                             h.unit[h.j_position(h.basis[b])]);
        if (l != r)
          unit_mult.fail({wlabel(a), wlabel(b)}, h.render(l), h.render(r));
      } catch (const PreconditionError&) {
        unit_mult.fail({wlabel(a), wlabel(b)}, h.render(h.mul[a][b]),
                       "a combination of j-basis elements");
      }
    }
  unit_mult.finish(report);

  RuleRecorder counit_j("counit-into-j");
  for (int x = 0; x < n; ++x)
    for (const auto& [l, c] : h.counit[x])
      if (!h.label_in_j(l))
        counit_j.fail({wlabel(x)}, h.render(h.counit[x]),
                      "a combination of j-basis elements");
  counit_j.finish(report);

  return report;
}

CheckReport check_antipode_antimul(const AlmostHopfStructure& h) {
  validate_structure(h);
  const int n = static_cast<int>(h.dim());
  CheckReport report;
  LabelFn antipode_fn = [&h](const BasisLabel& l) {
    return h.antipode[require_index(h, l)];
  };
  RuleRecorder rec("antipode-antimultiplicative");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      LinComb l = apply_linear(antipode_fn, h.mul[x][y]);
      LinComb r = h.mul_lc(h.antipode[y], h.antipode[x]);
      if (l != r)
        rec.fail({h.render(h.basis[x]), h.render(h.basis[y])}, h.render(l),
                 h.render(r));
    }
  rec.finish(report);
  return report;
}

CheckReport check_antipode_anticomul(const AlmostHopfStructure& h) {
  validate_structure(h);
  const int n = static_cast<int>(h.dim());
  CheckReport report;
  LabelFn antipode_fn = [&h](const BasisLabel& l) {
    return h.antipode[require_index(h, l)];
  };
  RuleRecorder rec("antipode-anticomultiplicative");
  for (int x = 0; x < n; ++x) {
    LinComb l = tensor_swap(h.comul_lc(h.antipode[x]));
    LinComb r = apply_to_right(antipode_fn,
                               apply_to_left(antipode_fn, h.comul[x]));
    if (l != r) rec.fail({h.render(h.basis[x])}, h.render(l), h.render(r));
  }
  rec.finish(report);
  return report;
}

CheckReport check_antipode_j_compat(const AlmostHopfStructure& h) {
  validate_structure(h);
  const int n = static_cast<int>(h.dim());
  CheckReport report;

  RuleRecorder restricts("antipode-preserves-j");
  for (int a : h.j_basis)
    for (const auto& [l, c] : h.antipode[a])
      if (!h.label_in_j(l))
        restricts.fail({h.render(h.basis[a])}, h.render(h.antipode[a]),
                       "a combination of j-basis elements");
  restricts.finish(report);

  RuleRecorder counit_side("antipode-counit-compatible");
  for (int x = 0; x < n; ++x) {
    LinComb l = h.counit_lc(h.antipode[x]);
    LinComb r = h.antipode_lc(h.counit[x]);
    if (l != r)
      counit_side.fail({h.render(h.basis[x])}, h.render(l), h.render(r));
  }
  counit_side.finish(report);

  RuleRecorder unit_side("antipode-unit-compatible");
  for (std::size_t p = 0; p < h.j_basis.size(); ++p) {
    const BasisLabel& a = h.basis[h.j_basis[p]];
    try {
      LinComb l = h.antipode_lc(h.unit[p]);
      LinComb r = h.unit_lc(h.antipode_lc(LinComb::basis(a)));
      if (l != r) unit_side.fail({h.render(a)}, h.render(l), h.render(r));
    } catch (const PreconditionError&) {
      unit_side.fail({h.render(a)}, h.render(h.antipode_lc(LinComb::basis(a))),
                     "a combination of j-basis elements");
    }
  }
  unit_side.finish(report);

  return report;
}

namespace {

nlohmann::json terms_json(const AlmostHopfStructure& h, const LinComb& v,
                          bool tensor_valued) {
  // (k[, l], coefficient) triples in ascending index order.
  std::vector<std::tuple<int, int, std::string>> rows;
  for (const auto& [l, c] : v) {
    if (tensor_valued)
      rows.emplace_back(h.index_of(l.left()), h.index_of(l.right()),
                        c.to_string());
    else
      rows.emplace_back(h.index_of(l), -1, c.to_string());
  }
  std::sort(rows.begin(), rows.end());
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [k, l, c] : rows) {
    if (tensor_valued)
      out.push_back({{"k", k}, {"l", l}, {"c", c}});
    else
      out.push_back({{"k", k}, {"c", c}});
  }
  return out;
}

}  // namespace

nlohmann::json export_structure_json(const AlmostHopfStructure& h) {
  validate_structure(h);
  const int n = static_cast<int>(h.dim());
  nlohmann::json doc;
  doc["construction"] = h.construction;

  nlohmann::json basis = nlohmann::json::array();
  for (const auto& l : h.basis) basis.push_back(h.render(l));
  doc["basis"] = basis;
  doc["jBasis"] = h.j_basis;

  nlohmann::json mul = nlohmann::json::array();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!h.mul[i][j].is_zero())
        mul.push_back(
            {{"i", i}, {"j", j}, {"terms", terms_json(h, h.mul[i][j], false)}});
  doc["mul"] = mul;

  nlohmann::json comul = nlohmann::json::array();
  for (int i = 0; i < n; ++i)
    if (!h.comul[i].is_zero())
      comul.push_back({{"i", i}, {"terms", terms_json(h, h.comul[i], true)}});
  doc["comul"] = comul;

  nlohmann::json counit = nlohmann::json::array();
  for (int i = 0; i < n; ++i)
    if (!h.counit[i].is_zero())
      counit.push_back({{"i", i}, {"terms", terms_json(h, h.counit[i], false)}});
  doc["counit"] = counit;

  nlohmann::json unit = nlohmann::json::array();
  for (std::size_t p = 0; p < h.j_basis.size(); ++p)
    if (!h.unit[p].is_zero())
      unit.push_back(
          {{"i", h.j_basis[p]}, {"terms", terms_json(h, h.unit[p], false)}});
  doc["unit"] = unit;

  nlohmann::json antipode = nlohmann::json::array();
  for (int i = 0; i < n; ++i)
    if (!h.antipode[i].is_zero())
      antipode.push_back(
          {{"i", i}, {"terms", terms_json(h, h.antipode[i], false)}});
  doc["antipode"] = antipode;

  return doc;
}

}  // namespace almosthopf
