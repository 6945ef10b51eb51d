#include "resolution.hpp"

#include <algorithm>
#include <deque>

#include "actions.hpp"
#include "surface.hpp"

namespace primcomp {

NewtonPairs newton_pairs(const KeySequence& ks) {
  if (!ks.is_primitive()) {
    throw Error(ErrorCode::Precondition, "PrimitiveRequired",
                "Newton pairs require a primitive sequence");
  }
  if (!is_normal_form(ks)) {
    throw Error(ErrorCode::Precondition, "NormalFormRequired",
                "Newton pairs require a normal-form sequence");
  }
  EssentialData ed = essential_data(ks);
  NewtonPairs out;
  Rat product(1);
  for (int j = 1; j <= ed.l + 1; ++j) {
    int idx = ed.indices[static_cast<std::size_t>(j)];
    Int p = ks.alpha(idx);
    product *= Rat(p);
    Rat q_rat = (j == 1)
                    ? Rat(product * ed.chi[0])
                    : Rat(product * (ed.chi[static_cast<std::size_t>(j - 1)] -
                                     ed.chi[static_cast<std::size_t>(j - 2)]));
    internal_check(den(q_rat) == 1, "Newton pair entry not integral");
    Int q = num(q_rat);
    if (j == 1) {
      internal_check(q > 0, "first Newton pair entry must be positive");
    } else {
      internal_check(q < 0, "later Newton pair entries must be negative");
    }
    internal_check(gcd_int(p, abs_int(q)) == 1, "Newton pair not coprime");
    out.pairs.push_back({q, p});
  }
  return out;
}

DualGraphSchematic dual_graph_schematic(const NewtonPairs& pairs) {
  DualGraphSchematic out;
  const std::size_t count = pairs.pairs.size();
  internal_check(count >= 1, "need at least one Newton pair");
  for (std::size_t j = 0; j < count; ++j) {
    out.spine_deltas.push_back(abs_int(pairs.pairs[j].q));
    if (j + 1 < count) {
      out.branch_deltas.push_back(pairs.pairs[j].p);
    }
  }
  const Int& last_p = pairs.pairs.back().p;
  if (last_p > 1) out.extra_chain_delta = last_p;
  return out;
}

DualGraphSchematic dual_graph_schematic(const KeySequence& ks) {
  return dual_graph_schematic(newton_pairs(ks));
}

namespace {

void check_fraction_domain(const Int& p, const Int& q) {
  if (!(p > q && q >= 1)) {
    throw Error(ErrorCode::BadArgument, "NotOrdered",
                "need p > q >= 1, got p = " + p.str() + ", q = " + q.str());
  }
  if (gcd_int(p, q) != 1) {
    throw Error(ErrorCode::BadArgument, "NotCoprime",
                p.str() + "/" + q.str() + " is not in lowest terms");
  }
}

}  // namespace

std::vector<Int> continued_fraction(const Int& p, const Int& q) {
  check_fraction_domain(p, q);
  std::vector<Int> out;
  Int a = p, b = q;
  while (b > 0) {
    out.push_back(a / b);
    Int r = a % b;
    a = b;
    b = r;
  }
  internal_check(!out.empty() && out.front() >= 1 && out.back() >= 2,
                 "continued fraction quotients out of canonical range");
  return out;
}

std::pair<Int, Int> continued_fraction_value(
    const std::vector<Int>& quotients) {
  if (quotients.empty()) {
    throw Error(ErrorCode::BadArgument, "EmptyQuotients",
                "cannot evaluate an empty continued fraction");
  }
  Int num = quotients.back();
  Int den = 1;
  for (std::size_t idx = quotients.size() - 1; idx-- > 0;) {
    // value = quotients[idx] + 1 / (num/den) = (quotients[idx]*num + den)/num
    Int new_num = quotients[idx] * num + den;
    den = num;
    num = new_num;
  }
  internal_check(gcd_int(num, den) == 1, "continued fraction value not reduced");
  return {num, den};
}

std::vector<CurvetteRow> curvette_table(const std::vector<Int>& quotients) {
  std::vector<CurvetteRow> out;
  Int level_base = 0;  // M_j
  std::vector<Int> prefix;
  for (std::size_t j = 0; j < quotients.size(); ++j) {
    const Int& m = quotients[j];
    internal_check(m >= 1 && fits_int64(m), "quotient out of range");
    for (Int k = 1; k <= m; ++k) {
      std::vector<Int> trunc = prefix;
      trunc.push_back(k);
      auto [num, den] = continued_fraction_value(trunc);
      CurvetteRow row;
      row.j = static_cast<int>(j);
      row.k = static_cast<int>(k.convert_to<long long>());
      row.vertex = level_base + k;
      row.num = num;
      row.den = den;
      out.push_back(row);
    }
    prefix.push_back(m);
    level_base += m;
  }
  return out;
}

bool WeightedGraph::adjacent(int a, int b) const {
  for (const auto& [u, v] : edges) {
    if ((u == a && v == b) || (u == b && v == a)) return true;
  }
  return false;
}

std::vector<int> WeightedGraph::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

WeightedGraph monomial_resolution_graph(const Int& p, const Int& q) {
  check_fraction_domain(p, q);
  WeightedGraph graph;
  graph.vertices.push_back({"E_0", Int(1)});

  auto remove_edge = [&](int a, int b) {
    auto& edges = graph.edges;
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [&](const std::pair<int, int>& e) {
                                 return (e.first == a && e.second == b) ||
                                        (e.first == b && e.second == a);
                               }),
                edges.end());
  };

  int x_curve = 0;   // first curve through the current centre
  int y_curve = -1;  // second curve (absent before the first blow-up)
  Int a = p, b = q;
  while (true) {
    int created = static_cast<int>(graph.vertices.size());
    graph.vertices.push_back({"E_" + std::to_string(created), Int(-1)});
    graph.vertices[static_cast<std::size_t>(x_curve)].weight -= 1;
    if (y_curve >= 0) {
      graph.vertices[static_cast<std::size_t>(y_curve)].weight -= 1;
      remove_edge(x_curve, y_curve);
      graph.edges.emplace_back(created, y_curve);
    }
    graph.edges.emplace_back(created, x_curve);

    if (a == 1 && b == 1) break;
    if (a > b) {
      a -= b;
      y_curve = created;
    } else {
      b -= a;
      x_curve = created;
    }
  }

  // Sanity: the construction must produce a path with the predicted E_0
  // weight and one exceptional curve per Euclidean step.
  Int expected_root = 1 - ceil_rat(Rat(p, q));
  internal_check(graph.vertices[0].weight == expected_root,
                 "initial-curve weight mismatch");
  Int digit_sum = 0;
  for (const Int& m : continued_fraction(p, q)) digit_sum += m;
  internal_check(Int(graph.vertices.size()) == digit_sum + 1,
                 "vertex count mismatch");
  int endpoints = 0;
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    std::size_t degree = graph.neighbors(static_cast<int>(v)).size();
    internal_check(degree >= 1 && degree <= 2, "graph is not a path");
    if (degree == 1) ++endpoints;
  }
  internal_check(endpoints == 2, "graph is not a path");
  return graph;
}

Int delta_of_chain(const std::vector<Int>& weights) {
  Int prev2 = 0;  // d_{-1}
  Int prev = 1;   // d_0
  for (const Int& w : weights) {
    Int next = w * prev - prev2;
    prev2 = prev;
    prev = next;
  }
  return abs_int(prev);
}

Int abs_det_excluding_root(const WeightedGraph& graph) {
  const std::size_t total = graph.vertices.size();
  internal_check(total >= 2, "graph needs at least one exceptional curve");
  const std::size_t k = total - 1;  // indices 1..total-1
  std::vector<std::vector<Int>> m(k, std::vector<Int>(k, Int(0)));
  for (std::size_t i = 0; i < k; ++i) {
    m[i][i] = graph.vertices[i + 1].weight;
  }
  for (const auto& [u, v] : graph.edges) {
    if (u == 0 || v == 0) continue;
    m[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(v - 1)] = 1;
    m[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(u - 1)] = 1;
  }

  // Bareiss fraction-free elimination.
  Int sign = 1;
  Int prev_pivot = 1;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (m[i][i] == 0) {
      std::size_t swap_row = i + 1;
      while (swap_row < k && m[swap_row][i] == 0) ++swap_row;
      if (swap_row == k) return 0;
      std::swap(m[i], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t r = i + 1; r < k; ++r) {
      for (std::size_t c = i + 1; c < k; ++c) {
        Int value = m[r][c] * m[i][i] - m[r][i] * m[i][c];
        internal_check(value % prev_pivot == 0, "Bareiss division not exact");
        m[r][c] = value / prev_pivot;
      }
      m[r][i] = 0;
    }
    prev_pivot = m[i][i];
  }
  return abs_int(m[k - 1][k - 1]);
}

namespace {

// Path from E_0 to `target` in a path graph, as vertex indices.
std::vector<int> path_from_root(const WeightedGraph& graph, int target) {
  std::vector<int> parent(graph.vertices.size(), -2);
  std::deque<int> queue;
  queue.push_back(0);
  parent[0] = -1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : graph.neighbors(v)) {
      if (parent[static_cast<std::size_t>(w)] == -2) {
        parent[static_cast<std::size_t>(w)] = v;
        queue.push_back(w);
      }
    }
  }
  internal_check(parent[static_cast<std::size_t>(target)] != -2,
                 "target not reachable from the root");
  std::vector<int> path;
  for (int v = target; v != -1; v = parent[static_cast<std::size_t>(v)]) {
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// The "already-contracted" weight pattern: E_0 has weight -1 and every other
// vertex on the path E_0 .. target (including the target) has weight -2.
bool irrelevant_path_pattern(const WeightedGraph& graph, int target) {
  std::vector<int> path = path_from_root(graph, target);
  if (graph.vertices[0].weight != -1) return false;
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (graph.vertices[static_cast<std::size_t>(path[i])].weight != -2) {
      return false;
    }
  }
  return true;
}

}  // namespace

FractionalClaimReport fractional_claim_check(const Int& p, const Int& q) {
  std::vector<Int> cf = continued_fraction(p, q);
  std::vector<CurvetteRow> rows = curvette_table(cf);
  WeightedGraph graph = monomial_resolution_graph(p, q);

  FractionalClaimReport report;
  report.ok = true;
  const Rat base_ratio = Rat(p - q, p);
  const Int base_floor = floor_rat(Rat(p, p - q));

  for (const CurvetteRow& row : rows) {
    FractionalRowCheck check;
    check.row = row;
    check.is_self = (row.num == p && row.den == q);
    const Rat row_ratio = Rat(row.num - row.den, row.num);
    bool passed = true;
    if (row.j % 2 == 0) {
      if (!check.is_self && !(row_ratio < base_ratio)) passed = false;
      if (!(row_ratio >= 0 && row_ratio < 1 && base_ratio >= 0 &&
            base_ratio < 1)) {
        passed = false;
      }
    } else {
      if (!check.is_self && !(row_ratio > base_ratio)) passed = false;
      internal_check(row.num > row.den, "odd-level row not above the base");
      Int row_floor = floor_rat(Rat(row.num, row.num - row.den));
      bool pattern = irrelevant_path_pattern(
          graph, static_cast<int>(row.vertex.convert_to<long long>()));
      check.skipped_by_pattern = pattern;
      if (!pattern && !(row_floor >= base_floor)) passed = false;
    }
    check.passed = passed;
    if (!passed) report.ok = false;
    report.rows.push_back(check);
  }
  return report;
}

namespace {

struct ResolutionContext {
  NewtonPairs pairs;
  EssentialData essential;
  Int p1, q1;
  std::vector<Int> p_products;  // p_products[i] = p_1 * ... * p_i
};

ResolutionContext make_context(const KeySequence& ks) {
  if (!g2a_exists(ks)) {
    throw Error(ErrorCode::Precondition, "NoAdditiveAction",
                "pole bounds require a sequence admitting the additive action");
  }
  ResolutionContext ctx{newton_pairs(ks), essential_data(ks), Int(0), Int(0), {}};
  ctx.p1 = ctx.pairs.pairs[0].p;
  ctx.q1 = ctx.pairs.pairs[0].q;
  Int product = 1;
  for (const NewtonPair& pair : ctx.pairs.pairs) {
    product *= pair.p;
    ctx.p_products.push_back(product);
  }
  return ctx;
}

Int bound_from_beta(const ResolutionContext& ctx, const Rat& beta) {
  return floor_rat(Rat(ctx.p1, ctx.q1) * (beta + 1) - 1);
}

[[noreturn]] void invalid_locator(const std::string& why) {
  throw Error(ErrorCode::BadArgument, "InvalidLocator", why);
}

// Value computations shared by m_e_value (after it validates the locator)
// and derivable_m_e_values (whose locators are valid by construction).
Int corner_value(const ResolutionContext& ctx, int i) {
  return bound_from_beta(ctx,
                         ctx.essential.chi[static_cast<std::size_t>(i - 1)]);
}

Int convergent_value_first(const Int& ptilde, const Int& qtilde) {
  return floor_rat(Rat(ptilde, ptilde - qtilde));
}

Int convergent_value_deep(const ResolutionContext& ctx, int i,
                          const Int& ptilde, const Int& qtilde) {
  const Rat& chi_prev = ctx.essential.chi[static_cast<std::size_t>(i - 2)];
  const Int& product = ctx.p_products[static_cast<std::size_t>(i - 2)];
  return bound_from_beta(ctx, chi_prev - Rat(qtilde, product * ptilde));
}

}  // namespace

Int m_e_value(const KeySequence& ks, const MELocator& locator) {
  ResolutionContext ctx = make_context(ks);
  const int l = ctx.essential.l;
  switch (locator.kind) {
    case MELocator::Kind::Corner: {
      if (locator.i < 1 || locator.i > l) {
        invalid_locator("corner index out of range");
      }
      return corner_value(ctx, locator.i);
    }
    case MELocator::Kind::Interior: {
      int found = 0;
      for (int i = 2; i <= l + 1; ++i) {
        const Rat& hi = ctx.essential.chi[static_cast<std::size_t>(i - 2)];
        const Rat& lo = ctx.essential.chi[static_cast<std::size_t>(i - 1)];
        if (lo < locator.beta && locator.beta < hi) {
          found = i;
          break;
        }
      }
      if (found == 0) {
        invalid_locator("no essential interval contains this exponent");
      }
      const Int& product = ctx.p_products[static_cast<std::size_t>(found - 2)];
      if (product % den(locator.beta) != 0) {
        invalid_locator("exponent denominator incompatible with this interval");
      }
      return bound_from_beta(ctx, locator.beta);
    }
    case MELocator::Kind::Convergent: {
      if (locator.i < 1 || locator.i > l) {
        invalid_locator("convergent index out of range");
      }
      Int base_p, base_q;
      if (locator.i == 1) {
        base_p = ctx.p1;
        base_q = ctx.p1 - ctx.q1;
      } else {
        base_p = ctx.pairs.pairs[static_cast<std::size_t>(locator.i - 1)].p;
        base_q = abs_int(
            ctx.pairs.pairs[static_cast<std::size_t>(locator.i - 1)].q);
      }
      if (!(base_p > base_q && base_q >= 1)) {
        invalid_locator("this junction has no derivable convergent chain");
      }
      bool in_table = false;
      for (const CurvetteRow& row :
           curvette_table(continued_fraction(base_p, base_q))) {
        if (row.num == locator.ptilde && row.den == locator.qtilde) {
          in_table = true;
          break;
        }
      }
      if (!in_table) {
        invalid_locator("fraction is not a curvette row of the base pair");
      }
      if (locator.i == 1) {
        if (locator.ptilde == locator.qtilde) {
          invalid_locator("degenerate first-junction row");
        }
        return convergent_value_first(locator.ptilde, locator.qtilde);
      }
      return convergent_value_deep(ctx, locator.i, locator.ptilde,
                                   locator.qtilde);
    }
  }
  throw_internal("unhandled locator kind");
}

std::vector<std::pair<MELocator, Int>> derivable_m_e_values(
    const KeySequence& ks) {
  ResolutionContext ctx = make_context(ks);
  const int l = ctx.essential.l;
  std::vector<std::pair<MELocator, Int>> out;

  for (int i = 1; i <= l; ++i) {
    MELocator loc;
    loc.kind = MELocator::Kind::Corner;
    loc.i = i;
    out.emplace_back(loc, corner_value(ctx, i));
  }

  for (int i = 2; i <= l + 1; ++i) {
    const Rat& hi = ctx.essential.chi[static_cast<std::size_t>(i - 2)];
    const Rat& lo = ctx.essential.chi[static_cast<std::size_t>(i - 1)];
    const Int& product = ctx.p_products[static_cast<std::size_t>(i - 2)];
    for (Int a = floor_rat(lo * Rat(product)) + 1;
         Rat(a, product) < hi; ++a) {
      Rat beta(a, product);
      if (!(lo < beta)) continue;
      MELocator loc;
      loc.kind = MELocator::Kind::Interior;
      loc.i = i;
      loc.beta = beta;
      out.emplace_back(loc, bound_from_beta(ctx, beta));
    }
  }

  for (int i = 1; i <= l; ++i) {
    Int base_p, base_q;
    if (i == 1) {
      base_p = ctx.p1;
      base_q = ctx.p1 - ctx.q1;
    } else {
      base_p = ctx.pairs.pairs[static_cast<std::size_t>(i - 1)].p;
      base_q = abs_int(ctx.pairs.pairs[static_cast<std::size_t>(i - 1)].q);
    }
    if (!(base_p > base_q && base_q >= 1)) continue;
    WeightedGraph graph = monomial_resolution_graph(base_p, base_q);
    for (const CurvetteRow& row :
         curvette_table(continued_fraction(base_p, base_q))) {
      if (i == 1 && row.num == row.den) continue;
      if (row.j % 2 == 1 &&
          irrelevant_path_pattern(
              graph, static_cast<int>(row.vertex.convert_to<long long>()))) {
        continue;
      }
      MELocator loc;
      loc.kind = MELocator::Kind::Convergent;
      loc.i = i;
      loc.ptilde = row.num;
      loc.qtilde = row.den;
      out.emplace_back(loc, i == 1 ? convergent_value_first(row.num, row.den)
                                   : convergent_value_deep(ctx, i, row.num,
                                                           row.den));
    }
  }
  return out;
}

}  // namespace primcomp
