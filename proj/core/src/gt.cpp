#include "brauerlab/gt.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace brauerlab::gt {
namespace {

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt b = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

std::int64_t row_sum(const Row& row) { return std::accumulate(row.begin(), row.end(), std::int64_t{0}); }

// Calls emit(next) for every row of length |row|-1 interlacing below `row`.
// strict: the produced row must be strictly increasing (monotone triangles,
// whose rows increase; upper neighbours are row[i] <= next[i] <= row[i+1]).
template <class Emit>
void for_each_child(const Row& row, bool increasing, bool strict, Emit&& emit) {
  const std::size_t len = row.size() - 1;
  Row next(len);
  bool stop = false;
  std::function<void(std::size_t)> fill = [&](std::size_t i) {
    if (stop) return;
    if (i == len) {
      if (!emit(next)) stop = true;
      return;
    }
    std::int64_t lo = increasing ? row[i] : row[i + 1];
    const std::int64_t hi = increasing ? row[i + 1] : row[i];
    if (strict && i > 0) lo = std::max(lo, next[i - 1] + 1);
    for (std::int64_t v = lo; v <= hi; ++v) {
      next[i] = v;
      fill(i + 1);
      if (stop) return;
    }
  };
  fill(0);
}

void require_weakly_decreasing(const Row& top) {
  if (top.empty()) throw std::invalid_argument("top row is empty");
  for (std::size_t i = 0; i + 1 < top.size(); ++i) {
    if (top[i] < top[i + 1]) throw std::invalid_argument("top row must be weakly decreasing");
  }
}

}  // namespace

bool GTPattern::is_valid() const {
  const std::size_t n = size();
  if (n == 0 || rows.size() != n) return false;
  for (std::size_t k = 0; k < n; ++k) {
    if (rows[k].size() != n - k) return false;
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = 0; i < rows[k + 1].size(); ++i) {
      if (rows[k][i] < rows[k + 1][i] || rows[k + 1][i] < rows[k][i + 1]) return false;
    }
  }
  return true;
}

void GTWeightSpec::validate() const {
  require_weakly_decreasing(top_row);
  if (content && content->size() != top_row.size()) {
    throw std::invalid_argument("content must have one entry per row");
  }
}

namespace {

// Required sum of the row below a row of length `len`, if content is prescribed.
std::optional<std::int64_t> child_sum(const GTWeightSpec& spec, const Row& row) {
  if (!spec.content) return std::nullopt;
  return row_sum(row) - (*spec.content)[row.size() - 1];
}

bool bottom_ok(const GTWeightSpec& spec, const Row& bottom) {
  return !spec.content || bottom[0] == (*spec.content)[0];
}

}  // namespace

BigInt count_patterns(const GTWeightSpec& spec) {
  spec.validate();
  std::map<Row, BigInt> memo;
  std::function<BigInt(const Row&)> count = [&](const Row& row) -> BigInt {
    if (row.size() == 1) return bottom_ok(spec, row) ? 1 : 0;
    if (auto it = memo.find(row); it != memo.end()) return it->second;
    const auto target = child_sum(spec, row);
    BigInt total = 0;
    for_each_child(row, false, false, [&](const Row& next) {
      if (!target || row_sum(next) == *target) total += count(next);
      return true;
    });
    memo.emplace(row, total);
    return total;
  };
  return count(spec.top_row);
}

void for_each_pattern(const GTWeightSpec& spec, const std::function<bool(const GTPattern&)>& visit) {
  spec.validate();
  GTPattern pattern{{spec.top_row}};
  bool stop = false;
  std::function<void()> descend = [&]() {
    const Row& row = pattern.rows.back();
    if (row.size() == 1) {
      if (bottom_ok(spec, row) && !visit(pattern)) stop = true;
      return;
    }
    const auto target = child_sum(spec, row);
    const Row parent = row;
    for_each_child(parent, false, false, [&](const Row& next) {
      if (target && row_sum(next) != *target) return true;
      pattern.rows.push_back(next);
      descend();
      pattern.rows.pop_back();
      return !stop;
    });
  };
  descend();
}

std::vector<GTPattern> list_patterns(const GTWeightSpec& spec) {
  std::vector<GTPattern> out;
  for_each_pattern(spec, [&](const GTPattern& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

BigInt gt_count_formula(unsigned n, unsigned r) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  return boost::multiprecision::pow(BigInt(r + 1), n * (n - 1) / 2);
}

Row spaced_top_row(unsigned n, unsigned r, std::int64_t shift) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  Row top(n);
  for (unsigned i = 0; i < n; ++i) top[i] = static_cast<std::int64_t>((n - 1 - i) * r) + shift;
  return top;
}

// ---- Monotone triangles -------------------------------------------------------

namespace {

Row first_row(unsigned n) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  Row top(n);
  std::iota(top.begin(), top.end(), 1);
  return top;
}

void for_each_triangle(unsigned n, const std::function<void(const GTPattern&)>& visit) {
  GTPattern t{{first_row(n)}};
  std::function<void()> descend = [&]() {
    if (t.rows.back().size() == 1) {
      visit(t);
      return;
    }
    const Row parent = t.rows.back();
    for_each_child(parent, true, true, [&](const Row& next) {
      t.rows.push_back(next);
      descend();
      t.rows.pop_back();
      return true;
    });
  };
  descend();
}

}  // namespace

std::vector<GTPattern> monotone_triangles(unsigned n) {
  std::vector<GTPattern> out;
  for_each_triangle(n, [&](const GTPattern& t) { out.push_back(t); });
  return out;
}

std::vector<BigInt> refined_monotone_counts(unsigned n) {
  const Row top = first_row(n);
  std::map<Row, std::vector<BigInt>> memo;
  // Apex distribution below a row.
  std::function<std::vector<BigInt>(const Row&)> count = [&](const Row& row) {
    std::vector<BigInt> by_apex(n, 0);
    if (row.size() == 1) {
      by_apex[row[0] - 1] = 1;
      return by_apex;
    }
    if (auto it = memo.find(row); it != memo.end()) return it->second;
    for_each_child(row, true, true, [&](const Row& next) {
      const auto sub = count(next);
      for (unsigned i = 0; i < n; ++i) by_apex[i] += sub[i];
      return true;
    });
    memo.emplace(row, by_apex);
    return by_apex;
  };
  return count(top);
}

BigInt monotone_count(unsigned n) {
  BigInt total = 0;
  for (const auto& c : refined_monotone_counts(n)) total += c;
  return total;
}

BigInt asm_count(unsigned n) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  BigInt num = 1;
  BigInt den = 1;
  for (unsigned i = 0; i < n; ++i) {
    num *= factorial(3 * i + 1);
    den *= factorial(n + i);
  }
  return num / den;
}

BigInt refined_asm_count(unsigned n, unsigned r) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  if (r < 1 || r > n) throw std::invalid_argument("r must lie in 1..n");
  const std::int64_t N = n;
  const std::int64_t R = r;
  return asm_count(n) * binomial(N + R - 2, R - 1) * binomial(2 * N - R - 1, N - R) / binomial(3 * N - 2, N - 1);
}

MonotoneCounts monotone_summary(unsigned n, bool refined) {
  MonotoneCounts c;
  c.n = n;
  const auto by_apex = refined_monotone_counts(n);
  for (const auto& x : by_apex) c.brute_total += x;
  c.formula_total = asm_count(n);
  if (refined) {
    c.refined_brute = by_apex;
    for (unsigned r = 1; r <= n; ++r) c.refined_formula.push_back(refined_asm_count(n, r));
  }
  return c;
}

unsigned standard_statistic(const GTPattern& triangle) {
  unsigned s = 0;
  for (std::size_t k = 1; k < triangle.rows.size(); ++k) {
    const Row& up = triangle.rows[k - 1];
    const Row& row = triangle.rows[k];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (up[j] < row[j] && row[j] < up[j + 1]) ++s;
    }
  }
  return s;
}

BigInt weighted_monotone_sum(unsigned n) {
  BigInt total = 0;
  for_each_triangle(n, [&](const GTPattern& t) { total += BigInt(1) << standard_statistic(t); });
  return total;
}

bool check_An2(unsigned n) { return weighted_monotone_sum(n) == (BigInt(1) << (n * (n - 1) / 2)); }

// ---- Hearts -------------------------------------------------------------------

TopRow4 heart_top_row(unsigned r, std::int64_t shift) {
  const std::int64_t R = r;
  return {3 * R + shift, 2 * R + shift, R + shift, shift};
}

bool is_valid_heart(const Heart& h, const TopRow4& top) {
  return top[1] <= h.x && h.x <= top[0] && top[2] <= h.y && h.y <= top[1] && h.y <= h.z && h.z <= h.x;
}

BigInt count_with_heart(const Heart& h, const TopRow4& top) {
  require_weakly_decreasing(Row(top.begin(), top.end()));
  if (!is_valid_heart(h, top)) throw std::invalid_argument("heart does not fit the top row");
  // lambda_(3,3) = u in [top3, top2], lambda_(2,2) = w in [u, y], lambda_(1,1) in [w, z].
  BigInt total = 0;
  for (std::int64_t u = top[3]; u <= top[2]; ++u) {
    for (std::int64_t w = u; w <= h.y; ++w) total += h.z - w + 1;
  }
  return total;
}

HeartPoset heart_poset(unsigned r, std::int64_t shift) {
  if (r == 0) throw std::invalid_argument("r must be at least 1");
  HeartPoset poset;
  poset.r = r;
  poset.top = heart_top_row(r, shift);
  const auto& top = poset.top;
  for (std::int64_t x = top[1]; x <= top[0]; ++x) {
    for (std::int64_t y = top[2]; y <= top[1]; ++y) {
      for (std::int64_t z = y; z <= x; ++z) poset.elements.push_back({x, y, z});
    }
  }
  std::sort(poset.elements.begin(), poset.elements.end());
  std::map<Heart, std::size_t> index;
  for (std::size_t i = 0; i < poset.elements.size(); ++i) index[poset.elements[i]] = i;
  for (std::size_t i = 0; i < poset.elements.size(); ++i) {
    const Heart& h = poset.elements[i];
    for (const Heart& up : {Heart{h.x + 1, h.y, h.z}, Heart{h.x, h.y + 1, h.z}, Heart{h.x, h.y, h.z + 1}}) {
      if (auto it = index.find(up); it != index.end()) poset.covers.emplace_back(i, it->second);
    }
  }
  return poset;
}

std::size_t cover_count(const HeartPoset& poset) { return poset.covers.size(); }

std::uint64_t cover_count_formula(unsigned r) {
  const std::uint64_t R = r;
  return R * (R + 1) * (3 * R + 2);
}

// ---- sl_n polytopes -------------------------------------------------------------

BigInt catalan(unsigned n) { return binomial(2 * static_cast<std::int64_t>(n), n) / (n + 1); }

FacetCounts sln_facet_formulas(unsigned n) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  FacetCounts f;
  f.order = std::uint64_t{n} * (n + 1);
  f.chain = std::uint64_t{n} * (n - 1) / 2;
  for (unsigned i = 1; i <= n; ++i) f.chain += catalan(n - i) * i;
  return f;
}

SlnPoset sln_poset(unsigned n) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  // Rows of lengths n+1 (marked), n, ..., 1.
  std::vector<std::vector<std::size_t>> id(n + 1);
  std::size_t count = 0;
  for (unsigned k = 0; k <= n; ++k) {
    for (unsigned j = 0; j < n + 1 - k; ++j) id[k].push_back(count++);
  }
  // less[a][b]: a < b, closed transitively (rows are processed bottom-up).
  std::vector<std::vector<bool>> less(count, std::vector<bool>(count, false));
  for (unsigned k = n; k >= 1; --k) {
    for (unsigned j = 0; j < n + 1 - k; ++j) {
      const std::size_t a = id[k][j];
      for (std::size_t up : {id[k - 1][j], id[k - 1][j + 1]}) {
        less[a][up] = true;
        for (std::size_t c = 0; c < count; ++c) {
          if (less[up][c]) less[a][c] = true;
        }
      }
    }
  }
  SlnPoset poset;
  poset.n = n;
  poset.element_count = count;
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (!less[a][b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < count && cover; ++c) cover = !(less[a][c] && less[c][b]);
      if (cover) poset.covers.emplace_back(a, b);
    }
  }
  return poset;
}

// ---- gt(n) --------------------------------------------------------------------

std::vector<std::uint64_t> gt_equation(unsigned n) {
  if (n < 3) throw std::invalid_argument("gt(n) is defined for n >= 3");
  if (n == 3) return {4, 12, 8};
  auto s = [](std::uint64_t m) { return m * m; };
  auto t = [](std::uint64_t m) { return m * (m + 1) / 2; };
  std::vector<std::uint64_t> k;
  for (std::int64_t i = -1; i <= static_cast<std::int64_t>(n) - 3; ++i) k.push_back(s(n + i) - t(n - 2));
  k.push_back(t(2 * n - 3) - t(n - 2));
  return k;
}

dioph::FrobeniusNumber gt_frobenius(unsigned n) {
  const auto k = gt_equation(n);
  return dioph::frobenius(k);
}

std::optional<dioph::FrobeniusNumber> reference_gt_frobenius(unsigned n) {
  static const std::map<unsigned, dioph::FrobeniusNumber> table = {
      {4, {false, 33}},  {5, {false, 56}},  {6, {false, 133}}, {7, {false, 179}}, {8, {false, 181}},
      {9, {false, 299}}, {10, {false, 394}}, {11, {false, 535}}, {12, {true, 0}},
  };
  if (auto it = table.find(n); it != table.end()) return it->second;
  return std::nullopt;
}

std::vector<GtFrobeniusRow> gt_frobenius_table(unsigned n_min, unsigned n_max) {
  std::vector<GtFrobeniusRow> rows;
  for (unsigned n = n_min; n <= n_max; ++n) {
    GtFrobeniusRow row;
    row.n = n;
    row.coefficients = gt_equation(n);
    row.computed = dioph::frobenius(row.coefficients);
    row.reference = reference_gt_frobenius(n);
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---- S_gt -----------------------------------------------------------------------

std::vector<std::uint64_t> sgt_coefficients(unsigned r) {
  if (r < 2) throw std::invalid_argument("S_gt requires r >= 2");
  auto t = [](std::uint64_t m) { return m * (m + 1) / 2; };
  const std::uint64_t R = r;
  std::vector<std::uint64_t> q;
  for (std::uint64_t k = 1; k <= R; ++k) q.push_back((2 * R + 2 - k) + R * (R + 2 - k) + t(R - 1));
  q.push_back(t(R + 1));
  for (std::uint64_t j = 2; j <= R + 1; ++j) q.push_back(t(R + 2 - j));
  return q;
}

std::uint64_t sgt_sum(std::uint64_t n1, unsigned r) {
  const auto q = sgt_coefficients(r);
  return n1 * q[0] + std::accumulate(q.begin() + 1, q.end(), std::uint64_t{0});
}

std::vector<SgtRepresentation> sgt_representability(unsigned r, unsigned n) {
  const auto k = gt_equation(n);
  const auto table = dioph::residue_table(k);
  const std::uint64_t m = table.size();
  std::vector<SgtRepresentation> out;
  for (std::uint64_t n1 = 1; n1 <= r + 1; ++n1) {
    SgtRepresentation rep{n1, sgt_sum(n1, r), false};
    const auto& least = table[rep.value % m];
    rep.representable = least && *least <= rep.value;
    out.push_back(rep);
  }
  return out;
}

BrauerConfiguration build_gt_configuration(unsigned r) {
  if (r == 0) throw std::invalid_argument("r must be at least 1");
  std::vector<Vertex> vertices;
  for (unsigned i = 1; i <= 2 * r + 1; ++i) vertices.push_back("q" + std::to_string(i));
  std::vector<std::vector<Vertex>> polygons(2 * r + 1, vertices);
  return BrauerConfiguration(vertices, polygons);
}

}  // namespace brauerlab::gt
