#include "jordanian/sector.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "jordanian/error.hpp"

namespace jordanian {
namespace {

constexpr Letter kLetters[] = {Letter::a, Letter::b, Letter::c, Letter::d};

// ---------------------------------------------------------- sparse vectors

struct Entry {
  std::size_t index;
  Polynomial value;
};

using SparseVec = std::vector<Entry>;

const Polynomial* find(const SparseVec& v, std::size_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index, [](const Entry& e, std::size_t i) { return e.index < i; });
  return it != v.end() && it->index == index ? &it->value : nullptr;
}

// x*a - y*b.
SparseVec combine(const Polynomial& x, const SparseVec& a, const Polynomial& y, const SparseVec& b) {
  const bool unit_x = x.is_one();
  SparseVec out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->index < ib->index)) {
      out.push_back({ia->index, unit_x ? ia->value : x * ia->value});
      ++ia;
    } else if (ia == a.end() || ib->index < ia->index) {
      out.push_back({ib->index, -(y * ib->value)});
      ++ib;
    } else {
      Polynomial v = (unit_x ? ia->value : x * ia->value) - y * ib->value;
      if (!v.is_zero()) out.push_back({ia->index, std::move(v)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

void scale(SparseVec& v, const Rational& c) {
  for (auto& e : v) e.value *= c;
}

void divide(SparseVec& v, const Polynomial& g) {
  for (auto& e : v) e.value = exact_quotient(e.value, g);
}

// Coordinates of a scalar vector with denominators cleared: returns the
// polynomial row and the common denominator it was multiplied by.
std::pair<SparseVec, Polynomial> clear_denominators(const std::vector<std::pair<std::size_t, Scalar>>& coords) {
  Polynomial lcm(1);
  for (const auto& [i, c] : coords) {
    if (c.is_polynomial()) continue;
    const Polynomial& d = c.denominator();
    lcm = exact_quotient(lcm * d, gcd(lcm, d));
  }
  SparseVec row;
  row.reserve(coords.size());
  for (const auto& [i, c] : coords) {
    if (lcm.is_one()) {
      row.push_back({i, c.numerator()});
    } else {
      row.push_back({i, c.numerator() * exact_quotient(lcm, c.denominator())});
    }
  }
  return {std::move(row), lcm};
}

// ------------------------------------------------------------ elimination

struct PivotKey {
  unsigned degree = 0;
  std::size_t terms = 0;
  std::size_t column = 0;
  friend auto operator<=>(const PivotKey&, const PivotKey&) = default;
};

struct WorkRow {
  SparseVec row;
  SparseVec combo;  // row = sum combo[g] * generator g (when tracking)
  std::size_t origin = 0;
  PivotKey best;
};

PivotKey best_key(const SparseVec& row) {
  PivotKey best{~0u, ~std::size_t{0}, ~std::size_t{0}};
  for (const auto& e : row) {
    PivotKey k{e.value.total_degree(), e.value.size(), e.index};
    if (k < best) best = k;
  }
  return best;
}

// Fraction-free elimination with content removal. Pivots are chosen by the
// lowest total degree, then fewest terms, then lowest column, then the
// earliest row.
class Eliminator {
 public:
  explicit Eliminator(bool track) : track_(track) {}

  void add(SparseVec row, std::size_t origin) {
    if (row.empty()) return;
    WorkRow w;
    w.row = std::move(row);
    if (track_) w.combo.push_back({origin, Polynomial(1)});
    w.origin = origin;
    normalize(w, true);
    w.best = best_key(w.row);
    active_.push_back(std::move(w));
  }

  void run() {
    while (!active_.empty()) {
      std::size_t chosen = 0;
      for (std::size_t i = 1; i < active_.size(); ++i) {
        if (active_[i].best < active_[chosen].best) chosen = i;
      }
      WorkRow pivot = std::move(active_[chosen]);
      active_.erase(active_.begin() + static_cast<std::ptrdiff_t>(chosen));
      const std::size_t col = pivot.best.column;
      const Polynomial lead = *find(pivot.row, col);

      std::vector<WorkRow> next;
      next.reserve(active_.size());
      for (auto& w : active_) {
        const Polynomial* v = find(w.row, col);
        if (v != nullptr) eliminate(w, *v, lead, pivot);
        if (w.row.empty()) continue;
        w.best = best_key(w.row);
        next.push_back(std::move(w));
      }
      active_ = std::move(next);
      columns_.push_back(col);
      pivots_.push_back(std::move(pivot));
    }
  }

  std::size_t rank() const noexcept { return pivots_.size(); }
  const std::vector<WorkRow>& pivots() const noexcept { return pivots_; }

  struct Reduced {
    SparseVec row;
    SparseVec combo;
    Scalar alpha{1};  // row = alpha * target - sum combo[g] * generator g
  };

  Reduced reduce(SparseVec target) const {
    Reduced r;
    r.row = std::move(target);
    for (std::size_t k = 0; k < pivots_.size() && !r.row.empty(); ++k) {
      const Polynomial* v = find(r.row, columns_[k]);
      if (v == nullptr) continue;
      const Polynomial value = *v;
      const Polynomial lead = *find(pivots_[k].row, columns_[k]);
      if (lead.is_constant()) {
        const Polynomial factor = value * (1 / lead.constant_term());
        r.row = combine(Polynomial(1), r.row, factor, pivots_[k].row);
        if (track_) r.combo = combine(Polynomial(1), r.combo, -factor, pivots_[k].combo);
      } else {
        r.row = combine(lead, r.row, value, pivots_[k].row);
        if (track_) r.combo = combine(lead, r.combo, -value, pivots_[k].combo);
        r.alpha *= Scalar(lead);
        const Polynomial g = content(r.row, r.combo);
        if (!g.is_one()) {
          divide(r.row, g);
          if (track_) divide(r.combo, g);
          r.alpha /= Scalar(g);
        }
      }
    }
    return r;
  }

 private:
  void eliminate(WorkRow& w, const Polynomial& value, const Polynomial& lead, const WorkRow& pivot) const {
    if (lead.is_constant()) {
      const Polynomial factor = value * (1 / lead.constant_term());
      w.row = combine(Polynomial(1), w.row, factor, pivot.row);
      if (track_) w.combo = combine(Polynomial(1), w.combo, factor, pivot.combo);
      normalize(w, false);
    } else {
      w.row = combine(lead, w.row, value, pivot.row);
      if (track_) w.combo = combine(lead, w.combo, value, pivot.combo);
      normalize(w, true);
    }
  }

  // Polynomial content shared by the row and its combination.
  Polynomial content(const SparseVec& row, const SparseVec& combo) const {
    std::vector<const Polynomial*> entries;
    for (const auto& e : row) entries.push_back(&e.value);
    if (track_) {
      for (const auto& e : combo) entries.push_back(&e.value);
    }
    for (const Polynomial* p : entries) {
      if (p->is_constant()) return Polynomial(1);
    }
    std::sort(entries.begin(), entries.end(),
              [](const Polynomial* x, const Polynomial* y) { return x->size() < y->size(); });
    Polynomial g;
    for (const Polynomial* p : entries) {
      g = gcd(g, *p);
      if (g.is_constant()) return Polynomial(1);
    }
    return g;
  }

  // Removes polynomial content after a cross-multiplying step, then scales
  // the cheapest entry's leading coefficient to one.
  void normalize(WorkRow& w, bool polynomial_step) const {
    if (w.row.empty()) return;
    if (polynomial_step) {
      const Polynomial g = content(w.row, w.combo);
      if (!g.is_one()) {
        divide(w.row, g);
        if (track_) divide(w.combo, g);
      }
    }
    const PivotKey k = best_key(w.row);
    const Rational c = find(w.row, k.column)->leading_coeff();
    if (c != 1) {
      const Rational inv = 1 / c;
      scale(w.row, inv);
      if (track_) scale(w.combo, inv);
    }
  }

  bool track_;
  std::vector<WorkRow> active_;
  std::vector<WorkRow> pivots_;
  std::vector<std::size_t> columns_;
};

// ------------------------------------------------------------ rank guard

std::vector<Symbol> symbols_of(const std::vector<SparseVec>& rows) {
  std::set<Symbol> out;
  for (const auto& r : rows) {
    for (const auto& e : r) {
      for (Symbol x : e.value.symbols()) out.insert(x);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<std::map<Symbol, Rational>> random_points(const std::vector<Symbol>& symbols, const EngineOptions& o) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<long> num(-97, 97);
  std::uniform_int_distribution<long> den(1, 31);
  std::vector<std::map<Symbol, Rational>> points;
  for (int k = 0; k < o.guard_points; ++k) {
    std::map<Symbol, Rational> point;
    for (Symbol x : symbols) {
      long n = 0;
      while (n == 0) n = num(rng);
      Rational q(n, den(rng));
      q.canonicalize();
      point.emplace(x, q);
    }
    points.push_back(std::move(point));
  }
  return points;
}

std::string format_point(const std::map<Symbol, Rational>& point) {
  std::string out;
  for (const auto& [x, q] : point) {
    if (!out.empty()) out += ", ";
    out += x.name() + "=" + q.get_str();
  }
  return out;
}

std::size_t rank_at(const std::vector<SparseVec>& rows, const std::map<Symbol, Rational>& point) {
  Eliminator e(false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SparseVec v;
    for (const auto& x : rows[i]) {
      Rational q = x.value.evaluate(point);
      if (q != 0) v.push_back({x.index, Polynomial(q)});
    }
    e.add(std::move(v), i);
  }
  e.run();
  return e.rank();
}

// Arithmetic modulo the Mersenne prime 2^61 - 1.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t inv_mod(std::uint64_t a) {
  std::uint64_t result = 1;
  std::uint64_t e = kPrime - 2;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, a);
    a = mul_mod(a, a);
    e >>= 1;
  }
  return result;
}

std::optional<std::uint64_t> to_mod(const Rational& q) {
  const std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), kPrime);
  if (den == 0) return std::nullopt;
  return mul_mod(mpz_fdiv_ui(q.get_num().get_mpz_t(), kPrime), inv_mod(den));
}

using ModRow = std::vector<std::pair<std::size_t, std::uint64_t>>;

// Rank over F_p by reduction against pivots indexed by leading column.
std::size_t rank_mod(std::vector<ModRow> rows) {
  std::map<std::size_t, ModRow> pivots;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        const std::uint64_t inv = inv_mod(row.front().second);
        for (auto& e : row) e.second = mul_mod(e.second, inv);
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      const std::uint64_t factor = row.front().second;
      const ModRow& p = it->second;
      ModRow next;
      next.reserve(row.size() + p.size());
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < row.size() || j < p.size()) {
        if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
          next.push_back(row[i++]);
        } else {
          const std::uint64_t sub = mul_mod(factor, p[j].second);
          std::uint64_t v = i < row.size() && row[i].first == p[j].first ? row[i++].second : 0;
          v = v >= sub ? v - sub : v + kPrime - sub;
          if (v != 0) next.emplace_back(p[j].first, v);
          ++j;
        }
      }
      row = std::move(next);
    }
  }
  return pivots.size();
}

// rank mod p <= rank over Q at the point <= generic rank, so agreement mod p
// settles the rational rank; otherwise the rational rank is computed exactly.
std::size_t rank_at_guarded(const std::vector<SparseVec>& rows, const std::map<Symbol, Rational>& point,
                            std::size_t expected) {
  std::vector<ModRow> mod_rows;
  mod_rows.reserve(rows.size());
  bool reducible = true;
  for (const auto& r : rows) {
    ModRow m;
    for (const auto& x : r) {
      const auto v = to_mod(x.value.evaluate(point));
      if (!v) {
        reducible = false;
        break;
      }
      if (*v != 0) m.emplace_back(x.index, *v);
    }
    if (!reducible) break;
    mod_rows.push_back(std::move(m));
  }
  if (reducible && rank_mod(std::move(mod_rows)) == expected) return expected;
  return rank_at(rows, point);
}

std::size_t symbolic_rank(const std::vector<SparseVec>& rows) {
  Eliminator e(false);
  for (std::size_t i = 0; i < rows.size(); ++i) e.add(rows[i], i);
  e.run();
  return e.rank();
}

// Each family of rows must have the same rank at every sample point as it has
// symbolically.
RankGuard guard_ranks(const std::vector<std::pair<std::string, const std::vector<SparseVec>*>>& families,
                      const std::vector<std::size_t>& ranks, const EngineOptions& o) {
  std::vector<SparseVec> all;
  for (const auto& [name, rows] : families) all.insert(all.end(), rows->begin(), rows->end());
  const auto symbols = symbols_of(all);
  RankGuard guard;
  if (symbols.empty() || o.guard_points <= 0) {
    guard.detail = "no free parameters; exact rational ranks";
    return guard;
  }
  guard.detail = std::to_string(o.guard_points) + " random points agree";
  for (const auto& point : random_points(symbols, o)) {
    for (std::size_t f = 0; f < families.size(); ++f) {
      const std::size_t r = rank_at_guarded(*families[f].second, point, ranks[f]);
      if (r != ranks[f]) {
        guard.ok = false;
        guard.detail = "rank of " + families[f].first + " is " + std::to_string(r) + " at " + format_point(point) +
                       " but " + std::to_string(ranks[f]) + " symbolically";
        return guard;
      }
    }
  }
  return guard;
}

// ------------------------------------------------------------- enumeration

// Distinct arrangements of the slot multiset, restricted to non-decreasing
// copy order for commuting copies.
std::vector<std::vector<Slot>> arrangements(const Multidegree& degree, bool commuting) {
  std::vector<std::size_t> items;
  std::vector<Slot> slots;
  for (const auto& [slot, n] : degree) {
    for (unsigned k = 0; k < n; ++k) items.push_back(slots.size());
    slots.push_back(slot);
  }
  std::vector<std::vector<Slot>> out;
  do {
    std::vector<Slot> a;
    a.reserve(items.size());
    bool ordered = true;
    for (std::size_t k = 0; k < items.size(); ++k) {
      a.push_back(slots[items[k]]);
      if (commuting && k > 0 && a[k].copy < a[k - 1].copy) ordered = false;
    }
    if (ordered) out.push_back(std::move(a));
  } while (std::next_permutation(items.begin(), items.end()));
  return out;
}

// Every word whose letters occupy the given slot arrangement.
void words_over(const std::vector<Slot>& slots, std::vector<NCWord>& out) {
  const std::size_t n = slots.size();
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= 4;
  for (std::size_t code = 0; code < total; ++code) {
    NCWord w(n);
    std::size_t c = code;
    for (std::size_t k = n; k-- > 0;) {
      w[k] = NCGenerator{kLetters[c % 4], slots[k].colour, slots[k].copy};
      c /= 4;
    }
    out.push_back(std::move(w));
  }
}

std::vector<NCWord> all_words(const Multidegree& degree, bool commuting) {
  std::vector<NCWord> out;
  for (const auto& a : arrangements(degree, commuting)) words_over(a, out);
  return out;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

std::vector<std::pair<std::size_t, Scalar>> coordinates(const NCPoly& p, const Sector& sector) {
  std::vector<std::pair<std::size_t, Scalar>> out;
  for (const auto& [w, c] : p.terms()) {
    auto i = sector.index(w);
    if (!i) throw InhomogeneousInput("element has a word outside the sector: " + format_word(w));
    out.emplace_back(*i, c);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

std::vector<SparseVec> rows_of(std::span<const NCPoly> elements, const Sector& sector) {
  std::vector<SparseVec> rows;
  for (const auto& p : elements) {
    if (p.is_zero()) continue;
    rows.push_back(clear_denominators(coordinates(p, sector)).first);
  }
  return rows;
}

NCPoly element_of(const SparseVec& row, const Sector& sector, const Scalar& divisor) {
  NCPoly out;
  for (const auto& e : row) out.add_term(sector.basis()[e.index], Scalar(e.value) / divisor);
  return out;
}

struct Generator {
  NCWord left;
  std::size_t relation;
  NCWord right;
};

NCPoly product(const NCWord& left, const NCPoly& r, const NCWord& right, bool commuting) {
  NCPoly out = NCPoly::word(left) * r * NCPoly::word(right);
  return commuting ? out.copies_normal_ordered() : out;
}

}  // namespace

// ------------------------------------------------------------------ Sector

std::size_t Sector::dimension_of(const Multidegree& degree, bool commuting) {
  std::size_t n = 0;
  for (const auto& [slot, k] : degree) n += k;
  std::size_t arrangements = 1;
  if (commuting) {
    std::map<int, std::vector<unsigned>> by_copy;
    for (const auto& [slot, k] : degree) by_copy[slot.copy].push_back(k);
    for (const auto& [copy, counts] : by_copy) {
      std::size_t m = 0;
      for (unsigned k : counts) m += k;
      std::size_t a = factorial(m);
      for (unsigned k : counts) a /= factorial(k);
      arrangements *= a;
    }
  } else {
    arrangements = factorial(n);
    for (const auto& [slot, k] : degree) arrangements /= factorial(k);
  }
  std::size_t letters = 1;
  for (std::size_t k = 0; k < n; ++k) letters *= 4;
  return arrangements * letters;
}

Sector::Sector(Multidegree degree, bool commuting_copies, std::size_t max_dim)
    : degree_(std::move(degree)), commuting_(commuting_copies) {
  for (const auto& [slot, k] : degree_) length_ += k;
  if (length_ > 12) throw SectorTooLarge(~std::size_t{0}, max_dim);
  const std::size_t dim = dimension_of(degree_, commuting_);
  if (dim > max_dim) throw SectorTooLarge(dim, max_dim);
  basis_ = all_words(degree_, commuting_);
  std::sort(basis_.begin(), basis_.end());
}

Sector Sector::of(const NCPoly& p, const EngineOptions& options) {
  auto degree = p.homogeneous_degree();
  if (!degree) throw InhomogeneousInput("sector of a zero or inhomogeneous element");
  return Sector(*degree, options.commuting_copies, options.max_sector_dim);
}

std::optional<std::size_t> Sector::index(const NCWord& w) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), w);
  if (it == basis_.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - basis_.begin());
}

bool Sector::contains(const NCPoly& p) const {
  for (const auto& [w, c] : p.terms()) {
    if (!index(w)) return false;
  }
  return true;
}

// ------------------------------------------------------------------- spans

std::string to_string(SpanRelation r) {
  switch (r) {
    case SpanRelation::equal: return "equal";
    case SpanRelation::first_in_second: return "first strictly inside second";
    case SpanRelation::second_in_first: return "second strictly inside first";
    case SpanRelation::incomparable: return "incomparable";
  }
  return "?";
}

std::size_t span_rank(std::span<const NCPoly> elements, const Sector& sector, const EngineOptions&) {
  return symbolic_rank(rows_of(elements, sector));
}

SpanComparison span_compare(std::span<const NCPoly> first, std::span<const NCPoly> second, const Sector& sector,
                            const EngineOptions& options) {
  const std::vector<SparseVec> a = rows_of(first, sector);
  const std::vector<SparseVec> b = rows_of(second, sector);
  std::vector<SparseVec> both = a;
  both.insert(both.end(), b.begin(), b.end());
  SpanComparison out;
  out.dimension = sector.dimension();
  out.rank_first = symbolic_rank(a);
  out.rank_second = symbolic_rank(b);
  out.rank_union = symbolic_rank(both);
  const bool a_in_b = out.rank_union == out.rank_second;
  const bool b_in_a = out.rank_union == out.rank_first;
  if (a_in_b && b_in_a) {
    out.relation = SpanRelation::equal;
  } else if (a_in_b) {
    out.relation = SpanRelation::first_in_second;
  } else if (b_in_a) {
    out.relation = SpanRelation::second_in_first;
  } else {
    out.relation = SpanRelation::incomparable;
  }
  out.guard = guard_ranks({{"first", &a}, {"second", &b}, {"union", &both}},
                          {out.rank_first, out.rank_second, out.rank_union}, options);
  return out;
}

SpanComparison span_compare(std::span<const NCPoly> first, std::span<const NCPoly> second,
                            const EngineOptions& options) {
  for (auto set : {first, second}) {
    for (const auto& p : set) {
      if (!p.is_zero()) return span_compare(first, second, Sector::of(p, options), options);
    }
  }
  SpanComparison out;
  out.guard.detail = "both spans are zero";
  return out;
}

// ------------------------------------------------------------ certificates

NCPoly expand(const Certificate& c, std::span<const NCPoly> relations, bool commuting_copies) {
  NCPoly out;
  for (const auto& t : c.combination) {
    if (t.relation >= relations.size()) throw Error("certificate refers to a missing relation");
    out += t.coeff * product(t.left, relations[t.relation], t.right, commuting_copies);
  }
  return out;
}

bool verify_certificate(const Certificate& c, std::span<const NCPoly> relations, bool commuting_copies) {
  const NCPoly target = commuting_copies ? c.target.copies_normal_ordered() : c.target;
  return expand(c, relations, commuting_copies) == target;
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json combination = nlohmann::json::array();
  for (const auto& t : c.combination) {
    combination.push_back({{"left", format_word(t.left)},
                           {"relation", t.relation},
                           {"right", format_word(t.right)},
                           {"coeff", format_scalar(t.coeff)}});
  }
  return {{"target", format_ncpoly(c.target)}, {"combination", combination}};
}

// -------------------------------------------------------------- membership

Membership ideal_membership(const NCPoly& p, const RelationSet& relations, std::size_t degree_bound,
                            const EngineOptions& options) {
  Membership out;
  if (p.is_zero()) {
    out.member = true;
    out.certificate = Certificate{};
    out.certificate_verified = true;
    out.guard.detail = "zero target";
    return out;
  }
  const NCPoly target = options.commuting_copies ? p.copies_normal_ordered() : p;
  const auto degree = target.homogeneous_degree();
  if (!degree) throw InhomogeneousInput("membership target is not homogeneous");
  const Sector sector(*degree, options.commuting_copies, options.max_sector_dim);
  if (degree_bound < sector.length()) throw Error("degree bound below the length of the target");
  out.dimension = sector.dimension();

  // Generators u*r*v of the sector part of the ideal.
  std::vector<Generator> generators;
  std::vector<SparseVec> rows;
  std::vector<Polynomial> row_scales;
  std::set<std::vector<std::pair<std::size_t, Scalar>>> seen;
  for (std::size_t ri = 0; ri < relations.elements.size(); ++ri) {
    const NCPoly& r = relations.elements[ri];
    if (r.is_zero()) continue;
    const auto rdeg = r.homogeneous_degree();
    if (!rdeg) throw InhomogeneousInput("relation " + relations.names.at(ri) + " is not homogeneous");
    Multidegree rest = *degree;
    bool fits = true;
    for (const auto& [slot, k] : *rdeg) {
      auto it = rest.find(slot);
      if (it == rest.end() || it->second < k) {
        fits = false;
        break;
      }
      if ((it->second -= k) == 0) rest.erase(it);
    }
    if (!fits) continue;
    std::size_t rest_length = 0;
    for (const auto& [slot, k] : rest) rest_length += k;

    // Context words u*v, split at every position.
    std::vector<NCWord> contexts;
    for (const auto& a : arrangements(rest, false)) words_over(a, contexts);
    for (const auto& context : contexts) {
      for (std::size_t split = 0; split <= rest_length; ++split) {
        NCWord left(context.begin(), context.begin() + static_cast<std::ptrdiff_t>(split));
        NCWord right(context.begin() + static_cast<std::ptrdiff_t>(split), context.end());
        const NCPoly g = product(left, r, right, options.commuting_copies);
        if (g.is_zero()) continue;
        auto coords = coordinates(g, sector);
        if (options.commuting_copies && !seen.insert(coords).second) continue;
        auto [row, scale_by] = clear_denominators(coords);
        generators.push_back({std::move(left), ri, std::move(right)});
        rows.push_back(std::move(row));
        row_scales.push_back(std::move(scale_by));
      }
    }
  }
  out.generators = generators.size();

  auto [target_row, target_scale] = clear_denominators(coordinates(target, sector));

  Eliminator basis(false);
  for (std::size_t i = 0; i < rows.size(); ++i) basis.add(rows[i], i);
  basis.run();
  out.relation_rank = basis.rank();
  const Eliminator::Reduced reduced = basis.reduce(target_row);
  out.member = reduced.row.empty();
  out.residual = element_of(reduced.row, sector, reduced.alpha * Scalar(target_scale));

  if (out.member) {
    // Second pass over an independent subset with the combinations tracked.
    Eliminator tracked(true);
    for (const auto& w : basis.pivots()) tracked.add(rows[w.origin], w.origin);
    tracked.run();
    const Eliminator::Reduced r = tracked.reduce(target_row);
    Certificate cert;
    cert.target = p;
    const Scalar divisor = r.alpha * Scalar(target_scale);
    for (const auto& e : r.combo) {
      const Generator& g = generators[e.index];
      cert.combination.push_back({g.left, g.relation, g.right, Scalar(e.value * row_scales[e.index]) / divisor});
    }
    out.certificate_verified = verify_certificate(cert, relations.elements, options.commuting_copies);
    out.certificate = std::move(cert);
  }

  const std::vector<SparseVec> with_target = [&] {
    std::vector<SparseVec> v = rows;
    v.push_back(target_row);
    return v;
  }();
  out.guard = guard_ranks({{"relations", &rows}, {"relations with target", &with_target}},
                          {out.relation_rank, out.relation_rank + (out.member ? 0 : 1)}, options);
  return out;
}

}  // namespace jordanian
